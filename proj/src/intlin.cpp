// Dense exact integer linear algebra. Everything here runs on matrices with
// at most a few dozen rows, so the algorithms are the classical ones with
// full transforms carried along.
#include "normeq/intlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace normeq {

namespace {

size_t ncols(const IMat& a) { return a.empty() ? 0 : a[0].size(); }

void check_rect(const IMat& a) {
    for (const auto& row : a)
        if (row.size() != ncols(a)) throw std::invalid_argument("ragged matrix");
}

// row[i] += c * row[j]
void row_addmul(IMat& m, size_t i, size_t j, const BigInt& c) {
    if (c.is_zero()) return;
    for (size_t k = 0; k < m[i].size(); ++k) m[i][k] += c * m[j][k];
}

void col_addmul(IMat& m, size_t i, size_t j, const BigInt& c) {
    if (c.is_zero()) return;
    for (auto& row : m) row[i] += c * row[j];
}

void row_neg(IMat& m, size_t i) {
    for (auto& e : m[i]) e = -e;
}

BigRat dot_ri(const std::vector<BigRat>& a, const IVec& b) {
    BigRat s;
    for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * BigRat(b[i]);
    return s;
}

BigRat dot_rr(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
    BigRat s;
    for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

// Gram-Schmidt data for LLL / Babai: bstar rows plus norms |b*_i|^2.
struct Gso {
    std::vector<std::vector<BigRat>> bstar;
    std::vector<BigRat> norm2;
    std::vector<std::vector<BigRat>> mu;  // mu[i][j], j < i
};

Gso gso_compute(const IMat& b) {
    size_t n = b.size(), m = ncols(b);
    Gso g;
    g.bstar.assign(n, std::vector<BigRat>(m));
    g.norm2.assign(n, BigRat());
    g.mu.assign(n, {});
    for (size_t i = 0; i < n; ++i) {
        std::vector<BigRat> v(m);
        for (size_t k = 0; k < m; ++k) v[k] = BigRat(b[i][k]);
        g.mu[i].assign(i, BigRat());
        for (size_t j = 0; j < i; ++j) {
            if (g.norm2[j].is_zero()) continue;
            BigRat mu = dot_ri(g.bstar[j], b[i]) / g.norm2[j];
            g.mu[i][j] = mu;
            for (size_t k = 0; k < m; ++k) v[k] = v[k] - mu * g.bstar[j][k];
        }
        g.bstar[i] = v;
        g.norm2[i] = dot_rr(v, v);
    }
    return g;
}

}  // namespace

IMat imat_identity(size_t n) {
    IMat e(n, IVec(n, BigInt(0)));
    for (size_t i = 0; i < n; ++i) e[i][i] = BigInt(1);
    return e;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    check_rect(a);
    check_rect(b);
    if (ncols(a) != b.size()) throw std::invalid_argument("imat_mul shape");
    IMat c(a.size(), IVec(ncols(b), BigInt(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < ncols(b); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IVec imat_vec_mul(const IVec& v, const IMat& a) {
    if (v.size() != a.size()) throw std::invalid_argument("imat_vec_mul shape");
    IVec r(ncols(a), BigInt(0));
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        for (size_t j = 0; j < r.size(); ++j) r[j] += v[k] * a[k][j];
    }
    return r;
}

IMat imat_transpose(const IMat& a) {
    check_rect(a);
    IMat t(ncols(a), IVec(a.size(), BigInt(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < ncols(a); ++j) t[j][i] = a[i][j];
    return t;
}

HnfResult hnf_rows(const IMat& a) {
    check_rect(a);
    size_t m = a.size(), n = ncols(a);
    HnfResult res;
    res.h = a;
    res.u = imat_identity(m);
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        // Euclidean elimination below row r in column c
        while (true) {
            size_t piv = m;
            for (size_t i = r; i < m; ++i)
                if (!res.h[i][c].is_zero() &&
                    (piv == m || res.h[i][c].abs() < res.h[piv][c].abs()))
                    piv = i;
            if (piv == m) break;  // column is zero below r
            std::swap(res.h[piv], res.h[r]);
            std::swap(res.u[piv], res.u[r]);
            bool cleared = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (res.h[i][c].is_zero()) continue;
                BigInt q, rem;
                BigInt::fdivmod(res.h[i][c], res.h[r][c], q, rem);
                row_addmul(res.h, i, r, -q);
                row_addmul(res.u, i, r, -q);
                if (!res.h[i][c].is_zero()) cleared = false;
            }
            if (cleared) break;
        }
        if (res.h[r][c].is_zero()) continue;
        if (res.h[r][c].is_neg()) {
            row_neg(res.h, r);
            row_neg(res.u, r);
        }
        // reduce the entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            BigInt q, rem;
            BigInt::fdivmod(res.h[i][c], res.h[r][c], q, rem);
            row_addmul(res.h, i, r, -q);
            row_addmul(res.u, i, r, -q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

IMat left_kernel(const IMat& a) {
    HnfResult h = hnf_rows(a);
    IMat ker;
    for (size_t i = h.rank; i < h.u.size(); ++i) ker.push_back(h.u[i]);
    return ker;
}

std::vector<BigInt> SnfResult::invariants() const {
    std::vector<BigInt> inv;
    for (size_t i = 0; i < rank; ++i) inv.push_back(d[i][i]);
    return inv;
}

SnfResult smith_normal_form(const IMat& a) {
    check_rect(a);
    size_t m = a.size(), n = ncols(a);
    SnfResult res;
    res.d = a;
    res.u = imat_identity(m);
    res.v = imat_identity(n);
    IMat& d = res.d;

    size_t t = 0;
    while (t < m && t < n) {
        // find a nonzero pivot in the remaining block
        size_t pi = m, pj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (!d[i][j].is_zero() &&
                    (pi == m || d[i][j].abs() < d[pi][pj].abs())) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        std::swap(d[pi], d[t]);
        std::swap(res.u[pi], res.u[t]);
        for (auto& row : d) std::swap(row[pj], row[t]);
        for (auto& row : res.v) std::swap(row[pj], row[t]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t
            for (size_t i = t + 1; i < m; ++i) {
                if (d[i][t].is_zero()) continue;
                BigInt q, rem;
                BigInt::fdivmod(d[i][t], d[t][t], q, rem);
                row_addmul(d, i, t, -q);
                row_addmul(res.u, i, t, -q);
                if (!d[i][t].is_zero()) {
                    std::swap(d[i], d[t]);
                    std::swap(res.u[i], res.u[t]);
                    dirty = true;
                }
            }
            // clear row t
            for (size_t j = t + 1; j < n; ++j) {
                if (d[t][j].is_zero()) continue;
                BigInt q, rem;
                BigInt::fdivmod(d[t][j], d[t][t], q, rem);
                col_addmul(d, j, t, -q);
                col_addmul(res.v, j, t, -q);
                if (!d[t][j].is_zero()) {
                    for (auto& row : d) std::swap(row[j], row[t]);
                    for (auto& row : res.v) std::swap(row[j], row[t]);
                    dirty = true;
                }
            }
        }
        // enforce divisibility d[t][t] | d[i][j] on the rest of the block
        bool redo = false;
        for (size_t i = t + 1; i < m && !redo; ++i)
            for (size_t j = t + 1; j < n && !redo; ++j)
                if (!(d[i][j] % d[t][t]).is_zero()) {
                    row_addmul(d, t, i, BigInt(1));
                    row_addmul(res.u, t, i, BigInt(1));
                    redo = true;
                }
        if (redo) continue;  // re-run elimination at the same t
        if (d[t][t].is_neg()) {
            row_neg(d, t);
            row_neg(res.u, t);
        }
        ++t;
    }
    res.rank = t;
    return res;
}

IntSolveResult solve_integer_system(const IMat& a, const IVec& b) {
    check_rect(a);
    size_t m = a.size(), n = ncols(a);
    if (b.size() != m) throw std::invalid_argument("solve shape");
    SnfResult s = smith_normal_form(a);
    // A = U^-1 D V^-1, so A x = b  <=>  D y = U b with x = V y
    IVec ub(m, BigInt(0));
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < m; ++k) ub[i] += s.u[i][k] * b[k];
    IntSolveResult res;
    IVec y(n, BigInt(0));
    for (size_t i = 0; i < m; ++i) {
        if (i < s.rank) {
            BigInt q, rem;
            BigInt::fdivmod(ub[i], s.d[i][i], q, rem);
            if (!rem.is_zero()) return res;  // not solvable over Z
            if (i < n) y[i] = q;
        } else if (!ub[i].is_zero()) {
            return res;
        }
    }
    res.solvable = true;
    res.particular.assign(n, BigInt(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) res.particular[i] += s.v[i][k] * y[k];
    // kernel: columns of V past the rank, returned as rows
    for (size_t k = s.rank; k < n; ++k) {
        IVec kr(n);
        for (size_t i = 0; i < n; ++i) kr[i] = s.v[i][k];
        res.kernel.push_back(kr);
    }
    if (!res.kernel.empty()) {
        res.kernel = lll_reduce(res.kernel);
        // size-reduce the particular solution against the kernel lattice
        IVec shift = cvp_babai(res.kernel, res.particular);
        for (size_t i = 0; i < n; ++i) res.particular[i] -= shift[i];
    }
    return res;
}

IMat lll_reduce(IMat basis) {
    check_rect(basis);
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const IVec& r) {
                                   for (const auto& e : r)
                                       if (!e.is_zero()) return false;
                                   return true;
                               }),
                basis.end());
    if (basis.size() <= 1) return basis;
    const BigRat delta(3, 4);
    Gso g = gso_compute(basis);
    size_t k = 1;
    while (k < basis.size()) {
        // size-reduce row k against rows k-1 .. 0
        for (size_t j = k; j-- > 0;) {
            BigInt c = g.mu[k][j].round_half_up();
            if (c.is_zero()) continue;
            for (size_t t = 0; t < basis[k].size(); ++t)
                basis[k][t] -= c * basis[j][t];
            g = gso_compute(basis);
        }
        // Lovasz condition between rows k-1 and k
        BigRat lhs = g.norm2[k];
        BigRat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm2[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            g = gso_compute(basis);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return basis;
}

IVec cvp_babai(const IMat& lll_basis, const IVec& target) {
    if (lll_basis.empty()) return IVec(target.size(), BigInt(0));
    check_rect(lll_basis);
    size_t n = lll_basis.size(), m = ncols(lll_basis);
    if (target.size() != m) throw std::invalid_argument("cvp shape");
    Gso g = gso_compute(lll_basis);
    std::vector<BigRat> w(m);
    for (size_t i = 0; i < m; ++i) w[i] = BigRat(target[i]);
    IVec out(m, BigInt(0));
    for (size_t i = n; i-- > 0;) {
        if (g.norm2[i].is_zero()) continue;
        BigRat mu = dot_rr(w, g.bstar[i]) / g.norm2[i];
        BigInt c = mu.round_half_up();
        if (c.is_zero()) continue;
        for (size_t t = 0; t < m; ++t) {
            w[t] = w[t] - BigRat(c * lll_basis[i][t]);
            out[t] += c * lll_basis[i][t];
        }
    }
    return out;
}

BigInt gram_det(const IMat& basis) {
    check_rect(basis);
    size_t n = basis.size();
    if (n == 0) return BigInt(1);
    IMat g(n, IVec(n, BigInt(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BigInt s(0);
            for (size_t k = 0; k < ncols(basis); ++k) s += basis[i][k] * basis[j][k];
            g[i][j] = s;
        }
    // Bareiss fraction-free elimination
    BigInt prev(1);
    int sign = 1;
    for (size_t t = 0; t < n; ++t) {
        if (g[t][t].is_zero()) {
            size_t p = t + 1;
            while (p < n && g[p][t].is_zero()) ++p;
            if (p == n) return BigInt(0);
            std::swap(g[p], g[t]);
            sign = -sign;
        }
        for (size_t i = t + 1; i < n; ++i)
            for (size_t j = t + 1; j < n; ++j) {
                BigInt v = g[i][j] * g[t][t] - g[i][t] * g[t][j];
                BigInt q, rem;
                BigInt::divmod(v, prev, q, rem);
                g[i][j] = q;  // Bareiss guarantees exact division
            }
        prev = g[t][t];
    }
    BigInt det = g[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

BigInt imat_max_abs(const IMat& a) {
    BigInt m(0);
    for (const auto& row : a)
        for (const auto& e : row)
            if (m < e.abs()) m = e.abs();
    return m;
}

}  // namespace normeq
