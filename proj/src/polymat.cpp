// Column Hermite reduction over k[x]. Degrees and dimensions are small
// (module bases of function-field orders), so plain Euclidean column
// elimination with a carried transform is plenty.
#include "normeq/polymat.hpp"

#include <stdexcept>

namespace normeq {

namespace {

size_t ncols(const PMat& a) { return a.empty() ? 0 : a[0].size(); }

uint32_t pmat_q(const PMat& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (e.q) return e.q;
    throw std::invalid_argument("polymat: cannot infer field");
}

void check_rect(const PMat& a) {
    for (const auto& row : a)
        if (row.size() != ncols(a)) throw std::invalid_argument("ragged polymat");
}

// col[j] += c * col[k]
void col_addmul(PMat& m, size_t j, size_t k, const Poly& c) {
    if (c.is_zero()) return;
    for (auto& row : m) row[j] = row[j] + c * row[k];
}

void col_swap(PMat& m, size_t j, size_t k) {
    for (auto& row : m) std::swap(row[j], row[k]);
}

void col_scale(PMat& m, size_t j, uint32_t c) {
    for (auto& row : m) row[j] = row[j].scale(c);
}

Poly pquo(const Poly& a, const Poly& b) {
    Poly quo, rem;
    Poly::divmod(a, b, quo, rem);
    return quo;
}

}  // namespace

PMat pmat_identity(size_t n, uint32_t q) {
    PMat e(n, std::vector<Poly>(n, Poly(q)));
    for (size_t i = 0; i < n; ++i) e[i][i] = Poly::constant(q, 1);
    return e;
}

PMat pmat_mul(const PMat& a, const PMat& b) {
    check_rect(a);
    check_rect(b);
    if (ncols(a) != b.size()) throw std::invalid_argument("pmat_mul shape");
    uint32_t q = pmat_q(a);
    PMat c(a.size(), std::vector<Poly>(ncols(b), Poly(q)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < ncols(b); ++j)
                c[i][j] = c[i][j] + a[i][k] * b[k][j];
        }
    return c;
}

std::vector<Poly> pmat_vec_mul(const PMat& a, const std::vector<Poly>& v) {
    check_rect(a);
    if (ncols(a) != v.size()) throw std::invalid_argument("pmat_vec_mul shape");
    uint32_t q = pmat_q(a);
    std::vector<Poly> r(a.size(), Poly(q));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < v.size(); ++k) r[i] = r[i] + a[i][k] * v[k];
    return r;
}

PHnfResult pmat_hnf_cols(const PMat& a, bool want_transform) {
    check_rect(a);
    size_t n = a.size(), m = ncols(a);
    uint32_t q = pmat_q(a);
    PHnfResult res;
    res.h = a;
    res.u = want_transform ? pmat_identity(m, q) : PMat{};
    PMat& h = res.h;
    auto apply = [&](auto&& op) {
        op(h);
        if (want_transform) op(res.u);
    };

    // next free pivot slot, filled right to left while scanning rows
    // bottom to top; columns 0..c-1 stay zero on all processed rows
    size_t c = m;
    std::vector<size_t> pivots_rev;
    for (size_t ii = n; ii-- > 0 && c > 0;) {
        size_t i = ii;
        // Euclidean elimination on row i across columns 0..c-1
        while (true) {
            size_t piv = c;
            for (size_t j = 0; j < c; ++j)
                if (!h[i][j].is_zero() &&
                    (piv == c || h[i][j].deg() < h[i][piv].deg()))
                    piv = j;
            if (piv == c) break;  // row already clear
            bool others = false;
            for (size_t j = 0; j < c; ++j) {
                if (j == piv || h[i][j].is_zero()) continue;
                Poly quo = pquo(h[i][j], h[i][piv]);
                apply([&](PMat& mm) { col_addmul(mm, j, piv, -quo); });
                if (!h[i][j].is_zero()) others = true;
            }
            if (!others) {
                --c;
                if (piv != c) apply([&](PMat& mm) { col_swap(mm, piv, c); });
                uint32_t lc = h[i][c].lead();
                if (lc != 1) apply([&](PMat& mm) { col_scale(mm, c, fq_inv(lc, q)); });
                // reduce this row in the pivot columns to the right
                for (size_t j = c + 1; j < m; ++j) {
                    if (h[i][j].is_zero() || h[i][j].deg() < h[i][c].deg()) continue;
                    Poly quo = pquo(h[i][j], h[i][c]);
                    apply([&](PMat& mm) { col_addmul(mm, j, c, -quo); });
                }
                pivots_rev.push_back(i);
                break;
            }
        }
    }
    res.rank = pivots_rev.size();
    res.pivot_rows.assign(pivots_rev.rbegin(), pivots_rev.rend());
    return res;
}

PMat pmat_hnf_basis(const PMat& a) {
    PHnfResult r = pmat_hnf_cols(a, /*want_transform=*/false);
    size_t n = a.size(), m = ncols(a);
    PMat out(n, std::vector<Poly>(r.rank, Poly(pmat_q(a))));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < r.rank; ++j) out[i][j] = r.h[i][m - r.rank + j];
    return out;
}

PMat pmat_right_kernel(const PMat& a) {
    PHnfResult r = pmat_hnf_cols(a);
    size_t m = ncols(a);
    size_t nk = m - r.rank;
    uint32_t q = pmat_q(a);
    PMat ker(m, std::vector<Poly>(nk, Poly(q)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < nk; ++j) ker[i][j] = r.u[i][j];
    return ker;
}

PMat pmat_preimage(const PMat& a, const PMat& b) {
    check_rect(a);
    check_rect(b);
    if (a.size() != b.size()) throw std::invalid_argument("pmat_preimage shape");
    size_t n = a.size(), ma = ncols(a), mb = ncols(b);
    uint32_t q = pmat_q(a);
    // right kernel of [A | B]; the A-part of each kernel vector satisfies
    // A x = -B y, i.e. A x lies in the span of B
    PMat g(n, std::vector<Poly>(ma + mb, Poly(q)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < ma; ++j) g[i][j] = a[i][j];
        for (size_t j = 0; j < mb; ++j) g[i][ma + j] = b[i][j];
    }
    PMat ker = pmat_right_kernel(g);
    size_t nk = ker.empty() ? 0 : ker[0].size();
    PMat proj(ma, std::vector<Poly>(nk, Poly(q)));
    for (size_t i = 0; i < ma; ++i)
        for (size_t j = 0; j < nk; ++j) proj[i][j] = ker[i][j];
    return pmat_hnf_basis(proj);
}

Poly pmat_det(const PMat& a) {
    check_rect(a);
    size_t n = a.size();
    if (n == 0 || ncols(a) != n) throw std::invalid_argument("pmat_det shape");
    uint32_t q = pmat_q(a);
    PMat g = a;
    Poly prev = Poly::constant(q, 1);
    int sign = 1;
    for (size_t t = 0; t + 1 < n; ++t) {
        if (g[t][t].is_zero()) {
            size_t p = t + 1;
            while (p < n && g[p][t].is_zero()) ++p;
            if (p == n) return Poly(q);
            std::swap(g[p], g[t]);
            sign = -sign;
        }
        for (size_t i = t + 1; i < n; ++i)
            for (size_t j = t + 1; j < n; ++j)
                g[i][j] = Poly::divexact(g[i][j] * g[t][t] - g[i][t] * g[t][j], prev);
        prev = g[t][t];
    }
    Poly det = g[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::optional<std::vector<Poly>> pmat_solve_upper(const PMat& h, std::vector<Poly> v) {
    size_t n = h.size();
    if (n == 0 || ncols(h) != n || v.size() != n)
        throw std::invalid_argument("pmat_solve_upper shape");
    uint32_t q = pmat_q(h);
    std::vector<Poly> c(n, Poly(q));
    for (size_t ii = n; ii-- > 0;) {
        if (v[ii].is_zero()) continue;
        Poly quo, rem;
        Poly::divmod(v[ii], h[ii][ii], quo, rem);
        if (!rem.is_zero()) return std::nullopt;
        c[ii] = quo;
        for (size_t i = 0; i <= ii; ++i) v[i] = v[i] - quo * h[i][ii];
    }
    return c;
}

bool pmat_eq(const PMat& a, const PMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

}  // namespace normeq
