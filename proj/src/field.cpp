// Construction and element arithmetic of global function fields. The
// p-local machinery (maximal order, places, valuations, digits) lives in
// places.cpp; reduction at infinity lives in reduction.cpp.
#include "normeq/field.hpp"

#include <algorithm>

namespace normeq {

namespace {

// long division of monic t-polynomials with k[x] coefficients
bool tpoly_divides(const std::vector<Poly>& f, const std::vector<Poly>& g, uint32_t q) {
    int n = static_cast<int>(f.size()) - 1, d = static_cast<int>(g.size()) - 1;
    std::vector<Poly> r = f;
    for (int i = n; i >= d; --i) {
        Poly c = r[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        for (int j = 0; j <= d; ++j)
            r[static_cast<size_t>(i - d + j)] = r[static_cast<size_t>(i - d + j)] - c * g[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = Poly(q);
    }
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    return true;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    return Poly::divexact(a * b, Poly::gcd(a, b)).monic();
}

}  // namespace

std::shared_ptr<const FunctionField> FunctionField::build(uint32_t q, std::vector<Poly> f,
                                                          bool with_infinity) {
    BuildOptions opt;
    opt.with_infinity = with_infinity;
    return build_impl(q, std::move(f), opt);
}

std::shared_ptr<const FunctionField> FunctionField::build_impl(uint32_t q, std::vector<Poly> f,
                                                               const BuildOptions& opt) {
    std::shared_ptr<FunctionField> F(new FunctionField());
    F->q_ = q;
    F->f_ = std::move(f);
    F->validate_and_init(opt);
    return F;
}

void FunctionField::validate_and_init(const BuildOptions& opt) {
    if (!is_prime_u32(q_)) throw FieldError("q must be a prime");
    while (!f_.empty() && f_.back().is_zero()) f_.pop_back();
    n_ = static_cast<int>(f_.size()) - 1;
    if (n_ < 2) throw FieldError("deg_t f must be at least 2");
    for (auto& c : f_) {
        if (c.is_zero()) c = Poly(q_);
        if (c.q == 0) c.q = q_;
        if (c.q != q_) throw FieldError("coefficient field mismatch in f");
    }
    if (!f_.back().is_one()) throw FieldError("f must be monic in t");
    if (static_cast<uint32_t>(n_) % q_ == 0)
        throw FieldError("wild ramification: deg_t f is divisible by q");

    cf_ = 0;
    for (int j = 0; j < n_; ++j) {
        const Poly& aj = f_[static_cast<size_t>(j)];
        if (aj.is_zero()) continue;
        cf_ = std::max(cf_, (aj.deg() + n_ - j - 1) / (n_ - j));
    }

    // resultant of f and df/dt; nonzero iff f is squarefree over k(x)
    std::vector<Poly> fp(static_cast<size_t>(n_), Poly(q_));
    for (int i = 1; i <= n_; ++i)
        fp[static_cast<size_t>(i - 1)] = f_[static_cast<size_t>(i)].scale(static_cast<uint32_t>(i) % q_);
    size_t m = static_cast<size_t>(2 * n_ - 1);
    PMat syl(m, std::vector<Poly>(m, Poly(q_)));
    for (size_t r = 0; r + 1 < static_cast<size_t>(n_); ++r)
        for (size_t j = 0; j <= static_cast<size_t>(n_); ++j)
            syl[r][r + j] = f_[static_cast<size_t>(n_) - j];
    for (size_t r = 0; r < static_cast<size_t>(n_); ++r)
        for (size_t j = 0; j < static_cast<size_t>(n_); ++j)
            syl[static_cast<size_t>(n_) - 1 + r][r + j] = fp[static_cast<size_t>(n_) - 1 - j];
    disc_ = pmat_det(syl);
    if (disc_.is_zero()) throw FieldError("f is not squarefree");

    redrow_.assign(static_cast<size_t>(n_ - 1), std::vector<Poly>(static_cast<size_t>(n_), Poly(q_)));
    for (int j = 0; j < n_; ++j) redrow_[0][static_cast<size_t>(j)] = -f_[static_cast<size_t>(j)];
    for (int i = 1; i < n_ - 1; ++i) {
        const auto& prev = redrow_[static_cast<size_t>(i - 1)];
        auto& row = redrow_[static_cast<size_t>(i)];
        Poly top = prev[static_cast<size_t>(n_ - 1)];
        for (int j = 0; j < n_; ++j) {
            row[static_cast<size_t>(j)] = top * redrow_[0][static_cast<size_t>(j)];
            if (j > 0) row[static_cast<size_t>(j)] = row[static_cast<size_t>(j)] + prev[static_cast<size_t>(j - 1)];
        }
    }

    if (opt.check_irreducible) check_irreducibility();
    with_infinity_ = opt.with_infinity;
    maximal_at_ = opt.maximal_at;
    compute_maximal_order(opt);
    if (with_infinity_) setup_infinity();
}

void FunctionField::check_irreducibility() const {
    // a specialization x -> a that stays irreducible certifies f
    for (uint32_t a = 0; a < q_; ++a) {
        std::vector<uint32_t> spec(static_cast<size_t>(n_) + 1);
        for (int i = 0; i <= n_; ++i) spec[static_cast<size_t>(i)] = f_[static_cast<size_t>(i)].eval(a);
        if (poly_is_irreducible(Poly(q_, spec))) return;
    }
    // complete fallback: search for a monic factor of degree d <= n/2; its
    // t^j coefficient has degree at most (d - j) * cf
    const uint64_t budget = uint64_t(1) << 22;
    uint64_t spent = 0;
    for (int d = 1; 2 * d <= n_; ++d) {
        std::vector<int> width(static_cast<size_t>(d));
        uint64_t count = 1;
        bool over = false;
        for (int j = 0; j < d; ++j) {
            width[static_cast<size_t>(j)] = (d - j) * cf_ + 1;
            for (int w = 0; w < width[static_cast<size_t>(j)]; ++w) {
                count *= q_;
                if (count > budget) { over = true; break; }
            }
            if (over) break;
        }
        if (over || spent + count > budget)
            throw FieldError("cannot certify irreducibility of f within budget");
        spent += count;
        std::vector<std::vector<uint32_t>> co(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) co[static_cast<size_t>(j)].assign(static_cast<size_t>(width[static_cast<size_t>(j)]), 0);
        std::vector<Poly> g(static_cast<size_t>(d) + 1, Poly(q_));
        g[static_cast<size_t>(d)] = Poly::constant(q_, 1);
        while (true) {
            for (int j = 0; j < d; ++j) g[static_cast<size_t>(j)] = Poly(q_, co[static_cast<size_t>(j)]);
            if (tpoly_divides(f_, g, q_)) throw FieldError("f is reducible");
            // odometer step
            int j = 0, w = 0;
            for (;; ++w) {
                if (j == d) break;
                if (w == width[static_cast<size_t>(j)]) { ++j; w = -1; continue; }
                auto& digit = co[static_cast<size_t>(j)][static_cast<size_t>(w)];
                digit = (digit + 1) % q_;
                if (digit != 0) break;
            }
            if (j == d) break;
        }
    }
}

FieldElement FunctionField::zero() const {
    return FieldElement{std::vector<RatFunc>(static_cast<size_t>(n_), RatFunc::zero(q_))};
}

FieldElement FunctionField::one() const { return from_ratfunc(RatFunc::constant(q_, 1)); }

FieldElement FunctionField::gen() const {
    FieldElement r = zero();
    r.co[1] = RatFunc::constant(q_, 1);
    return r;
}

FieldElement FunctionField::from_ratfunc(const RatFunc& a) const {
    FieldElement r = zero();
    r.co[0] = a;
    return r;
}

FieldElement FunctionField::from_poly(const Poly& a) const { return from_ratfunc(RatFunc(a)); }

bool FunctionField::is_zero(const FieldElement& a) const {
    for (const auto& c : a.co)
        if (!c.is_zero()) return false;
    return true;
}

bool FunctionField::eq(const FieldElement& a, const FieldElement& b) const {
    return a.co == b.co;
}

FieldElement FunctionField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = a;
    for (int i = 0; i < n_; ++i) r.co[static_cast<size_t>(i)] = r.co[static_cast<size_t>(i)] + b.co[static_cast<size_t>(i)];
    return r;
}

FieldElement FunctionField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = a;
    for (int i = 0; i < n_; ++i) r.co[static_cast<size_t>(i)] = r.co[static_cast<size_t>(i)] - b.co[static_cast<size_t>(i)];
    return r;
}

FieldElement FunctionField::neg(const FieldElement& a) const {
    FieldElement r = a;
    for (auto& c : r.co) c = -c;
    return r;
}

FieldElement FunctionField::mul(const FieldElement& a, const FieldElement& b) const {
    std::vector<RatFunc> conv(static_cast<size_t>(2 * n_ - 1), RatFunc::zero(q_));
    for (int i = 0; i < n_; ++i) {
        if (a.co[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (b.co[static_cast<size_t>(j)].is_zero()) continue;
            conv[static_cast<size_t>(i + j)] =
                conv[static_cast<size_t>(i + j)] + a.co[static_cast<size_t>(i)] * b.co[static_cast<size_t>(j)];
        }
    }
    FieldElement r = zero();
    for (int i = 0; i < n_; ++i) r.co[static_cast<size_t>(i)] = conv[static_cast<size_t>(i)];
    for (int k = n_; k <= 2 * n_ - 2; ++k) {
        const RatFunc& c = conv[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        const auto& row = redrow_[static_cast<size_t>(k - n_)];
        for (int i = 0; i < n_; ++i) {
            if (row[static_cast<size_t>(i)].is_zero()) continue;
            r.co[static_cast<size_t>(i)] = r.co[static_cast<size_t>(i)] + c * RatFunc(row[static_cast<size_t>(i)]);
        }
    }
    return r;
}

FieldElement FunctionField::mul_rat(const FieldElement& a, const RatFunc& c) const {
    FieldElement r = a;
    for (auto& v : r.co) v = v * c;
    return r;
}

FieldElement FunctionField::inv(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("field inverse of zero");
    // solve M_a x = e_0 where the columns of M_a are a * t^j
    size_t n = static_cast<size_t>(n_);
    std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n + 1, RatFunc::zero(q_)));
    std::vector<RatFunc> col = a.co;
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) m[i][j] = col[i];
        if (j + 1 < n) {
            std::vector<RatFunc> next(n, RatFunc::zero(q_));
            RatFunc top = col[n - 1];
            for (size_t i = 1; i < n; ++i) next[i] = col[i - 1];
            if (!top.is_zero())
                for (size_t i = 0; i < n; ++i)
                    if (!redrow_[0][i].is_zero()) next[i] = next[i] + top * RatFunc(redrow_[0][i]);
            col = std::move(next);
        }
    }
    m[0][n] = RatFunc::constant(q_, 1);
    // gaussian elimination
    size_t row = 0;
    std::vector<size_t> pivot_col(n, n);
    for (size_t c = 0; c < n && row < n; ++c) {
        size_t piv = row;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[row]);
        RatFunc lead = m[row][c];
        for (size_t j = c; j <= n; ++j) m[row][j] = m[row][j] / lead;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || m[i][c].is_zero()) continue;
            RatFunc coeff = m[i][c];
            for (size_t j = c; j <= n; ++j) m[i][j] = m[i][j] - coeff * m[row][j];
        }
        pivot_col[row] = c;
        ++row;
    }
    FieldElement r = zero();
    for (size_t i = 0; i < row; ++i) r.co[pivot_col[i]] = m[i][n];
    // a nonzero element of a field is invertible; a failed solve means f
    // was reducible after all
    if (!eq(mul(a, r), one())) throw std::logic_error("inverse solve failed; f is not irreducible");
    return r;
}

FieldElement FunctionField::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

FieldElement FunctionField::pow(FieldElement a, int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    FieldElement r = one();
    uint64_t k = static_cast<uint64_t>(e);
    while (k) {
        if (k & 1) r = mul(r, a);
        if (k >>= 1) a = mul(a, a);
    }
    return r;
}

std::vector<Poly> FunctionField::mul_by_t(const std::vector<Poly>& co) const {
    size_t n = static_cast<size_t>(n_);
    std::vector<Poly> r(n, Poly(q_));
    for (size_t i = 1; i < n; ++i) r[i] = co[i - 1];
    const Poly& top = co[n - 1];
    if (!top.is_zero())
        for (size_t i = 0; i < n; ++i) r[i] = r[i] + top * redrow_[0][i];
    return r;
}

PMat FunctionField::mult_matrix_int(const std::vector<Poly>& tco) const {
    size_t n = static_cast<size_t>(n_);
    PMat m(n, std::vector<Poly>(n, Poly(q_)));
    std::vector<Poly> col = tco;
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) m[i][j] = col[i];
        if (j + 1 < n) col = mul_by_t(col);
    }
    return m;
}

RatFunc FunctionField::elt_norm(const FieldElement& a) const {
    Poly den = Poly::constant(q_, 1);
    for (const auto& c : a.co)
        if (!c.is_zero()) den = poly_lcm(den, c.den);
    std::vector<Poly> tco(static_cast<size_t>(n_), Poly(q_));
    for (int i = 0; i < n_; ++i) {
        const RatFunc& c = a.co[static_cast<size_t>(i)];
        if (!c.is_zero()) tco[static_cast<size_t>(i)] = c.num * Poly::divexact(den, c.den);
    }
    Poly det = pmat_det(mult_matrix_int(tco));
    return RatFunc(det, Poly::pow(den, static_cast<uint64_t>(n_)));
}

RatFunc FunctionField::elt_trace(const FieldElement& a) const {
    Poly den = Poly::constant(q_, 1);
    for (const auto& c : a.co)
        if (!c.is_zero()) den = poly_lcm(den, c.den);
    std::vector<Poly> tco(static_cast<size_t>(n_), Poly(q_));
    for (int i = 0; i < n_; ++i) {
        const RatFunc& c = a.co[static_cast<size_t>(i)];
        if (!c.is_zero()) tco[static_cast<size_t>(i)] = c.num * Poly::divexact(den, c.den);
    }
    PMat m = mult_matrix_int(tco);
    Poly tr(q_);
    for (int j = 0; j < n_; ++j) tr = tr + m[static_cast<size_t>(j)][static_cast<size_t>(j)];
    return RatFunc(tr, den);
}

std::string FunctionField::elt_to_string(const FieldElement& a) const {
    std::string out;
    for (size_t i = a.co.size(); i-- > 0;) {
        const RatFunc& c = a.co[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string("x");
        bool composite = cs.find('+') != std::string::npos ||
                         (!cs.empty() && cs.find('-', 1) != std::string::npos);
        if (i == 0) {
            out += cs;
        } else {
            bool is_one = c.is_polynomial() && c.num.is_one();
            if (!is_one) out += (composite && cs.front() != '(' ? "(" + cs + ")" : cs) + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

FieldElement FunctionField::omega(size_t i) const {
    FieldElement r = zero();
    for (size_t j = 0; j < static_cast<size_t>(n_); ++j)
        r.co[j] = RatFunc(w_[j][i], d_);
    return r;
}

std::vector<RatFunc> FunctionField::omega_coords(const FieldElement& a) const {
    // back substitution in W c = d * a; W is upper triangular
    size_t n = static_cast<size_t>(n_);
    std::vector<RatFunc> rhs(n), c(n, RatFunc::zero(q_));
    for (size_t i = 0; i < n; ++i) rhs[i] = a.co[i] * RatFunc(d_);
    for (size_t ii = n; ii-- > 0;) {
        RatFunc s = rhs[ii];
        for (size_t j = ii + 1; j < n; ++j)
            if (!c[j].is_zero() && !w_[ii][j].is_zero()) s = s - c[j] * RatFunc(w_[ii][j]);
        c[ii] = s / RatFunc(w_[ii][ii]);
    }
    return c;
}

std::optional<std::vector<Poly>> FunctionField::omega_coords_integral(const FieldElement& a) const {
    std::vector<RatFunc> c = omega_coords(a);
    std::vector<Poly> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_polynomial()) return std::nullopt;
        r[i] = c[i].num;
    }
    return r;
}

FieldElement FunctionField::from_omega(const std::vector<Poly>& co) const {
    std::vector<Poly> t = pmat_vec_mul(w_, co);
    FieldElement r = zero();
    for (size_t i = 0; i < t.size(); ++i) r.co[i] = RatFunc(t[i], d_);
    return r;
}

FieldElement FunctionField::from_omega_rat(const std::vector<RatFunc>& co) const {
    FieldElement r = zero();
    for (size_t i = 0; i < static_cast<size_t>(n_); ++i) {
        RatFunc s = RatFunc::zero(q_);
        for (size_t j = 0; j < co.size(); ++j)
            if (!co[j].is_zero() && !w_[i][j].is_zero()) s = s + co[j] * RatFunc(w_[i][j]);
        r.co[i] = s / RatFunc(d_);
    }
    return r;
}

bool FunctionField::is_integral(const FieldElement& a) const {
    return omega_coords_integral(a).has_value();
}

std::vector<Poly> FunctionField::omega_mul(const std::vector<Poly>& a, const std::vector<Poly>& b) const {
    size_t n = static_cast<size_t>(n_);
    std::vector<Poly> r(n, Poly(q_));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Poly c = a[i] * b[j];
            const auto& row = omul_[i][j];
            for (size_t l = 0; l < n; ++l)
                if (!row[l].is_zero()) r[l] = r[l] + c * row[l];
        }
    }
    return r;
}

std::vector<RatFunc> FunctionField::omega_mul_rat(const std::vector<RatFunc>& a,
                                                  const std::vector<RatFunc>& b) const {
    size_t n = static_cast<size_t>(n_);
    std::vector<RatFunc> r(n, RatFunc::zero(q_));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            RatFunc c = a[i] * b[j];
            const auto& row = omul_[i][j];
            for (size_t l = 0; l < n; ++l)
                if (!row[l].is_zero()) r[l] = r[l] + c * RatFunc(row[l]);
        }
    }
    return r;
}

PMat FunctionField::module_mul(const PMat& a, const PMat& b) const {
    size_t n = static_cast<size_t>(n_);
    size_t ca = a.empty() ? 0 : a[0].size(), cb = b.empty() ? 0 : b[0].size();
    PMat prod(n, std::vector<Poly>(ca * cb, Poly(q_)));
    std::vector<Poly> ac(n), bc(n);
    for (size_t i = 0; i < ca; ++i) {
        for (size_t r = 0; r < n; ++r) ac[r] = a[r][i];
        for (size_t j = 0; j < cb; ++j) {
            for (size_t r = 0; r < n; ++r) bc[r] = b[r][j];
            std::vector<Poly> p = omega_mul(ac, bc);
            for (size_t r = 0; r < n; ++r) prod[r][i * cb + j] = p[r];
        }
    }
    return pmat_hnf_basis(prod);
}

}  // namespace normeq
