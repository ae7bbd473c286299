// fractional ideal arithmetic on triangular module bases
#include "normeq/ideal.hpp"

#include <algorithm>

namespace normeq {

namespace {

Poly content_with(const PMat& m, Poly g) {
    for (const auto& row : m)
        for (const auto& e : row) {
            if (e.is_zero()) continue;
            g = Poly::gcd(g, e);
            if (g.deg() == 0) return g;
        }
    return g;
}

}  // namespace

FracIdeal ideal_canon(const FunctionField& F, PMat num, Poly den) {
    num = pmat_hnf_basis(num);
    if (num.empty() || num[0].size() != static_cast<size_t>(F.degree()))
        throw std::invalid_argument("ideal basis is not full rank");
    den = den.monic();
    Poly g = content_with(num, den);
    if (g.deg() > 0) {
        den = Poly::divexact(den, g).monic();
        for (auto& row : num)
            for (auto& e : row)
                if (!e.is_zero()) e = Poly::divexact(e, g);
    }
    return FracIdeal{std::move(num), std::move(den)};
}

FracIdeal ideal_one(const FunctionField& F) {
    return FracIdeal{pmat_identity(static_cast<size_t>(F.degree()), F.q()),
                     Poly::constant(F.q(), 1)};
}

FracIdeal ideal_from_prime(const FunctionField& F, const PrimePlace& P) {
    return ideal_canon(F, P.basis, Poly::constant(F.q(), 1));
}

FracIdeal ideal_principal(const FunctionField& F, const FieldElement& a) {
    if (F.is_zero(a)) throw std::domain_error("principal ideal of zero");
    size_t n = static_cast<size_t>(F.degree());
    std::vector<std::vector<RatFunc>> cols(n);
    Poly den = Poly::constant(F.q(), 1);
    for (size_t j = 0; j < n; ++j) {
        cols[j] = F.omega_coords(F.mul(a, F.omega(j)));
        for (const auto& c : cols[j])
            if (!c.is_zero()) den = Poly::divexact(den * c.den, Poly::gcd(den, c.den)).monic();
    }
    PMat num(n, std::vector<Poly>(n, Poly(F.q())));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i)
            if (!cols[j][i].is_zero())
                num[i][j] = cols[j][i].num * Poly::divexact(den, cols[j][i].den);
    return ideal_canon(F, std::move(num), std::move(den));
}

FracIdeal ideal_mul(const FunctionField& F, const FracIdeal& a, const FracIdeal& b) {
    return ideal_canon(F, F.module_mul(a.num, b.num), a.den * b.den);
}

FracIdeal ideal_inv(const FunctionField& F, const FracIdeal& a) {
    size_t n = static_cast<size_t>(F.degree());
    // with M integral of determinant N, N (O : M) = { y in O : y M in N O }
    Poly N = pmat_det(a.num).monic();
    PMat target(n, std::vector<Poly>(n, Poly(F.q())));
    for (size_t i = 0; i < n; ++i) target[i][i] = N;
    PMat U = pmat_identity(n, F.q());
    for (size_t l = 0; l < n; ++l) {
        std::vector<Poly> bl(n);
        for (size_t i = 0; i < n; ++i) bl[i] = a.num[i][l];
        PMat ml(n, std::vector<Poly>(n, Poly(F.q())));
        for (size_t j = 0; j < n; ++j) {
            std::vector<Poly> ej(n, Poly(F.q()));
            ej[j] = Poly::constant(F.q(), 1);
            auto col = F.omega_mul(bl, ej);
            for (size_t i = 0; i < n; ++i) ml[i][j] = col[i];
        }
        U = pmat_mul(U, pmat_preimage(pmat_mul(ml, U), target));
    }
    for (auto& row : U)
        for (auto& e : row)
            if (!e.is_zero()) e = e * a.den;
    return ideal_canon(F, std::move(U), std::move(N));
}

FracIdeal ideal_pow(const FunctionField& F, const FracIdeal& a, int64_t e) {
    FracIdeal base = e < 0 ? ideal_inv(F, a) : a;
    uint64_t k = static_cast<uint64_t>(e < 0 ? -e : e);
    FracIdeal r = ideal_one(F);
    while (k) {
        if (k & 1) r = ideal_mul(F, r, base);
        if (k >>= 1) base = ideal_mul(F, base, base);
    }
    return r;
}

bool ideal_eq(const FracIdeal& a, const FracIdeal& b) {
    return a.den == b.den && pmat_eq(a.num, b.num);
}

bool ideal_is_integral(const FracIdeal& a) { return a.den.is_one(); }

bool ideal_contains(const FunctionField& F, const FracIdeal& a, const FieldElement& x) {
    auto co = F.omega_coords(x);
    std::vector<Poly> w(co.size());
    for (size_t i = 0; i < co.size(); ++i) {
        RatFunc scaled = co[i] * RatFunc(a.den);
        if (!scaled.is_polynomial()) return false;
        w[i] = scaled.num;
    }
    return pmat_solve_upper(a.num, w).has_value();
}

RatFunc ideal_norm(const FunctionField& F, const FracIdeal& a) {
    Poly num = pmat_det(a.num).monic();
    Poly den = Poly::pow(a.den, static_cast<uint64_t>(F.degree()));
    return RatFunc(num, den);
}

int ideal_val(const FunctionField& F, const FracIdeal& a, const PrimePlace& P) {
    int best = 0;
    bool first = true;
    RatFunc dinv(Poly::constant(F.q(), 1), a.den);
    for (size_t j = 0; j < a.num[0].size(); ++j) {
        std::vector<Poly> col(a.num.size());
        for (size_t i = 0; i < a.num.size(); ++i) col[i] = a.num[i][j];
        FieldElement g = F.mul_rat(F.from_omega(col), dinv);
        if (F.is_zero(g)) continue;
        int v = F.val_fin(g, P);
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

std::vector<std::pair<PrimePlace, int>> ideal_support(const FunctionField& F, const FracIdeal& a) {
    std::vector<std::pair<PrimePlace, int>> out;
    Poly carrier = pmat_det(a.num).monic() * a.den;
    if (carrier.deg() < 1) return out;
    for (const auto& [p, mult] : poly_factor(carrier).factors) {
        (void)mult;
        for (const auto& P : F.primes_over(p)) {
            int v = ideal_val(F, a, P);
            if (v != 0) out.emplace_back(P, v);
        }
    }
    return out;
}

FracIdeal ideal_from_support(const FunctionField& F,
                             const std::vector<std::pair<PrimePlace, int>>& sup) {
    FracIdeal r = ideal_one(F);
    for (const auto& [P, e] : sup)
        if (e != 0) r = ideal_mul(F, r, ideal_pow(F, ideal_from_prime(F, P), e));
    return r;
}

}  // namespace normeq
