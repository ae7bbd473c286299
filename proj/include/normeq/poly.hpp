// poly.hpp — dense univariate polynomials over a prime field F_q, the
// rational function field F_q(x) built on them, and factorization
// (squarefree / distinct-degree / Cantor-Zassenhaus equal-degree, with a
// deterministic small-case fallback).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normeq/fq.hpp"

namespace normeq {

// Invariant: no trailing zero coefficients; zero polynomial has empty c.
struct Poly {
    uint32_t q = 0;
    std::vector<uint32_t> c;  // c[i] multiplies x^i

    Poly() = default;
    explicit Poly(uint32_t q_) : q(q_) {}
    Poly(uint32_t q_, std::vector<uint32_t> coeffs);
    static Poly constant(uint32_t q, uint32_t a);
    static Poly x(uint32_t q);
    static Poly monomial(uint32_t q, uint32_t a, size_t deg);

    int deg() const { return static_cast<int>(c.size()) - 1; }  // deg 0 poly = -1
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    bool is_constant() const { return c.size() <= 1; }
    uint32_t lead() const { return c.empty() ? 0 : c.back(); }
    uint32_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    bool is_monic() const { return lead() == 1; }
    void trim();

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // total order (by degree, then lexicographic from the top coefficient);
    // used wherever a canonical representative must be picked
    friend bool operator<(const Poly& a, const Poly& b);

    Poly scale(uint32_t k) const;
    Poly monic() const;
    Poly derivative() const;
    Poly shift(size_t k) const;  // multiply by x^k
    uint32_t eval(uint32_t a) const;
    ExtElem eval_ext(const ExtField& K, const ExtElem& a) const;

    static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);
    // exact division; throws if the remainder is nonzero
    static Poly divexact(const Poly& a, const Poly& b);

    static Poly gcd(Poly a, Poly b);  // monic gcd
    static Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
    static Poly powmod(Poly base, uint64_t e, const Poly& mod);
    static Poly pow(const Poly& base, uint64_t e);

    std::string to_string(const std::string& var = "x") const;
};

// factorization: map monic irreducible -> multiplicity, plus the unit
struct PolyFactorization {
    uint32_t unit = 1;  // leading coefficient of the input
    std::map<Poly, int, bool (*)(const Poly&, const Poly&)> factors;
    PolyFactorization();
};

bool poly_is_irreducible(const Poly& f);
// Cantor-Zassenhaus (seeded deterministically); exact for any prime q
PolyFactorization poly_factor(const Poly& f);
// trial division against enumerated irreducibles; requires q^... small,
// intended for cross-checks (q * deg <= 1e4 keeps the enumeration sane)
PolyFactorization poly_factor_deterministic(const Poly& f);
// all monic irreducibles of the given degree, ascending in operator<
std::vector<Poly> monic_irreducibles(uint32_t q, int degree);

// Rational function p/r with r monic and gcd(p, r) = 1.
struct RatFunc {
    Poly num, den;

    RatFunc() = default;
    explicit RatFunc(Poly p);
    RatFunc(Poly p, Poly r);
    static RatFunc constant(uint32_t q, uint32_t a) { return RatFunc(Poly::constant(q, a)); }
    static RatFunc zero(uint32_t q) { return RatFunc(Poly(q)); }

    uint32_t q() const { return den.q; }
    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc inv() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
};

// height of a rational function: max(deg num, deg den); height(0) = 0
int rat_height(const RatFunc& f);

// multiplicity of the monic irreducible p in a nonzero polynomial
int poly_val(const Poly& a, const Poly& p);
// num minus den multiplicity; a nonzero
int rat_val(const RatFunc& a, const Poly& p);

}  // namespace normeq
