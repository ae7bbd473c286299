#include "normeq/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace normeq {

Poly::Poly(uint32_t q_, std::vector<uint32_t> coeffs) : q(q_), c(std::move(coeffs)) {
    for (auto& v : c) v %= q;
    trim();
}

Poly Poly::constant(uint32_t q, uint32_t a) {
    Poly p(q);
    a %= q;
    if (a) p.c = {a};
    return p;
}

Poly Poly::x(uint32_t q) {
    Poly p(q);
    p.c = {0, 1};
    return p;
}

Poly Poly::monomial(uint32_t q, uint32_t a, size_t deg) {
    Poly p(q);
    a %= q;
    if (a) {
        p.c.assign(deg + 1, 0);
        p.c[deg] = a;
    }
    return p;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r(a.q);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = fq_add(a.coeff(i), b.coeff(i), a.q);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r(a.q);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = fq_sub(a.coeff(i), b.coeff(i), a.q);
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(q);
    r.c.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = fq_neg(c[i], q);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.q);
    Poly r(a.q);
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = static_cast<uint32_t>(
                (r.c[i + j] + static_cast<uint64_t>(a.c[i]) * b.c[j]) % a.q);
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.q == b.q && a.c == b.c; }

bool operator<(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

Poly Poly::scale(uint32_t k) const {
    k %= q;
    if (k == 0) return Poly(q);
    Poly r(q);
    r.c.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = fq_mul(c[i], k, q);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(fq_inv(lead(), q));
}

Poly Poly::derivative() const {
    Poly r(q);
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i)
        r.c[i - 1] = fq_mul(c[i], static_cast<uint32_t>(i % q), q);
    r.trim();
    return r;
}

Poly Poly::shift(size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(q);
    r.c.assign(c.size() + k, 0);
    std::copy(c.begin(), c.end(), r.c.begin() + static_cast<long>(k));
    return r;
}

uint32_t Poly::eval(uint32_t a) const {
    uint32_t v = 0;
    for (size_t i = c.size(); i-- > 0;) v = fq_add(fq_mul(v, a, q), c[i], q);
    return v;
}

ExtElem Poly::eval_ext(const ExtField& K, const ExtElem& a) const {
    ExtElem v = K.zero();
    for (size_t i = c.size(); i-- > 0;)
        v = K.add(K.mul(v, a), K.from_base(c[i]));
    return v;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    uint32_t q = a.q;
    quo = Poly(q);
    rem = a;
    int db = b.deg();
    if (a.deg() < db) return;
    quo.c.assign(static_cast<size_t>(a.deg() - db) + 1, 0);
    uint32_t li = fq_inv(b.lead(), q);
    for (int i = a.deg(); i >= db; --i) {
        uint32_t ci = rem.c[static_cast<size_t>(i)];
        if (!ci) continue;
        uint32_t coef = fq_mul(ci, li, q);
        quo.c[static_cast<size_t>(i - db)] = coef;
        for (int j = 0; j <= db; ++j)
            rem.c[static_cast<size_t>(i - db + j)] =
                fq_sub(rem.c[static_cast<size_t>(i - db + j)], fq_mul(coef, b.c[static_cast<size_t>(j)], q), q);
    }
    quo.trim();
    rem.trim();
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    return q;
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    return r;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("Poly::divexact: nonzero remainder");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
    uint32_t q = a.q;
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(q, 1), s1(q);
    Poly t0(q), t1 = Poly::constant(q, 1);
    while (!r1.is_zero()) {
        Poly quo, rem;
        divmod(r0, r1, quo, rem);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly s2 = s0 - quo * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - quo * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        uint32_t li = fq_inv(r0.lead(), q);
        r0 = r0.scale(li);
        s0 = s0.scale(li);
        t0 = t0.scale(li);
    }
    s = s0;
    t = t0;
    return r0;
}

Poly Poly::powmod(Poly base, uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(base.q, 1) % mod;
    base = base % mod;
    while (e) {
        if (e & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

Poly Poly::pow(const Poly& base, uint64_t e) {
    Poly r = Poly::constant(base.q, 1), b = base;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (!c[i]) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ------------------------------------------------------------ factorization

PolyFactorization::PolyFactorization()
    : factors([](const Poly& a, const Poly& b) { return a < b; }) {}

bool poly_is_irreducible(const Poly& f) {
    int n = f.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    uint32_t q = f.q;
    Poly fm = f.monic();
    // x^(q^n) == x and gcd(x^(q^(n/l)) - x, f) = 1 for primes l | n
    auto frob_power = [&](int e) {
        Poly r = Poly::x(q) % fm;
        for (int i = 0; i < e; ++i) r = Poly::powmod(r, q, fm);
        return r;
    };
    Poly xn = frob_power(n);
    if (!(xn - (Poly::x(q) % fm)).is_zero()) return false;
    int m = n;
    std::vector<int> primes;
    for (int l = 2; l * l <= m; ++l) {
        if (m % l == 0) {
            primes.push_back(l);
            while (m % l == 0) m /= l;
        }
    }
    if (m > 1) primes.push_back(m);
    for (int l : primes) {
        Poly h = frob_power(n / l) - Poly::x(q);
        if (Poly::gcd(h, fm).deg() != 0) return false;
    }
    return true;
}

namespace {

// squarefree decomposition; returns list of (squarefree part, multiplicity).
// Char-p care: if f' == 0 then f = g(x^p) and, since q is prime, g's
// coefficients are p-th powers of themselves (Frobenius fixes F_p).
void squarefree_parts(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    uint32_t q = f.q;
    if (f.deg() <= 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        Poly g(q);
        g.c.resize((f.c.size() - 1) / q + 1);
        for (size_t i = 0; i < g.c.size(); ++i) g.c[i] = f.coeff(i * q);
        g.trim();
        squarefree_parts(g, mult * static_cast<int>(q), out);
        return;
    }
    Poly a = Poly::gcd(f, d);   // product of repeated parts
    Poly b = Poly::divexact(f, a);  // squarefree, contains each factor once
    int k = 1;
    while (b.deg() > 0) {
        Poly c = Poly::gcd(a, b);
        Poly piece = Poly::divexact(b, c);  // factors with multiplicity exactly k
        if (piece.deg() > 0) out.emplace_back(piece.monic(), mult * k);
        if (!a.is_zero() && c.deg() >= 0) a = Poly::divexact(a, c);
        b = c;
        ++k;
    }
    if (a.deg() > 0) squarefree_parts(a, mult, out);
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
void edf(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    int n = f.deg();
    if (n == d) {
        out.push_back(f.monic());
        return;
    }
    uint32_t q = f.q;
    Poly fm = f.monic();
    for (;;) {
        // random element of the quotient algebra
        Poly a(q);
        a.c.resize(static_cast<size_t>(n));
        for (auto& cc : a.c) cc = static_cast<uint32_t>(rng() % q);
        a.trim();
        if (a.deg() < 1) continue;
        Poly g = Poly::gcd(a, fm);
        if (g.deg() > 0 && g.deg() < n) {
            edf(g, d, rng, out);
            edf(Poly::divexact(fm, g), d, rng, out);
            return;
        }
        Poly h;
        if (q != 2) {
            // a^((q^d - 1)/2) - 1 splits the roots by quadratic character
            uint64_t e = 1;
            for (int i = 0; i < d; ++i) e *= q;
            h = Poly::powmod(a, (e - 1) / 2, fm) - Poly::constant(q, 1);
        } else {
            // trace map sum a^(2^i) for char 2
            Poly t = a;
            Poly acc = a;
            for (int i = 1; i < d; ++i) {
                t = Poly::powmod(t, 2, fm);
                acc = (acc + t) % fm;
            }
            h = acc;
        }
        g = Poly::gcd(h, fm);
        if (g.deg() > 0 && g.deg() < n) {
            edf(g, d, rng, out);
            edf(Poly::divexact(fm, g), d, rng, out);
            return;
        }
    }
}

}  // namespace

PolyFactorization poly_factor(const Poly& f) {
    PolyFactorization out;
    if (f.is_zero()) throw std::domain_error("poly_factor: zero polynomial");
    out.unit = f.lead();
    if (f.deg() <= 0) return out;
    std::vector<std::pair<Poly, int>> sqf;
    squarefree_parts(f.monic(), 1, sqf);
    std::mt19937_64 rng(0x5eedf00dULL);  // fixed seed: deterministic runs
    uint32_t q = f.q;
    for (auto& [part, mult] : sqf) {
        // distinct-degree: peel factors of degree d = 1, 2, ...
        Poly rest = part;
        Poly h = Poly::x(q) % rest;  // x^(q^d) mod rest, updated in place
        int d = 0;
        while (rest.deg() > 0) {
            ++d;
            if (2 * d > rest.deg()) {
                out.factors[rest.monic()] += mult;  // remainder is irreducible
                break;
            }
            h = Poly::powmod(h, q, rest);
            Poly g = Poly::gcd(h - Poly::x(q), rest);
            if (g.deg() > 0) {
                std::vector<Poly> irr;
                edf(g, d, rng, irr);
                for (auto& p : irr) out.factors[p] += mult;
                rest = Poly::divexact(rest, g);
                h = h % rest;
            }
        }
    }
    return out;
}

std::vector<Poly> monic_irreducibles(uint32_t q, int degree) {
    std::vector<Poly> out;
    if (degree < 1) return out;
    // iterate c0..c(d-1) as base-q counters; leading coefficient fixed to 1
    std::vector<uint32_t> c(static_cast<size_t>(degree) + 1, 0);
    c[static_cast<size_t>(degree)] = 1;
    for (;;) {
        Poly f(q);
        f.c = c;
        if (poly_is_irreducible(f)) out.push_back(f);
        size_t i = 0;
        while (i < static_cast<size_t>(degree)) {
            if (++c[i] < q) break;
            c[i] = 0;
            ++i;
        }
        if (i == static_cast<size_t>(degree)) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolyFactorization poly_factor_deterministic(const Poly& f) {
    PolyFactorization out;
    if (f.is_zero()) throw std::domain_error("poly_factor_deterministic: zero polynomial");
    out.unit = f.lead();
    Poly rest = f.monic();
    for (int d = 1; rest.deg() > 0 && d <= rest.deg(); ++d) {
        if (2 * d > rest.deg()) break;
        for (const Poly& p : monic_irreducibles(f.q, d)) {
            while (true) {
                Poly quo, rem;
                Poly::divmod(rest, p, quo, rem);
                if (!rem.is_zero()) break;
                out.factors[p] += 1;
                rest = quo;
            }
            if (rest.deg() < d) break;
        }
    }
    if (rest.deg() > 0) out.factors[rest] += 1;
    return out;
}

// ------------------------------------------------------------------ RatFunc

RatFunc::RatFunc(Poly p) : num(std::move(p)), den(Poly::constant(num.q, 1)) {}

RatFunc::RatFunc(Poly p, Poly r) : num(std::move(p)), den(std::move(r)) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num.is_zero()) {
        den = Poly::constant(den.q, 1);
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.deg() > 0) {
        num = Poly::divexact(num, g);
        den = Poly::divexact(den, g);
    }
    uint32_t li = fq_inv(den.lead(), den.q);
    num = num.scale(li);
    den = den.scale(li);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.num, a.den * b.den);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num * b.den, a.den * b.num);
}
RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num = -r.num;
    return r;
}
RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc::inv: zero");
    return RatFunc(den, num);
}
bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num == b.num && a.den == b.den;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) return num.to_string(var);
    return "(" + num.to_string(var) + ")/(" + den.to_string(var) + ")";
}

int rat_height(const RatFunc& f) {
    if (f.is_zero()) return 0;
    return std::max(f.num.deg(), f.den.deg());
}

int poly_val(const Poly& a, const Poly& p) {
    if (a.is_zero()) throw std::domain_error("poly_val: zero");
    if (p.deg() < 1) throw std::domain_error("poly_val: constant modulus");
    int v = 0;
    Poly r = a;
    while (true) {
        Poly quo, rem;
        Poly::divmod(r, p, quo, rem);
        if (!rem.is_zero()) return v;
        r = quo;
        ++v;
    }
}

int rat_val(const RatFunc& a, const Poly& p) {
    if (a.is_zero()) throw std::domain_error("rat_val: zero");
    return poly_val(a.num, p) - poly_val(a.den, p);
}

}  // namespace normeq
