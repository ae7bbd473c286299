#include "doctest.h"

#include "normeq/fq.hpp"
#include "normeq/laurent.hpp"
#include "normeq/poly.hpp"
#include "normeq/polyparse.hpp"

#include <random>

using namespace normeq;

TEST_CASE("prime field axioms for q up to 7") {
    for (uint32_t q : {2u, 3u, 5u, 7u}) {
        for (uint32_t a = 0; a < q; ++a) {
            CHECK(fq_add(a, fq_neg(a, q), q) == 0);
            if (a) CHECK(fq_mul(a, fq_inv(a, q), q) == 1);
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(fq_add(a, b, q) == (a + b) % q);
                CHECK(fq_mul(a, b, q) == (a * b) % q);
                CHECK(fq_sub(fq_add(a, b, q), b, q) == a);
            }
        }
    }
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(7));
    CHECK(!is_prime_u32(1));
    CHECK(!is_prime_u32(9));
}

TEST_CASE("extension fields: order of the multiplicative group") {
    for (auto [q, m] : {std::pair<uint32_t, uint32_t>{3, 2}, {5, 2}, {3, 3}, {2, 4}}) {
        auto K = ExtField::make(q, m);
        CHECK(K->size() == static_cast<uint64_t>(std::pow(double(q), double(m)) + 0.5));
        auto g = K->gen();
        // every nonzero element satisfies a^(q^m - 1) = 1
        for (uint64_t i = 1; i < K->size(); ++i) {
            auto a = K->elem_at(i);
            CHECK(K->is_one(K->pow(a, K->size() - 1)));
            CHECK(K->is_one(K->mul(a, K->inv(a))));
        }
        // frobenius fixes exactly the prime field
        uint32_t fixed = 0;
        for (uint64_t i = 0; i < K->size(); ++i) {
            auto a = K->elem_at(i);
            if (K->frobenius(a) == a) ++fixed;
        }
        CHECK(fixed == q);
        (void)g;
    }
}

TEST_CASE("polynomial divmod and gcd") {
    uint32_t q = 5;
    std::mt19937 rng(3);
    auto rand_poly = [&](int maxdeg) {
        std::vector<uint32_t> c(static_cast<size_t>(rng() % (maxdeg + 1)) + 1);
        for (auto& v : c) v = rng() % q;
        return Poly(q, c);
    };
    for (int i = 0; i < 300; ++i) {
        Poly a = rand_poly(8), b = rand_poly(5);
        if (b.is_zero()) continue;
        Poly quo, rem;
        Poly::divmod(a, b, quo, rem);
        CHECK(quo * b + rem == a);
        CHECK(rem.deg() < b.deg());
        Poly g = Poly::gcd(a, b);
        if (!g.is_zero()) {
            CHECK(g.is_monic());
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
        Poly s, t;
        Poly g2 = Poly::xgcd(a, b, s, t);
        CHECK(g2 == g);
        CHECK(s * a + t * b == g);
    }
}

TEST_CASE("factorization of anchor polynomials") {
    // x^2 + 2 over F_3 splits as (x+1)(x+2)
    Poly f(3, {2, 0, 1});
    CHECK(!poly_is_irreducible(f));
    auto fac = poly_factor(f);
    CHECK(fac.factors.size() == 2);
    CHECK(fac.factors.count(Poly(3, {1, 1})) == 1);
    CHECK(fac.factors.count(Poly(3, {2, 1})) == 1);

    // x^2 + 1 over F_3 is irreducible
    CHECK(poly_is_irreducible(Poly(3, {1, 0, 1})));
    // x + 4 over F_5
    CHECK(poly_is_irreducible(Poly(5, {4, 1})));
    // x^3 + x + 1 over F_3 = (x+2)(x^2+x+2): 1 is a root
    Poly g(3, {1, 1, 0, 1});
    CHECK(g.eval(1) == 0);
    auto gf = poly_factor(g);
    Poly prod = Poly::constant(3, gf.unit);
    for (auto& [p, e] : gf.factors) {
        CHECK(poly_is_irreducible(p));
        for (int i = 0; i < e; ++i) prod = prod * p;
    }
    CHECK(prod == g);
}

TEST_CASE("factor of random products reassembles, CZ agrees with trial division") {
    std::mt19937 rng(17);
    for (uint32_t q : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<uint32_t> c(static_cast<size_t>(rng() % 7) + 2);
            for (auto& v : c) v = rng() % q;
            Poly f(q, c);
            if (f.deg() < 1) continue;
            auto fa = poly_factor(f);
            auto fb = poly_factor_deterministic(f);
            CHECK(fa.unit == fb.unit);
            CHECK(fa.factors == fb.factors);
            Poly prod = Poly::constant(q, fa.unit);
            for (auto& [p, e] : fa.factors)
                for (int i = 0; i < e; ++i) prod = prod * p;
            CHECK(prod == f);
        }
    }
}

TEST_CASE("counts of monic irreducibles match the necklace numbers") {
    CHECK(monic_irreducibles(3, 1).size() == 3);
    CHECK(monic_irreducibles(3, 2).size() == 3);
    CHECK(monic_irreducibles(3, 3).size() == 8);
    CHECK(monic_irreducibles(5, 1).size() == 5);
    CHECK(monic_irreducibles(5, 2).size() == 10);
    CHECK(monic_irreducibles(2, 4).size() == 3);
    for (auto& p : monic_irreducibles(3, 3)) CHECK(poly_is_irreducible(p));
}

TEST_CASE("rational functions reduce to lowest terms with monic denominator") {
    uint32_t q = 3;
    RatFunc r(Poly(q, {0, 2}), Poly(q, {0, 0, 1}));  // 2x / x^2
    CHECK(r.num == Poly::constant(q, 2));
    CHECK(r.den == Poly::x(q));
    RatFunc s = r * r.inv();
    CHECK(s == RatFunc::constant(q, 1));
    CHECK(rat_height(RatFunc::zero(q)) == 0);
    CHECK(rat_height(RatFunc::constant(q, 2)) == 0);
    CHECK(rat_height(r) == 1);
    RatFunc big(Poly(q, {1, 0, 1}), Poly(q, {1, 1, 0, 1}));
    CHECK(rat_height(big) == 3);
    // field identities on randoms
    std::mt19937 rng(5);
    auto rnd = [&]() {
        std::vector<uint32_t> a(rng() % 4 + 1), b(rng() % 3 + 1);
        for (auto& v : a) v = rng() % q;
        for (auto& v : b) v = rng() % q;
        Poly pb(q, b);
        if (pb.is_zero()) pb = Poly::constant(q, 1);
        return RatFunc(Poly(q, a), pb);
    };
    for (int i = 0; i < 200; ++i) {
        RatFunc a = rnd(), b = rnd(), c = rnd();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("laurent expansion at infinity") {
    uint32_t q = 3;
    // x -> u^-1
    auto sx = laurent_embed(RatFunc(Poly::x(q)), 5);
    CHECK(sx.val_or_prec() == -1);
    CHECK(sx.coeff(-1) == 1);
    CHECK(sx.c.size() == 1);
    // 1/(x+1) = u/(1+u) = u - u^2 + u^3 - ... = u + 2u^2 + u^3 + 2u^4 over F_3
    auto s = laurent_embed(RatFunc(Poly::constant(q, 1), Poly(q, {1, 1})), 5);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(2) == 2);
    CHECK(s.coeff(3) == 1);
    CHECK(s.coeff(4) == 2);
    CHECK(s.coeff(0) == 0);
    auto z = laurent_embed(RatFunc::zero(q), 5);
    CHECK(z.zero_to_prec());

    // embedding is a ring homomorphism
    std::mt19937 rng(9);
    auto rnd = [&]() {
        std::vector<uint32_t> a(rng() % 4 + 1), b(rng() % 4 + 1);
        for (auto& v : a) v = rng() % q;
        for (auto& v : b) v = rng() % q;
        Poly pb(q, b);
        if (pb.is_zero()) pb = Poly::constant(q, 1);
        return RatFunc(Poly(q, a), pb);
    };
    for (int i = 0; i < 100; ++i) {
        RatFunc a = rnd(), b = rnd();
        int prec = 6;
        auto ea = laurent_embed(a, prec), eb = laurent_embed(b, prec);
        auto esum = laurent_embed(a + b, prec), eprod = laurent_embed(a * b, prec);
        auto sum = ea + eb, prod = ea * eb;
        for (int e = -8; e < std::min(sum.prec, esum.prec); ++e)
            CHECK(sum.coeff(e) == esum.coeff(e));
        for (int e = -8; e < std::min(prod.prec, eprod.prec); ++e)
            CHECK(prod.coeff(e) == eprod.coeff(e));
        if (!a.is_zero()) {
            auto einv = laurent_embed(a.inv(), prec);
            auto inv = ea.inverse();
            for (int e = -8; e < std::min(inv.prec, einv.prec); ++e)
                CHECK(inv.coeff(e) == einv.coeff(e));
        }
    }
}

TEST_CASE("series inverse is exact to its stated precision") {
    PrimeRing R{5};
    auto s = LaurentSeries::monomial(R, 2, -1, 4) + LaurentSeries::monomial(R, 3, 1, 4);
    auto t = s * s.inverse();
    CHECK(t.coeff(0) == 1);
    for (int e = 1; e < t.prec; ++e) CHECK(t.coeff(e) == 0);
}

TEST_CASE("parser: univariate in x") {
    Poly p = parse_poly_x("x^3 + x + 1", 3);
    CHECK(p == Poly(3, {1, 1, 0, 1}));
    CHECK(parse_poly_x("4x^3", 5) == Poly(5, {0, 0, 0, 4}));
    CHECK(parse_poly_x("2*x^2 - 1", 3) == Poly(3, {2, 0, 2}));
    CHECK(parse_poly_x("(x+1)^2", 3) == Poly(3, {1, 2, 1}));
    CHECK(parse_poly_x("7", 5) == Poly::constant(5, 2));
    CHECK(parse_poly_x("0", 5).is_zero());
    CHECK_THROWS_AS(parse_poly_x("t^2", 3), ParseError);
    CHECK_THROWS_AS(parse_poly_x("x +", 3), ParseError);
    CHECK_THROWS_AS(parse_poly_x("x^", 3), ParseError);
    try {
        parse_poly_x("x + $", 3);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 5);
    }
}

TEST_CASE("parser: t-polynomials with k[x] coefficients") {
    auto f = parse_poly_xt("t^2 - (x^3 + x + 1)", 3);
    REQUIRE(f.size() == 3);
    CHECK(f[2] == Poly::constant(3, 1));
    CHECK(f[1].is_zero());
    CHECK(f[0] == Poly(3, {2, 2, 0, 2}));

    auto g = parse_poly_xt(
        "t^3 + (4x^3 + 3x^2 + 1)t^2 + (3x^3 + 4x^2 + 4x + 2)t + (2x^3 + x)", 5);
    REQUIRE(g.size() == 4);
    CHECK(g[3] == Poly::constant(5, 1));
    CHECK(g[2] == Poly(5, {1, 0, 3, 4}));
    CHECK(g[1] == Poly(5, {2, 4, 4, 3}));
    CHECK(g[0] == Poly(5, {0, 1, 0, 2}));

    // mixed products and powers of mixed terms
    auto h = parse_poly_xt("(t + x)^2", 3);
    REQUIRE(h.size() == 3);
    CHECK(h[2] == Poly::constant(3, 1));
    CHECK(h[1] == Poly(3, {0, 2}));
    CHECK(h[0] == Poly(3, {0, 0, 1}));

    // round-trip through the canonical printer
    for (const char* txt : {"t^2 - (x^3 + x + 1)",
                            "t^3 + (4x^3+3x^2+1)t^2 + (3x^3+4x^2+4x+2)t + (2x^3+x)",
                            "t^5 + x*t + 2"}) {
        auto a = parse_poly_xt(txt, 7);
        auto b = parse_poly_xt(poly_xt_to_string(a), 7);
        CHECK(a == b);
    }
}
