#include "doctest.h"

#include "normeq/field.hpp"
#include "normeq/polyparse.hpp"

using namespace normeq;

namespace {

std::shared_ptr<const FunctionField> e1() {
    static auto F = FunctionField::build(3, parse_poly_xt("t^2 - (x^3 + x + 1)", 3));
    return F;
}

std::shared_ptr<const FunctionField> e2() {
    static auto F = FunctionField::build(
        5, parse_poly_xt("t^3 + (4x^3 + 3x^2 + 1)t^2 + (3x^3 + 4x^2 + 4x + 2)t + 2x^3 + x", 5));
    return F;
}

// degree valuation of a rational function, as the valuation at infinity
// of k(x)
int deg_val(const RatFunc& r) { return r.den.deg() - r.num.deg(); }

}  // namespace

TEST_CASE("construction validates the defining polynomial") {
    CHECK_THROWS_WITH_AS(FunctionField::build(4, parse_poly_xt("t^2 - x", 4)),
                         "q must be a prime", FieldError);
    CHECK_THROWS_AS(FunctionField::build(3, parse_poly_xt("t^3 - x", 3)), FieldError);
    CHECK_THROWS_WITH_AS(FunctionField::build(3, parse_poly_xt("t^3 - x", 3)),
                         "wild ramification: deg_t f is divisible by q", FieldError);
    CHECK_THROWS_AS(FunctionField::build(3, parse_poly_xt("2t^2 - x", 3)), FieldError);
    CHECK_THROWS_AS(FunctionField::build(3, parse_poly_xt("t - x", 3)), FieldError);
    CHECK_THROWS_WITH_AS(FunctionField::build(3, parse_poly_xt("(t - x)^2", 3)),
                         "f is not squarefree", FieldError);
    CHECK_THROWS_WITH_AS(FunctionField::build(3, parse_poly_xt("t^2 - x^2", 3)),
                         "f is reducible", FieldError);
}

TEST_CASE("a degree bound for the coefficients") {
    CHECK(e1()->cf() == 2);
    CHECK(e2()->cf() == 3);
    auto F = FunctionField::build(3, parse_poly_xt("t^2 - (x^5 + x + 1)", 3));
    CHECK(F->cf() == 3);
}

TEST_CASE("element arithmetic closes over the defining relation") {
    auto F = e1();
    FieldElement t = F->gen();
    FieldElement t2 = F->mul(t, t);
    // t^2 = x^3 + x + 1
    CHECK(F->eq(t2, F->from_poly(parse_poly_x("x^3 + x + 1", 3))));
    FieldElement a = F->add(F->mul_rat(t, RatFunc(parse_poly_x("x + 1", 3))), F->one());
    CHECK(F->eq(F->mul(a, F->inv(a)), F->one()));
    CHECK(F->eq(F->pow(a, 5), F->mul(F->pow(a, 3), F->pow(a, 2))));
    CHECK(F->eq(F->pow(a, -2), F->inv(F->pow(a, 2))));
    CHECK(F->elt_to_string(a) == "(x + 1)*t + 1");
}

TEST_CASE("norm and trace against the defining coefficients") {
    auto F = e1();
    CHECK(F->elt_norm(F->gen()) == RatFunc(parse_poly_x("2x^3 + 2x + 2", 3)));
    CHECK(F->elt_trace(F->gen()) == RatFunc(Poly(3)));
    auto G = e2();
    CHECK(G->elt_norm(G->gen()) == RatFunc(parse_poly_x("3x^3 + 4x", 5)));
    CHECK(G->elt_trace(G->gen()) == RatFunc(parse_poly_x("x^3 + 2x^2 + 4", 5)));
    // multiplicativity on a pair without common structure
    FieldElement a = G->add(G->gen(), G->from_poly(parse_poly_x("x", 5)));
    FieldElement b = G->add(G->mul(G->gen(), G->gen()), G->one());
    CHECK(G->elt_norm(G->mul(a, b)) == G->elt_norm(a) * G->elt_norm(b));
}

TEST_CASE("the maximal order of e1 is the equation order") {
    auto F = e1();
    CHECK(F->order_den().is_one());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(F->order_num()[i][j] == (i == j ? Poly::constant(3, 1) : Poly(3)));
    CHECK(F->is_integral(F->gen()));
    CHECK_FALSE(F->is_integral(F->mul_rat(F->gen(), RatFunc(Poly::constant(3, 1), Poly::x(3)))));
}

TEST_CASE("finite splitting in e1 over the small primes") {
    auto F = e1();
    // x: t^2 - 1 factors into distinct roots
    const auto& over_x = F->primes_over(Poly::x(3));
    REQUIRE(over_x.size() == 2);
    for (const auto& P : over_x) {
        CHECK(P.e == 1);
        CHECK(P.f_res == 1);
        CHECK(F->val_fin(F->from_poly(Poly::x(3)), P) == 1);
    }
    // the residues of t at the two places are the two square roots of 1
    auto K = F->residue_field(over_x[0]);
    ExtElem r0 = F->residue(F->gen(), over_x[0]);
    ExtElem r1 = F->residue(F->gen(), over_x[1]);
    CHECK(r0 != r1);
    CHECK(K->is_one(K->mul(r0, r0)));
    CHECK(K->is_one(K->mul(r1, r1)));

    // x + 2 divides x^3 + x + 1, so t^2 ramifies
    const auto& over_r = F->primes_over(parse_poly_x("x + 2", 3));
    REQUIRE(over_r.size() == 1);
    CHECK(over_r[0].e == 2);
    CHECK(over_r[0].f_res == 1);
    CHECK(F->val_fin(F->gen(), over_r[0]) == 1);
    CHECK(F->val_fin(F->from_poly(parse_poly_x("x + 2", 3)), over_r[0]) == 2);

    // x + 1: t^2 - 2 stays irreducible
    const auto& over_i = F->primes_over(parse_poly_x("x + 1", 3));
    REQUIRE(over_i.size() == 1);
    CHECK(over_i[0].e == 1);
    CHECK(over_i[0].f_res == 2);
    CHECK(over_i[0].deg() == 2);
    CHECK(F->residue_field(over_i[0])->degree() == 2);
}

TEST_CASE("valuations are multiplicative and match the norm") {
    auto F = e1();
    std::vector<FieldElement> elems = {
        F->gen(), F->add(F->gen(), F->from_poly(Poly::x(3))),
        F->add(F->gen(), F->one()),
        F->add(F->mul(F->gen(), F->from_poly(parse_poly_x("x^2", 3))), F->from_poly(parse_poly_x("x + 2", 3)))};
    std::vector<Poly> ps = {Poly::x(3), parse_poly_x("x + 1", 3), parse_poly_x("x + 2", 3),
                            parse_poly_x("x^2 + 1", 3)};
    for (const auto& p : ps) {
        const auto& places = F->primes_over(p);
        for (const auto& a : elems)
            for (const auto& b : elems) {
                int va = 0, vb = 0, vab = 0;
                for (const auto& P : places) {
                    va += P.f_res * F->val_fin(a, P);
                    vb += P.f_res * F->val_fin(b, P);
                    vab += P.f_res * F->val_fin(F->mul(a, b), P);
                }
                CHECK(vab == va + vb);
            }
        // sum of f * v over the places equals the valuation of the norm
        for (const auto& a : elems) {
            int s = 0;
            for (const auto& P : places) s += P.f_res * F->val_fin(a, P);
            RatFunc nm = F->elt_norm(a);
            CHECK(s == rat_val(nm, p));
        }
    }
}

TEST_CASE("places at infinity of e1") {
    auto F = e1();
    const auto& inf = F->infinite_places();
    REQUIRE(inf.size() == 1);
    CHECK(inf[0].e == 2);
    CHECK(inf[0].deg == 1);
    CHECK(F->val_inf(F->from_poly(Poly::x(3)), 0) == -2);
    CHECK(F->val_inf(F->gen(), 0) == -3);
    CHECK(F->residue_field_inf(0)->degree() == 1);
    // v(a b) = v(a) + v(b) across the model transport
    FieldElement a = F->add(F->gen(), F->from_poly(Poly::x(3)));
    FieldElement b = F->add(F->one(), F->mul_rat(F->gen(), RatFunc(Poly::constant(3, 1), Poly::x(3))));
    CHECK(F->val_inf(F->mul(a, b), 0) == F->val_inf(a, 0) + F->val_inf(b, 0));
    CHECK(F->max_norm(F->gen()) == BigRat(3, 2));
}

TEST_CASE("the product formula closes over all places") {
    for (auto F : {e1(), e2()}) {
        std::vector<FieldElement> elems = {
            F->gen(), F->add(F->gen(), F->from_poly(Poly::x(F->q()))),
            F->add(F->mul(F->gen(), F->gen()), F->from_poly(parse_poly_x("x^2 + 1", F->q()))),
            F->div(F->add(F->gen(), F->one()), F->from_poly(parse_poly_x("x + 2", F->q())))};
        for (const auto& a : elems) {
            RatFunc nm = F->elt_norm(a);
            long total = 0;
            auto add_primes = [&](const Poly& part) {
                if (part.deg() < 1) return;
                for (const auto& [p, mult] : poly_factor(part).factors) {
                    (void)mult;
                    for (const auto& P : F->primes_over(p))
                        total += static_cast<long>(P.deg()) * F->val_fin(a, P);
                }
            };
            add_primes(nm.num);
            add_primes(nm.den);
            const auto& inf = F->infinite_places();
            for (size_t j = 0; j < inf.size(); ++j)
                total += static_cast<long>(inf[j].deg) * F->val_inf(a, j);
            CHECK(total == 0);
            // the norm's degree is carried by the places at infinity
            long dn = 0;
            for (size_t j = 0; j < inf.size(); ++j)
                dn += static_cast<long>(inf[j].deg) * F->val_inf(a, j);
            CHECK(dn == deg_val(nm));
        }
    }
}

TEST_CASE("residues and digits at a ramified place") {
    auto F = e1();
    const auto& P = F->primes_over(parse_poly_x("x + 2", 3))[0];
    auto K = F->residue_field(P);
    // x = -2 = 1 in the residue field, so 1/(x+1) reduces to inverse of 2
    FieldElement xi = F->from_ratfunc(RatFunc(Poly::constant(3, 1), parse_poly_x("x + 1", 3)));
    CHECK(F->residue(xi, P) == K->from_base(2));
    // digit(m) is zero below the valuation, nonzero at it, and undefined
    // above it
    CHECK(F->val_fin(F->gen(), P) == 1);
    CHECK(K->is_zero(F->digit(F->gen(), P, 0)));
    CHECK_FALSE(K->is_zero(F->digit(F->gen(), P, 1)));
    CHECK_THROWS_AS(F->digit(F->gen(), P, 2), std::domain_error);
    FieldElement t2 = F->mul(F->gen(), F->gen());
    CHECK(K->is_zero(F->digit(t2, P, 1)));
    CHECK_FALSE(K->is_zero(F->digit(t2, P, 2)));
    CHECK_THROWS_AS(F->digit(t2, P, 3), std::domain_error);
    CHECK_THROWS_AS(F->residue(F->inv(F->gen()), P), std::domain_error);
    // digits of a quotient start at the difference of valuations
    FieldElement u = F->uniformizer(P);
    CHECK(F->val_fin(u, P) == 1);
    CHECK(F->residue(F->div(F->gen(), u), P) ==
          F->digit(F->gen(), P, 1));
}

TEST_CASE("digit expansion reconstructs an element locally") {
    auto F = e1();
    const auto& P = F->primes_over(parse_poly_x("x + 2", 3))[0];
    auto K = F->residue_field(P);
    FieldElement a = F->add(F->gen(), F->from_poly(parse_poly_x("x^2 + x", 3)));
    int v = F->val_fin(a, P);
    CHECK(v == 0);
    // peel digits: after subtracting digit * pi^m the valuation climbs
    FieldElement rest = a;
    FieldElement pi = F->uniformizer(P);
    for (int m = v; m < v + 4; ++m) {
        ExtElem dm = F->digit(rest, P, m);
        if (K->is_zero(dm)) {
            CHECK(F->val_fin(rest, P) > m);
            continue;
        }
        // lift the digit through a constant (residue field is prime here)
        FieldElement lift = F->from_ratfunc(RatFunc::constant(3, dm[0]));
        rest = F->sub(rest, F->mul(lift, F->pow(pi, m)));
        if (!F->is_zero(rest)) CHECK(F->val_fin(rest, P) > m);
    }
    if (!F->is_zero(rest)) CHECK(F->val_fin(rest, P) >= v + 4);
}

TEST_CASE("reduced basis and genus of e1") {
    auto F = e1();
    const auto& rb = F->reduced_order_basis();
    REQUIRE(rb.norms.size() == 2);
    CHECK(rb.norms[0] == BigRat(0));
    CHECK(rb.norms[1] == BigRat(3, 2));
    CHECK(F->genus() == 1);
}

TEST_CASE("a hyperelliptic field of genus two") {
    auto F = FunctionField::build(3, parse_poly_xt("t^2 - (x^5 + 2x + 1)", 3));
    const auto& inf = F->infinite_places();
    REQUIRE(inf.size() == 1);
    CHECK(inf[0].e == 2);
    CHECK(inf[0].deg == 1);
    CHECK(F->genus() == 2);
    const auto& rb = F->reduced_order_basis();
    CHECK(rb.norms[1] == BigRat(5, 2));
}

TEST_CASE("a square factor under the radicand is absorbed by the order") {
    // x^5 + x + 1 = (x + 2)^2 (x^3 + 2x^2 + 1) over F_3, so this curve is
    // elliptic and its maximal order needs the denominator x + 2
    auto F = FunctionField::build(3, parse_poly_xt("t^2 - (x^5 + x + 1)", 3));
    CHECK(F->order_den() == parse_poly_x("x + 2", 3));
    CHECK(F->genus() == 1);
    const auto& over = F->primes_over(parse_poly_x("x + 2", 3));
    int sum = 0;
    for (const auto& P : over) sum += P.e * P.f_res;
    CHECK(sum == 2);
}

TEST_CASE("construction and infinite places of e2") {
    auto F = e2();
    const auto& inf = F->infinite_places();
    REQUIRE(inf.size() == 2);
    CHECK(inf[0].e == 1);
    CHECK(inf[0].deg == 1);
    CHECK(inf[1].e == 1);
    CHECK(inf[1].deg == 2);
    // the equation order over u is not maximal there
    CHECK(F->umodel()->order_den().deg() > 0);
    CHECK(F->val_inf(F->from_poly(Poly::x(5)), 0) == -1);
    CHECK(F->val_inf(F->from_poly(Poly::x(5)), 1) == -1);
    CHECK(F->genus() >= 2);
}

TEST_CASE("splitting of x + 4 in e2") {
    auto F = e2();
    const auto& over = F->primes_over(parse_poly_x("x + 4", 5));
    REQUIRE(over.size() == 2);
    CHECK(over[0].e == 1);
    CHECK(over[1].e == 1);
    CHECK(over[0].deg() == 1);
    CHECK(over[1].deg() == 2);
}

TEST_CASE("uniformizers exist at every place over the first primes") {
    for (auto F : {e1(), e2()}) {
        for (uint32_t a = 0; a < 3; ++a) {
            Poly p = Poly(F->q(), {a, 1});
            for (const auto& P : F->primes_over(p)) {
                CHECK(F->val_fin(F->uniformizer(P), P) == 1);
                CHECK(F->is_integral(F->uniformizer(P)));
            }
        }
    }
}
