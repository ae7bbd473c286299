#include <memory>

#include "doctest.h"
#include "normeq/polyparse.hpp"
#include "normeq/sunit.hpp"

using namespace normeq;

namespace {

std::shared_ptr<const ClassGroup> cg_of(uint32_t q, const char* s) {
    return ClassGroup::build(FunctionField::build(q, parse_poly_xt(s, q)));
}

std::shared_ptr<const ClassGroup> e1() {
    static auto cg = cg_of(3, "t^2 - (x^3 + x + 1)");
    return cg;
}

std::shared_ptr<const ClassGroup> e2() {
    static auto cg = cg_of(5,
                           "t^3 + (4*x^3 + 3*x^2 + 1)*t^2 + (3*x^3 + 4*x^2 + 4*x + 2)*t "
                           "+ (2*x^3 + x)");
    return cg;
}

}  // namespace

TEST_CASE("units at a single infinite place are only the constants") {
    auto S = sunit_basis(e1(), {});
    CHECK(S.size() == 1);
    CHECK(S.rows.empty());
    CHECK(S.index == BigInt(1));
    CHECK(S.reg2 == BigInt(1));
}

TEST_CASE("unit lattice over a ramified place matches the class order") {
    auto cg = e1();
    const FunctionField& K = cg->field();
    auto pl = K.primes_over(parse_poly_x("x + 2", 3));
    REQUIRE(pl.size() == 1);
    auto S = sunit_basis(cg, {pl[0]});
    REQUIRE(S.rows.size() == 1);
    // the lattice is k (1, -1) where k is the order of the class of
    // P - Pinf, and the index it leaves in the degree zero lattice is k
    long k = S.rows[0][0].to_i64();
    CHECK(k != 0);
    if (k < 0) k = -k;
    CHECK(S.index == BigInt(k));
    CHECK(BigInt(4) % S.index == BigInt(0));
    CHECK(S.reg2 == BigInt(2 * k * k));
    auto g = principal_gen(K, S.row_divisor(S.rows[0]));
    REQUIRE(g.has_value());
    CHECK(div_key(div_of_element(K, *g)) == div_key(S.row_divisor(S.rows[0])));
}

TEST_CASE("units over a split prime generate the expected lattice") {
    auto cg = e1();
    const FunctionField& K = cg->field();
    auto pl = K.primes_over(Poly::x(3));
    REQUIRE(pl.size() == 2);
    auto S = sunit_basis(cg, {pl[0], pl[1]});
    REQUIRE(S.rows.size() == 2);
    // the two degree one places and the infinite place generate the
    // whole class group
    CHECK(S.index == cg->h0());
    for (size_t i = 0; i < S.rows.size(); ++i) {
        auto g = principal_gen(K, S.row_divisor(S.rows[i]));
        REQUIRE(g.has_value());
        CHECK(div_key(div_of_element(K, *g)) == div_key(S.row_divisor(S.rows[i])));
    }
}

TEST_CASE("infinite unit lattice of the degree three field") {
    auto S = sunit_basis(e2(), {});
    REQUIRE(S.rows.size() == 1);
    long a = S.rows[0][0].to_i64(), b = S.rows[0][1].to_i64();
    CHECK(((a == -694 && b == 347) || (a == 694 && b == -347)));
    CHECK(S.index == BigInt(347));
    CHECK(S.reg2 == BigInt(602045));
}

TEST_CASE("units over a split prime of the degree three field") {
    auto cg = e2();
    const FunctionField& K = cg->field();
    auto pl = K.primes_over(parse_poly_x("x + 4", 5));
    REQUIRE(pl.size() == 2);
    auto S = sunit_basis(cg, {pl[0], pl[1]});
    CHECK(S.size() == 4);
    REQUIRE(S.rows.size() == 3);
    CHECK(cg->h0() % S.index == BigInt(0));
    CHECK(S.reg2 > BigInt(0));
    // every row is a degree zero vector over S
    for (const auto& z : S.rows) {
        BigInt d(0);
        for (size_t j = 0; j < z.size(); ++j) d = d + z[j] * BigInt(S.degs[j]);
        CHECK(d == BigInt(0));
    }
}
