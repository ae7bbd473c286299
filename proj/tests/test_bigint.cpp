#include "doctest.h"

#include "normeq/bigint.hpp"

#include <cstdint>
#include <random>

using namespace normeq;

TEST_CASE("small arithmetic round-trips through int64") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        int64_t a = static_cast<int64_t>(rng() % 2000001) - 1000000;
        int64_t b = static_cast<int64_t>(rng() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_i64() == a + b);
        CHECK((A - B).to_i64() == a - b);
        CHECK((A * B).to_i64() == a * b);
        if (b != 0) {
            CHECK((A / B).to_i64() == a / b);
            CHECK((A % B).to_i64() == a % b);
        }
    }
}

TEST_CASE("string round-trip and big multiplication") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-987654321098765432109876543210");
    CHECK(a.to_string() == "123456789012345678901234567890");
    CHECK(b.to_string() == "-987654321098765432109876543210");
    CHECK((a * b).to_string() ==
          "-121932631137021795226185032733622923332237463801111263526900");
    CHECK((a + b).to_string() == "-864197532086419753208641975320");
}

TEST_CASE("divmod identities on random big values") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        BigInt a(1), b(1);
        int wa = 1 + static_cast<int>(rng() % 4), wb = 1 + static_cast<int>(rng() % 3);
        for (int w = 0; w < wa; ++w) a = a * BigInt(static_cast<int64_t>(rng() >> 16)) + BigInt(static_cast<int64_t>(rng() % 1000));
        for (int w = 0; w < wb; ++w) b = b * BigInt(static_cast<int64_t>(rng() >> 24)) + BigInt(static_cast<int64_t>(rng() % 1000));
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // truncated: r has the sign of a (or zero)
        if (!r.is_zero()) CHECK(r.is_neg() == a.is_neg());
        BigInt fq, fr;
        BigInt::fdivmod(a, b, fq, fr);
        CHECK(fq * b + fr == a);
        if (!fr.is_zero()) CHECK(fr.is_neg() == b.is_neg());
    }
}

TEST_CASE("gcd and pow") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::pow(BigInt(5), 10).to_i64() == 9765625);
    CHECK(BigInt::pow(BigInt(-2), 63).to_string() == "-9223372036854775808");
    CHECK(BigInt::pow(BigInt(5), 0) == BigInt(1));
}

TEST_CASE("comparisons and bit length") {
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt(-5) < BigInt(-3));
    CHECK(BigInt(0).bit_length() == 0);
    CHECK(BigInt(1).bit_length() == 1);
    CHECK(BigInt(255).bit_length() == 8);
    CHECK(BigInt::pow(BigInt(2), 100).bit_length() == 101);
}

TEST_CASE("rationals normalize and order correctly") {
    BigRat a(BigInt(6), BigInt(-4));
    CHECK(a.num() == BigInt(-3));
    CHECK(a.den() == BigInt(2));
    CHECK(a.to_string() == "-3/2");
    BigRat b(1, 3);
    CHECK(a + b == BigRat(-7, 6));
    CHECK(a * b == BigRat(-1, 2));
    CHECK(a < b);
    CHECK(BigRat(2, 4) == BigRat(1, 2));
}

TEST_CASE("rational floor, ceil, and half-up rounding") {
    CHECK(BigRat(7, 2).floor() == BigInt(3));
    CHECK(BigRat(7, 2).ceil() == BigInt(4));
    CHECK(BigRat(7, 2).round_half_up() == BigInt(4));
    CHECK(BigRat(-7, 2).round_half_up() == BigInt(-3));
    CHECK(BigRat(-1, 3).round_half_up() == BigInt(0));
    CHECK(BigRat(5, 3).round_half_up() == BigInt(2));
    CHECK(BigRat(-5, 3).floor() == BigInt(-2));
    CHECK(BigRat(-5, 3).ceil() == BigInt(-1));
    CHECK(BigRat(BigInt(4)).round_half_up() == BigInt(4));
    // 2527/1735 is the Babai coefficient in the worked unit-lattice reduction
    CHECK(BigRat(2527, 1735).round_half_up() == BigInt(1));
}
