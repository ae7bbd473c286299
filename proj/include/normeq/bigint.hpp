// bigint.hpp — arbitrary-precision signed integers and exact rationals.
// Sizes here are small (lattice entries, regulators, class numbers), so the
// representation favors simplicity: sign + little-endian base-2^32 magnitude.
#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace normeq {

class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return mag_.empty(); }
    bool is_neg() const { return neg_; }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    // value fits in int64? (used for small fast paths)
    bool fits_i64() const;
    int64_t to_i64() const;  // requires fits_i64()

    size_t bit_length() const;
    bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // truncated division (C semantics: quotient rounds toward zero)
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    // floor division and the matching nonneg-when-b>0 remainder
    static void fdivmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, uint64_t e);

    std::string to_string() const;
    double to_double() const;

private:
    bool neg_ = false;
    std::vector<uint32_t> mag_;  // little-endian, no leading zero words

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

inline bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

// Exact rational with canonical form: denominator > 0, gcd(num, den) = 1.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRat(int64_t n) : num_(n), den_(1) {}
    BigRat(BigInt n, BigInt d);
    BigRat(int64_t n, int64_t d) : BigRat(BigInt(n), BigInt(d)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    friend BigRat operator+(const BigRat& a, const BigRat& b);
    friend BigRat operator-(const BigRat& a, const BigRat& b);
    friend BigRat operator*(const BigRat& a, const BigRat& b);
    friend BigRat operator/(const BigRat& a, const BigRat& b);
    BigRat operator-() const;

    friend bool operator==(const BigRat& a, const BigRat& b);
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b);

    BigInt floor() const;
    BigInt ceil() const;
    // nearest integer, ties toward +infinity (the rounding used by the
    // compact-representation doubling step and by Babai rounding)
    BigInt round_half_up() const;

    std::string to_string() const;
    double to_double() const;

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace normeq
