#include "normeq/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace normeq {

BigInt::BigInt(int64_t v) {
    neg_ = v < 0;
    uint64_t m = neg_ ? (~static_cast<uint64_t>(v) + 1) : static_cast<uint64_t>(v);
    while (m) {
        mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg) r = -r;
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

bool BigInt::fits_i64() const {
    if (mag_.size() > 2) return false;
    uint64_t m = 0;
    for (size_t i = 0; i < mag_.size(); ++i) m |= static_cast<uint64_t>(mag_[i]) << (32 * i);
    return neg_ ? m <= (1ull << 63) : m < (1ull << 63);
}

int64_t BigInt::to_i64() const {
    uint64_t m = 0;
    for (size_t i = 0; i < mag_.size(); ++i) m |= static_cast<uint64_t>(mag_[i]) << (32 * i);
    return neg_ ? -static_cast<int64_t>(m) : static_cast<int64_t>(m);
}

size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    uint32_t top = mag_.back();
    size_t bits = 0;
    while (top) { ++bits; top >>= 1; }
    return bits + 32 * (mag_.size() - 1);
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (s < 0) { s += (1ll << 32); borrow = 1; }
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.neg_ == b.neg_) {
        r.neg_ = a.neg_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) { r.neg_ = a.neg_; r.mag_ = BigInt::sub_mag(a.mag_, b.mag_); }
        else       { r.neg_ = b.neg_; r.mag_ = BigInt::sub_mag(b.mag_, a.mag_); }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.neg_ = a.neg_ != b.neg_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.mag_.size(); ++j) {
            uint64_t s = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
            r.mag_[i + j] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        size_t k = i + b.mag_.size();
        while (carry) {
            uint64_t s = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

// schoolbook long division on 32-bit words, quotient toward zero
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) { q = BigInt(); r = a; return; }
    // normalize so divisor's top word has its high bit set (Knuth D)
    int shift = 0;
    for (uint32_t top = b.mag_.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [](const std::vector<uint32_t>& v, int s) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= s ? (v[i] << s) : v[i];
            if (s) out[i + 1] |= static_cast<uint32_t>((static_cast<uint64_t>(v[i]) << s) >> 32);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint32_t> u = shl(a.mag_, shift), v = shl(b.mag_, shift);
    size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    std::vector<uint32_t> quo(m + 1, 0);
    const uint64_t base = 1ull << 32;
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= base ||
               (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            borrow = 0;
            if (t < 0) { t += static_cast<int64_t>(base); borrow = 1; }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {  // qhat was one too large
            t += static_cast<int64_t>(base);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(t);
        quo[j] = static_cast<uint32_t>(qhat);
    }
    q = BigInt();
    q.mag_ = std::move(quo);
    q.neg_ = a.neg_ != b.neg_;
    q.trim();
    // denormalize remainder
    u.resize(n);
    if (shift) {
        for (size_t i = 0; i < n; ++i) {
            u[i] >>= shift;
            if (i + 1 < n) u[i] |= u[i + 1] << (32 - shift);
        }
    }
    r = BigInt();
    r.mag_ = std::move(u);
    r.neg_ = a.neg_;
    r.trim();
}

void BigInt::fdivmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    divmod(a, b, q, r);
    if (!r.is_zero() && (r.is_neg() != b.is_neg())) {
        q = q - BigInt(1);
        r = r + b;
    }
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (a.neg_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = b.neg_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, uint64_t e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = abs();
    std::string out;
    BigInt ten(10), q, r;
    while (!t.is_zero()) {
        divmod(t, ten, q, r);
        out.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.mag_[0])));
        t = q;
    }
    if (neg_) out.push_back('-');
    return std::string(out.rbegin(), out.rend());
}

double BigInt::to_double() const {
    double v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return neg_ ? -v : v;
}

// ---------------------------------------------------------------- BigRat

BigRat::BigRat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("BigRat: zero denominator");
    normalize();
}

void BigRat::normalize() {
    if (den_.is_neg()) { num_ = -num_; den_ = -den_; }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

BigRat operator+(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
BigRat operator-(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
BigRat operator*(const BigRat& a, const BigRat& b) {
    return BigRat(a.num_ * b.num_, a.den_ * b.den_);
}
BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.is_zero()) throw std::domain_error("BigRat: division by zero");
    return BigRat(a.num_ * b.den_, a.den_ * b.num_);
}
BigRat BigRat::operator-() const { return BigRat(-num_, den_); }

bool operator==(const BigRat& a, const BigRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}
std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

BigInt BigRat::floor() const {
    BigInt q, r;
    BigInt::fdivmod(num_, den_, q, r);
    return q;
}

BigInt BigRat::ceil() const { return -((-*this).floor()); }

BigInt BigRat::round_half_up() const {
    // floor(x + 1/2): exact, ties go up
    BigRat shifted = *this + BigRat(1, 2);
    return shifted.floor();
}

std::string BigRat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double BigRat::to_double() const { return num_.to_double() / den_.to_double(); }

}  // namespace normeq
