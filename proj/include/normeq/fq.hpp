// fq.hpp — arithmetic in prime fields F_q and in small extensions F_{q^m}.
// q is a machine-word prime; extension elements are coordinate vectors
// modulo a fixed irreducible. Everything is exact.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace normeq {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline uint32_t fq_add(uint32_t a, uint32_t b, uint32_t q) {
    uint32_t s = a + b;
    return s >= q ? s - q : s;
}
inline uint32_t fq_sub(uint32_t a, uint32_t b, uint32_t q) {
    return a >= b ? a - b : a + q - b;
}
inline uint32_t fq_neg(uint32_t a, uint32_t q) { return a ? q - a : 0; }
inline uint32_t fq_mul(uint32_t a, uint32_t b, uint32_t q) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % q);
}
inline uint32_t fq_pow(uint32_t a, uint64_t e, uint32_t q) {
    uint32_t r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1) r = fq_mul(r, a, q);
        a = fq_mul(a, a, q);
        e >>= 1;
    }
    return r;
}
inline uint32_t fq_inv(uint32_t a, uint32_t q) {
    if (a == 0) throw std::domain_error("fq_inv: zero");
    return fq_pow(a, q - 2, q);
}

// F_{q^m} = F_q[z]/(modulus), modulus monic irreducible of degree m.
// Elements are vectors of length m (coordinates in the z power basis).
class ExtField;
using ExtElem = std::vector<uint32_t>;

class ExtField {
public:
    // modulus chosen deterministically (first irreducible in lexicographic
    // order of coefficient vectors), so the field presentation is stable
    static std::shared_ptr<const ExtField> make(uint32_t q, uint32_t m);

    uint32_t q() const { return q_; }
    uint32_t degree() const { return m_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }

    ExtElem zero() const { return ExtElem(m_, 0); }
    ExtElem one() const;
    ExtElem from_base(uint32_t a) const;
    ExtElem gen() const;  // the class of z
    bool is_zero(const ExtElem& a) const;
    bool is_one(const ExtElem& a) const;

    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem neg(const ExtElem& a) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem mul_base(const ExtElem& a, uint32_t c) const;
    ExtElem inv(const ExtElem& a) const;
    ExtElem pow(ExtElem a, uint64_t e) const;
    ExtElem frobenius(const ExtElem& a) const { return pow(a, q_); }

    // iterate all q^m elements in a fixed order (index -> element)
    uint64_t size() const;
    ExtElem elem_at(uint64_t idx) const;

    std::string to_string(const ExtElem& a) const;

private:
    ExtField(uint32_t q, uint32_t m, std::vector<uint32_t> mod)
        : q_(q), m_(m), mod_(std::move(mod)) {}
    uint32_t q_, m_;
    std::vector<uint32_t> mod_;  // monic degree-m, coefficient list c0..cm
};

}  // namespace normeq
