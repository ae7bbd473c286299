#include "normeq/fq.hpp"

namespace normeq {

namespace {

// polynomial helpers on raw coefficient vectors over F_q (local to this
// file; the public Poly type lives one layer up and uses these semantics)
using Vec = std::vector<uint32_t>;

void vtrim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec vmulmod(const Vec& a, const Vec& b, const Vec& mod, uint32_t q) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % q);
    }
    // reduce by monic mod
    size_t m = mod.size() - 1;
    for (size_t i = r.size(); i-- > m;) {
        uint32_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (size_t j = 0; j < m; ++j)
            r[i - m + j] = fq_sub(r[i - m + j], fq_mul(c, mod[j], q), q);
    }
    r.resize(m);
    vtrim(r);
    return r;
}

bool dense_irreducible(const Vec& f, uint32_t q) {
    // Rabin test on the monic polynomial f
    size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    auto powmod_x = [&](uint64_t e) {
        // x^(q^e) mod f via repeated q-power of x
        Vec r{0, 1};
        for (uint64_t i = 0; i < e; ++i) {
            // r <- r^q mod f
            Vec acc{1};
            Vec base = r;
            uint64_t k = q;
            while (k) {
                if (k & 1) acc = vmulmod(acc, base, f, q);
                base = vmulmod(base, base, f, q);
                k >>= 1;
            }
            r = acc;
        }
        return r;
    };
    auto vgcd = [&](Vec a, Vec b) {
        vtrim(a);
        vtrim(b);
        while (!b.empty()) {
            // a mod b with monic-ized b
            uint32_t li = fq_inv(b.back(), q);
            Vec bb = b;
            for (auto& c : bb) c = fq_mul(c, li, q);
            while (a.size() >= bb.size() && !a.empty()) {
                uint32_t c = a.back();
                if (c) {
                    size_t off = a.size() - bb.size();
                    for (size_t j = 0; j < bb.size(); ++j)
                        a[off + j] = fq_sub(a[off + j], fq_mul(c, bb[j], q), q);
                }
                vtrim(a);
                if (a.size() < bb.size()) break;
            }
            std::swap(a, b);
        }
        return a;
    };
    Vec xq = powmod_x(n);
    // x^(q^n) == x mod f
    Vec t = xq;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = fq_sub(t[1], 1, q);
    vtrim(t);
    if (!t.empty()) return false;
    // for each prime l | n: gcd(x^(q^(n/l)) - x, f) == 1
    size_t m = n;
    for (size_t l = 2; l * l <= m; ++l) {
        if (m % l) continue;
        while (m % l == 0) m /= l;
        Vec h = powmod_x(n / l);
        if (h.size() < 2) h.resize(2, 0);
        h[1] = fq_sub(h[1], 1, q);
        vtrim(h);
        Vec g = vgcd(h, f);
        if (g.size() != 1) return false;
    }
    if (m > 1) {
        Vec h = powmod_x(n / m);
        if (h.size() < 2) h.resize(2, 0);
        h[1] = fq_sub(h[1], 1, q);
        vtrim(h);
        Vec g = vgcd(h, f);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

std::shared_ptr<const ExtField> ExtField::make(uint32_t q, uint32_t m) {
    if (!is_prime_u32(q)) throw std::invalid_argument("ExtField: q must be prime");
    if (m == 0) throw std::invalid_argument("ExtField: degree must be positive");
    if (m == 1) {
        std::vector<uint32_t> mod{0, 1};  // z
        return std::shared_ptr<const ExtField>(new ExtField(q, 1, std::move(mod)));
    }
    // first monic irreducible of degree m in lexicographic coefficient order
    std::vector<uint32_t> f(m + 1, 0);
    f[m] = 1;
    for (;;) {
        if (dense_irreducible(f, q)) break;
        // increment c0..c(m-1) as a base-q counter
        size_t i = 0;
        while (i < m) {
            if (++f[i] < q) break;
            f[i] = 0;
            ++i;
        }
        if (i == m) throw std::logic_error("ExtField: no irreducible found");
    }
    return std::shared_ptr<const ExtField>(new ExtField(q, m, std::move(f)));
}

ExtElem ExtField::one() const {
    ExtElem e(m_, 0);
    e[0] = 1;
    return e;
}

ExtElem ExtField::from_base(uint32_t a) const {
    ExtElem e(m_, 0);
    e[0] = a % q_;
    return e;
}

ExtElem ExtField::gen() const {
    ExtElem e(m_, 0);
    if (m_ == 1) {
        // z == -mod_[0] in the degree-1 case (modulus z - root)
        e[0] = fq_neg(mod_[0], q_);
    } else {
        e[1] = 1;
    }
    return e;
}

bool ExtField::is_zero(const ExtElem& a) const {
    for (uint32_t c : a)
        if (c) return false;
    return true;
}

bool ExtField::is_one(const ExtElem& a) const {
    if (a.empty() || a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i]) return false;
    return true;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
    ExtElem r(m_);
    for (uint32_t i = 0; i < m_; ++i) r[i] = fq_add(a[i], b[i], q_);
    return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
    ExtElem r(m_);
    for (uint32_t i = 0; i < m_; ++i) r[i] = fq_sub(a[i], b[i], q_);
    return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
    ExtElem r(m_);
    for (uint32_t i = 0; i < m_; ++i) r[i] = fq_neg(a[i], q_);
    return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
    std::vector<uint32_t> prod = vmulmod(a, b, mod_, q_);
    prod.resize(m_, 0);
    return prod;
}

ExtElem ExtField::mul_base(const ExtElem& a, uint32_t c) const {
    ExtElem r(m_);
    for (uint32_t i = 0; i < m_; ++i) r[i] = fq_mul(a[i], c, q_);
    return r;
}

ExtElem ExtField::pow(ExtElem a, uint64_t e) const {
    ExtElem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

ExtElem ExtField::inv(const ExtElem& a) const {
    if (is_zero(a)) throw std::domain_error("ExtField::inv: zero");
    // a^(q^m - 2); the exponent fits u64 for the desk-scale fields used here
    uint64_t order = 1;
    for (uint32_t i = 0; i < m_; ++i) order *= q_;
    return pow(a, order - 2);
}

uint64_t ExtField::size() const {
    uint64_t s = 1;
    for (uint32_t i = 0; i < m_; ++i) s *= q_;
    return s;
}

ExtElem ExtField::elem_at(uint64_t idx) const {
    ExtElem e(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        e[i] = static_cast<uint32_t>(idx % q_);
        idx /= q_;
    }
    return e;
}

std::string ExtField::to_string(const ExtElem& a) const {
    std::string s = "[";
    for (uint32_t i = 0; i < m_; ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

}  // namespace normeq
