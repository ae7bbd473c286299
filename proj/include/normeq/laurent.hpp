// laurent.hpp — truncated Laurent series, used for expansions at the place
// at infinity (u = 1/x). Generic over the coefficient field so the same
// code serves F_q (public embeddings of rational functions) and F_{q^m}
// (residue-field digit expansions at infinite places).
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "normeq/poly.hpp"

namespace normeq {

// Coefficient-ring adapters. Both expose: Elem, zero(), one(), is_zero,
// add, sub, neg, mul, inv, eq.
struct PrimeRing {
    uint32_t q;
    using Elem = uint32_t;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { return fq_add(a, b, q); }
    Elem sub(Elem a, Elem b) const { return fq_sub(a, b, q); }
    Elem neg(Elem a) const { return fq_neg(a, q); }
    Elem mul(Elem a, Elem b) const { return fq_mul(a, b, q); }
    Elem inv(Elem a) const { return fq_inv(a, q); }
};

struct ExtRing {
    std::shared_ptr<const ExtField> K;
    using Elem = ExtElem;
    Elem zero() const { return K->zero(); }
    Elem one() const { return K->one(); }
    bool is_zero(const Elem& a) const { return K->is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return K->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return K->sub(a, b); }
    Elem neg(const Elem& a) const { return K->neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return K->mul(a, b); }
    Elem inv(const Elem& a) const { return K->inv(a); }
};

// Series sum_{i >= off} c[i - off] * u^i, trusted for exponents < prec.
// Invariants: off + len <= prec; leading stored coefficient nonzero unless
// the series is zero-to-precision (empty c).
template <class Ring>
struct SeriesT {
    Ring R;
    int off = 0;
    int prec = 0;
    std::vector<typename Ring::Elem> c;

    SeriesT() = default;
    SeriesT(Ring r, int precision) : R(r), off(precision), prec(precision) {}

    static SeriesT zero(Ring r, int precision) { return SeriesT(r, precision); }
    static SeriesT monomial(Ring r, typename Ring::Elem a, int e, int precision) {
        SeriesT s(r, precision);
        if (!r.is_zero(a) && e < precision) {
            s.off = e;
            s.c = {a};
        }
        return s;
    }

    bool zero_to_prec() const { return c.empty(); }
    // valuation if a nonzero coefficient is stored; prec otherwise
    int val_or_prec() const { return c.empty() ? prec : off; }
    typename Ring::Elem lead() const { return c.empty() ? R.zero() : c.front(); }
    typename Ring::Elem coeff(int e) const {
        if (e < off || e >= off + static_cast<int>(c.size())) return R.zero();
        return c[static_cast<size_t>(e - off)];
    }

    void normalize() {
        size_t k = 0;
        while (k < c.size() && R.is_zero(c[k])) ++k;
        if (k) {
            c.erase(c.begin(), c.begin() + static_cast<long>(k));
            off += static_cast<int>(k);
        }
        if (off + static_cast<int>(c.size()) > prec)
            c.resize(static_cast<size_t>(prec - off));
        while (!c.empty() && R.is_zero(c.back())) c.pop_back();
        if (c.empty()) off = prec;
    }

    friend SeriesT operator+(const SeriesT& a, const SeriesT& b) {
        SeriesT r(a.R, std::min(a.prec, b.prec));
        if (a.zero_to_prec() && b.zero_to_prec()) return r;
        int lo = std::min(a.val_or_prec(), b.val_or_prec());
        if (lo >= r.prec) return r;
        r.off = lo;
        r.c.assign(static_cast<size_t>(r.prec - lo), a.R.zero());
        for (int e = lo; e < r.prec; ++e)
            r.c[static_cast<size_t>(e - lo)] = a.R.add(a.coeff(e), b.coeff(e));
        r.normalize();
        return r;
    }

    SeriesT operator-() const {
        SeriesT r = *this;
        for (auto& v : r.c) v = R.neg(v);
        return r;
    }

    friend SeriesT operator-(const SeriesT& a, const SeriesT& b) { return a + (-b); }

    friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
        // trusted where every contributing term is: min over the two of
        // (my valuation lower bound + other's precision)
        int p = std::min(a.val_or_prec() + b.prec, b.val_or_prec() + a.prec);
        SeriesT r(a.R, p);
        if (a.zero_to_prec() || b.zero_to_prec()) return r;
        r.off = a.off + b.off;
        r.c.assign(static_cast<size_t>(p - r.off), a.R.zero());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.R.is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size() && i + j < r.c.size(); ++j)
                r.c[i + j] = a.R.add(r.c[i + j], a.R.mul(a.c[i], b.c[j]));
        }
        r.normalize();
        return r;
    }

    // multiplicative inverse; requires a nonzero leading coefficient
    SeriesT inverse() const {
        if (zero_to_prec()) throw std::domain_error("series inverse of zero");
        int terms = prec - off;  // relative precision carried by *this
        SeriesT r(R, -off + terms);
        r.off = -off;
        r.c.assign(static_cast<size_t>(terms), R.zero());
        auto linv = R.inv(c[0]);
        r.c[0] = linv;
        for (int k = 1; k < terms; ++k) {
            // coefficient of u^(r.off + k): solve sum_j c[j] * r[k-j] = 0
            auto s = R.zero();
            for (int j = 1; j <= k && j < static_cast<int>(c.size()); ++j)
                s = R.add(s, R.mul(c[static_cast<size_t>(j)], r.c[static_cast<size_t>(k - j)]));
            r.c[static_cast<size_t>(k)] = R.neg(R.mul(s, linv));
        }
        r.normalize();
        return r;
    }

    SeriesT truncated(int new_prec) const {
        SeriesT r = *this;
        if (new_prec < r.prec) {
            r.prec = new_prec;
            r.normalize();
        }
        return r;
    }

    std::string to_string(const std::string& var = "u") const {
        std::string out;
        for (size_t i = 0; i < c.size(); ++i) {
            if (R.is_zero(c[i])) continue;
            if (!out.empty()) out += " + ";
            if constexpr (std::is_same_v<typename Ring::Elem, uint32_t>) {
                out += std::to_string(c[i]);
            } else {
                out += R.K->to_string(c[i]);
            }
            int e = off + static_cast<int>(i);
            if (e != 0) out += "*" + var + "^" + std::to_string(e);
        }
        if (out.empty()) out = "0";
        return out + " + O(" + var + "^" + std::to_string(prec) + ")";
    }
};

using LaurentSeries = SeriesT<PrimeRing>;
using ExtSeries = SeriesT<ExtRing>;

// Expansion of a rational function at infinity in u = 1/x (x maps to u^-1).
LaurentSeries laurent_embed(const RatFunc& f, int prec);

// Same expansion with coefficients promoted into an extension field.
ExtSeries laurent_embed_ext(const RatFunc& f, const std::shared_ptr<const ExtField>& K, int prec);

}  // namespace normeq
