#include "normeq/compactrep.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace normeq {

namespace {

// floor division, then round half up for the doubling targets
long fdiv(long a, long b) {
    long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

long round_shift(long a, int k) {
    if (k == 0) return a;
    return fdiv(a + (1L << (k - 1)), 1L << k);
}

// exponent of beta[i] in the value is -(1 << (L-1-i)); the chain is kept
// short enough that these fit a long
long chain_weight(size_t len, size_t i) {
    if (len > 62) throw std::logic_error("denominator chain too long");
    return 1L << (len - 1 - i);
}

}  // namespace

size_t distinguished_inf(const FunctionField& F) {
    const auto& inf = F.infinite_places();
    for (size_t j = 0; j < inf.size(); ++j)
        if (inf[j].deg == 1) return j;
    throw FieldError("no infinite place of degree one");
}

FieldElement reduce_ideal(const FunctionField& F, const FracIdeal& I, const std::vector<int>& v) {
    const auto& inf = F.infinite_places();
    if (v.size() != inf.size()) throw std::invalid_argument("target vector length mismatch");
    size_t dist = distinguished_inf(F);
    // sections of E + l*P_dist lie in I and have v_P >= v at infinity
    std::vector<std::pair<PrimePlace, int>> fin;
    for (const auto& [P, e] : ideal_support(F, I)) fin.emplace_back(P, -e);
    std::vector<int> dinf(inf.size());
    for (size_t j = 0; j < inf.size(); ++j) dinf[j] = -v[j];
    Divisor E = div_make(F, std::move(fin), std::move(dinf));
    long d0 = -div_deg(F, E);
    long g = F.genus();
    for (long l = d0; l <= d0 + g; ++l) {
        Divisor El = E;
        El.inf[dist] += static_cast<int>(l);
        auto bas = rr_basis(F, El);
        if (!bas.empty()) return bas.front();
    }
    throw std::logic_error("reduction found no section");
}

CompactRep comp_rep(const FunctionField& F, const FracIdeal& I, const std::vector<int>& V) {
    const auto& inf = F.infinite_places();
    if (V.size() != inf.size()) throw std::invalid_argument("target vector length mismatch");
    CompactRep out;
    out.mu = reduce_ideal(F, I, std::vector<int>(inf.size(), 0));
    std::vector<long> diff(inf.size());
    long mx = 0;
    for (size_t j = 0; j < inf.size(); ++j) {
        diff[j] = F.val_inf(out.mu, j) - V[j];
        mx = std::max(mx, std::abs(diff[j]));
    }
    if (mx == 0) return out;
    // one step past log2 of the gap, rounding the log to nearest half up,
    // capped at floor(log2(gap + genus)) + 1; the genus slack of the
    // reduction scan absorbs what the extra halving step would have fixed
    int k = 0;
    while ((1L << (k + 1)) <= mx) ++k;
    int l = k + 1;
    if (mx * mx >= (1L << (2 * k + 1))) ++l;
    long cap = mx + F.genus();
    int kb = 0;
    while ((1L << (kb + 1)) <= cap) ++kb;
    l = std::min(l, kb + 1);
    FracIdeal B = ideal_one(F);
    FieldElement bprev = F.one();
    std::vector<long> vbeta(inf.size(), 0);
    for (int i = 1; i <= l; ++i) {
        std::vector<int> t(inf.size());
        for (size_t j = 0; j < inf.size(); ++j) {
            long tj = round_shift(diff[j], l - i) - 2 * vbeta[j];
            t[j] = static_cast<int>(tj);
        }
        B = ideal_mul(F, ideal_pow(F, ideal_principal(F, bprev), -2), ideal_mul(F, B, B));
        FieldElement bi = reduce_ideal(F, B, t);
        for (size_t j = 0; j < inf.size(); ++j) vbeta[j] = 2 * vbeta[j] + F.val_inf(bi, j);
        out.beta.push_back(bi);
        bprev = bi;
    }
    return out;
}

CompactRep cr_from_element(const FunctionField& F, const FieldElement& a) {
    if (F.is_zero(a)) throw std::invalid_argument("zero has no compact representation");
    return CompactRep{a, {}};
}

long cr_val_fin(const FunctionField& F, const CompactRep& a, const PrimePlace& P) {
    long v = F.val_fin(a.mu, P);
    for (size_t i = 0; i < a.beta.size(); ++i)
        v -= chain_weight(a.beta.size(), i) * F.val_fin(a.beta[i], P);
    return v;
}

long cr_val_inf(const FunctionField& F, const CompactRep& a, size_t j) {
    long v = F.val_inf(a.mu, j);
    for (size_t i = 0; i < a.beta.size(); ++i)
        v -= chain_weight(a.beta.size(), i) * F.val_inf(a.beta[i], j);
    return v;
}

std::vector<std::pair<PrimePlace, long>> cr_support(const FunctionField& F, const CompactRep& a) {
    // combine the supports of the components with their chain weights
    std::map<std::pair<Poly, int>, std::pair<PrimePlace, long>> acc;
    auto take = [&](const FieldElement& e, long w) {
        for (const auto& [P, c] : div_of_element(F, e).fin) {
            auto key = std::make_pair(P.p, P.idx);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, std::make_pair(P, w * c));
            else
                it->second.second += w * c;
        }
    };
    take(a.mu, 1);
    for (size_t i = 0; i < a.beta.size(); ++i) take(a.beta[i], -chain_weight(a.beta.size(), i));
    std::vector<std::pair<PrimePlace, long>> out;
    for (auto& [key, pc] : acc)
        if (pc.second != 0) out.push_back(pc);
    return out;
}

bool cr_is_integral(const FunctionField& F, const CompactRep& a) {
    for (const auto& [P, v] : cr_support(F, a))
        if (v < 0) return false;
    return true;
}

RatFunc cr_norm(const FunctionField& F, const CompactRep& a) {
    Poly num = Poly::constant(F.q(), 1);
    Poly den = Poly::constant(F.q(), 1);
    std::map<Poly, long> exps;
    for (const auto& [P, v] : cr_support(F, a)) exps[P.p] += v * P.f_res;
    for (const auto& [p, e] : exps) {
        if (e > 0)
            num = num * Poly::pow(p, e);
        else if (e < 0)
            den = den * Poly::pow(p, -e);
    }
    return RatFunc(num, den);
}

bool cr_associate(const FunctionField& F, const CompactRep& a, const CompactRep& b) {
    auto sa = cr_support(F, a);
    auto sb = cr_support(F, b);
    if (sa.size() != sb.size()) return false;
    for (size_t i = 0; i < sa.size(); ++i) {
        if (!(sa[i].first.p == sb[i].first.p) || sa[i].first.idx != sb[i].first.idx ||
            sa[i].second != sb[i].second)
            return false;
    }
    return true;
}

CompactRep cr_mul(const FunctionField& F, const CompactRep& a, const CompactRep& b) {
    size_t L = std::max(a.beta.size(), b.beta.size());
    CompactRep out;
    out.mu = F.mul(a.mu, b.mu);
    out.beta.assign(L, F.one());
    // right-align the chains: the last entry carries weight one in both
    size_t oa = L - a.beta.size(), ob = L - b.beta.size();
    for (size_t i = 0; i < a.beta.size(); ++i) out.beta[oa + i] = a.beta[i];
    for (size_t i = 0; i < b.beta.size(); ++i) out.beta[ob + i] = F.mul(out.beta[ob + i], b.beta[i]);
    return out;
}

CompactRep cr_pow(const FunctionField& F, const CompactRep& a, long e) {
    const auto& inf = F.infinite_places();
    std::vector<std::pair<PrimePlace, int>> sup;
    for (const auto& [P, v] : cr_support(F, a)) {
        long ev = v * e;
        if (ev > std::numeric_limits<int>::max() || ev < std::numeric_limits<int>::min())
            throw std::overflow_error("power exponent too large");
        sup.emplace_back(P, static_cast<int>(ev));
    }
    std::vector<int> V(inf.size());
    for (size_t j = 0; j < inf.size(); ++j) V[j] = static_cast<int>(cr_val_inf(F, a, j) * e);
    return comp_rep(F, ideal_from_support(F, sup), V);
}

FieldElement cr_expand(const FunctionField& F, const CompactRep& a) {
    FieldElement d = F.one();
    for (const auto& b : a.beta) d = F.mul(F.mul(d, d), b);
    return F.div(a.mu, d);
}

bool cr_matches_element(const FunctionField& F, const CompactRep& a, const FieldElement& b) {
    // cross multiplied so nothing is inverted: a == cb iff mu == c b prod
    FieldElement d = F.one();
    for (const auto& bi : a.beta) d = F.mul(F.mul(d, d), bi);
    FieldElement rhs = F.mul(b, d);
    // the constant is read off any nonzero coordinate pair
    for (size_t i = 0; i < a.mu.co.size(); ++i) {
        bool zl = a.mu.co[i].is_zero(), zr = rhs.co[i].is_zero();
        if (zl != zr) return false;
        if (zl) continue;
        RatFunc c = a.mu.co[i] / rhs.co[i];
        if (c.den.deg() != 0 || c.num.deg() != 0) return false;
        return F.eq(a.mu, F.mul_rat(rhs, c));
    }
    return false;  // mu is zero, not a value
}

std::string cr_to_json(const FunctionField& F, const CompactRep& a) {
    (void)F;
    // elements as vectors of power-basis coordinate strings, low to high
    auto elt = [](std::ostringstream& os, const FieldElement& e) {
        os << "[";
        for (size_t i = 0; i < e.co.size(); ++i) {
            if (i) os << ", ";
            os << "\"" << e.co[i].to_string("x") << "\"";
        }
        os << "]";
    };
    std::ostringstream os;
    os << "{\"mu\": ";
    elt(os, a.mu);
    os << ", \"betas\": [";
    for (size_t i = 0; i < a.beta.size(); ++i) {
        if (i) os << ", ";
        elt(os, a.beta[i]);
    }
    os << "], \"l\": " << a.beta.size() << "}";
    return os.str();
}

}  // namespace normeq
