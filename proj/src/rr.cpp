// divisor arithmetic and Riemann-Roch spaces
#include "normeq/rr.hpp"

#include <algorithm>
#include <map>

namespace normeq {

namespace {

bool fin_less(const std::pair<PrimePlace, int>& a, const std::pair<PrimePlace, int>& b) {
    if (!(a.first.p == b.first.p)) return a.first.p < b.first.p;
    return a.first.idx < b.first.idx;
}

}  // namespace

Divisor div_zero(const FunctionField& F) {
    return Divisor{{}, std::vector<int>(F.infinite_places().size(), 0)};
}

Divisor div_make(const FunctionField& F, std::vector<std::pair<PrimePlace, int>> fin,
                 std::vector<int> inf) {
    if (inf.size() != F.infinite_places().size())
        throw std::invalid_argument("divisor needs one coefficient per place at infinity");
    std::map<std::string, std::pair<PrimePlace, int>> merge;
    for (auto& [P, e] : fin) {
        if (e == 0) continue;
        auto it = merge.find(P.key());
        if (it == merge.end())
            merge.emplace(P.key(), std::make_pair(P, e));
        else
            it->second.second += e;
    }
    Divisor d;
    d.inf = std::move(inf);
    for (auto& [k, pe] : merge) {
        (void)k;
        if (pe.second != 0) d.fin.push_back(std::move(pe));
    }
    std::sort(d.fin.begin(), d.fin.end(), fin_less);
    return d;
}

Divisor div_add(const FunctionField& F, const Divisor& a, const Divisor& b) {
    std::vector<std::pair<PrimePlace, int>> fin = a.fin;
    fin.insert(fin.end(), b.fin.begin(), b.fin.end());
    std::vector<int> inf = a.inf;
    for (size_t j = 0; j < inf.size(); ++j) inf[j] += b.inf[j];
    return div_make(F, std::move(fin), std::move(inf));
}

Divisor div_neg(const FunctionField& F, const Divisor& a) { return div_scale(F, a, -1); }

Divisor div_sub(const FunctionField& F, const Divisor& a, const Divisor& b) {
    return div_add(F, a, div_neg(F, b));
}

Divisor div_scale(const FunctionField& F, const Divisor& a, long k) {
    (void)F;
    Divisor d = a;
    if (k == 0) return Divisor{{}, std::vector<int>(a.inf.size(), 0)};
    for (auto& [P, e] : d.fin) e *= static_cast<int>(k);
    for (auto& e : d.inf) e *= static_cast<int>(k);
    return d;
}

bool div_eq(const Divisor& a, const Divisor& b) {
    if (a.inf != b.inf || a.fin.size() != b.fin.size()) return false;
    for (size_t i = 0; i < a.fin.size(); ++i)
        if (a.fin[i].first.key() != b.fin[i].first.key() ||
            !(a.fin[i].first.p == b.fin[i].first.p) || a.fin[i].second != b.fin[i].second)
            return false;
    return true;
}

bool div_is_effective(const Divisor& a) {
    for (const auto& [P, e] : a.fin) {
        (void)P;
        if (e < 0) return false;
    }
    for (int e : a.inf)
        if (e < 0) return false;
    return true;
}

long div_deg(const FunctionField& F, const Divisor& a) {
    long d = 0;
    for (const auto& [P, e] : a.fin) d += static_cast<long>(P.deg()) * e;
    const auto& inf = F.infinite_places();
    for (size_t j = 0; j < a.inf.size(); ++j) d += static_cast<long>(inf[j].deg) * a.inf[j];
    return d;
}

std::string div_key(const Divisor& a) {
    std::string s;
    for (const auto& [P, e] : a.fin) s += P.key() + "^" + std::to_string(e) + ";";
    s += "|";
    for (int e : a.inf) s += std::to_string(e) + ",";
    return s;
}

Divisor div_of_element(const FunctionField& F, const FieldElement& a) {
    if (F.is_zero(a)) throw std::domain_error("divisor of zero");
    // clear the k[x]-denominator so the norm of the integral part has no
    // hidden cancellation across places
    auto co = a.co;
    Poly den = Poly::constant(F.q(), 1);
    for (const auto& c : co)
        if (!c.is_zero()) den = Poly::divexact(den * c.den, Poly::gcd(den, c.den)).monic();
    FieldElement ai = F.mul_rat(a, RatFunc(den));
    Poly carrier = F.elt_norm(ai).num.monic();
    if (den.deg() > 0) carrier = carrier * den;
    std::vector<std::pair<PrimePlace, int>> fin;
    if (carrier.deg() > 0)
        for (const auto& [p, mult] : poly_factor(carrier).factors) {
            (void)mult;
            for (const auto& P : F.primes_over(p)) {
                int v = F.val_fin(a, P);
                if (v != 0) fin.emplace_back(P, v);
            }
        }
    std::vector<int> inf(F.infinite_places().size());
    FieldElement ta = F.transport(a);
    for (size_t j = 0; j < inf.size(); ++j) inf[j] = F.umodel()->val_fin(ta, F.uprime(j));
    return div_make(F, std::move(fin), std::move(inf));
}

std::vector<FieldElement> rr_basis(const FunctionField& F, const Divisor& D) {
    size_t n = static_cast<size_t>(F.degree());
    std::vector<std::pair<PrimePlace, int>> neg;
    for (const auto& [P, e] : D.fin) neg.emplace_back(P, -e);
    FracIdeal I = ideal_from_support(F, neg);
    std::vector<FieldElement> basis;
    RatFunc dinv(Poly::constant(F.q(), 1), I.den);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Poly> col(n);
        for (size_t i = 0; i < n; ++i) col[i] = I.num[i][j];
        basis.push_back(F.mul_rat(F.from_omega(col), dinv));
    }
    auto red = F.reduce_module(std::move(basis), D.inf);
    std::vector<FieldElement> out;
    for (size_t i = 0; i < red.elems.size(); ++i) {
        if (BigRat(0) < red.norms[i]) break;
        long room = (-red.norms[i]).floor().to_i64();
        for (long v = 0; v <= room; ++v)
            out.push_back(v == 0 ? red.elems[i]
                                 : F.mul(red.elems[i],
                                         F.from_poly(Poly::monomial(F.q(), 1, static_cast<size_t>(v)))));
    }
    return out;
}

long rr_dim(const FunctionField& F, const Divisor& D) {
    return static_cast<long>(rr_basis(F, D).size());
}

std::optional<FieldElement> principal_gen(const FunctionField& F, const Divisor& D) {
    if (div_deg(F, D) != 0) throw std::invalid_argument("principal test needs degree zero");
    auto basis = rr_basis(F, div_neg(F, D));
    if (basis.empty()) return std::nullopt;
    if (basis.size() > 1) throw std::logic_error("degree-zero divisor with multidimensional space");
    return basis[0];
}

}  // namespace normeq
