// degree-zero divisor class group: order by point counting, structure by
// a closure walk over the places of small degree
#include "normeq/classgroup.hpp"

#include <algorithm>
#include <set>

#include "normeq/intlin.hpp"

namespace normeq {

namespace {

long xgcd_long(long a, long b, long& u, long& v) {
    // invariant: r0 = u0*a + v0*b, r1 = u1*a + v1*b
    long r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        long qt = r0 / r1;
        std::swap(r0 -= qt * r1, r1);
        std::swap(u0 -= qt * u1, u1);
        std::swap(v0 -= qt * v1, v1);
    }
    if (r0 < 0) { r0 = -r0; u0 = -u0; v0 = -v0; }
    u = u0;
    v = v0;
    return r0;
}

// a place as a coefficient-one divisor
struct Atom {
    bool is_inf = false;
    size_t inf_index = 0;
    PrimePlace P;
    int deg = 0;
};

Divisor atom_divisor(const FunctionField& F, const Atom& a, int coeff) {
    std::vector<int> inf(F.infinite_places().size(), 0);
    std::vector<std::pair<PrimePlace, int>> fin;
    if (a.is_inf)
        inf[a.inf_index] = coeff;
    else
        fin.emplace_back(a.P, coeff);
    return div_make(F, std::move(fin), std::move(inf));
}

}  // namespace

long ClassGroup::nplaces(int d) const {
    if (d < 1 || d >= static_cast<int>(adeg_.size()))
        throw std::invalid_argument("place count is not tracked at this degree");
    return adeg_[d];
}

std::shared_ptr<const ClassGroup> ClassGroup::build(std::shared_ptr<const FunctionField> F) {
    auto cg = std::shared_ptr<ClassGroup>(new ClassGroup());
    cg->F_ = F;
    const FunctionField& K = *F;
    const int g = K.genus();
    cg->g_ = g;

    // places of degree up to max(g, 1) generate the class group and are
    // kept whole; larger degrees only enter through the counts a_d, and
    // for those the splitting type of each prime is enough
    std::vector<Atom> places;
    int swept = 0;
    auto sweep_to = [&](int cap) {
        for (const auto& ip : K.infinite_places())
            if (ip.deg > swept && ip.deg <= cap)
                places.push_back(Atom{true, ip.index, PrimePlace{}, ip.deg});
        for (int dp = swept + 1; dp <= cap; ++dp)
            for (const auto& p : monic_irreducibles(K.q(), dp))
                for (const auto& P : K.primes_over(p))
                    places.push_back(Atom{false, 0, P, P.deg()});
        swept = std::max(swept, cap);
    };
    sweep_to(std::max(g, 1));

    int dcert = std::min(2 * g, g + 2);
    cg->adeg_.assign(static_cast<size_t>(dcert) + 1, 0);
    for (const auto& ip : K.infinite_places())
        if (ip.deg <= dcert) ++cg->adeg_[static_cast<size_t>(ip.deg)];
    for (int dp = 1; dp <= dcert; ++dp)
        for (const auto& p : monic_irreducibles(K.q(), dp))
            for (int f : K.residue_degrees(p))
                if (f * dp <= dcert) ++cg->adeg_[static_cast<size_t>(f * dp)];

    // numerator of the zeta function by Newton's identities from the
    // point counts N_i = sum_{d | i} d a_d, then the functional equation
    std::vector<BigInt> N(static_cast<size_t>(dcert) + 1), s(static_cast<size_t>(dcert) + 1);
    for (int i = 1; i <= dcert; ++i) {
        long n = 0;
        for (int d = 1; d <= i; ++d)
            if (i % d == 0) n += static_cast<long>(d) * cg->adeg_[d];
        N[i] = BigInt(n);
        s[i] = BigInt::pow(BigInt(K.q()), i) + BigInt(1) - N[i];
    }
    cg->c_.assign(2 * g + 1, BigInt(0));
    cg->c_[0] = BigInt(1);
    for (int k = 1; k <= g; ++k) {
        BigInt acc(0);
        for (int i = 1; i <= k; ++i) acc += s[i] * cg->c_[k - i];
        BigInt qk, r;
        BigInt::divmod(-acc, BigInt(k), qk, r);
        if (!(r == BigInt(0))) throw std::logic_error("point counts are not consistent");
        cg->c_[k] = qk;
    }
    for (int i = 1; i <= g; ++i) cg->c_[g + i] = BigInt::pow(BigInt(K.q()), i) * cg->c_[g - i];
    // the high coefficients predict the counts past the genus; checking a
    // window of them guards the enumeration, and the closure walk below
    // independently pins the class number
    std::vector<BigInt> sc(static_cast<size_t>(dcert) + 1);
    for (int k = 1; k <= dcert; ++k) {
        BigInt acc = BigInt(k) * cg->c_[k];
        for (int j = 1; j < k; ++j) acc += sc[j] * cg->c_[k - j];
        sc[k] = -acc;
        if (k > g && !(BigInt::pow(BigInt(K.q()), k) + BigInt(1) - sc[k] == N[k]))
            throw std::logic_error("point counts fail the functional equation");
    }
    cg->h0_ = BigInt(0);
    for (int k = 0; k <= 2 * g; ++k) cg->h0_ += cg->c_[k];
    if (cg->h0_ <= BigInt(0)) throw std::logic_error("class number must be positive");

    // base point: a divisor of degree one, a single place when one exists
    auto atom_less = [](const Atom& a, const Atom& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.is_inf != b.is_inf) return a.is_inf;
        if (a.is_inf) return a.inf_index < b.inf_index;
        if (!(a.P.p == b.P.p)) return a.P.p < b.P.p;
        return a.P.idx < b.P.idx;
    };
    std::sort(places.begin(), places.end(), atom_less);
    bool have_d0 = false;
    while (!have_d0) {
        for (const auto& a : places)
            if (a.deg == 1) {
                cg->d0_ = atom_divisor(K, a, 1);
                have_d0 = true;
                break;
            }
        if (have_d0) break;
        // no rational place: combine places with coprime degrees
        long grun = 0;
        std::vector<std::pair<size_t, long>> combo;
        for (size_t i = 0; i < places.size() && grun != 1; ++i) {
            long d = places[i].deg;
            if (grun == 0) {
                grun = d;
                combo = {{i, 1}};
            } else if (d % grun != 0) {
                long u, v;
                long gn = xgcd_long(grun, d, u, v);
                for (auto& [j, cf] : combo) {
                    (void)j;
                    cf *= u;
                }
                combo.emplace_back(i, v);
                grun = gn;
            }
        }
        if (grun == 1) {
            Divisor D = div_zero(K);
            for (const auto& [i, cf] : combo)
                D = div_add(K, D, atom_divisor(K, places[i], static_cast<int>(cf)));
            cg->d0_ = D;
            have_d0 = true;
        } else {
            if (swept >= 2 * g + 3) throw std::logic_error("no divisor of degree one found");
            sweep_to(swept + 1);
            std::sort(places.begin(), places.end(), atom_less);
        }
    }

    // closure walk: adjoin [P - deg(P) D0] for places of degree <= g until
    // the table holds all h0 classes; each adjunction records the relation
    // k g_t = sum a_i g_i, so the relation matrix has determinant h0
    CanonRep id = cg->canon(div_zero(K));
    cg->id_key_ = id.key;
    std::map<std::string, std::vector<long>> cls;
    cls[id.key] = {};
    std::vector<std::pair<Divisor, std::vector<long>>> reps = {{id.rep, {}}};
    IMat rel;
    for (const auto& a : places) {
        if (BigInt(static_cast<int64_t>(cls.size())) == cg->h0_) break;
        if (a.deg > std::max(g, 1)) break;
        Divisor ghat = div_sub(K, atom_divisor(K, a, 1), div_scale(K, cg->d0_, a.deg));
        CanonRep w = cg->canon(ghat);
        long k = 1;
        while (cls.find(w.key) == cls.end()) {
            w = cg->canon(div_add(K, w.rep, ghat));
            ++k;
            if (BigInt(k) > cg->h0_) throw std::logic_error("walk escaped the class group");
        }
        if (k == 1) continue;
        const std::vector<long> base = cls.at(w.key);
        size_t t = cg->gens_.size();
        cg->gens_.push_back(ghat);
        IVec row(t + 1, BigInt(0));
        for (size_t i = 0; i < base.size(); ++i) row[i] = BigInt(-base[i]);
        row[t] = BigInt(k);
        rel.push_back(std::move(row));
        auto snapshot = reps;
        for (const auto& [r0, co] : snapshot) {
            Divisor cur = r0;
            std::vector<long> coords = co;
            coords.resize(t + 1, 0);
            for (long j = 1; j < k; ++j) {
                CanonRep nr = cg->canon(div_add(K, cur, ghat));
                cur = nr.rep;
                coords[t] = j;
                if (!cls.emplace(nr.key, coords).second)
                    throw std::logic_error("coset walk revisited a class");
                reps.emplace_back(cur, coords);
            }
        }
    }
    if (!(BigInt(static_cast<int64_t>(cls.size())) == cg->h0_))
        throw std::logic_error("small places do not generate the class group");
    cg->classes_ = std::move(cls);

    size_t m = cg->gens_.size();
    for (auto& r : rel) r.resize(m, BigInt(0));
    if (m > 0) {
        auto S = smith_normal_form(rel);
        if (S.rank != m) throw std::logic_error("relation lattice is not full");
        cg->snf_v_ = S.v;
        for (size_t i = 0; i < m; ++i) {
            long d = S.d[i][i].to_i64();
            cg->snf_d_.push_back(d);
            if (d > 1) cg->inv_.push_back(d);
        }
    }
    return cg;
}

namespace {

// divisor of a nonzero section of L(E): poles sit inside E and zeros have
// degree at most deg E, so of the factors of the norm only the small ones
// and the coefficient denominators ever need to be split
Divisor section_divisor(const FunctionField& K, const FieldElement& a, const Divisor& E) {
    long m = div_deg(K, E);
    Poly den = Poly::constant(K.q(), 1);
    for (const auto& c : a.co)
        if (!c.is_zero()) den = Poly::divexact(den * c.den, Poly::gcd(den, c.den)).monic();
    std::set<Poly> cand;
    for (const auto& [P, c] : E.fin) {
        (void)c;
        cand.insert(P.p);
    }
    if (den.deg() > 0)
        for (const auto& [p, mult] : poly_factor(den).factors) {
            (void)mult;
            cand.insert(p);
        }
    Poly carrier = K.elt_norm(K.mul_rat(a, RatFunc(den))).num.monic();
    if (carrier.deg() > 0)
        for (const auto& [p, mult] : poly_factor(carrier).factors) {
            (void)mult;
            if (p.deg() <= m) cand.insert(p);
        }
    std::vector<std::pair<PrimePlace, int>> fin;
    for (const auto& p : cand)
        for (const auto& P : K.primes_over(p)) {
            int v = K.val_fin(a, P);
            if (v != 0) fin.emplace_back(P, v);
        }
    std::vector<int> inf(K.infinite_places().size(), 0);
    for (size_t j = 0; j < inf.size(); ++j) inf[j] = K.val_inf(a, j);
    Divisor out = div_make(K, std::move(fin), std::move(inf));
    if (div_deg(K, out) != 0) throw std::logic_error("section divisor must have degree zero");
    return out;
}

}  // namespace

ClassGroup::CanonRep ClassGroup::canon(const Divisor& D) const {
    const FunctionField& K = *F_;
    if (div_deg(K, D) != 0) throw std::invalid_argument("canonical form needs a degree zero divisor");
    std::string dkey = div_key(D);
    {
        std::lock_guard<std::mutex> lk(canon_mu_);
        auto it = canon_cache_.find(dkey);
        if (it != canon_cache_.end()) return it->second;
    }
    for (int m = 0; m <= g_; ++m) {
        Divisor E = div_add(K, D, div_scale(K, d0_, m));
        auto B = rr_basis(K, E);
        if (B.empty()) continue;
        size_t dim = B.size();
        if (dim > 12) throw std::logic_error("section space too large to enumerate");
        // smallest effective divisor linearly equivalent to E: scan the
        // projective space of sections, leading coefficient one
        std::string best;
        Divisor bestA;
        for (size_t lead = 0; lead < dim; ++lead) {
            size_t nfree = dim - 1 - lead;
            std::vector<uint32_t> dig(nfree, 0);
            while (true) {
                FieldElement a = B[lead];
                for (size_t i = 0; i < nfree; ++i)
                    if (dig[i])
                        a = K.add(a, K.mul_rat(B[lead + 1 + i], RatFunc::constant(K.q(), dig[i])));
                Divisor A = div_add(K, section_divisor(K, a, E), E);
                if (!div_is_effective(A))
                    throw std::logic_error("section has a pole outside the divisor");
                std::string key = div_key(A);
                if (best.empty() || key < best) {
                    best = key;
                    bestA = A;
                }
                size_t p = 0;
                while (p < nfree && dig[p] == K.q() - 1) dig[p++] = 0;
                if (p == nfree) break;
                ++dig[p];
            }
        }
        CanonRep out{std::to_string(m) + "|" + best, div_sub(K, bestA, div_scale(K, d0_, m))};
        std::lock_guard<std::mutex> lk(canon_mu_);
        canon_cache_.emplace(dkey, out);
        return out;
    }
    throw std::logic_error("no effective representative within the genus bound: " + div_key(D));
}

bool ClassGroup::is_trivial_class(const Divisor& D) const { return canon(D).key == id_key_; }

std::vector<long> ClassGroup::dlog(const Divisor& D) const {
    size_t m = gens_.size();
    if (m == 0) return {};
    auto it = classes_.find(canon(D).key);
    if (it == classes_.end()) throw std::logic_error("class missing from the table");
    IVec a(m, BigInt(0));
    for (size_t i = 0; i < it->second.size(); ++i) a[i] = BigInt(it->second[i]);
    IVec y = imat_vec_mul(a, snf_v_);
    std::vector<long> out;
    for (size_t i = 0; i < m; ++i) {
        if (snf_d_[i] <= 1) continue;
        BigInt q, r;
        BigInt::fdivmod(y[i], BigInt(snf_d_[i]), q, r);
        out.push_back(r.to_i64());
    }
    return out;
}

}  // namespace normeq
