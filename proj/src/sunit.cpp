// S-units from the class group: the valuation lattice is the kernel of
// the class map on degree zero S-divisors, and every kernel vector is
// realized by an actual generator
#include "normeq/sunit.hpp"

#include <algorithm>
#include <functional>

namespace normeq {

Divisor SUnitBasis::place_divisor(size_t j, int c) const {
    const FunctionField& K = cg->field();
    std::vector<std::pair<PrimePlace, int>> f;
    std::vector<int> inf(K.infinite_places().size(), 0);
    if (j < fin.size())
        f.emplace_back(fin[j], c);
    else
        inf[K.infinite_places()[j - fin.size()].index] = c;
    return div_make(K, std::move(f), std::move(inf));
}

Divisor SUnitBasis::row_divisor(const IVec& z) const {
    const FunctionField& K = cg->field();
    Divisor D = div_zero(K);
    for (size_t j = 0; j < z.size(); ++j) {
        long c = z[j].to_i64();
        if (c) D = div_add(K, D, place_divisor(j, static_cast<int>(c)));
    }
    return D;
}

SUnitBasis sunit_basis(std::shared_ptr<const ClassGroup> cg, std::vector<PrimePlace> fin,
                       long verify_cap) {
    const FunctionField& K = cg->field();
    SUnitBasis S;
    S.cg = cg;
    S.fin = std::move(fin);
    S.ninf = K.infinite_places().size();
    {
        std::vector<std::pair<Poly, int>> seen;
        for (const auto& P : S.fin) seen.emplace_back(P.p, P.idx);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::invalid_argument("repeated place in S");
    }
    for (const auto& P : S.fin) S.degs.push_back(P.deg());
    for (const auto& ip : K.infinite_places()) S.degs.push_back(ip.deg);
    size_t s = S.degs.size();

    // the sublattice of Z^S of degree zero
    IMat degcol(s, IVec(1, BigInt(0)));
    for (size_t j = 0; j < s; ++j) degcol[j][0] = BigInt(S.degs[j]);
    IMat B0 = left_kernel(degcol);
    size_t nb = B0.size();

    // kernel of the class map on the degree zero sublattice
    const auto& inv = cg->invariants();
    IMat ker;
    if (inv.empty() || nb == 0) {
        ker = imat_identity(nb);
    } else {
        size_t r = inv.size();
        IMat M(nb + r, IVec(r, BigInt(0)));
        for (size_t i = 0; i < nb; ++i) {
            auto dl = cg->dlog(S.row_divisor(B0[i]));
            for (size_t t = 0; t < r; ++t) M[i][t] = BigInt(dl[t]);
        }
        for (size_t t = 0; t < r; ++t) M[nb + t][t] = BigInt(inv[t]);
        for (const auto& row : left_kernel(M))
            ker.emplace_back(row.begin(), row.begin() + nb);
    }
    if (ker.size() != nb) throw std::logic_error("unit lattice has the wrong rank");

    auto KH = hnf_rows(ker);
    S.index = BigInt(1);
    for (size_t i = 0; i < KH.rank; ++i) S.index *= KH.h[i][i];

    IMat rows;
    for (const auto& z : ker) rows.push_back(imat_vec_mul(z, B0));
    auto H = hnf_rows(rows);
    rows.assign(H.h.begin(), H.h.begin() + H.rank);
    S.rows = lll_reduce(rows);
    S.reg2 = gram_det(S.rows);

    // walk the quotient of the degree zero lattice by the unit lattice;
    // no class away from the origin may be trivial
    if (S.index > BigInt(1) && verify_cap > 0 && S.index <= BigInt(verify_cap)) {
        std::vector<long> diag;
        for (size_t i = 0; i < KH.rank; ++i) diag.push_back(KH.h[i][i].to_i64());
        std::string id = cg->canon(div_zero(K)).key;
        bool first = true;
        std::function<void(size_t, const Divisor&, const std::string&)> walk =
            [&](size_t lvl, const Divisor& rep, const std::string& key) {
                if (lvl == diag.size()) {
                    if (first)
                        first = false;
                    else if (key == id)
                        throw std::logic_error("a principal divisor escaped the unit lattice");
                    return;
                }
                Divisor cur = rep;
                std::string ck = key;
                for (long a = 0; a < diag[lvl]; ++a) {
                    walk(lvl + 1, cur, ck);
                    if (a + 1 < diag[lvl]) {
                        auto w = cg->canon(div_add(K, cur, S.row_divisor(B0[lvl])));
                        cur = w.rep;
                        ck = w.key;
                    }
                }
            };
        walk(0, div_zero(K), id);
    }
    return S;
}

}  // namespace normeq
