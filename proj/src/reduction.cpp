// basis reduction against the places at infinity, and the invariants
// that fall out of the reduced basis of the maximal order
#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "normeq/field.hpp"
#include "normeq/fqlin.hpp"

namespace normeq {

namespace {

long floordiv(long a, long b) {
    long d = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --d;
    return d;
}

}  // namespace

FunctionField::ReducedModule FunctionField::reduce_module(std::vector<FieldElement> basis,
                                                          const std::vector<int>& twist) const {
    if (!with_infinity_) throw std::logic_error("field was built without places at infinity");
    size_t n = basis.size();
    size_t m = inf_.size();
    if (twist.size() != m) throw std::invalid_argument("twist length must match the places at infinity");
    long L = 1;
    for (const auto& pl : inf_) L = std::lcm(L, static_cast<long>(pl.e));

    auto val_row = [&](const FieldElement& b) {
        if (is_zero(b)) throw std::invalid_argument("reduce_module needs nonzero elements");
        FieldElement tb = transport(b);
        std::vector<int> v(m);
        for (size_t j = 0; j < m; ++j) v[j] = umodel_->val_fin(tb, uprime(j));
        return v;
    };
    std::vector<std::vector<int>> vals(n);
    std::vector<long> mh(n);
    auto mu_hat = [&](size_t i) {
        long best = 0;
        bool first = true;
        for (size_t j = 0; j < m; ++j) {
            long v = (L / inf_[j].e) * (-static_cast<long>(vals[i][j]) - twist[j]);
            if (first || v > best) best = v;
            first = false;
        }
        return best;
    };
    for (size_t i = 0; i < n; ++i) {
        vals[i] = val_row(basis[i]);
        mh[i] = mu_hat(i);
    }

    long maxabs = 8;
    for (size_t i = 0; i < n; ++i) maxabs = std::max(maxabs, std::abs(mh[i]));
    long guard = 100000 + 16 * L * static_cast<long>(n) * (maxabs + 8);
    long iter = 0;

    while (true) {
        if (++iter > guard) throw std::logic_error("reduction did not terminate");
        std::map<long, std::vector<size_t>> groups;
        for (size_t i = 0; i < n; ++i) groups[((mh[i] % L) + L) % L].push_back(i);
        bool replaced = false;
        for (const auto& [res, idxs] : groups) {
            (void)res;
            // a single element always achieves its own maximum
            if (idxs.size() < 2) continue;
            long mumax = mh[idxs[0]];
            for (size_t i : idxs) mumax = std::max(mumax, mh[i]);
            std::vector<size_t> pj;
            std::vector<int> vstar;
            size_t dim = 0;
            std::vector<size_t> offs;
            for (size_t j = 0; j < m; ++j) {
                long ej = inf_[j].e;
                if (((ej * mumax) % L + L) % L != 0) continue;
                pj.push_back(j);
                vstar.push_back(static_cast<int>(-(ej * mumax / L) - twist[j]));
                offs.push_back(dim);
                dim += static_cast<size_t>(inf_[j].deg);
            }
            if (pj.empty()) throw std::logic_error("no place participates at the group maximum");
            // every element of the group enters at the common level
            // mumax; scaling by x multiplies each leading digit by a unit
            // of the residue field, so a dependency here is a dependency
            // at the level of its lowest power of x
            std::vector<size_t> order;
            for (size_t i : idxs)
                if (mh[i] < mumax) order.push_back(i);
            for (size_t i : idxs)
                if (mh[i] == mumax) order.push_back(i);
            FqSpan span(dim, q_);
            std::vector<size_t> accepted_idx;
            std::vector<long> accepted_s;
            for (size_t oi = 0; oi < order.size() && !replaced; ++oi) {
                size_t i = order[oi];
                long s = (mumax - mh[i]) / L;
                FieldElement elt = basis[i];
                if (s > 0) elt = mul(elt, from_poly(Poly::monomial(q_, 1, static_cast<size_t>(s))));
                FieldElement telt = transport(elt);
                FqVec col(dim, 0);
                for (size_t jj = 0; jj < pj.size(); ++jj) {
                    ExtElem dg = umodel_->digit(telt, uprime(pj[jj]), vstar[jj]);
                    for (size_t c = 0; c < dg.size(); ++c) col[offs[jj] + c] = dg[c];
                }
                auto dep = span.insert(col);
                if (!dep) {
                    accepted_idx.push_back(i);
                    accepted_s.push_back(s);
                    continue;
                }
                // x^s b_i = sum dep_k x^{s_k} b_k on the leading digits;
                // divide out the lowest power of x and rewrite the basis
                // element sitting at that level
                long smin = s;
                for (size_t k = 0; k < dep->size(); ++k)
                    if ((*dep)[k]) smin = std::min(smin, accepted_s[k]);
                size_t target = i;
                if (smin < s)
                    for (size_t k = 0; k < dep->size(); ++k)
                        if ((*dep)[k] && accepted_s[k] == smin) target = accepted_idx[k];
                FieldElement nb = basis[i];
                if (s > smin)
                    nb = mul(nb, from_poly(Poly::monomial(q_, 1, static_cast<size_t>(s - smin))));
                for (size_t k = 0; k < dep->size(); ++k) {
                    if (!(*dep)[k]) continue;
                    Poly coef =
                        Poly::monomial(q_, (*dep)[k], static_cast<size_t>(accepted_s[k] - smin));
                    nb = sub(nb, mul(basis[accepted_idx[k]], from_poly(coef)));
                }
                if (is_zero(nb)) throw std::logic_error("reduction produced zero; not a basis");
                basis[target] = nb;
                vals[target] = val_row(nb);
                long nh = mu_hat(target);
                if (nh >= mh[target]) throw std::logic_error("reduction step did not shrink the norm");
                mh[target] = nh;
                replaced = true;
            }
            if (replaced) break;
        }
        if (!replaced) break;
    }

    std::vector<size_t> ord(n);
    for (size_t i = 0; i < n; ++i) ord[i] = i;
    std::vector<BigRat> norms(n);
    for (size_t i = 0; i < n; ++i) {
        std::optional<BigRat> best;
        for (size_t j = 0; j < m; ++j) {
            BigRat r(BigInt(-static_cast<long long>(vals[i][j]) - twist[j]), BigInt(inf_[j].e));
            if (!best || *best < r) best = r;
        }
        norms[i] = *best;
    }
    std::stable_sort(ord.begin(), ord.end(), [&](size_t a, size_t b) { return norms[a] < norms[b]; });
    ReducedModule out;
    for (size_t i : ord) {
        out.elems.push_back(basis[i]);
        out.norms.push_back(norms[i]);
    }
    return out;
}

const FunctionField::ReducedModule& FunctionField::reduced_order_basis() const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (!reduced_) {
        std::vector<FieldElement> basis;
        for (size_t i = 0; i < static_cast<size_t>(n_); ++i) basis.push_back(omega(i));
        reduced_ = reduce_module(std::move(basis), std::vector<int>(inf_.size(), 0));
    }
    return *reduced_;
}

int FunctionField::genus() const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (genus_) return *genus_;
    const auto& rb = reduced_order_basis();
    long g = 1 - n_;
    long maxceil = 0;
    std::vector<long> num(rb.norms.size()), den(rb.norms.size());
    for (size_t i = 0; i < rb.norms.size(); ++i) {
        long ci = rb.norms[i].ceil().to_i64();
        g += ci;
        maxceil = std::max(maxceil, ci);
        num[i] = rb.norms[i].num().to_i64();
        den[i] = rb.norms[i].den().to_i64();
    }
    // the count of x-power multiples of the basis with norm at most mm
    // must follow the mm*n + 1 - g line once mm is past every basis norm
    for (long mm = 2 * maxceil + 2; mm <= 2 * maxceil + 3; ++mm) {
        long dim = 0;
        for (size_t i = 0; i < rb.norms.size(); ++i) {
            long fl = floordiv(mm * den[i] - num[i], den[i]);
            if (fl >= 0) dim += fl + 1;
        }
        if (dim != mm * n_ + 1 - g) throw std::logic_error("genus does not match the dimension count");
    }
    genus_ = static_cast<int>(g);
    return *genus_;
}

}  // namespace normeq
