// compactrep.hpp — power product form for field elements whose plain
// coordinates are exponentially large. An element is held as a small
// numerator and a chain of small denominators applied by repeated
// squaring, so valuations, norms and associate tests stay cheap even
// when expansion is hopeless.
#pragma once

#include "normeq/rr.hpp"

namespace normeq {

// value = mu * prod_i beta[i]^(-2^(L-1-i)) with L = beta.size(); every
// component has height bounded by the reduction below, independent of
// the valuations of the value
struct CompactRep {
    FieldElement mu;
    std::vector<FieldElement> beta;
};

// index of the first infinite place of degree one, the place whose pole
// order the reduction spends last; throws FieldError when there is none
size_t distinguished_inf(const FunctionField& F);

// an element of I with v_P >= v at every infinite place, the pole at the
// distinguished place as small as the Riemann-Roch chain allows; v runs
// over all infinite places in field order
FieldElement reduce_ideal(const FunctionField& F, const FracIdeal& I, const std::vector<int>& v);

// representation of the generator of I whose infinite valuations are V,
// exact up to a constant in k when such a generator exists; otherwise
// the output is only close to the request and fails the caller's
// integrality or norm test
CompactRep comp_rep(const FunctionField& F, const FracIdeal& I, const std::vector<int>& V);

CompactRep cr_from_element(const FunctionField& F, const FieldElement& a);

long cr_val_fin(const FunctionField& F, const CompactRep& a, const PrimePlace& P);
long cr_val_inf(const FunctionField& F, const CompactRep& a, size_t j);

// finite places with nonzero valuation, sorted by (p, idx)
std::vector<std::pair<PrimePlace, long>> cr_support(const FunctionField& F, const CompactRep& a);

bool cr_is_integral(const FunctionField& F, const CompactRep& a);

// monic generator of the norm ideal; the norm of the value is this times
// a constant in k
RatFunc cr_norm(const FunctionField& F, const CompactRep& a);

// equal finite valuations everywhere, i.e. the values differ by a unit
bool cr_associate(const FunctionField& F, const CompactRep& a, const CompactRep& b);

// exact product; component heights add
CompactRep cr_mul(const FunctionField& F, const CompactRep& a, const CompactRep& b);

// power up to a constant in k, renormalized through comp_rep so the
// components stay small
CompactRep cr_pow(const FunctionField& F, const CompactRep& a, long e);

// plain coordinates; feasible only when the valuations of the value are
// moderate
FieldElement cr_expand(const FunctionField& F, const CompactRep& a);

// true when b equals a up to a constant in k
bool cr_matches_element(const FunctionField& F, const CompactRep& a, const FieldElement& b);

std::string cr_to_json(const FunctionField& F, const CompactRep& a);

}  // namespace normeq
