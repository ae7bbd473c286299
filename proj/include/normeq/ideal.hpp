// ideal.hpp — fractional ideals of the maximal order, held as triangular
// k[x]-module bases in omega coordinates over a monic denominator.
#pragma once

#include <map>

#include "normeq/field.hpp"

namespace normeq {

// num is n x n, upper triangular with monic diagonal, column-reduced; den
// is monic and coprime to the content of num
struct FracIdeal {
    PMat num;
    Poly den;
};

FracIdeal ideal_one(const FunctionField& F);
FracIdeal ideal_canon(const FunctionField& F, PMat num, Poly den);
FracIdeal ideal_from_prime(const FunctionField& F, const PrimePlace& P);
FracIdeal ideal_principal(const FunctionField& F, const FieldElement& a);
FracIdeal ideal_mul(const FunctionField& F, const FracIdeal& a, const FracIdeal& b);
FracIdeal ideal_inv(const FunctionField& F, const FracIdeal& a);
FracIdeal ideal_pow(const FunctionField& F, const FracIdeal& a, int64_t e);

bool ideal_eq(const FracIdeal& a, const FracIdeal& b);
bool ideal_is_integral(const FracIdeal& a);
bool ideal_contains(const FunctionField& F, const FracIdeal& a, const FieldElement& x);

// monic / monic in lowest terms
RatFunc ideal_norm(const FunctionField& F, const FracIdeal& a);
int ideal_val(const FunctionField& F, const FracIdeal& a, const PrimePlace& P);

// all places with nonzero valuation, as (place, exponent) sorted by
// (p, idx)
std::vector<std::pair<PrimePlace, int>> ideal_support(const FunctionField& F, const FracIdeal& a);

// product of prime powers
FracIdeal ideal_from_support(const FunctionField& F,
                             const std::vector<std::pair<PrimePlace, int>>& sup);

}  // namespace normeq
