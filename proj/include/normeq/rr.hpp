// rr.hpp — divisors of a function field and their Riemann-Roch spaces
// L(D) = { a : div(a) + D >= 0 }, computed through the finite part as a
// fractional ideal and the infinite part as a twisted basis reduction.
#pragma once

#include "normeq/ideal.hpp"

namespace normeq {

// finite support sorted by (p, idx) with nonzero exponents; inf has one
// entry per place at infinity
struct Divisor {
    std::vector<std::pair<PrimePlace, int>> fin;
    std::vector<int> inf;
};

Divisor div_zero(const FunctionField& F);
Divisor div_make(const FunctionField& F, std::vector<std::pair<PrimePlace, int>> fin,
                 std::vector<int> inf);
Divisor div_add(const FunctionField& F, const Divisor& a, const Divisor& b);
Divisor div_neg(const FunctionField& F, const Divisor& a);
Divisor div_sub(const FunctionField& F, const Divisor& a, const Divisor& b);
Divisor div_scale(const FunctionField& F, const Divisor& a, long k);
bool div_eq(const Divisor& a, const Divisor& b);
bool div_is_effective(const Divisor& a);
long div_deg(const FunctionField& F, const Divisor& a);
std::string div_key(const Divisor& a);

Divisor div_of_element(const FunctionField& F, const FieldElement& a);

std::vector<FieldElement> rr_basis(const FunctionField& F, const Divisor& D);
long rr_dim(const FunctionField& F, const Divisor& D);

// generator of a degree-zero divisor: a with div(a) = D, if D is principal
std::optional<FieldElement> principal_gen(const FunctionField& F, const Divisor& D);

}  // namespace normeq
