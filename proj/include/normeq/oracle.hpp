// oracle.hpp — brute-force ground truth: wherever the main algorithms are
// clever, these enumerate every coefficient vector up to a degree cap and
// check directly. Slow on purpose, used by tests and the oracle mode of
// the command line.
#pragma once

#include "normeq/solvers.hpp"

namespace normeq {

// all alpha in O_F with coefficient degrees at most B and norm in c k^x,
// up to associates
std::vector<FieldElement> brute_solve(const FunctionField& F, const Poly& c, int B,
                                      uint64_t budget = 8'000'000);

// an element with div(a) = D found by enumeration, if one exists in the box
std::optional<FieldElement> brute_principal(const FunctionField& F, const Divisor& D, int B,
                                            uint64_t budget = 8'000'000);

// k-basis of the elements in the box with div(a) + D >= 0; equals a basis
// of L(D) once B dominates the coefficient degrees of rr_basis output
std::vector<FieldElement> brute_rr(const FunctionField& F, const Divisor& D, int B,
                                   uint64_t budget = 8'000'000);

}  // namespace normeq
