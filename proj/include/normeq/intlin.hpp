// intlin.hpp — exact integer linear algebra on small dense matrices:
// Hermite and Smith normal forms with transforms, integer system solving,
// LLL reduction (delta = 3/4) and Babai nearest-plane, all over BigInt.
// Matrices are row-major; lattice bases are stored as rows.
#pragma once

#include <optional>
#include <vector>

#include "normeq/bigint.hpp"

namespace normeq {

using IVec = std::vector<BigInt>;
using IMat = std::vector<IVec>;

IMat imat_identity(size_t n);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_vec_mul(const IVec& v, const IMat& a);  // row vector times matrix
IMat imat_transpose(const IMat& a);

// Row Hermite form: U * A = H with U unimodular; H has staircase rows,
// positive pivots, entries above each pivot reduced into [0, pivot),
// zero rows collected at the bottom.
struct HnfResult {
    IMat h, u;
    size_t rank = 0;
};
HnfResult hnf_rows(const IMat& a);

// basis (rows) of { y : y * A = 0 }
IMat left_kernel(const IMat& a);

// Smith form: U * A * V = D diagonal, d1 | d2 | ...; U, V unimodular.
struct SnfResult {
    IMat d, u, v;
    size_t rank = 0;
    std::vector<BigInt> invariants() const;  // nonzero diagonal entries
};
SnfResult smith_normal_form(const IMat& a);

// All integer solutions of A x = b: a particular solution (size-reduced
// against the kernel) plus a basis of the homogeneous kernel as rows.
struct IntSolveResult {
    bool solvable = false;
    IVec particular;
    IMat kernel;
};
IntSolveResult solve_integer_system(const IMat& a, const IVec& b);

// LLL with delta = 3/4 on the rows (exact rational Gram-Schmidt).
// Zero rows are dropped; input rows may be linearly dependent only if
// they are zero.
IMat lll_reduce(IMat basis);

// Babai nearest-plane on an LLL-reduced row basis; rounding is
// half-toward-plus-infinity so runs are deterministic. Returns the lattice
// vector; callers subtract it from the target for the residual.
IVec cvp_babai(const IMat& lll_basis, const IVec& target);

// determinant of the Gram matrix B * B^T (squared lattice volume)
BigInt gram_det(const IMat& basis);

// max |entry|
BigInt imat_max_abs(const IMat& a);

}  // namespace normeq
