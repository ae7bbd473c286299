// polymat.hpp — dense matrices over k[x]: column Hermite form with the
// unimodular transform, right kernels, module preimages, and fraction-free
// determinants. k[x]-submodules of k[x]^n are stored with generators as
// columns; the canonical basis of a full-rank module is upper triangular
// with monic diagonal and deg H[i][j] < deg H[i][i] for j > i.
#pragma once

#include <optional>
#include <vector>

#include "normeq/poly.hpp"

namespace normeq {

using PMat = std::vector<std::vector<Poly>>;  // row-major

PMat pmat_identity(size_t n, uint32_t q);
PMat pmat_mul(const PMat& a, const PMat& b);
std::vector<Poly> pmat_vec_mul(const PMat& a, const std::vector<Poly>& v);

// column Hermite form: A * U = H, U unimodular over k[x]. Pivot columns
// are pushed to the right; columns left of the pivot block are zero.
struct PHnfResult {
    PMat h, u;
    size_t rank = 0;
    // row index of each pivot, one per pivot column (left to right)
    std::vector<size_t> pivot_rows;
};
PHnfResult pmat_hnf_cols(const PMat& a, bool want_transform = true);

// drops zero columns and returns the n x rank pivot block of the Hermite
// form; for a full-rank module this is the canonical triangular basis
PMat pmat_hnf_basis(const PMat& a);

// basis (columns) of { x : A x = 0 } over k[x]
PMat pmat_right_kernel(const PMat& a);

// basis (columns) of { x in k[x]^m : A x lies in the column span of B }
PMat pmat_preimage(const PMat& a, const PMat& b);

// determinant by Bareiss fraction-free elimination
Poly pmat_det(const PMat& a);

// coordinates of v over the columns of a full-rank upper triangular basis
// (as produced by pmat_hnf_basis), or nullopt if v is outside the module
std::optional<std::vector<Poly>> pmat_solve_upper(const PMat& h, std::vector<Poly> v);

bool pmat_eq(const PMat& a, const PMat& b);

}  // namespace normeq
