// fqlin.hpp — dense linear algebra over prime fields F_q: echelon
// reduction, kernels, solving, and an incremental span that reports how a
// dependent vector decomposes over the vectors accepted before it.
// Matrices are row-major; vectors are treated as columns.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "normeq/fq.hpp"

namespace normeq {

using FqVec = std::vector<uint32_t>;
using FqMat = std::vector<FqVec>;

FqMat fq_mat_identity(size_t n);
FqMat fq_mat_mul(const FqMat& a, const FqMat& b, uint32_t q);
FqVec fq_mat_apply(const FqMat& a, const FqVec& x, uint32_t q);  // A * x
FqMat fq_mat_pow(FqMat a, uint64_t e, uint32_t q);

// in-place reduction to reduced row echelon form; returns the pivot columns
std::vector<size_t> fq_rref(FqMat& a, uint32_t q);
size_t fq_rank(FqMat a, uint32_t q);

// basis of { x : A x = 0 }
std::vector<FqVec> fq_kernel(const FqMat& a, uint32_t q);

// one solution of A x = b (free coordinates set to zero), if any
std::optional<FqVec> fq_solve(const FqMat& a, const FqVec& b, uint32_t q);

// Incremental span of vectors of a fixed dimension. insert() stores an
// independent vector and returns nullopt; for a dependent vector it
// returns the coefficients over the previously accepted vectors, indexed
// in acceptance order.
class FqSpan {
public:
    FqSpan(size_t dim, uint32_t q) : dim_(dim), q_(q) {}
    std::optional<FqVec> insert(const FqVec& v);
    size_t rank() const { return rows_.size(); }

private:
    size_t dim_;
    uint32_t q_;
    std::vector<FqVec> rows_;    // pairwise-reduced, leading entry 1
    std::vector<size_t> lead_;   // pivot position of rows_[k]
    std::vector<FqVec> combo_;   // rows_[k] over the accepted originals
    size_t accepted_ = 0;
};

}  // namespace normeq
