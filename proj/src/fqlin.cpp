#include "normeq/fqlin.hpp"

#include <stdexcept>

namespace normeq {

FqMat fq_mat_identity(size_t n) {
    FqMat a(n, FqVec(n, 0));
    for (size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

FqMat fq_mat_mul(const FqMat& a, const FqMat& b, uint32_t q) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    FqMat c(n, FqVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (!a[i][l]) continue;
            for (size_t j = 0; j < m; ++j)
                c[i][j] = fq_add(c[i][j], fq_mul(a[i][l], b[l][j], q), q);
        }
    return c;
}

FqVec fq_mat_apply(const FqMat& a, const FqVec& x, uint32_t q) {
    FqVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            r[i] = fq_add(r[i], fq_mul(a[i][j], x[j], q), q);
    return r;
}

FqMat fq_mat_pow(FqMat a, uint64_t e, uint32_t q) {
    FqMat r = fq_mat_identity(a.size());
    while (e) {
        if (e & 1) r = fq_mat_mul(r, a, q);
        a = fq_mat_mul(a, a, q);
        e >>= 1;
    }
    return r;
}

std::vector<size_t> fq_rref(FqMat& a, uint32_t q) {
    std::vector<size_t> pivots;
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        uint32_t inv = fq_inv(a[r][c], q);
        for (size_t j = c; j < cols; ++j) a[r][j] = fq_mul(a[r][j], inv, q);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            uint32_t m = a[i][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] = fq_sub(a[i][j], fq_mul(m, a[r][j], q), q);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t fq_rank(FqMat a, uint32_t q) { return fq_rref(a, q).size(); }

std::vector<FqVec> fq_kernel(const FqMat& a, uint32_t q) {
    size_t cols = a.empty() ? 0 : a[0].size();
    FqMat m = a;
    std::vector<size_t> pivots = fq_rref(m, q);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<FqVec> ker;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        FqVec v(cols, 0);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fq_neg(m[r][c], q);
        ker.push_back(std::move(v));
    }
    return ker;
}

std::optional<FqVec> fq_solve(const FqMat& a, const FqVec& b, uint32_t q) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("fq_solve shape");
    FqMat m(rows, FqVec(cols + 1, 0));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    std::vector<size_t> pivots = fq_rref(m, q);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    FqVec x(cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

std::optional<FqVec> FqSpan::insert(const FqVec& v) {
    if (v.size() != dim_) throw std::invalid_argument("FqSpan dimension");
    FqVec r = v;
    FqVec acc(accepted_, 0);
    for (size_t k = 0; k < rows_.size(); ++k) {
        uint32_t coeff = r[lead_[k]];
        if (!coeff) continue;
        for (size_t j = 0; j < dim_; ++j)
            r[j] = fq_sub(r[j], fq_mul(coeff, rows_[k][j], q_), q_);
        for (size_t j = 0; j < combo_[k].size(); ++j)
            acc[j] = fq_add(acc[j], fq_mul(coeff, combo_[k][j], q_), q_);
    }
    size_t lead = 0;
    while (lead < dim_ && r[lead] == 0) ++lead;
    if (lead == dim_) return acc;
    uint32_t inv = fq_inv(r[lead], q_);
    for (auto& e : r) e = fq_mul(e, inv, q_);
    // r = inv * (v - sum acc_j orig_j); record it over the originals with
    // v itself entering as original number accepted_
    FqVec c(accepted_ + 1, 0);
    for (size_t j = 0; j < accepted_; ++j) c[j] = fq_neg(fq_mul(inv, acc[j], q_), q_);
    c[accepted_] = inv;
    rows_.push_back(std::move(r));
    lead_.push_back(lead);
    combo_.push_back(std::move(c));
    ++accepted_;
    return std::nullopt;
}

}  // namespace normeq
