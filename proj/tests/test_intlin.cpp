#include "doctest.h"

#include "normeq/intlin.hpp"

#include <random>

using namespace normeq;

namespace {

IMat rand_mat(std::mt19937& rng, size_t r, size_t c, int span) {
    IMat a(r, IVec(c));
    for (auto& row : a)
        for (auto& v : row) v = BigInt(static_cast<int64_t>(rng() % (2 * span + 1)) - span);
    return a;
}

BigInt det3(const IMat& a) {
    // only for 3x3 unimodularity checks
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace

TEST_CASE("hermite form: transform, staircase, reduction") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        size_t r = 2 + rng() % 3, c = 2 + rng() % 3;
        IMat a = rand_mat(rng, r, c, 9);
        auto h = hnf_rows(a);
        CHECK(imat_mul(h.u, a) == h.h);
        if (r == 3 && rng() % 2) {
            BigInt d = det3(h.u);
            CHECK((d == BigInt(1) || d == BigInt(-1)));
        }
        // staircase with positive pivots, entries above reduced
        size_t prev_col = 0;
        bool first = true;
        for (size_t i = 0; i < h.rank; ++i) {
            size_t j = 0;
            while (j < c && h.h[i][j].is_zero()) ++j;
            REQUIRE(j < c);
            if (!first) CHECK(j > prev_col);
            first = false;
            prev_col = j;
            CHECK(h.h[i][j] > BigInt(0));
            for (size_t k = 0; k < i; ++k) {
                CHECK(h.h[k][j] >= BigInt(0));
                CHECK(h.h[k][j] < h.h[i][j]);
            }
        }
        for (size_t i = h.rank; i < r; ++i)
            for (size_t j = 0; j < c; ++j) CHECK(h.h[i][j].is_zero());
    }
}

TEST_CASE("left kernel annihilates and has full expected dimension") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        size_t r = 2 + rng() % 4, c = 1 + rng() % 3;
        IMat a = rand_mat(rng, r, c, 5);
        IMat k = left_kernel(a);
        size_t rank = hnf_rows(a).rank;
        CHECK(k.size() == r - rank);
        for (auto& row : k) {
            IVec prod = imat_vec_mul(row, a);
            for (auto& v : prod) CHECK(v.is_zero());
            bool nonzero = false;
            for (auto& v : row) nonzero |= !v.is_zero();
            CHECK(nonzero);
        }
        // kernel rows are independent
        CHECK(hnf_rows(k).rank == k.size());
    }
}

TEST_CASE("smith form: diagonal with divisibility chain") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IMat a = rand_mat(rng, r, c, 7);
        auto s = smith_normal_form(a);
        CHECK(imat_mul(imat_mul(s.u, a), s.v) == s.d);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.d[i][j].is_zero());
        auto inv = s.invariants();
        CHECK(inv.size() == s.rank);
        for (size_t i = 0; i + 1 < inv.size(); ++i) {
            CHECK(inv[i] > BigInt(0));
            CHECK((inv[i + 1] % inv[i]).is_zero());
        }
    }
    // a concrete case: diag invariants of [[2,4],[6,8]] are 2, 4
    auto s = smith_normal_form({{BigInt(2), BigInt(4)}, {BigInt(6), BigInt(8)}});
    auto inv = s.invariants();
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == BigInt(2));
    CHECK(inv[1] == BigInt(4));
}

TEST_CASE("integer systems: solvability matches exhaustive search on a small box") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        IMat a = rand_mat(rng, 3, 4, 3);
        IVec b(3);
        for (auto& v : b) v = BigInt(static_cast<int64_t>(rng() % 11) - 5);
        auto res = solve_integer_system(a, b);
        if (res.solvable) {
            IVec check(3, BigInt(0));
            for (size_t j = 0; j < 4; ++j)
                for (size_t i = 0; i < 3; ++i) check[i] = check[i] + a[i][j] * res.particular[j];
            CHECK(check == b);
            for (auto& krow : res.kernel) {
                IVec kk(3, BigInt(0));
                for (size_t j = 0; j < 4; ++j)
                    for (size_t i = 0; i < 3; ++i) kk[i] = kk[i] + a[i][j] * krow[j];
                for (auto& v : kk) CHECK(v.is_zero());
            }
        } else {
            // no solution with coordinates in [-30, 30] either
            bool found = false;
            IVec x(4);
            for (int64_t x0 = -30; x0 <= 30 && !found; ++x0)
                for (int64_t x1 = -30; x1 <= 30 && !found; ++x1) {
                    // solve the first two coordinates by brute force only when
                    // the trailing 2x2 block is invertible; else skip the trial
                    x[0] = BigInt(x0);
                    x[1] = BigInt(x1);
                    BigInt det = a[0][2] * a[1][3] - a[0][3] * a[1][2];
                    if (det.is_zero()) { found = false; x0 = 31; break; }
                    BigInt r0 = b[0] - a[0][0] * x[0] - a[0][1] * x[1];
                    BigInt r1 = b[1] - a[1][0] * x[0] - a[1][1] * x[1];
                    BigInt n2 = r0 * a[1][3] - r1 * a[0][3];
                    BigInt n3 = a[0][2] * r1 - a[1][2] * r0;
                    if (!(n2 % det).is_zero() || !(n3 % det).is_zero()) continue;
                    x[2] = n2 / det;
                    x[3] = n3 / det;
                    BigInt last = a[2][0] * x[0] + a[2][1] * x[1] + a[2][2] * x[2] + a[2][3] * x[3];
                    if (last == b[2]) found = true;
                }
            CHECK(!found);
        }
    }
    // 2x = 1 has no integer solution; 2x = 6 does
    auto bad = solve_integer_system({{BigInt(2)}}, {BigInt(1)});
    CHECK(!bad.solvable);
    auto good = solve_integer_system({{BigInt(2)}}, {BigInt(6)});
    REQUIRE(good.solvable);
    CHECK(good.particular[0] == BigInt(3));
    CHECK(good.kernel.empty());
    // underdetermined homogeneous: kernel of [1 1] is spanned by (1, -1)
    auto hom = solve_integer_system({{BigInt(1), BigInt(1)}}, {BigInt(0)});
    REQUIRE(hom.solvable);
    REQUIRE(hom.kernel.size() == 1);
    CHECK(hom.kernel[0][0] * hom.kernel[0][1] == BigInt(-1));
}

TEST_CASE("lll: lovasz condition and determinant preservation") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 2 + rng() % 3;
        IMat a = rand_mat(rng, n, n + rng() % 2, 12);
        if (hnf_rows(a).rank < n) continue;
        BigInt vol_before = gram_det(a);
        IMat r = lll_reduce(a);
        REQUIRE(r.size() == n);
        CHECK(gram_det(r) == vol_before);
        // reduced basis bound: prod |b_i|^2 <= 2^(n(n-1)/2) * det(Gram)
        BigInt prod(1);
        for (auto& row : r) {
            BigInt s(0);
            for (auto& v : row) s = s + v * v;
            prod = prod * s;
        }
        CHECK(prod <= BigInt::pow(BigInt(2), n * (n - 1) / 2) * vol_before);
    }
    IMat id = imat_identity(3);
    CHECK(lll_reduce(id) == id);
}

TEST_CASE("babai: lattice points are fixed, residuals are small") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 2 + rng() % 2;
        IMat a = rand_mat(rng, n, n, 8);
        if (hnf_rows(a).rank < n) continue;
        IMat r = lll_reduce(a);
        // any lattice vector maps to itself
        IVec coeff(n);
        for (auto& v : coeff) v = BigInt(static_cast<int64_t>(rng() % 9) - 4);
        IVec t = imat_vec_mul(coeff, r);
        CHECK(cvp_babai(r, t) == t);
    }
    // rank-0 basis: nearest lattice vector is the origin
    IVec t{BigInt(5), BigInt(-2)};
    auto z = cvp_babai(IMat{}, t);
    CHECK(z == IVec(2, BigInt(0)));

    // worked reduction in the rank-1 unit lattice spanned by (-694, 347):
    // target (-1011, 505) rounds to 1 * basis, residual (-317, 158)
    IMat ul{{BigInt(-694), BigInt(347)}};
    IVec target{BigInt(-1011), BigInt(505)};
    auto v = cvp_babai(ul, target);
    CHECK(v == IVec{BigInt(-694), BigInt(347)});
    CHECK(target[0] - v[0] == BigInt(-317));
    CHECK(target[1] - v[1] == BigInt(158));
}

TEST_CASE("gram determinant of known lattices") {
    CHECK(gram_det(imat_identity(4)) == BigInt(1));
    IMat a{{BigInt(2), BigInt(0)}, {BigInt(1), BigInt(3)}};
    CHECK(gram_det(a) == BigInt(36));
    IMat r1{{BigInt(-694), BigInt(347)}};
    // 694^2 + 347^2 = 347^2 * 5
    CHECK(gram_det(r1) == BigInt(602045));
    CHECK(imat_max_abs(r1) == BigInt(694));
}
