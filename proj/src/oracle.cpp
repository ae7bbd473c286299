// oracle.cpp — see oracle.hpp. One enumeration core drives all three
// checks: every vector of omega coefficients with entry degrees at most B,
// visited in base-q odometer order.
#include "normeq/oracle.hpp"

#include "normeq/fqlin.hpp"

namespace normeq {

namespace {

// calls fn(alpha, digits) for every nonzero coefficient vector; digits is
// the flattened coefficient list, n blocks of B+1 base-q digits
template <typename Fn>
void enumerate_box(const FunctionField& F, int B, uint64_t budget, Fn&& fn) {
    if (B < 0) return;
    size_t n = static_cast<size_t>(F.degree());
    size_t digits = n * static_cast<size_t>(B + 1);
    BigInt total = BigInt::pow(BigInt(F.q()), digits);
    if (total > BigInt(static_cast<int64_t>(budget)))
        throw BudgetError("oracle box of " + pow_count_string(F.q(), BigInt(static_cast<int64_t>(digits))) +
                          " candidates is over its budget");
    uint64_t n_all = static_cast<uint64_t>(total.to_i64());
    uint32_t qv = F.q();
    std::vector<uint32_t> dg(digits, 0);
    size_t len = static_cast<size_t>(B + 1);
    for (uint64_t idx = 1; idx < n_all; ++idx) {
        size_t k = 0;
        while (true) {
            if (dg[k] + 1 < qv) {
                ++dg[k];
                break;
            }
            dg[k] = 0;
            ++k;
        }
        std::vector<Poly> co(n);
        for (size_t i = 0; i < n; ++i) {
            std::vector<uint32_t> c(dg.begin() + static_cast<long>(i * len),
                                    dg.begin() + static_cast<long>((i + 1) * len));
            co[i] = Poly(qv, c);
        }
        fn(F.from_omega(co), dg);
    }
}

}  // namespace

std::vector<FieldElement> brute_solve(const FunctionField& F, const Poly& c, int B,
                                      uint64_t budget) {
    Poly cmon = solver_rhs(F, c);
    std::vector<FieldElement> found;
    enumerate_box(F, B, budget, [&](const FieldElement& a, const std::vector<uint32_t>&) {
        if (norm_matches(F.elt_norm(a), cmon)) found.push_back(a);
    });
    return dedup_associates(F, found);
}

std::optional<FieldElement> brute_principal(const FunctionField& F, const Divisor& D, int B,
                                            uint64_t budget) {
    if (div_deg(F, D) != 0) return std::nullopt;
    std::optional<FieldElement> hit;
    enumerate_box(F, B, budget, [&](const FieldElement& a, const std::vector<uint32_t>&) {
        if (!hit && div_eq(div_of_element(F, a), D)) hit = a;
    });
    return hit;
}

std::vector<FieldElement> brute_rr(const FunctionField& F, const Divisor& D, int B,
                                   uint64_t budget) {
    std::vector<FieldElement> basis;
    size_t dim = static_cast<size_t>(F.degree()) * static_cast<size_t>(B >= 0 ? B + 1 : 0);
    FqSpan span(dim, F.q());
    enumerate_box(F, B, budget, [&](const FieldElement& a, const std::vector<uint32_t>& dg) {
        if (!div_is_effective(div_add(F, div_of_element(F, a), D))) return;
        if (!span.insert(dg)) basis.push_back(a);
    });
    return basis;
}

}  // namespace normeq
