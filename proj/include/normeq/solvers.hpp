// solvers.hpp — the three norm equation solvers over a fixed field: plain
// coefficient enumeration in a reduced basis, exhaustive search through
// compact representations, and the index calculus route through the S-unit
// lattice. When several of them finish on the same instance their answers
// agree up to associates.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "normeq/compactrep.hpp"
#include "normeq/sunit.hpp"

namespace normeq {

// a solve that would exceed its candidate or time budget stops with this;
// the command line reports it separately from precondition failures
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// per-field state shared by every solver: the class group and the unit
// valuation lattice at the places at infinity
struct SolverContext {
    std::shared_ptr<const FunctionField> F;
    std::shared_ptr<const ClassGroup> cg;
    SUnitBasis units;
};
SolverContext make_context(std::shared_ptr<const FunctionField> F);

// theta[j] bounds the unit valuations at the j-th infinite place, Theta the
// maximum norm of a minimal solution, deg_bounds[i] the coefficient degree
// cap on the i-th reduced basis element; deg_bounds[i] < 0 pins that
// coefficient to zero
struct SolverBounds {
    std::vector<BigRat> theta;
    BigRat Theta;
    std::vector<long> deg_bounds;
};
SolverBounds solver_bounds(const SolverContext& ctx, const Poly& c);

struct SearchStats {
    BigInt gp_exponent;  // plain enumeration visits q^gp_exponent candidates
    BigInt tuple_bound;  // grid size of the compact-representation search
    BigInt ideal_count;  // divisors of cO_F visited by index calculus
};
SearchStats search_stats(const SolverContext& ctx, const Poly& c);

struct SolveOptions {
    uint64_t gp_budget = 4'000'000;
    uint64_t oracle_budget = 8'000'000;
    int threads = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolutionSet {
    Poly c;
    std::vector<FieldElement> elems;  // plain representation solvers
    std::vector<CompactRep> crs;      // compact representation solvers
    uint64_t candidates = 0;          // constructions actually attempted
    uint64_t tuples = 0;              // grid points visited
    uint64_t ideals = 0;              // ideal candidates visited
};

SolutionSet solve_gaal_pohst(const SolverContext& ctx, const Poly& c,
                             const SolveOptions& opt = {});
SolutionSet solve_exhaustive_cr(const SolverContext& ctx, const Poly& c,
                                const SolveOptions& opt = {});
SolutionSet solve_index_calculus(const SolverContext& ctx, const Poly& c,
                                 const SolveOptions& opt = {});

// maximal sublist with pairwise distinct finite valuations, first kept
std::vector<FieldElement> dedup_associates(const FunctionField& F,
                                           const std::vector<FieldElement>& in);
std::vector<CompactRep> dedup_associates(const FunctionField& F,
                                         const std::vector<CompactRep>& in);

// right hand side validation shared with the oracle: monic normalization,
// rejecting constants
Poly solver_rhs(const FunctionField& F, const Poly& c);
// norm lands in c k^x, c monic
bool norm_matches(const RatFunc& nrm, const Poly& cmon);
// q^e rendered in decimal when small, symbolically otherwise
std::string pow_count_string(uint32_t q, const BigInt& e);

}  // namespace normeq
