// run.hpp — one level above the solvers: timed solve runs, rendered
// reports, and the benchmark driver that turns a suite file into CSV.
#pragma once

#include <string>

#include "normeq/fieldspec.hpp"
#include "normeq/oracle.hpp"

namespace normeq {

struct RunOptions {
    std::string algorithm = "index-calculus";  // gp | exhaustive-cr | index-calculus | oracle
    int threads = 1;
    std::optional<double> timeout_secs;
    uint64_t gp_budget = 4'000'000;
    uint64_t oracle_budget = 8'000'000;
};

struct SolveReport {
    std::string algorithm;
    SolutionSet sols;
    double solve_secs = 0;
    double setup_secs = 0;
};

// context construction, timed; shared between runs on the same field
SolverContext timed_context(std::shared_ptr<const FunctionField> F, double* secs);

SolveReport run_solve(const SolverContext& ctx, const Poly& c, const RunOptions& opt);

std::string report_text(const FunctionField& F, const SolveReport& r);
std::string report_json(const FunctionField& F, const SolveReport& r);

// field element as a JSON vector of power-basis coordinate strings
std::string elt_coords_json(const FieldElement& e);

// suite rows "field_path,c,algorithm" (# comments allowed); paths resolve
// relative to the suite file; per-row timeout defaults to 300 s
std::string bench_run(const std::string& suite_path, const RunOptions& opt);

}  // namespace normeq
