// run.cpp — see run.hpp.
#include "normeq/run.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

namespace normeq {

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

SolverContext timed_context(std::shared_ptr<const FunctionField> F, double* secs) {
    auto t0 = Clock::now();
    SolverContext ctx = make_context(std::move(F));
    if (secs) *secs = secs_since(t0);
    return ctx;
}

SolveReport run_solve(const SolverContext& ctx, const Poly& c, const RunOptions& opt) {
    SolveReport rep;
    rep.algorithm = opt.algorithm;
    SolveOptions so;
    so.threads = opt.threads;
    so.gp_budget = opt.gp_budget;
    so.oracle_budget = opt.oracle_budget;
    if (opt.timeout_secs)
        so.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(*opt.timeout_secs));
    auto t0 = Clock::now();
    if (opt.algorithm == "gp") {
        rep.sols = solve_gaal_pohst(ctx, c, so);
    } else if (opt.algorithm == "exhaustive-cr") {
        rep.sols = solve_exhaustive_cr(ctx, c, so);
    } else if (opt.algorithm == "index-calculus") {
        rep.sols = solve_index_calculus(ctx, c, so);
    } else if (opt.algorithm == "oracle") {
        Poly cmon = solver_rhs(*ctx.F, c);
        long B = 0;
        {
            SolverBounds sb = solver_bounds(ctx, cmon);
            BigInt cb = sb.Theta.ceil();
            if (!cb.fits_i64()) throw BudgetError("oracle cap out of range");
            B = static_cast<long>(cb.to_i64()) + 2;
        }
        rep.sols.c = cmon;
        rep.sols.elems = brute_solve(*ctx.F, cmon, static_cast<int>(B), opt.oracle_budget);
    } else {
        throw FieldError("unknown algorithm \"" + opt.algorithm + "\"");
    }
    rep.solve_secs = secs_since(t0);
    return rep;
}

std::string elt_coords_json(const FieldElement& e) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < e.co.size(); ++i) {
        if (i) os << ", ";
        os << "\"" << e.co[i].to_string("x") << "\"";
    }
    os << "]";
    return os.str();
}

std::string report_text(const FunctionField& F, const SolveReport& r) {
    std::ostringstream os;
    os << "algorithm: " << r.algorithm << "\n";
    os << "c: " << r.sols.c.to_string("x") << "\n";
    size_t nsol = r.sols.elems.size() + r.sols.crs.size();
    os << "solutions: " << nsol << "\n";
    size_t k = 0;
    for (const auto& a : r.sols.elems)
        os << "  [" << ++k << "] " << F.elt_to_string(a) << "\n";
    for (const auto& t : r.sols.crs)
        os << "  [" << ++k << "] " << cr_to_json(F, t) << "\n";
    os << "candidates: " << r.sols.candidates << "\n";
    if (r.sols.tuples) os << "tuples: " << r.sols.tuples << "\n";
    if (r.sols.ideals) os << "ideals: " << r.sols.ideals << "\n";
    os << "setup seconds: " << fmt_secs(r.setup_secs) << "\n";
    os << "solve seconds: " << fmt_secs(r.solve_secs) << "\n";
    return os.str();
}

std::string report_json(const FunctionField& F, const SolveReport& r) {
    std::ostringstream os;
    os << "{\"algorithm\": \"" << r.algorithm << "\", \"c\": \"" << r.sols.c.to_string("x")
       << "\", \"solutions\": [";
    bool first = true;
    for (const auto& a : r.sols.elems) {
        if (!first) os << ", ";
        first = false;
        os << elt_coords_json(a);
    }
    for (const auto& t : r.sols.crs) {
        if (!first) os << ", ";
        first = false;
        os << cr_to_json(F, t);
    }
    os << "], \"counts\": {\"solutions\": " << r.sols.elems.size() + r.sols.crs.size()
       << ", \"candidates\": " << r.sols.candidates << ", \"tuples\": " << r.sols.tuples
       << ", \"ideals\": " << r.sols.ideals << "}, \"timing\": {\"setup_secs\": "
       << fmt_secs(r.setup_secs) << ", \"solve_secs\": " << fmt_secs(r.solve_secs) << "}}";
    return os.str();
}

std::string bench_run(const std::string& suite_path, const RunOptions& opt) {
    std::ifstream in(suite_path);
    if (!in) throw FieldError("cannot open suite file " + suite_path);
    std::string dir;
    {
        size_t slash = suite_path.find_last_of('/');
        if (slash != std::string::npos) dir = suite_path.substr(0, slash + 1);
    }
    std::ostringstream csv;
    csv << "field,n,g,q,deg_c,algorithm,seconds,status,solutions\n";
    // contexts are shared between the rows of one field
    std::map<std::string, SolverContext> cache;
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find_first_not_of(" \t\r");
        if (h == std::string::npos || line[h] == '#') continue;
        std::istringstream row(line);
        std::string fpath, ctext, alg;
        if (!std::getline(row, fpath, ',') || !std::getline(row, ctext, ',') ||
            !std::getline(row, alg)) {
            csv << csv_cell(line) << ",,,,,,0.000,ERROR,\n";
            continue;
        }
        auto strip = [](std::string& s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
        };
        strip(fpath);
        strip(ctext);
        strip(alg);
        std::string resolved = (!fpath.empty() && fpath[0] == '/') ? fpath : dir + fpath;
        std::string n_s, g_s, q_s, degc_s, status = "OK", secs = "0.000", nsol_s;
        auto t0 = Clock::now();
        try {
            FieldSpec spec = parse_field_file(resolved);
            q_s = std::to_string(spec.q);
            n_s = std::to_string(spec.f.empty() ? 0 : spec.f.size() - 1);
            Poly c = parse_poly_x(ctext, spec.q);
            degc_s = std::to_string(c.deg());
            auto it = cache.find(resolved);
            if (it == cache.end()) {
                auto F = load_field(spec);
                it = cache.emplace(resolved, timed_context(F, nullptr)).first;
            }
            g_s = std::to_string(it->second.F->genus());
            RunOptions ro = opt;
            ro.algorithm = alg;
            if (!ro.timeout_secs) ro.timeout_secs = 300.0;
            t0 = Clock::now();
            SolveReport rep = run_solve(it->second, c, ro);
            secs = fmt_secs(rep.solve_secs);
            nsol_s = std::to_string(rep.sols.elems.size() + rep.sols.crs.size());
        } catch (const BudgetError&) {
            secs = fmt_secs(secs_since(t0));
            status = "TIMEOUT";
        } catch (const std::exception&) {
            secs = fmt_secs(secs_since(t0));
            status = "ERROR";
        }
        csv << csv_cell(fpath) << "," << n_s << "," << g_s << "," << q_s << "," << degc_s << ","
            << csv_cell(alg) << "," << secs << "," << status << "," << nsol_s << "\n";
    }
    return csv.str();
}

}  // namespace normeq
