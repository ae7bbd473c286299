// normeq_cli.cpp — command line front end over the library: solve a norm
// equation, describe a field, estimate search sizes, run a benchmark suite.
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "normeq/run.hpp"

using namespace normeq;

namespace {

const char* kUsage =
    "usage: normeq <command> [flags]\n"
    "\n"
    "commands\n"
    "  solve   find all solutions of Norm(alpha) = c up to associates\n"
    "  info    print the invariants of the field\n"
    "  stats   print the search sizes the solvers would face\n"
    "  bench   run a suite file and print a CSV report\n"
    "\n"
    "flags\n"
    "  --field PATH       field description file (q = ..., f = \"...\")\n"
    "  --q N --f POLY     the same, inline\n"
    "  --c POLY           right hand side, a polynomial in x\n"
    "  --algorithm A      gp | exhaustive-cr | index-calculus | oracle\n"
    "  --output FMT       text | json (solve only)\n"
    "  --threads N        worker threads for the search loops\n"
    "  --timeout SECS     abort the solve after this many seconds\n"
    "  --suite PATH       bench suite, rows \"field_path,c,algorithm\"\n";

int usage_error(const std::string& msg) {
    fprintf(stderr, "error: %s\n\n%s", msg.c_str(), kUsage);
    return 2;
}

struct Flags {
    std::map<std::string, std::string> kv;

    bool has(const std::string& k) const { return kv.count(k) != 0; }
    std::string take(const std::string& k) {
        auto it = kv.find(k);
        std::string v = it->second;
        kv.erase(it);
        return v;
    }
};

// --key value pairs after the command; every key must start with --
int parse_flags(int argc, char** argv, Flags& out, std::string& err) {
    for (int i = 2; i < argc; i += 2) {
        std::string k = argv[i];
        if (k.size() < 3 || k.compare(0, 2, "--") != 0) {
            err = "expected a --flag, got \"" + k + "\"";
            return 2;
        }
        if (i + 1 >= argc) {
            err = k + " needs a value";
            return 2;
        }
        if (!out.kv.emplace(k.substr(2), argv[i + 1]).second) {
            err = k + " given twice";
            return 2;
        }
    }
    return 0;
}

std::shared_ptr<const FunctionField> field_from_flags(Flags& fl) {
    bool file = fl.has("field");
    bool inl = fl.has("q") || fl.has("f");
    if (file && inl) throw FieldError("give either --field or --q/--f, not both");
    if (file) return load_field(parse_field_file(fl.take("field")));
    if (!fl.has("q") || !fl.has("f")) throw FieldError("a field is required: --field or --q/--f");
    FieldSpec spec = parse_field_text("q = " + fl.take("q") + "\nf = \"" + fl.take("f") + "\"\n");
    return load_field(spec);
}

long parse_long_flag(const std::string& name, const std::string& v, long lo, long hi) {
    size_t used = 0;
    long n = 0;
    try {
        n = std::stol(v, &used);
    } catch (...) {
        used = 0;
    }
    if (used != v.size() || n < lo || n > hi)
        throw FieldError("--" + name + " must be an integer in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return n;
}

RunOptions options_from_flags(Flags& fl) {
    RunOptions opt;
    if (fl.has("algorithm")) {
        opt.algorithm = fl.take("algorithm");
        if (opt.algorithm != "gp" && opt.algorithm != "exhaustive-cr" &&
            opt.algorithm != "index-calculus" && opt.algorithm != "oracle")
            throw FieldError("unknown algorithm \"" + opt.algorithm + "\"");
    }
    if (fl.has("threads"))
        opt.threads = static_cast<int>(parse_long_flag("threads", fl.take("threads"), 1, 256));
    if (fl.has("timeout")) {
        std::string v = fl.take("timeout");
        size_t used = 0;
        double s = 0;
        try {
            s = std::stod(v, &used);
        } catch (...) {
            used = 0;
        }
        if (used != v.size() || !(s > 0)) throw FieldError("--timeout must be a positive number");
        opt.timeout_secs = s;
    }
    return opt;
}

void reject_leftovers(const Flags& fl) {
    if (!fl.kv.empty()) throw FieldError("flag --" + fl.kv.begin()->first + " is not understood here");
}

int cmd_solve(Flags& fl) {
    auto F = field_from_flags(fl);
    if (!fl.has("c")) throw FieldError("solve needs --c");
    Poly c = parse_poly_x(fl.take("c"), F->q());
    RunOptions opt = options_from_flags(fl);
    std::string output = fl.has("output") ? fl.take("output") : "text";
    if (output != "text" && output != "json")
        throw FieldError("unknown output format \"" + output + "\"");
    reject_leftovers(fl);
    double setup = 0;
    SolverContext ctx = timed_context(F, &setup);
    SolveReport rep = run_solve(ctx, c, opt);
    rep.setup_secs = setup;
    std::cout << (output == "json" ? report_json(*F, rep) : report_text(*F, rep));
    if (output == "json") std::cout << "\n";
    return 0;
}

int cmd_info(Flags& fl) {
    auto F = field_from_flags(fl);
    reject_leftovers(fl);
    SolverContext ctx = make_context(F);
    std::cout << "q: " << F->q() << "\n";
    std::cout << "degree: " << F->degree() << "\n";
    std::cout << "genus: " << F->genus() << "\n";
    std::cout << "pole bound: " << F->cf() << "\n";
    std::cout << "infinite places:";
    for (const auto& pl : F->infinite_places())
        std::cout << " (e=" << pl.e << ", deg=" << pl.deg << ")";
    std::cout << "\n";
    const auto& red = F->reduced_order_basis();
    std::cout << "reduced basis norms:";
    for (const auto& nrm : red.norms) std::cout << " " << nrm.to_string();
    std::cout << "\n";
    std::cout << "zeta numerator:";
    for (const auto& co : ctx.cg->lpoly()) std::cout << " " << co.to_string();
    std::cout << "\n";
    std::cout << "class number: " << ctx.cg->h0().to_string() << "\n";
    std::cout << "class group invariants:";
    for (long d : ctx.cg->invariants()) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "unit rank: " << ctx.units.rows.size() << "\n";
    std::cout << "unit value matrix:\n";
    for (const auto& row : ctx.units.rows) {
        std::cout << " ";
        for (const auto& v : row) std::cout << " " << v.to_string();
        std::cout << "\n";
    }
    std::cout << "unit lattice index: " << ctx.units.index.to_string() << "\n";
    std::cout << "squared regulator: " << ctx.units.reg2.to_string() << "\n";
    return 0;
}

int cmd_stats(Flags& fl) {
    auto F = field_from_flags(fl);
    if (!fl.has("c")) throw FieldError("stats needs --c");
    Poly c = parse_poly_x(fl.take("c"), F->q());
    reject_leftovers(fl);
    SolverContext ctx = make_context(F);
    SolverBounds sb = solver_bounds(ctx, c);
    SearchStats st = search_stats(ctx, c);
    std::cout << "c: " << solver_rhs(*F, c).to_string("x") << "\n";
    std::cout << "degree bound: " << sb.Theta.to_string() << "\n";
    std::cout << "gp candidates: " << pow_count_string(F->q(), st.gp_exponent) << "\n";
    std::cout << "tuple bound: " << st.tuple_bound.to_string() << "\n";
    std::cout << "ideals: " << st.ideal_count.to_string() << "\n";
    return 0;
}

int cmd_bench(Flags& fl) {
    if (!fl.has("suite")) throw FieldError("bench needs --suite");
    std::string suite = fl.take("suite");
    RunOptions opt = options_from_flags(fl);
    reject_leftovers(fl);
    std::cout << bench_run(suite, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage_error("a command is required");
    std::string cmd = argv[1];
    Flags fl;
    std::string err;
    if (parse_flags(argc, argv, fl, err) != 0) return usage_error(err);
    try {
        if (cmd == "solve") return cmd_solve(fl);
        if (cmd == "info") return cmd_info(fl);
        if (cmd == "stats") return cmd_stats(fl);
        if (cmd == "bench") return cmd_bench(fl);
        return usage_error("unknown command \"" + cmd + "\"");
    } catch (const BudgetError& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const ParseError& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const FieldError& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
