// solvers.cpp — see solvers.hpp. The three methods share the bound
// machinery: per-place unit bounds theta_j read off the unit valuation
// rows, the global cap Theta = max_j theta_j/e_j + deg(c)/n, and from it
// degree caps on reduced-basis coefficients. Enumeration orders are fixed
// (first axis fastest) so output is deterministic, also across threads.
#include "normeq/solvers.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <thread>

namespace normeq {

namespace {

void check_deadline(const SolveOptions& opt) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline)
        throw BudgetError("time budget exhausted");
}

// the places over the irreducible factors of c, with the exponent caps
// v_P(c O_F) = e_P * mult and the factor each place lies over
struct CPlaces {
    std::vector<PrimePlace> P;
    std::vector<int> cap;
    std::vector<size_t> grp;
    std::vector<std::pair<Poly, int>> facs;
};

CPlaces c_places(const FunctionField& F, const Poly& cmon) {
    CPlaces r;
    for (const auto& [p, m] : poly_factor(cmon).factors) {
        size_t gi = r.facs.size();
        r.facs.emplace_back(p, m);
        for (const auto& P : F.primes_over(p)) {
            r.P.push_back(P);
            r.cap.push_back(P.e * m);
            r.grp.push_back(gi);
        }
    }
    return r;
}

bool odometer_step(std::vector<int>& w, const std::vector<int>& cap) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < cap[i]) {
            ++w[i];
            return true;
        }
        w[i] = 0;
    }
    return false;
}

bool odometer_step_range(std::vector<long>& v, const std::vector<long>& lo,
                         const std::vector<long>& hi) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < hi[i]) {
            ++v[i];
            return true;
        }
        v[i] = lo[i];
    }
    return false;
}

long to_long(const BigInt& a) {
    if (!a.fits_i64()) throw std::logic_error("value out of machine range");
    return static_cast<long>(a.to_i64());
}

void run_workers(int threads, const std::function<void(int)>& body) {
    if (threads <= 1) {
        body(0);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(static_cast<size_t>(threads));
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                body(w);
            } catch (...) {
                errs[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

std::string cr_fin_key(const FunctionField& F, const CompactRep& t) {
    std::string k;
    for (const auto& [P, v] : cr_support(F, t)) k += P.key() + ":" + std::to_string(v) + ";";
    return k;
}

}  // namespace

Poly solver_rhs(const FunctionField& F, const Poly& c) {
    (void)F;
    if (c.is_zero() || c.deg() < 1) throw FieldError("constant c unsupported");
    return c.monic();
}

bool norm_matches(const RatFunc& nrm, const Poly& cmon) {
    if (nrm.is_zero() || nrm.den.deg() != 0) return false;
    return nrm.num.monic() == cmon;
}

SolverContext make_context(std::shared_ptr<const FunctionField> F) {
    SolverContext ctx;
    ctx.F = F;
    ctx.cg = ClassGroup::build(F);
    // the kernel construction is complete, so the certification walk is
    // skipped here; tests exercise it separately
    ctx.units = sunit_basis(ctx.cg, {}, 0);
    return ctx;
}

SolverBounds solver_bounds(const SolverContext& ctx, const Poly& c) {
    const FunctionField& F = *ctx.F;
    const auto& inf = F.infinite_places();
    SolverBounds sb;
    sb.theta.reserve(inf.size());
    for (size_t j = 0; j < inf.size(); ++j) {
        BigInt s(0);
        for (const auto& row : ctx.units.rows) s += row[j].abs();
        sb.theta.emplace_back(s, BigInt(2));
    }
    sb.Theta = BigRat(0);
    for (size_t j = 0; j < inf.size(); ++j) {
        BigRat t = sb.theta[j] / BigRat(inf[j].e);
        if (t > sb.Theta) sb.Theta = t;
    }
    sb.Theta = sb.Theta + BigRat(c.deg(), F.degree());
    for (const BigRat& nrm : F.reduced_order_basis().norms)
        sb.deg_bounds.push_back(to_long((sb.Theta - nrm).floor()));
    return sb;
}

SearchStats search_stats(const SolverContext& ctx, const Poly& c) {
    const FunctionField& F = *ctx.F;
    Poly cmon = solver_rhs(F, c);
    SolverBounds sb = solver_bounds(ctx, cmon);
    SearchStats st;
    long e = 0;
    for (long b : sb.deg_bounds)
        if (b >= 0) e += b + 1;
    st.gp_exponent = BigInt(e);
    CPlaces cp = c_places(F, cmon);
    st.ideal_count = BigInt(1);
    for (int cap : cp.cap) st.ideal_count *= BigInt(cap + 1);
    st.tuple_bound = st.ideal_count;
    size_t ninf = F.infinite_places().size();
    for (size_t j = 0; j + 1 < ninf; ++j) {
        BigInt two_theta(0);
        for (const auto& row : ctx.units.rows) two_theta += row[j].abs();
        st.tuple_bound *= two_theta + BigInt(1);
    }
    return st;
}

std::string pow_count_string(uint32_t q, const BigInt& e) {
    if (e <= BigInt(40)) return BigInt::pow(BigInt(q), static_cast<uint64_t>(e.to_i64())).to_string();
    return std::to_string(q) + "^" + e.to_string();
}

std::vector<FieldElement> dedup_associates(const FunctionField& F,
                                           const std::vector<FieldElement>& in) {
    std::vector<FieldElement> out;
    std::set<std::string> seen;
    for (const auto& a : in) {
        Divisor d = div_of_element(F, a);
        std::fill(d.inf.begin(), d.inf.end(), 0);
        if (seen.insert(div_key(d)).second) out.push_back(a);
    }
    return out;
}

std::vector<CompactRep> dedup_associates(const FunctionField& F,
                                         const std::vector<CompactRep>& in) {
    std::vector<CompactRep> out;
    std::set<std::string> seen;
    for (const auto& t : in)
        if (seen.insert(cr_fin_key(F, t)).second) out.push_back(t);
    return out;
}

SolutionSet solve_gaal_pohst(const SolverContext& ctx, const Poly& c, const SolveOptions& opt) {
    const FunctionField& F = *ctx.F;
    SolutionSet out;
    out.c = solver_rhs(F, c);
    SolverBounds sb = solver_bounds(ctx, out.c);
    const auto& red = F.reduced_order_basis();
    size_t nb = red.elems.size();
    std::vector<size_t> len(nb), off(nb);
    size_t digits = 0;
    for (size_t i = 0; i < nb; ++i) {
        len[i] = sb.deg_bounds[i] >= 0 ? static_cast<size_t>(sb.deg_bounds[i]) + 1 : 0;
        off[i] = digits;
        digits += len[i];
    }
    BigInt total = BigInt::pow(BigInt(F.q()), digits);
    if (total > BigInt(static_cast<int64_t>(opt.gp_budget)))
        throw BudgetError("plain enumeration visits " +
                          pow_count_string(F.q(), BigInt(static_cast<int64_t>(digits))) +
                          " candidates, over the budget of " + std::to_string(opt.gp_budget));
    uint64_t n_all = static_cast<uint64_t>(total.to_i64());

    struct Hit {
        uint64_t idx;
        FieldElement a;
    };
    int threads = std::max(1, opt.threads);
    std::vector<std::vector<Hit>> hits(static_cast<size_t>(threads));
    uint32_t qv = F.q();
    run_workers(threads, [&](int w) {
        // stride walk: the digit odometer advances by the worker count
        std::vector<uint32_t> dg(digits, 0);
        uint64_t idx = static_cast<uint64_t>(w);
        {
            uint64_t r = idx;
            for (size_t k = 0; k < digits && r; ++k) {
                dg[k] = static_cast<uint32_t>(r % qv);
                r /= qv;
            }
        }
        while (idx < n_all) {
            if ((idx & 1023) == 0) check_deadline(opt);
            if (idx != 0) {
                FieldElement alpha = F.zero();
                bool nz = false;
                for (size_t i = 0; i < nb; ++i) {
                    if (len[i] == 0) continue;
                    std::vector<uint32_t> co(dg.begin() + static_cast<long>(off[i]),
                                             dg.begin() + static_cast<long>(off[i] + len[i]));
                    Poly lam(qv, co);
                    if (lam.is_zero()) continue;
                    nz = true;
                    alpha = F.add(alpha, F.mul_rat(red.elems[i], RatFunc(lam)));
                }
                if (nz && norm_matches(F.elt_norm(alpha), out.c))
                    hits[static_cast<size_t>(w)].push_back({idx, alpha});
            }
            idx += static_cast<uint64_t>(threads);
            uint64_t carry = static_cast<uint64_t>(threads);
            for (size_t k = 0; k < digits && carry; ++k) {
                carry += dg[k];
                dg[k] = static_cast<uint32_t>(carry % qv);
                carry /= qv;
            }
        }
    });
    std::vector<Hit> merged;
    for (auto& h : hits) merged.insert(merged.end(), h.begin(), h.end());
    std::sort(merged.begin(), merged.end(), [](const Hit& a, const Hit& b) { return a.idx < b.idx; });
    std::vector<FieldElement> found;
    found.reserve(merged.size());
    for (auto& h : merged) found.push_back(std::move(h.a));
    out.elems = dedup_associates(F, found);
    out.candidates = n_all ? n_all - 1 : 0;
    return out;
}

SolutionSet solve_exhaustive_cr(const SolverContext& ctx, const Poly& c, const SolveOptions& opt) {
    const FunctionField& F = *ctx.F;
    SolutionSet out;
    out.c = solver_rhs(F, c);
    (void)distinguished_inf(F);
    SolverBounds sb = solver_bounds(ctx, out.c);
    CPlaces cp = c_places(F, out.c);
    const auto& inf = F.infinite_places();
    size_t ninf = inf.size();
    int dc = out.c.deg(), n = F.degree();
    std::vector<long> lo(ninf), hi(ninf);
    for (size_t j = 0; j < ninf; ++j) {
        BigRat shift(static_cast<int64_t>(inf[j].e) * dc, n);
        lo[j] = to_long((-sb.theta[j] - shift).ceil());
        hi[j] = to_long((sb.theta[j] - shift).floor());
    }

    // materialize the finite tuples; workers take whole tuples so the
    // first-hit-per-ideal cut stays local
    std::vector<std::vector<int>> tuples;
    {
        std::vector<int> w(cp.P.size(), 0);
        do {
            tuples.push_back(w);
        } while (odometer_step(w, cp.cap));
    }
    bool empty_box = false;
    for (size_t j = 0; j + 1 < ninf; ++j)
        if (lo[j] > hi[j]) empty_box = true;

    struct Hit {
        size_t tup;
        CompactRep cr;
    };
    int threads = std::max(1, opt.threads);
    std::vector<std::vector<Hit>> hits(static_cast<size_t>(threads));
    std::vector<uint64_t> cand(static_cast<size_t>(threads), 0), grid(static_cast<size_t>(threads), 0);
    run_workers(threads, [&](int w) {
        for (size_t ti = static_cast<size_t>(w); ti < tuples.size();
             ti += static_cast<size_t>(threads)) {
            const auto& tw = tuples[ti];
            if (empty_box) continue;
            std::vector<std::pair<PrimePlace, int>> sup;
            long dfin = 0;
            for (size_t i = 0; i < tw.size(); ++i)
                if (tw[i] != 0) {
                    sup.emplace_back(cp.P[i], tw[i]);
                    dfin += static_cast<long>(tw[i]) * cp.P[i].deg();
                }
            FracIdeal I = ideal_from_support(F, sup);
            std::vector<long> vfree(ninf ? ninf - 1 : 0);
            for (size_t j = 0; j + 1 < ninf; ++j) vfree[j] = lo[j];
            bool more = true;
            while (more) {
                ++grid[static_cast<size_t>(w)];
                check_deadline(opt);
                long acc = dfin;
                for (size_t j = 0; j + 1 < ninf; ++j) acc += vfree[j] * inf[j].deg;
                long dl = inf[ninf - 1].deg;
                // the last entry is pinned by degree zero, then must land
                // in its own box
                if (acc % dl == 0) {
                    long vl = -acc / dl;
                    if (vl >= lo[ninf - 1] && vl <= hi[ninf - 1]) {
                        std::vector<int> V(ninf);
                        for (size_t j = 0; j + 1 < ninf; ++j) V[j] = static_cast<int>(vfree[j]);
                        V[ninf - 1] = static_cast<int>(vl);
                        ++cand[static_cast<size_t>(w)];
                        CompactRep cr = comp_rep(F, I, V);
                        bool ok = true;
                        for (size_t j = 0; j < ninf && ok; ++j)
                            ok = cr_val_inf(F, cr, j) == V[j];
                        if (ok && cr_is_integral(F, cr) && norm_matches(cr_norm(F, cr), out.c)) {
                            hits[static_cast<size_t>(w)].push_back({ti, std::move(cr)});
                            break;  // same ideal, associate generators
                        }
                    }
                }
                more = odometer_step_range(vfree, lo, hi);
            }
        }
    });
    std::vector<Hit> merged;
    for (auto& h : hits) merged.insert(merged.end(), h.begin(), h.end());
    std::sort(merged.begin(), merged.end(), [](const Hit& a, const Hit& b) { return a.tup < b.tup; });
    std::vector<CompactRep> found;
    found.reserve(merged.size());
    for (auto& h : merged) found.push_back(std::move(h.cr));
    out.crs = dedup_associates(F, found);
    for (int t = 0; t < threads; ++t) {
        out.candidates += cand[static_cast<size_t>(t)];
        out.tuples += grid[static_cast<size_t>(t)];
    }
    out.ideals = tuples.size();
    return out;
}

SolutionSet solve_index_calculus(const SolverContext& ctx, const Poly& c, const SolveOptions& opt) {
    const FunctionField& F = *ctx.F;
    SolutionSet out;
    out.c = solver_rhs(F, c);
    (void)distinguished_inf(F);
    CPlaces cp = c_places(F, out.c);
    SUnitBasis sc = sunit_basis(ctx.cg, cp.P, 0);
    size_t nf = cp.P.size(), ninf = sc.ninf, ng = sc.rows.size();
    IMat A(nf, IVec(ng, BigInt(0)));
    for (size_t i = 0; i < nf; ++i)
        for (size_t k = 0; k < ng; ++k) A[i][k] = sc.rows[k][i];

    std::vector<int> w(nf, 0);
    do {
        ++out.ideals;
        check_deadline(opt);
        // the divisor's norm must be exactly c, factor by factor
        bool nm = true;
        for (size_t g = 0; g < cp.facs.size() && nm; ++g) {
            long s = 0;
            for (size_t i = 0; i < nf; ++i)
                if (cp.grp[i] == g) s += static_cast<long>(cp.P[i].f_res) * w[i];
            nm = s == cp.facs[g].second;
        }
        if (!nm) continue;
        IVec b(nf);
        for (size_t i = 0; i < nf; ++i) b[i] = BigInt(w[i]);
        auto sol = solve_integer_system(A, b);
        if (!sol.solvable) continue;  // the class of the divisor obstructs
        ++out.candidates;
        IVec vinf(ninf, BigInt(0));
        for (size_t j = 0; j < ninf; ++j)
            for (size_t k = 0; k < ng; ++k)
                vinf[j] += sol.particular[k] * sc.rows[k][nf + j];
        IVec v0 = cvp_babai(ctx.units.rows, vinf);
        std::vector<int> V(ninf);
        for (size_t j = 0; j < ninf; ++j) {
            long d = to_long(vinf[j] - v0[j]);
            V[j] = static_cast<int>(d);
        }
        std::vector<std::pair<PrimePlace, int>> sup;
        for (size_t i = 0; i < nf; ++i)
            if (w[i] != 0) sup.emplace_back(cp.P[i], w[i]);
        CompactRep cr = comp_rep(F, ideal_from_support(F, sup), V);
        for (size_t j = 0; j < ninf; ++j)
            if (cr_val_inf(F, cr, j) != V[j])
                throw std::logic_error("index calculus witness missed its valuations");
        if (!cr_is_integral(F, cr) || !norm_matches(cr_norm(F, cr), out.c))
            throw std::logic_error("index calculus witness failed the norm check");
        out.crs.push_back(std::move(cr));
    } while (odometer_step(w, cp.cap));
    return out;
}

}  // namespace normeq
