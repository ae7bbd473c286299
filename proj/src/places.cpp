// p-local structure of the maximal order: saturation, prime splitting,
// valuations, residue fields, digit expansions, and the u-model that
// realizes the places at infinity. Everything is exact linear algebra
// over F_q or k[x].
#include <algorithm>

#include "normeq/field.hpp"
#include "normeq/fqlin.hpp"

namespace normeq {

namespace {

// O/pO as an F_q-algebra with basis x^a omega_i, a < deg p; the
// coefficient of x^a omega_i sits at index i * deg p + a
struct AlgebraModP {
    uint32_t q;
    Poly p;
    int n, dp, N;
    const std::vector<std::vector<std::vector<Poly>>>* table;

    AlgebraModP(uint32_t q_, Poly p_, int n_,
                const std::vector<std::vector<std::vector<Poly>>>* tab)
        : q(q_), p(std::move(p_)), n(n_), dp(p.deg()), N(n * dp), table(tab) {}

    FqVec pack(const std::vector<Poly>& co) const {
        FqVec v(static_cast<size_t>(N), 0);
        for (int i = 0; i < n; ++i) {
            Poly r = co[static_cast<size_t>(i)] % p;
            for (int a = 0; a <= r.deg(); ++a)
                v[static_cast<size_t>(i * dp + a)] = r.coeff(static_cast<size_t>(a));
        }
        return v;
    }

    std::vector<Poly> unpack(const FqVec& v) const {
        std::vector<Poly> co(static_cast<size_t>(n), Poly(q));
        for (int i = 0; i < n; ++i) {
            std::vector<uint32_t> c(static_cast<size_t>(dp), 0);
            for (int a = 0; a < dp; ++a) c[static_cast<size_t>(a)] = v[static_cast<size_t>(i * dp + a)];
            co[static_cast<size_t>(i)] = Poly(q, c);
        }
        return co;
    }

    FqVec one() const {
        std::vector<Poly> co(static_cast<size_t>(n), Poly(q));
        co[0] = Poly::constant(q, 1);
        return pack(co);
    }

    FqVec unit(size_t j) const {
        FqVec v(static_cast<size_t>(N), 0);
        v[j] = 1;
        return v;
    }

    FqVec mul(const FqVec& a, const FqVec& b) const {
        auto ca = unpack(a), cb = unpack(b);
        std::vector<Poly> r(static_cast<size_t>(n), Poly(q));
        for (int i = 0; i < n; ++i) {
            if (ca[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (cb[static_cast<size_t>(j)].is_zero()) continue;
                Poly c = ca[static_cast<size_t>(i)] * cb[static_cast<size_t>(j)] % p;
                const auto& row = (*table)[static_cast<size_t>(i)][static_cast<size_t>(j)];
                for (int l = 0; l < n; ++l)
                    if (!row[static_cast<size_t>(l)].is_zero())
                        r[static_cast<size_t>(l)] = r[static_cast<size_t>(l)] + c * row[static_cast<size_t>(l)];
            }
        }
        return pack(r);
    }

    FqVec pow(FqVec a, uint64_t e) const {
        FqVec r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // q^s with q^s >= N bounds the nilpotency order
    int frob_steps() const {
        int s = 0;
        uint64_t pw = 1;
        while (pw < static_cast<uint64_t>(N)) {
            pw *= q;
            ++s;
        }
        return s;
    }

    FqMat mult_matrix(const FqVec& a) const {
        FqMat m(static_cast<size_t>(N), FqVec(static_cast<size_t>(N), 0));
        for (size_t j = 0; j < static_cast<size_t>(N); ++j) {
            FqVec col = mul(a, unit(j));
            for (size_t i = 0; i < static_cast<size_t>(N); ++i) m[i][j] = col[i];
        }
        return m;
    }
};

std::vector<FqVec> radical_basis(const AlgebraModP& A) {
    size_t N = static_cast<size_t>(A.N);
    FqMat frob(N, FqVec(N, 0));
    for (size_t j = 0; j < N; ++j) {
        FqVec col = A.pow(A.unit(j), A.q);
        for (size_t i = 0; i < N; ++i) frob[i][j] = col[i];
    }
    FqMat it = fq_mat_pow(frob, static_cast<uint64_t>(A.frob_steps()), A.q);
    return fq_kernel(it, A.q);
}

FqMat fq_mat_inverse(const FqMat& a, uint32_t q) {
    size_t n = a.size();
    FqMat m(n, FqVec(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    auto piv = fq_rref(m, q);
    if (piv.size() != n || piv.back() != n - 1)
        throw std::logic_error("fq_mat_inverse: singular");
    FqMat inv(n, FqVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

// quotient by the radical: B = A / R with a fixed complement section
struct QuotientAlg {
    const AlgebraModP* A;
    std::vector<FqVec> section;  // ambient vectors spanning a complement of R
    FqMat proj;                  // ambient -> quotient coordinates
    size_t k = 0;

    FqVec lift(const FqVec& b) const {
        FqVec v(static_cast<size_t>(A->N), 0);
        for (size_t j = 0; j < k; ++j) {
            if (!b[j]) continue;
            for (size_t i = 0; i < v.size(); ++i)
                v[i] = fq_add(v[i], fq_mul(b[j], section[j][i], A->q), A->q);
        }
        return v;
    }
    FqVec mul(const FqVec& a, const FqVec& b) const {
        return fq_mat_apply(proj, A->mul(lift(a), lift(b)), A->q);
    }
    FqVec pow(FqVec a, uint64_t e) const {
        FqVec r = fq_mat_apply(proj, A->one(), A->q);
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

QuotientAlg make_quotient(const AlgebraModP& A, const std::vector<FqVec>& rad) {
    size_t N = static_cast<size_t>(A.N);
    QuotientAlg Q;
    Q.A = &A;
    FqSpan sp(N, A.q);
    for (const auto& r : rad)
        if (sp.insert(r)) throw std::logic_error("radical basis is dependent");
    for (size_t i = 0; i < N && sp.rank() < N; ++i) {
        FqVec e(N, 0);
        e[i] = 1;
        if (!sp.insert(e)) Q.section.push_back(std::move(e));
    }
    Q.k = Q.section.size();
    FqMat full(N, FqVec(N, 0));
    for (size_t j = 0; j < rad.size(); ++j)
        for (size_t i = 0; i < N; ++i) full[i][j] = rad[j][i];
    for (size_t j = 0; j < Q.k; ++j)
        for (size_t i = 0; i < N; ++i) full[i][rad.size() + j] = Q.section[j][i];
    FqMat inv = fq_mat_inverse(full, A.q);
    Q.proj.assign(Q.k, FqVec(N, 0));
    for (size_t i = 0; i < Q.k; ++i) Q.proj[i] = inv[rad.size() + i];
    return Q;
}

// subalgebra of the quotient, in quotient coordinates
struct SubAlgebra {
    std::vector<FqVec> basis;
    FqVec unit;
};

FqVec coords_in(const std::vector<FqVec>& basis, const FqVec& v, uint32_t q) {
    size_t dim = basis.empty() ? v.size() : basis[0].size();
    FqMat m(dim, FqVec(basis.size(), 0));
    for (size_t c = 0; c < basis.size(); ++c)
        for (size_t r = 0; r < dim; ++r) m[r][c] = basis[c][r];
    auto sol = fq_solve(m, v, q);
    if (!sol) throw std::logic_error("coords_in: vector outside span");
    return *sol;
}

// split a separable commutative algebra into its field components: the
// subspace fixed by x -> x^q is spanned by the component indicators, so
// any non-scalar fixed vector splits off eigenspaces
void split_separable(const QuotientAlg& Q, const SubAlgebra& S, std::vector<SubAlgebra>& out) {
    uint32_t q = Q.A->q;
    size_t k = S.basis.size();
    if (k == 1) {
        out.push_back(S);
        return;
    }
    FqMat mf(k, FqVec(k, 0));
    for (size_t j = 0; j < k; ++j) {
        FqVec img = coords_in(S.basis, Q.pow(S.basis[j], q), q);
        for (size_t i = 0; i < k; ++i) mf[i][j] = img[i];
    }
    for (size_t i = 0; i < k; ++i) mf[i][i] = fq_sub(mf[i][i], 1, q);
    auto fixed = fq_kernel(mf, q);
    if (fixed.size() <= 1) {
        out.push_back(S);
        return;
    }
    FqVec ucoords = coords_in(S.basis, S.unit, q);
    size_t i0 = 0;
    while (ucoords[i0] == 0) ++i0;
    const FqVec* chosen = nullptr;
    for (const auto& w : fixed) {
        uint32_t c = fq_mul(w[i0], fq_inv(ucoords[i0], q), q);
        bool prop = true;
        for (size_t i = 0; i < k && prop; ++i)
            if (w[i] != fq_mul(c, ucoords[i], q)) prop = false;
        if (!prop) {
            chosen = &w;
            break;
        }
    }
    if (!chosen) throw std::logic_error("no separating fixed vector");
    FqVec vamb(S.basis[0].size(), 0);
    for (size_t j = 0; j < k; ++j) {
        if (!(*chosen)[j]) continue;
        for (size_t i = 0; i < vamb.size(); ++i)
            vamb[i] = fq_add(vamb[i], fq_mul((*chosen)[j], S.basis[j][i], q), q);
    }
    FqMat mv(k, FqVec(k, 0));
    for (size_t j = 0; j < k; ++j) {
        FqVec img = coords_in(S.basis, Q.mul(vamb, S.basis[j]), q);
        for (size_t i = 0; i < k; ++i) mv[i][j] = img[i];
    }
    // a fixed vector satisfies v^q = v, so its minimal polynomial splits
    // into distinct linear factors and the eigenspaces exhaust S
    std::vector<std::vector<FqVec>> spaces;
    for (uint32_t c = 0; c < q; ++c) {
        FqMat mc = mv;
        for (size_t i = 0; i < k; ++i) mc[i][i] = fq_sub(mc[i][i], c, q);
        auto ker = fq_kernel(mc, q);
        if (!ker.empty()) spaces.push_back(std::move(ker));
    }
    if (spaces.size() < 2) throw std::logic_error("separating vector did not split");
    std::vector<FqVec> all;
    for (const auto& sp : spaces)
        for (const auto& w : sp) all.push_back(w);
    if (all.size() != k) throw std::logic_error("eigenspaces do not fill the algebra");
    FqVec upieces = coords_in(all, ucoords, q);
    size_t off = 0;
    for (const auto& sp : spaces) {
        SubAlgebra sub;
        FqVec su(S.basis[0].size(), 0);
        for (size_t j = 0; j < sp.size(); ++j) {
            FqVec amb(S.basis[0].size(), 0);
            for (size_t l = 0; l < k; ++l) {
                if (!sp[j][l]) continue;
                for (size_t i = 0; i < amb.size(); ++i)
                    amb[i] = fq_add(amb[i], fq_mul(sp[j][l], S.basis[l][i], q), q);
            }
            uint32_t uc = upieces[off + j];
            if (uc)
                for (size_t i = 0; i < su.size(); ++i)
                    su[i] = fq_add(su[i], fq_mul(uc, amb[i], q), q);
            sub.basis.push_back(std::move(amb));
        }
        sub.unit = std::move(su);
        off += sp.size();
        split_separable(Q, sub, out);
    }
}

bool place_less(const PrimePlace& a, const PrimePlace& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    if (a.e != b.e) return a.e < b.e;
    for (size_t i = 0; i < a.basis.size(); ++i)
        for (size_t j = 0; j < a.basis[i].size(); ++j) {
            if (a.basis[i][j] == b.basis[i][j]) continue;
            return a.basis[i][j] < b.basis[i][j];
        }
    return false;
}

Poly reverse_poly(const Poly& a) {
    std::vector<uint32_t> c(a.c.rbegin(), a.c.rend());
    return Poly(a.q, std::move(c));
}

}  // namespace

struct PrimeAux {
    std::vector<PMat> powers;    // powers[K]: triangular basis of the K-th power
    std::vector<Poly> beta_num;  // omega coords of b; b / p lowers the
                                 // valuation at this place by exactly one
    std::vector<Poly> pi;        // omega coords of a uniformizer
    FieldElement pi_elt;
    std::shared_ptr<const ExtField> res_field;
    FqMat resmat;                // residue-class coords -> res_field coords

    struct Local {
        std::vector<int> diag;    // diagonal degrees of powers[K]
        std::vector<size_t> offs; // packing offset per coordinate row
        size_t dim = 0;
    };
    std::map<int, Local> locals;
};

namespace {

// reduce omega coordinates modulo a triangular module basis
void reduce_mod_basis(std::vector<Poly>& z, const PMat& h) {
    size_t n = z.size();
    for (size_t ii = n; ii-- > 0;) {
        if (z[ii].deg() < h[ii][ii].deg()) continue;
        Poly quo, rem;
        Poly::divmod(z[ii], h[ii][ii], quo, rem);
        z[ii] = rem;
        for (size_t i = 0; i < ii; ++i)
            if (!h[i][ii].is_zero()) z[i] = z[i] - quo * h[i][ii];
    }
}

FqVec pack_classes(const std::vector<Poly>& z, const PrimeAux::Local& loc) {
    FqVec v(loc.dim, 0);
    for (size_t i = 0; i < z.size(); ++i)
        for (int a = 0; a <= z[i].deg(); ++a)
            v[loc.offs[i] + static_cast<size_t>(a)] = z[i].coeff(static_cast<size_t>(a));
    return v;
}

}  // namespace

void FunctionField::build_omega_table() {
    size_t n = static_cast<size_t>(n_);
    omul_.assign(n, std::vector<std::vector<Poly>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            FieldElement prod = mul(omega(i), omega(j));
            auto co = omega_coords_integral(prod);
            if (!co) throw std::logic_error("order basis is not multiplicatively closed");
            omul_[i][j] = *co;
            if (i != j) omul_[j][i] = *co;
        }
}

void FunctionField::compute_maximal_order(const BuildOptions& opt) {
    size_t n = static_cast<size_t>(n_);
    w_ = pmat_identity(n, q_);
    d_ = Poly::constant(q_, 1);
    build_omega_table();
    auto fac = poly_factor(disc_);
    for (const auto& [p, mult] : fac.factors) {
        if (mult < 2) continue;
        if (opt.maximal_at && !(p == *opt.maximal_at)) continue;
        while (true) {
            AlgebraModP A(q_, p, n_, &omul_);
            auto rad = radical_basis(A);
            PMat gens(n, std::vector<Poly>(n + rad.size(), Poly(q_)));
            for (size_t i = 0; i < n; ++i) gens[i][i] = p;
            for (size_t j = 0; j < rad.size(); ++j) {
                auto co = A.unpack(rad[j]);
                for (size_t i = 0; i < n; ++i) gens[i][n + j] = co[i];
            }
            PMat J = pmat_hnf_basis(gens);
            PMat pJ = J;
            for (auto& row : pJ)
                for (auto& e : row) e = e * p;
            // multiplier ring of the radical ideal, scaled by p
            PMat U = pmat_identity(n, q_);
            for (size_t l = 0; l < n; ++l) {
                std::vector<Poly> bl(n);
                for (size_t i = 0; i < n; ++i) bl[i] = J[i][l];
                PMat ml(n, std::vector<Poly>(n, Poly(q_)));
                for (size_t j = 0; j < n; ++j) {
                    std::vector<Poly> ej(n, Poly(q_));
                    ej[j] = Poly::constant(q_, 1);
                    auto col = omega_mul(bl, ej);
                    for (size_t i = 0; i < n; ++i) ml[i][j] = col[i];
                }
                PMat v = pmat_preimage(pmat_mul(ml, U), pJ);
                U = pmat_mul(U, v);
            }
            if (pmat_det(U).deg() == static_cast<int>(n) * p.deg()) break;
            w_ = pmat_hnf_basis(pmat_mul(w_, U));
            d_ = d_ * p;
            Poly g = d_;
            for (const auto& row : w_)
                for (const auto& e : row)
                    if (!e.is_zero()) g = Poly::gcd(g, e);
            if (g.deg() > 0) {
                d_ = Poly::divexact(d_, g).monic();
                for (auto& row : w_)
                    for (auto& e : row)
                        if (!e.is_zero()) e = Poly::divexact(e, g);
            }
            build_omega_table();
        }
    }
}

std::vector<PrimePlace> FunctionField::split_prime(const Poly& p) const {
    size_t n = static_cast<size_t>(n_);
    AlgebraModP A(q_, p, n_, &omul_);
    auto rad = radical_basis(A);
    QuotientAlg Q = make_quotient(A, rad);
    SubAlgebra whole;
    for (size_t j = 0; j < Q.k; ++j) {
        FqVec e(Q.k, 0);
        e[j] = 1;
        whole.basis.push_back(std::move(e));
    }
    whole.unit = fq_mat_apply(Q.proj, A.one(), q_);
    std::vector<SubAlgebra> comps;
    split_separable(Q, whole, comps);

    std::vector<PrimePlace> out;
    uint64_t pw = 1;
    for (int s = A.frob_steps(); s > 0; --s) pw *= q_;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& C = comps[ci];
        PrimePlace pl;
        pl.p = p;
        if (C.basis.size() % static_cast<size_t>(A.dp) != 0)
            throw std::logic_error("component dimension not divisible by deg p");
        pl.f_res = static_cast<int>(C.basis.size()) / A.dp;
        // the prime is generated by p, the radical, and the lifts of the
        // other components
        std::vector<std::vector<Poly>> extra;
        for (const auto& r : rad) extra.push_back(A.unpack(r));
        for (size_t cj = 0; cj < comps.size(); ++cj) {
            if (cj == ci) continue;
            for (const auto& b : comps[cj].basis) extra.push_back(A.unpack(Q.lift(b)));
        }
        PMat gens(n, std::vector<Poly>(n + extra.size(), Poly(q_)));
        for (size_t i = 0; i < n; ++i) gens[i][i] = p;
        for (size_t j = 0; j < extra.size(); ++j)
            for (size_t i = 0; i < n; ++i) gens[i][n + j] = extra[j][i];
        pl.basis = pmat_hnf_basis(gens);
        if (pl.basis.empty() || pl.basis[0].size() != n)
            throw std::logic_error("prime module is not full rank");
        // local dimension at the lifted component idempotent gives e
        FqVec a = A.pow(Q.lift(C.unit), pw);
        if (A.mul(a, a) != a) throw std::logic_error("idempotent lift did not converge");
        size_t dim_local = fq_rank(A.mult_matrix(a), q_);
        size_t efd = static_cast<size_t>(pl.f_res) * static_cast<size_t>(A.dp);
        if (dim_local % efd != 0) throw std::logic_error("local dimension mismatch");
        pl.e = static_cast<int>(dim_local / efd);
        out.push_back(std::move(pl));
    }
    std::sort(out.begin(), out.end(), place_less);
    int sum = 0;
    for (size_t i = 0; i < out.size(); ++i) {
        out[i].idx = i;
        sum += out[i].e * out[i].f_res;
    }
    if (sum != n_) throw std::logic_error("ramification and residue degrees do not sum to n");
    return out;
}

const std::vector<PrimePlace>& FunctionField::primes_over(const Poly& p) const {
    if (p.q != q_ || !p.is_monic() || p.deg() < 1 || !poly_is_irreducible(p))
        throw std::invalid_argument("primes_over needs a monic irreducible of k[x]");
    if (maximal_at_ && !(p == *maximal_at_))
        throw std::logic_error("order is saturated at a single prime only");
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = prime_cache_.find(p);
    if (it != prime_cache_.end()) return it->second;
    auto placed = prime_cache_.emplace(p, split_prime(p));
    return placed.first->second;
}

namespace {

// polynomials in t with coefficients in k[x]/(p), stored reduced and
// without trailing zeros
struct ResCtx {
    const Poly& p;
    uint32_t q;

    static std::vector<Poly> trim(std::vector<Poly> v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return v;
    }
    Poly inv(const Poly& a) const {
        Poly s(q), u(q);
        Poly g = Poly::xgcd(a % p, p, s, u);
        if (g.deg() != 0) throw std::logic_error("residue coefficient is not invertible");
        return s.scale(fq_inv(g.coeff(0), q)) % p;
    }
    Poly compose_mod(const Poly& a, const Poly& b) const {
        Poly r(q);
        for (size_t i = a.c.size(); i-- > 0;) {
            r = (r * b) % p;
            if (a.c[i]) r = r + Poly::constant(q, a.c[i]);
        }
        return r;
    }
    // clear all degrees >= deg m against the monic modulus m
    std::vector<Poly> reduce(std::vector<Poly> r, const std::vector<Poly>& m) const {
        size_t dm = m.size() - 1;
        while (r.size() > dm) {
            Poly c = r.back();
            r.pop_back();
            if (c.is_zero()) continue;
            size_t off = r.size() - dm;
            for (size_t j = 0; j < dm; ++j)
                r[off + j] = (r[off + j] - c * m[j]) % p;
        }
        return trim(std::move(r));
    }
    std::vector<Poly> mulmod(const std::vector<Poly>& a, const std::vector<Poly>& b,
                             const std::vector<Poly>& m) const {
        if (a.empty() || b.empty()) return {};
        std::vector<Poly> r(a.size() + b.size() - 1, Poly(q));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        return reduce(std::move(r), m);
    }
    std::vector<Poly> monic(std::vector<Poly> a) const {
        a = trim(std::move(a));
        if (a.empty() || a.back().is_one()) return a;
        Poly li = inv(a.back());
        for (auto& c : a) c = (c * li) % p;
        return a;
    }
    std::vector<Poly> tgcd(std::vector<Poly> a, std::vector<Poly> b) const {
        a = trim(std::move(a));
        b = trim(std::move(b));
        while (!b.empty()) {
            b = monic(std::move(b));
            while (a.size() >= b.size()) {
                Poly c = a.back();
                a.pop_back();
                if (!c.is_zero()) {
                    size_t off = a.size() + 1 - b.size();
                    for (size_t j = 0; j + 1 < b.size(); ++j)
                        a[off + j] = (a[off + j] - c * b[j]) % p;
                }
                while (!a.empty() && a.back().is_zero()) a.pop_back();
            }
            std::swap(a, b);
        }
        return monic(std::move(a));
    }
    std::vector<Poly> tdiv(std::vector<Poly> a, const std::vector<Poly>& b) const {
        size_t db = b.size() - 1;
        std::vector<Poly> quo(a.size() - db, Poly(q));
        while (a.size() > db) {
            Poly c = a.back();
            a.pop_back();
            quo[a.size() - db] = c;
            if (c.is_zero()) continue;
            size_t off = a.size() - db;
            for (size_t j = 0; j < db; ++j)
                a[off + j] = (a[off + j] - c * b[j]) % p;
        }
        for (const auto& c : a)
            if (!c.is_zero()) throw std::logic_error("inexact division in the distinct degree split");
        return quo;
    }
    // one application of the q-power map modulo m; pow1[i] = (t^q)^i
    // mod m, and the coefficient map is c(x) -> c(x^q) mod p
    std::vector<Poly> frob_step(const std::vector<Poly>& h,
                                const std::vector<std::vector<Poly>>& pow1,
                                const Poly& xq) const {
        std::vector<Poly> out;
        for (size_t i = 0; i < h.size(); ++i) {
            if (h[i].is_zero()) continue;
            Poly fc = compose_mod(h[i], xq);
            const auto& b = pow1[i];
            if (out.size() < b.size()) out.resize(b.size(), Poly(q));
            for (size_t j = 0; j < b.size(); ++j)
                out[j] = (out[j] + fc * b[j]) % p;
        }
        return trim(std::move(out));
    }
};

}  // namespace

std::vector<int> FunctionField::residue_degrees(const Poly& p) const {
    if (p.q != q_ || !p.is_monic() || p.deg() < 1 || !poly_is_irreducible(p))
        throw std::invalid_argument("residue_degrees needs a monic irreducible of k[x]");
    if (maximal_at_ && !(p == *maximal_at_))
        throw std::logic_error("order is saturated at a single prime only");
    if (poly_val(disc_, p) > 0) {
        std::vector<int> out;
        for (const auto& pl : primes_over(p)) out.push_back(pl.f_res);
        std::sort(out.begin(), out.end());
        return out;
    }

    // p is prime to disc(f), so the equation order is maximal and
    // unramified at p and the splitting of p matches the factorisation
    // type of f over k[x]/(p); distinct degree splitting reads that
    // type off without producing the factors
    ResCtx R{p, q_};
    std::vector<Poly> rem(f_.size());
    for (size_t i = 0; i < f_.size(); ++i) rem[i] = f_[i] % p;
    Poly xq = Poly::powmod(Poly::x(q_), q_, p);
    size_t dp = static_cast<size_t>(p.deg());
    std::vector<Poly> h{Poly(q_), Poly::constant(q_, 1)};
    std::vector<int> out;
    int m = 0;
    while (rem.size() > 1) {
        int dr = static_cast<int>(rem.size()) - 1;
        ++m;
        if (2 * m > dr) {
            // whatever is left is a single factor
            out.push_back(dr);
            break;
        }
        std::vector<std::vector<Poly>> pow1(rem.size() - 1);
        pow1[0] = {Poly::constant(q_, 1)};
        std::vector<Poly> tq(static_cast<size_t>(q_) + 1, Poly(q_));
        tq.back() = Poly::constant(q_, 1);
        pow1[1] = R.reduce(std::move(tq), rem);
        for (size_t i = 2; i < pow1.size(); ++i)
            pow1[i] = R.mulmod(pow1[i - 1], pow1[1], rem);
        // h goes from t^(q^(dp(m-1))) to t^(q^(dp m)) modulo rem
        for (size_t s = 0; s < dp; ++s) h = R.frob_step(h, pow1, xq);
        std::vector<Poly> diff = h;
        if (diff.size() < 2) diff.resize(2, Poly(q_));
        diff[1] = diff[1] - Poly::constant(q_, 1);
        std::vector<Poly> g = R.tgcd(diff, rem);
        if (g.size() > 1) {
            int dg = static_cast<int>(g.size()) - 1;
            for (int i = 0; i < dg / m; ++i) out.push_back(m);
            rem = R.tdiv(rem, g);
            if (rem.size() > 1) h = R.reduce(std::move(h), rem);
        }
    }
    int sum = 0;
    for (int d : out) sum += d;
    if (sum != n_) throw std::logic_error("splitting degrees do not sum to n");
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// count how often multiplication by beta = b / p keeps all omega
// denominators coprime to p
int val_loop(const FunctionField& F, const std::vector<Poly>& a, const PrimePlace& pl,
             const std::vector<Poly>& beta_num, long cap) {
    size_t n = a.size();
    std::vector<RatFunc> g(n), b(n);
    for (size_t i = 0; i < n; ++i) {
        g[i] = RatFunc(a[i]);
        b[i] = RatFunc(beta_num[i]);
    }
    RatFunc pinv(Poly::constant(pl.p.q, 1), pl.p);
    int v = 0;
    while (true) {
        std::vector<RatFunc> next = F.omega_mul_rat(g, b);
        bool integral = true;
        for (auto& c : next) {
            c = c * pinv;
            if (!c.is_zero() && (c.den % pl.p).is_zero()) integral = false;
        }
        if (!integral) break;
        g = std::move(next);
        if (++v > cap) throw std::logic_error("valuation loop exceeded its bound");
    }
    return v;
}

// dense polynomials over an ExtField, coefficient list c0..cd
using ExtPoly = std::vector<ExtElem>;

void ep_trim(const ExtField& K, ExtPoly& f) {
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}

void ep_monicize(const ExtField& K, ExtPoly& f) {
    if (f.empty() || K.is_one(f.back())) return;
    ExtElem li = K.inv(f.back());
    for (auto& c : f) c = K.mul(c, li);
}

// remainder modulo monic m
ExtPoly ep_rem(const ExtField& K, ExtPoly a, const ExtPoly& m) {
    while (a.size() >= m.size()) {
        ExtElem c = a.back();
        if (!K.is_zero(c)) {
            size_t off = a.size() - m.size();
            for (size_t j = 0; j + 1 < m.size(); ++j)
                a[off + j] = K.sub(a[off + j], K.mul(c, m[j]));
        }
        a.pop_back();
    }
    ep_trim(K, a);
    return a;
}

ExtPoly ep_mulmod(const ExtField& K, const ExtPoly& a, const ExtPoly& b, const ExtPoly& m) {
    if (a.empty() || b.empty()) return {};
    ExtPoly r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    return ep_rem(K, std::move(r), m);
}

ExtPoly ep_powmod(const ExtField& K, ExtPoly b, uint32_t e, const ExtPoly& m) {
    ExtPoly r{K.one()};
    while (e) {
        if (e & 1) r = ep_mulmod(K, r, b, m);
        b = ep_mulmod(K, b, b, m);
        e >>= 1;
    }
    return r;
}

ExtPoly ep_gcd(const ExtField& K, ExtPoly a, ExtPoly b) {
    ep_trim(K, a);
    ep_trim(K, b);
    while (!b.empty()) {
        ep_monicize(K, b);
        ExtPoly r = ep_rem(K, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// one root in K of a squarefree monic polynomial that splits in K; the
// exponent (|K|-1)/2 is reached through a Frobenius chain, so no single
// power ever exceeds q and the order of K is never materialized
ExtElem ep_root(const ExtField& K, ExtPoly g) {
    ep_monicize(K, g);
    uint64_t st = 0x2545f4914f6cdd1dULL;
    auto rng = [&st]() {
        st ^= st << 13;
        st ^= st >> 7;
        st ^= st << 17;
        return st;
    };
    int stuck = 0;
    while (g.size() > 2) {
        if (++stuck > 4096) throw std::logic_error("splitting made no progress");
        ExtElem a = K.zero();
        for (auto& c : a) c = static_cast<uint32_t>(rng() % K.q());
        ExtPoly h;
        if (K.q() == 2) {
            // trace of a*y separates roots once a hits a separating functional
            ExtPoly w{K.zero(), a};
            h = w;
            for (uint32_t i = 1; i < K.degree(); ++i) {
                w = ep_mulmod(K, w, w, g);
                if (h.size() < w.size()) h.resize(w.size(), K.zero());
                for (size_t j = 0; j < w.size(); ++j) h[j] = K.add(h[j], w[j]);
            }
            ep_trim(K, h);
        } else {
            // (y+a)^((|K|-1)/2) - 1 vanishes exactly at roots shifted to squares
            ExtPoly v = ep_powmod(K, ExtPoly{a, K.one()}, (K.q() - 1) / 2, g);
            ExtPoly w = v;
            for (uint32_t i = 1; i < K.degree(); ++i) {
                w = ep_powmod(K, w, K.q(), g);
                v = ep_mulmod(K, v, w, g);
            }
            if (v.empty()) v.push_back(K.zero());
            v[0] = K.sub(v[0], K.one());
            ep_trim(K, v);
            h = std::move(v);
        }
        ExtPoly d = ep_gcd(K, g, h);
        if (d.size() > 1 && d.size() < g.size()) {
            g = std::move(d);
            stuck = 0;
        }
    }
    if (g.size() != 2) throw std::logic_error("no linear factor survived the splitting");
    return K.neg(g[0]);
}

}  // namespace

PrimeAux& FunctionField::aux(const PrimePlace& pl) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = aux_cache_.find(pl.key());
    if (it != aux_cache_.end()) return *it->second;

    size_t n = static_cast<size_t>(n_);
    auto ax = std::make_shared<PrimeAux>();
    ax->powers.push_back(pmat_identity(n, q_));
    ax->powers.push_back(pl.basis);

    // b generates the complement: valuation e-1 here, full valuation at
    // the other places over p, so b / p has valuation -1 here and >= 0
    // everywhere else over p
    PMat m = pmat_identity(n, q_);
    for (int k = 0; k + 1 < pl.e; ++k) m = module_mul(m, pl.basis);
    for (const auto& other : primes_over(pl.p)) {
        if (other.idx == pl.idx) continue;
        for (int k = 0; k < other.e; ++k) m = module_mul(m, other.basis);
    }
    PMat mp = module_mul(m, pl.basis);
    bool found = false;
    for (size_t j = 0; j < n && !found; ++j) {
        std::vector<Poly> col(n);
        for (size_t i = 0; i < n; ++i) col[i] = m[i][j];
        if (!pmat_solve_upper(mp, col)) {
            ax->beta_num = col;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no generator outside the prime multiple");

    long cap = 8 + static_cast<long>(pl.e) * (static_cast<long>(n_) * (d_.deg() + n_ * (cf_ + 2) + 8));
    found = false;
    for (size_t j = 0; j < n && !found; ++j) {
        std::vector<Poly> col(n);
        for (size_t i = 0; i < n; ++i) col[i] = pl.basis[i][j];
        if (val_loop(*this, col, pl, ax->beta_num, cap + 8L * pl.basis[0][0].deg()) == 1) {
            ax->pi = col;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no uniformizer among the prime basis columns");
    ax->pi_elt = from_omega(ax->pi);

    // residue classes modulo the prime carry the field structure directly
    int d = pl.deg();
    PrimeAux::Local l1;
    l1.diag.resize(n);
    l1.offs.resize(n);
    size_t dim = 0;
    for (size_t i = 0; i < n; ++i) {
        l1.diag[i] = pl.basis[i][i].deg();
        l1.offs[i] = dim;
        dim += static_cast<size_t>(l1.diag[i]);
    }
    l1.dim = dim;
    if (dim != static_cast<size_t>(d)) throw std::logic_error("residue dimension mismatch");
    ax->locals.emplace(1, l1);

    auto unpack_class = [&](const FqVec& v) {
        std::vector<Poly> z(n, Poly(q_));
        for (size_t i = 0; i < n; ++i) {
            std::vector<uint32_t> c(static_cast<size_t>(l1.diag[i]), 0);
            for (int a = 0; a < l1.diag[i]; ++a) c[static_cast<size_t>(a)] = v[l1.offs[i] + static_cast<size_t>(a)];
            z[i] = Poly(q_, c);
        }
        return z;
    };
    auto class_mul = [&](const FqVec& u, const FqVec& v) {
        auto zu = unpack_class(u), zv = unpack_class(v);
        auto prod = omega_mul(zu, zv);
        reduce_mod_basis(prod, pl.basis);
        return pack_classes(prod, l1);
    };
    std::vector<Poly> onev(n, Poly(q_));
    onev[0] = Poly::constant(q_, 1);
    reduce_mod_basis(onev, pl.basis);
    FqVec one_cl = pack_classes(onev, l1);

    // a basis element generating the residue field exists because no
    // union of proper subfields contains a basis
    std::vector<FqVec> gpows;
    std::vector<uint32_t> minpoly;
    for (size_t cand = 0; cand < dim; ++cand) {
        FqVec gamma(dim, 0);
        gamma[cand] = 1;
        FqSpan sp(dim, q_);
        std::vector<FqVec> pows;
        FqVec cur = one_cl;
        std::optional<FqVec> dep;
        while (true) {
            dep = sp.insert(cur);
            if (dep) break;
            pows.push_back(cur);
            cur = class_mul(cur, gamma);
        }
        if (pows.size() == dim) {
            gpows = pows;
            minpoly.assign(dim + 1, 0);
            for (size_t i = 0; i < dim; ++i) minpoly[i] = fq_neg((*dep)[i], q_);
            minpoly[dim] = 1;
            break;
        }
    }
    if (gpows.empty()) throw std::logic_error("no residue field generator in the class basis");
    auto K = ExtField::make(q_, static_cast<uint32_t>(d));
    Poly mp_poly(q_, minpoly);
    ExtPoly lifted;
    lifted.reserve(minpoly.size());
    for (uint32_t c : minpoly) lifted.push_back(K->from_base(c));
    ExtElem root = ep_root(*K, std::move(lifted));
    if (!K->is_zero(mp_poly.eval_ext(*K, root)))
        throw std::logic_error("minimal polynomial has no root in the residue field");
    FqMat gm(dim, FqVec(dim, 0)), em(dim, FqVec(dim, 0));
    ExtElem rp = K->one();
    for (size_t j = 0; j < dim; ++j) {
        for (size_t i = 0; i < dim; ++i) {
            gm[i][j] = gpows[j][i];
            em[i][j] = rp[i];
        }
        rp = K->mul(rp, root);
    }
    ax->resmat = fq_mat_mul(em, fq_mat_inverse(gm, q_), q_);
    ax->res_field = K;

    auto placed = aux_cache_.emplace(pl.key(), std::move(ax));
    return *placed.first->second;
}

int FunctionField::val_fin(const FieldElement& a, const PrimePlace& pl) const {
    if (is_zero(a)) throw std::domain_error("valuation of zero");
    PrimeAux& ax = aux(pl);
    auto co = omega_coords(a);
    Poly den = Poly::constant(q_, 1);
    for (const auto& c : co)
        if (!c.is_zero()) den = Poly::divexact(den * c.den, Poly::gcd(den, c.den)).monic();
    size_t n = co.size();
    std::vector<Poly> num(n, Poly(q_));
    int maxdeg = 0;
    for (size_t i = 0; i < n; ++i) {
        if (co[i].is_zero()) continue;
        num[i] = co[i].num * Poly::divexact(den, co[i].den);
        maxdeg = std::max(maxdeg, num[i].deg());
    }
    long cap = 16 + static_cast<long>(pl.e) *
                        (static_cast<long>(n_) * (maxdeg + d_.deg() + n_ * (cf_ + 2) + 8));
    int v = val_loop(*this, num, pl, ax.beta_num, cap);
    return v - pl.e * (den.is_one() ? 0 : poly_val(den, pl.p));
}

std::shared_ptr<const ExtField> FunctionField::residue_field(const PrimePlace& pl) const {
    return aux(pl).res_field;
}

FieldElement FunctionField::uniformizer(const PrimePlace& pl) const { return aux(pl).pi_elt; }

ExtElem FunctionField::residue_general(const FieldElement& a, const PrimePlace& pl) const {
    PrimeAux& ax = aux(pl);
    if (is_zero(a)) return ax.res_field->zero();
    auto co = omega_coords(a);
    size_t n = co.size();
    Poly den = Poly::constant(q_, 1);
    for (const auto& c : co)
        if (!c.is_zero()) den = Poly::divexact(den * c.den, Poly::gcd(den, c.den)).monic();
    std::vector<Poly> num(n, Poly(q_));
    for (size_t i = 0; i < n; ++i)
        if (!co[i].is_zero()) num[i] = co[i].num * Poly::divexact(den, co[i].den);
    int m = den.is_one() ? 0 : poly_val(den, pl.p);
    int K = m * pl.e + 1;

    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto lit = ax.locals.find(K);
    if (lit == ax.locals.end()) {
        while (static_cast<int>(ax.powers.size()) <= K)
            ax.powers.push_back(module_mul(ax.powers.back(), pl.basis));
        PrimeAux::Local loc;
        loc.diag.resize(n);
        loc.offs.resize(n);
        size_t dim = 0;
        for (size_t i = 0; i < n; ++i) {
            loc.diag[i] = ax.powers[static_cast<size_t>(K)][i][i].deg();
            loc.offs[i] = dim;
            dim += static_cast<size_t>(loc.diag[i]);
        }
        loc.dim = dim;
        lit = ax.locals.emplace(K, std::move(loc)).first;
    }
    const PrimeAux::Local& loc = lit->second;
    const PMat& h = ax.powers[static_cast<size_t>(K)];

    // solve den * w = a modulo the K-th power; any solution has the
    // residue of a
    FqMat mm(loc.dim, FqVec(loc.dim, 0));
    for (size_t i = 0; i < n; ++i)
        for (int e = 0; e < loc.diag[i]; ++e) {
            std::vector<Poly> z(n, Poly(q_));
            z[i] = den.shift(static_cast<size_t>(e));
            reduce_mod_basis(z, h);
            FqVec col = pack_classes(z, loc);
            for (size_t r = 0; r < loc.dim; ++r) mm[r][loc.offs[i] + static_cast<size_t>(e)] = col[r];
        }
    std::vector<Poly> rhs = num;
    reduce_mod_basis(rhs, h);
    auto w = fq_solve(mm, pack_classes(rhs, loc), q_);
    if (!w) throw std::domain_error("residue needs a nonnegative valuation");
    std::vector<Poly> z(n, Poly(q_));
    for (size_t i = 0; i < n; ++i) {
        std::vector<uint32_t> c(static_cast<size_t>(loc.diag[i]), 0);
        for (int e = 0; e < loc.diag[i]; ++e) c[static_cast<size_t>(e)] = (*w)[loc.offs[i] + static_cast<size_t>(e)];
        z[i] = Poly(q_, c);
    }
    reduce_mod_basis(z, pl.basis);
    const PrimeAux::Local& l1 = ax.locals.at(1);
    return fq_mat_apply(ax.resmat, pack_classes(z, l1), q_);
}

ExtElem FunctionField::residue(const FieldElement& a, const PrimePlace& pl) const {
    return residue_general(a, pl);
}

ExtElem FunctionField::digit(const FieldElement& a, const PrimePlace& pl, int m) const {
    PrimeAux& ax = aux(pl);
    if (is_zero(a)) return ax.res_field->zero();
    FieldElement xi = m == 0 ? a : mul(a, pow(ax.pi_elt, -static_cast<int64_t>(m)));
    return residue_general(xi, pl);
}

void FunctionField::setup_infinity() {
    std::vector<Poly> fh(static_cast<size_t>(n_) + 1, Poly(q_));
    for (int j = 0; j <= n_; ++j) {
        const Poly& aj = f_[static_cast<size_t>(j)];
        if (aj.is_zero()) continue;
        int shift = (n_ - j) * cf_;
        std::vector<uint32_t> cv(static_cast<size_t>(shift) + 1, 0);
        for (int mI = 0; mI <= aj.deg(); ++mI) cv[static_cast<size_t>(shift - mI)] = aj.coeff(static_cast<size_t>(mI));
        fh[static_cast<size_t>(j)] = Poly(q_, cv);
    }
    BuildOptions o;
    o.with_infinity = false;
    o.check_irreducible = false;
    o.maximal_at = Poly::x(q_);
    umodel_ = build_impl(q_, fh, o);
    const auto& ups = umodel_->primes_over(Poly::x(q_));
    inf_.clear();
    int sum = 0;
    for (size_t j = 0; j < ups.size(); ++j) {
        inf_.push_back(InfinitePlace{j, ups[j].e, ups[j].deg(), j});
        sum += ups[j].e * ups[j].deg();
    }
    if (sum != n_) throw std::logic_error("places at infinity do not sum to n");
}

const std::vector<InfinitePlace>& FunctionField::infinite_places() const {
    if (!with_infinity_) throw std::logic_error("field was built without places at infinity");
    return inf_;
}

std::shared_ptr<const FunctionField> FunctionField::umodel() const {
    if (!with_infinity_) throw std::logic_error("field was built without places at infinity");
    return umodel_;
}

const PrimePlace& FunctionField::uprime(size_t j) const {
    if (!with_infinity_ || j >= inf_.size()) throw std::logic_error("infinite place index");
    return umodel_->primes_over(Poly::x(q_))[inf_[j].uprime];
}

FieldElement FunctionField::transport(const FieldElement& a) const {
    if (!with_infinity_) throw std::logic_error("field was built without places at infinity");
    FieldElement r = umodel_->zero();
    RatFunc u(Poly::x(q_));
    for (int i = 0; i < n_; ++i) {
        const RatFunc& g = a.co[static_cast<size_t>(i)];
        if (g.is_zero()) continue;
        // g(1/u) = rev(num)(u) * u^(deg den - deg num) / rev(den)(u), and
        // t^i contributes u^(-C i)
        RatFunc val(reverse_poly(g.num), reverse_poly(g.den));
        int k = g.den.deg() - g.num.deg() - cf_ * i;
        if (k >= 0)
            val = val * RatFunc(Poly::monomial(q_, 1, static_cast<size_t>(k)));
        else
            val = val / RatFunc(Poly::monomial(q_, 1, static_cast<size_t>(-k)));
        r.co[static_cast<size_t>(i)] = val;
    }
    return r;
}

int FunctionField::val_inf(const FieldElement& a, size_t j) const {
    return umodel_->val_fin(transport(a), uprime(j));
}

std::shared_ptr<const ExtField> FunctionField::residue_field_inf(size_t j) const {
    return umodel_->residue_field(uprime(j));
}

ExtElem FunctionField::digit_inf(const FieldElement& a, size_t j, int m) const {
    return umodel_->digit(transport(a), uprime(j), m);
}

BigRat FunctionField::max_norm(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("norm of zero");
    FieldElement ta = transport(a);
    std::optional<BigRat> best;
    for (size_t j = 0; j < inf_.size(); ++j) {
        int v = umodel_->val_fin(ta, uprime(j));
        BigRat r(BigInt(-v), BigInt(inf_[j].e));
        if (!best || *best < r) best = r;
    }
    return *best;
}

}  // namespace normeq
