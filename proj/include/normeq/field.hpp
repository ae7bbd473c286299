// field.hpp — global function fields F = k(x)[t]/(f) over a prime constant
// field k = F_q: element arithmetic, the maximal order and its places,
// exact valuations, residue fields, local digit expansions, and basis
// reduction at infinity.
//
// f is monic in t with k[x] coefficients, irreducible, with deg_t f
// coprime to q. Finite places are the primes of the integral closure O of
// k[x] in F. Places over the degree valuation of k(x) are realized in a
// second model of the same field over k[u], u = 1/x, with generator
// t' = t * u^C; they correspond to the primes over (u) there.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "normeq/bigint.hpp"
#include "normeq/fq.hpp"
#include "normeq/poly.hpp"
#include "normeq/polymat.hpp"

namespace normeq {

// rejected or unsupported input; the command line maps this to the
// precondition exit code
struct FieldError : std::runtime_error {
    explicit FieldError(const std::string& msg) : std::runtime_error(msg) {}
};

// element in the power basis: co[i] multiplies t^i; co.size() = deg_t f
struct FieldElement {
    std::vector<RatFunc> co;
};

// finite place: prime of the maximal order over the monic irreducible p
struct PrimePlace {
    Poly p;
    int e = 1;       // ramification index
    int f_res = 1;   // residue degree over k[x]/(p)
    PMat basis;      // omega-coordinate triangular basis of the prime module
    size_t idx = 0;  // position among the places over p
    int deg() const { return f_res * p.deg(); }
    std::string key() const { return p.to_string() + "#" + std::to_string(idx); }
};

// place over the degree valuation of k(x); uprime indexes the matching
// prime over (u) in the u-model, and places are listed by ascending degree
struct InfinitePlace {
    size_t index = 0;
    int e = 1;
    int deg = 1;
    size_t uprime = 0;
};

struct PrimeAux;

class FunctionField {
public:
    // validates, computes the maximal order, and (unless building an
    // internal u-model) sets up the places at infinity
    static std::shared_ptr<const FunctionField> build(uint32_t q, std::vector<Poly> f,
                                                      bool with_infinity = true);

    uint32_t q() const { return q_; }
    int degree() const { return n_; }
    const std::vector<Poly>& f() const { return f_; }
    // smallest C with deg a_j <= (n - j) C: the pole bound of the roots of
    // f at infinity, and the twist exponent of the u-model generator
    int cf() const { return cf_; }
    const Poly& disc() const { return disc_; }

    // ----- element arithmetic -----
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;  // the class of t
    FieldElement from_ratfunc(const RatFunc& a) const;
    FieldElement from_poly(const Poly& a) const;
    bool is_zero(const FieldElement& a) const;
    bool eq(const FieldElement& a, const FieldElement& b) const;
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul_rat(const FieldElement& a, const RatFunc& c) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(FieldElement a, int64_t e) const;
    RatFunc elt_norm(const FieldElement& a) const;
    RatFunc elt_trace(const FieldElement& a) const;
    std::string elt_to_string(const FieldElement& a) const;

    // ----- maximal order -----
    // basis omega_i = (1/order_den) sum_j order_num[j][i] t^j; the matrix
    // is upper triangular with omega_0 = 1
    const PMat& order_num() const { return w_; }
    const Poly& order_den() const { return d_; }
    FieldElement omega(size_t i) const;
    std::vector<RatFunc> omega_coords(const FieldElement& a) const;
    // coordinates in the omega basis when they are polynomial
    std::optional<std::vector<Poly>> omega_coords_integral(const FieldElement& a) const;
    FieldElement from_omega(const std::vector<Poly>& co) const;
    FieldElement from_omega_rat(const std::vector<RatFunc>& co) const;
    bool is_integral(const FieldElement& a) const;
    // product of integral elements, in polynomial omega coordinates
    std::vector<Poly> omega_mul(const std::vector<Poly>& a, const std::vector<Poly>& b) const;
    std::vector<RatFunc> omega_mul_rat(const std::vector<RatFunc>& a,
                                       const std::vector<RatFunc>& b) const;
    // canonical basis of the product of two omega-coordinate modules
    PMat module_mul(const PMat& a, const PMat& b) const;

    // ----- finite places -----
    const std::vector<PrimePlace>& primes_over(const Poly& p) const;
    // sorted residue degrees of the places over p, without constructing
    // them when p is prime to the discriminant of f
    std::vector<int> residue_degrees(const Poly& p) const;
    int val_fin(const FieldElement& a, const PrimePlace& pl) const;
    std::shared_ptr<const ExtField> residue_field(const PrimePlace& pl) const;
    // image in the residue field; requires val >= 0
    ExtElem residue(const FieldElement& a, const PrimePlace& pl) const;
    // coefficient of pi^m in the pi-adic expansion; requires val >= m, and
    // is zero exactly when val > m
    ExtElem digit(const FieldElement& a, const PrimePlace& pl, int m) const;
    FieldElement uniformizer(const PrimePlace& pl) const;

    // ----- places at infinity -----
    const std::vector<InfinitePlace>& infinite_places() const;
    int val_inf(const FieldElement& a, size_t j) const;
    std::shared_ptr<const ExtField> residue_field_inf(size_t j) const;
    ExtElem digit_inf(const FieldElement& a, size_t j, int m) const;
    std::shared_ptr<const FunctionField> umodel() const;
    const PrimePlace& uprime(size_t j) const;
    // the same element written in the u-model
    FieldElement transport(const FieldElement& a) const;
    // max_j -v_j(a) / e_j over the places at infinity; throws on zero
    BigRat max_norm(const FieldElement& a) const;

    // ----- reduction at infinity -----
    struct ReducedModule {
        std::vector<FieldElement> elems;
        std::vector<BigRat> norms;  // ascending
    };
    // basis of the same k[x]-module minimizing the twisted norms
    // max_j (-v_j(b) - twist[j]) / e_j simultaneously
    ReducedModule reduce_module(std::vector<FieldElement> basis,
                                const std::vector<int>& twist) const;
    const ReducedModule& reduced_order_basis() const;
    int genus() const;

private:
    FunctionField() = default;
    FunctionField(const FunctionField&) = delete;

    struct BuildOptions {
        bool with_infinity = true;
        bool check_irreducible = true;
        std::optional<Poly> maximal_at;  // saturate only at this prime
    };
    static std::shared_ptr<const FunctionField> build_impl(uint32_t q, std::vector<Poly> f,
                                                           const BuildOptions& opt);
    void validate_and_init(const BuildOptions& opt);
    void check_irreducibility() const;
    std::vector<Poly> mul_by_t(const std::vector<Poly>& co) const;
    PMat mult_matrix_int(const std::vector<Poly>& tco) const;

    // places.cpp
    void compute_maximal_order(const BuildOptions& opt);
    void build_omega_table();
    std::vector<PrimePlace> split_prime(const Poly& p) const;
    void setup_infinity();
    PrimeAux& aux(const PrimePlace& pl) const;
    ExtElem residue_general(const FieldElement& a, const PrimePlace& pl) const;

    uint32_t q_ = 0;
    int n_ = 0;
    int cf_ = 0;
    std::vector<Poly> f_;
    Poly disc_;
    std::vector<std::vector<Poly>> redrow_;  // t^{n+i} in the power basis
    PMat w_;
    Poly d_;
    std::vector<std::vector<std::vector<Poly>>> omul_;  // omega_i omega_j, omega coords
    bool with_infinity_ = false;
    std::optional<Poly> maximal_at_;
    std::shared_ptr<const FunctionField> umodel_;
    std::vector<InfinitePlace> inf_;

    mutable std::recursive_mutex mu_;
    mutable std::map<Poly, std::vector<PrimePlace>> prime_cache_;
    mutable std::map<std::string, std::shared_ptr<PrimeAux>> aux_cache_;
    mutable std::optional<ReducedModule> reduced_;
    mutable std::optional<int> genus_;
};

}  // namespace normeq
