// classgroup.hpp — the group of degree-zero divisor classes: its order
// from the numerator of the zeta function, its structure from a closure
// walk over small places, and discrete logarithms by canonical class
// representatives.
#pragma once

#include <mutex>

#include "normeq/intlin.hpp"
#include "normeq/rr.hpp"

namespace normeq {

class ClassGroup {
public:
    // the canonical representative of a degree-zero class: the smallest
    // m with l(D + m D0) > 0 and the lexicographically first effective
    // divisor in that space, returned as rep = A - m D0
    struct CanonRep {
        std::string key;
        Divisor rep;
    };

    static std::shared_ptr<const ClassGroup> build(std::shared_ptr<const FunctionField> F);

    const FunctionField& field() const { return *F_; }
    int genus() const { return g_; }
    const BigInt& h0() const { return h0_; }
    // coefficients c_0 .. c_2g of the numerator of the zeta function
    const std::vector<BigInt>& lpoly() const { return c_; }
    // number of places of degree d, for the degrees the build counted
    long nplaces(int d) const;
    const Divisor& base_point() const { return d0_; }
    const std::vector<long>& invariants() const { return inv_; }

    CanonRep canon(const Divisor& D) const;
    bool is_trivial_class(const Divisor& D) const;
    // image of the class in the invariant decomposition, one coordinate
    // per nontrivial invariant
    std::vector<long> dlog(const Divisor& D) const;

private:
    ClassGroup() = default;

    std::shared_ptr<const FunctionField> F_;
    int g_ = 0;
    BigInt h0_;
    std::vector<BigInt> c_;
    std::vector<long> adeg_;
    Divisor d0_;
    std::string id_key_;
    std::vector<Divisor> gens_;
    std::map<std::string, std::vector<long>> classes_;
    IMat snf_v_;
    std::vector<long> snf_d_;
    std::vector<long> inv_;
    mutable std::mutex canon_mu_;
    mutable std::map<std::string, CanonRep> canon_cache_;
};

}  // namespace normeq
