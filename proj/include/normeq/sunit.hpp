// sunit.hpp — generators of the S-units modulo constants, as valuation
// vectors over S together with field elements realizing them.
#pragma once

#include "normeq/classgroup.hpp"

namespace normeq {

struct SUnitBasis {
    std::shared_ptr<const ClassGroup> cg;
    // the places of S: the finite ones in the order given, then every
    // place at infinity
    std::vector<PrimePlace> fin;
    size_t ninf = 0;
    std::vector<long> degs;
    // one valuation vector per generator, LLL reduced; generators are
    // realized on demand through compact representations, never as plain
    // elements, since their coordinates grow exponentially in the rows
    IMat rows;
    // order of the subgroup of the class group generated by the degree
    // zero divisors on S; equals the index of the valuation lattice in
    // the full degree zero lattice on S
    BigInt index;
    // Gram determinant of rows, the squared covolume of the unit lattice
    BigInt reg2;

    size_t size() const { return fin.size() + ninf; }
    Divisor place_divisor(size_t j, int c) const;
    Divisor row_divisor(const IVec& z) const;
};

// the walk certifying that no unit is missing runs when the index is at
// most verify_cap; pass 0 to skip it
SUnitBasis sunit_basis(std::shared_ptr<const ClassGroup> cg, std::vector<PrimePlace> fin,
                       long verify_cap = 10000);

}  // namespace normeq
