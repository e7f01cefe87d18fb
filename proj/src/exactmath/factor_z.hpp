#pragma once

#include "exactmath/poly.hpp"

#include <utility>
#include <vector>

namespace flt {

struct ZFactor {
    ZPoly factor;  // primitive, positive leading coefficient
    int multiplicity;
};

// Factorization of a nonzero integer polynomial into irreducibles over Q
// (Zassenhaus: factor mod a good prime, Hensel-lift, recombine). Content is
// dropped. Factors are sorted by (degree, coefficients).
std::vector<ZFactor> factor_over_q(const ZPoly& f);

bool is_irreducible_over_q(const ZPoly& f);

} // namespace flt
