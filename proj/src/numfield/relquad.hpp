#pragma once

#include "numfield/field.hpp"

namespace flt {

// L = K(sqrt(-p)) for an odd prime p (p = 3 gives K(sqrt(-3))), built from
// the primitive element theta_K + k sqrt(-p) with the least k >= 1 making the
// norm polynomial irreducible.
struct RelativeQuadratic {
    FieldPtr base;
    FieldPtr top;
    long p = 3;
    long k = 0;
    // Row i: L-coordinates of the i-th integral basis element of K.
    IntMatrix embedding;
    // sqrt(-p) in L-coordinates.
    RatVec sqrt_mp;

    RatVec embed(const RatVec& x) const;
    IntVec embed(const IntVec& x) const;
    // Complex conjugation of L, which generates Gal(L/K).
    RatVec conj(const RatVec& x) const;
    // Preimage in K of an element of the embedded base; throws DomainError if
    // x does not lie in K.
    RatVec pull_back(const RatVec& x) const;
    // N_{L/K}(x) = x * conj(x), as an element of K.
    RatVec relative_norm(const RatVec& x) const;
    // x + y sqrt(-p) for x, y in K.
    RatVec make(const RatVec& x, const RatVec& y) const;
};

// Throws DomainError if K is not totally real (then -p could be a square or
// L might not be CM).
RelativeQuadratic adjoin_sqrt_minus(const FieldPtr& K, long p = 3);

} // namespace flt
