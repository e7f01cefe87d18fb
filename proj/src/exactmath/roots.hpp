#pragma once

#include "exactmath/poly.hpp"

#include <vector>

namespace flt {

// Closed rational interval. An isolating interval either is a single exact
// root (lo == hi) or has endpoints where the polynomial is nonzero with
// opposite signs.
struct RationalInterval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

// Sturm chain of a squarefree polynomial: f, f', -rem(...), ...
std::vector<QPoly> sturm_chain(const ZPoly& f);

// Number of distinct real roots, counted from the Sturm chain at +-infinity.
int count_real_roots(const ZPoly& f);

// Disjoint isolating intervals for the real roots of a squarefree f, in
// ascending order. Throws DomainError naming the repeated factor otherwise.
std::vector<RationalInterval> isolate_real_roots(const ZPoly& f);

// Bisects an isolating interval of f until its width is at most `width`.
// The result is contained in the input.
RationalInterval refine_root(const ZPoly& f, RationalInterval iv, const Rat& width);

// Exact interval enclosure of g over [lo, hi].
RationalInterval eval_interval(const QPoly& g, const RationalInterval& iv);

// Sign (+1 or -1) of g(alpha) where alpha is the root of f isolated by iv and
// g(alpha) != 0. The interval is refined in place as needed. Throws
// DomainError if g vanishes at alpha.
int sign_at_root(const ZPoly& f, RationalInterval& iv, const QPoly& g);

} // namespace flt
