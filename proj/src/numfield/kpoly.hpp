#pragma once

#include "numfield/field.hpp"

#include <vector>

namespace flt {

// Polynomial with coefficients in a number field, lowest degree first,
// normalized (no zero leading coefficient).
using KPoly = std::vector<RatVec>;

KPoly kpoly_from_z(const NumberField& K, const ZPoly& g);
KPoly kpoly_from_q(const NumberField& K, const QPoly& g);
int kdeg(const KPoly& a);
KPoly kmul(const NumberField& K, const KPoly& a, const KPoly& b);
void kdivmod(const NumberField& K, const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);
// Monic gcd.
KPoly kgcd(const NumberField& K, KPoly a, KPoly b);
// a(x + c)
KPoly kshift(const NumberField& K, const KPoly& a, const RatVec& c);
RatVec keval(const NumberField& K, const KPoly& a, const RatVec& x);

// Monic irreducible factors over K of a squarefree g (Trager's norm method).
std::vector<KPoly> factor_over_field(const NumberField& K, const KPoly& g);

// All roots in K of the squarefree integer polynomial g, sorted by
// coordinates.
std::vector<RatVec> roots_in_field(const NumberField& K, const ZPoly& g);

// Whether the two fields are isomorphic (same degree and discriminant, and
// the defining polynomial of B has a root in A).
bool fields_isomorphic(const NumberField& A, const NumberField& B);

} // namespace flt
