#pragma once

#include "numfield/field.hpp"

#include <functional>

namespace flt::detail {

// A prime of degree one: theta maps to root modulo q.
struct DegreeOnePrime {
    Int q;
    Int root;
};

// Image of an integral element in F_q; q must not divide the polynomial
// discriminant.
Int reduce_at(const NumberField& K, const IntVec& x, const DegreeOnePrime& P);

// The first `want` degree-one primes with q = 1 (mod 2l), skipping divisors
// of the polynomial discriminant and any q with skip(q).
std::vector<DegreeOnePrime> degree_one_primes(const NumberField& K, long l, int want, const std::function<bool(const Int&)>& skip = {});

// Entry (i, c): discrete log in Z/l of the l-th power residue symbol of
// gens[i] at primes[c]. Every generator must be a unit at every prime.
IntMatrix power_characters(const NumberField& K, const std::vector<IntVec>& gens, const std::vector<DegreeOnePrime>& primes, long l);

} // namespace flt::detail
