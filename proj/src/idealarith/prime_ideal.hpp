#pragma once

#include "idealarith/ideal.hpp"
#include "numfield/relquad.hpp"

namespace flt {

struct PrimeIdeal {
    Ideal ideal;
    Int p;
    int e = 0;
    int f = 0;
    // ideal = (p, gen)
    IntVec gen;
    // b with b * ideal inside p O_K and b not in p O_K; drives valuations.
    IntVec helper;
};

// Exponent of P in x (integral, nonzero).
int valuation(const PrimeIdeal& P, const IntVec& x);
// Exponent of P in a nonzero rational element (may be negative).
int valuation(const PrimeIdeal& P, const RatVec& x);
int valuation(const PrimeIdeal& P, const Ideal& I);

struct SplittingData {
    Int q;
    // Sorted by (f, e, gen).
    std::vector<PrimeIdeal> factors;
    std::vector<int> S, T, V;
};

// Throws DomainError when q is not prime.
SplittingData factor_rational_prime(const FieldPtr& K, const Int& q);

// Prime ideal above q containing the element x (integral), or -1.
int prime_containing(const SplittingData& sd, const IntVec& x);

// Factorization of I over primes above the rational primes dividing its
// norm; exponents paired with primes.
std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const Ideal& I);

struct QuadraticRamification {
    // Base primes ramified in L/K, with the prime of L above each.
    std::vector<PrimeIdeal> ramified;
    std::vector<PrimeIdeal> top_primes;
    int gamma = 0;
};

QuadraticRamification ramified_primes_in_quadratic_ext(const RelativeQuadratic& rel);

} // namespace flt
