#pragma once

#include "exactmath/bigint.hpp"

#include <map>
#include <vector>

namespace flt {

bool is_prime(const Int& n);
Int next_prime(const Int& n);

// All primes <= bound (sieve).
std::vector<long> primes_up_to(long bound);

// Full factorization of |n| (n != 0): trial division, then Pollard-Brent rho.
// Cofactors that survive rho are reported via CapError; the documented reach
// is 10^18, in practice it goes further.
std::map<Int, int> factor_integer(const Int& n);

// Distinct prime divisors in increasing order.
std::vector<Int> prime_divisors(const Int& n);

} // namespace flt
