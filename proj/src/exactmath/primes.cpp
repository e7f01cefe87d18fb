#include "exactmath/primes.hpp"

#include <algorithm>

namespace flt {

bool is_prime(const Int& n)
{
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int next_prime(const Int& n)
{
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::vector<long> primes_up_to(long bound)
{
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
    for (long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

namespace {

// Pollard-Brent; returns a nontrivial factor of composite n or 0 on failure.
Int pollard_brent(const Int& n, unsigned long c)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    auto step = [&](const Int& x) {
        Int y = x * x + c;
        return Int(y % n);
    };
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1, m = 128;
    const unsigned long max_r = 1ul << 26;
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = step(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    } while (g == 1 && r < max_r);
    if (g == n) {
        do {
            ys = step(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    if (g == n || g == 1) return 0;
    return g;
}

void factor_into(const Int& n, std::map<Int, int>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    if (is_perfect_square(n)) {
        Int s = isqrt(n);
        std::map<Int, int> sub;
        factor_into(s, sub);
        for (auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    for (unsigned long c = 1; c < 64; ++c) {
        Int d = pollard_brent(n, c);
        if (d != 0) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
    throw CapError("integer factorization failed for cofactor " + n.get_str());
}

} // namespace

std::map<Int, int> factor_integer(const Int& n0)
{
    if (n0 == 0) throw DomainError("cannot factor zero");
    std::map<Int, int> out;
    Int n = abs(n0);
    for (long p : primes_up_to(10000)) {
        if (n == 1) break;
        Int pp = p;
        if (pp * pp > n) break;
        while (divides(pp, n)) {
            out[pp] += 1;
            n /= pp;
        }
    }
    if (n > 1) factor_into(n, out);
    return out;
}

std::vector<Int> prime_divisors(const Int& n)
{
    std::vector<Int> out;
    for (auto& [p, e] : factor_integer(n)) out.push_back(p);
    return out;
}

} // namespace flt
