#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flt {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Error taxonomy shared by every layer. The C API maps these onto status
// codes, the CLI onto exit codes.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A documented computation cap was exceeded (degree, box size, effort).
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The computation ran out of effort without proving the answer either way.
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed (a verified identity did not hold).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

inline Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Non-negative remainder.
inline Int mod(const Int& a, const Int& m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r < 0) r += abs(m);
    return r;
}

inline Int isqrt(const Int& a)
{
    if (a < 0) throw DomainError("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a)
{
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int ipow(const Int& b, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
struct Xgcd {
    Int g, s, t;
};

inline Xgcd xgcd(const Int& a, const Int& b)
{
    Xgcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int floor(const Rat& q)
{
    return floor_div(q.get_num(), q.get_den());
}

inline Int ceil(const Rat& q)
{
    return ceil_div(q.get_num(), q.get_den());
}

// Exponent of the prime p in the nonzero integer a.
inline int valuation(Int a, const Int& p)
{
    if (a == 0) throw DomainError("p-adic valuation of zero");
    int v = 0;
    a = abs(a);
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

inline bool divides(const Int& d, const Int& a)
{
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline long to_long(const Int& a)
{
    if (!a.fits_slong_p()) throw CapError("integer " + a.get_str() + " exceeds machine range");
    return a.get_si();
}

// Smallest integer r with r >= sqrt(q), for q >= 0.
inline Int ceil_sqrt(const Rat& q)
{
    if (q < 0) throw DomainError("square root of negative rational");
    Int n = q.get_num(), d = q.get_den();
    // sqrt(n/d) = sqrt(n*d)/d
    Int s = isqrt(n * d);
    Int r = s / d;
    while (Rat(r * r) < q) ++r;
    while (r > 0 && Rat((r - 1) * (r - 1)) >= q) --r;
    return r;
}

// Largest integer r with r <= sqrt(q), for q >= 0.
inline Int floor_sqrt(const Rat& q)
{
    if (q < 0) throw DomainError("square root of negative rational");
    Int r = isqrt(floor(q));
    while (Rat((r + 1) * (r + 1)) <= q) ++r;
    while (r > 0 && Rat(r * r) > q) --r;
    return r;
}

} // namespace flt
