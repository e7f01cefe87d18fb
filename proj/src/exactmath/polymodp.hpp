#pragma once

#include "exactmath/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace flt {

// Polynomials over F_p for word-size primes p < 2^31, coefficients lowest
// degree first, normalized (no leading zeros).
class FpPoly {
  public:
    FpPoly() = default;
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> c);
    static FpPoly from_zpoly(const ZPoly& f, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t lead() const { return c_.back(); }
    std::uint64_t operator[](int i) const { return (i < 0 || i > degree()) ? 0 : c_[i]; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    // Lift with coefficients in [0, p).
    ZPoly to_zpoly() const;

    FpPoly monic() const;
    FpPoly derivative() const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

    FpPoly scale(std::uint64_t s) const;

  private:
    void normalize();
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

void divmod(const FpPoly& f, const FpPoly& g, FpPoly& q, FpPoly& r);
FpPoly rem(const FpPoly& f, const FpPoly& g);
FpPoly gcd(const FpPoly& a, const FpPoly& b);
// Monic g = s*a + t*b.
void xgcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& s, FpPoly& t);
FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& modulus);

struct FpFactor {
    FpPoly factor;  // monic irreducible
    int multiplicity;
};

// Complete factorization of a nonzero f over F_p into monic irreducibles,
// sorted by (degree, coefficient vector lowest degree first). The unit
// leading coefficient is dropped. Equal-degree splitting is randomized but
// seeded from the input, so the output is reproducible.
std::vector<FpFactor> factor_mod_p(const FpPoly& f);

// Convenience: f over Z reduced mod the prime p. Throws DomainError for
// composite p, p >= 2^31, or f vanishing mod p.
std::vector<FpFactor> factor_mod_p(const ZPoly& f, const Int& p);

bool is_irreducible_mod_p(const FpPoly& f);

} // namespace flt
