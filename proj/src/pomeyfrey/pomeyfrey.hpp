#pragma once

#include "idealarith/prime_ideal.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace flt {

// Homogeneous bivariate integer polynomial of degree deg: coeffs[k] is the
// coefficient of u^(deg-k) v^k.
struct HomPoly {
    int deg = 0;
    std::vector<Int> coeffs;

    static HomPoly monomial(int deg, int k, const Int& c = 1);
    friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator-(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const Int& s, const HomPoly& a);
    friend bool operator==(const HomPoly& a, const HomPoly& b);
    Int eval(const Int& u, const Int& v) const;
};

struct ResidueSignProfile {
    long p = 0;
    // Sign triples with e1^p + e2^p + e3^p = 0 mod 3.
    std::vector<std::array<int, 3>> admissible_eps;
    // x_i^2 = x_j x_k = 1 mod 3 for every admissible triple.
    bool derived_congruence = false;
};

// p odd prime; throws DomainError otherwise.
ResidueSignProfile residue_sign_analysis(long p);

enum class IdentityOutcome { Holds, FailsWithCounterexample, HoldsWithAdjustedRange };
std::string to_string(IdentityOutcome o);

struct PIdentityResult {
    long p = 0;
    IdentityOutcome outcome = IdentityOutcome::FailsWithCounterexample;
    // Summation range r = range_lo..range_hi for m = sum c_r u^(p-3-r) v^r
    // (x_i exponent 2p-6-2r) making the identity exact.
    int range_lo = 0, range_hi = 0;
    std::vector<Int> coefficients;
    // Whether c_r = r + 1, c_{p-2-r} = -(r + 1) restricted to that range
    // reproduces the coefficients.
    bool displayed_coefficients_match = false;
    // First index where the displayed rule differs, when it does.
    std::optional<int> first_mismatch;
    // P = p mod 3 whenever u = v = 1 mod 3.
    bool mod3_consequence = false;
};

// Largest exponent accepted by verify_P_identity.
inline constexpr long kMaxPIdentityExponent = 31;

// sum_{r<p} u^(p-1-r) v^r = p (uv)^((p-1)/2) + m (u - v)^2 with u = x_i^2,
// v = x_j x_k. Throws DomainError unless p is an odd prime, CapError above
// kMaxPIdentityExponent.
PIdentityResult verify_P_identity(long p);

struct QuadraticFormIdentity {
    bool holds = false;
    // Coefficients of s^2, st, t^2 of each side.
    HomPoly lhs, rhs;
};

// 4((s+t)^2 - st) = 3(s+t)^2 + (s-t)^2, the substitution x_i^p = -(s+t).
QuadraticFormIdentity verify_quadratic_form_identity();

struct QuadraticFormSpotCheck {
    Int s, t, lhs, rhs;
    bool holds = false;
};

QuadraticFormSpotCheck quadratic_form_spot_check(const Int& s, const Int& t);
// s = x_j^p, t = x_k^p.
QuadraticFormSpotCheck quadratic_form_spot_check(long p, const Int& xj, const Int& xk);

struct RepresentationResult {
    FieldPtr field;
    IntVec d;
    int t = 1;
    bool found = false;
    IntVec x, y;
    // Bound on Tr(x^2 / d^t) used by the enumeration; n covers every
    // solution, so NotFound is a proof for totally real fields.
    Rat search_radius_used;
    // Number of solutions up to the signs of x and y.
    size_t solutions = 0;
    // Set when d^t is a non-square modulo a degree-one prime above 3.
    bool mod3_obstruction = false;
};

// Largest number of lattice points examined per coordinate.
inline constexpr size_t kMaxRepresentationPoints = 2000000;

// d^t = x^2 + 3y^2 with x, y integral. K totally real and d totally positive;
// DomainError otherwise. Among all solutions returns the one with least
// Tr(x^2/d^t), then least coordinates, with signs normalized so the first
// nonzero coordinate is positive.
RepresentationResult find_x2_3y2_representation(const FieldPtr& K, const IntVec& d, int t,
                                                size_t max_points = kMaxRepresentationPoints);

enum class ContradictionVerdict { ContradictionHolds, NoObstruction };
std::string to_string(ContradictionVerdict v);

// p^t is a non-square mod 3 exactly when p = 2 mod 3 and t is odd.
ContradictionVerdict pomey_contradiction_check(long p, long t);

struct FermatSolution {
    IntVec x, y, z;
    bool three_divides_xyz = false;
    // The ideal (x, y, z) is the unit ideal.
    bool primitive = false;
    // Nontrivial, screened field, p = 2 mod 3, and 3 does not divide xyz.
    bool counterexample = false;
};

struct FermatSearchReport {
    FieldPtr field;
    long p = 0;
    long height = 0;
    bool screened = false;
    size_t box_size = 0;
    // Unordered triples from the box with xyz = 0 (including 0, 0, 0).
    size_t trivial_solutions = 0;
    std::vector<FermatSolution> nontrivial;
    size_t counterexamples = 0;
};

// Largest number of unordered pairs examined by the Fermat search.
inline constexpr size_t kMaxFermatPairs = 50000000;

// All unordered triples x, y, z with coordinates in [-H, H] and
// x^p + y^p + z^p = 0. screened states that K satisfies the assumption, which
// turns missing 3 | xyz into a reported counterexample. CapError above
// kMaxFermatPairs, DomainError unless p is an odd prime and H >= 1.
FermatSearchReport exhaustive_fermat_search(const FieldPtr& K, long p, long height, bool screened,
                                            unsigned threads = 0);

struct OddPrimeValuation {
    Int norm;
    Int p_below;
    int e = 0, f = 0;
    int valuation = 0;
    bool divisible_by_p = false;
};

struct DyadicBound {
    int e = 0, f = 0;
    // 0 <= r <= upper for the conductor exponent at this prime.
    int upper = 0;
};

struct FreyReport {
    FieldPtr field;
    IntVec a, b, c;
    // c given and a^p + b^p + c^p = 0; otherwise c^p is taken as -(a^p + b^p).
    bool c_given = false;
    long p = 0;
    IntVec A, B;
    // 16 (A B (A + B))^2
    IntVec discriminant;
    // Equals 16 (abc)^(2p); only meaningful when c_given.
    bool discriminant_matches_closed_form = false;
    std::vector<OddPrimeValuation> odd_valuations;
    std::vector<DyadicBound> conductor_exponent_bounds;
};

// Invariants of y^2 = x(x - a^p)(x + b^p). DomainError when abc = 0, when p
// is not an odd prime, or when a given c violates a^p + b^p + c^p = 0.
FreyReport frey_invariants(const FieldPtr& K, const IntVec& a, const IntVec& b, const std::optional<IntVec>& c,
                           long p);

struct SteinbergResult {
    long f = 0;
    Int lhs, rhs, margin;
    bool excluded = false;
};

// (3^f + 1)^2 against 4 * 3^f; the margin is (3^f - 1)^2.
SteinbergResult steinberg_exclusion(long f);

struct EigenvaluePrimeBound {
    long f = 0;
    Int norm_minus, norm_plus;
    std::vector<Int> primes;
    std::vector<std::string> warnings;
};

// Primes dividing N(a - (3^f+1)) N(a + (3^f+1)) for a with the given monic
// minimal polynomial. Warns when a conjugate lies outside |x| <= 2 * 3^(f/2)
// or is not real. DomainError("Hasse bound violated") when a norm is zero.
EigenvaluePrimeBound eigenvalue_prime_bound(const ZPoly& minpoly, long f);

} // namespace flt
