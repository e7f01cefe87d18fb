#pragma once

#include "classunit/classunit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flt {

enum class RamPattern { TotallyRamifiedOddDegree, MixedOddPlusEvenSquares, Fails };
std::string to_string(RamPattern p);

struct PatternResult {
    RamPattern pattern = RamPattern::Fails;
    // Set for the mixed case: such a field cannot be Galois over Q.
    bool not_galois_compatible = false;
    // Factorization shape of 3 O_K, e.g. "p^3" or "p1 p2^2".
    std::string shape;
    // (e, f) of each prime above 3, in the order of the shape string.
    std::vector<std::pair<int, int>> ef;
};

PatternResult classify_ramification_pattern(const FieldPtr& K);

enum class Verdict { Satisfied, Fails, Inconclusive };
std::string to_string(Verdict v);

enum class ObstructionVerdict { ForcesEvenClassNumber, Inconclusive };
std::string to_string(ObstructionVerdict v);

struct ObstructionResult {
    long p = 3;
    int gamma = 0;
    int r = 0, s = 0;
    ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;
    // The ambiguous class count is at least 2^(gamma - 1).
    int ambiguous_lower_bound_2exp = 0;
    // Residue characteristic and (e, f) of each ramified prime of K.
    std::vector<std::pair<Int, std::pair<int, int>>> ramified;
};

// K totally real; throws DomainError otherwise (-p is then possibly a square).
ObstructionResult ambiguous_parity_obstruction(const FieldPtr& K, long p);

struct AssumptionReport {
    FieldPtr field;
    bool totally_real = false;
    PatternResult pattern;
    bool t3_nonempty = false, v3_nonempty = false;
    // Witnesses: (e, f) of the members of T_3 and V_3.
    std::vector<std::pair<int, int>> t3, v3;
    std::optional<ObstructionResult> obstruction;
    std::optional<Int> t;
    // "unconditional", "heuristic-grh" or "by-cited-result".
    std::string t_certification;
    std::optional<bool> t_odd;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> reasons;
    std::string theorem_scope;
};

// Assumption 1 verdict: T_3 nonempty, V_3 nonempty, h(K(sqrt -3)) odd, in
// that order. Never Satisfied without an unconditional odd class number.
// HeuristicGRH is also used above the unconditional degree cap; its odd
// class numbers give Inconclusive.
AssumptionReport check_assumption(const FieldPtr& K, ClassMode mode = ClassMode::Unconditional);

// Largest |disc| accepted by the cubic enumeration.
inline constexpr long kMaxCubicDisc = 10000;

struct CubicEntry {
    FieldPtr field;
    AssumptionReport report;
};

// All totally real cubic fields with |disc| <= max_abs_disc up to
// isomorphism, sorted by |disc|, each screened. threads = 0 uses the
// hardware concurrency.
std::vector<CubicEntry> enumerate_totally_real_cubics(long max_abs_disc, unsigned threads = 0);

// Defining polynomials of the same field, smallest first: the candidate
// with least T2 of the root, then lexicographic coefficients.
ZPoly canonical_cubic(const std::vector<ZPoly>& isomorphic_polys);

// Largest degree 3^(n-1) handled by the cyclotomic splitting checks.
inline constexpr int kMaxCyclotomicDegree = 12;

struct CyclotomicReport {
    int n = 0;
    FieldPtr field;
    int degree = 0;
    bool two_inert = false;
    bool three_totally_ramified = false;
    int three_residue_degree = 0;
    // S_3 = T_3 = V_3 with one element.
    bool stv_singleton = false;
    // "unconditional" when computed (n <= 2) or "by-cited-result".
    std::string parity_source;
    std::optional<AssumptionReport> assumption;
};

// Q(zeta_{3^n})^+ defined by the minimal polynomial of -(zeta + zeta^-1).
ZPoly cyclotomic_real_poly(int n);
CyclotomicReport cyclotomic_real_subfield(int n);

struct SUnitReport {
    int n = 0;
    bool found = false;
    IntVec lambda, mu;
    // v_P(lambda mu) at the prime above 2.
    int valuation_at_two = 0;
    // Exponent vector of lambda over (-1, fundamental units).
    std::vector<int> exponents;
};

// Unit solutions of lambda + mu = 1 in Q(zeta_{3^n})^+, exponents |e| <= 5.
SUnitReport sunit_contrast_report(int n);

} // namespace flt
