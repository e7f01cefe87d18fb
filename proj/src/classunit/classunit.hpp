#pragma once

#include "idealarith/prime_ideal.hpp"

#include <optional>
#include <string>

namespace flt {

enum class ClassMode { Unconditional, HeuristicGRH };

std::string to_string(ClassMode m);

// Degree limits for class-group work.
inline constexpr int kMaxClassDegreeUnconditional = 6;
inline constexpr int kMaxClassDegreeGrh = 8;

// (4/pi)^s n!/n^n sqrt|disc| rounded up, with pi replaced by 3.14159.
Rat minkowski_bound(const NumberField& K);
// max(30, ceil(0.3 (ln|disc|)^2)).
Rat grh_bound(const NumberField& K);

// Gram matrix used for element enumeration: exact T2 when available, else a
// numerical approximation (callers enlarge bounds accordingly).
RatMatrix enumeration_gram(const NumberField& K);
// Gram of the ideal lattice (rows of its HNF) for the form above.
RatMatrix ideal_gram(const Ideal& I);

struct UnitGroupData {
    int rank = 0;
    int torsion_order = 2;
    IntVec torsion_generator;
    std::vector<IntVec> fundamental_units;
    long double regulator = 1;
    // Saturation was proved for every prime up to this bound.
    long saturation_bound = 0;
};

struct UnitOptions {
    // Largest T2 bound tried in the unit search.
    long max_t2 = 1L << 20;
    long max_candidates = 400000;
};

// Throws InconclusiveError when the rank is not reached within the effort
// budget, CapError above the degree cap.
UnitGroupData unit_group(const FieldPtr& K, const UnitOptions& opt = {});

// x^l = v in K for integral v, or nothing.
std::optional<IntVec> integral_root(const NumberField& K, const IntVec& v, int l);

struct ClassGroupOptions {
    // Multiplier on the factor-base bound.
    Rat bound_scale = 1;
    int max_rounds = 60;
};

struct ClassGroupData {
    FieldPtr field;
    ClassMode mode = ClassMode::Unconditional;
    Int h = 1;
    // Elementary divisors > 1, each dividing the next.
    std::vector<Int> invariants;
    Rat fb_bound;
    std::vector<PrimeIdeal> factor_base;
    // Upper-triangular HNF of the relation lattice in Z^|FB|.
    IntMatrix relation_hnf;
    size_t relation_count = 0;
    int rounds = 0;
    // Group coordinates: class of x in Z^FB is (x restricted to essential) * V
    // reduced modulo invariants_full.
    std::vector<int> essential;
    IntMatrix snf_V;
    std::vector<Int> snf_diag;
};

ClassGroupData class_group(const FieldPtr& K, ClassMode mode, const ClassGroupOptions& opt = {});

// Exponent vector over the factor base of an ideal in the class of I.
// Throws InconclusiveError if no smooth representative is found.
IntVec class_vector(const ClassGroupData& cg, const Ideal& I);
// Coordinates in the invariant decomposition (one per snf_diag entry > 1).
std::vector<Int> class_coordinates(const ClassGroupData& cg, const IntVec& fb_vector);
bool class_is_trivial(const ClassGroupData& cg, const IntVec& fb_vector);

// Exhaustive search of a unit fundamental domain for a generator of I.
// Returns nothing when no generator exists. Throws CapError when the domain
// is too large to enumerate.
std::optional<IntVec> exhaustive_generator_search(const Ideal& I, const UnitGroupData& U, long max_count = 3000000);

enum class Principality { Principal, NotPrincipal, Inconclusive };
std::string to_string(Principality p);

struct PrincipalResult {
    Principality status = Principality::Inconclusive;
    IntVec generator;
    std::string method;
};

// Bounded search first (bound c (N(I) sqrt|disc|)^(1/n) on the absolute
// values, c = 1, 2, 4, 8); NotPrincipal only with a proof from the class
// group or from the exhaustive fundamental-domain search.
PrincipalResult is_principal(const Ideal& I, const ClassGroupData* cg = nullptr, const UnitGroupData* units = nullptr);

struct ClassUnitData {
    FieldPtr field;
    ClassGroupData cg;
    UnitGroupData units;
    // Rows: -1 then the fundamental units; columns: real embeddings; entries
    // 1 for negative.
    std::vector<std::vector<int>> sign_matrix;
    int unit_index_2exp = 0;
    Int h_plus = 1;
    // Every totally positive unit is a square.
    bool totally_positive_units_are_squares = true;
};

int sign_rank(const std::vector<std::vector<int>>& rows);
ClassUnitData class_unit_data(const FieldPtr& K, ClassMode mode, const ClassGroupOptions& opt = {});
// Narrow data from the unit group alone: (h_plus, unit_index_2exp) given h.
void fill_narrow(ClassUnitData& d);

} // namespace flt
