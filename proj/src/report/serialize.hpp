#pragma once

#include "fltscreen/fltscreen.hpp"
#include "pomeyfrey/pomeyfrey.hpp"

#include "json.hpp"

namespace flt {

// Insertion-ordered so serialized key order is stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace flt

// Integers are JSON numbers when they fit in a signed 64-bit word, decimal
// strings otherwise; rationals use "n/d" strings unless integral.
namespace nlohmann {
template <> struct adl_serializer<mpz_class> {
    static void to_json(ordered_json& j, const mpz_class& a);
    static void from_json(const ordered_json& j, mpz_class& a);
};
template <> struct adl_serializer<mpq_class> {
    static void to_json(ordered_json& j, const mpq_class& a);
    static void from_json(const ordered_json& j, mpq_class& a);
};
} // namespace nlohmann

namespace flt {

// Fields serialize as their defining polynomial and are rebuilt on read.
void to_json(Json& j, const FieldPtr& K);
void from_json(const Json& j, FieldPtr& K);

Json field_info_json(const FieldPtr& K);

void to_json(Json& j, const PatternResult& r);
void from_json(const Json& j, PatternResult& r);
void to_json(Json& j, const ObstructionResult& r);
void from_json(const Json& j, ObstructionResult& r);
void to_json(Json& j, const AssumptionReport& r);
void from_json(const Json& j, AssumptionReport& r);
void to_json(Json& j, const CyclotomicReport& r);
void from_json(const Json& j, CyclotomicReport& r);
void to_json(Json& j, const SUnitReport& r);
void from_json(const Json& j, SUnitReport& r);

void to_json(Json& j, const ResidueSignProfile& r);
void from_json(const Json& j, ResidueSignProfile& r);
void to_json(Json& j, const PIdentityResult& r);
void from_json(const Json& j, PIdentityResult& r);
void to_json(Json& j, const HomPoly& h);
void from_json(const Json& j, HomPoly& h);
void to_json(Json& j, const QuadraticFormIdentity& r);
void from_json(const Json& j, QuadraticFormIdentity& r);
void to_json(Json& j, const QuadraticFormSpotCheck& r);
void from_json(const Json& j, QuadraticFormSpotCheck& r);
void to_json(Json& j, const RepresentationResult& r);
void from_json(const Json& j, RepresentationResult& r);
void to_json(Json& j, const FermatSolution& r);
void from_json(const Json& j, FermatSolution& r);
void to_json(Json& j, const FermatSearchReport& r);
void from_json(const Json& j, FermatSearchReport& r);
void to_json(Json& j, const OddPrimeValuation& r);
void from_json(const Json& j, OddPrimeValuation& r);
void to_json(Json& j, const DyadicBound& r);
void from_json(const Json& j, DyadicBound& r);
void to_json(Json& j, const FreyReport& r);
void from_json(const Json& j, FreyReport& r);
void to_json(Json& j, const SteinbergResult& r);
void from_json(const Json& j, SteinbergResult& r);
void to_json(Json& j, const EigenvaluePrimeBound& r);
void from_json(const Json& j, EigenvaluePrimeBound& r);

// Enum names as used in reports; from_string throws DomainError on unknown
// names.
RamPattern ram_pattern_from_string(const std::string& s);
Verdict verdict_from_string(const std::string& s);
ObstructionVerdict obstruction_verdict_from_string(const std::string& s);
IdentityOutcome identity_outcome_from_string(const std::string& s);

// {"schema": kSchemaVersion, "command": command, "result": result}
Json envelope(const std::string& command, Json result);

} // namespace flt
