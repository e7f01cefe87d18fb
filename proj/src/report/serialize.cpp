#include "report/serialize.hpp"

#include "exactmath/poly.hpp"

namespace nlohmann {

void adl_serializer<mpz_class>::to_json(ordered_json& j, const mpz_class& a)
{
    if (a.fits_slong_p())
        j = static_cast<std::int64_t>(a.get_si());
    else
        j = a.get_str();
}

void adl_serializer<mpz_class>::from_json(const ordered_json& j, mpz_class& a)
{
    if (j.is_number_integer())
        a = static_cast<long>(j.get<std::int64_t>());
    else if (j.is_string())
        a = mpz_class(j.get<std::string>());
    else
        throw flt::DomainError("expected an integer, got " + j.dump());
}

void adl_serializer<mpq_class>::to_json(ordered_json& j, const mpq_class& a)
{
    mpq_class c = a;
    c.canonicalize();
    if (c.get_den() == 1)
        j = mpz_class(c.get_num());
    else
        j = c.get_str();
}

void adl_serializer<mpq_class>::from_json(const ordered_json& j, mpq_class& a)
{
    if (j.is_string()) {
        a = mpq_class(j.get<std::string>());
        a.canonicalize();
    } else {
        a = j.get<mpz_class>();
    }
}

} // namespace nlohmann

namespace flt {

namespace {

template <class T> Json opt(const std::optional<T>& o) { return o ? Json(*o) : Json(nullptr); }

template <class T> std::optional<T> get_opt(const Json& j, const char* key)
{
    const Json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<T>();
}

Json ef_list(const std::vector<std::pair<int, int>>& v)
{
    Json a = Json::array();
    for (auto& [e, f] : v) a.push_back(Json{{"e", e}, {"f", f}});
    return a;
}

std::vector<std::pair<int, int>> ef_from(const Json& a)
{
    std::vector<std::pair<int, int>> v;
    for (auto& x : a) v.emplace_back(x.at("e").get<int>(), x.at("f").get<int>());
    return v;
}

template <class E> E enum_from(const std::string& s, std::initializer_list<E> values, const char* what)
{
    for (E v : values)
        if (to_string(v) == s) return v;
    throw DomainError(std::string("unknown ") + what + " '" + s + "'");
}

} // namespace

RamPattern ram_pattern_from_string(const std::string& s)
{
    return enum_from(s, {RamPattern::TotallyRamifiedOddDegree, RamPattern::MixedOddPlusEvenSquares, RamPattern::Fails}, "pattern");
}

Verdict verdict_from_string(const std::string& s)
{
    return enum_from(s, {Verdict::Satisfied, Verdict::Fails, Verdict::Inconclusive}, "verdict");
}

ObstructionVerdict obstruction_verdict_from_string(const std::string& s)
{
    return enum_from(s, {ObstructionVerdict::ForcesEvenClassNumber, ObstructionVerdict::Inconclusive}, "obstruction verdict");
}

IdentityOutcome identity_outcome_from_string(const std::string& s)
{
    return enum_from(s, {IdentityOutcome::Holds, IdentityOutcome::FailsWithCounterexample, IdentityOutcome::HoldsWithAdjustedRange},
                     "identity outcome");
}

void to_json(Json& j, const FieldPtr& K) { j = K ? Json(to_string(K->poly())) : Json(nullptr); }

void from_json(const Json& j, FieldPtr& K) { K = j.is_null() ? nullptr : build_field(parse_poly(j.get<std::string>())); }

Json field_info_json(const FieldPtr& K)
{
    Json basis = Json::array();
    for (int i = 0; i < K->degree(); ++i) basis.push_back(to_string(K->to_poly(K->from_int(K->unit_vector(i))), "a"));
    return Json{{"poly", to_string(K->poly())},
                {"degree", K->degree()},
                {"signature", Json::array({K->r(), K->s()})},
                {"disc", K->disc()},
                {"index", K->index()},
                {"integral_basis", basis}};
}

void to_json(Json& j, const PatternResult& r)
{
    j = Json{{"pattern", to_string(r.pattern)}, {"shape", r.shape}, {"ef", ef_list(r.ef)}, {"not_galois_compatible", r.not_galois_compatible}};
}

void from_json(const Json& j, PatternResult& r)
{
    r.pattern = ram_pattern_from_string(j.at("pattern").get<std::string>());
    r.shape = j.at("shape").get<std::string>();
    r.ef = ef_from(j.at("ef"));
    r.not_galois_compatible = j.at("not_galois_compatible").get<bool>();
}

void to_json(Json& j, const ObstructionResult& r)
{
    Json ram = Json::array();
    for (auto& [p, ef] : r.ramified) ram.push_back(Json{{"p", p}, {"e", ef.first}, {"f", ef.second}});
    j = Json{{"p", r.p},
             {"gamma", r.gamma},
             {"signature", Json::array({r.r, r.s})},
             {"verdict", to_string(r.verdict)},
             {"ambiguous_lower_bound_2exp", r.ambiguous_lower_bound_2exp},
             {"ramified", ram}};
}

void from_json(const Json& j, ObstructionResult& r)
{
    r.p = j.at("p").get<long>();
    r.gamma = j.at("gamma").get<int>();
    r.r = j.at("signature").at(0).get<int>();
    r.s = j.at("signature").at(1).get<int>();
    r.verdict = obstruction_verdict_from_string(j.at("verdict").get<std::string>());
    r.ambiguous_lower_bound_2exp = j.at("ambiguous_lower_bound_2exp").get<int>();
    r.ramified.clear();
    for (auto& x : j.at("ramified")) r.ramified.push_back({x.at("p").get<Int>(), {x.at("e").get<int>(), x.at("f").get<int>()}});
}

void to_json(Json& j, const AssumptionReport& r)
{
    j = Json{{"field", r.field},
             {"totally_real", r.totally_real},
             {"verdict", to_string(r.verdict)},
             {"reasons", r.reasons},
             {"pattern", r.pattern},
             {"t3_nonempty", r.t3_nonempty},
             {"v3_nonempty", r.v3_nonempty},
             {"t3", ef_list(r.t3)},
             {"v3", ef_list(r.v3)},
             {"obstruction", opt(r.obstruction)},
             {"t", opt(r.t)},
             {"t_odd", opt(r.t_odd)},
             {"t_certification", r.t_certification},
             {"theorem_scope", r.theorem_scope}};
}

void from_json(const Json& j, AssumptionReport& r)
{
    r.field = j.at("field").get<FieldPtr>();
    r.totally_real = j.at("totally_real").get<bool>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.reasons = j.at("reasons").get<std::vector<std::string>>();
    r.pattern = j.at("pattern").get<PatternResult>();
    r.t3_nonempty = j.at("t3_nonempty").get<bool>();
    r.v3_nonempty = j.at("v3_nonempty").get<bool>();
    r.t3 = ef_from(j.at("t3"));
    r.v3 = ef_from(j.at("v3"));
    r.obstruction = get_opt<ObstructionResult>(j, "obstruction");
    r.t = get_opt<Int>(j, "t");
    r.t_odd = get_opt<bool>(j, "t_odd");
    r.t_certification = j.at("t_certification").get<std::string>();
    r.theorem_scope = j.at("theorem_scope").get<std::string>();
}

void to_json(Json& j, const CyclotomicReport& r)
{
    j = Json{{"n", r.n},
             {"field", r.field},
             {"degree", r.degree},
             {"two_inert", r.two_inert},
             {"three_totally_ramified", r.three_totally_ramified},
             {"three_residue_degree", r.three_residue_degree},
             {"stv_singleton", r.stv_singleton},
             {"parity_source", r.parity_source},
             {"assumption", opt(r.assumption)}};
}

void from_json(const Json& j, CyclotomicReport& r)
{
    r.n = j.at("n").get<int>();
    r.field = j.at("field").get<FieldPtr>();
    r.degree = j.at("degree").get<int>();
    r.two_inert = j.at("two_inert").get<bool>();
    r.three_totally_ramified = j.at("three_totally_ramified").get<bool>();
    r.three_residue_degree = j.at("three_residue_degree").get<int>();
    r.stv_singleton = j.at("stv_singleton").get<bool>();
    r.parity_source = j.at("parity_source").get<std::string>();
    r.assumption = get_opt<AssumptionReport>(j, "assumption");
}

void to_json(Json& j, const SUnitReport& r)
{
    j = Json{{"n", r.n},
             {"found", r.found},
             {"lambda", r.lambda},
             {"mu", r.mu},
             {"valuation_at_two", r.valuation_at_two},
             {"exponents", r.exponents}};
}

void from_json(const Json& j, SUnitReport& r)
{
    r.n = j.at("n").get<int>();
    r.found = j.at("found").get<bool>();
    r.lambda = j.at("lambda").get<IntVec>();
    r.mu = j.at("mu").get<IntVec>();
    r.valuation_at_two = j.at("valuation_at_two").get<int>();
    r.exponents = j.at("exponents").get<std::vector<int>>();
}

void to_json(Json& j, const ResidueSignProfile& r)
{
    j = Json{{"p", r.p}, {"admissible_eps", r.admissible_eps}, {"derived_congruence", r.derived_congruence}};
}

void from_json(const Json& j, ResidueSignProfile& r)
{
    r.p = j.at("p").get<long>();
    r.admissible_eps = j.at("admissible_eps").get<std::vector<std::array<int, 3>>>();
    r.derived_congruence = j.at("derived_congruence").get<bool>();
}

void to_json(Json& j, const PIdentityResult& r)
{
    j = Json{{"p", r.p},
             {"outcome", to_string(r.outcome)},
             {"range", Json::array({r.range_lo, r.range_hi})},
             {"coefficients", r.coefficients},
             {"displayed_coefficients_match", r.displayed_coefficients_match},
             {"first_mismatch", opt(r.first_mismatch)},
             {"mod3_consequence", r.mod3_consequence}};
}

void from_json(const Json& j, PIdentityResult& r)
{
    r.p = j.at("p").get<long>();
    r.outcome = identity_outcome_from_string(j.at("outcome").get<std::string>());
    r.range_lo = j.at("range").at(0).get<int>();
    r.range_hi = j.at("range").at(1).get<int>();
    r.coefficients = j.at("coefficients").get<std::vector<Int>>();
    r.displayed_coefficients_match = j.at("displayed_coefficients_match").get<bool>();
    r.first_mismatch = get_opt<int>(j, "first_mismatch");
    r.mod3_consequence = j.at("mod3_consequence").get<bool>();
}

void to_json(Json& j, const HomPoly& h) { j = Json{{"degree", h.deg}, {"coefficients", h.coeffs}}; }

void from_json(const Json& j, HomPoly& h)
{
    h.deg = j.at("degree").get<int>();
    h.coeffs = j.at("coefficients").get<std::vector<Int>>();
}

void to_json(Json& j, const QuadraticFormIdentity& r) { j = Json{{"holds", r.holds}, {"lhs", r.lhs}, {"rhs", r.rhs}}; }

void from_json(const Json& j, QuadraticFormIdentity& r)
{
    r.holds = j.at("holds").get<bool>();
    r.lhs = j.at("lhs").get<HomPoly>();
    r.rhs = j.at("rhs").get<HomPoly>();
}

void to_json(Json& j, const QuadraticFormSpotCheck& r)
{
    j = Json{{"s", r.s}, {"t", r.t}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
}

void from_json(const Json& j, QuadraticFormSpotCheck& r)
{
    r.s = j.at("s").get<Int>();
    r.t = j.at("t").get<Int>();
    r.lhs = j.at("lhs").get<Int>();
    r.rhs = j.at("rhs").get<Int>();
    r.holds = j.at("holds").get<bool>();
}

void to_json(Json& j, const RepresentationResult& r)
{
    j = Json{{"field", r.field},
             {"d", r.d},
             {"t", r.t},
             {"found", r.found},
             {"x", r.x},
             {"y", r.y},
             {"search_radius_used", r.search_radius_used},
             {"solutions", r.solutions},
             {"mod3_obstruction", r.mod3_obstruction}};
}

void from_json(const Json& j, RepresentationResult& r)
{
    r.field = j.at("field").get<FieldPtr>();
    r.d = j.at("d").get<IntVec>();
    r.t = j.at("t").get<int>();
    r.found = j.at("found").get<bool>();
    r.x = j.at("x").get<IntVec>();
    r.y = j.at("y").get<IntVec>();
    r.search_radius_used = j.at("search_radius_used").get<Rat>();
    r.solutions = j.at("solutions").get<size_t>();
    r.mod3_obstruction = j.at("mod3_obstruction").get<bool>();
}

void to_json(Json& j, const FermatSolution& r)
{
    j = Json{{"x", r.x},
             {"y", r.y},
             {"z", r.z},
             {"three_divides_xyz", r.three_divides_xyz},
             {"primitive", r.primitive},
             {"counterexample", r.counterexample}};
}

void from_json(const Json& j, FermatSolution& r)
{
    r.x = j.at("x").get<IntVec>();
    r.y = j.at("y").get<IntVec>();
    r.z = j.at("z").get<IntVec>();
    r.three_divides_xyz = j.at("three_divides_xyz").get<bool>();
    r.primitive = j.at("primitive").get<bool>();
    r.counterexample = j.at("counterexample").get<bool>();
}

void to_json(Json& j, const FermatSearchReport& r)
{
    j = Json{{"field", r.field},
             {"p", r.p},
             {"height", r.height},
             {"screened", r.screened},
             {"box_size", r.box_size},
             {"trivial_solutions", r.trivial_solutions},
             {"nontrivial", r.nontrivial},
             {"counterexamples", r.counterexamples}};
}

void from_json(const Json& j, FermatSearchReport& r)
{
    r.field = j.at("field").get<FieldPtr>();
    r.p = j.at("p").get<long>();
    r.height = j.at("height").get<long>();
    r.screened = j.at("screened").get<bool>();
    r.box_size = j.at("box_size").get<size_t>();
    r.trivial_solutions = j.at("trivial_solutions").get<size_t>();
    r.nontrivial = j.at("nontrivial").get<std::vector<FermatSolution>>();
    r.counterexamples = j.at("counterexamples").get<size_t>();
}

void to_json(Json& j, const OddPrimeValuation& r)
{
    j = Json{{"p_below", r.p_below},
             {"norm", r.norm},
             {"e", r.e},
             {"f", r.f},
             {"valuation", r.valuation},
             {"divisible_by_p", r.divisible_by_p}};
}

void from_json(const Json& j, OddPrimeValuation& r)
{
    r.p_below = j.at("p_below").get<Int>();
    r.norm = j.at("norm").get<Int>();
    r.e = j.at("e").get<int>();
    r.f = j.at("f").get<int>();
    r.valuation = j.at("valuation").get<int>();
    r.divisible_by_p = j.at("divisible_by_p").get<bool>();
}

void to_json(Json& j, const DyadicBound& r) { j = Json{{"e", r.e}, {"f", r.f}, {"interval", Json::array({0, r.upper})}}; }

void from_json(const Json& j, DyadicBound& r)
{
    r.e = j.at("e").get<int>();
    r.f = j.at("f").get<int>();
    r.upper = j.at("interval").at(1).get<int>();
}

void to_json(Json& j, const FreyReport& r)
{
    j = Json{{"field", r.field},
             {"p", r.p},
             {"a", r.a},
             {"b", r.b},
             {"c", r.c_given ? Json(r.c) : Json(nullptr)},
             {"A", r.A},
             {"B", r.B},
             {"discriminant", r.discriminant},
             {"discriminant_matches_closed_form", r.discriminant_matches_closed_form},
             {"odd_valuations", r.odd_valuations},
             {"conductor_exponent_bounds", r.conductor_exponent_bounds}};
}

void from_json(const Json& j, FreyReport& r)
{
    r.field = j.at("field").get<FieldPtr>();
    r.p = j.at("p").get<long>();
    r.a = j.at("a").get<IntVec>();
    r.b = j.at("b").get<IntVec>();
    r.c_given = !j.at("c").is_null();
    r.c = r.c_given ? j.at("c").get<IntVec>() : IntVec{};
    r.A = j.at("A").get<IntVec>();
    r.B = j.at("B").get<IntVec>();
    r.discriminant = j.at("discriminant").get<IntVec>();
    r.discriminant_matches_closed_form = j.at("discriminant_matches_closed_form").get<bool>();
    r.odd_valuations = j.at("odd_valuations").get<std::vector<OddPrimeValuation>>();
    r.conductor_exponent_bounds = j.at("conductor_exponent_bounds").get<std::vector<DyadicBound>>();
}

void to_json(Json& j, const SteinbergResult& r)
{
    j = Json{{"f", r.f}, {"excluded", r.excluded}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin}};
}

void from_json(const Json& j, SteinbergResult& r)
{
    r.f = j.at("f").get<long>();
    r.excluded = j.at("excluded").get<bool>();
    r.lhs = j.at("lhs").get<Int>();
    r.rhs = j.at("rhs").get<Int>();
    r.margin = j.at("margin").get<Int>();
}

void to_json(Json& j, const EigenvaluePrimeBound& r)
{
    j = Json{{"f", r.f}, {"norm_minus", r.norm_minus}, {"norm_plus", r.norm_plus}, {"primes", r.primes}, {"warnings", r.warnings}};
}

void from_json(const Json& j, EigenvaluePrimeBound& r)
{
    r.f = j.at("f").get<long>();
    r.norm_minus = j.at("norm_minus").get<Int>();
    r.norm_plus = j.at("norm_plus").get<Int>();
    r.primes = j.at("primes").get<std::vector<Int>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
}

Json envelope(const std::string& command, Json result)
{
    return Json{{"schema", kSchemaVersion}, {"command", command}, {"result", std::move(result)}};
}

} // namespace flt
