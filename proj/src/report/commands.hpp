#pragma once

#include "report/cache.hpp"
#include "report/table.hpp"

namespace flt {

struct CommandConfig {
    unsigned threads = 0;
    // May be null; then nothing is cached.
    ResultCache* cache = nullptr;
};

// A command's JSON document plus whether a verified statement failed (a
// counterexample, a broken identity, a golden mismatch).
struct CommandResult {
    Json doc;
    bool verification_failed = false;
};

// Integral element from a polynomial in the generator written with x, e.g.
// "2*x+1"; throws DomainError when it is not integral.
IntVec parse_element(const FieldPtr& K, const std::string& text);

CommandResult cmd_field_info(const std::string& poly);
CommandResult cmd_check(const std::string& poly, ClassMode mode, const CommandConfig& cfg);
TableReport table_data(long max_disc, const CommandConfig& cfg);
// diff_golden adds a "golden_diff" member and fails verification on mismatch.
CommandResult cmd_table(long max_disc, bool diff_golden, const CommandConfig& cfg);
CommandResult cmd_cyclotomic(int n, const CommandConfig& cfg);
CommandResult cmd_pomey_identities(long p);
CommandResult cmd_pomey_represent(const std::string& field_poly, const std::string& d, int t);
// screen: 1 screened, 0 unscreened, -1 decided by check_assumption.
CommandResult cmd_pomey_search(const std::string& field_poly, long p, long height, int screen, const CommandConfig& cfg);
CommandResult cmd_frey(const std::string& field_poly, const std::string& a, const std::string& b, const std::optional<std::string>& c,
                       long p);
CommandResult cmd_steinberg(long f);
CommandResult cmd_eigenvalue_bound(const std::string& minpoly, long f);

} // namespace flt
