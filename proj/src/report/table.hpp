#pragma once

#include "report/serialize.hpp"

namespace flt {

// One field of the screened table: defining polynomial, |disc|, class
// number of K(sqrt -3) with its certification, and the shape of 3 O_K.
struct TableRow {
    std::string poly;
    Int disc;
    std::optional<Int> h;
    std::string certification;
    std::string shape;
    bool operator==(const TableRow&) const = default;
};

struct TableReport {
    long max_disc = 0;
    size_t fields_scanned = 0;
    std::vector<TableRow> rows;
    bool operator==(const TableReport&) const = default;
};

void to_json(Json& j, const TableRow& r);
void from_json(const Json& j, TableRow& r);
void to_json(Json& j, const TableReport& r);
void from_json(const Json& j, TableReport& r);

// Totally real cubic fields with |disc| <= max_disc satisfying the assumption.
TableReport build_table(long max_disc, unsigned threads = 0);

// Largest |disc| covered by the bundled reference table.
inline constexpr long kGoldenMaxDisc = 2000;
const std::vector<TableRow>& golden_table();

struct GoldenDiff {
    long compared_up_to = 0;
    std::vector<TableRow> missing, extra;
    // (reference, computed) pairs for isomorphic fields whose data differ.
    std::vector<std::pair<TableRow, TableRow>> mismatched;
    bool matches() const { return missing.empty() && extra.empty() && mismatched.empty(); }
};

// Compares rows with |disc| <= min(max_disc, kGoldenMaxDisc); rows pair up
// by discriminant and field isomorphism.
GoldenDiff diff_against_golden(const TableReport& t);
void to_json(Json& j, const GoldenDiff& d);

std::string render_markdown(const TableReport& t);
// Header plus one record per row; fields quoted when they contain a comma,
// quote or line break.
std::string render_csv(const TableReport& t);
// Inverse of render_csv for the row data. Throws DomainError on malformed
// input.
std::vector<TableRow> parse_table_csv(const std::string& text);

} // namespace flt
