#include "report/table.hpp"

#include "numfield/kpoly.hpp"

#include <sstream>

namespace flt {

void to_json(Json& j, const TableRow& r)
{
    j = Json{{"poly", r.poly},
             {"abs_disc", r.disc},
             {"h", r.h ? Json(*r.h) : Json(nullptr)},
             {"certification", r.certification},
             {"ramification_of_3", r.shape}};
}

void from_json(const Json& j, TableRow& r)
{
    r.poly = j.at("poly").get<std::string>();
    r.disc = j.at("abs_disc").get<Int>();
    r.h = j.at("h").is_null() ? std::nullopt : std::optional<Int>(j.at("h").get<Int>());
    r.certification = j.at("certification").get<std::string>();
    r.shape = j.at("ramification_of_3").get<std::string>();
}

void to_json(Json& j, const TableReport& r)
{
    j = Json{{"max_disc", r.max_disc}, {"fields_scanned", r.fields_scanned}, {"rows", r.rows}};
}

void from_json(const Json& j, TableReport& r)
{
    r.max_disc = j.at("max_disc").get<long>();
    r.fields_scanned = j.at("fields_scanned").get<size_t>();
    r.rows = j.at("rows").get<std::vector<TableRow>>();
}

TableReport build_table(long max_disc, unsigned threads)
{
    TableReport t;
    t.max_disc = max_disc;
    auto entries = enumerate_totally_real_cubics(max_disc, threads);
    t.fields_scanned = entries.size();
    for (auto& e : entries) {
        if (e.report.verdict != Verdict::Satisfied) continue;
        t.rows.push_back({to_string(e.field->poly()), abs(e.field->disc()), e.report.t, e.report.t_certification,
                          e.report.pattern.shape});
    }
    return t;
}

const std::vector<TableRow>& golden_table()
{
    // The 993 row carries x^3-x^2-6x+3: the printed x^3-x^2-6x+2 has disc 1016.
    static const std::vector<TableRow> rows = [] {
        const char* data[][3] = {{"x^3-3*x-1", "81", "p^3"},           {"x^3-x^2-4*x+1", "321", "p1 p2^2"},
                                 {"x^3-x^2-5*x+3", "564", "p1 p2^2"},  {"x^3-6*x-3", "621", "p^3"},
                                 {"x^3-6*x-2", "756", "p^3"},          {"x^3-6*x-1", "837", "p^3"},
                                 {"x^3-x^2-6*x+3", "993", "p1 p2^2"},  {"x^3-x^2-9*x+12", "1101", "p1 p2^2"},
                                 {"x^3-x^2-8*x-3", "1425", "p1 p2^2"}, {"x^3-x^2-7*x+1", "1524", "p1 p2^2"},
                                 {"x^3-12*x-14", "1620", "p^3"},       {"x^3-9*x-6", "1944", "p^3"}};
        std::vector<TableRow> v;
        for (auto& d : data) v.push_back({d[0], Int(d[1]), Int(1), "unconditional", d[2]});
        return v;
    }();
    return rows;
}

GoldenDiff diff_against_golden(const TableReport& t)
{
    GoldenDiff d;
    d.compared_up_to = std::min(t.max_disc, kGoldenMaxDisc);
    std::vector<TableRow> computed;
    for (auto& r : t.rows)
        if (r.disc <= d.compared_up_to) computed.push_back(r);
    std::vector<bool> used(computed.size());
    for (auto& g : golden_table()) {
        if (g.disc > d.compared_up_to) continue;
        auto G = build_field(parse_poly(g.poly));
        bool found = false;
        for (size_t i = 0; i < computed.size() && !found; ++i) {
            if (used[i] || computed[i].disc != g.disc) continue;
            auto C = build_field(parse_poly(computed[i].poly));
            if (!fields_isomorphic(*G, *C)) continue;
            used[i] = found = true;
            if (computed[i].h != g.h || computed[i].shape != g.shape || computed[i].certification != g.certification)
                d.mismatched.emplace_back(g, computed[i]);
        }
        if (!found) d.missing.push_back(g);
    }
    for (size_t i = 0; i < computed.size(); ++i)
        if (!used[i]) d.extra.push_back(computed[i]);
    return d;
}

void to_json(Json& j, const GoldenDiff& d)
{
    Json mm = Json::array();
    for (auto& [g, c] : d.mismatched) mm.push_back(Json{{"reference", g}, {"computed", c}});
    j = Json{{"matches", d.matches()}, {"compared_up_to", d.compared_up_to}, {"missing", d.missing}, {"extra", d.extra}, {"mismatched", mm}};
}

namespace {

std::string h_text(const TableRow& r) { return r.h ? r.h->get_str() : ""; }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const char* kCsvHeader = "poly,abs_disc,h,certification,ramification_of_3";

Int csv_int(const std::string& s)
{
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw DomainError("csv: '" + s + "' is not an integer");
    }
}

} // namespace

std::string render_markdown(const TableReport& t)
{
    std::ostringstream o;
    o << "| f_K | \\|Δ_K\\| | h(K(√−3)) | 3O_K |\n";
    o << "|---|---:|---:|---|\n";
    for (auto& r : t.rows) o << "| " << r.poly << " | " << r.disc.get_str() << " | " << h_text(r) << " | " << r.shape << " |\n";
    return o.str();
}

std::string render_csv(const TableReport& t)
{
    std::ostringstream o;
    o << kCsvHeader << "\r\n";
    for (auto& r : t.rows)
        o << csv_field(r.poly) << ',' << r.disc.get_str() << ',' << h_text(r) << ',' << csv_field(r.certification) << ','
          << csv_field(r.shape) << "\r\n";
    return o.str();
}

std::vector<TableRow> parse_table_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> rec;
    std::string field;
    bool quoted = false, any = false;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            rec.push_back(field);
            field.clear();
        } else if (c == '\r' || c == '\n') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            rec.push_back(field);
            records.push_back(rec);
            rec.clear();
            field.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw DomainError("csv: unterminated quote");
    if (any || !field.empty() || !rec.empty()) {
        rec.push_back(field);
        records.push_back(rec);
    }
    if (records.empty()) throw DomainError("csv: missing header");
    std::string header;
    for (size_t i = 0; i < records[0].size(); ++i) header += (i ? "," : "") + records[0][i];
    if (header != kCsvHeader) throw DomainError("csv: unexpected header '" + header + "'");
    std::vector<TableRow> rows;
    for (size_t i = 1; i < records.size(); ++i) {
        auto& f = records[i];
        if (f.size() != 5) throw DomainError("csv: record " + std::to_string(i) + " has " + std::to_string(f.size()) + " fields");
        TableRow r;
        r.poly = f[0];
        r.disc = csv_int(f[1]);
        if (!f[2].empty()) r.h = csv_int(f[2]);
        r.certification = f[3];
        r.shape = f[4];
        rows.push_back(r);
    }
    return rows;
}

} // namespace flt
