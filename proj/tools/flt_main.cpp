#include "flt/flt.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

// 0 success, 1 input, 2 computation cap, 3 verification failure.
int exit_code(flt_status s)
{
    switch (s) {
    case FLT_OK: return 0;
    case FLT_ERR_CAP:
    case FLT_ERR_INCONCLUSIVE: return 2;
    case FLT_ERR_VERIFICATION: return 3;
    default: return 1;
    }
}

struct Handles {
    flt_context* ctx = nullptr;
    ~Handles() { flt_context_free(ctx); }
};

struct FieldHandle {
    flt_field* f = nullptr;
    ~FieldHandle() { flt_field_free(f); }
};

// Prints the output or the error, then returns the exit code; failed
// verifications turn a successful call into exit 3. Callers must finish the
// API call before passing out.
int finish(flt_context* ctx, flt_status s, char* out, bool verified = true)
{
    if (ctx) {
        std::istringstream w(flt_context_warnings(ctx));
        for (std::string line; std::getline(w, line);) std::cerr << "warning: " << line << "\n";
    }
    if (s != FLT_OK) {
        std::cerr << "error: " << flt_last_error() << "\n";
        return exit_code(s);
    }
    std::fputs(out, stdout);
    flt_string_free(out);
    if (!verified) {
        std::cerr << "verification failed\n";
        return 3;
    }
    return 0;
}

int field_or_q(const std::string& poly, FieldHandle& h)
{
    if (poly.empty()) return 0;
    flt_status s = flt_field_new(poly.c_str(), &h.f);
    if (s != FLT_OK) {
        std::cerr << "error: " << flt_last_error() << "\n";
        return exit_code(s);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Screening of number fields for the Fermat equation over totally real fields"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", flt_version());

    unsigned threads = 0;
    std::string cache_dir, format = "json";
    bool no_cache = false;
    app.add_option("--threads", threads, "Thread cap (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
    app.add_option("--cache-dir", cache_dir, "Cache directory (default FLT_CACHE_DIR or the user cache)");
    app.add_flag("--no-cache", no_cache, "Disable the result cache");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "markdown"}));

    std::string poly, mode = "unconditional";
    auto* info = app.add_subcommand("field-info", "Degree, signature, discriminant, index and integral basis");
    info->add_option("poly", poly, "Defining polynomial in x")->required();

    auto* check = app.add_subcommand("check", "Assumption verdict with witnesses");
    check->add_option("poly", poly, "Defining polynomial in x")->required();
    check->add_option("--mode", mode, "Class number certification")->check(CLI::IsMember({"unconditional", "grh"}));

    long max_disc = 0;
    bool diff_golden = false;
    auto* table = app.add_subcommand("table", "Totally real cubic fields satisfying the assumption");
    table->add_option("--max-disc", max_disc, "Largest |disc|")->required()->check(CLI::PositiveNumber);
    table->add_flag("--diff-golden", diff_golden, "Compare against the bundled reference table");

    int n = 0;
    auto* cyclo = app.add_subcommand("cyclotomic", "Splitting and parity data of Q(zeta_{3^n})^+");
    cyclo->add_option("--n", n, "Level exponent")->required()->check(CLI::PositiveNumber);

    long p = 0, height = 0, f = 0;
    int t = 1;
    std::string field, d, a, b, c, minpoly, screen = "auto";
    auto* pomey = app.add_subcommand("pomey", "Identities, representations, searches and bounds");
    pomey->require_subcommand(1);
    auto* ident = pomey->add_subcommand("identities", "Residue signs, P identity, quadratic-form identity");
    ident->add_option("--p", p, "Odd prime exponent")->required();
    auto* repr = pomey->add_subcommand("represent", "d^t = x^2 + 3y^2");
    repr->add_option("--d", d, "Totally positive element, polynomial in x")->required();
    repr->add_option("--t", t, "Exponent")->check(CLI::PositiveNumber);
    repr->add_option("--field", field, "Defining polynomial (default Q)");
    auto* search = pomey->add_subcommand("search", "Exhaustive x^p + y^p + z^p = 0 over a coordinate box");
    search->add_option("--p", p, "Odd prime exponent")->required();
    search->add_option("--height", height, "Coordinate bound")->required();
    search->add_option("--field", field, "Defining polynomial (default Q)");
    search->add_option("--screen", screen, "Treat the field as screened")->check(CLI::IsMember({"auto", "yes", "no"}));
    auto add_frey = [&](CLI::App* cmd) {
        cmd->add_option("--a", a, "a, polynomial in x")->required();
        cmd->add_option("--b", b, "b, polynomial in x")->required();
        cmd->add_option("--c", c, "c with a^p + b^p + c^p = 0 (optional)");
        cmd->add_option("--p", p, "Odd prime exponent")->required();
        cmd->add_option("--field", field, "Defining polynomial (default Q)");
    };
    auto* pfrey = pomey->add_subcommand("frey", "Frey curve invariants");
    add_frey(pfrey);
    auto* stein = pomey->add_subcommand("steinberg", "(3^f + 1)^2 against 4 * 3^f");
    stein->add_option("--f", f, "Residue degree")->required();
    auto* eigen = pomey->add_subcommand("eigenbound", "Primes dividing N(a -+ (3^f + 1))");
    eigen->add_option("--minpoly", minpoly, "Monic minimal polynomial of a")->required();
    eigen->add_option("--f", f, "Residue degree")->required();
    auto* frey = app.add_subcommand("frey", "Frey curve invariants");
    add_frey(frey);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (format != "json" && !table->parsed()) {
        std::cerr << "error: --format " << format << " is only available for table\n";
        return 1;
    }

    Handles h;
    if (flt_context_new(&h.ctx) != FLT_OK) {
        std::cerr << "error: " << flt_last_error() << "\n";
        return 1;
    }
    flt_context_set_threads(h.ctx, threads);
    if (no_cache)
        flt_context_set_cache_dir(h.ctx, nullptr);
    else if (!cache_dir.empty())
        flt_context_set_cache_dir(h.ctx, cache_dir.c_str());

    char* out = nullptr;
    FieldHandle fh;
    if (info->parsed() || check->parsed()) {
        if (int rc = field_or_q(poly, fh)) return rc;
        if (info->parsed()) {
            flt_status s = flt_field_info(fh.f, &out);
            return finish(h.ctx, s, out);
        }
        flt_mode m = mode == "grh" ? FLT_MODE_GRH : FLT_MODE_UNCONDITIONAL;
        flt_status s = flt_check(h.ctx, fh.f, m, &out, nullptr);
        return finish(h.ctx, s, out);
    }
    if (table->parsed()) {
        flt_format fmt = format == "csv" ? FLT_FORMAT_CSV : format == "markdown" ? FLT_FORMAT_MARKDOWN : FLT_FORMAT_JSON;
        int match = 1;
        flt_status s = flt_table(h.ctx, max_disc, fmt, diff_golden ? 1 : 0, &out, &match);
        return finish(h.ctx, s, out, match != 0);
    }
    if (cyclo->parsed()) {
        flt_status s = flt_cyclotomic(h.ctx, n, &out);
        return finish(h.ctx, s, out);
    }

    if (int rc = field_or_q(field, fh)) return rc;
    const char* cptr = c.empty() ? nullptr : c.c_str();
    if (frey->parsed() || pfrey->parsed()) {
        int ok = 1;
        flt_status s = flt_frey(fh.f, a.c_str(), b.c_str(), cptr, p, &out, &ok);
        return finish(h.ctx, s, out, ok != 0);
    }
    if (ident->parsed()) {
        int ok = 1;
        flt_status s = flt_pomey_identities(p, &out, &ok);
        return finish(h.ctx, s, out, ok != 0);
    }
    if (repr->parsed()) {
        flt_status s = flt_pomey_represent(fh.f, d.c_str(), t, &out, nullptr);
        return finish(h.ctx, s, out);
    }
    if (search->parsed()) {
        int sc = screen == "yes" ? 1 : screen == "no" ? 0 : -1;
        size_t bad = 0;
        flt_status s = flt_pomey_search(h.ctx, fh.f, p, height, sc, &out, &bad);
        return finish(h.ctx, s, out, bad == 0);
    }
    if (stein->parsed()) {
        int ok = 1;
        flt_status s = flt_steinberg(f, &out, &ok);
        return finish(h.ctx, s, out, ok != 0);
    }
    if (eigen->parsed()) {
        flt_status s = flt_eigenvalue_bound(minpoly.c_str(), f, &out);
        return finish(h.ctx, s, out);
    }
    return 1;
}
