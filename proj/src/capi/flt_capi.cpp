#include "flt/flt.h"

#include "report/commands.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>

struct flt_context {
    unsigned threads = 0;
    std::unique_ptr<flt::ResultCache> cache;
    std::string warnings;
};

struct flt_field {
    flt::FieldPtr K;
    std::string poly;
};

namespace {

thread_local std::string g_last_error;

flt_status fail(flt_status s, const std::string& msg)
{
    g_last_error = msg;
    return s;
}

// Runs f, mapping exceptions onto status codes.
template <class F> flt_status guarded(F f)
{
    g_last_error.clear();
    try {
        f();
        return FLT_OK;
    } catch (const flt::DomainError& e) {
        return fail(FLT_ERR_INPUT, e.what());
    } catch (const flt::CapError& e) {
        return fail(FLT_ERR_CAP, e.what());
    } catch (const flt::VerificationError& e) {
        return fail(FLT_ERR_VERIFICATION, e.what());
    } catch (const flt::InconclusiveError& e) {
        return fail(FLT_ERR_INCONCLUSIVE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FLT_ERR_INPUT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FLT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FLT_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

std::string dump(const flt::Json& j) { return j.dump(2) + "\n"; }

std::string field_poly(const flt_field* f) { return f ? f->poly : std::string("x-1"); }

flt::CommandConfig config(flt_context* ctx) { return {ctx->threads, ctx->cache && ctx->cache->enabled() ? ctx->cache.get() : nullptr}; }

bool null_arg(const void* p, const char* what, flt_status& st)
{
    if (p) return false;
    st = fail(FLT_ERR_INPUT, std::string(what) + " must not be NULL");
    return true;
}

} // namespace

extern "C" {

const char* flt_version(void) { return flt::kToolVersion; }

int flt_schema_version(void) { return flt::kSchemaVersion; }

const char* flt_last_error(void) { return g_last_error.c_str(); }

void flt_string_free(char* s) { std::free(s); }

flt_status flt_context_new(flt_context** out)
{
    flt_status st;
    if (null_arg(out, "out", st)) return st;
    return guarded([&] {
        auto ctx = std::make_unique<flt_context>();
        ctx->cache = std::make_unique<flt::ResultCache>(flt::ResultCache::default_dir());
        *out = ctx.release();
    });
}

void flt_context_free(flt_context* ctx) { delete ctx; }

flt_status flt_context_set_threads(flt_context* ctx, unsigned threads)
{
    flt_status st;
    if (null_arg(ctx, "ctx", st)) return st;
    ctx->threads = threads;
    return FLT_OK;
}

flt_status flt_context_set_cache_dir(flt_context* ctx, const char* dir)
{
    flt_status st;
    if (null_arg(ctx, "ctx", st)) return st;
    return guarded([&] { ctx->cache = std::make_unique<flt::ResultCache>(dir ? dir : ""); });
}

const char* flt_context_warnings(flt_context* ctx)
{
    if (!ctx) return "";
    ctx->warnings.clear();
    if (ctx->cache)
        for (auto& w : ctx->cache->warnings()) ctx->warnings += w + "\n";
    return ctx->warnings.c_str();
}

flt_status flt_field_new(const char* poly, flt_field** out)
{
    flt_status st;
    if (null_arg(poly, "poly", st) || null_arg(out, "out", st)) return st;
    return guarded([&] {
        auto f = std::make_unique<flt_field>();
        f->K = flt::build_field(flt::parse_poly(poly));
        f->poly = flt::to_string(f->K->poly());
        *out = f.release();
    });
}

void flt_field_free(flt_field* field) { delete field; }

flt_status flt_field_degree(const flt_field* field, int* out)
{
    flt_status st;
    if (null_arg(field, "field", st) || null_arg(out, "out", st)) return st;
    *out = field->K->degree();
    return FLT_OK;
}

flt_status flt_field_disc(const flt_field* field, char** out)
{
    flt_status st;
    if (null_arg(field, "field", st) || null_arg(out, "out", st)) return st;
    return guarded([&] { *out = dup(field->K->disc().get_str()); });
}

flt_status flt_field_info(const flt_field* field, char** out_json)
{
    flt_status st;
    if (null_arg(field, "field", st) || null_arg(out_json, "out_json", st)) return st;
    return guarded([&] { *out_json = dup(dump(flt::cmd_field_info(field->poly).doc)); });
}

flt_status flt_check(flt_context* ctx, const flt_field* field, flt_mode mode, char** out_json, int* verdict)
{
    flt_status st;
    if (null_arg(ctx, "ctx", st) || null_arg(field, "field", st) || null_arg(out_json, "out_json", st)) return st;
    return guarded([&] {
        auto m = mode == FLT_MODE_GRH ? flt::ClassMode::HeuristicGRH : flt::ClassMode::Unconditional;
        auto r = flt::cmd_check(field->poly, m, config(ctx));
        if (verdict) *verdict = static_cast<int>(flt::verdict_from_string(r.doc["result"]["verdict"].get<std::string>()));
        *out_json = dup(dump(r.doc));
    });
}

flt_status flt_table(flt_context* ctx, long max_disc, flt_format format, int diff_golden, char** out, int* golden_match)
{
    flt_status st;
    if (null_arg(ctx, "ctx", st) || null_arg(out, "out", st)) return st;
    return guarded([&] {
        auto cfg = config(ctx);
        auto r = flt::cmd_table(max_disc, diff_golden != 0, cfg);
        if (golden_match) *golden_match = r.verification_failed ? 0 : 1;
        if (format == FLT_FORMAT_JSON) {
            *out = dup(dump(r.doc));
            return;
        }
        auto t = r.doc["result"].get<flt::TableReport>();
        *out = dup(format == FLT_FORMAT_CSV ? flt::render_csv(t) : flt::render_markdown(t));
    });
}

flt_status flt_cyclotomic(flt_context* ctx, int n, char** out_json)
{
    flt_status st;
    if (null_arg(ctx, "ctx", st) || null_arg(out_json, "out_json", st)) return st;
    return guarded([&] { *out_json = dup(dump(flt::cmd_cyclotomic(n, config(ctx)).doc)); });
}

flt_status flt_pomey_identities(long p, char** out_json, int* all_hold)
{
    flt_status st;
    if (null_arg(out_json, "out_json", st)) return st;
    return guarded([&] {
        auto r = flt::cmd_pomey_identities(p);
        if (all_hold) *all_hold = r.verification_failed ? 0 : 1;
        *out_json = dup(dump(r.doc));
    });
}

flt_status flt_pomey_represent(const flt_field* field, const char* d, int t, char** out_json, int* found)
{
    flt_status st;
    if (null_arg(d, "d", st) || null_arg(out_json, "out_json", st)) return st;
    return guarded([&] {
        auto r = flt::cmd_pomey_represent(field_poly(field), d, t);
        if (found) *found = r.doc["result"]["found"].get<bool>() ? 1 : 0;
        *out_json = dup(dump(r.doc));
    });
}

flt_status flt_pomey_search(flt_context* ctx, const flt_field* field, long p, long height, int screen, char** out_json,
                            size_t* counterexamples)
{
    flt_status st;
    if (null_arg(ctx, "ctx", st) || null_arg(out_json, "out_json", st)) return st;
    return guarded([&] {
        auto r = flt::cmd_pomey_search(field_poly(field), p, height, screen, config(ctx));
        if (counterexamples) *counterexamples = r.doc["result"]["counterexamples"].get<size_t>();
        *out_json = dup(dump(r.doc));
    });
}

flt_status flt_frey(const flt_field* field, const char* a, const char* b, const char* c, long p, char** out_json, int* invariants_hold)
{
    flt_status st;
    if (null_arg(a, "a", st) || null_arg(b, "b", st) || null_arg(out_json, "out_json", st)) return st;
    return guarded([&] {
        std::optional<std::string> cs;
        if (c) cs = c;
        auto r = flt::cmd_frey(field_poly(field), a, b, cs, p);
        if (invariants_hold) *invariants_hold = r.verification_failed ? 0 : 1;
        *out_json = dup(dump(r.doc));
    });
}

flt_status flt_steinberg(long f, char** out_json, int* excluded)
{
    flt_status st;
    if (null_arg(out_json, "out_json", st)) return st;
    return guarded([&] {
        auto r = flt::cmd_steinberg(f);
        if (excluded) *excluded = r.verification_failed ? 0 : 1;
        *out_json = dup(dump(r.doc));
    });
}

flt_status flt_eigenvalue_bound(const char* minpoly, long f, char** out_json)
{
    flt_status st;
    if (null_arg(minpoly, "minpoly", st) || null_arg(out_json, "out_json", st)) return st;
    return guarded([&] { *out_json = dup(dump(flt::cmd_eigenvalue_bound(minpoly, f).doc)); });
}

} // extern "C"
