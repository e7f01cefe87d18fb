// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include "classunit/classunit.hpp"
#include "exactmath/poly.hpp"
#include "fltscreen/fltscreen.hpp"
#include "idealarith/prime_ideal.hpp"
#include "numfield/relquad.hpp"
#include "pomeyfrey/pomeyfrey.hpp"
#include "report/commands.hpp"
#include "report/table.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace flt;

namespace {

// Collects failed requirements of one criterion.
struct Checker {
    std::vector<std::string> failures;
    void require(bool cond, const std::string& what)
    {
        if (!cond) failures.push_back(what);
    }
};

int g_failed = 0;

void run(int id, const std::string& title, const std::function<void(Checker&)>& body, const std::string& status_pass = "PASS")
{
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = c.failures.empty();
    if (!ok) ++g_failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << id << ": " << (ok ? status_pass : "FAIL") << " - " << title << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    for (auto& f : c.failures) std::cout << "    " << f << std::endl;
}

FieldPtr field(const std::string& poly) { return build_field(parse_poly(poly)); }

std::string str(const Int& a) { return a.get_str(); }

bool is_prime(long q)
{
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// Rank over GF(2) of 0/1 rows, by plain elimination.
int gf2_rank(std::vector<std::vector<int>> rows)
{
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols; ++c) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<size_t>(rank) && rows[i][c])
                for (size_t k = 0; k < cols; ++k) rows[i][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

void criterion_table(Checker& c)
{
    TableReport t = build_table(kGoldenMaxDisc);
    GoldenDiff d = diff_against_golden(t);
    c.require(t.rows.size() == 12, "expected 12 rows, got " + std::to_string(t.rows.size()));
    c.require(d.matches(), "golden diff: " + std::to_string(d.missing.size()) + " missing, " + std::to_string(d.extra.size()) +
                               " extra, " + std::to_string(d.mismatched.size()) + " mismatched");
    const std::vector<long> discs{81, 321, 564, 621, 756, 837, 993, 1101, 1425, 1524, 1620, 1944};
    for (size_t i = 0; i < t.rows.size() && i < discs.size(); ++i) {
        const TableRow& r = t.rows[i];
        c.require(r.disc == discs[i], "row " + std::to_string(i) + " disc " + str(r.disc));
        c.require(r.h && *r.h == 1 && r.certification == "unconditional", "row " + str(r.disc) + " h(K(sqrt-3)) not unconditional 1");
        // Recompute the pattern and the class number from the row polynomial.
        auto K = field(r.poly);
        c.require(K->disc() == discs[i], "row " + str(r.disc) + " field disc " + str(K->disc()));
        c.require(classify_ramification_pattern(K).shape == r.shape, "row " + str(r.disc) + " shape mismatch");
        auto L = adjoin_sqrt_minus(K).top;
        c.require(class_group(L, ClassMode::Unconditional).h == 1, "row " + str(r.disc) + " recomputed h != 1");
    }
}

void criterion_cyclotomic(Checker& c)
{
    auto r2 = cyclotomic_real_subfield(2);
    c.require(r2.degree == 3 && r2.two_inert, "n=2: 2 not inert");
    c.require(r2.three_totally_ramified && r2.three_residue_degree == 1, "n=2: 3 is not p^3 with f=1");
    c.require(r2.assumption && r2.assumption->verdict == Verdict::Satisfied, "n=2: assumption not satisfied");
    c.require(r2.assumption && r2.assumption->t && *r2.assumption->t == 1 && r2.assumption->t_certification == "unconditional",
              "n=2: t != 1 unconditionally");
    auto r3 = cyclotomic_real_subfield(3);
    c.require(r3.degree == 9 && r3.two_inert, "n=3: 2 not inert");
    c.require(r3.three_totally_ramified && r3.three_residue_degree == 1 && r3.stv_singleton, "n=3: 3 is not p^9");
    c.require(r3.parity_source == "by-cited-result", "n=3: parity source " + r3.parity_source);
    // Independent splitting check from the prime factorization.
    auto K3 = r3.field;
    auto s2 = factor_rational_prime(K3, 2);
    c.require(s2.factors.size() == 1 && s2.factors[0].f == 9, "n=3: factorization of 2");
    auto s3 = factor_rational_prime(K3, 3);
    c.require(s3.factors.size() == 1 && s3.factors[0].e == 9, "n=3: factorization of 3");
}

void criterion_prop2(Checker& c)
{
    for (long d : {7L, 13L, 19L, 31L, 37L}) {
        auto K = field("x^2-" + std::to_string(d));
        auto a = check_assumption(K);
        std::string tag = "d=" + std::to_string(d) + ": ";
        c.require(a.verdict == Verdict::Fails, tag + "verdict " + to_string(a.verdict));
        c.require(a.obstruction && a.obstruction->gamma >= 2 && a.obstruction->verdict == ObstructionVerdict::ForcesEvenClassNumber,
                  tag + "no even-class-number obstruction");
        auto L = adjoin_sqrt_minus(K).top;
        Int h = class_group(L, ClassMode::Unconditional).h;
        c.require(h % 2 == 0, tag + "computed h(K(sqrt-3)) = " + str(h) + " is odd");
    }
}

void criterion_identities(Checker& c)
{
    auto q = verify_quadratic_form_identity();
    c.require(q.holds && q.lhs == q.rhs, "quadratic-form identity");
    for (long p = 3; p <= 31; p += 2) {
        if (!is_prime(p)) continue;
        auto r = verify_P_identity(p);
        c.require(r.mod3_consequence, "P = p mod 3 fails for p=" + std::to_string(p));
        c.require(r.outcome != IdentityOutcome::FailsWithCounterexample, "P identity fails for p=" + std::to_string(p));
    }
    const std::vector<std::array<int, 3>> expected{{1, 1, 1}, {-1, -1, -1}};
    for (long p = 3; p <= 100; p += 2) {
        if (!is_prime(p)) continue;
        auto s = residue_sign_analysis(p);
        c.require(s.admissible_eps == expected && s.derived_congruence, "residue signs for p=" + std::to_string(p));
    }
}

void criterion_representations(Checker& c)
{
    auto Q = field("x-1");
    for (long q = 2; q <= 200; ++q) {
        if (!is_prime(q) || q % 3 == 0) continue;
        auto r = find_x2_3y2_representation(Q, IntVec{Int(q)}, 1);
        std::string tag = "q=" + std::to_string(q) + ": ";
        if (q % 3 == 1) {
            c.require(r.found && r.x.size() == 1 && r.y.size() == 1, tag + "no representation");
            if (r.found) c.require(r.x[0] * r.x[0] + 3 * r.y[0] * r.y[0] == q, tag + "representation does not evaluate to q");
        } else {
            c.require(!r.found && r.mod3_obstruction, tag + "not refused with a mod-3 certificate");
        }
    }
}

void criterion_steinberg(Checker& c)
{
    for (long f = 1; f <= 30; ++f) {
        auto s = steinberg_exclusion(f);
        Int q = ipow(Int(3), static_cast<unsigned long>(f));
        c.require(s.excluded && s.margin == (q - 1) * (q - 1), "f=" + std::to_string(f));
    }
    c.require(eigenvalue_prime_bound(parse_poly("x"), 1).primes == std::vector<Int>{2}, "eigenvalue 0: expected {2}");
    c.require(eigenvalue_prime_bound(parse_poly("x-2"), 1).primes == std::vector<Int>{2, 3}, "eigenvalue 2: expected {2,3}");
    c.require(eigenvalue_prime_bound(parse_poly("x^2-2"), 1).primes == std::vector<Int>{2, 7}, "eigenvalue sqrt2: expected {2,7}");
}

void criterion_search(Checker& c)
{
    struct Case {
        std::string poly;
        long height;
    };
    for (const Case& k : {Case{"x-1", 20}, Case{"x^3-3*x-1", 10}}) {
        auto K = field(k.poly);
        bool screened = check_assumption(K).verdict == Verdict::Satisfied;
        for (long p : {5L, 11L}) {
            auto r = exhaustive_fermat_search(K, p, k.height, screened);
            std::string tag = k.poly + " p=" + std::to_string(p) + ": ";
            Int side = 2 * k.height + 1;
            c.require(Int(r.box_size) == ipow(side, static_cast<unsigned long>(K->degree())), tag + "box size");
            c.require(r.nontrivial.empty(), tag + std::to_string(r.nontrivial.size()) + " nontrivial solutions");
            c.require(r.counterexamples == 0, tag + "counterexamples" + (screened ? " (screened)" : ""));
        }
    }
}

void criterion_frey_substitute(Checker& c)
{
    // 3^3 + 1^3 + (-theta)^3 = 0 with theta^3 = 28.
    auto K = field("x^3-28");
    auto a = parse_element(K, "3"), b = parse_element(K, "1"), cc = parse_element(K, "-x");
    auto r = frey_invariants(K, a, b, cc, 3);
    c.require(r.discriminant_matches_closed_form, "Delta != 16 (abc)^(2p)");
    c.require(!r.odd_valuations.empty(), "no odd primes in the discriminant");
    for (auto& v : r.odd_valuations)
        c.require(v.divisible_by_p && v.valuation % 3 == 0, "odd valuation " + std::to_string(v.valuation) + " above " + str(v.p_below));
    for (auto& d : r.conductor_exponent_bounds) c.require(d.upper == 2 + 6 * d.e, "dyadic conductor bound");
}

void criterion_cross_cutting(Checker& c)
{
    std::vector<std::string> corpus;
    for (auto& g : golden_table()) corpus.push_back(g.poly);
    for (long d : {7L, 13L, 19L, 31L, 37L}) corpus.push_back("x^2-" + std::to_string(d));
    corpus.push_back("x^2+3");
    corpus.push_back("x^3-28");
    corpus.push_back(to_string(cyclotomic_real_poly(2)));
    std::mt19937_64 rng(20261018);
    auto rand_elt = [&](int n) {
        IntVec v(n);
        for (auto& x : v) x = std::uniform_int_distribution<long>(-9, 9)(rng);
        return v;
    };
    for (auto& poly : corpus) {
        auto K = field(poly);
        int n = K->degree();
        std::string tag = poly + ": ";
        for (int i = 0; i < 20; ++i) {
            auto x = rand_elt(n), y = rand_elt(n);
            c.require(K->norm(K->mul(x, y)) == K->norm(x) * K->norm(y), tag + "norm not multiplicative");
        }
        for (long q = 2; q <= 50; ++q) {
            if (!is_prime(q)) continue;
            int sum = 0;
            for (auto& P : factor_rational_prime(K, q).factors) sum += P.e * P.f;
            c.require(sum == n, tag + "sum ef != n at q=" + std::to_string(q));
        }
        c.require(discriminant(K->poly()) == K->index() * K->index() * K->disc(), tag + "disc != index^2 disc_K");
        if (!K->totally_real()) continue;
        auto d = class_unit_data(K, ClassMode::Unconditional);
        std::vector<std::vector<int>> signs;
        std::vector<IntVec> gens{K->from_integer(-1)};
        for (auto& u : d.units.fundamental_units) gens.push_back(u);
        for (auto& u : gens) {
            std::vector<int> row;
            for (int s : K->real_signs(K->from_int(u))) row.push_back(s < 0 ? 1 : 0);
            signs.push_back(row);
        }
        int k = gf2_rank(signs);
        c.require(k == d.unit_index_2exp, tag + "sign rank mismatch");
        c.require(d.h_plus * ipow(Int(2), static_cast<unsigned long>(k)) == d.cg.h * ipow(Int(2), static_cast<unsigned long>(K->r())),
                  tag + "h+ 2^k != h 2^r");
        // Class numbers of K and K(sqrt -3) stable under a doubled factor base.
        ClassGroupOptions doubled;
        doubled.bound_scale = 2;
        c.require(class_group(K, ClassMode::Unconditional, doubled).h == d.cg.h, tag + "h(K) changes with 2x bound");
        auto L = adjoin_sqrt_minus(K).top;
        c.require(class_group(L, ClassMode::Unconditional, doubled).h == class_group(L, ClassMode::Unconditional).h,
                  tag + "h(K(sqrt-3)) changes with 2x bound");
    }
}

} // namespace

int main()
{
    run(1, "totally real cubics up to |disc| 2000 match the reference table", criterion_table);
    run(2, "Q(zeta_9)^+ and Q(zeta_27)^+ splitting and parity data", criterion_cyclotomic);
    run(3, "real quadratic fields Q(sqrt d), d in {7,13,19,31,37}: even class number forced and computed", criterion_prop2);
    run(4, "quadratic-form identity, P = p mod 3 for p <= 31, residue signs for p <= 100", criterion_identities);
    run(5, "x^2 + 3y^2 over Q for primes up to 200", criterion_representations);
    run(6, "Steinberg exclusion for f <= 30 and eigenvalue prime bounds", criterion_steinberg);
    run(7, "no nontrivial Fermat solutions over Q (H=20) and the disc 81 cubic (H=10), p in {5,11}", criterion_search);
    run(8,
        "NOT REPRODUCIBLE at desk scale: the constants C_K, A_K, B_K, D_K, F_K and all steps needing Hilbert modular forms, "
        "modularity, irreducibility or level lowering; substituted by the Frey invariants Delta = 16(abc)^(2p) and odd "
        "valuations divisible by p",
        criterion_frey_substitute, "PASS (substitute)");
    run(9, "norm multiplicativity, sum ef = n, disc = index^2 disc_K, h+ 2^k = h 2^r, h stable under 2x factor base",
        criterion_cross_cutting);
    std::cout << (g_failed ? "acceptance: FAIL (" + std::to_string(g_failed) + " criteria)" : std::string("acceptance: all criteria pass"))
              << std::endl;
    return g_failed ? 1 : 0;
}
