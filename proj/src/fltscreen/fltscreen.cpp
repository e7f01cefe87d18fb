#include "fltscreen/fltscreen.hpp"

#include "exactmath/factor_z.hpp"
#include "exactmath/parallel.hpp"
#include "exactmath/primes.hpp"
#include "numfield/kpoly.hpp"
#include "numfield/relquad.hpp"

#include <algorithm>
#include <map>

namespace flt {

namespace {

const char* kScope = "the conclusion covers exponents p = 2 (mod 3) with p > C_K; C_K is not computed here";

std::string prime_power(const std::string& name, int e) { return e == 1 ? name : name + "^" + std::to_string(e); }

ZPoly dickson(int k)
{
    // D_0 = 2, D_1 = y, D_{j+1} = y D_j - D_{j-1}
    ZPoly a = ZPoly::constant(Int(2)), b = ZPoly::x();
    if (k == 0) return a;
    for (int j = 1; j < k; ++j) {
        ZPoly c = ZPoly::x() * b - a;
        a = b;
        b = c;
    }
    return b;
}

} // namespace

std::string to_string(RamPattern p)
{
    switch (p) {
    case RamPattern::TotallyRamifiedOddDegree: return "totally_ramified_odd_degree";
    case RamPattern::MixedOddPlusEvenSquares: return "mixed_odd_plus_even_squares";
    default: return "fails";
    }
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Fails: return "fails";
    default: return "inconclusive";
    }
}

std::string to_string(ObstructionVerdict v)
{
    return v == ObstructionVerdict::ForcesEvenClassNumber ? "forces_even_class_number" : "inconclusive";
}

PatternResult classify_ramification_pattern(const FieldPtr& K)
{
    auto sd = factor_rational_prime(K, Int(3));
    PatternResult res;
    for (auto& P : sd.factors) res.ef.emplace_back(P.e, P.f);
    std::sort(res.ef.begin(), res.ef.end());
    if (res.ef.size() == 1) {
        res.shape = prime_power("p", res.ef[0].first);
    } else {
        for (size_t i = 0; i < res.ef.size(); ++i) {
            if (i) res.shape += " ";
            res.shape += prime_power("p" + std::to_string(i + 1), res.ef[i].first);
        }
    }
    int n = K->degree();
    int odd = 0;
    bool has_f1 = false;
    for (auto& [e, f] : res.ef) {
        if (e % 2 == 1) ++odd;
        if (f == 1) has_f1 = true;
    }
    if (res.ef.size() == 1 && res.ef[0].first == n && n % 2 == 1) {
        res.pattern = RamPattern::TotallyRamifiedOddDegree;
    } else if (odd == 1 && has_f1) {
        res.pattern = RamPattern::MixedOddPlusEvenSquares;
        res.not_galois_compatible = true;
    }
    return res;
}

ObstructionResult ambiguous_parity_obstruction(const FieldPtr& K, long p)
{
    if (p < 3 || !is_prime(Int(p))) throw DomainError("ambiguous_parity_obstruction: p must be an odd prime");
    if (!K->totally_real()) throw DomainError("ambiguous_parity_obstruction: field is not totally real, -p may be a square");
    auto rel = adjoin_sqrt_minus(K, p);
    auto ram = ramified_primes_in_quadratic_ext(rel);
    ObstructionResult res;
    res.p = p;
    res.gamma = ram.gamma;
    res.r = K->r();
    res.s = K->s();
    res.ambiguous_lower_bound_2exp = std::max(0, ram.gamma - 1);
    res.verdict = ram.gamma >= 2 ? ObstructionVerdict::ForcesEvenClassNumber : ObstructionVerdict::Inconclusive;
    for (auto& P : ram.ramified) res.ramified.push_back({P.p, {P.e, P.f}});
    return res;
}

AssumptionReport check_assumption(const FieldPtr& K, ClassMode requested)
{
    AssumptionReport R;
    R.field = K;
    R.theorem_scope = kScope;
    R.totally_real = K->totally_real();
    R.pattern = classify_ramification_pattern(K);
    auto sd = factor_rational_prime(K, Int(3));
    for (int i : sd.T) R.t3.emplace_back(sd.factors[i].e, sd.factors[i].f);
    for (int i : sd.V) R.v3.emplace_back(sd.factors[i].e, sd.factors[i].f);
    R.t3_nonempty = !R.t3.empty();
    R.v3_nonempty = !R.v3.empty();
    auto fail = [&](const std::string& why) {
        R.verdict = Verdict::Fails;
        R.reasons.push_back(why);
        return R;
    };
    auto inconclusive = [&](const std::string& why) {
        R.verdict = Verdict::Inconclusive;
        R.reasons.push_back(why);
        return R;
    };
    if (!R.totally_real) return fail("not totally real");
    if (!R.t3_nonempty) return fail("T_3 empty");
    if (!R.v3_nonempty) return fail("V_3 empty");

    R.obstruction = ambiguous_parity_obstruction(K, 3);
    if (R.obstruction->verdict == ObstructionVerdict::ForcesEvenClassNumber) {
        R.t_odd = false;
        R.t_certification = "parity obstruction";
        return fail("class number even");
    }
    try {
        auto rel = adjoin_sqrt_minus(K, 3);
        int n = rel.top->degree();
        ClassMode mode = n <= kMaxClassDegreeUnconditional ? requested : ClassMode::HeuristicGRH;
        auto cg = class_group(rel.top, mode);
        R.t = cg.h;
        R.t_odd = !divides(Int(2), cg.h);
        if (mode == ClassMode::HeuristicGRH) {
            R.t_certification = "heuristic-grh";
            return inconclusive(*R.t_odd ? "class number odd under GRH only" : "class number even under GRH only");
        }
        R.t_certification = "unconditional";
        if (!*R.t_odd) return fail("class number even");
    } catch (const CapError& e) {
        return inconclusive(std::string("computation cap: ") + e.what());
    } catch (const InconclusiveError& e) {
        return inconclusive(e.what());
    }
    // an odd class number leaves room for exactly one prime in V_3
    if (R.v3.size() != 1) throw VerificationError("check_assumption: odd class number with |V_3| != 1");
    R.verdict = Verdict::Satisfied;
    R.reasons.push_back("class number odd");
    return R;
}

ZPoly canonical_cubic(const std::vector<ZPoly>& polys)
{
    auto key = [](const ZPoly& f) {
        Int a = f[2], b = f[1], c = f[0];
        return std::make_tuple(Int(a * a - 2 * b), a, b, c);
    };
    return *std::min_element(polys.begin(), polys.end(), [&](const ZPoly& x, const ZPoly& y) { return key(x) < key(y); });
}

std::vector<CubicEntry> enumerate_totally_real_cubics(long X, unsigned threads)
{
    if (X > kMaxCubicDisc) throw CapError("computation cap: max_abs_disc " + std::to_string(X) + " exceeds " + std::to_string(kMaxCubicDisc));
    std::vector<ZPoly> cands;
    // A field of discriminant D has a generator with trace t in {0, 1} and
    // T2 <= t^2/3 + sqrt(4/3) sqrt(D/3) = t^2/3 + (2/3) sqrt(D) (cubic Hunter bound).
    Int sq = ceil_sqrt(Rat(X));
    for (long t = 0; t <= 1; ++t) {
        Rat U = Rat(t * t, 3) + Rat(2 * sq, 3);
        long a = -t;
        // sum of squares of roots = a^2 - 2b lies in [t^2/3, U]
        long bmin = to_long(floor(Rat(a * a - U) / 2)) - 1;
        long bmax = to_long(floor(Rat(a * a, 3)));
        // |c| = |product of roots| <= (U/3)^(3/2)
        Rat u3 = U / 3;
        long cmax = to_long(ceil_sqrt(Rat(u3 * u3 * u3))) + 1;
        for (long b = bmin; b <= bmax; ++b)
            for (long c = -cmax; c <= cmax; ++c) {
                if (c == 0) continue;
                ZPoly f{Int(c), Int(b), Int(a), Int(1)};
                if (discriminant(f) <= 0) continue;
                if (!is_irreducible_over_q(f)) continue;
                cands.push_back(f);
            }
    }
    std::vector<FieldPtr> fields(cands.size());
    parallel_for(cands.size(), threads, [&](size_t i) { fields[i] = build_field(cands[i]); });

    std::map<Int, std::vector<size_t>> by_disc;
    for (size_t i = 0; i < cands.size(); ++i)
        if (fields[i]->disc() <= X) by_disc[fields[i]->disc()].push_back(i);
    std::vector<CubicEntry> out;
    for (auto& [D, idx] : by_disc) {
        std::vector<std::vector<size_t>> classes;
        for (size_t i : idx) {
            bool placed = false;
            for (auto& cl : classes)
                if (fields_isomorphic(*fields[cl[0]], *fields[i])) {
                    cl.push_back(i);
                    placed = true;
                    break;
                }
            if (!placed) classes.push_back({i});
        }
        std::vector<CubicEntry> group;
        for (auto& cl : classes) {
            std::vector<ZPoly> polys;
            for (size_t i : cl) polys.push_back(cands[i]);
            ZPoly g = canonical_cubic(polys);
            for (size_t i : cl)
                if (cands[i] == g) group.push_back({fields[i], {}});
        }
        std::sort(group.begin(), group.end(), [](const CubicEntry& x, const CubicEntry& y) {
            return x.field->poly().coeffs() < y.field->poly().coeffs();
        });
        for (auto& e : group) out.push_back(std::move(e));
    }
    parallel_for(out.size(), threads, [&](size_t i) { out[i].report = check_assumption(out[i].field); });
    return out;
}

ZPoly cyclotomic_real_poly(int n)
{
    if (n < 1) throw DomainError("cyclotomic_real_poly: n must be positive");
    long k = 1;
    for (int i = 1; i < n; ++i) k *= 3;
    if (k > 729) throw CapError("computation cap: degree " + std::to_string(k) + " too large");
    // Phi_{3^n}(x) / x^k = D_k(x + 1/x) + 1; with k odd, D_k(-y) = -D_k(y)
    return dickson(static_cast<int>(k)) - ZPoly::constant(Int(1));
}

CyclotomicReport cyclotomic_real_subfield(int n)
{
    CyclotomicReport rep;
    rep.n = n;
    ZPoly f = cyclotomic_real_poly(n);
    rep.degree = f.degree();
    if (rep.degree > kMaxCyclotomicDegree)
        throw CapError("computation cap: degree " + std::to_string(rep.degree) + " exceeds " + std::to_string(kMaxCyclotomicDegree) +
                       " for splitting checks; checks run: defining polynomial");
    rep.field = build_field(f);
    auto s2 = factor_rational_prime(rep.field, Int(2));
    rep.two_inert = s2.factors.size() == 1 && s2.factors[0].e == 1 && s2.factors[0].f == rep.degree;
    auto s3 = factor_rational_prime(rep.field, Int(3));
    rep.three_totally_ramified = s3.factors.size() == 1 && s3.factors[0].e == rep.degree;
    rep.three_residue_degree = s3.factors.size() == 1 ? s3.factors[0].f : 0;
    rep.stv_singleton = s3.S.size() == 1 && s3.T.size() == 1 && s3.V.size() == 1;
    if (n <= 2) {
        rep.assumption = check_assumption(rep.field);
        rep.parity_source = "unconditional";
    } else {
        rep.parity_source = "by-cited-result";
    }
    return rep;
}

SUnitReport sunit_contrast_report(int n)
{
    if (n > 2) throw CapError("computation cap: sunit_contrast_report supports n <= 2");
    SUnitReport rep;
    rep.n = n;
    FieldPtr K = build_field(cyclotomic_real_poly(n));
    auto U = unit_group(K);
    int k = static_cast<int>(U.fundamental_units.size());
    auto P2 = factor_rational_prime(K, Int(2)).factors[0];
    std::vector<int> e(static_cast<size_t>(k), -5);
    auto advance = [&] {
        for (int i = 0; i < k; ++i) {
            if (++e[i] <= 5) return true;
            e[i] = -5;
        }
        return false;
    };
    do {
        RatVec base = K->from_int(K->one());
        for (int i = 0; i < k; ++i) base = K->mul(base, K->pow(K->from_int(U.fundamental_units[i]), e[i]));
        for (int sgn : {1, -1}) {
            RatVec lambda = base;
            if (sgn < 0)
                for (auto& c : lambda) c = -c;
            RatVec mu = K->from_int(K->one());
            for (size_t j = 0; j < mu.size(); ++j) mu[j] -= lambda[j];
            if (!NumberField::is_integral(lambda) || !NumberField::is_integral(mu)) continue;
            IntVec m = NumberField::to_int(mu);
            if (std::all_of(m.begin(), m.end(), [](const Int& c) { return c == 0; })) continue;
            if (abs(K->norm(m)) != 1) continue;
            rep.found = true;
            rep.lambda = NumberField::to_int(lambda);
            rep.mu = m;
            rep.exponents = {sgn < 0 ? 1 : 0};
            for (int x : e) rep.exponents.push_back(x);
            rep.valuation_at_two = valuation(P2, K->mul(rep.lambda, rep.mu));
            return rep;
        }
    } while (advance());
    return rep;
}

} // namespace flt
