#include "pomeyfrey/pomeyfrey.hpp"

#include "exactmath/lattice.hpp"
#include "exactmath/parallel.hpp"
#include "exactmath/primes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flt {

HomPoly HomPoly::monomial(int deg, int k, const Int& c)
{
    HomPoly h{deg, std::vector<Int>(static_cast<size_t>(deg) + 1)};
    h.coeffs[k] = c;
    return h;
}

HomPoly operator+(const HomPoly& a, const HomPoly& b)
{
    if (a.deg != b.deg) throw DomainError("HomPoly: degree mismatch");
    HomPoly r = a;
    for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
    return r;
}

HomPoly operator-(const HomPoly& a, const HomPoly& b) { return a + Int(-1) * b; }

HomPoly operator*(const HomPoly& a, const HomPoly& b)
{
    HomPoly r{a.deg + b.deg, std::vector<Int>(static_cast<size_t>(a.deg + b.deg) + 1)};
    for (int i = 0; i <= a.deg; ++i)
        for (int j = 0; j <= b.deg; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

HomPoly operator*(const Int& s, const HomPoly& a)
{
    HomPoly r = a;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

bool operator==(const HomPoly& a, const HomPoly& b) { return a.deg == b.deg && a.coeffs == b.coeffs; }

Int HomPoly::eval(const Int& u, const Int& v) const
{
    Int s = 0;
    for (int k = 0; k <= deg; ++k)
        s += coeffs[k] * ipow(u, static_cast<unsigned long>(deg - k)) * ipow(v, static_cast<unsigned long>(k));
    return s;
}

namespace {

void require_odd_prime(long p, const char* who)
{
    if (p < 3 || !is_prime(Int(p))) throw DomainError(std::string(who) + ": p must be an odd prime");
}

// Exact quotient by (u - v), or nothing when (u - v) does not divide h.
std::optional<HomPoly> divide_by_u_minus_v(const HomPoly& h)
{
    if (h.deg < 1) return std::nullopt;
    HomPoly q{h.deg - 1, std::vector<Int>(static_cast<size_t>(h.deg))};
    q.coeffs[0] = h.coeffs[0];
    for (int k = 1; k < h.deg; ++k) q.coeffs[k] = h.coeffs[k] + q.coeffs[k - 1];
    if (h.coeffs[h.deg] + q.coeffs[h.deg - 1] != 0) return std::nullopt;
    return q;
}

HomPoly u_minus_v_squared()
{
    HomPoly d = HomPoly::monomial(1, 0) - HomPoly::monomial(1, 1);
    return d * d;
}

bool is_zero_vec(const IntVec& x)
{
    return std::all_of(x.begin(), x.end(), [](const Int& a) { return a == 0; });
}

IntVec add(const IntVec& a, const IntVec& b)
{
    IntVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b)
{
    IntVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

IntVec scale(const Int& s, const IntVec& a)
{
    IntVec r = a;
    for (auto& x : r) x *= s;
    return r;
}

void normalize_sign(IntVec& x)
{
    for (auto& c : x)
        if (c != 0) {
            if (c < 0)
                for (auto& y : x) y = -y;
            return;
        }
}

} // namespace

ResidueSignProfile residue_sign_analysis(long p)
{
    require_odd_prime(p, "residue_sign_analysis");
    ResidueSignProfile R;
    R.p = p;
    auto up = static_cast<unsigned long>(p);
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1}) {
                Int s = ipow(Int(a), up) + ipow(Int(b), up) + ipow(Int(c), up);
                if (divides(Int(3), s)) R.admissible_eps.push_back({a, b, c});
            }
    std::sort(R.admissible_eps.begin(), R.admissible_eps.end(), std::greater<>());
    R.derived_congruence = !R.admissible_eps.empty();
    for (auto& e : R.admissible_eps)
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            // x = e + 3 lambda, so residues mod 3 are those of the signs
            if (mod(Int(e[i] * e[i]), Int(3)) != 1 || mod(Int(e[j] * e[k]), Int(3)) != 1) R.derived_congruence = false;
        }
    return R;
}

std::string to_string(IdentityOutcome o)
{
    switch (o) {
    case IdentityOutcome::Holds: return "holds";
    case IdentityOutcome::HoldsWithAdjustedRange: return "holds_with_adjusted_range";
    default: return "fails_with_counterexample";
    }
}

PIdentityResult verify_P_identity(long p)
{
    require_odd_prime(p, "verify_P_identity");
    if (p > kMaxPIdentityExponent)
        throw CapError("computation cap: P identity exponent " + std::to_string(p) + " exceeds " +
                       std::to_string(kMaxPIdentityExponent));
    int n = static_cast<int>(p);
    PIdentityResult R;
    R.p = p;
    HomPoly P{n - 1, std::vector<Int>(static_cast<size_t>(n), Int(1))};
    HomPoly lead = Int(p) * HomPoly::monomial(n - 1, (n - 1) / 2);
    HomPoly rest = P - lead;
    auto q1 = divide_by_u_minus_v(rest);
    auto m = q1 ? divide_by_u_minus_v(*q1) : std::nullopt;
    if (!m) return R;
    // independent re-multiplication
    if (!(lead + *m * u_minus_v_squared() == P)) throw VerificationError("verify_P_identity: quotient does not reproduce P");
    R.range_lo = 0;
    R.range_hi = n - 3;
    R.coefficients = m->coeffs;

    R.displayed_coefficients_match = true;
    int half = (n - 3) / 2;
    for (int r = 0; r <= n - 3; ++r) {
        Int want = 0;
        if (r <= half) want = r + 1;
        else if (n - 2 - r >= 0 && n - 2 - r <= half) want = -(n - 2 - r + 1);
        if (want != R.coefficients[r]) {
            R.displayed_coefficients_match = false;
            if (!R.first_mismatch) R.first_mismatch = r;
        }
    }
    R.outcome = R.displayed_coefficients_match ? IdentityOutcome::Holds : IdentityOutcome::HoldsWithAdjustedRange;

    R.mod3_consequence = true;
    HomPoly rhs = lead + *m * u_minus_v_squared();
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            Int u = 1 + 3 * a, v = 1 + 3 * b;
            if (mod(P.eval(u, v), Int(3)) != mod(Int(p), Int(3)) || mod(rhs.eval(u, v), Int(3)) != mod(Int(p), Int(3)))
                R.mod3_consequence = false;
        }
    return R;
}

QuadraticFormIdentity verify_quadratic_form_identity()
{
    HomPoly s = HomPoly::monomial(1, 0), t = HomPoly::monomial(1, 1);
    HomPoly sum = s + t, diff = s - t;
    QuadraticFormIdentity Q;
    Q.lhs = Int(4) * (sum * sum - s * t);
    Q.rhs = Int(3) * (sum * sum) + diff * diff;
    Q.holds = Q.lhs == Q.rhs;
    return Q;
}

QuadraticFormSpotCheck quadratic_form_spot_check(const Int& s, const Int& t)
{
    QuadraticFormSpotCheck c;
    c.s = s;
    c.t = t;
    Int xi_p = -(s + t);
    c.lhs = 4 * (xi_p * xi_p - s * t);
    c.rhs = 3 * (s + t) * (s + t) + (s - t) * (s - t);
    c.holds = c.lhs == c.rhs;
    return c;
}

QuadraticFormSpotCheck quadratic_form_spot_check(long p, const Int& xj, const Int& xk)
{
    require_odd_prime(p, "quadratic_form_spot_check");
    auto up = static_cast<unsigned long>(p);
    return quadratic_form_spot_check(ipow(xj, up), ipow(xk, up));
}

RepresentationResult find_x2_3y2_representation(const FieldPtr& K, const IntVec& d, int t, size_t max_points)
{
    if (!K->totally_real()) throw DomainError("find_x2_3y2_representation: field is not totally real");
    if (t < 1) throw DomainError("find_x2_3y2_representation: t must be positive");
    if (static_cast<int>(d.size()) != K->degree() || is_zero_vec(d) || !K->is_totally_positive(K->from_int(d)))
        throw DomainError("find_x2_3y2_representation: d is not totally positive");
    int n = K->degree();
    RepresentationResult R;
    R.field = K;
    R.d = d;
    R.t = t;
    IntVec D = K->pow(d, static_cast<unsigned long>(t));
    RatVec Dinv = K->inverse(K->from_int(D));

    // Tr(x^2 / D) <= n holds for every solution since each sigma(x)^2 <= sigma(D).
    RatMatrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = K->trace(K->mul(K->from_int(K->table(i, j)), Dinv));
    RatMatrix G3 = G;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G3(i, j) *= 3;
    R.search_radius_used = n;

    IntVec zero(static_cast<size_t>(n));
    auto xs = ShortVectorEnumerator(G).enumerate(R.search_radius_used, max_points);
    auto ys = ShortVectorEnumerator(G3).enumerate(R.search_radius_used, max_points);
    xs.push_back(zero);
    ys.push_back(zero);

    std::map<IntVec, IntVec> three_y2;
    for (auto& y : ys) three_y2.emplace(scale(3, K->mul(y, y)), y);

    std::vector<std::pair<IntVec, IntVec>> sols;
    for (auto& x : xs) {
        auto it = three_y2.find(sub(D, K->mul(x, x)));
        if (it == three_y2.end()) continue;
        IntVec a = x, b = it->second;
        normalize_sign(a);
        normalize_sign(b);
        if (add(K->mul(a, a), scale(3, K->mul(b, b))) != D)
            throw VerificationError("find_x2_3y2_representation: exact check failed");
        sols.emplace_back(a, b);
    }
    R.solutions = sols.size();
    if (!sols.empty()) {
        auto best = std::min_element(sols.begin(), sols.end(), [&](const auto& u, const auto& v) {
            Rat qu = quad_form(G, u.first), qv = quad_form(G, v.first);
            if (qu != qv) return qu < qv;
            return u < v;
        });
        R.found = true;
        R.x = best->first;
        R.y = best->second;
    }

    // d^t = x^2 mod any prime above 3; a non-residue there rules out every x.
    auto sd = factor_rational_prime(K, Int(3));
    for (auto& P : sd.factors) {
        if (P.f != 1) continue;
        if (P.ideal.contains(sub(D, K->from_integer(Int(2))))) R.mod3_obstruction = true;
    }
    if (R.mod3_obstruction && R.found)
        throw VerificationError("find_x2_3y2_representation: representation found despite a mod 3 obstruction");
    return R;
}

std::string to_string(ContradictionVerdict v)
{
    return v == ContradictionVerdict::ContradictionHolds ? "contradiction_holds" : "no_obstruction";
}

ContradictionVerdict pomey_contradiction_check(long p, long t)
{
    if (p < 2 || !is_prime(Int(p))) throw DomainError("pomey_contradiction_check: p must be prime");
    if (t < 1) throw DomainError("pomey_contradiction_check: t must be positive");
    Int r;
    mpz_powm_ui(r.get_mpz_t(), Int(p).get_mpz_t(), static_cast<unsigned long>(t), Int(3).get_mpz_t());
    // squares mod 3 are 0 and 1
    return r == 2 ? ContradictionVerdict::ContradictionHolds : ContradictionVerdict::NoObstruction;
}

FermatSearchReport exhaustive_fermat_search(const FieldPtr& K, long p, long height, bool screened, unsigned threads)
{
    require_odd_prime(p, "exhaustive_fermat_search");
    if (height < 1) throw DomainError("exhaustive_fermat_search: height must be positive");
    int n = K->degree();
    size_t side = static_cast<size_t>(2 * height + 1);
    size_t N = 1;
    for (int i = 0; i < n; ++i) {
        if (N > kMaxFermatPairs / side) throw CapError("computation cap: Fermat search box too large");
        N *= side;
    }
    if (N > 1 && (N + 1) / 2 > kMaxFermatPairs / N)
        throw CapError("computation cap: Fermat search needs " + std::to_string(N) + "^2/2 pairs, cap " +
                       std::to_string(kMaxFermatPairs));

    FermatSearchReport R;
    R.field = K;
    R.p = p;
    R.height = height;
    R.screened = screened;
    R.box_size = N;

    std::vector<IntVec> box(N, IntVec(static_cast<size_t>(n)));
    for (size_t i = 0; i < N; ++i) {
        size_t k = i;
        for (int j = 0; j < n; ++j) {
            box[i][j] = static_cast<long>(k % side) - height;
            k /= side;
        }
    }
    std::vector<IntVec> pw(N);
    parallel_for(N, threads, [&](size_t i) { pw[i] = K->pow(box[i], static_cast<unsigned long>(p)); });
    std::map<IntVec, std::vector<size_t>> by_power;
    for (size_t i = 0; i < N; ++i) by_power[pw[i]].push_back(i);

    struct Slot {
        size_t trivial = 0;
        std::vector<FermatSolution> sols;
    };
    std::vector<Slot> slots(N);
    bool three_matters = screened && p % 3 == 2;
    parallel_for(N, threads, [&](size_t i) {
        Slot& s = slots[i];
        for (size_t j = i; j < N; ++j) {
            IntVec target = scale(-1, add(pw[i], pw[j]));
            auto it = by_power.find(target);
            if (it == by_power.end()) continue;
            for (size_t k : it->second) {
                if (k < j) continue;
                const IntVec &x = box[i], &y = box[j], &z = box[k];
                if (is_zero_vec(x) || is_zero_vec(y) || is_zero_vec(z)) {
                    ++s.trivial;
                    continue;
                }
                FermatSolution f{x, y, z};
                IntVec prod = K->mul(K->mul(x, y), z);
                f.three_divides_xyz = std::all_of(prod.begin(), prod.end(), [](const Int& c) { return divides(Int(3), c); });
                f.primitive = Ideal::from_generators(K, {x, y, z}).is_unit();
                f.counterexample = three_matters && !f.three_divides_xyz;
                s.sols.push_back(std::move(f));
            }
        }
    });
    for (auto& s : slots) {
        R.trivial_solutions += s.trivial;
        for (auto& f : s.sols) {
            if (f.counterexample) ++R.counterexamples;
            R.nontrivial.push_back(std::move(f));
        }
    }
    return R;
}

FreyReport frey_invariants(const FieldPtr& K, const IntVec& a, const IntVec& b, const std::optional<IntVec>& c, long p)
{
    require_odd_prime(p, "frey_invariants");
    auto n = static_cast<size_t>(K->degree());
    if (a.size() != n || b.size() != n || (c && c->size() != n))
        throw DomainError("frey_invariants: element size does not match the field degree");
    if (is_zero_vec(a) || is_zero_vec(b) || (c && is_zero_vec(*c))) throw DomainError("frey_invariants: abc = 0");
    auto up = static_cast<unsigned long>(p);
    FreyReport R;
    R.field = K;
    R.p = p;
    R.a = a;
    R.b = b;
    R.A = K->pow(a, up);
    R.B = K->pow(b, up);
    IntVec S = add(R.A, R.B);
    if (is_zero_vec(S)) throw DomainError("frey_invariants: abc = 0 (a^p + b^p = 0)");
    if (c) {
        if (!is_zero_vec(add(S, K->pow(*c, up)))) throw DomainError("frey_invariants: a^p + b^p + c^p != 0");
        R.c = *c;
        R.c_given = true;
    }
    IntVec core = K->mul(K->mul(R.A, R.B), S);
    R.discriminant = scale(16, K->mul(core, core));
    if (R.c_given) {
        IntVec abc = K->mul(K->mul(a, b), *c);
        R.discriminant_matches_closed_form = scale(16, K->pow(abc, 2 * up)) == R.discriminant;
    }
    for (auto& [P, e] : factor_ideal(Ideal::principal(K, core))) {
        if (P.p == 2) continue;
        OddPrimeValuation v;
        v.norm = P.ideal.norm();
        v.p_below = P.p;
        v.e = P.e;
        v.f = P.f;
        v.valuation = valuation(P, R.discriminant);
        v.divisible_by_p = v.valuation % p == 0;
        R.odd_valuations.push_back(v);
    }
    for (auto& P : factor_rational_prime(K, Int(2)).factors) R.conductor_exponent_bounds.push_back({P.e, P.f, 2 + 6 * P.e});
    return R;
}

SteinbergResult steinberg_exclusion(long f)
{
    if (f < 1) throw DomainError("steinberg_exclusion: f must be positive");
    SteinbergResult R;
    R.f = f;
    Int q = ipow(Int(3), static_cast<unsigned long>(f));
    R.lhs = (q + 1) * (q + 1);
    R.rhs = 4 * q;
    R.margin = R.lhs - R.rhs;
    R.excluded = R.lhs > R.rhs;
    return R;
}

EigenvaluePrimeBound eigenvalue_prime_bound(const ZPoly& minpoly, long f)
{
    if (f < 1) throw DomainError("eigenvalue_prime_bound: f must be positive");
    if (minpoly.degree() < 1 || !minpoly.is_monic()) throw DomainError("eigenvalue_prime_bound: polynomial must be monic of positive degree");
    EigenvaluePrimeBound R;
    R.f = f;
    Int q = ipow(Int(3), static_cast<unsigned long>(f));
    Int c = q + 1;
    int sgn = minpoly.degree() % 2 == 0 ? 1 : -1;
    // N(a - c) = (-1)^n m(c), N(a + c) = (-1)^n m(-c)
    R.norm_minus = sgn * minpoly.eval(c);
    R.norm_plus = sgn * minpoly.eval(Int(-c));
    if (R.norm_minus == 0 || R.norm_plus == 0) throw DomainError("Hasse bound violated");
    std::set<Int> ps;
    for (auto& x : prime_divisors(Int(abs(R.norm_minus * R.norm_plus)))) ps.insert(x);
    R.primes.assign(ps.begin(), ps.end());

    auto roots = isolate_real_roots(minpoly);
    if (static_cast<int>(roots.size()) < minpoly.degree())
        R.warnings.push_back("non-real conjugate: Hecke eigenvalues are totally real");
    // compare alpha^2 with the square of the Hasse bound 2 * 3^(f/2)
    QPoly g{Rat(-4 * q), Rat(0), Rat(1)};
    bool outside = false;
    for (auto iv : roots) {
        try {
            if (sign_at_root(minpoly, iv, g) > 0) outside = true;
        } catch (const DomainError&) {
            // alpha^2 = 4 * 3^f lies on the boundary
        }
    }
    if (outside)
        R.warnings.push_back("conjugate outside |x| <= 2*3^(f/2); the same bound applies to all the Galois conjugates");
    return R;
}

} // namespace flt
