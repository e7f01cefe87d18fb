#include "classunit/classunit.hpp"
#include "classunit/power_residue.hpp"

#include "exactmath/lattice.hpp"
#include "exactmath/primes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace flt {

namespace {

using LD = long double;

constexpr long kRankPrime = 2147483647L;

struct FactorBase {
    std::vector<PrimeIdeal> primes;
    // rational prime -> indices of factor-base primes above it
    std::map<Int, std::vector<int>> by_q;
    // rational primes up to the bound
    std::vector<Int> small_primes;
};

FactorBase make_factor_base(const FieldPtr& K, const Rat& bound)
{
    FactorBase fb;
    Int B = floor(bound);
    for (long q : primes_up_to(to_long(B))) {
        fb.small_primes.push_back(Int(q));
        auto sd = factor_rational_prime(K, Int(q));
        for (auto& P : sd.factors)
            if (Rat(P.ideal.norm()) <= bound) fb.primes.push_back(P);
    }
    std::stable_sort(fb.primes.begin(), fb.primes.end(),
                     [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.ideal.norm() < b.ideal.norm(); });
    for (size_t i = 0; i < fb.primes.size(); ++i) fb.by_q[fb.primes[i].p].push_back(static_cast<int>(i));
    return fb;
}

// Exponent vector of (x) over the factor base, when (x) is smooth.
std::optional<IntVec> smooth_vector(const NumberField& K, const FactorBase& fb, const IntVec& x)
{
    Int N = abs(K.norm(x));
    if (N == 0) return std::nullopt;
    IntVec vec(fb.primes.size());
    for (auto& [q, idx] : fb.by_q) {
        if (!divides(q, N)) continue;
        int e = 0;
        while (divides(q, N)) {
            N /= q;
            ++e;
        }
        int sum = 0;
        for (int i : idx) {
            int v = valuation(fb.primes[i], x);
            vec[i] = v;
            sum += v * fb.primes[i].f;
        }
        if (sum != e) return std::nullopt;
    }
    if (N != 1) return std::nullopt;
    return vec;
}

IntVec ideal_vector(const FactorBase& fb, const Ideal& I)
{
    IntVec v(fb.primes.size());
    for (size_t i = 0; i < fb.primes.size(); ++i) v[i] = valuation(fb.primes[i], I);
    return v;
}

Int vector_norm(const FactorBase& fb, const IntVec& v)
{
    Int N = 1;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) N *= ipow(fb.primes[i].ideal.norm(), to_long(v[i]));
    return N;
}

// Element coordinates of the LLL-reduced basis of an ideal lattice.
std::vector<IntVec> reduced_basis(const Ideal& I)
{
    IntMatrix T = lll_gram(ideal_gram(I));
    IntMatrix B = T * I.hnf();
    std::vector<IntVec> out;
    for (int i = 0; i < B.rows(); ++i) out.push_back(B.row(i));
    return out;
}

IntVec combo(const std::vector<IntVec>& basis, const std::vector<long>& c)
{
    IntVec x(basis[0].size());
    for (size_t i = 0; i < basis.size(); ++i)
        if (c[i] != 0)
            for (size_t j = 0; j < x.size(); ++j) x[j] += c[i] * basis[i][j];
    return x;
}

bool all_zero(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
}

class RelationLattice {
  public:
    explicit RelationLattice(size_t m) : m_(m), pivots_(m) {}

    // v is the exponent vector of the principal ideal (elt).
    bool add(const IntVec& v, const IntVec& elt)
    {
        if (all_zero(v) || !seen_.insert(v).second) return false;
        rels_.push_back(v);
        elts_.push_back(elt);
        if (acc_) {
            acc_->add(v);
        } else {
            track_rank(v);
            if (independent_.size() == m_) start_modular();
        }
        return true;
    }

    bool full_rank() const { return acc_.has_value() || m_ == 0; }
    size_t count() const { return rels_.size(); }
    const std::vector<IntVec>& relations() const { return rels_; }
    const std::vector<IntVec>& elements() const { return elts_; }

    IntMatrix hnf() const
    {
        if (m_ == 0) return IntMatrix(0, 0);
        return acc_->basis();
    }

  private:
    void track_rank(const IntVec& v0)
    {
        Int p(kRankPrime);
        IntVec v = v0;
        for (auto& x : v) x = mod(x, p);
        for (size_t c = 0; c < m_; ++c) {
            if (v[c] == 0) continue;
            if (!pivots_[c].empty()) {
                Int f = v[c];
                for (size_t j = c; j < m_; ++j) v[j] = mod(v[j] - f * pivots_[c][j], p);
                continue;
            }
            Int inv;
            mpz_invert(inv.get_mpz_t(), v[c].get_mpz_t(), p.get_mpz_t());
            for (size_t j = c; j < m_; ++j) v[j] = mod(v[j] * inv, p);
            pivots_[c] = v;
            independent_.push_back(v0);
            return;
        }
    }

    void start_modular()
    {
        IntMatrix A(static_cast<int>(m_), static_cast<int>(m_));
        for (size_t i = 0; i < m_; ++i) A.set_row(static_cast<int>(i), independent_[i]);
        Int D = abs(det(A));
        if (D == 0) throw VerificationError("relation lattice: independent set is singular");
        acc_.emplace(static_cast<int>(m_), D);
        for (auto& r : rels_) acc_->add(r);
    }

    size_t m_;
    std::vector<IntVec> pivots_;
    std::vector<IntVec> independent_;
    std::vector<IntVec> rels_;
    std::vector<IntVec> elts_;
    std::set<IntVec> seen_;
    std::optional<HnfModAccumulator> acc_;
};

void fill_structure(ClassGroupData& cg, const IntMatrix& H)
{
    cg.relation_hnf = H;
    int m = H.rows();
    cg.essential.clear();
    for (int i = 0; i < m; ++i)
        if (H(i, i) > 1) cg.essential.push_back(i);
    int e = static_cast<int>(cg.essential.size());
    cg.h = 1;
    cg.invariants.clear();
    cg.snf_diag.clear();
    if (e == 0) {
        cg.snf_V = IntMatrix(0, 0);
        return;
    }
    IntMatrix S(e, e);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) S(i, j) = H(cg.essential[i], cg.essential[j]);
    auto res = snf(S);
    cg.snf_V = res.V;
    for (auto& d : res.diag) {
        Int a = abs(d);
        cg.snf_diag.push_back(a);
        cg.h *= a;
        if (a > 1) cg.invariants.push_back(a);
    }
}

IntVec reduce_by_hnf(const IntMatrix& H, IntVec x)
{
    int m = H.rows();
    for (int i = 0; i < m; ++i) {
        Int q = floor_div(x[i], H(i, i));
        if (q != 0)
            for (int j = i; j < m; ++j) x[j] -= q * H(i, j);
    }
    return x;
}

enum class TorsionCheck { Certified, NewRelation, Unresolved };

// Certifies that no nonzero l-torsion class of the candidate group is
// principal. For c with sum c_k r_k = l y, the ideal J_y satisfies
// J_y^l = (gamma_c), gamma_c = prod beta_k^c_k, and J_y is principal iff
// gamma_c u is an l-th power for some unit u. l-th power residue symbols at
// degree-one primes separate gamma_c from the units whenever the class of y
// is nonzero; a surviving combination is tested for an actual l-th root.
TorsionCheck certify_l_torsion(const ClassGroupData& cg, const FactorBase& fb, RelationLattice& rl, const UnitGroupData& U, long l)
{
    const NumberField& K = *cg.field;
    const auto& R = rl.relations();
    const auto& B = rl.elements();
    size_t nrel = R.size(), m = fb.primes.size();
    IntMatrix Rm(static_cast<int>(nrel), static_cast<int>(m));
    for (size_t k = 0; k < nrel; ++k)
        for (size_t j = 0; j < m; ++j) Rm(static_cast<int>(k), static_cast<int>(j)) = mod(R[k][j], Int(l));
    auto C = left_kernel_mod_p(Rm, Int(l));
    auto y_of = [&](const IntVec& c) {
        IntVec y(m);
        for (size_t k = 0; k < nrel; ++k)
            if (c[k] != 0)
                for (size_t j = 0; j < m; ++j) y[j] += c[k] * R[k][j];
        for (auto& v : y) v /= l;
        return y;
    };
    std::vector<IntVec> Y;
    for (auto& c : C) Y.push_back(y_of(c));

    std::vector<IntVec> ugens{U.torsion_generator};
    for (auto& u : U.fundamental_units) ugens.push_back(u);
    std::set<Int> bad;
    for (auto& b : B)
        for (auto& [q, e] : factor_integer(abs(K.norm(b)))) bad.insert(q);
    auto skip = [&](const Int& q) { return bad.count(q) > 0; };

    int want = static_cast<int>(ugens.size()) + 16 + 2 * static_cast<int>(cg.invariants.size());
    IntVec witness_a, witness_b;
    for (int attempt = 0; attempt < 3; ++attempt, want *= 2) {
        auto primes = detail::degree_one_primes(K, l, want, skip);
        IntMatrix X = detail::power_characters(K, B, primes, l);
        IntMatrix Uc = detail::power_characters(K, ugens, primes, l);
        int P = static_cast<int>(primes.size());
        int dc = static_cast<int>(C.size()), du = static_cast<int>(ugens.size());
        IntMatrix M(dc + du, P);
        for (int i = 0; i < dc; ++i)
            for (size_t k = 0; k < nrel; ++k)
                if (C[i][k] != 0)
                    for (int c = 0; c < P; ++c) M(i, c) += C[i][k] * X(static_cast<int>(k), c);
        for (int i = 0; i < du; ++i)
            for (int c = 0; c < P; ++c) M(dc + i, c) = Uc(i, c);
        bool ok = true;
        for (auto& v : left_kernel_mod_p(M, Int(l))) {
            IntVec y(m);
            for (int i = 0; i < dc; ++i)
                if (v[i] != 0)
                    for (size_t j = 0; j < m; ++j) y[j] += v[i] * Y[i][j];
            if (!class_is_trivial(cg, y)) {
                ok = false;
                witness_a.assign(v.begin(), v.begin() + dc);
                witness_b.assign(v.begin() + dc, v.end());
                break;
            }
        }
        if (ok) return TorsionCheck::Certified;
    }
    // the surviving class is probably principal: look for the l-th root
    IntVec c(nrel);
    for (size_t i = 0; i < C.size(); ++i)
        if (witness_a[i] != 0)
            for (size_t k = 0; k < nrel; ++k) c[k] += witness_a[i] * C[i][k];
    for (auto& x : c) x = mod(x, Int(l));
    IntVec y = y_of(c);
    IntVec gamma = K.one();
    for (size_t k = 0; k < nrel; ++k)
        if (c[k] != 0) gamma = K.mul(gamma, K.pow(B[k], to_long(c[k])));
    for (size_t i = 0; i < ugens.size(); ++i)
        if (witness_b[i] != 0) gamma = K.mul(gamma, K.pow(ugens[i], to_long(witness_b[i])));
    if (auto alpha = integral_root(K, gamma, static_cast<int>(l))) {
        auto v = smooth_vector(K, fb, *alpha);
        if (!v || *v != y) throw VerificationError("class group: l-th root does not generate the expected ideal");
        rl.add(y, *alpha);
        return TorsionCheck::NewRelation;
    }
    return TorsionCheck::Unresolved;
}

TorsionCheck certify_kernel(const ClassGroupData& cg, const FactorBase& fb, RelationLattice& rl, const UnitGroupData& U)
{
    for (auto& [q, e] : factor_integer(cg.h)) {
        auto r = certify_l_torsion(cg, fb, rl, U, to_long(q));
        if (r != TorsionCheck::Certified) return r;
    }
    return TorsionCheck::Certified;
}

ClassGroupData class_group_impl(const FieldPtr& K, ClassMode mode, const ClassGroupOptions& opt, const UnitGroupData* units_in)
{
    int n = K->degree();
    int cap = mode == ClassMode::Unconditional ? kMaxClassDegreeUnconditional : kMaxClassDegreeGrh;
    if (n > cap)
        throw CapError("computation cap: degree " + std::to_string(n) + " exceeds the " + to_string(mode) + " class group limit " + std::to_string(cap));
    ClassGroupData cg;
    cg.field = K;
    cg.mode = mode;
    cg.fb_bound = (mode == ClassMode::Unconditional ? minkowski_bound(*K) : grh_bound(*K)) * opt.bound_scale;
    if (cg.fb_bound > 200000) throw CapError("computation cap: factor base bound " + floor(cg.fb_bound).get_str() + " exceeds 200000");
    FactorBase fb = make_factor_base(K, cg.fb_bound);
    cg.factor_base = fb.primes;
    size_t m = fb.primes.size();
    if (m == 0) {
        cg.relation_hnf = IntMatrix(0, 0);
        return cg;
    }
    RelationLattice rl(m);
    // (q) = prod P^e whenever every prime above q is in the factor base
    for (auto& q : fb.small_primes) {
        auto it = fb.by_q.find(q);
        if (it == fb.by_q.end()) continue;
        int sum = 0;
        IntVec v(m);
        for (int i : it->second) {
            v[i] = fb.primes[i].e;
            sum += fb.primes[i].e * fb.primes[i].f;
        }
        if (sum == n) rl.add(v, K->from_integer(q));
    }
    std::vector<std::vector<IntVec>> pbases;
    for (auto& P : fb.primes) pbases.push_back(reduced_basis(P.ideal));
    std::vector<IntVec> obasis = reduced_basis(Ideal::unit(K));
    std::mt19937_64 rng(0x5eed);
    auto coeffs = [&](long range) {
        std::vector<long> c(static_cast<size_t>(n));
        for (auto& x : c) x = std::uniform_int_distribution<long>(-range, range)(rng);
        return c;
    };
    auto harvest = [&](int round) {
        long range = 1 + round / 3;
        for (int t = 0; t < 20 + 10 * round; ++t) {
            IntVec x = combo(obasis, coeffs(range + 1));
            if (auto v = smooth_vector(*K, fb, x)) rl.add(*v, x);
        }
        for (size_t i = 0; i < m; ++i) {
            if (round == 0)
                for (auto& b : pbases[i])
                    if (auto v = smooth_vector(*K, fb, b)) rl.add(*v, b);
            for (int t = 0; t < 3 + round; ++t) {
                IntVec x = combo(pbases[i], coeffs(range));
                if (all_zero(x)) continue;
                if (auto v = smooth_vector(*K, fb, x)) rl.add(*v, x);
            }
        }
        if (round >= 2) {
            // mixed products of two factor-base primes
            for (int t = 0; t < static_cast<int>(m); ++t) {
                size_t a = std::uniform_int_distribution<size_t>(0, m - 1)(rng);
                size_t b = std::uniform_int_distribution<size_t>(0, m - 1)(rng);
                Ideal I = fb.primes[a].ideal * fb.primes[b].ideal;
                auto basis = reduced_basis(I);
                IntVec x = combo(basis, coeffs(1));
                if (all_zero(x)) continue;
                if (auto v = smooth_vector(*K, fb, x)) rl.add(*v, x);
            }
        }
    };
    std::optional<UnitGroupData> units;
    if (units_in) units = *units_in;
    bool certified = false;
    int stable_rounds = 0;
    Int last_h = -1;
    for (int round = 0; round < opt.max_rounds; ++round) {
        harvest(round);
        cg.rounds = round + 1;
        if (!rl.full_rank()) continue;
        fill_structure(cg, rl.hnf());
        if (!certified) {
            if (cg.h == 1) {
                certified = true;
            } else {
                if (!units) units = unit_group(K);
                while (true) {
                    auto st = certify_kernel(cg, fb, rl, *units);
                    if (st == TorsionCheck::Unresolved) break;
                    if (st == TorsionCheck::Certified) {
                        certified = true;
                        break;
                    }
                    fill_structure(cg, rl.hnf());
                    if (cg.h == 1) {
                        certified = true;
                        break;
                    }
                }
                if (!certified) continue;
            }
            last_h = cg.h;
            continue;
        }
        // two further enlargements must leave the group unchanged
        if (cg.h != last_h) throw VerificationError("class group changed after certification");
        if (++stable_rounds >= 2) break;
    }
    if (!certified || stable_rounds < 2)
        throw InconclusiveError("class_group: relation search stalled after " + std::to_string(opt.max_rounds) + " rounds with " +
                                std::to_string(m) + " factor-base primes");
    cg.relation_count = rl.count();
    return cg;
}

} // namespace

ClassGroupData class_group(const FieldPtr& K, ClassMode mode, const ClassGroupOptions& opt)
{
    return class_group_impl(K, mode, opt, nullptr);
}

IntVec class_vector(const ClassGroupData& cg, const Ideal& I)
{
    FactorBase fb;
    fb.primes = cg.factor_base;
    for (size_t i = 0; i < fb.primes.size(); ++i) fb.by_q[fb.primes[i].p].push_back(static_cast<int>(i));
    IntVec vI = ideal_vector(fb, I);
    if (vector_norm(fb, vI) == I.norm()) return vI;
    const NumberField& K = *I.field();
    auto basis = reduced_basis(I);
    std::mt19937_64 rng(0xc1a55);
    int n = K.degree();
    for (int t = 0; t < 20000; ++t) {
        IntVec x;
        if (t < n) {
            x = basis[t];
        } else {
            long range = 1 + t / 2000;
            std::vector<long> c(static_cast<size_t>(n));
            for (auto& v : c) v = std::uniform_int_distribution<long>(-range, range)(rng);
            x = combo(basis, c);
        }
        if (all_zero(x)) continue;
        Int Nx = abs(K.norm(x));
        Int NJ = Nx / I.norm();
        IntVec vJ(fb.primes.size());
        bool ok = true;
        for (size_t i = 0; i < fb.primes.size() && ok; ++i) {
            if (!divides(fb.primes[i].p, NJ)) continue;
            vJ[i] = valuation(fb.primes[i], x) - vI[i];
            if (vJ[i] < 0) ok = false;
        }
        if (!ok || vector_norm(fb, vJ) != NJ) continue;
        for (auto& c : vJ) c = -c;
        return vJ;
    }
    throw InconclusiveError("class_vector: no smooth representative found");
}

std::vector<Int> class_coordinates(const ClassGroupData& cg, const IntVec& x)
{
    std::vector<Int> out;
    if (cg.essential.empty()) return out;
    IntVec r = reduce_by_hnf(cg.relation_hnf, x);
    IntVec xe;
    for (int i : cg.essential) xe.push_back(r[i]);
    IntVec y = row_times(xe, cg.snf_V);
    for (size_t i = 0; i < cg.snf_diag.size(); ++i)
        if (cg.snf_diag[i] > 1) out.push_back(mod(y[i], cg.snf_diag[i]));
    return out;
}

bool class_is_trivial(const ClassGroupData& cg, const IntVec& x)
{
    if (cg.factor_base.empty()) return true;
    return all_zero(reduce_by_hnf(cg.relation_hnf, x));
}

std::optional<IntVec> exhaustive_generator_search(const Ideal& I, const UnitGroupData& U, long max_count)
{
    const NumberField& K = *I.field();
    int n = K.degree(), places = K.r() + K.s();
    if (I.is_unit()) return K.one();
    std::vector<LD> beta(static_cast<size_t>(places), 0);
    for (auto& u : U.fundamental_units) {
        auto e = K.embed(K.from_int(u));
        for (int j = 0; j < places; ++j) beta[j] += std::fabs(std::log(std::abs(e[j]))) / 2;
    }
    LD N2n = std::pow(static_cast<LD>(I.norm().get_d()), 2.0L / n);
    LD bound = 0;
    for (int j = 0; j < places; ++j) bound += (j < K.r() ? 1 : 2) * N2n * std::exp(2 * beta[j]);
    bound = bound * (1 + 1e-9L) + 1e-9L;
    Rat B(static_cast<double>(bound));
    ShortVectorEnumerator E(ideal_gram(I));
    std::optional<IntVec> found;
    long seen = 0;
    E.for_each(B, [&](const IntVec& c, const Rat&) {
        if (++seen > max_count) throw CapError("computation cap: fundamental-domain search exceeded " + std::to_string(max_count) + " vectors");
        IntVec x = row_times(c, I.hnf());
        if (abs(K.norm(x)) == I.norm()) {
            found = x;
            return false;
        }
        return true;
    });
    if (found && Ideal::principal(I.field(), *found) != I) throw VerificationError("generator search: element does not generate the ideal");
    return found;
}

std::string to_string(Principality p)
{
    switch (p) {
    case Principality::Principal: return "principal";
    case Principality::NotPrincipal: return "not_principal";
    default: return "inconclusive";
    }
}

PrincipalResult is_principal(const Ideal& I, const ClassGroupData* cg, const UnitGroupData* units)
{
    const FieldPtr& K = I.field();
    PrincipalResult res;
    if (I.is_unit()) {
        res.status = Principality::Principal;
        res.generator = K->one();
        res.method = "trivial";
        return res;
    }
    int n = K->degree();
    LD rho1 = std::pow(static_cast<LD>(I.norm().get_d()) * std::sqrt(static_cast<LD>(Int(abs(K->disc())).get_d())), 1.0L / n);
    ShortVectorEnumerator E(ideal_gram(I));
    for (int c = 1; c <= 8; c *= 2) {
        LD rho = c * rho1;
        Rat B(static_cast<double>(n * rho * rho * (1 + 1e-9L)));
        std::optional<IntVec> found;
        long seen = 0;
        try {
            E.for_each(B, [&](const IntVec& v, const Rat&) {
                if (++seen > 500000) throw CapError("search budget");
                IntVec x = row_times(v, I.hnf());
                if (abs(K->norm(x)) == I.norm()) {
                    found = x;
                    return false;
                }
                return true;
            });
        } catch (const CapError&) {
            break;
        }
        if (found) {
            if (Ideal::principal(K, *found) != I) throw VerificationError("is_principal: element does not generate the ideal");
            res.status = Principality::Principal;
            res.generator = *found;
            res.method = "bounded search";
            return res;
        }
    }
    std::optional<ClassGroupData> own_cg;
    std::optional<UnitGroupData> own_units;
    try {
        if (!units) {
            own_units = unit_group(K);
            units = &*own_units;
        }
        if (!cg && n <= kMaxClassDegreeUnconditional) {
            own_cg = class_group_impl(K, ClassMode::Unconditional, {}, units);
            cg = &*own_cg;
        }
    } catch (const CapError&) {
    } catch (const InconclusiveError&) {
    }
    if (cg && cg->mode == ClassMode::Unconditional) {
        try {
            if (!class_is_trivial(*cg, class_vector(*cg, I))) {
                res.status = Principality::NotPrincipal;
                res.method = "class group";
                return res;
            }
        } catch (const InconclusiveError&) {
        }
    }
    if (units) {
        try {
            auto g = exhaustive_generator_search(I, *units);
            if (g) {
                res.status = Principality::Principal;
                res.generator = *g;
                res.method = "fundamental domain";
            } else {
                res.status = Principality::NotPrincipal;
                res.method = "fundamental domain";
            }
            return res;
        } catch (const CapError&) {
        }
    }
    res.status = Principality::Inconclusive;
    res.method = "budget exhausted";
    return res;
}

void fill_narrow(ClassUnitData& d)
{
    const NumberField& K = *d.field;
    d.sign_matrix.clear();
    std::vector<IntVec> rows{K.from_integer(-1)};
    for (auto& u : d.units.fundamental_units) rows.push_back(u);
    for (auto& u : rows) {
        std::vector<int> bits;
        for (int s : K.real_signs(K.from_int(u))) bits.push_back(s < 0 ? 1 : 0);
        d.sign_matrix.push_back(bits);
    }
    d.unit_index_2exp = sign_rank(d.sign_matrix);
    int r = K.r();
    Int num = d.cg.h * ipow(Int(2), static_cast<unsigned long>(r));
    Int den = ipow(Int(2), static_cast<unsigned long>(d.unit_index_2exp));
    if (!divides(den, num)) throw VerificationError("narrow class number is not an integer");
    d.h_plus = num / den;
    d.totally_positive_units_are_squares = d.unit_index_2exp == r;
}

ClassUnitData class_unit_data(const FieldPtr& K, ClassMode mode, const ClassGroupOptions& opt)
{
    ClassUnitData d;
    d.field = K;
    int cap = mode == ClassMode::Unconditional ? kMaxClassDegreeUnconditional : kMaxClassDegreeGrh;
    if (K->degree() > cap)
        throw CapError("computation cap: degree " + std::to_string(K->degree()) + " exceeds the " + to_string(mode) + " class group limit " + std::to_string(cap));
    d.units = unit_group(K);
    d.cg = class_group_impl(K, mode, opt, &d.units);
    fill_narrow(d);
    return d;
}

} // namespace flt
