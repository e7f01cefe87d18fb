#include "classunit/classunit.hpp"
#include "classunit/power_residue.hpp"

#include "exactmath/lattice.hpp"
#include "exactmath/polymodp.hpp"
#include "exactmath/primes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace flt {

namespace {

using LD = long double;

constexpr LD kTwoPi = 6.283185307179586476925286766559L;

LD log_abs(const Complex& z) { return std::log(std::abs(z)); }

// d_j log|sigma_j(x)| for the first `count` places.
std::vector<LD> log_vector(const NumberField& K, const std::vector<Complex>& emb, int count)
{
    std::vector<LD> v;
    for (int j = 0; j < count; ++j) v.push_back((j < K.r() ? 1 : 2) * log_abs(emb[j]));
    return v;
}

LD det_ld(std::vector<std::vector<LD>> a)
{
    int n = static_cast<int>(a.size());
    LD d = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int i = c + 1; i < n; ++i)
            if (std::fabs(a[i][c]) > std::fabs(a[p][c])) p = i;
        if (a[p][c] == 0) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (int i = c + 1; i < n; ++i) {
            LD f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

// Inverse of a real matrix (partial pivoting).
std::vector<std::vector<LD>> inverse_ld(std::vector<std::vector<LD>> a)
{
    int n = static_cast<int>(a.size());
    std::vector<std::vector<LD>> inv(n, std::vector<LD>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int i = c + 1; i < n; ++i)
            if (std::fabs(a[i][c]) > std::fabs(a[p][c])) p = i;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        LD d = a[c][c];
        if (d == 0) throw VerificationError("singular embedding matrix");
        for (int j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            LD f = a[i][c];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Real layout of the embeddings: real places, then (Re, Im) per complex place.
std::vector<LD> real_layout(const NumberField& K, const std::vector<Complex>& emb)
{
    std::vector<LD> t;
    for (int j = 0; j < K.r(); ++j) t.push_back(emb[j].real());
    for (int j = 0; j < K.s(); ++j) {
        t.push_back(emb[K.r() + j].real());
        t.push_back(emb[K.r() + j].imag());
    }
    return t;
}

struct CoordSolver {
    std::vector<std::vector<LD>> Einv;
    explicit CoordSolver(const NumberField& K)
    {
        int n = K.degree();
        std::vector<std::vector<LD>> E;
        for (int i = 0; i < n; ++i) E.push_back(real_layout(K, K.embed(K.from_int(K.unit_vector(i)))));
        Einv = inverse_ld(E);
    }
    // Rounded coordinates, or nothing when far from integral.
    std::optional<IntVec> solve(const std::vector<LD>& t) const
    {
        int n = static_cast<int>(t.size());
        IntVec c(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            LD acc = 0;
            for (int k = 0; k < n; ++k) acc += t[k] * Einv[k][j];
            LD rd = std::round(acc);
            if (std::fabs(acc - rd) > 1e-4L * std::max<LD>(1, std::fabs(acc) * 1e-12L) || std::fabs(rd) > 1e17L)
                return std::nullopt;
            c[j] = Int(static_cast<long>(rd));
        }
        return c;
    }
};

std::optional<IntVec> root_from_embeddings(const NumberField& K, const CoordSolver& S, const IntVec& v, const std::vector<Complex>& sv, int l)
{
    int r = K.r(), s = K.s();
    std::vector<LD> realroot(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) {
        LD x = sv[j].real();
        if (l % 2 == 0 && x <= 0) return std::nullopt;
        realroot[j] = (x < 0 ? -1 : 1) * std::pow(std::fabs(x), 1.0L / l);
    }
    std::vector<LD> mag(static_cast<size_t>(s)), arg(static_cast<size_t>(s));
    for (int j = 0; j < s; ++j) {
        mag[j] = std::pow(std::abs(sv[r + j]), 1.0L / l);
        arg[j] = std::arg(sv[r + j]) / l;
    }
    long real_choices = (l % 2 == 0) ? (1L << r) : 1;
    long cx_choices = 1;
    for (int j = 0; j < s; ++j) cx_choices *= l;
    if (real_choices * cx_choices > 4000000) throw CapError("computation cap: root extraction choices");
    for (long rc = 0; rc < real_choices; ++rc)
        for (long cc = 0; cc < cx_choices; ++cc) {
            std::vector<LD> t;
            for (int j = 0; j < r; ++j) t.push_back(((rc >> j) & 1) ? -realroot[j] : realroot[j]);
            long c = cc;
            for (int j = 0; j < s; ++j) {
                long k = c % l;
                c /= l;
                LD a = arg[j] + kTwoPi * k / l;
                t.push_back(mag[j] * std::cos(a));
                t.push_back(mag[j] * std::sin(a));
            }
            auto w = S.solve(t);
            if (!w) continue;
            if (K.pow(*w, static_cast<unsigned long>(l)) == v) return w;
        }
    return std::nullopt;
}

int torsion_order_of(const NumberField& K, const IntVec& x)
{
    IntVec acc = x;
    IntVec one = K.one();
    for (int k = 1; k <= 64; ++k) {
        if (acc == one) return k;
        acc = K.mul(acc, x);
    }
    return 0;
}

// Minimal regulator over fields like K, used to bound the saturation index.
LD regulator_lower_bound(const NumberField& K)
{
    LD b = 0.2L;  // Friedman: every number field has regulator >= 0.2052
    if (K.degree() == 2 && K.r() == 2) b = 0.48L;  // log of the golden ratio
    if (K.degree() == 3 && K.r() == 3) {
        // Cusick: R >= (1/16) log^2(disc/4) for totally real cubics
        LD L = std::log(static_cast<LD>(K.disc().get_d()) / 4);
        b = std::max(b, L * L / 16);
    }
    return b;
}

} // namespace

namespace detail {

Int reduce_at(const NumberField& K, const IntVec& x, const DegreeOnePrime& P)
{
    RatVec p = K.to_power(K.from_int(x));
    Int acc = 0;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        Int num = mod(Int(p[k].get_num()), P.q), den = mod(Int(p[k].get_den()), P.q), inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.q.get_mpz_t());
        acc = mod(acc * P.root + num * inv, P.q);
    }
    return acc;
}

std::vector<DegreeOnePrime> degree_one_primes(const NumberField& K, long l, int want, const std::function<bool(const Int&)>& skip)
{
    std::vector<DegreeOnePrime> out;
    Int dpoly = discriminant(K.poly());
    for (Int q = 2 * l + 1; static_cast<int>(out.size()) < want; q += 2 * l) {
        if (q > Int(2000000000L)) throw CapError("computation cap: ran out of degree-one primes for power characters");
        if (!is_prime(q) || divides(q, dpoly) || (skip && skip(q))) continue;
        for (auto& fc : factor_mod_p(K.poly(), q))
            if (fc.factor.degree() == 1 && static_cast<int>(out.size()) < want)
                out.push_back({q, mod(-Int(static_cast<unsigned long>(fc.factor[0])), q)});
    }
    return out;
}

IntMatrix power_characters(const NumberField& K, const std::vector<IntVec>& gens, const std::vector<DegreeOnePrime>& primes, long l)
{
    IntMatrix M(static_cast<int>(gens.size()), static_cast<int>(primes.size()));
    for (size_t c = 0; c < primes.size(); ++c) {
        const Int& q = primes[c].q;
        Int e = (q - 1) / l;
        Int z;
        for (Int t = 2;; ++t) {
            mpz_powm(z.get_mpz_t(), t.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
            if (z != 1) break;
        }
        std::vector<Int> zp{Int(1)};
        for (long k = 1; k < l; ++k) zp.push_back(mod(zp.back() * z, q));
        for (size_t i = 0; i < gens.size(); ++i) {
            Int g = reduce_at(K, gens[i], primes[c]), y;
            mpz_powm(y.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
            auto it = std::find(zp.begin(), zp.end(), y);
            if (it == zp.end()) throw VerificationError("power character: value outside mu_l");
            M(static_cast<int>(i), static_cast<int>(c)) = static_cast<long>(it - zp.begin());
        }
    }
    return M;
}

} // namespace detail

namespace {

using detail::DegreeOnePrime;

// l-th power residue symbols of the generators at degree-one primes; the
// left kernel holds every exponent vector giving an l-th power.
std::vector<IntVec> power_character_kernel(const NumberField& K, const std::vector<IntVec>& gens, long l)
{
    int want = static_cast<int>(gens.size()) + 12;
    auto primes = detail::degree_one_primes(K, l, want);
    return left_kernel_mod_p(detail::power_characters(K, gens, primes, l), Int(l));
}

std::vector<Complex> embed_int(const NumberField& K, const IntVec& x) { return K.embed(K.from_int(x)); }

LD regulator_of(const NumberField& K, const std::vector<IntVec>& units)
{
    int ru = static_cast<int>(units.size());
    if (ru == 0) return 1;
    std::vector<std::vector<LD>> A;
    for (auto& u : units) A.push_back(log_vector(K, embed_int(K, u), ru));
    return std::fabs(det_ld(A));
}

IntVec unit_inverse(const NumberField& K, const IntVec& u) { return NumberField::to_int(K.inverse(K.from_int(u))); }

// Tries to enlarge the unit lattice at l; returns true if a basis element was
// replaced by an l-th root.
bool saturate_once(const NumberField& K, const CoordSolver& S, const IntVec& zeta, std::vector<IntVec>& units, long l)
{
    std::vector<IntVec> gens{zeta};
    for (auto& u : units) gens.push_back(u);
    auto ker = power_character_kernel(K, gens, l);
    if (ker.empty()) return false;
    // all nonzero combinations of the kernel basis (small kernels only)
    size_t k = ker.size();
    long total = 1;
    for (size_t i = 0; i < k && total < 100000; ++i) total *= l;
    if (total >= 100000) throw CapError("computation cap: saturation kernel too large");
    std::vector<std::vector<Complex>> ge;
    for (auto& g : gens) ge.push_back(embed_int(K, g));
    for (long idx = 1; idx < total; ++idx) {
        IntVec a(gens.size());
        long c = idx;
        for (size_t i = 0; i < k; ++i) {
            long coef = c % l;
            c /= l;
            for (size_t j = 0; j < gens.size(); ++j) a[j] += coef * ker[i][j];
        }
        for (auto& x : a) x = mod(x, Int(l));
        // normalize the first nonzero unit exponent to 1
        int lead = -1;
        for (size_t j = 1; j < a.size(); ++j)
            if (a[j] != 0) {
                lead = static_cast<int>(j);
                break;
            }
        if (lead < 0) continue;
        if (a[lead] != 1) continue;  // scalar multiples are visited separately
        IntVec v = K.one();
        std::vector<Complex> sv(static_cast<size_t>(K.r() + K.s()), Complex(1, 0));
        for (size_t j = 0; j < gens.size(); ++j) {
            long e = to_long(a[j]);
            if (e == 0) continue;
            v = K.mul(v, K.pow(gens[j], static_cast<unsigned long>(e)));
            for (size_t t = 0; t < sv.size(); ++t) sv[t] *= std::pow(ge[j][t], static_cast<int>(e));
        }
        auto w = root_from_embeddings(K, S, v, sv, static_cast<int>(l));
        if (w) {
            units[lead - 1] = *w;
            return true;
        }
    }
    return false;
}

// Size reduction by pairwise multiplication, then canonical torsion multiple
// and ordering.
void normalize_units(const NumberField& K, const IntVec& zeta, int w, std::vector<IntVec>& units)
{
    auto t2 = [&](const IntVec& x) { return K.t2_approx(K.from_int(x)); };
    for (int pass = 0; pass < 50; ++pass) {
        bool changed = false;
        for (size_t i = 0; i < units.size(); ++i)
            for (size_t j = 0; j < units.size(); ++j) {
                if (i == j) continue;
                IntVec inv = unit_inverse(K, units[j]);
                for (const IntVec& m : {units[j], inv}) {
                    IntVec c = K.mul(units[i], m);
                    if (t2(c) < t2(units[i]) * (1 - 1e-12L)) {
                        units[i] = c;
                        changed = true;
                    }
                }
            }
        if (!changed) break;
    }
    for (auto& u : units) {
        // the smallest T2 among u^{+-1}, then lexicographically least torsion multiple
        IntVec inv = unit_inverse(K, u);
        if (t2(inv) < t2(u) * (1 - 1e-12L)) u = inv;
        IntVec best = u, cur = u;
        for (int k = 1; k < w; ++k) {
            cur = K.mul(cur, zeta);
            if (cur < best) best = cur;
        }
        u = best;
    }
    std::stable_sort(units.begin(), units.end(), [&](const IntVec& a, const IntVec& b) {
        LD ta = t2(a), tb = t2(b);
        if (std::fabs(ta - tb) > 1e-9L * std::max(ta, tb)) return ta < tb;
        return a < b;
    });
}


// Units as multiplicative dependencies among elements whose ideals factor
// over a fixed set of small primes.
std::vector<std::pair<LD, IntVec>> kernel_units(const NumberField& K, const std::vector<IntVec>& elts, const std::vector<IntVec>& vals)
{
    // Gaussian elimination over Q on the valuation vectors; every element
    // that reduces to zero yields one dependency.
    struct Row {
        RatVec val, coef;
        size_t pivot;
    };
    std::vector<std::pair<LD, IntVec>> out;
    std::vector<Row> rows;
    size_t m = elts.size();
    for (size_t i = 0; i < m; ++i) {
        RatVec v(vals[i].begin(), vals[i].end());
        RatVec coef(m);
        coef[i] = 1;
        for (auto& r : rows) {
            if (v[r.pivot] == 0) continue;
            Rat f = v[r.pivot] / r.val[r.pivot];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * r.val[j];
            for (size_t j = 0; j < m; ++j) coef[j] -= f * r.coef[j];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
        if (nz != v.end()) {
            rows.push_back({v, coef, static_cast<size_t>(nz - v.begin())});
            continue;
        }
        Int d = 1;
        for (auto& c : coef) d = lcm(d, c.get_den());
        RatVec u = K.from_int(K.one());
        for (size_t j = 0; j < m; ++j) {
            Int e = Int(coef[j] * d);
            if (e != 0) u = K.mul(u, K.pow(K.from_int(elts[j]), to_long(e)));
        }
        if (!NumberField::is_integral(u)) throw VerificationError("kernel_units: dependency is not a unit");
        out.emplace_back(K.t2_approx(u), NumberField::to_int(u));
    }
    return out;
}
} // namespace

std::string to_string(ClassMode m) { return m == ClassMode::Unconditional ? "unconditional" : "grh"; }

Rat minkowski_bound(const NumberField& K)
{
    int n = K.degree(), s = K.s();
    Rat b = 1;
    Rat four_over_pi = Rat(4) / Rat(314159, 100000);
    for (int i = 0; i < s; ++i) b *= four_over_pi;
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    b *= Rat(fact, ipow(Int(n), static_cast<unsigned long>(n)));
    b.canonicalize();
    Int D = abs(K.disc());
    // sqrt|disc| rounded up to 1e-9
    Int scale = ipow(Int(10), 9);
    Int sq = isqrt(D * scale * scale);
    if (sq * sq != D * scale * scale) sq += 1;
    b *= Rat(sq, scale);
    b.canonicalize();
    return b;
}

Rat grh_bound(const NumberField& K)
{
    long double L = std::log(static_cast<long double>(Int(abs(K.disc())).get_d()));
    long v = static_cast<long>(std::ceil(0.3L * L * L));
    return Rat(std::max(30L, v));
}

RatMatrix enumeration_gram(const NumberField& K)
{
    if (K.has_exact_t2()) return K.t2_gram();
    int n = K.degree();
    std::vector<std::vector<Complex>> e;
    for (int i = 0; i < n; ++i) e.push_back(K.embed(K.from_int(K.unit_vector(i))));
    RatMatrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LD acc = 0;
            for (int k = 0; k < K.r() + K.s(); ++k) acc += (k < K.r() ? 1 : 2) * (e[i][k] * std::conj(e[j][k])).real();
            G(i, j) = Rat(static_cast<double>(acc));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) G(i, j) = G(j, i);
    return G;
}

RatMatrix ideal_gram(const Ideal& I)
{
    RatMatrix H = to_rat(I.hnf());
    return H * enumeration_gram(*I.field()) * H.transpose();
}

std::optional<IntVec> integral_root(const NumberField& K, const IntVec& v, int l)
{
    if (l < 1) throw DomainError("integral_root: exponent must be positive");
    if (l == 1) return v;
    CoordSolver S(K);
    return root_from_embeddings(K, S, v, embed_int(K, v), l);
}

int sign_rank(const std::vector<std::vector<int>>& rows0)
{
    auto rows = rows0;
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols; ++c) {
        size_t p = static_cast<size_t>(rank);
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != rank && rows[i][c])
                for (size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[rank][j];
        ++rank;
    }
    return rank;
}

UnitGroupData unit_group(const FieldPtr& Kp, const UnitOptions& opt)
{
    const NumberField& K = *Kp;
    int n = K.degree();
    UnitGroupData U;
    U.rank = K.r() + K.s() - 1;
    bool exact = K.has_exact_t2();
    RatMatrix G = enumeration_gram(K);
    ShortVectorEnumerator E(G);
    Rat slack = exact ? Rat(1) : Rat(1000001, 1000000);

    // roots of unity are the nonzero integers with T2 = n
    U.torsion_order = 2;
    U.torsion_generator = K.from_integer(-1);
    if (n == 1) U.torsion_generator = IntVec{Int(-1)};
    for (auto& v : E.enumerate(Rat(n) * slack + (exact ? Rat(0) : Rat(1, 1000000)))) {
        for (int sgn : {1, -1}) {
            IntVec x = v;
            if (sgn < 0)
                for (auto& c : x) c = -c;
            int o = torsion_order_of(K, x);
            if (o > U.torsion_order || (o == U.torsion_order && o > 2 && x < U.torsion_generator)) {
                U.torsion_order = o;
                U.torsion_generator = x;
            }
        }
    }
    if (U.rank == 0) return U;

    // candidate units from short vectors: norm +-1 and quotients of
    // generators of the same small principal ideal
    std::vector<IntVec> cands;
    std::map<std::vector<Int>, IntVec> by_ideal;
    std::vector<IntVec> chosen;
    std::vector<std::vector<LD>> gs;  // Gram-Schmidt rows of chosen log vectors
    auto try_add = [&](const IntVec& u) {
        auto lv = log_vector(K, embed_int(K, u), U.rank);
        std::vector<LD> r = lv;
        for (auto& g : gs) {
            LD num = 0, den = 0;
            for (int j = 0; j < U.rank; ++j) {
                num += r[j] * g[j];
                den += g[j] * g[j];
            }
            for (int j = 0; j < U.rank; ++j) r[j] -= num / den * g[j];
        }
        LD nr = 0, nl = 0;
        for (int j = 0; j < U.rank; ++j) {
            nr += r[j] * r[j];
            nl += lv[j] * lv[j];
        }
        if (nl < 1e-12L || nr < 1e-10L * nl) return;
        gs.push_back(r);
        chosen.push_back(u);
    };
    std::vector<PrimeIdeal> small_primes;
    std::vector<IntVec> smooth_elts, smooth_vals;
    std::set<IntVec> smooth_seen;
    long B = 4L * n;
    size_t ncand_seen = 0;
    while (static_cast<int>(chosen.size()) < U.rank) {
        if (B > opt.max_t2) throw InconclusiveError("unit_group: rank " + std::to_string(U.rank) + " not reached within the search budget");
        std::vector<IntVec> vs;
        try {
            vs = E.enumerate(Rat(B) * slack, static_cast<size_t>(opt.max_candidates));
        } catch (const CapError&) {
            throw InconclusiveError("unit_group: rank not reached within the enumeration budget");
        }
        std::vector<std::pair<LD, IntVec>> found;
        for (auto& x : vs) {
            Int N = abs(K.norm(x));
            if (N == 1) {
                found.emplace_back(K.t2_approx(K.from_int(x)), x);
            } else if (N <= 64 && ncand_seen < 20000) {
                ++ncand_seen;
                Ideal I = Ideal::principal(Kp, x);
                std::vector<Int> key;
                for (int i = 0; i < n; ++i)
                    for (int j = i; j < n; ++j) key.push_back(I.hnf()(i, j));
                auto it = by_ideal.find(key);
                if (it == by_ideal.end()) {
                    by_ideal.emplace(key, x);
                } else {
                    RatVec q = K.mul(K.from_int(x), K.inverse(K.from_int(it->second)));
                    if (NumberField::is_integral(q)) {
                        IntVec u = NumberField::to_int(q);
                        found.emplace_back(K.t2_approx(q), u);
                    }
                }
            }
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        for (auto& [t, u] : found) {
            if (static_cast<int>(chosen.size()) == U.rank) break;
            try_add(u);
        }
        if (static_cast<int>(chosen.size()) < U.rank) {
            // smooth elements of small norm, then their multiplicative dependencies
            if (small_primes.empty())
                for (long q : primes_up_to(47))
                    for (auto& P : factor_rational_prime(Kp, Int(q)).factors) small_primes.push_back(P);
            for (auto& x : vs) {
                if (smooth_elts.size() >= 120) break;
                Int N = abs(K.norm(x));
                if (N < 2 || N > 100000 || !smooth_seen.insert(x).second) continue;
                IntVec v(small_primes.size());
                Int rest = N;
                for (size_t i = 0; i < small_primes.size(); ++i) {
                    if (!divides(small_primes[i].p, rest)) continue;
                    v[i] = valuation(small_primes[i], x);
                    rest /= ipow(small_primes[i].ideal.norm(), to_long(v[i]));
                }
                if (rest != 1) continue;
                smooth_elts.push_back(x);
                smooth_vals.push_back(v);
            }
            auto ku = kernel_units(K, smooth_elts, smooth_vals);
            std::sort(ku.begin(), ku.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [t, u] : ku) {
                if (static_cast<int>(chosen.size()) == U.rank) break;
                try_add(u);
            }
        }
        B *= 4;
    }

    // saturation at every prime up to the index bound
    CoordSolver S(K);
    std::vector<IntVec> units = chosen;
    LD Rmin = regulator_lower_bound(K);
    long l = 2;
    while (true) {
        LD R = regulator_of(K, units);
        long bound = static_cast<long>(std::floor(R / Rmin * (1 + 1e-9L)));
        if (l > bound) {
            U.saturation_bound = bound;
            break;
        }
        if (!is_prime(Int(l))) {
            ++l;
            continue;
        }
        if (!saturate_once(K, S, U.torsion_generator, units, l)) ++l;
    }
    normalize_units(K, U.torsion_generator, U.torsion_order, units);
    U.fundamental_units = units;
    U.regulator = regulator_of(K, units);
    return U;
}

} // namespace flt
