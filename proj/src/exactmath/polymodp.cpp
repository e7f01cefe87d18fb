#include "exactmath/polymodp.hpp"

#include "exactmath/primes.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace flt {

namespace {

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

} // namespace

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0) throw DomainError("inverse of zero modulo p");
    return pow_mod(a, p - 2, p);
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> c) : p_(p), c_(std::move(c))
{
    for (auto& a : c_) a %= p_;
    normalize();
}

FpPoly FpPoly::from_zpoly(const ZPoly& f, std::uint64_t p)
{
    std::vector<std::uint64_t> c;
    Int pp = static_cast<unsigned long>(p);
    for (auto& a : f.coeffs()) c.push_back(mod(a, pp).get_ui());
    return FpPoly(p, std::move(c));
}

ZPoly FpPoly::to_zpoly() const
{
    std::vector<Int> c;
    for (auto a : c_) c.emplace_back(static_cast<unsigned long>(a));
    return ZPoly(std::move(c));
}

void FpPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const
{
    if (is_zero()) return *this;
    return scale(inv_mod(lead(), p_));
}

FpPoly FpPoly::scale(std::uint64_t s) const
{
    std::vector<std::uint64_t> c(c_);
    for (auto& a : c) a = mulm(a, s % p_, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::derivative() const
{
    if (degree() < 1) return FpPoly(p_, {});
    std::vector<std::uint64_t> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulm(c_[i], i % p_, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b)
{
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = addm(a[static_cast<int>(i)], b[static_cast<int>(i)], a.p_);
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b)
{
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = subm(a[static_cast<int>(i)], b[static_cast<int>(i)], a.p_);
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b)
{
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.p_;
    }
    return FpPoly(a.p_, std::move(c));
}

void divmod(const FpPoly& f, const FpPoly& g, FpPoly& q, FpPoly& r)
{
    if (g.is_zero()) throw DomainError("division by zero polynomial mod p");
    std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> rc = f.coeffs();
    int dg = g.degree(), df = f.degree();
    if (df < dg) {
        q = FpPoly(p, {});
        r = f;
        return;
    }
    std::vector<std::uint64_t> qc(static_cast<size_t>(df - dg) + 1, 0);
    std::uint64_t inv = inv_mod(g.lead(), p);
    for (int i = df; i >= dg; --i) {
        if (rc[i] == 0) continue;
        std::uint64_t t = mulm(rc[i], inv, p);
        qc[i - dg] = t;
        for (int j = 0; j <= dg; ++j) rc[i - dg + j] = subm(rc[i - dg + j], mulm(t, g[j], p), p);
    }
    q = FpPoly(p, std::move(qc));
    r = FpPoly(p, std::move(rc));
}

FpPoly rem(const FpPoly& f, const FpPoly& g)
{
    FpPoly q, r;
    divmod(f, g, q, r);
    return r;
}

FpPoly gcd(const FpPoly& a0, const FpPoly& b0)
{
    FpPoly a = a0, b = b0;
    while (!b.is_zero()) {
        FpPoly r = rem(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

void xgcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& s, FpPoly& t)
{
    std::uint64_t p = a.modulus();
    FpPoly r0 = a, r1 = b;
    FpPoly s0(p, {1}), s1(p, {}), t0(p, {}), t1(p, {1});
    while (!r1.is_zero()) {
        FpPoly q, r;
        divmod(r0, r1, q, r);
        r0 = r1;
        r1 = r;
        FpPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) {
        g = r0;
        s = s0;
        t = t0;
        return;
    }
    std::uint64_t inv = inv_mod(r0.lead(), p);
    g = r0.scale(inv);
    s = s0.scale(inv);
    t = t0.scale(inv);
}

FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m)
{
    std::uint64_t p = m.modulus();
    FpPoly result(p, {1});
    result = rem(result, m);
    FpPoly b = rem(base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = rem(result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, m);
    }
    return result;
}

namespace {

// Squarefree decomposition of a monic f: list of (squarefree g, multiplicity).
std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f)
{
    std::uint64_t p = f.modulus();
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly one(p, {1});
    FpPoly df = f.derivative();
    if (df.is_zero()) {
        // f = g(x^p)
        std::vector<std::uint64_t> c;
        for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f[i]);
        for (auto& [g, m] : squarefree_decomposition(FpPoly(p, c).monic())) out.emplace_back(g, m * static_cast<int>(p));
        return out;
    }
    FpPoly c = gcd(f, df);
    FpPoly w, tmp;
    divmod(f, c, w, tmp);
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly z;
        divmod(w, y, z, tmp);
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = y;
        divmod(c, y, c, tmp);
    }
    if (c.degree() > 0) {
        // remaining c is a p-th power
        std::vector<std::uint64_t> cc;
        for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) cc.push_back(c[k]);
        for (auto& [g, m] : squarefree_decomposition(FpPoly(p, cc).monic())) out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
}

// Distinct-degree factorization of a monic squarefree f.
std::vector<std::pair<FpPoly, int>> distinct_degree(const FpPoly& f)
{
    std::uint64_t p = f.modulus();
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly x(p, {0, 1});
    FpPoly h = x;
    FpPoly rest = f;
    Int pp = static_cast<unsigned long>(p);
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod(h, pp, rest);
        FpPoly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            FpPoly q, r;
            divmod(rest, g, q, r);
            rest = q.monic();
            h = rem(h, rest);
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

std::uint64_t seed_of(const FpPoly& f)
{
    std::uint64_t h = 1469598103934665603ull ^ f.modulus();
    for (auto a : f.coeffs()) {
        h ^= a + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return h;
}

// Equal-degree splitting (Cantor-Zassenhaus); f monic squarefree with all
// irreducible factors of degree d.
void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    std::uint64_t p = f.modulus();
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    while (true) {
        std::vector<std::uint64_t> c(static_cast<size_t>(f.degree()));
        for (auto& a : c) a = dist(rng);
        FpPoly a(p, c);
        if (a.degree() < 1) continue;
        FpPoly g;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            FpPoly t = a, s = a;
            for (int i = 1; i < d; ++i) {
                t = rem(t * t, f);
                s = s + t;
            }
            g = gcd(s, f);
        } else {
            Int e = (ipow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
            FpPoly b = powmod(a, e, f) - FpPoly(p, {1});
            g = gcd(b, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            FpPoly q, r;
            divmod(f, g, q, r);
            equal_degree(g.monic(), d, rng, out);
            equal_degree(q.monic(), d, rng, out);
            return;
        }
    }
}

bool factor_less(const FpFactor& a, const FpFactor& b)
{
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    if (a.factor.coeffs() != b.factor.coeffs()) return a.factor.coeffs() < b.factor.coeffs();
    return a.multiplicity < b.multiplicity;
}

} // namespace

std::vector<FpFactor> factor_mod_p(const FpPoly& f0)
{
    if (f0.is_zero()) throw DomainError("cannot factor the zero polynomial mod p");
    std::vector<FpFactor> out;
    FpPoly f = f0.monic();
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed_of(f));
    for (auto& [g, m] : squarefree_decomposition(f)) {
        for (auto& [h, d] : distinct_degree(g)) {
            std::vector<FpPoly> parts;
            equal_degree(h, d, rng, parts);
            for (auto& q : parts) out.push_back({q, m});
        }
    }
    std::sort(out.begin(), out.end(), factor_less);
    // merge equal factors that arose from separate squarefree layers
    std::vector<FpFactor> merged;
    for (auto& fa : out) {
        if (!merged.empty() && merged.back().factor == fa.factor)
            merged.back().multiplicity += fa.multiplicity;
        else
            merged.push_back(fa);
    }
    return merged;
}

std::vector<FpFactor> factor_mod_p(const ZPoly& f, const Int& p)
{
    if (!is_prime(p)) throw DomainError("factor_mod_p: modulus " + p.get_str() + " is not prime");
    if (p >= Int(1) << 31) throw CapError("factor_mod_p: modulus too large for word-size arithmetic");
    FpPoly fp = FpPoly::from_zpoly(f, p.get_ui());
    if (fp.is_zero()) throw DomainError("factor_mod_p: polynomial vanishes modulo " + p.get_str());
    return factor_mod_p(fp);
}

bool is_irreducible_mod_p(const FpPoly& f)
{
    auto fac = factor_mod_p(f);
    return fac.size() == 1 && fac[0].multiplicity == 1;
}

} // namespace flt
