#include "exactmath/factor_z.hpp"

#include "exactmath/polymodp.hpp"
#include "exactmath/primes.hpp"

#include <algorithm>

namespace flt {

namespace {

ZPoly reduce_sym(const ZPoly& f, const Int& m)
{
    Int half = m / 2;
    std::vector<Int> c;
    for (auto& a : f.coeffs()) {
        Int r = mod(a, m);
        if (r > half) r -= m;
        c.push_back(r);
    }
    return ZPoly(std::move(c));
}

ZPoly reduce_pos(const ZPoly& f, const Int& m)
{
    std::vector<Int> c;
    for (auto& a : f.coeffs()) c.push_back(mod(a, m));
    return ZPoly(std::move(c));
}

// Lifts f = g*h (mod p), g monic, to a factorization modulo p^k.
void hensel_lift(const ZPoly& f, const FpPoly& g0, const FpPoly& h0, std::uint64_t p, int k, ZPoly& g_out, ZPoly& h_out)
{
    FpPoly gg, s, t;
    xgcd(g0, h0, gg, s, t);
    if (gg.degree() != 0) throw DomainError("hensel_lift: factors are not coprime mod p");
    ZPoly g = g0.to_zpoly(), h = h0.to_zpoly();
    Int pp = static_cast<unsigned long>(p);
    Int pj = pp;
    for (int j = 1; j < k; ++j) {
        ZPoly diff = f - g * h;
        std::vector<Int> ec;
        for (auto& a : diff.coeffs()) ec.push_back(a / pj);
        FpPoly e = FpPoly::from_zpoly(ZPoly(ec), p);
        FpPoly q, r;
        divmod(t * e, g0, q, r);
        FpPoly num = e - r * h0;
        FpPoly dh, rr;
        divmod(num, g0, dh, rr);
        g = g + pj * r.to_zpoly();
        h = h + pj * dh.to_zpoly();
        pj *= pp;
        g = reduce_pos(g, pj);
        h = reduce_pos(h, pj);
    }
    g_out = g;
    h_out = h;
}

// Lifts all monic modular factors of f to modulus p^k.
std::vector<ZPoly> multi_lift(const ZPoly& f, const std::vector<FpPoly>& facs, std::uint64_t p, int k)
{
    Int m = ipow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(k));
    std::vector<ZPoly> out;
    ZPoly current = reduce_pos(f, m);
    for (size_t i = 0; i + 1 < facs.size(); ++i) {
        FpPoly rest(p, {mod(current.lead(), Int(static_cast<unsigned long>(p))).get_ui()});
        for (size_t j = i + 1; j < facs.size(); ++j) rest = rest * facs[j];
        ZPoly g, h;
        hensel_lift(current, facs[i], rest, p, k, g, h);
        out.push_back(g);
        current = h;
    }
    // last factor: make monic modulo p^k
    Int lc = current.lead();
    Int inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
    out.push_back(reduce_pos(inv * current, m));
    return out;
}

bool next_combination(std::vector<int>& idx, int n)
{
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Irreducible factors of a squarefree primitive polynomial of degree >= 1.
std::vector<ZPoly> factor_squarefree(const ZPoly& f)
{
    int n = f.degree();
    if (n <= 1) return {primitive_part(f)};
    Int lc = f.lead();
    Int disc = discriminant(f);
    // choose the good prime giving the fewest modular factors
    std::uint64_t best_p = 0;
    std::vector<FpFactor> best;
    int tried = 0;
    for (long p : primes_up_to(2000)) {
        Int pp = p;
        if (divides(pp, lc) || divides(pp, disc)) continue;
        auto fac = factor_mod_p(FpPoly::from_zpoly(f, static_cast<std::uint64_t>(p)));
        if (fac.size() == 1) return {primitive_part(f)};
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = static_cast<std::uint64_t>(p);
            best = fac;
        }
        if (++tried >= 8) break;
    }
    if (best_p == 0) throw CapError("no good prime found for polynomial factorization");
    std::uint64_t p = best_p;
    // coefficient bound for factors (Mignotte-style, generous)
    Int maxc = 0;
    for (auto& a : f.coeffs()) maxc = std::max(maxc, Int(abs(a)));
    Int bound = (isqrt(Int(n + 1)) + 1) * (Int(1) << n) * maxc * abs(lc);
    Int m = static_cast<unsigned long>(p);
    int k = 1;
    while (m <= 2 * bound * abs(lc)) {
        m *= static_cast<unsigned long>(p);
        ++k;
    }
    std::vector<FpPoly> modfacs;
    for (auto& fa : best) modfacs.push_back(fa.factor);
    std::vector<ZPoly> lifted = multi_lift(f, modfacs, p, k);

    std::vector<ZPoly> result;
    ZPoly cur = f;
    std::vector<ZPoly> remaining = lifted;
    int s = 1;
    while (2 * s <= static_cast<int>(remaining.size())) {
        bool found = false;
        std::vector<int> idx(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i) idx[i] = i;
        do {
            ZPoly prod = ZPoly::constant(cur.lead());
            for (int i : idx) prod = reduce_pos(prod * remaining[i], m);
            ZPoly cand = primitive_part(reduce_sym(prod, m));
            if (cand.degree() < 1) continue;
            QPoly q, r;
            divmod(to_qpoly(cur), to_qpoly(cand), q, r);
            if (r.is_zero()) {
                result.push_back(cand);
                cur = primitive_part(q);
                std::vector<ZPoly> rest;
                for (int i = 0; i < static_cast<int>(remaining.size()); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(remaining[i]);
                remaining = rest;
                found = true;
                break;
            }
        } while (next_combination(idx, static_cast<int>(remaining.size())));
        if (!found) ++s;
    }
    if (cur.degree() >= 1) result.push_back(primitive_part(cur));
    return result;
}

} // namespace

std::vector<ZFactor> factor_over_q(const ZPoly& f0)
{
    if (f0.is_zero()) throw DomainError("cannot factor the zero polynomial");
    std::vector<ZFactor> out;
    ZPoly f = primitive_part(f0);
    if (f.degree() < 1) return out;
    // Yun's squarefree decomposition over Q
    QPoly a = to_qpoly(f);
    QPoly b = gcd(a, a.derivative());
    QPoly c, tmp;
    divmod(a, b, c, tmp);
    QPoly d;
    {
        QPoly da = a.derivative();
        QPoly q1, q2;
        divmod(da, b, q1, tmp);
        d = q1 - c.derivative();
    }
    int i = 1;
    while (c.degree() > 0) {
        QPoly g = gcd(c, d);
        if (g.degree() > 0) {
            for (auto& h : factor_squarefree(primitive_part(g))) out.push_back({h, i});
        }
        QPoly c2, d2;
        divmod(c, g, c2, tmp);
        divmod(d, g, d2, tmp);
        d = d2 - c2.derivative();
        c = c2;
        ++i;
    }
    std::sort(out.begin(), out.end(), [](const ZFactor& x, const ZFactor& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        if (x.factor.coeffs() != y.factor.coeffs()) return x.factor.coeffs() < y.factor.coeffs();
        return x.multiplicity < y.multiplicity;
    });
    return out;
}

bool is_irreducible_over_q(const ZPoly& f)
{
    if (f.degree() < 1) return false;
    auto fac = factor_over_q(f);
    return fac.size() == 1 && fac[0].multiplicity == 1;
}

} // namespace flt
