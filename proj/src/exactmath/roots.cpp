#include "exactmath/roots.hpp"

#include <algorithm>

namespace flt {

namespace {

int sgn(const Rat& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs)
{
    int n = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++n;
        last = s;
    }
    return n;
}

int variations_at(const std::vector<QPoly>& chain, const Rat& x)
{
    std::vector<int> s;
    s.reserve(chain.size());
    for (auto& p : chain) s.push_back(sgn(p.eval(x)));
    return sign_changes(s);
}

int variations_at_infinity(const std::vector<QPoly>& chain, bool positive)
{
    std::vector<int> s;
    for (auto& p : chain) {
        int ls = sgn(p.lead());
        if (!positive && p.degree() % 2 == 1) ls = -ls;
        s.push_back(ls);
    }
    return sign_changes(s);
}

// Strict bound on the absolute value of every root (Cauchy).
Rat root_bound(const ZPoly& f)
{
    Rat m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rat r = Rat(abs(f[i])) / Rat(abs(f.lead()));
        if (r > m) m = r;
    }
    return m + 1;
}

struct Isolator {
    const ZPoly& f;
    std::vector<QPoly> chain;
    std::vector<RationalInterval> out;

    void run(const Rat& a, const Rat& b, int va, int vb)
    {
        int count = va - vb;
        if (count <= 0) return;
        if (count == 1) {
            out.push_back({a, b});
            return;
        }
        Rat mid = (a + b) / 2;
        if (f.eval(Rat(mid)) == 0) {
            // step away from the exact root until it is the only one enclosed
            Rat eps = (b - a) / 4;
            while (true) {
                Rat l = mid - eps, r = mid + eps;
                if (f.eval(l) != 0 && f.eval(r) != 0 && variations_at(chain, l) - variations_at(chain, r) == 1) {
                    run(a, l, va, variations_at(chain, l));
                    out.push_back({mid, mid});
                    run(r, b, variations_at(chain, r), vb);
                    return;
                }
                eps /= 2;
            }
        }
        int vm = variations_at(chain, mid);
        run(a, mid, va, vm);
        run(mid, b, vm, vb);
    }
};

} // namespace

std::vector<QPoly> sturm_chain(const ZPoly& f)
{
    std::vector<QPoly> chain;
    chain.push_back(to_qpoly(f));
    chain.push_back(to_qpoly(f.derivative()));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        QPoly r = rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

int count_real_roots(const ZPoly& f)
{
    if (f.degree() < 1) return 0;
    auto chain = sturm_chain(f);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<RationalInterval> isolate_real_roots(const ZPoly& f)
{
    if (f.is_zero()) throw DomainError("isolate_real_roots: zero polynomial");
    if (f.degree() < 1) return {};
    ZPoly g = gcd(f, f.derivative());
    if (g.degree() > 0) throw DomainError("isolate_real_roots: polynomial is not squarefree, repeated factor " + to_string(g));
    Isolator iso{f, sturm_chain(f), {}};
    Rat B = root_bound(f);
    iso.run(-B, B, variations_at(iso.chain, -B), variations_at(iso.chain, B));
    std::sort(iso.out.begin(), iso.out.end(), [](const RationalInterval& x, const RationalInterval& y) { return x.lo < y.lo; });
    return iso.out;
}

RationalInterval refine_root(const ZPoly& f, RationalInterval iv, const Rat& width)
{
    if (iv.lo == iv.hi) return iv;
    int slo = sgn(f.eval(iv.lo));
    while (iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int sm = sgn(f.eval(mid));
        if (sm == 0) return {mid, mid};
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

RationalInterval eval_interval(const QPoly& g, const RationalInterval& iv)
{
    // Horner in interval arithmetic
    Rat lo = 0, hi = 0;
    for (int i = g.degree(); i >= 0; --i) {
        Rat c[4] = {lo * iv.lo, lo * iv.hi, hi * iv.lo, hi * iv.hi};
        Rat mn = c[0], mx = c[0];
        for (auto& v : c) {
            if (v < mn) mn = v;
            if (v > mx) mx = v;
        }
        lo = mn + g[i];
        hi = mx + g[i];
    }
    return {lo, hi};
}

int sign_at_root(const ZPoly& f, RationalInterval& iv, const QPoly& g)
{
    if (g.is_zero()) throw DomainError("sign_at_root: zero value");
    if (iv.lo == iv.hi) {
        int s = sgn(g.eval(iv.lo));
        if (s == 0) throw DomainError("sign_at_root: value vanishes at the root");
        return s;
    }
    // g(alpha) == 0 iff gcd(f, g) vanishes at alpha
    QPoly h = gcd(to_qpoly(f), g);
    if (h.degree() > 0) {
        ZPoly hz = primitive_part(h);
        RationalInterval t = iv;
        // alpha is a root of h iff h changes sign on a fine enough interval
        auto cnt = [&](const RationalInterval& r) {
            auto ch = sturm_chain(hz);
            return variations_at(ch, r.lo) - variations_at(ch, r.hi) + (hz.eval(r.lo) == 0 ? 1 : 0);
        };
        if (cnt(t) > 0) {
            // the root of f in iv is unique, so a root of h there is alpha
            throw DomainError("sign_at_root: value vanishes at the root");
        }
    }
    Rat w = iv.width();
    for (int it = 0; it < 4000; ++it) {
        RationalInterval e = eval_interval(g, iv);
        if (e.lo > 0) return 1;
        if (e.hi < 0) return -1;
        w /= 4;
        iv = refine_root(f, iv, w);
        if (iv.lo == iv.hi) {
            int s = sgn(g.eval(iv.lo));
            if (s == 0) throw DomainError("sign_at_root: value vanishes at the root");
            return s;
        }
    }
    throw InconclusiveError("sign_at_root: interval refinement did not separate the value from zero");
}

} // namespace flt
