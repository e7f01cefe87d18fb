#include "numfield/kpoly.hpp"

#include "exactmath/factor_z.hpp"

#include <algorithm>

namespace flt {

namespace {

bool is_zero_elt(const RatVec& a)
{
    for (auto& x : a)
        if (x != 0) return false;
    return true;
}

void knormalize(KPoly& a)
{
    while (!a.empty() && is_zero_elt(a.back())) a.pop_back();
}

RatVec add(const RatVec& a, const RatVec& b)
{
    RatVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b)
{
    RatVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// Interpolating polynomial through (x_i, y_i), x_i = 0..m.
QPoly interpolate(const std::vector<Rat>& ys)
{
    // Newton divided differences on nodes 0..m
    int m = static_cast<int>(ys.size()) - 1;
    std::vector<Rat> d = ys;
    for (int j = 1; j <= m; ++j)
        for (int i = m; i >= j; --i) d[i] = (d[i] - d[i - 1]) / Rat(j);
    QPoly p = QPoly::constant(d[m]);
    for (int i = m - 1; i >= 0; --i) p = p * QPoly({Rat(-i), Rat(1)}) + QPoly::constant(d[i]);
    return p;
}

} // namespace

int kdeg(const KPoly& a) { return static_cast<int>(a.size()) - 1; }

KPoly kpoly_from_z(const NumberField& K, const ZPoly& g)
{
    KPoly a;
    for (auto& c : g.coeffs()) a.push_back(K.from_rational(Rat(c)));
    knormalize(a);
    return a;
}

KPoly kpoly_from_q(const NumberField& K, const QPoly& g)
{
    KPoly a;
    for (auto& c : g.coeffs()) a.push_back(K.from_rational(c));
    knormalize(a);
    return a;
}

KPoly kmul(const NumberField& K, const KPoly& a, const KPoly& b)
{
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1, RatVec(static_cast<size_t>(K.degree())));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], K.mul(a[i], b[j]));
    knormalize(r);
    return r;
}

void kdivmod(const NumberField& K, const KPoly& a, const KPoly& b, KPoly& q, KPoly& r)
{
    if (b.empty()) throw DomainError("polynomial division by zero");
    r = a;
    knormalize(r);
    int db = kdeg(b);
    q.clear();
    if (kdeg(r) < db) return;
    q.assign(static_cast<size_t>(kdeg(r) - db + 1), RatVec(static_cast<size_t>(K.degree())));
    RatVec inv = K.inverse(b.back());
    for (int i = kdeg(r); i >= db; --i) {
        if (is_zero_elt(r[i])) continue;
        RatVec t = K.mul(r[i], inv);
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], K.mul(t, b[j]));
    }
    knormalize(r);
    knormalize(q);
}

KPoly kgcd(const NumberField& K, KPoly a, KPoly b)
{
    knormalize(a);
    knormalize(b);
    while (!b.empty()) {
        KPoly q, r;
        kdivmod(K, a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    RatVec inv = K.inverse(a.back());
    for (auto& c : a) c = K.mul(c, inv);
    return a;
}

KPoly kshift(const NumberField& K, const KPoly& a, const RatVec& c)
{
    // Horner: r = r * (x + c) + a_i
    KPoly r;
    KPoly lin{c, K.from_int(K.one())};
    for (int i = kdeg(a); i >= 0; --i) {
        r = kmul(K, r, lin);
        if (r.empty()) r.push_back(RatVec(static_cast<size_t>(K.degree())));
        r[0] = add(r[0], a[i]);
        knormalize(r);
    }
    return r;
}

RatVec keval(const NumberField& K, const KPoly& a, const RatVec& x)
{
    RatVec acc(static_cast<size_t>(K.degree()));
    for (int i = kdeg(a); i >= 0; --i) acc = add(K.mul(acc, x), a[i]);
    return acc;
}

std::vector<KPoly> factor_over_field(const NumberField& K, const KPoly& g0)
{
    KPoly g = g0;
    knormalize(g);
    if (kdeg(g) < 1) return {};
    if (kdeg(g) == 1 || K.degree() == 1) {
        if (K.degree() == 1) {
            // over Q: factor the rational polynomial directly
            std::vector<Rat> c;
            for (auto& e : g) c.push_back(e[0]);
            auto fs = factor_over_q(primitive_part(QPoly(c)));
            std::vector<KPoly> out;
            for (auto& f : fs) {
                KPoly k = kpoly_from_z(K, f.factor);
                out.push_back(kgcd(K, k, k));
            }
            return out;
        }
        return {kgcd(K, g, g)};
    }
    int D = K.degree() * kdeg(g);
    RatVec th = K.theta();
    for (int k = 0; k < 50; ++k) {
        RatVec shift(static_cast<size_t>(K.degree()));
        for (int i = 0; i < K.degree(); ++i) shift[i] = -k * th[i];
        KPoly G = kshift(K, g, shift);  // g(x - k theta)
        std::vector<Rat> ys;
        for (int x0 = 0; x0 <= D; ++x0) ys.push_back(K.norm(keval(K, G, K.from_rational(Rat(x0)))));
        QPoly N = interpolate(ys);
        if (gcd(N, N.derivative()).degree() > 0) continue;
        auto fs = factor_over_q(primitive_part(N));
        std::vector<KPoly> out;
        RatVec back(static_cast<size_t>(K.degree()));
        for (int i = 0; i < K.degree(); ++i) back[i] = k * th[i];
        for (auto& f : fs) {
            KPoly h = kgcd(K, G, kpoly_from_z(K, f.factor));
            if (kdeg(h) < 1) continue;
            out.push_back(kgcd(K, kshift(K, h, back), kshift(K, h, back)));
        }
        return out;
    }
    throw InconclusiveError("factor_over_field: no squarefree norm found");
}

std::vector<RatVec> roots_in_field(const NumberField& K, const ZPoly& g)
{
    std::vector<RatVec> roots;
    for (auto& f : factor_over_field(K, kpoly_from_z(K, g))) {
        if (kdeg(f) != 1) continue;
        RatVec r = f[0];
        for (auto& x : r) x = -x;
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool fields_isomorphic(const NumberField& A, const NumberField& B)
{
    if (A.degree() != B.degree() || A.disc() != B.disc() || A.r() != B.r()) return false;
    if (A.poly() == B.poly()) return true;
    return !roots_in_field(A, B.poly()).empty();
}

} // namespace flt
