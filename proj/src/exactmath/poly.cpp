#include "exactmath/poly.hpp"

#include <cctype>
#include <sstream>

namespace flt {

QPoly to_qpoly(const ZPoly& f)
{
    std::vector<Rat> c;
    c.reserve(f.coeffs().size());
    for (auto& a : f.coeffs()) c.emplace_back(a);
    return QPoly(std::move(c));
}

Int content(const ZPoly& f)
{
    Int g = 0;
    for (auto& a : f.coeffs()) g = gcd(g, a);
    return g;
}

ZPoly primitive_part(const ZPoly& f)
{
    if (f.is_zero()) return f;
    Int g = content(f);
    if (f.lead() < 0) g = -g;
    std::vector<Int> c;
    for (auto& a : f.coeffs()) c.push_back(a / g);
    return ZPoly(std::move(c));
}

ZPoly primitive_part(const QPoly& f)
{
    if (f.is_zero()) return ZPoly();
    Int d = 1;
    for (auto& a : f.coeffs()) d = lcm(d, a.get_den());
    std::vector<Int> c;
    for (auto& a : f.coeffs()) {
        Rat s = a * d;
        c.push_back(s.get_num());
    }
    return primitive_part(ZPoly(std::move(c)));
}

void divmod(const QPoly& f, const QPoly& g, QPoly& q, QPoly& r)
{
    if (g.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> rc = f.coeffs();
    int dg = g.degree();
    int df = f.degree();
    if (df < dg) {
        q = QPoly();
        r = f;
        return;
    }
    std::vector<Rat> qc(static_cast<size_t>(df - dg) + 1);
    Rat inv = 1 / g.lead();
    for (int i = df; i >= dg; --i) {
        if (rc[i] == 0) continue;
        Rat t = rc[i] * inv;
        qc[i - dg] = t;
        for (int j = 0; j <= dg; ++j) rc[i - dg + j] -= t * g[j];
    }
    q = QPoly(std::move(qc));
    r = QPoly(std::move(rc));
}

QPoly rem(const QPoly& f, const QPoly& g)
{
    QPoly q, r;
    divmod(f, g, q, r);
    return r;
}

void divmod_monic(const ZPoly& f, const ZPoly& g, ZPoly& q, ZPoly& r)
{
    if (g.is_zero() || abs(g.lead()) != 1) throw DomainError("divmod_monic needs a unit leading coefficient");
    std::vector<Int> rc = f.coeffs();
    int dg = g.degree(), df = f.degree();
    if (df < dg) {
        q = ZPoly();
        r = f;
        return;
    }
    std::vector<Int> qc(static_cast<size_t>(df - dg) + 1);
    for (int i = df; i >= dg; --i) {
        if (rc[i] == 0) continue;
        Int t = rc[i] * g.lead();
        qc[i - dg] = t;
        for (int j = 0; j <= dg; ++j) rc[i - dg + j] -= t * g[j];
    }
    q = ZPoly(std::move(qc));
    r = ZPoly(std::move(rc));
}

ZPoly exact_div(const ZPoly& f, const ZPoly& g)
{
    QPoly q, r;
    divmod(to_qpoly(f), to_qpoly(g), q, r);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    std::vector<Int> c;
    for (auto& a : q.coeffs()) {
        if (a.get_den() != 1) throw DomainError("polynomial quotient is not integral");
        c.push_back(a.get_num());
    }
    return ZPoly(std::move(c));
}

QPoly gcd(const QPoly& a0, const QPoly& b0)
{
    QPoly a = a0, b = b0;
    while (!b.is_zero()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return Rat(1) / a.lead() * a;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b)
{
    return primitive_part(gcd(to_qpoly(a), to_qpoly(b)));
}

bool is_squarefree(const ZPoly& f)
{
    return gcd(to_qpoly(f), to_qpoly(f.derivative())).degree() == 0;
}

Rat resultant(const QPoly& f0, const QPoly& g0)
{
    if (f0.is_zero() || g0.is_zero()) return 0;
    QPoly f = f0, g = g0;
    Rat res = 1;
    while (true) {
        int m = f.degree(), n = g.degree();
        if (n == 0) {
            Rat p = 1;
            for (int i = 0; i < m; ++i) p *= g.lead();
            return res * p;
        }
        QPoly r = rem(f, g);
        if (r.is_zero()) return 0;
        int k = r.degree();
        if ((m % 2 == 1) && (n % 2 == 1)) res = -res;
        for (int i = 0; i < m - k; ++i) res *= g.lead();
        f = std::move(g);
        g = std::move(r);
    }
}

Int resultant(const ZPoly& f, const ZPoly& g)
{
    Rat r = resultant(to_qpoly(f), to_qpoly(g));
    return r.get_num();
}

Int discriminant(const ZPoly& f)
{
    if (f.is_zero()) throw DomainError("discriminant of the zero polynomial");
    int n = f.degree();
    if (n < 1) throw DomainError("discriminant of a constant polynomial");
    if (n == 1) return 1;
    Rat r = resultant(to_qpoly(f), to_qpoly(f.derivative())) / Rat(f.lead());
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r.get_num();
}

namespace {

template <typename T>
std::string poly_string(const Poly<T>& f, std::string_view var)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        T a = f[i];
        if (a == 0) continue;
        bool neg = a < 0;
        T mag = neg ? T(-a) : a;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace

std::string to_string(const ZPoly& f, std::string_view var) { return poly_string(f, var); }
std::string to_string(const QPoly& f, std::string_view var) { return poly_string(f, var); }

ZPoly parse_poly(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw DomainError("empty polynomial expression");
    std::vector<Int> coeffs;
    size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw DomainError("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    auto read_int = [&](Int& out) {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) return false;
        out = Int(s.substr(i, j - i));
        i = j;
        return true;
    };
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            fail("expected '+' or '-' at position " + std::to_string(i));
        }
        if (i >= s.size()) fail("dangling sign");
        Int coef = 1;
        bool have_coef = read_int(coef);
        int deg = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_coef) fail("'*' without a coefficient");
            ++i;
            if (i >= s.size() || s[i] != 'x') fail("expected 'x' after '*'");
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                Int e;
                if (!read_int(e)) fail("expected exponent after '^'");
                if (e > 1000) fail("exponent too large");
                deg = static_cast<int>(e.get_si());
            }
        } else if (!have_coef) {
            fail("expected a term at position " + std::to_string(i));
        }
        if (coeffs.size() <= static_cast<size_t>(deg)) coeffs.resize(static_cast<size_t>(deg) + 1);
        coeffs[deg] += sign * coef;
        any = true;
    }
    return ZPoly(std::move(coeffs));
}

} // namespace flt
