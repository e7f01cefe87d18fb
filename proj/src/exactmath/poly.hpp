#pragma once

#include "exactmath/bigint.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flt {

// Dense univariate polynomial, coefficients lowest degree first. The zero
// polynomial has no coefficients; otherwise the leading coefficient is
// nonzero.
template <typename T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

    static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
    static Poly monomial(const T& a, int deg)
    {
        std::vector<T> c(static_cast<size_t>(deg) + 1);
        c[deg] = a;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const T& lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // Coefficient of x^i (zero beyond the degree).
    T operator[](int i) const
    {
        if (i < 0 || i > degree()) return T(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<T>& coeffs() const { return c_; }

    void set(int i, const T& v)
    {
        if (i > degree()) c_.resize(static_cast<size_t>(i) + 1);
        c_[i] = v;
        normalize();
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a)
    {
        Poly r = a;
        for (auto& x : r.c_) x *= s;
        r.normalize();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    template <typename U>
    U eval(const U& x) const
    {
        U acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + U(c_[i]);
        return acc;
    }

    Poly derivative() const
    {
        if (degree() < 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    // p(-x)
    Poly negate_variable() const
    {
        Poly r = *this;
        for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    // p(x + a)
    Poly shift(const T& a) const
    {
        Poly r;
        Poly lin{a, T(1)};
        for (int i = degree(); i >= 0; --i) r = r * lin + Poly::constant(c_[i]);
        return r;
    }

  private:
    void normalize()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using ZPoly = Poly<Int>;
using QPoly = Poly<Rat>;

QPoly to_qpoly(const ZPoly& f);
// Scales to a primitive integer polynomial with positive leading coefficient.
ZPoly primitive_part(const QPoly& f);
ZPoly primitive_part(const ZPoly& f);
Int content(const ZPoly& f);

// Division over the rationals (g nonzero).
void divmod(const QPoly& f, const QPoly& g, QPoly& q, QPoly& r);
QPoly rem(const QPoly& f, const QPoly& g);
// Exact integer division by a monic (or unit-leading) divisor; throws if the
// remainder is nonzero.
ZPoly exact_div(const ZPoly& f, const ZPoly& g);
// Integer division when g has leading coefficient +-1.
void divmod_monic(const ZPoly& f, const ZPoly& g, ZPoly& q, ZPoly& r);
// Monic gcd over the rationals.
QPoly gcd(const QPoly& a, const QPoly& b);
ZPoly gcd(const ZPoly& a, const ZPoly& b);
bool is_squarefree(const ZPoly& f);

Rat resultant(const QPoly& f, const QPoly& g);
Int resultant(const ZPoly& f, const ZPoly& g);
// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f); degree-1 polynomials give 1.
Int discriminant(const ZPoly& f);

// Human-readable form such as "x^3 - 3*x - 1".
std::string to_string(const ZPoly& f, std::string_view var = "x");
std::string to_string(const QPoly& f, std::string_view var = "x");

// Parses integer-coefficient univariate expressions in x, e.g. "x^3 - 3*x - 1",
// "2x^2+x", "-x + 7". Whitespace-insensitive. Throws DomainError on bad input.
ZPoly parse_poly(std::string_view text);

} // namespace flt
