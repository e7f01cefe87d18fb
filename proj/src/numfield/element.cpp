#include "numfield/field.hpp"

#include <cmath>

namespace flt {

IntVec NumberField::one() const { return unit_vector(0); }

IntVec NumberField::unit_vector(int i) const
{
    IntVec v(static_cast<size_t>(n_));
    v[i] = 1;
    return v;
}

RatVec NumberField::from_int(const IntVec& x) const { return RatVec(x.begin(), x.end()); }

IntVec NumberField::from_integer(const Int& a) const
{
    IntVec v(static_cast<size_t>(n_));
    v[0] = a;
    return v;
}

RatVec NumberField::from_rational(const Rat& a) const
{
    RatVec v(static_cast<size_t>(n_));
    v[0] = a;
    return v;
}

RatVec NumberField::from_power(const RatVec& power_coords) const { return row_times(power_coords, basis_inv_); }

RatVec NumberField::theta() const
{
    RatVec p(static_cast<size_t>(n_));
    if (n_ == 1)
        p[0] = -poly_[0];
    else
        p[1] = 1;
    return from_power(p);
}

RatVec NumberField::from_poly(const QPoly& g) const
{
    QPoly r = rem(g, to_qpoly(poly_));
    RatVec p(static_cast<size_t>(n_));
    for (int i = 0; i <= r.degree(); ++i) p[i] = r[i];
    return from_power(p);
}

RatVec NumberField::to_power(const RatVec& x) const { return row_times(x, basis_); }

QPoly NumberField::to_poly(const RatVec& x) const { return QPoly(to_power(x)); }

IntVec NumberField::mul(const IntVec& a, const IntVec& b) const
{
    IntVec out(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (b[j] == 0) continue;
            Int c = a[i] * b[j];
            const IntVec& t = table(i, j);
            for (int k = 0; k < n_; ++k)
                if (t[k] != 0) out[k] += c * t[k];
        }
    }
    return out;
}

RatVec NumberField::mul(const RatVec& a, const RatVec& b) const
{
    RatVec out(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (b[j] == 0) continue;
            Rat c = a[i] * b[j];
            const IntVec& t = table(i, j);
            for (int k = 0; k < n_; ++k)
                if (t[k] != 0) out[k] += c * t[k];
        }
    }
    return out;
}

IntVec NumberField::pow(const IntVec& a, unsigned long e) const
{
    IntVec acc = one(), base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

RatVec NumberField::pow(const RatVec& a, long e) const
{
    RatVec base = e < 0 ? inverse(a) : a;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    RatVec acc = from_int(one());
    while (k) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return acc;
}

IntMatrix NumberField::mul_matrix(const IntVec& a) const
{
    IntMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i) m.set_row(i, mul(a, unit_vector(i)));
    return m;
}

RatMatrix NumberField::mul_matrix(const RatVec& a) const
{
    RatMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i) m.set_row(i, mul(a, from_int(unit_vector(i))));
    return m;
}

RatVec NumberField::inverse(const RatVec& a) const
{
    bool zero = true;
    for (auto& x : a)
        if (x != 0) zero = false;
    if (zero) throw DomainError("inverse of zero");
    // y * M_a = 1
    return solve_left(mul_matrix(a), from_int(one()));
}

Int NumberField::norm(const IntVec& a) const { return det(mul_matrix(a)); }

Rat NumberField::norm(const RatVec& a) const { return det(mul_matrix(a)); }

Int NumberField::trace(const IntVec& a) const
{
    Int t = 0;
    for (int i = 0; i < n_; ++i) t += a[i] * trace_[i];
    return t;
}

Rat NumberField::trace(const RatVec& a) const
{
    Rat t = 0;
    for (int i = 0; i < n_; ++i) t += a[i] * trace_[i];
    return t;
}

QPoly NumberField::charpoly(const RatVec& a) const
{
    // Faddeev-LeVerrier
    RatMatrix A = mul_matrix(a);
    int n = n_;
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    c[n] = 1;
    RatMatrix M(n, n);
    for (int k = 1; k <= n; ++k) {
        RatMatrix AM = A * M;
        for (int i = 0; i < n; ++i) AM(i, i) += c[n - k + 1];
        M = AM;
        RatMatrix AMk = A * M;
        Rat tr = 0;
        for (int i = 0; i < n; ++i) tr += AMk(i, i);
        c[n - k] = -tr / k;
    }
    return QPoly(c);
}

QPoly NumberField::minpoly(const RatVec& a) const
{
    QPoly cp = charpoly(a);
    QPoly g = gcd(cp, cp.derivative());
    QPoly q, r;
    divmod(cp, g, q, r);
    return Rat(1) / q.lead() * q;
}

bool NumberField::is_integral(const RatVec& a)
{
    for (auto& x : a)
        if (x.get_den() != 1) return false;
    return true;
}

IntVec NumberField::to_int(const RatVec& a)
{
    IntVec v;
    v.reserve(a.size());
    for (auto& x : a) {
        if (x.get_den() != 1) throw DomainError("element is not integral");
        v.push_back(x.get_num());
    }
    return v;
}

std::vector<int> NumberField::real_signs(const RatVec& a) const
{
    QPoly g = to_poly(a);
    if (g.is_zero()) throw DomainError("sign of zero");
    std::vector<int> s;
    for (auto iv : real_roots_) s.push_back(sign_at_root(poly_, iv, g));
    return s;
}

bool NumberField::is_totally_positive(const RatVec& a) const
{
    for (int s : real_signs(a))
        if (s < 0) return false;
    return true;
}

std::vector<Complex> NumberField::embed(const RatVec& a) const
{
    RatVec p = to_power(a);
    std::vector<long double> c;
    for (auto& x : p) c.push_back(static_cast<long double>(x.get_d()));
    std::vector<Complex> out;
    for (auto& z : approx_roots_) {
        Complex acc = 0;
        for (int i = n_ - 1; i >= 0; --i) acc = acc * z + c[i];
        out.push_back(acc);
    }
    return out;
}

long double NumberField::t2_approx(const RatVec& a) const
{
    auto e = embed(a);
    long double t = 0;
    for (int j = 0; j < static_cast<int>(e.size()); ++j) t += (j < r_ ? 1 : 2) * std::norm(e[j]);
    return t;
}

RatMatrix NumberField::t2_gram() const
{
    if (!t2_) throw DomainError("exact T2 form needs a totally real or CM field");
    return *t2_;
}

RatMatrix NumberField::compute_t2() const
{
    RatMatrix G(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            IntVec tj = conj_->row(j);
            G(i, j) = trace(mul(unit_vector(i), tj));
        }
    return G;
}

IntMatrix NumberField::automorphism(const RatVec& theta_image) const
{
    QPoly img = to_poly(theta_image);
    QPoly fq = to_qpoly(poly_);
    // f(img) must vanish modulo f
    QPoly acc;
    for (int i = poly_.degree(); i >= 0; --i) acc = rem(acc * img + QPoly::constant(Rat(poly_[i])), fq);
    if (!acc.is_zero()) throw VerificationError("automorphism: image of theta is not a root");
    IntMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i) {
        QPoly w = QPoly(basis_.row(i));
        QPoly v;
        for (int k = w.degree(); k >= 0; --k) v = rem(v * img + QPoly::constant(w[k]), fq);
        RatVec coords = from_poly(v);
        if (!is_integral(coords)) throw VerificationError("automorphism does not preserve the maximal order");
        m.set_row(i, to_int(coords));
    }
    return m;
}

RatVec NumberField::apply(const IntMatrix& m, const RatVec& a) const { return row_times(a, to_rat(m)); }

} // namespace flt
