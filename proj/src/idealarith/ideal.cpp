#include "idealarith/ideal.hpp"

namespace flt {

namespace {

Int diag_product(const IntMatrix& H)
{
    Int d = 1;
    for (int i = 0; i < H.rows(); ++i) d *= H(i, i);
    return d;
}

// Generators times the integral basis, with a known multiple D of the norm.
Ideal ideal_from_rows(const FieldPtr& K, const std::vector<IntVec>& gens, const Int& D)
{
    int n = K->degree();
    HnfModAccumulator acc(n, D);
    for (auto& g : gens) {
        IntMatrix M = K->mul_matrix(g);
        for (int i = 0; i < n; ++i) acc.add(M.row(i));
    }
    return Ideal(K, acc.basis());
}

} // namespace

Ideal::Ideal(FieldPtr K, IntMatrix H) : K_(std::move(K)), H_(std::move(H)), norm_(diag_product(H_)) {}

Ideal Ideal::unit(const FieldPtr& K) { return Ideal(K, IntMatrix::identity(K->degree())); }

Ideal Ideal::from_integer(const FieldPtr& K, const Int& a)
{
    if (a == 0) throw DomainError("zero ideal");
    IntMatrix H = IntMatrix::identity(K->degree());
    Int b = abs(a);
    for (int i = 0; i < K->degree(); ++i) H(i, i) = b;
    return Ideal(K, H);
}

Ideal Ideal::principal(const FieldPtr& K, const IntVec& g) { return from_generators(K, {g}); }

Ideal Ideal::from_generators(const FieldPtr& K, const std::vector<IntVec>& gens)
{
    Int D = 0;
    std::vector<IntVec> nz;
    for (auto& g : gens) {
        Int N = K->norm(g);
        if (N == 0) continue;
        D = gcd(D, N);
        nz.push_back(g);
    }
    if (nz.empty()) throw DomainError("zero ideal");
    return ideal_from_rows(K, nz, abs(D));
}

Int Ideal::min_integer() const
{
    // a * e_0 = c * H with H upper triangular: a is the least common
    // denominator of the first row of H^{-1}
    RatMatrix Hi = inverse(to_rat(H_));
    Int a = 1;
    for (int j = 0; j < Hi.cols(); ++j) a = lcm(a, Hi(0, j).get_den());
    return a;
}

bool Ideal::contains(const IntVec& x) const
{
    int n = H_.rows();
    IntVec r = x;
    for (int j = 0; j < n; ++j) {
        if (!divides(H_(j, j), r[j])) return false;
        Int c = r[j] / H_(j, j);
        if (c != 0)
            for (int k = j; k < n; ++k) r[k] -= c * H_(j, k);
    }
    return true;
}

bool Ideal::contains(const Ideal& J) const
{
    for (int i = 0; i < J.H_.rows(); ++i)
        if (!contains(J.H_.row(i))) return false;
    return true;
}

Ideal Ideal::pow(unsigned long e) const
{
    Ideal r = unit(K_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Ideal operator*(const Ideal& a, const Ideal& b)
{
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    const FieldPtr& K = a.K_;
    int n = K->degree();
    Int D = a.norm_ * b.norm_;
    HnfModAccumulator acc(n, D);
    // a * b is spanned by products of the two Z-bases
    for (int i = 0; i < n; ++i) {
        IntMatrix M = K->mul_matrix(a.H_.row(i));
        for (int j = 0; j < n; ++j) acc.add(row_times(b.H_.row(j), M));
    }
    return Ideal(K, acc.basis());
}

Ideal operator+(const Ideal& a, const Ideal& b)
{
    int n = a.K_->degree();
    HnfModAccumulator acc(n, gcd(a.min_integer(), b.min_integer()));
    for (int i = 0; i < n; ++i) {
        acc.add(a.H_.row(i));
        acc.add(b.H_.row(i));
    }
    return Ideal(a.K_, acc.basis());
}

void for_each_box_element(const Ideal& I, long max_count, const std::function<bool(const IntVec&)>& visit)
{
    int n = I.degree();
    long seen = 0;
    for (long B = 1;; ++B) {
        std::vector<long> c(static_cast<size_t>(n), -B);
        while (true) {
            long mx = 0;
            for (long v : c) mx = std::max(mx, v < 0 ? -v : v);
            if (mx == B) {
                if (++seen > max_count) throw CapError("computation cap: element search exceeded " + std::to_string(max_count) + " candidates");
                IntVec x(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) {
                    if (c[i] == 0) continue;
                    for (int j = i; j < n; ++j) x[j] += c[i] * I.hnf()(i, j);
                }
                if (visit(x)) return;
            }
            int k = n - 1;
            while (k >= 0 && c[k] == B) c[k--] = -B;
            if (k < 0) break;
            ++c[k];
        }
    }
}

std::pair<Int, IntVec> Ideal::two_element() const
{
    Int a = min_integer();
    if (is_unit()) return {Int(1), K_->one()};
    // principal by an integer
    if (*this == from_integer(K_, a)) return {a, K_->from_integer(a)};
    std::pair<Int, IntVec> out;
    for_each_box_element(*this, 2000000, [&](const IntVec& x) {
        Ideal J = ideal_from_rows(K_, {x}, a);
        if (J == *this) {
            out = {a, x};
            return true;
        }
        return false;
    });
    return out;
}

} // namespace flt
