#include "numfield/field.hpp"

#include "exactmath/factor_z.hpp"
#include "exactmath/polymodp.hpp"
#include "exactmath/primes.hpp"

#include <algorithm>
#include <cmath>

namespace flt {

namespace {

// Product of power-basis coordinate vectors modulo f (monic).
RatVec power_mul(const ZPoly& f, const RatVec& a, const RatVec& b)
{
    int n = f.degree();
    std::vector<Rat> prod(static_cast<size_t>(2 * n - 1));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    for (int k = 2 * n - 2; k >= n; --k) {
        if (prod[k] == 0) continue;
        Rat c = prod[k];
        prod[k] = 0;
        for (int j = 0; j < n; ++j) prod[k - n + j] -= c * f[j];
    }
    prod.resize(static_cast<size_t>(n));
    return prod;
}

RatMatrix order_table_rat(const ZPoly& f, const RatMatrix& B, const RatMatrix& Binv, int i, int j)
{
    RatVec p = power_mul(f, B.row(i), B.row(j));
    RatMatrix out(1, B.cols());
    out.set_row(0, row_times(p, Binv));
    return out;
}

// Integral multiplication table of the order with basis B.
std::vector<IntVec> order_table(const ZPoly& f, const RatMatrix& B)
{
    int n = B.rows();
    RatMatrix Binv = inverse(B);
    std::vector<IntVec> t(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            RatVec c = order_table_rat(f, B, Binv, i, j).row(0);
            IntVec ci(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k) {
                if (c[k].get_den() != 1) throw VerificationError("basis does not span an order");
                ci[k] = c[k].get_num();
            }
            t[static_cast<size_t>(i) * n + j] = ci;
            t[static_cast<size_t>(j) * n + i] = ci;
        }
    return t;
}

IntVec table_mul_mod(const std::vector<IntVec>& T, int n, const IntVec& a, const IntVec& b, const Int& p)
{
    IntVec out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            Int c = a[i] * b[j];
            const IntVec& t = T[static_cast<size_t>(i) * n + j];
            for (int k = 0; k < n; ++k)
                if (t[k] != 0) out[k] += c * t[k];
        }
    }
    for (auto& x : out) x = mod(x, p);
    return out;
}

// One enlargement step of Round 2 at p. Returns nullopt if the order is
// already p-maximal.
std::optional<RatMatrix> round2_step(const ZPoly& f, const RatMatrix& B, const Int& p)
{
    int n = B.rows();
    auto T = order_table(f, B);
    // p-radical: kernel of Frobenius x -> x^(p^j) with p^j >= n
    Int q = p;
    while (q < n) q *= p;
    IntMatrix frob(n, n);
    RatVec one_pow(static_cast<size_t>(n));
    one_pow[0] = 1;
    RatVec one_c = row_times(one_pow, inverse(B));
    for (int i = 0; i < n; ++i) {
        IntVec acc(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) acc[k] = one_c[k].get_num();
        IntVec base(static_cast<size_t>(n));
        base[i] = 1;
        Int ex = q;
        while (ex > 0) {
            if (mpz_odd_p(ex.get_mpz_t())) acc = table_mul_mod(T, n, acc, base, p);
            ex >>= 1;
            if (ex > 0) base = table_mul_mod(T, n, base, base, p);
        }
        frob.set_row(i, acc);
    }
    auto ker = left_kernel_mod_p(frob, p);
    IntMatrix km(0, n);
    for (auto& v : ker) km.append_row(v);
    IntMatrix I = hnf_mod(km, p);  // radical in order coordinates
    RatMatrix Iinv = inverse(to_rat(I));
    // multipliers: y with y * gamma_j in p I for all j
    IntMatrix big(n, n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            IntVec gj = I.row(j);
            IntVec prod(static_cast<size_t>(n));
            for (int l = 0; l < n; ++l) {
                if (gj[l] == 0) continue;
                const IntVec& t = T[static_cast<size_t>(i) * n + l];
                for (int k = 0; k < n; ++k) prod[k] += gj[l] * t[k];
            }
            RatVec c = row_times(RatVec(prod.begin(), prod.end()), Iinv);
            for (int k = 0; k < n; ++k) {
                if (c[k].get_den() != 1) throw VerificationError("radical is not an ideal");
                big(i, j * n + k) = mod(c[k].get_num(), p);
            }
        }
    }
    auto ker2 = left_kernel_mod_p(big, p);
    if (ker2.empty()) return std::nullopt;
    IntMatrix km2(0, n);
    for (auto& v : ker2) km2.append_row(v);
    IntMatrix U = hnf_mod(km2, p);
    RatMatrix Ur = to_rat(U);
    Rat invp = Rat(1) / Rat(p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Ur(i, j) *= invp;
    return Ur * B;
}

RatMatrix round2(const ZPoly& f, RatMatrix B, const Int& p)
{
    for (int guard = 0; guard < 1000; ++guard) {
        auto next = round2_step(f, B, p);
        if (!next) return B;
        B = *next;
    }
    throw CapError("round 2 did not terminate");
}

// Canonical integral basis: omega_0 = 1, omega_i of degree i in theta with
// positive leading coefficient, lower coefficients reduced.
RatMatrix normalize_basis(const RatMatrix& B)
{
    int n = B.rows();
    Int d = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d = lcm(d, B(i, j).get_den());
    IntMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, n - 1 - j) = Rat(B(i, j) * d).get_num();
    IntMatrix H = hnf_only(M);
    RatMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(n - 1 - i, n - 1 - j) = Rat(H(i, j)) / Rat(d);
    return out;
}

} // namespace

bool dedekind_p_maximal(const ZPoly& f, const Int& p)
{
    if (p >= Int(1) << 31) throw CapError("Dedekind test needs a word-size prime");
    auto up = static_cast<std::uint64_t>(p.get_ui());
    FpPoly fp = FpPoly::from_zpoly(f, up);
    auto facs = factor_mod_p(fp);
    FpPoly G(up, {1});
    for (auto& fa : facs) G = G * fa.factor;
    FpPoly H, r;
    divmod(fp, G, H, r);
    ZPoly diff = f - G.to_zpoly() * H.to_zpoly();
    std::vector<Int> c;
    for (auto& a : diff.coeffs()) {
        if (!divides(p, a)) throw VerificationError("Dedekind: lift is not congruent to f");
        c.push_back(a / p);
    }
    FpPoly F = FpPoly::from_zpoly(ZPoly(c), up);
    FpPoly g = gcd(gcd(F, G), H);
    return g.degree() == 0;
}

std::vector<Complex> approx_roots(const ZPoly& f)
{
    int n = f.degree();
    std::vector<Complex> z;
    if (n < 1) return z;
    std::vector<long double> c;
    for (auto& a : f.coeffs()) c.push_back(a.get_d() / f.lead().get_d());
    if (n == 1) return {Complex(-c[0], 0)};
    long double R = 0;
    for (int i = 0; i < n; ++i) R = std::max(R, std::abs(c[i]));
    R = std::min<long double>(R + 1, 1e6L);
    for (int k = 0; k < n; ++k) {
        long double ang = 2 * 3.14159265358979323846L * k / n + 0.4L;
        z.push_back(std::polar(R * 0.9L, ang));
    }
    auto eval = [&](const Complex& x, Complex& p, Complex& dp) {
        p = 1;
        dp = 0;
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + c[i];
        }
    };
    for (int it = 0; it < 500; ++it) {
        long double maxstep = 0;
        for (int k = 0; k < n; ++k) {
            Complex p, dp;
            eval(z[k], p, dp);
            if (std::abs(p) == 0) continue;
            Complex ratio = p / dp;
            Complex sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            Complex step = ratio / (1.0L - ratio * sum);
            z[k] -= step;
            maxstep = std::max(maxstep, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
        }
        if (maxstep < 1e-17L) break;
    }
    // Newton polish
    for (auto& x : z)
        for (int it = 0; it < 3; ++it) {
            Complex p, dp;
            eval(x, p, dp);
            if (std::abs(dp) > 0) x -= p / dp;
        }
    return z;
}

namespace {

void attach_roots(const ZPoly& f, int r, const std::vector<RationalInterval>& real, std::vector<Complex>& out)
{
    int n = f.degree();
    out.clear();
    for (auto iv : real) {
        RationalInterval t = refine_root(f, iv, Rat(1, Int(1) << 90));
        Rat mid = (t.lo + t.hi) / 2;
        out.emplace_back(static_cast<long double>(mid.get_d()) +
                             static_cast<long double>(Rat(mid - Rat(mid.get_d())).get_d()),
                         0.0L);
    }
    if (r == n) return;
    auto z = approx_roots(f);
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) { return std::abs(a.imag()) < std::abs(b.imag()); });
    std::vector<Complex> cx;
    for (size_t i = static_cast<size_t>(r); i < z.size(); ++i)
        if (z[i].imag() > 0) cx.push_back(z[i]);
    if (static_cast<int>(cx.size()) * 2 != n - r)
        throw InconclusiveError("numerical root finder failed to separate complex roots of " + to_string(f));
    std::sort(cx.begin(), cx.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    out.insert(out.end(), cx.begin(), cx.end());
}

// The automorphism must act as complex conjugation on every complex root.
void check_conjugation(const NumberField& K, const RatVec& img)
{
    for (auto& z : K.approx_roots()) {
        Complex acc = 0;
        for (int i = static_cast<int>(img.size()) - 1; i >= 0; --i) acc = acc * z + static_cast<long double>(img[i].get_d());
        if (std::abs(acc - std::conj(z)) > 1e-6L * (1 + std::abs(z)))
            throw VerificationError("supplied automorphism is not complex conjugation");
    }
}

} // namespace

class FieldBuilder {
  public:
    static FieldPtr make(const ZPoly& f, const RatMatrix& B0, std::optional<RatVec> conj_theta)
    {
        auto K = std::make_shared<NumberField>();
        int n = f.degree();
        K->poly_ = f;
        K->n_ = n;
        K->basis_ = normalize_basis(B0);
        K->basis_inv_ = inverse(K->basis_);
        if (K->basis_(0, 0) != 1) throw VerificationError("order does not contain 1 as first basis element");
        K->table_ = order_table(f, K->basis_);
        K->trace_.assign(static_cast<size_t>(n), Int(0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) K->trace_[i] += K->table(i, k)[k];
        Rat dB = det(K->basis_);
        Rat idx = 1 / abs(dB);
        if (idx.get_den() != 1) throw VerificationError("order index is not an integer");
        K->index_ = idx.get_num();
        Int df = discriminant(f);
        if (!divides(K->index_ * K->index_, df)) throw VerificationError("index squared does not divide disc(f)");
        K->disc_ = df / (K->index_ * K->index_);
        K->r_ = count_real_roots(f);
        K->s_ = (n - K->r_) / 2;
        K->real_roots_ = isolate_real_roots(f);
        attach_roots(f, K->r_, K->real_roots_, K->approx_roots_);
        if (K->s_ == 0) {
            K->conj_ = IntMatrix::identity(n);
        } else if (conj_theta) {
            K->conj_ = K->automorphism(K->from_power(*conj_theta));
            check_conjugation(*K, *conj_theta);
        } else if (n == 2) {
            // theta -> -a1 - theta
            RatVec img(2);
            img[0] = -f[1];
            img[1] = -1;
            K->conj_ = K->automorphism(K->from_power(img));
        }
        if (K->has_exact_t2()) K->t2_ = K->compute_t2();
        return K;
    }
};

FieldPtr build_field_from_order(const ZPoly& f, const RatMatrix& order_basis, const std::vector<Int>& primes,
                                std::optional<RatVec> conj_theta)
{
    RatMatrix B = order_basis;
    for (auto& p : primes) B = round2(f, B, p);
    return FieldBuilder::make(f, B, std::move(conj_theta));
}

FieldPtr build_field(const ZPoly& f)
{
    if (f.degree() < 1) throw DomainError("defining polynomial must have degree at least 1");
    if (!f.is_monic()) throw DomainError("defining polynomial must be monic: " + to_string(f));
    if (f.degree() > kMaxFieldDegree)
        throw CapError("computation cap: degree " + std::to_string(f.degree()) + " exceeds " + std::to_string(kMaxFieldDegree));
    auto fac = factor_over_q(f);
    if (fac.size() != 1 || fac[0].multiplicity != 1)
        throw DomainError("polynomial is reducible: " + to_string(f) + " has factor " + to_string(fac[0].factor));
    int n = f.degree();
    Int d = discriminant(f);
    std::vector<Int> primes;
    if (n > 1) {
        for (auto& [p, e] : factor_integer(abs(d))) {
            if (e < 2) continue;
            if (p < Int(1) << 31 && dedekind_p_maximal(f, p)) continue;
            primes.push_back(p);
        }
    }
    return build_field_from_order(f, RatMatrix::identity(n), primes);
}

} // namespace flt
