#include "numfield/relquad.hpp"

#include "exactmath/factor_z.hpp"
#include "exactmath/primes.hpp"

namespace flt {

namespace {

// Inverse of a modulo the irreducible g.
QPoly inverse_mod(const QPoly& a, const QPoly& g)
{
    QPoly r0 = g, r1 = rem(a, g), s0, s1 = QPoly::constant(Rat(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.is_zero()) throw DomainError("inverse_mod: not invertible");
    return rem(Rat(Rat(1) / r1.lead()) * s1, g);
}

QPoly compose_mod(const QPoly& h, const QPoly& inner, const QPoly& g)
{
    QPoly acc;
    for (int i = h.degree(); i >= 0; --i) acc = rem(acc * inner + QPoly::constant(h[i]), g);
    return acc;
}

RatVec padded(const QPoly& a, int n)
{
    RatVec v(static_cast<size_t>(n));
    for (int i = 0; i <= a.degree(); ++i) v[i] = a[i];
    return v;
}

} // namespace

RelativeQuadratic adjoin_sqrt_minus(const FieldPtr& K, long p)
{
    if (!K->totally_real()) throw DomainError("adjoin_sqrt_minus: base field must be totally real");
    if (p < 3 || !is_prime(Int(p))) throw DomainError("adjoin_sqrt_minus: p must be an odd prime");
    const ZPoly& f = K->poly();
    int n = f.degree();
    RelativeQuadratic R;
    R.base = K;
    R.p = p;
    ZPoly A, B, g;
    for (long k = 1; k <= 100; ++k) {
        // f(x - k w) = A(x) + B(x) w with w^2 = -p
        A = ZPoly();
        B = ZPoly();
        for (int j = n; j >= 0; --j) {
            ZPoly nA = A * ZPoly::x() + Int(k * p) * B;
            ZPoly nB = B * ZPoly::x() - Int(k) * A;
            A = nA + ZPoly::constant(f[j]);
            B = nB;
        }
        g = A * A + Int(p) * B * B;
        if (g.degree() == 2 * n && is_irreducible_over_q(g)) {
            R.k = k;
            break;
        }
    }
    if (R.k == 0) throw DomainError("adjoin_sqrt_minus: -p appears to be a square in the base field");
    QPoly gq = to_qpoly(g);
    int N = 2 * n;
    QPoly w = rem(-to_qpoly(A) * inverse_mod(to_qpoly(B), gq), gq);
    QPoly alpha = QPoly::x();
    QPoly thetaK = alpha - Rat(R.k) * w;
    QPoly eta = (p % 4 == 3) ? Rat(1, 2) * (QPoly::constant(Rat(1)) + w) : w;
    RatMatrix B0(N, N);
    std::vector<QPoly> omegas;
    for (int i = 0; i < n; ++i) {
        QPoly wi = compose_mod(QPoly(K->basis().row(i)), thetaK, gq);
        omegas.push_back(wi);
        B0.set_row(i, padded(wi, N));
        B0.set_row(n + i, padded(rem(wi * eta, gq), N));
    }
    Int dF = (p % 4 == 3) ? Int(-p) : Int(-4 * p);
    std::vector<Int> primes;
    Int common = gcd(K->disc(), dF);
    if (common > 1)
        for (auto& [q, e] : factor_integer(common)) primes.push_back(q);
    QPoly tau = alpha - Rat(2 * R.k) * w;
    R.top = build_field_from_order(g, B0, primes, padded(tau, N));
    const NumberField& L = *R.top;
    R.embedding = IntMatrix(n, N);
    for (int i = 0; i < n; ++i) R.embedding.set_row(i, NumberField::to_int(L.from_power(padded(omegas[i], N))));
    R.sqrt_mp = L.from_power(padded(w, N));

    // structural checks
    RatVec sq = L.mul(R.sqrt_mp, R.sqrt_mp);
    if (sq != L.from_rational(Rat(-p))) throw VerificationError("adjoin_sqrt_minus: sqrt(-p) squares incorrectly");
    RatVec cs = R.conj(R.sqrt_mp);
    for (size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != -R.sqrt_mp[i]) throw VerificationError("adjoin_sqrt_minus: conjugation does not negate sqrt(-p)");
    for (int i = 0; i < n; ++i) {
        RatVec e = L.from_int(R.embedding.row(i));
        if (R.conj(e) != e) throw VerificationError("adjoin_sqrt_minus: conjugation moves the base field");
        for (int j = i; j < n; ++j) {
            RatVec lhs = R.embed(K->from_int(K->table(i, j)));
            RatVec rhs = L.mul(e, L.from_int(R.embedding.row(j)));
            if (lhs != rhs) throw VerificationError("adjoin_sqrt_minus: embedding is not multiplicative");
        }
    }
    return R;
}

RatVec RelativeQuadratic::embed(const RatVec& x) const { return row_times(x, to_rat(embedding)); }

IntVec RelativeQuadratic::embed(const IntVec& x) const { return row_times(x, embedding); }

RatVec RelativeQuadratic::conj(const RatVec& x) const { return top->apply(*top->conjugation(), x); }

RatVec RelativeQuadratic::pull_back(const RatVec& y) const
{
    // solve z * E = y with E of full row rank n
    int n = embedding.rows(), N = embedding.cols();
    RatMatrix A(N, n + 1);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < n; ++j) A(i, j) = embedding(j, i);
        A(i, n) = y[i];
    }
    int row = 0;
    std::vector<int> piv;
    for (int col = 0; col < n && row < N; ++col) {
        int pr = -1;
        for (int i = row; i < N; ++i)
            if (A(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        A.swap_rows(row, pr);
        Rat inv = 1 / A(row, col);
        for (int j = 0; j <= n; ++j) A(row, j) *= inv;
        for (int i = 0; i < N; ++i)
            if (i != row && A(i, col) != 0) A.add_row(i, row, -Rat(A(i, col)));
        piv.push_back(col);
        ++row;
    }
    for (int i = row; i < N; ++i)
        if (A(i, n) != 0) throw DomainError("element does not lie in the base field");
    RatVec z(static_cast<size_t>(n));
    for (int i = 0; i < row; ++i) z[piv[i]] = A(i, n);
    return z;
}

RatVec RelativeQuadratic::relative_norm(const RatVec& x) const { return pull_back(top->mul(x, conj(x))); }

RatVec RelativeQuadratic::make(const RatVec& x, const RatVec& y) const
{
    RatVec a = embed(x);
    RatVec b = top->mul(embed(y), sqrt_mp);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

} // namespace flt
