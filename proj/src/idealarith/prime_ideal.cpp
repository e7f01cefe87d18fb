#include "idealarith/prime_ideal.hpp"

#include "exactmath/polymodp.hpp"
#include "exactmath/primes.hpp"

#include <algorithm>

namespace flt {

namespace {

IntVec reduce_mod(IntVec x, const Int& q)
{
    for (auto& c : x) c = mod(c, q);
    return x;
}

IntVec mulmod(const NumberField& K, const IntVec& a, const IntVec& b, const Int& q) { return reduce_mod(K.mul(a, b), q); }

IntVec powmod(const NumberField& K, const IntVec& a, Int e, const Int& q)
{
    IntVec acc = K.one(), base = reduce_mod(a, q);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mulmod(K, acc, base, q);
        e >>= 1;
        if (e > 0) base = mulmod(K, base, base, q);
    }
    return acc;
}

IntMatrix matmod(const IntMatrix& A, const IntMatrix& B, const Int& q)
{
    IntMatrix C = A * B;
    for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < C.cols(); ++j) C(i, j) = mod(C(i, j), q);
    return C;
}

// Reduced row echelon basis of the span of rows over F_q.
std::vector<IntVec> rref_mod(std::vector<IntVec> rows, const Int& q)
{
    if (rows.empty()) return rows;
    int c = static_cast<int>(rows[0].size());
    for (auto& r : rows) r = reduce_mod(r, q);
    size_t row = 0;
    for (int col = 0; col < c && row < rows.size(); ++col) {
        size_t piv = rows.size();
        for (size_t i = row; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[row], rows[piv]);
        Int inv;
        mpz_invert(inv.get_mpz_t(), rows[row][col].get_mpz_t(), q.get_mpz_t());
        for (auto& x : rows[row]) x = mod(x * inv, q);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0) continue;
            Int f = rows[i][col];
            for (int j = 0; j < c; ++j) rows[i][j] = mod(rows[i][j] - f * rows[row][j], q);
        }
        ++row;
    }
    rows.resize(row);
    return rows;
}

IntMatrix rows_to_matrix(const std::vector<IntVec>& rows, int cols)
{
    IntMatrix M(0, 0);
    if (rows.empty()) return IntMatrix(0, cols);
    for (auto& r : rows) M.append_row(r);
    return M;
}

// Maximal ideals of O_K / q O_K as F_q-subspaces (reduced echelon bases).
std::vector<std::vector<IntVec>> maximal_ideals_mod(const NumberField& K, const Int& q)
{
    int n = K.degree();
    IntMatrix M(n, n);
    for (int i = 0; i < n; ++i) M.set_row(i, powmod(K, K.unit_vector(i), q, q));
    // Frobenius^k with q^k >= n kills exactly the radical
    IntMatrix Mk = M;
    for (Int qk = q; qk < n; qk *= q) Mk = matmod(Mk, M, q);
    std::vector<IntVec> R = rref_mod(left_kernel_mod_p(Mk, q), q);

    IntMatrix Pi;
    if (R.empty()) {
        Pi = IntMatrix::identity(n);
    } else {
        auto ann = left_kernel_mod_p(rows_to_matrix(R, n).transpose(), q);
        Pi = rows_to_matrix(ann, n).transpose();
    }
    IntMatrix MI = M;
    for (int i = 0; i < n; ++i) MI(i, i) -= 1;
    std::vector<IntVec> Vb = left_kernel_mod_p(matmod(MI, Pi, q), q);

    std::vector<std::vector<IntVec>> parts{R};
    for (auto& x : Vb) {
        ZPoly cp = primitive_part(K.charpoly(K.from_int(x)));
        std::vector<Int> roots;
        for (auto& fc : factor_mod_p(cp, q))
            if (fc.factor.degree() == 1) roots.push_back(mod(-Int(static_cast<unsigned long>(fc.factor[0])), q));
        std::vector<std::vector<IntVec>> next;
        for (auto& J : parts) {
            std::vector<std::vector<IntVec>> pieces;
            for (auto& c : roots) {
                IntVec xc = x;
                xc[0] -= c;
                std::vector<IntVec> rows = J;
                for (int i = 0; i < n; ++i) rows.push_back(mulmod(K, xc, K.unit_vector(i), q));
                auto Jc = rref_mod(rows, q);
                if (static_cast<int>(Jc.size()) < n && std::find(pieces.begin(), pieces.end(), Jc) == pieces.end())
                    pieces.push_back(Jc);
            }
            if (pieces.empty()) throw VerificationError("maximal_ideals_mod: lost a component");
            for (auto& p : pieces) next.push_back(p);
        }
        parts = std::move(next);
    }
    long count = static_cast<long>(Vb.size()) - static_cast<long>(R.size());
    if (static_cast<long>(parts.size()) != count) throw VerificationError("maximal_ideals_mod: component count mismatch");
    return parts;
}

Ideal lift_mod_ideal(const FieldPtr& K, const std::vector<IntVec>& rows, const Int& q)
{
    HnfModAccumulator acc(K->degree(), q);
    for (auto& r : rows) acc.add(r);
    return Ideal(K, acc.basis());
}

IntVec find_helper(const NumberField& K, const Ideal& P, const Int& q)
{
    int n = K.degree();
    IntMatrix A(n, n * n);
    for (int i = 0; i < n; ++i) {
        IntMatrix Mi = K.mul_matrix(K.unit_vector(i));
        for (int j = 0; j < n; ++j) {
            IntVec prod = row_times(P.basis_row(j), Mi);
            for (int k = 0; k < n; ++k) A(i, j * n + k) = mod(prod[k], q);
        }
    }
    auto ker = left_kernel_mod_p(A, q);
    if (ker.empty()) throw VerificationError("find_helper: empty kernel");
    return ker[0];
}

PrimeIdeal finish_prime(const FieldPtr& K, Ideal I, const Int& q, int e)
{
    PrimeIdeal P;
    P.p = q;
    P.ideal = std::move(I);
    Int N = P.ideal.norm();
    while (N > 1) {
        if (!divides(q, N)) throw VerificationError("prime ideal norm is not a power of q");
        N /= q;
        ++P.f;
    }
    P.helper = find_helper(*K, P.ideal, q);
    P.gen = P.ideal.two_element().second;
    P.e = e > 0 ? e : valuation(P, K->from_integer(q));
    return P;
}

} // namespace

int valuation(const PrimeIdeal& P, const IntVec& x0)
{
    const NumberField& K = *P.ideal.field();
    bool zero = std::all_of(x0.begin(), x0.end(), [](const Int& c) { return c == 0; });
    if (zero) throw DomainError("valuation of zero");
    IntVec x = x0;
    int v = 0;
    while (true) {
        IntVec y = K.mul(x, P.helper);
        for (auto& c : y) {
            if (!divides(P.p, c)) return v;
        }
        for (auto& c : y) c /= P.p;
        x = std::move(y);
        ++v;
    }
}

int valuation(const PrimeIdeal& P, const RatVec& x)
{
    Int d = 1;
    for (auto& c : x) d = lcm(d, c.get_den());
    IntVec y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = Rat(x[i] * d).get_num();
    return valuation(P, y) - P.e * flt::valuation(d, P.p);
}

int valuation(const PrimeIdeal& P, const Ideal& I)
{
    if (!divides(P.p, I.norm())) return 0;
    int v = -1;
    for (int i = 0; i < I.degree(); ++i) {
        int w = valuation(P, I.basis_row(i));
        if (v < 0 || w < v) v = w;
        if (v == 0) break;
    }
    return v;
}

SplittingData factor_rational_prime(const FieldPtr& K, const Int& q)
{
    if (q < 2 || !is_prime(q)) throw DomainError("factor_rational_prime: " + q.get_str() + " is not prime");
    SplittingData sd;
    sd.q = q;
    if (!divides(q, K->index())) {
        for (auto& fc : factor_mod_p(K->poly(), q)) {
            IntVec g = NumberField::to_int(K->from_poly(to_qpoly(fc.factor.to_zpoly())));
            Ideal I = Ideal::from_generators(K, {K->from_integer(q), g});
            sd.factors.push_back(finish_prime(K, I, q, fc.multiplicity));
        }
    } else {
        for (auto& J : maximal_ideals_mod(*K, q)) sd.factors.push_back(finish_prime(K, lift_mod_ideal(K, J, q), q, 0));
    }
    std::sort(sd.factors.begin(), sd.factors.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        if (a.f != b.f) return a.f < b.f;
        if (a.e != b.e) return a.e < b.e;
        return a.gen < b.gen;
    });
    int sum = 0;
    for (size_t i = 0; i < sd.factors.size(); ++i) {
        auto& P = sd.factors[i];
        sum += P.e * P.f;
        sd.S.push_back(static_cast<int>(i));
        if (P.f == 1) sd.T.push_back(static_cast<int>(i));
        if (P.e % 2 == 1) sd.V.push_back(static_cast<int>(i));
    }
    if (sum != K->degree()) throw VerificationError("factor_rational_prime: sum of e*f differs from the degree");
    return sd;
}

int prime_containing(const SplittingData& sd, const IntVec& x)
{
    for (size_t i = 0; i < sd.factors.size(); ++i)
        if (sd.factors[i].ideal.contains(x)) return static_cast<int>(i);
    return -1;
}

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const Ideal& I)
{
    const FieldPtr& K = I.field();
    std::vector<std::pair<PrimeIdeal, int>> out;
    Ideal prod = Ideal::unit(K);
    for (auto& [q, m] : factor_integer(I.norm())) {
        auto sd = factor_rational_prime(K, q);
        for (auto& P : sd.factors) {
            int v = valuation(P, I);
            if (v > 0) {
                prod = prod * P.ideal.pow(static_cast<unsigned long>(v));
                out.emplace_back(P, v);
            }
        }
    }
    if (prod != I) throw VerificationError("factor_ideal: product of prime powers differs");
    return out;
}

QuadraticRamification ramified_primes_in_quadratic_ext(const RelativeQuadratic& rel)
{
    QuadraticRamification out;
    for (const Int& q : prime_divisors(Int(2 * rel.p))) {
        auto sdK = factor_rational_prime(rel.base, q);
        auto sdL = factor_rational_prime(rel.top, q);
        for (auto& P : sdK.factors) {
            int j = prime_containing(sdL, rel.embed(P.gen));
            if (j < 0) throw VerificationError("ramified_primes_in_quadratic_ext: no prime above");
            if (sdL.factors[j].e == 2 * P.e) {
                out.ramified.push_back(P);
                out.top_primes.push_back(sdL.factors[j]);
            }
        }
    }
    out.gamma = static_cast<int>(out.ramified.size());
    return out;
}

} // namespace flt
