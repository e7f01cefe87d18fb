#include "doctest.h"
#include "test_support.hpp"

#include "exactmath/factor_z.hpp"
#include "exactmath/lattice.hpp"
#include "exactmath/matrix.hpp"
#include "exactmath/polymodp.hpp"
#include "exactmath/primes.hpp"
#include "exactmath/roots.hpp"

#include <algorithm>
#include <set>

using namespace flt;
using fltt::Gen;

namespace {

// b^2 - 4ac
Int quad_disc_oracle(const ZPoly& f) { return f[1] * f[1] - 4 * f[2] * f[0]; }

// a x^3 + b x^2 + c x + d
Int cubic_disc_oracle(const ZPoly& f)
{
    Int a = f[3], b = f[2], c = f[1], d = f[0];
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

FpPoly expand(const std::vector<FpFactor>& fs, std::uint64_t p)
{
    FpPoly r(p, {1});
    for (auto& f : fs)
        for (int i = 0; i < f.multiplicity; ++i) r = r * f.factor;
    return r;
}

// Irreducibility by gcd with x^(p^i) - x for i <= deg/2.
bool irreducible_oracle(const FpPoly& g)
{
    std::uint64_t p = g.modulus();
    int d = g.degree();
    if (d < 1) return false;
    FpPoly x(p, {0, 1});
    FpPoly h = x;
    for (int i = 1; i <= d / 2; ++i) {
        h = powmod(h, Int(static_cast<unsigned long>(p)), g);
        FpPoly t = h - x;
        if (gcd(t, g).degree() > 0) return false;
    }
    return true;
}

IntMatrix random_matrix(Gen& g, int r, int c, long bound)
{
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = g.range(-bound, bound);
    return m;
}

bool is_hnf(const IntMatrix& H)
{
    int prev = -1;
    bool zero_seen = false;
    for (int i = 0; i < H.rows(); ++i) {
        int piv = -1;
        for (int j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) {
                piv = j;
                break;
            }
        if (piv < 0) {
            zero_seen = true;
            continue;
        }
        if (zero_seen || piv <= prev || H(i, piv) <= 0) return false;
        for (int k = 0; k < i; ++k)
            if (H(k, piv) < 0 || H(k, piv) >= H(i, piv)) return false;
        prev = piv;
    }
    return true;
}

std::set<IntVec> brute_short(const RatMatrix& G, const Rat& bound, long box)
{
    std::set<IntVec> out;
    int n = G.rows();
    IntVec v(static_cast<size_t>(n));
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            bool zero = std::all_of(v.begin(), v.end(), [](const Int& a) { return a == 0; });
            if (zero) return;
            int last = n - 1;
            while (v[last] == 0) --last;
            if (v[last] < 0) return;
            if (quad_form(G, v) <= bound) out.insert(v);
            return;
        }
        for (long a = -box; a <= box; ++a) {
            v[i] = a;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

TEST_CASE("discriminant examples")
{
    CHECK(discriminant(parse_poly("x^3 - 3*x - 1")) == 81);
    CHECK(discriminant(parse_poly("x - 1")) == 1);
    CHECK(discriminant(parse_poly("x^2 + 3")) == -12);
    CHECK(quad_disc_oracle(parse_poly("x^2+3")) == -12);
    CHECK(cubic_disc_oracle(parse_poly("x^3-3x-1")) == 81);
    CHECK_THROWS_AS(discriminant(ZPoly()), DomainError);
}

TEST_CASE("discriminant agrees with closed forms for quadratics and cubics")
{
    Gen g(11);
    for (int it = 0; it < 200; ++it) {
        ZPoly q = g.poly(2, 30, false);
        CHECK(discriminant(q) == quad_disc_oracle(q));
        ZPoly c = g.poly(3, 30, false);
        CHECK(discriminant(c) == cubic_disc_oracle(c));
    }
}

TEST_CASE("disc(fg) = disc(f) disc(g) Res(f,g)^2")
{
    Gen g(12);
    for (int it = 0; it < 100; ++it) {
        ZPoly f = g.poly(static_cast<int>(g.range(1, 4)), 9, false);
        ZPoly h = g.poly(static_cast<int>(g.range(1, 4)), 9, false);
        Int r = resultant(f, h);
        CHECK(discriminant(f * h) == discriminant(f) * discriminant(h) * r * r);
    }
}

TEST_CASE("polynomial parsing and printing")
{
    CHECK(to_string(parse_poly("x^3-3*x-1")) == "x^3 - 3*x - 1");
    CHECK(parse_poly(" 2x^2 + x ") == ZPoly({0, 1, 2}));
    CHECK(parse_poly("-x + 7") == ZPoly({7, -1}));
    CHECK_THROWS_AS(parse_poly("x^^2"), DomainError);
    CHECK_THROWS_AS(parse_poly(""), DomainError);
    CHECK_THROWS_AS(parse_poly("y+1"), DomainError);
}

TEST_CASE("factor_mod_p examples")
{
    auto a = factor_mod_p(parse_poly("x^3-3*x-1"), Int(3));
    REQUIRE(a.size() == 1);
    CHECK(a[0].factor.to_zpoly() == parse_poly("x+2"));
    CHECK(a[0].multiplicity == 3);

    auto b = factor_mod_p(parse_poly("x^3-3*x-1"), Int(2));
    REQUIRE(b.size() == 1);
    CHECK(b[0].factor.to_zpoly() == parse_poly("x^3+x+1"));
    CHECK(b[0].multiplicity == 1);

    auto c = factor_mod_p(parse_poly("x^2+3"), Int(7));
    REQUIRE(c.size() == 2);
    CHECK(c[0].factor.to_zpoly() == parse_poly("x+2"));
    CHECK(c[1].factor.to_zpoly() == parse_poly("x+5"));

    CHECK_THROWS_AS(factor_mod_p(parse_poly("x^2+3"), Int(15)), DomainError);
    CHECK_THROWS_AS(factor_mod_p(parse_poly("7x+7"), Int(7)), DomainError);
}

TEST_CASE("factor_mod_p re-multiplies to the input with irreducible factors")
{
    Gen g(13);
    for (long p : primes_up_to(50)) {
        auto up = static_cast<std::uint64_t>(p);
        for (int it = 0; it < 12; ++it) {
            ZPoly f = g.poly(static_cast<int>(g.range(1, 6)), 60, false);
            FpPoly fp = FpPoly::from_zpoly(f, up);
            if (fp.is_zero() || fp.degree() < 1) continue;
            auto fs = factor_mod_p(fp);
            CHECK(expand(fs, up) == fp.monic());
            for (auto& x : fs) {
                CHECK(x.factor.lead() == 1);
                CHECK(irreducible_oracle(x.factor));
            }
            auto again = factor_mod_p(fp);
            CHECK(again.size() == fs.size());
        }
    }
}

TEST_CASE("factorization over Q")
{
    auto f = factor_over_q(parse_poly("x^2-1"));
    REQUIRE(f.size() == 2);
    CHECK(f[0].factor == parse_poly("x-1"));
    CHECK(f[1].factor == parse_poly("x+1"));
    CHECK(is_irreducible_over_q(parse_poly("x^4+1")));
    CHECK(is_irreducible_over_q(parse_poly("x^3-3x-1")));
    CHECK_FALSE(is_irreducible_over_q(parse_poly("x^4+4")));  // (x^2+2x+2)(x^2-2x+2)
    auto sq = factor_over_q(parse_poly("x^4-2x^2+1"));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].multiplicity == 2);

    Gen g(14);
    for (int it = 0; it < 40; ++it) {
        ZPoly a = g.poly(static_cast<int>(g.range(1, 3)), 6, true);
        ZPoly b = g.poly(static_cast<int>(g.range(1, 3)), 6, true);
        ZPoly prod = a * b;
        auto fs = factor_over_q(prod);
        ZPoly back = ZPoly::constant(1);
        for (auto& x : fs)
            for (int i = 0; i < x.multiplicity; ++i) back = back * x.factor;
        CHECK(back == prod);
        int total = 0;
        for (auto& x : fs) total += x.multiplicity;
        CHECK(total >= 2);
        for (auto& x : fs) CHECK(factor_over_q(x.factor).size() == 1);
    }
}

TEST_CASE("real root isolation")
{
    CHECK(isolate_real_roots(parse_poly("x^3-3x-1")).size() == 3);
    CHECK(isolate_real_roots(parse_poly("x^2+3")).empty());
    auto r = isolate_real_roots(parse_poly("x^2-2"));
    REQUIRE(r.size() == 2);
    auto a = refine_root(parse_poly("x^2-2"), r[1], Rat(1, 1000));
    CHECK(a.lo <= Rat(1415, 1000));
    CHECK(a.hi >= Rat(1414, 1000));
    CHECK(a.width() <= Rat(1, 1000));
    CHECK(r[0].hi <= 0);
    CHECK_THROWS_AS(isolate_real_roots(parse_poly("x^3-x^2")), DomainError);
}

TEST_CASE("root isolation: count matches Sturm and brackets known roots")
{
    Gen g(15);
    for (int it = 0; it < 60; ++it) {
        std::set<long> rootset;
        ZPoly f = ZPoly::constant(1);
        int k = static_cast<int>(g.range(1, 5));
        for (int i = 0; i < k; ++i) {
            long a = g.range(-20, 20);
            if (!rootset.insert(a).second) continue;
            f = f * ZPoly({Int(-a), Int(1)});
        }
        // an irreducible quadratic factor with no real roots
        f = f * parse_poly("x^2+x+5");
        auto iv = isolate_real_roots(f);
        CHECK(static_cast<int>(iv.size()) == count_real_roots(f));
        CHECK(iv.size() == rootset.size());
        size_t idx = 0;
        for (long a : rootset) {
            CHECK(iv[idx].contains(Rat(a)));
            ++idx;
        }
    }
}

TEST_CASE("sign of a polynomial at an isolated root")
{
    ZPoly f = parse_poly("x^2-2");
    auto r = isolate_real_roots(f);
    // 2 + theta is positive at both roots, theta is not
    CHECK(sign_at_root(f, r[0], to_qpoly(parse_poly("x+2"))) == 1);
    CHECK(sign_at_root(f, r[1], to_qpoly(parse_poly("x+2"))) == 1);
    CHECK(sign_at_root(f, r[0], to_qpoly(parse_poly("x"))) == -1);
    CHECK(sign_at_root(f, r[1], to_qpoly(parse_poly("x"))) == 1);
    CHECK(sign_at_root(f, r[0], to_qpoly(parse_poly("1000x+1414"))) == -1);
    CHECK(sign_at_root(f, r[0], to_qpoly(parse_poly("1000x+1415"))) == 1);
    CHECK_THROWS_AS(sign_at_root(f, r[0], to_qpoly(parse_poly("x^2-2"))), DomainError);
}

TEST_CASE("hnf examples")
{
    auto I = IntMatrix::identity(3);
    auto h = hnf(I);
    CHECK(h.H == I);
    CHECK(h.U == I);
    auto m = hnf(IntMatrix{{2, 0}, {1, 1}});
    CHECK(m.H == IntMatrix{{1, 1}, {0, 2}});
    auto z = hnf(IntMatrix(2, 3));
    CHECK(z.H.is_zero());
    CHECK(z.rank == 0);
}

TEST_CASE("hnf properties: unimodular transform, normal form, idempotence")
{
    Gen g(16);
    for (int it = 0; it < 80; ++it) {
        int r = static_cast<int>(g.range(1, 5)), c = static_cast<int>(g.range(1, 5));
        IntMatrix M = random_matrix(g, r, c, 9);
        auto res = hnf(M);
        CHECK(res.U * M == res.H);
        CHECK(abs(det(res.U)) == 1);
        CHECK(is_hnf(res.H));
        CHECK(hnf_only(res.H) == res.H);
    }
}

TEST_CASE("modular hnf agrees with plain hnf")
{
    Gen g(17);
    for (int it = 0; it < 50; ++it) {
        int n = static_cast<int>(g.range(1, 4));
        IntMatrix M = random_matrix(g, n + 2, n, 20);
        Int D = g.range(1, 60);
        IntMatrix stacked = M;
        for (int i = 0; i < n; ++i) {
            IntVec e(static_cast<size_t>(n));
            e[i] = D;
            stacked.append_row(e);
        }
        IntMatrix full = hnf_only(stacked);
        IntMatrix top(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) top(i, j) = full(i, j);
        CHECK(hnf_mod(M, D) == top);
    }
}

TEST_CASE("snf properties")
{
    auto s = snf(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.diag == std::vector<Int>{1, 6});
    Gen g(18);
    for (int it = 0; it < 60; ++it) {
        int r = static_cast<int>(g.range(1, 5)), c = static_cast<int>(g.range(1, 5));
        IntMatrix M = random_matrix(g, r, c, 12);
        auto res = snf(M);
        IntMatrix D = res.U * M * res.V;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                if (i == j)
                    CHECK(D(i, j) == res.diag[i]);
                else
                    CHECK(D(i, j) == 0);
            }
        CHECK(abs(det(res.U)) == 1);
        CHECK(abs(det(res.V)) == 1);
        for (size_t i = 0; i + 1 < res.diag.size(); ++i) {
            CHECK(res.diag[i] >= 0);
            if (res.diag[i] != 0) CHECK(divides(res.diag[i], res.diag[i + 1]));
        }
        if (r == c) {
            Int prod = 1;
            for (auto& d : res.diag) prod *= d;
            CHECK(prod == abs(det(M)));
        }
    }
}

TEST_CASE("determinants, inverse and kernels")
{
    CHECK(det(IntMatrix{{2, 1}, {7, 4}}) == 1);
    CHECK(det(IntMatrix{{0, 1, 2}, {3, 4, 5}, {6, 7, 9}}) == -3);
    RatMatrix A{{2, 1}, {7, 4}};
    CHECK(inverse(A) * A == RatMatrix::identity(2));
    IntMatrix K{{1, 2}, {2, 4}};
    auto ker = left_kernel_mod_p(K, Int(5));
    REQUIRE(ker.size() == 1);
    IntVec prod = row_times(ker[0], K);
    for (auto& x : prod) CHECK(mod(x, Int(5)) == 0);
    CHECK(rank_mod_p(IntMatrix{{1, 2}, {3, 1}}, Int(5)) == 1);
    CHECK(rank(to_rat(IntMatrix{{1, 2}, {3, 1}})) == 2);
}

TEST_CASE("short vector examples")
{
    auto a = enumerate_short_vectors(RatMatrix::identity(2), Rat(1));
    CHECK(a == std::vector<IntVec>{{1, 0}, {0, 1}});
    RatMatrix G{{1, 0}, {0, 3}};
    auto b = enumerate_short_vectors(G, Rat(7));
    // (1,0),(2,0),(0,1),(1,1),(2,1) and the pairs (-1,1),(-2,1)
    std::vector<IntVec> expect{{1, 0}, {2, 0}, {-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}};
    CHECK(b == expect);
    auto brute = brute_short(G, Rat(7), 3);
    CHECK(std::set<IntVec>(b.begin(), b.end()) == brute);
    CHECK(enumerate_short_vectors(G, Rat(0)).empty());
    CHECK_THROWS_AS(enumerate_short_vectors(RatMatrix{{1, 2}, {2, 1}}, Rat(3)), DomainError);
    CHECK_THROWS_AS(enumerate_short_vectors(RatMatrix{{1, 2}, {0, 5}}, Rat(3)), DomainError);
    CHECK_THROWS_AS(enumerate_short_vectors(RatMatrix::identity(2), Rat(100), 5), CapError);
}

TEST_CASE("short vectors agree with brute force on random 2x2 and 3x3 Gram matrices")
{
    Gen g(19);
    int done = 0;
    while (done < 40) {
        int n = 2 + done % 2;
        IntMatrix B = random_matrix(g, n, n, 4);
        if (det(B) == 0) continue;
        RatMatrix G = to_rat(B * B.transpose());
        for (int i = 0; i < n; ++i) G(i, i) += Rat(1, 3);
        Rat bound(g.range(1, 40), g.range(1, 3));
        auto got = enumerate_short_vectors(G, bound);
        // smallest eigen-direction bound: every coordinate is below sqrt(bound / lambda_min);
        // with B integral and +1/3 on the diagonal, lambda_min >= 1/3
        long box = static_cast<long>(floor_sqrt(bound * 3).get_si()) + 1;
        auto brute = brute_short(G, bound, box);
        CHECK(std::set<IntVec>(got.begin(), got.end()) == brute);
        CHECK(got.size() == brute.size());
        ++done;
    }
}

TEST_CASE("LLL output is size reduced and satisfies the Lovasz condition")
{
    Gen g(20);
    for (int it = 0; it < 20; ++it) {
        int n = static_cast<int>(g.range(2, 5));
        IntMatrix B = random_matrix(g, n, n, 30);
        if (det(B) == 0) continue;
        RatMatrix G = to_rat(B * B.transpose());
        IntMatrix T = lll_gram(G);
        CHECK(abs(det(T)) == 1);
        RatMatrix R = to_rat(T) * G * to_rat(T).transpose();
        // Gram-Schmidt on R
        std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
        std::vector<Rat> Bs(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                Rat s = R(i, j);
                for (int k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * Bs[k];
                mu[i][j] = s / Bs[j];
                CHECK(abs(mu[i][j]) <= Rat(1, 2));
            }
            Rat b = R(i, i);
            for (int k = 0; k < i; ++k) b -= mu[i][k] * mu[i][k] * Bs[k];
            Bs[i] = b;
            if (i > 0) CHECK(Bs[i] >= (Rat(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * Bs[i - 1]);
        }
    }
}

TEST_CASE("integer factorization")
{
    auto f = factor_integer(Int(360));
    CHECK(f == std::map<Int, int>{{2, 3}, {3, 2}, {5, 1}});
    Int big = Int("1000000007") * Int("998244353");
    auto g = factor_integer(big);
    CHECK(g.size() == 2);
    CHECK(g.begin()->first == Int("998244353"));
    CHECK(is_prime(Int(97)));
    CHECK_FALSE(is_prime(Int(91)));
}
