#include "doctest.h"
#include "test_support.hpp"

#include "exactmath/factor_z.hpp"
#include "exactmath/primes.hpp"
#include "idealarith/prime_ideal.hpp"

using namespace flt;
using fltt::Gen;

namespace {

const char* kTableCubics[] = {"x^3-3*x-1",    "x^3-x^2-4*x+1", "x^3-x^2-5*x+3", "x^3-6*x-3",
                              "x^3-6*x-2",    "x^3-6*x-1",     "x^3-x^2-6*x+3", "x^3-x^2-9*x+12",
                              "x^3-x^2-8*x-3", "x^3-x^2-7*x+1", "x^3-12*x-14",   "x^3-9*x-6"};

std::vector<std::pair<int, int>> ef_pairs(const SplittingData& sd)
{
    std::vector<std::pair<int, int>> v;
    for (auto& P : sd.factors) v.emplace_back(P.e, P.f);
    std::sort(v.begin(), v.end());
    return v;
}

IntVec random_int_elt(Gen& g, int n, long c)
{
    IntVec v(static_cast<size_t>(n));
    for (auto& x : v) x = g.range(-c, c);
    return v;
}

bool is_zero(const IntVec& v)
{
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

TEST_CASE("factor_rational_prime examples")
{
    auto K = build_field(parse_poly("x^3-3*x-1"));
    auto s3 = factor_rational_prime(K, 3);
    REQUIRE(s3.factors.size() == 1);
    CHECK(s3.factors[0].e == 3);
    CHECK(s3.factors[0].f == 1);
    auto s2 = factor_rational_prime(K, 2);
    REQUIRE(s2.factors.size() == 1);
    CHECK(s2.factors[0].e == 1);
    CHECK(s2.factors[0].f == 3);

    auto K2 = build_field(parse_poly("x^3-x^2-4*x+1"));
    auto t3 = factor_rational_prime(K2, 3);
    CHECK(ef_pairs(t3) == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});

    CHECK_THROWS_AS(factor_rational_prime(K, 6), DomainError);
}

TEST_CASE("stv sets")
{
    auto K = build_field(parse_poly("x^3-3*x-1"));
    auto sd = factor_rational_prime(K, 3);
    CHECK(sd.S.size() == 1);
    CHECK(sd.T.size() == 1);
    CHECK(sd.V.size() == 1);

    auto Q2 = build_field(parse_poly("x^2-2"));
    auto s2 = factor_rational_prime(Q2, 3);
    CHECK(s2.S.size() == 1);
    CHECK(s2.T.empty());
    CHECK(s2.V.size() == 1);
    CHECK(s2.factors[0].f == 2);

    auto Q = build_field(parse_poly("x"));
    auto s = factor_rational_prime(Q, 3);
    CHECK(s.S.size() == 1);
    CHECK(s.T.size() == 1);
    CHECK(s.V.size() == 1);
    CHECK(s.factors[0].ideal == Ideal::from_integer(Q, 3));
}

TEST_CASE("valuation examples")
{
    auto K = build_field(parse_poly("x^3-3*x-1"));
    auto P = factor_rational_prime(K, 3).factors[0];
    CHECK(valuation(P, K->from_integer(3)) == 3);
    CHECK(valuation(P, K->one()) == 0);
    CHECK(valuation(P, Ideal::unit(K)) == 0);
    CHECK(valuation(P, P.ideal * P.ideal) == 2);
    CHECK(valuation(P, Ideal::from_integer(K, 9)) == 6);
    CHECK(valuation(P, K->from_rational(Rat(1, 3))) == -3);
    CHECK_THROWS_AS(valuation(P, K->from_integer(0)), DomainError);
}

TEST_CASE("primes dividing the index")
{
    // 2 is a common index divisor of this cubic and splits completely
    auto K = build_field(parse_poly("x^3-x^2-2*x-8"));
    CHECK(divides(Int(2), K->index()));
    CHECK(K->disc() == -503);
    auto sd = factor_rational_prime(K, 2);
    CHECK(ef_pairs(sd) == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}, {1, 1}});

    // index 2 in x^2+3; compare with the equation order of x^2+x+1
    auto A = build_field(parse_poly("x^2+3"));
    auto B = build_field(parse_poly("x^2+x+1"));
    for (long q : {2L, 3L, 5L, 7L, 13L}) CHECK(ef_pairs(factor_rational_prime(A, q)) == ef_pairs(factor_rational_prime(B, q)));
    auto C = build_field(parse_poly("x^2+7"));
    CHECK(ef_pairs(factor_rational_prime(C, 2)) == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}});
    auto D = build_field(parse_poly("x^2-5"));
    CHECK(ef_pairs(factor_rational_prime(D, 2)) == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("property: splitting invariants on table fields")
{
    for (auto* s : kTableCubics) {
        auto K = build_field(parse_poly(s));
        for (long q : {2L, 3L, 5L, 7L}) {
            auto sd = factor_rational_prime(K, q);
            int sum = 0;
            Ideal prod = Ideal::unit(K);
            for (auto& P : sd.factors) {
                sum += P.e * P.f;
                CHECK(P.ideal.norm() == ipow(Int(q), static_cast<unsigned long>(P.f)));
                CHECK(P.ideal.contains(K->from_integer(q)));
                CHECK(valuation(P, K->from_integer(q)) == P.e);
                CHECK(Ideal::from_generators(K, {K->from_integer(q), P.gen}) == P.ideal);
                prod = prod * P.ideal.pow(static_cast<unsigned long>(P.e));
            }
            CHECK(sum == 3);
            CHECK(prod == Ideal::from_integer(K, q));
        }
    }
}

TEST_CASE("property: splitting on random fields with index divisors")
{
    Gen g(41);
    int hits = 0;
    for (int it = 0; it < 60; ++it) {
        int deg = static_cast<int>(g.range(2, 4));
        ZPoly f = g.poly(deg, 10, true);
        if (!is_irreducible_over_q(f)) continue;
        auto K = build_field(f);
        for (long q : {2L, 3L, 5L}) {
            if (divides(Int(q), K->index())) ++hits;
            auto sd = factor_rational_prime(K, q);
            Ideal prod = Ideal::unit(K);
            int sum = 0;
            for (auto& P : sd.factors) {
                sum += P.e * P.f;
                prod = prod * P.ideal.pow(static_cast<unsigned long>(P.e));
            }
            CHECK(sum == deg);
            CHECK(prod == Ideal::from_integer(K, q));
            // the ramified primes are exactly those dividing the discriminant
            bool ram = false;
            for (auto& P : sd.factors) ram = ram || P.e > 1;
            CHECK(ram == divides(Int(q), K->disc()));
        }
    }
    CHECK(hits > 3);
}

TEST_CASE("ideal arithmetic")
{
    auto K = build_field(parse_poly("x^3-x^2-4*x+1"));
    Gen g(3);
    for (int it = 0; it < 40; ++it) {
        IntVec a = random_int_elt(g, 3, 6), b = random_int_elt(g, 3, 6);
        if (is_zero(a) || is_zero(b)) continue;
        Ideal I = Ideal::principal(K, a), J = Ideal::principal(K, b);
        CHECK(I.norm() == abs(K->norm(a)));
        CHECK((I * J).norm() == I.norm() * J.norm());
        CHECK(I * J == Ideal::principal(K, K->mul(a, b)));
        CHECK((I + J).contains(I));
        CHECK((I + J).contains(J));
        // module property
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(I.contains(K->mul(K->unit_vector(i), I.basis_row(j))));
        auto [m, alpha] = I.two_element();
        CHECK(Ideal::from_generators(K, {K->from_integer(m), alpha}) == I);
        CHECK(I.contains(K->from_integer(I.min_integer())));
        CHECK(divides(I.min_integer(), I.norm()));
    }
}

TEST_CASE("property: valuation is additive")
{
    Gen g(7);
    for (const char* s : {"x^3-3*x-1", "x^3-x^2-5*x+3", "x^2-10"}) {
        auto K = build_field(parse_poly(s));
        int n = K->degree();
        std::vector<PrimeIdeal> primes;
        for (long q : {2L, 3L, 5L})
            for (auto& P : factor_rational_prime(K, q).factors) primes.push_back(P);
        for (int it = 0; it < 25; ++it) {
            IntVec a = random_int_elt(g, n, 8), b = random_int_elt(g, n, 8);
            if (is_zero(a) || is_zero(b)) continue;
            Ideal I = Ideal::principal(K, a), J = Ideal::principal(K, b);
            for (auto& P : primes) {
                CHECK(valuation(P, I * J) == valuation(P, I) + valuation(P, J));
                CHECK(valuation(P, K->mul(a, b)) == valuation(P, a) + valuation(P, b));
                CHECK(valuation(P, I) == valuation(P, a));
            }
            // factorization reproduces the ideal
            Ideal prod = Ideal::unit(K);
            for (auto& [P, e] : factor_ideal(I)) prod = prod * P.ideal.pow(static_cast<unsigned long>(e));
            CHECK(prod == I);
        }
    }
}

TEST_CASE("ramified primes in K(sqrt(-3))")
{
    auto Q = build_field(parse_poly("x"));
    auto r1 = ramified_primes_in_quadratic_ext(adjoin_sqrt_minus(Q));
    CHECK(r1.gamma == 1);
    CHECK(r1.ramified[0].p == 3);

    auto K13 = build_field(parse_poly("x^2-13"));
    auto r2 = ramified_primes_in_quadratic_ext(adjoin_sqrt_minus(K13));
    CHECK(r2.gamma == 2);
    for (auto& P : r2.ramified) CHECK(P.p == 3);

    auto K9 = build_field(parse_poly("x^3-3*x-1"));
    auto r3 = ramified_primes_in_quadratic_ext(adjoin_sqrt_minus(K9));
    CHECK(r3.gamma == 1);
    CHECK(r3.ramified[0].p == 3);
}

TEST_CASE("property: ramified primes match the relative discriminant")
{
    // odd q: v_q(|disc L| / disc K^2) = sum of f over ramified primes above q;
    // q = 2: positive exactly when a dyadic prime ramifies
    std::vector<std::pair<const char*, long>> cases = {{"x", 3},          {"x", 5},           {"x^2-2", 3},
                                                       {"x^2-13", 3},     {"x^2-3", 3},       {"x^2-5", 5},
                                                       {"x^3-3*x-1", 3},  {"x^3-x^2-4*x+1", 3}, {"x^3-6*x-2", 3},
                                                       {"x^2-7", 5},      {"x^3-x^2-5*x+3", 3}, {"x^2-2", 5}};
    for (auto& [s, p] : cases) {
        auto K = build_field(parse_poly(s));
        auto rel = adjoin_sqrt_minus(K, p);
        auto ram = ramified_primes_in_quadratic_ext(rel);
        Int dL = abs(rel.top->disc());
        Int ratio = dL / (K->disc() * K->disc());
        CHECK(ratio * K->disc() * K->disc() == dL);
        for (const Int& q : prime_divisors(Int(2 * p))) {
            int fsum = 0;
            for (auto& P : ram.ramified)
                if (P.p == q) fsum += P.f;
            if (q == 2)
                CHECK((fsum > 0) == divides(Int(2), ratio));
            else
                CHECK(flt::valuation(ratio, q) == fsum);
        }
        if (ratio > 1) CHECK(ram.gamma >= 1);
        if (ratio == 1) CHECK(ram.gamma == 0);
    }
}

TEST_CASE("K(sqrt(-3)) can be unramified at every finite prime")
{
    // Q(sqrt 3, sqrt -3) = Q(sqrt 3, i) has discriminant 144 = disc(Q(sqrt 3))^2
    auto K = build_field(parse_poly("x^2-3"));
    auto rel = adjoin_sqrt_minus(K);
    CHECK(rel.top->disc() == 144);
    CHECK(ramified_primes_in_quadratic_ext(rel).gamma == 0);
}
