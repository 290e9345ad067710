#include "ellbc/bigrid.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ellbc;
using namespace ellbc::bigrid;

namespace {

long choose(int a, int b)
{
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

// gamma(1, i, j) = gamma(0, i - 1, j - 1) wherever both are in the domain.
bool shares_eta(const Bigrid& g)
{
    for (int i = 2; i <= g.n(); ++i)
        for (int j = 1; j <= g.m(); ++j)
            if (g.in_domain(1, i, j) && g.in_domain(0, i - 1, j - 1) && !(g(1, i, j) == g(0, i - 1, j - 1)))
                return false;
    return true;
}

// Entries tagged so that gamma(alpha, i, j) can be read back from a point.
Bigrid tagged(const PrimeField& F, int m, int n)
{
    Bigrid g(m, n);
    for (int a = 0; a <= 1; ++a)
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j <= m; ++j)
                if (g.in_domain(a, i, j)) g.set(a, i, j, normalize(F, F.make(1000 * a + 10 * i + j), F.make(1)));
    return g;
}

ProjPoint tag(const PrimeField& F, int a, int i, int j) { return normalize(F, F.make(1000 * a + 10 * i + j), F.make(1)); }

}  // namespace

TEST(PrimeFieldTest, Axioms)
{
    PrimeField F;
    EXPECT_TRUE(is_prime(F.prime()));
    EXPECT_FALSE(is_prime(91));
    Rng rng(1);
    for (int k = 0; k < 1000; ++k) {
        FieldElem a = F.random(rng), b = F.random(rng), c = F.random(rng);
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
        EXPECT_EQ(F.sub(F.add(a, b), b), a);
        EXPECT_TRUE(F.add(a, F.neg(a)).is_zero());
        if (!a.is_zero()) EXPECT_EQ(F.mul(a, F.inv(a)), F.make(1));
    }
    EXPECT_THROW(F.inv(F.make(0)), std::exception);
    EXPECT_EQ(F.make(-1), F.neg(F.make(1)));
}

TEST(PrimeFieldTest, SmallPrimeFermat)
{
    PrimeField F(101);
    for (int x = 1; x < 101; ++x) EXPECT_EQ(F.pow(F.make(x), 100), F.make(1));
}

TEST(ProjectiveTest, DotIsAlternatingAndSL2Invariant)
{
    PrimeField F;
    Rng rng(2);
    for (int k = 0; k < 200; ++k) {
        ProjPoint x = random_point(F, rng), y = random_point(F, rng);
        EXPECT_TRUE(dot(F, x, x).is_zero());
        EXPECT_EQ(dot(F, x, y), F.neg(dot(F, y, x)));
        SL2 s = random_sl2(F, rng);
        EXPECT_EQ(F.sub(F.mul(s.a, s.d), F.mul(s.b, s.c)), F.make(1));
        // dot depends on representatives only up to scale
        EXPECT_EQ(dot(F, apply(F, s, x), apply(F, s, y)).is_zero(), dot(F, x, y).is_zero());
    }
    EXPECT_THROW(normalize(F, F.make(0), F.make(0)), std::exception);
}

TEST(BigridTest, DomainCompleteness)
{
    Bigrid g(3, 2);
    int count = 0;
    for (int a = 0; a <= 1; ++a)
        for (int i = 1; i <= 2; ++i)
            for (int j = 0; j <= 3; ++j) count += g.in_domain(a, i, j);
    EXPECT_EQ(count, 2 * 2 * 3);
    EXPECT_FALSE(g.in_domain(0, 1, 3));
    EXPECT_FALSE(g.in_domain(1, 1, 0));
    EXPECT_FALSE(g.in_domain(0, 3, 0));
    Bigrid e(3, 2, true);
    EXPECT_TRUE(e.in_domain(0, 1, 3));
    EXPECT_TRUE(e.in_domain(1, 1, 0));
}

TEST(BigridTest, MonomialCount)
{
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            EXPECT_EQ(static_cast<long>(SymPolynomial::monomials(m, n).size()), choose(m + n, n));
}

TEST(BigridTest, KindStructure)
{
    PrimeField F;
    Rng rng(3);
    Bigrid mono = make_bigrid(F, Kind::monomial, 3, 3, rng);
    for (int a = 0; a <= 1; ++a)
        for (int j = 0; j <= 3; ++j)
            for (int i = 2; i <= 3; ++i)
                if (mono.in_domain(a, i, j)) EXPECT_EQ(mono(a, i, j), mono(a, 1, j));
    Bigrid del = make_bigrid(F, Kind::delta, 3, 3, rng);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j < 3; ++j) EXPECT_EQ(del(0, i, j), del(1, i, j));
    std::vector<ProjPoint> eta;
    for (int k = 0; k < 4 * 3; ++k) eta.push_back(random_point(F, rng));
    Bigrid cau = cauchy_bigrid(3, 3, eta);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) EXPECT_EQ(cau(1, i, j), eta[static_cast<std::size_t>((i - 1) * 3 + j - 1)]);
    EXPECT_TRUE(shares_eta(cau));
    EXPECT_THROW(make_bigrid(F, Kind::univariate, 2, 2, rng), std::invalid_argument);
}

TEST(BigridTest, KindNames)
{
    for (Kind k : {Kind::univariate, Kind::monomial, Kind::schur, Kind::cauchy, Kind::delta, Kind::elliptic_I1,
                   Kind::random})
        EXPECT_EQ(parse_kind(kind_name(k)), k);
    EXPECT_FALSE(parse_kind("nonsense").has_value());
}

// The gamma_21 list for lambda = 21 inside 2^3.
TEST(BigridTest, GammaPointList)
{
    PrimeField F;
    Bigrid g = tagged(F, 2, 3);
    const Partition l({2, 1});
    auto check = [&](const Partition& mu, std::vector<std::array<int, 3>> want) {
        auto got = gamma_point(g, l, mu);
        ASSERT_EQ(got.size(), 3u);
        for (std::size_t k = 0; k < 3; ++k)
            EXPECT_EQ(got[k], tag(F, want[k][0], want[k][1], want[k][2])) << mu.str() << " coordinate " << k + 1;
    };
    check(Partition{}, {{{0, 1, 0}, {0, 2, 0}, {0, 3, 0}}});
    check(Partition({1}), {{{0, 1, 1}, {0, 2, 0}, {0, 3, 0}}});
    check(Partition({2}), {{{1, 1, 2}, {0, 2, 0}, {0, 3, 0}}});
    check(Partition({1, 1}), {{{0, 1, 1}, {0, 2, 1}, {0, 3, 0}}});
    check(Partition({2, 1}), {{{1, 1, 2}, {0, 2, 1}, {0, 3, 0}}});
    check(Partition({2, 2}), {{{1, 1, 2}, {1, 2, 2}, {0, 3, 0}}});
    check(Partition({1, 1, 1}), {{{1, 1, 1}, {1, 2, 1}, {1, 3, 1}}});
    check(Partition({2, 1, 1}), {{{1, 1, 2}, {1, 2, 1}, {1, 3, 1}}});
    check(Partition({2, 2, 1}), {{{1, 1, 2}, {1, 2, 2}, {1, 3, 1}}});
    check(Partition({2, 2, 2}), {{{1, 1, 2}, {1, 2, 2}, {1, 3, 2}}});
}

TEST(BigridTest, UnivariateAndCauchyClosedForms)
{
    PrimeField F;
    Rng rng(4);
    for (int m = 1; m <= 4; ++m) {
        Bigrid g = make_bigrid(F, Kind::univariate, m, 1, rng);
        for (int j = 0; j <= m; ++j) {
            SymPolynomial P = quasi_interp_solve(F, g, Partition{j});
            auto at = gamma_point(g, Partition{j}, Partition{j});
            FieldElem norm = univariate_product(F, g, j, at[0]);
            ProjPoint x = random_point(F, rng);
            std::vector<ProjPoint> xs{x};
            EXPECT_EQ(F.mul(P(F, xs), norm), univariate_product(F, g, j, x));
        }
    }
    Bigrid c = make_bigrid(F, Kind::cauchy, 2, 2, rng);
    for (const auto& l : enumerate(2, 2)) {
        SymPolynomial P = quasi_interp_solve(F, c, l);
        auto at = gamma_point(c, l, l);
        FieldElem norm = cauchy_product(F, c, l, at);
        std::vector<ProjPoint> x{random_point(F, rng), random_point(F, rng)};
        EXPECT_EQ(F.mul(P(F, x), norm), cauchy_product(F, c, l, x)) << l.str();
    }
}

TEST(BigridTest, DeltaBigridKronecker)
{
    PrimeField F;
    Rng rng(5);
    Bigrid g = make_bigrid(F, Kind::delta, 2, 2, rng);
    for (const auto& l : enumerate(2, 2)) {
        SymPolynomial P = quasi_interp_solve(F, g, l);
        for (const auto& mu : enumerate(2, 2)) {
            std::vector<ProjPoint> x;
            for (int i = 1; i <= 2; ++i) x.push_back(mu[i] < 2 ? g(0, i, mu[i]) : g(1, i, mu[i]));
            EXPECT_EQ(P(F, x).is_zero(), !(l == mu)) << l.str() << " at " << mu.str();
        }
    }
}

TEST(BigridTest, PerfectionOutcomes)
{
    PrimeField F;
    Rng rng(6);
    auto run = [&](Kind k, int m, int n) {
        Bigrid g = make_bigrid(F, k, m, n, rng);
        return perfection_check(F, g, 2, rng);
    };
    EXPECT_TRUE(run(Kind::monomial, 2, 2).pass);
    EXPECT_TRUE(run(Kind::elliptic_I1, 2, 2).pass);
    EXPECT_TRUE(run(Kind::elliptic_I1, 2, 3).pass);
    EXPECT_TRUE(run(Kind::elliptic_I1, 3, 2).pass);
    auto bad = run(Kind::random, 2, 2);
    EXPECT_FALSE(bad.pass);
    ASSERT_TRUE(bad.failing_lambda.has_value());
    EXPECT_TRUE(contains(*bad.failing_lambda, rectangle(2, 2)));
}

TEST(BigridTest, ComplementAndTruncation)
{
    PrimeField F;
    Rng rng(7);
    for (int k = 0; k < 3; ++k) {
        Bigrid g = make_bigrid(F, Kind::random, 3, 2, rng);
        Bigrid cc = complement_bigrid(complement_bigrid(g));
        for (int a = 0; a <= 1; ++a)
            for (int i = 1; i <= 2; ++i)
                for (int j = 0; j <= 3; ++j)
                    if (g.in_domain(a, i, j)) EXPECT_EQ(cc(a, i, j), g(a, i, j));
    }
    Bigrid c = make_bigrid(F, Kind::cauchy, 3, 3, rng);
    for (const Bigrid& h : {truncate_right(c), truncate_down(c), truncate_left(c), truncate_up(c)})
        EXPECT_TRUE(shares_eta(h));
    Bigrid e = make_bigrid(F, Kind::elliptic_I1, 3, 3, rng);
    for (const Bigrid& h : {truncate_right(e), truncate_down(e), truncate_left(e), truncate_up(e)}) {
        EXPECT_TRUE(is_regular(F, h));
        EXPECT_TRUE(perfection_check(F, h, 1, rng).pass);
    }
}

TEST(BigridTest, SL2PreservesOutcome)
{
    PrimeField F;
    Rng rng(8);
    for (Kind k : {Kind::monomial, Kind::random}) {
        Bigrid g = make_bigrid(F, k, 2, 2, rng);
        const bool before = perfection_check(F, g, 1, rng).pass;
        EXPECT_EQ(perfection_check(F, transform(F, g, random_sl2(F, rng)), 1, rng).pass, before);
    }
}

// For a regular perfect bigrid the interpolation polynomials are a basis.
TEST(BigridTest, InterpolationBasis)
{
    PrimeField F;
    Rng rng(9);
    Bigrid g = make_bigrid(F, Kind::elliptic_I1, 2, 2, rng);
    auto box = enumerate(2, 2);
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& l : box) rows.push_back(quasi_interp_solve(F, g, l).coeffs());
    EXPECT_EQ(rank(F, rows, SymPolynomial::monomials(2, 2).size()), box.size());
}

TEST(BigridTest, LinearAlgebra)
{
    PrimeField F(101);
    std::vector<std::vector<FieldElem>> rows{{F.make(1), F.make(2), F.make(3)}, {F.make(2), F.make(4), F.make(6)}};
    EXPECT_EQ(rank(F, rows, 3), 1u);
    auto ns = nullspace(F, rows, 3);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns) {
        FieldElem s = F.make(0);
        for (std::size_t k = 0; k < 3; ++k) s = F.add(s, F.mul(rows[0][k], v[k]));
        EXPECT_TRUE(s.is_zero());
    }
}
