#include "ellbc/interpolation.hpp"

#include <gtest/gtest.h>

using namespace ellbc;

namespace {

NumericContext ctx60;

Qtp random_base(Rng& rng)
{
    return {rng.point(0.7, 1.4), rng.point(0.7, 1.4), polar(Real(rng.uniform(0.05, 0.3)), Real(rng.uniform(-3, 3)))};
}

std::vector<Complex> random_x(Rng& rng, int n)
{
    std::vector<Complex> x;
    for (int i = 0; i < n; ++i) x.push_back(rng.point(0.7, 1.4));
    return x;
}

// The rule read directly: l0 is the last index where mu and lambda differ,
// l1 the last index where mu reaches m.
int split_oracle(const Partition& lambda, const Partition& mu, int m, int n)
{
    int l0 = 0, l1 = 0;
    for (int i = n; i >= 1 && l0 == 0; --i)
        if (mu[i] != lambda[i]) l0 = i;
    for (int i = n; i >= 1 && l1 == 0; --i)
        if (mu[i] == m) l1 = i;
    return (l0 == 0 || mu[l0] < lambda[l0]) ? l1 : l0;
}

class Interp : public ::testing::Test {
protected:
    PrecisionGuard guard{ctx60};
    void TearDown() override { clear_interp_cache(); }
};

}  // namespace

TEST(InterpSplit, Examples)
{
    EXPECT_EQ(interp_split(Partition({2, 1}), Partition({2}), 3, 3), 0);
    EXPECT_EQ(interp_split(Partition({2, 1}), Partition({3, 3, 3}), 3, 3), 3);
    EXPECT_EQ(interp_split(Partition({1}), Partition({2, 2}), 2, 2), 2);
    EXPECT_EQ(interp_split(Partition({2, 1}), Partition{}, 3, 3), 0);
    EXPECT_EQ(interp_split(Partition({1, 1}), Partition{}, 2, 2), 0);
}

TEST(InterpSplit, MatchesRuleOnBoxes)
{
    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 3}})
        for (const auto& l : enumerate(m, n))
            for (const auto& mu : enumerate(m, n)) EXPECT_EQ(interp_split(l, mu, m, n), split_oracle(l, mu, m, n));
}

TEST_F(Interp, PointLayout)
{
    Rng rng(1);
    Qtp B = random_base(rng);
    Complex a = rng.point(), b = rng.point();
    // l = 0: (a t^{n-1}, .., a)
    auto x = interp_point(Partition({1}), Partition{}, 2, 3, a, b, B);
    ASSERT_EQ(x.size(), 3u);
    for (int i = 1; i <= 3; ++i) EXPECT_TRUE(x[static_cast<std::size_t>(i - 1)] == a * pow(B.t, 3 - i));
    // l = n: (b q^{m-mu_i} t^{i-1})
    auto y = interp_point(Partition({1}), Partition({2, 2}), 2, 2, a, b, B);
    EXPECT_TRUE(y[0] == b * pow(B.q, 0) * pow(B.t, 0));
    EXPECT_TRUE(y[1] == b * pow(B.q, 0) * pow(B.t, 1));
}

TEST_F(Interp, VanishingAndNormalization)
{
    Rng rng(2);
    for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        Qtp B = random_base(rng);
        Complex a = rng.point(), b = rng.point();
        for (const auto& lam : enumerate(m, n)) {
            auto P = interp_theta(lam, m, n, a, b, B, ctx60);
            for (const auto& mu : enumerate(m, n)) {
                if (mu == lam) continue;
                EXPECT_LT(abs((*P)(interp_point(lam, mu, m, n, a, b, B))), Real(1e-40) * P->scale())
                    << lam.str() << " at " << mu.str();
            }
            auto pp = principal_point(P->v(), n, B.t);
            Complex want = c0(lam, {pow(B.t, n - 1) * a * P->v(), a / P->v()}, B) *
                           c0(complement(lam, m, n), {pow(B.t, n - 1) * b * P->v(), b / P->v()}, B);
            EXPECT_LT(rel_residual((*P)(pp), want, ctx60), Real(1e-40));
        }
    }
}

TEST_F(Interp, EmptyAndFullAgainstClosedForms)
{
    Rng rng(3);
    for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        Qtp B = random_base(rng);
        Complex a = rng.point(), b = rng.point();
        auto P0 = interp_theta(Partition{}, m, n, a, b, B, ctx60);
        auto Pm = interp_theta(rectangle(m, n), m, n, a, b, B, ctx60);
        for (int k = 0; k < 5; ++k) {
            auto x = random_x(rng, n);
            EXPECT_LT(rel_residual((*P0)(x), interp_zero_closed(x, m, b, B), ctx60), Real(1e-35));
            EXPECT_LT(rel_residual((*Pm)(x), interp_zero_closed(x, m, a, B), ctx60), Real(1e-35));
        }
    }
}

TEST_F(Interp, CauchyCaseProduct)
{
    // q^m t^n ab = pq: P*_lambda = prod_{i,j} theta(a t^{n - lambda'_j} q^{j-1} x_i^{+-1}) up to scale
    Rng rng(4);
    for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 2}}) {
        Qtp B = random_base(rng);
        Complex a = rng.point();
        Complex b = B.p * B.q / (pow(B.q, m) * pow(B.t, n) * a);
        for (const auto& lam : enumerate(m, n)) {
            auto P = interp_theta(lam, m, n, a, b, B, ctx60);
            const Partition lc = conjugate(lam);
            auto closed = [&](const std::vector<Complex>& x) {
                Complex r(1);
                for (const auto& xi : x)
                    for (int j = 1; j <= m; ++j) {
                        Complex c = a * pow(B.t, n - lc[j]) * pow(B.q, j - 1);
                        r *= theta(c * xi, B.p) * theta(c / xi, B.p);
                    }
                return r;
            };
            auto y = random_x(rng, n);
            for (int k = 0; k < 3; ++k) {
                auto x = random_x(rng, n);
                EXPECT_LT(rel_residual((*P)(x) * closed(y), (*P)(y) * closed(x), ctx60), Real(1e-35)) << lam.str();
            }
        }
    }
}

TEST_F(Interp, IndependentOfV)
{
    Rng rng(5);
    Qtp B = random_base(rng);
    Complex a = rng.point(), b = rng.point();
    for (const auto& lam : enumerate(2, 2)) {
        auto P1 = interp_theta(lam, 2, 2, a, b, B, rng.point(0.8, 1.2), ctx60);
        auto P2 = interp_theta(lam, 2, 2, a, b, B, rng.point(0.8, 1.2), ctx60);
        auto x = random_x(rng, 2);
        EXPECT_LT(rel_residual((*P1)(x), (*P2)(x), ctx60), Real(1e-35)) << lam.str();
    }
}

TEST_F(Interp, MemoizedPerArguments)
{
    Rng rng(6);
    Qtp B = random_base(rng);
    Complex a = rng.point(), b = rng.point();
    auto P1 = interp_theta(Partition({1}), 1, 2, a, b, B, ctx60);
    auto P2 = interp_theta(Partition({1}), 1, 2, a, b, B, ctx60);
    EXPECT_EQ(P1.get(), P2.get());
}

TEST_F(Interp, RStarSpecialValues)
{
    Rng rng(7);
    for (int n = 1; n <= 2; ++n) {
        Qtp B = random_base(rng);
        Complex a = rng.point(), b = rng.point();
        auto x = random_x(rng, n);
        EXPECT_LT(rel_residual(rstar_eval(Partition{}, n, a, b, x, B, ctx60), Complex(1), ctx60), Real(1e-45));
        for (const auto& lam : enumerate(2, n)) {
            if (lam.empty()) continue;
            Complex v = rng.point();
            RStar R(lam, n, a, b, B, ctx60);
            Complex tn = pow(B.t, n - 1);
            Complex want = delta0(lam, tn * a / b, {tn * a * v, a / v}, B);
            EXPECT_LT(rel_residual(R(principal_point(v, n, B.t)), want, ctx60), Real(1e-35)) << lam.str();
            // a larger box gives the same abelian function
            RStar R2(lam, n, a, b, B, ctx60, lam[1] + 1);
            EXPECT_LT(rel_residual(R(x), R2(x), ctx60), Real(1e-35));
        }
    }
}
