#include "ellbc/binomial.hpp"
#include "ellbc/interpolation.hpp"

#include <gtest/gtest.h>

using namespace ellbc;

namespace {

NumericContext ctx60;

Qtp random_base(Rng& rng)
{
    return {rng.point(0.7, 1.4), rng.point(0.7, 1.4), polar(Real(rng.uniform(0.05, 0.3)), Real(rng.uniform(-3, 3)))};
}

// Delta_mu(a/b | t^n, 1/b) R*_mu(sqrt(a) q^{lambda_i} t^{1-i}; t^{1-n} sqrt(a), b / sqrt(a))
Complex binom_definition(const Partition& l, const Partition& mu, const Complex& a, const Complex& b, const Qtp& B,
                         int n)
{
    const Complex sa = sqrt(a);
    std::vector<Complex> x;
    for (int i = 1; i <= n; ++i) x.push_back(sa * pow(B.q, l[i]) * pow(B.t, 1 - i));
    return delta(mu, a / b, {pow(B.t, n), inv(b)}, B) * rstar_eval(mu, n, pow(B.t, 1 - n) * sa, b / sa, x, B, ctx60);
}

class Binomial : public ::testing::Test {
protected:
    PrecisionGuard guard{ctx60};
    void TearDown() override
    {
        clear_binom_cache();
        clear_interp_cache();
    }
};

}  // namespace

TEST_F(Binomial, AgreesWithDefinitionAndLargerN)
{
    Rng rng(1);
    for (int k = 0; k < 4; ++k) {
        Qtp B = random_base(rng);
        Complex a = rng.point(), b = rng.point();
        for (const auto& l : partitions_up_to(3, 2))
            for (const auto& mu : interval(Partition{}, l)) {
                const int n = std::max(l.length(), 1);
                Complex v = binom(l, mu, a, b, B, ctx60);
                EXPECT_LT(rel_residual(v, binom_definition(l, mu, a, b, B, n), ctx60), Real(1e-30))
                    << l.str() << " " << mu.str();
                EXPECT_LT(rel_residual(v, binom(l, mu, a, b, B, ctx60, n + 1), ctx60), Real(1e-30));
            }
    }
}

TEST_F(Binomial, OutsideContainmentIsZero)
{
    Rng rng(2);
    Qtp B = random_base(rng);
    EXPECT_TRUE(binom(Partition({1}), Partition({2}), rng.point(), rng.point(), B, ctx60).is_zero());
}

TEST_F(Binomial, SpecialValues)
{
    Rng rng(3);
    for (int k = 0; k < 3; ++k) {
        Qtp B = random_base(rng);
        Complex a = rng.point(), b = rng.point();
        for (const auto& l : partitions_up_to(4, 3)) {
            EXPECT_LT(rel_residual(binom(l, Partition{}, a, b, B, ctx60), Complex(1), ctx60), Real(1e-30));
            Complex diag = cplus(l, {a}, B) * delta0(l, a / b, {inv(b)}, B) /
                           (cplus(l, {a / b}, B) * delta0(l, a, {b}, B));
            EXPECT_LT(rel_residual(binom(l, l, a, b, B, ctx60), diag, ctx60), Real(1e-30)) << l.str();
        }
        for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 1}})
            for (const auto& l : enumerate(m, n)) {
                Complex want = delta(l, a / b,
                                     {pow(B.t, n), pow(B.q, -m), pow(B.t, 1 - n) * pow(B.q, m) * a, inv(b)}, B);
                EXPECT_LT(rel_residual(binom(rectangle(m, n), l, a, b, B, ctx60, n), want, ctx60), Real(1e-30))
                    << l.str();
            }
    }
}

TEST_F(Binomial, BEqualsOneIsKronecker)
{
    Rng rng(4);
    Qtp B = random_base(rng);
    Complex a = rng.point(), v = rng.point();
    for (const auto& l : enumerate(2, 2))
        for (const auto& mu : interval(Partition{}, l)) {
            Complex val = binom_normalized(l, mu, a, Complex(1), {v}, B, ctx60);
            if (l == mu)
                EXPECT_LT(rel_residual(val, Complex(1), ctx60), Real(1e-25)) << l.str();
            else
                EXPECT_LT(abs(val), Real(1e-25)) << l.str() << " " << mu.str();
        }
}

TEST_F(Binomial, TransformationLaws)
{
    Rng rng(5);
    for (int k = 0; k < 3; ++k) {
        Qtp B = random_base(rng);
        Qtp Binv{inv(B.q), inv(B.t), B.p};
        Complex a = rng.point(), b = rng.point();
        for (const auto& l : partitions_up_to(3, 2))
            for (const auto& mu : interval(Partition{}, l)) {
                Complex v = binom(l, mu, a, b, B, ctx60);
                EXPECT_LT(rel_residual(binom(l, mu, B.p * a, b, B, ctx60), v, ctx60), Real(1e-28));
                EXPECT_LT(rel_residual(binom(l, mu, a, B.p * b, B, ctx60), v, ctx60), Real(1e-28));
                EXPECT_LT(rel_residual(binom(l, mu, inv(a), inv(b), Binv, ctx60), v, ctx60), Real(1e-28));
            }
    }
}

TEST_F(Binomial, InvQProductForm)
{
    Rng rng(6);
    for (int k = 0; k < 3; ++k) {
        Qtp B = random_base(rng);
        Complex a = rng.point();
        const Complex bq = inv(B.q);
        Complex direct = binom_normalized(Partition({2, 1}), Partition({1}), a, bq, {}, B, ctx60);
        EXPECT_LT(rel_residual(direct, binom_closed(Partition({2, 1}), Partition({1}), a, ClosedKind::inv_q, B), ctx60),
                  Real(1e-25));
        for (const auto& l : partitions_up_to(3, 3))
            for (const auto& mu : interval(Partition{}, l)) {
                Complex c = binom_closed(l, mu, a, ClosedKind::inv_q, B);
                if (!strip_relation(mu, l, 1, true)) {
                    EXPECT_TRUE(c.is_zero());
                    EXPECT_LT(abs(binom_normalized(l, mu, a, bq, {}, B, ctx60)), Real(1e-25));
                } else {
                    EXPECT_LT(rel_residual(binom_normalized(l, mu, a, bq, {}, B, ctx60), c, ctx60), Real(1e-25))
                        << l.str() << " " << mu.str();
                }
            }
    }
}

TEST_F(Binomial, TProductForm)
{
    Rng rng(7);
    Qtp B = random_base(rng);
    Complex a = rng.point();
    for (const auto& l : partitions_up_to(3, 3))
        for (const auto& mu : interval(Partition{}, l)) {
            Complex c = binom_closed(l, mu, a, ClosedKind::t, B);
            Complex v = binom_normalized(l, mu, a, B.t, {}, B, ctx60);
            if (c.is_zero())
                EXPECT_LT(abs(v), Real(1e-25)) << l.str() << " " << mu.str();
            else
                EXPECT_LT(rel_residual(v, c, ctx60), Real(1e-25)) << l.str() << " " << mu.str();
        }
}

TEST_F(Binomial, SingularLocusDetection)
{
    Rng rng(8);
    Qtp B = random_base(rng);
    EXPECT_TRUE(near_binom_singular(pow(B.q, -2) * B.t, 3, 2, B, 1e-6));
    EXPECT_TRUE(near_binom_singular(B.p * inv(B.q), 3, 2, B, 1e-6));
    EXPECT_FALSE(near_binom_singular(rng.point(3.0, 4.0) * B.q * B.q * B.q * B.q * B.q, 3, 2, B, 1e-6));
}
