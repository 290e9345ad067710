#include "ellbc/numeric.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ellbc;

namespace {

NumericContext ctx60;

// Direct truncation: factors k = 0..K with K least such that
// |p|^K max(|x|, 1/|x|) < 10^(-digits-5).
Complex theta_oracle(const Complex& x, const Complex& p, int digits)
{
    if (p.is_zero()) return Complex(1) - x;
    const Real ap = abs(p);
    const Real big = std::max(abs(x), 1 / abs(x));
    const Real bound = boost::multiprecision::pow(Real(10), -digits - 5);
    int K = 0;
    Real pk = 1;
    while (pk * big >= bound) {
        pk *= ap;
        ++K;
    }
    Complex r(1), pw(1);
    for (int k = 0; k <= K; ++k) {
        r *= (Complex(1) - pw * x) * (Complex(1) - pw * p / x);
        pw *= p;
    }
    return r;
}

class Numeric : public ::testing::Test {
protected:
    PrecisionGuard guard{ctx60};
};

}  // namespace

TEST_F(Numeric, ThetaTrivialValues)
{
    EXPECT_TRUE(theta(Complex(2), Complex(0)) == Complex(-1));
    EXPECT_TRUE(theta(Complex(1), Complex(0.1)).is_zero());
}

TEST_F(Numeric, ThetaAgainstTruncatedProduct)
{
    Complex p = parse_complex("0.1");
    Complex x = parse_complex("0.5");
    EXPECT_LT(rel_residual(theta(x, p), theta_oracle(x, p, 60), ctx60), Real(1e-55));
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        Complex pp = polar(Real(rng.uniform(0.0, 0.9)), Real(rng.uniform(-3.1, 3.1)));
        Complex xx = rng.point(0.2, 5.0);
        EXPECT_LT(rel_residual(theta(xx, pp), theta_oracle(xx, pp, 60), ctx60), Real(1e-50));
    }
}

TEST_F(Numeric, ThetaErrors)
{
    EXPECT_THROW(theta(Complex(0), Complex(0.1)), std::domain_error);
    EXPECT_THROW(theta(Complex(2), Complex(1.0)), std::domain_error);
}

TEST_F(Numeric, ThetaPochhammer)
{
    Complex x = parse_complex("0.3"), q = parse_complex("0.7"), p = parse_complex("0.1");
    EXPECT_TRUE(theta_poch(x, q, p, 0) == Complex(1));
    EXPECT_LT(rel_residual(theta_poch(x, q, p, 1), theta_oracle(x, p, 60), ctx60), Real(1e-55));
    Complex prod = theta_oracle(x, p, 60) * theta_oracle(x * q, p, 60) * theta_oracle(x * q * q, p, 60);
    EXPECT_LT(rel_residual(theta_poch(x, q, p, 3), prod, ctx60), Real(1e-55));
    EXPECT_THROW(theta_poch(x, q, p, -1), std::invalid_argument);
}

TEST_F(Numeric, ThetaFunctionalEquations)
{
    // theta(px) = theta(1/x) = -theta(x)/x
    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        Complex p = polar(Real(rng.uniform(0.05, 0.6)), Real(rng.uniform(-3.1, 3.1)));
        Complex x = rng.point(0.3, 3.0);
        EXPECT_LT(rel_residual(theta(p * x, p), theta(inv(x), p), ctx60), Real(1e-55));
        EXPECT_LT(rel_residual(theta(inv(x), p), -theta(x, p) / x, ctx60), Real(1e-55));
    }
}

TEST_F(Numeric, ComplexArithmetic)
{
    Rng rng(9);
    for (int k = 0; k < 50; ++k) {
        Complex z = rng.point(0.1, 10.0), w = rng.point(0.1, 10.0);
        EXPECT_LT(rel_residual(z * w / w, z, ctx60), Real(1e-58));
        EXPECT_LT(rel_residual(sqrt(z) * sqrt(z), z, ctx60), Real(1e-58));
        EXPECT_GE(sqrt(z).re(), 0);
        EXPECT_LT(rel_residual(exp(log(z)), z, ctx60), Real(1e-58));
        EXPECT_LT(rel_residual(pow(z, -3) * pow(z, 3), Complex(1), ctx60), Real(1e-58));
    }
    EXPECT_THROW(inv(Complex(0)), SingularError);
}

TEST_F(Numeric, StringRoundTrip)
{
    Complex z = parse_complex("1.25", "-0.5");
    EXPECT_EQ(to_double(z.re()), 1.25);
    EXPECT_EQ(to_double(z.im()), -0.5);
    Complex back = parse_complex(to_string(z.re(), 40), to_string(z.im(), 40));
    EXPECT_TRUE(back == z);
}

TEST(NumericContextTest, Validation)
{
    NumericContext c;
    EXPECT_NO_THROW(c.validate());
    c.digits = 10;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = NumericContext{};
    c.tol = -1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = NumericContext{};
    c.genericity_margin = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(NumericContextTest, PrecisionGuardRestores)
{
    const unsigned before = Real::default_precision();
    {
        PrecisionGuard g(80);
        EXPECT_EQ(Real::default_precision(), 80u);
    }
    EXPECT_EQ(Real::default_precision(), before);
}

TEST(RngTest, SplitAndSeedReproduce)
{
    Rng a(42), b(42);
    for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next(), b.next());
    Rng c = Rng(42).split("x"), d = Rng(42).split("x"), e = Rng(42).split("y");
    const auto cv = c.next();
    EXPECT_EQ(cv, d.next());
    EXPECT_NE(cv, e.next());
}

TEST_F(Numeric, SampleUnconstrainedReproducible)
{
    SampleSpec spec;
    spec.names = {"a", "b"};
    Rng r1(42), r2(42);
    ParameterSet x = sample_generic(spec, ctx60, r1), y = sample_generic(spec, ctx60, r2);
    EXPECT_TRUE(x.p == y.p && x.q == y.q && x.t == y.t && x["a"] == y["a"] && x["b"] == y["b"]);
    EXPECT_LT(abs(x.p), Real(1));
    EXPECT_FALSE(x["a"].is_zero());
}

TEST_F(Numeric, SampleBalancedSolvesForced)
{
    // q^m t^{n-1} abcd = p with (m, n) = (1, 2): d = p / (q t a b c)
    SampleSpec spec;
    spec.names = {"a", "b", "c"};
    spec.m = 1;
    spec.n = 2;
    spec.relations.push_back({Monomial{Complex(1), {{"q", 1}, {"t", 1}, {"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"p", -1}}},
                              "d"});
    Rng rng(1);
    for (int k = 0; k < 20; ++k) {
        ParameterSet ps = sample_generic(spec, ctx60, rng);
        Complex d = ps.p / (ps.q * ps.t * ps["a"] * ps["b"] * ps["c"]);
        EXPECT_LT(rel_residual(ps["d"], d, ctx60), Real(1e-55));
    }
}

TEST_F(Numeric, SampleRejectsNearSingular)
{
    // Every accepted set keeps q and the listed monomials away from p^Z.
    SampleSpec spec;
    spec.names = {"a"};
    spec.regular.push_back(Monomial{Complex(1), {{"a", 1}, {"q", 1}}});
    NumericContext wide = ctx60;
    wide.genericity_margin = 0.2;
    Rng rng(2);
    for (int k = 0; k < 50; ++k) {
        ParameterSet ps = sample_generic(spec, wide, rng);
        EXPECT_GE(coset_distance(ps.q, ps.p), 0.2);
        EXPECT_GE(coset_distance(ps["a"] * ps.q, ps.p), 0.2);
    }
    // A margin no sample can meet terminates with an error instead of looping.
    wide.genericity_margin = 100.0;
    EXPECT_THROW(sample_generic(spec, wide, rng), GenericityError);
}

TEST_F(Numeric, CosetDistance)
{
    Complex p = parse_complex("0.2");
    EXPECT_LT(coset_distance(Complex(1), p), 1e-12);
    EXPECT_LT(coset_distance(p * p, p), 1e-12);
    EXPECT_GT(coset_distance(Complex(-1), p), 1.0);
}
