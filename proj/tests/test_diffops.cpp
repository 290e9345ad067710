#include "ellbc/diffops.hpp"
#include "ellbc/theta_space.hpp"

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

EvaluableFn constant(int n, Complex c)
{
    return {n, [c](std::span<const Complex>) { return c; }, true};
}

EvaluableFn wrap(const SymThetaElement& e)
{
    return {e.n(), [e](std::span<const Complex> x) { return e(x); }, true};
}

class Diffops : public ::testing::Test {
protected:
    PrecisionGuard guard{ctx60};
};

}  // namespace

// With t^{n-1} abcd = p the operator sends 1 to prod_i theta(ab t^{n-i}, ac t^{n-i}, ad t^{n-i}).
TEST_F(Diffops, ConstantImage)
{
    Rng rng(1);
    for (int n = 1; n <= 3; ++n) {
        Qtp B = random_base(rng);
        Complex a = rng.point(), b = rng.point(), c = rng.point();
        Complex d = B.p / (pow(B.t, n - 1) * a * b * c);
        Complex want(1);
        for (int i = 1; i <= n; ++i) {
            Complex ti = pow(B.t, n - i);
            want *= theta(a * b * ti, B.p) * theta(a * c * ti, B.p) * theta(a * d * ti, B.p);
        }
        for (int k = 0; k < 2; ++k) {
            auto x = random_x(rng, n);
            EXPECT_LT(rel_residual(d_weight_sum(a, b, c, d, B, x), want, ctx60), Real(1e-45)) << n;
            EXPECT_LT(rel_residual(apply_D(a, b, c, d, B, n, constant(n, Complex(1)))(x), want, ctx60),
                      Real(1e-45));
        }
    }
}

// With q^m t^{n-1} abcd = p the image of a degree-m element is again
// BC_n-symmetric of degree m.
TEST_F(Diffops, DegreePreserved)
{
    Rng rng(2);
    for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        Qtp B = random_base(rng);
        auto basis = make_basis(m, n, B.p, ctx60);
        std::vector<Complex> coeffs;
        for (std::size_t k = 0; k < basis->dim(); ++k) coeffs.push_back(rng.point());
        SymThetaElement f(basis, coeffs);
        Complex a = rng.point(), b = rng.point(), c = rng.point();
        Complex d = B.p / (pow(B.q, m) * pow(B.t, n - 1) * a * b * c);
        EvaluableFn g = apply_D(a, b, c, d, B, n, wrap(f));
        auto x = random_x(rng, n);
        const Complex gx = g(x);
        auto y = x;
        y[0] = B.p * x[0];
        EXPECT_LT(rel_residual(g(y), pow(inv(B.p * x[0] * x[0]), m) * gx, ctx60), Real(1e-40)) << m << "," << n;
        y = x;
        y[0] = inv(x[0]);
        EXPECT_LT(rel_residual(g(y), gx, ctx60), Real(1e-40));
        if (n == 2) {
            y = {x[1], x[0]};
            EXPECT_LT(rel_residual(g(y), gx, ctx60), Real(1e-40));
        }
    }
}

// The shift is the only place f enters: f = 1 recovers the bare weight sum.
TEST_F(Diffops, LinearInF)
{
    Rng rng(3);
    Qtp B = random_base(rng);
    Complex a = rng.point(), b = rng.point(), c = rng.point(), d = rng.point();
    auto x = random_x(rng, 2);
    Complex k = rng.point();
    EXPECT_LT(rel_residual(apply_D(a, b, c, d, B, 2, constant(2, k))(x), k * d_weight_sum(a, b, c, d, B, x), ctx60),
              Real(1e-50));
}

TEST_F(Diffops, RaisingOnEmptyProduct)
{
    Rng rng(4);
    Qtp B = random_base(rng);
    Complex k = rng.point();
    EvaluableFn g = apply_Dplus(rng.point(), rng.point(), rng.point(), rng.point(), rng.point(), B, 0, constant(0, k));
    EXPECT_TRUE(g(std::span<const Complex>{}) == k);
}

TEST_F(Diffops, RaiseBalancing)
{
    // t^{n-1} u0 u1 u2 u3 u4 u5 = p^2 q
    Rng rng(5);
    Qtp B = random_base(rng);
    Complex u[5];
    for (auto& v : u) v = rng.point();
    for (int n = 1; n <= 3; ++n) {
        Complex u5 = raise_u5(u[0], u[1], u[2], u[3], u[4], B, n);
        Complex lhs = pow(B.t, n - 1) * u[0] * u[1] * u[2] * u[3] * u[4] * u5;
        EXPECT_LT(rel_residual(lhs, B.p * B.p * B.q, ctx60), Real(1e-55));
    }
}

TEST_F(Diffops, RaisingKeepsSymmetry)
{
    Rng rng(6);
    Qtp B = random_base(rng);
    auto basis = make_basis(1, 2, B.p, ctx60);
    std::vector<Complex> coeffs{rng.point(), rng.point(), rng.point()};
    SymThetaElement f(basis, coeffs);
    EvaluableFn g = apply_Dplus(rng.point(), rng.point(), rng.point(), rng.point(), rng.point(), B, 2, wrap(f));
    auto x = random_x(rng, 2);
    std::vector<Complex> y{inv(x[1]), x[0]};
    EXPECT_LT(rel_residual(g(y), g(x), ctx60), Real(1e-40));
}

TEST_F(Diffops, ArityMismatch)
{
    Rng rng(7);
    Qtp B = random_base(rng);
    EXPECT_THROW(apply_D(1.1, 1.2, 1.3, 1.4, B, 2, constant(1, Complex(1))), std::invalid_argument);
    EXPECT_THROW(apply_Dplus(1.1, 1.2, 1.3, 1.4, 1.5, B, 2, constant(3, Complex(1))), std::invalid_argument);
}
