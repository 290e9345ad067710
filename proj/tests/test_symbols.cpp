#include "ellbc/symbols.hpp"

#include <gtest/gtest.h>

using namespace ellbc;

namespace {

NumericContext ctx60;

// Cell-by-cell products written out from the definitions.
Complex brute_c(CKind kind, const Partition& l, const Complex& x, const Qtp& b)
{
    const Partition lc = conjugate(l);
    Complex r(1);
    for (int i = 1; i <= l.length(); ++i)
        for (int j = 1; j <= l[i]; ++j) {
            Complex arg;
            switch (kind) {
            case CKind::zero: arg = pow(b.q, j - 1) * pow(b.t, 1 - i) * x; break;
            case CKind::minus: arg = pow(b.q, l[i] - j) * pow(b.t, lc[j] - i) * x; break;
            case CKind::plus: arg = pow(b.q, l[i] + j - 1) * pow(b.t, 2 - lc[j] - i) * x; break;
            }
            r *= theta(arg, b.p);
        }
    return r;
}

Complex brute_delta0(const Partition& l, const Complex& a, const std::vector<Complex>& bs, const Qtp& b)
{
    Complex r(1);
    for (const auto& bi : bs) r *= brute_c(CKind::zero, l, bi, b) / brute_c(CKind::zero, l, b.p * b.q * a / bi, b);
    return r;
}

Complex brute_delta(const Partition& l, const Complex& a, const std::vector<Complex>& bs, const Qtp& b)
{
    const Complex pq = b.p * b.q;
    return brute_delta0(l, a, bs, b) * brute_c(CKind::zero, stats(l).double_square, pq * a, b) /
           (brute_c(CKind::minus, l, pq, b) * brute_c(CKind::minus, l, b.t, b) * brute_c(CKind::plus, l, a, b) *
            brute_c(CKind::plus, l, pq * a / b.t, b));
}

Qtp random_base(Rng& rng)
{
    return {rng.point(0.6, 1.6), rng.point(0.6, 1.6), polar(Real(rng.uniform(0.05, 0.3)), Real(rng.uniform(-3, 3)))};
}

Partition random_partition(Rng& rng, int max_size)
{
    auto all = partitions_up_to(max_size, 4);
    return all[static_cast<std::size_t>(rng.below(static_cast<int>(all.size())))];
}

class Symbols : public ::testing::Test {
protected:
    PrecisionGuard guard{ctx60};
    Real tight = Real(1e-50);
};

}  // namespace

TEST_F(Symbols, SingleCell)
{
    Rng rng(1);
    Qtp b = random_base(rng);
    Complex x = rng.point();
    EXPECT_LT(rel_residual(c0(Partition({1}), {x}, b), theta(x, b.p), ctx60), tight);
    Qtp b0{b.q, b.t, Complex(0)};
    EXPECT_LT(rel_residual(c0(Partition({1}), {x}, b0), Complex(1) - x, ctx60), tight);
}

TEST_F(Symbols, PlusMatchesCellProduct)
{
    Rng rng(2);
    Qtp b = random_base(rng);
    Complex x = rng.point();
    EXPECT_LT(rel_residual(cplus(Partition({2, 1}), {x}, b), brute_c(CKind::plus, Partition({2, 1}), x, b), ctx60),
              tight);
}

TEST_F(Symbols, AllKindsMatchCellProducts)
{
    Rng rng(3);
    for (int k = 0; k < 60; ++k) {
        Qtp b = random_base(rng);
        Partition l = random_partition(rng, 6);
        Complex x = rng.point(), y = rng.point();
        for (CKind kind : {CKind::zero, CKind::minus, CKind::plus}) {
            Complex want = brute_c(kind, l, x, b) * brute_c(kind, l, y, b);
            EXPECT_LT(rel_residual(c_symbol(kind, l, {x, y}, b), want, ctx60), tight) << l.str();
            EXPECT_LT(rel_residual(c_symbol_p(kind, l, {x}, b), brute_c(kind, l, b.p * x, b), ctx60), tight);
        }
    }
}

TEST_F(Symbols, PShiftedSymbolAtPZero)
{
    // At p = 0, theta(0 * y; 0) is 1 while theta(1/y; 0) = 1 - 1/y; the
    // shifted symbol takes the latter, which is the p -> 0 limit.
    Rng rng(4);
    Qtp b = random_base(rng);
    Partition l({2, 1});
    Complex x = rng.point();
    Complex small = parse_complex("1e-40");
    Qtp near{b.q, b.t, small};
    Qtp zero{b.q, b.t, Complex(0)};
    Complex at_zero = c_symbol_p(CKind::zero, l, {x}, zero);
    EXPECT_LT(rel_residual(at_zero, c_symbol(CKind::zero, l, {small * x}, near), ctx60), Real(1e-35));
}

TEST_F(Symbols, EmptyAndTrivialDelta)
{
    Rng rng(5);
    Qtp b = random_base(rng);
    Complex a = rng.point(), x = rng.point();
    EXPECT_TRUE(delta0(Partition{}, a, {x}, b) == Complex(1));
    EXPECT_TRUE(delta(Partition{}, a, {x}, b) == Complex(1));
    EXPECT_TRUE(delta0(Partition({2, 1}), a, std::span<const Complex>{}, b) == Complex(1));
}

TEST_F(Symbols, DeltaComposition)
{
    Rng rng(6);
    for (int k = 0; k < 40; ++k) {
        Qtp b = random_base(rng);
        Partition l = k == 0 ? Partition({1}) : random_partition(rng, 5);
        Complex a = rng.point();
        std::vector<Complex> bs{rng.point(), rng.point(), rng.point()};
        EXPECT_LT(rel_residual(delta0(l, a, bs, b), brute_delta0(l, a, bs, b), ctx60), tight);
        EXPECT_LT(rel_residual(delta(l, a, bs, b), brute_delta(l, a, bs, b), ctx60), tight) << l.str();
    }
}

TEST_F(Symbols, ConjugationTransformation)
{
    // Delta_{lambda'}(a|b..;1/t,1/q) = Delta_lambda(a/qt|b..;q,t)
    Rng rng(7);
    for (int k = 0; k < 20; ++k) {
        Qtp b = random_base(rng);
        Qtp dual{inv(b.t), inv(b.q), b.p};
        Partition l = random_partition(rng, 5);
        Complex a = rng.point();
        std::vector<Complex> bs{rng.point(), rng.point()};
        EXPECT_LT(rel_residual(delta(conjugate(l), a, bs, dual), delta(l, a / (b.q * b.t), bs, b), ctx60), tight)
            << l.str();
    }
}

TEST_F(Symbols, RectangleLimit)
{
    Rng rng(8);
    for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        Qtp b = random_base(rng);
        Complex a = rng.point();
        std::vector<Complex> bs{rng.point(), rng.point()};
        Complex lim = delta_rect_limit(m, n, a, bs, b, ctx60);
        EXPECT_LT(rel_residual(lim, delta(rectangle(m, n), a, bs, b), ctx60), Real(1e-25)) << m << "," << n;
    }
}
