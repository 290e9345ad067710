#include "ellbc/biorthogonal.hpp"

#include "ellbc/binomial.hpp"

namespace ellbc {

Real BiorthParams::balance_residual(const NumericContext& ctx) const
{
    Complex lhs = pow(base.t, 2 * n - 2) * t0 * t1 * t2 * t3 * u0 * u1;
    return rel_residual(lhs, base.p * base.q, ctx);
}

BiorthParams BiorthParams::balanced(const Complex& t0, const Complex& t1, const Complex& t2, const Complex& t3,
                                    const Complex& u0, int n, const Qtp& base)
{
    Complex u1 = base.p * base.q / (pow(base.t, 2 * n - 2) * t0 * t1 * t2 * t3 * u0);
    return BiorthParams{t0, t1, t2, t3, u0, u1, n, base};
}

BiorthParams hat_params(const BiorthParams& bp)
{
    BiorthParams h = bp;
    h.t0 = sqrt(bp.t0 * bp.t1 * bp.t2 * bp.t3 / (bp.base.p * bp.base.q));
    Complex r = h.t0 / bp.t0;
    h.t1 = bp.t1 / r;
    h.t2 = bp.t2 / r;
    h.t3 = bp.t3 / r;
    h.u0 = bp.u0 * r;
    h.u1 = bp.u1 * r;
    return h;
}

RTilde::RTilde(const Partition& lambda, const BiorthParams& bp, const NumericContext& ctx)
    : lambda_(lambda), n_(bp.n)
{
    if (lambda.length() > bp.n) throw std::invalid_argument("RTilde: length exceeds n");
    const Qtp& B = bp.base;
    const Complex tn1t0 = pow(B.t, bp.n - 1) * bp.t0;
    const Complex ba = inv(bp.u0 * bp.u1);
    const Complex bb = inv(tn1t0 * bp.u1);
    for (const auto& mu : interval(Partition{}, lambda)) {
        Complex coef = binom(lambda, mu, ba, bb, B, ctx) /
                       delta0(mu, tn1t0 / bp.u0, {tn1t0 * bp.t1, tn1t0 * bp.t2, tn1t0 * bp.t3, tn1t0 * bp.u1}, B);
        terms_.emplace_back(std::move(coef), RStar(mu, bp.n, bp.t0, bp.u0, B, ctx));
    }
}

Complex RTilde::operator()(std::span<const Complex> x) const
{
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("RTilde: wrong number of variables");
    Complex s;
    for (const auto& [coef, r] : terms_) s += coef * r(x);
    return s;
}

Complex rtilde_eval(const Partition& lambda, const BiorthParams& bp, std::span<const Complex> x,
                    const NumericContext& ctx)
{
    return RTilde(lambda, bp, ctx)(x);
}

Complex rtilde_at_partition(const Partition& lambda, const Partition& kappa, const BiorthParams& bp,
                            const NumericContext& ctx)
{
    if (kappa.length() > bp.n) throw std::invalid_argument("rtilde_at_partition: length exceeds n");
    std::vector<Complex> x;
    for (int i = 1; i <= bp.n; ++i) x.push_back(bp.t0 * pow(bp.base.t, bp.n - i) * pow(bp.base.q, kappa[i]));
    return rtilde_eval(lambda, bp, x, ctx);
}

}  // namespace ellbc
