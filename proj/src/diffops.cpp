#include "ellbc/diffops.hpp"

namespace ellbc {

namespace {

// sum over sigma in {+-1}^n of prod_i single(x_i^s) prod_{i<j} pair(x_i^s x_j^s) * g(sigma)
template <class Single, class Shifted>
Complex sigma_sum(std::span<const Complex> x, const Qtp& base, Single single, Shifted shifted)
{
    const std::size_t n = x.size();
    std::vector<Complex> xs(n), xi(n);
    for (std::size_t i = 0; i < n; ++i) xi[i] = inv(x[i]);
    Complex total;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) xs[i] = (mask >> i & 1) ? xi[i] : x[i];
        Complex w(1);
        for (std::size_t i = 0; i < n; ++i) w *= single(xs[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Complex y = xs[i] * xs[j];
                w *= theta(base.t * y, base.p) / theta(y, base.p);
            }
        total += w * shifted(xs, mask);
    }
    return total;
}

}  // namespace

Complex d_weight_sum(const Complex& a, const Complex& b, const Complex& c, const Complex& d, const Qtp& base,
                     std::span<const Complex> x)
{
    auto single = [&](const Complex& y) {
        return theta(a * y, base.p) * theta(b * y, base.p) * theta(c * y, base.p) * theta(d * y, base.p) /
               theta(y * y, base.p);
    };
    return sigma_sum(x, base, single, [](const std::vector<Complex>&, std::uint64_t) { return Complex(1); });
}

EvaluableFn apply_D(const Complex& a, const Complex& b, const Complex& c, const Complex& d, const Qtp& base,
                    int n, EvaluableFn f)
{
    if (f.n != n) throw std::invalid_argument("apply_D: arity mismatch");
    Complex sq = sqrt(base.q);
    EvaluableFn out;
    out.n = n;
    out.f = [a, b, c, d, base, sq, f = std::move(f)](std::span<const Complex> x) {
        auto single = [&](const Complex& y) {
            return theta(a * y, base.p) * theta(b * y, base.p) * theta(c * y, base.p) * theta(d * y, base.p) /
                   theta(y * y, base.p);
        };
        // f(.. q^{s_i/2} x_i ..): with y_i = x_i^{s_i} this is q^{1/2} y_i inverted where s_i = -1
        auto shifted = [&](const std::vector<Complex>& ys, std::uint64_t mask) {
            std::vector<Complex> arg(ys.size());
            for (std::size_t i = 0; i < ys.size(); ++i) arg[i] = (mask >> i & 1) ? x[i] / sq : x[i] * sq;
            return f(arg);
        };
        return sigma_sum(x, base, single, shifted);
    };
    return out;
}

Complex raise_u5(const Complex& u0, const Complex& u1, const Complex& u2, const Complex& u3, const Complex& u4,
                 const Qtp& base, int n)
{
    return base.p * base.p * base.q / (pow(base.t, n - 1) * u0 * u1 * u2 * u3 * u4);
}

EvaluableFn apply_Dplus(const Complex& u0, const Complex& u1, const Complex& u2, const Complex& u3,
                        const Complex& u4, const Qtp& base, int n, EvaluableFn f)
{
    if (f.n != n) throw std::invalid_argument("apply_Dplus: arity mismatch");
    const Complex u5 = raise_u5(u0, u1, u2, u3, u4, base, n);
    const Complex pq = base.p * base.q;
    Complex pre(1);
    for (int i = 1; i <= n; ++i) {
        Complex ti = pow(base.t, n - i);
        pre *= theta(pq * ti * u1 / u0, base.p);
        for (const Complex* ur : {&u2, &u3, &u4, &u5}) pre /= theta(*ur * ti * u1, base.p);
    }
    Complex sq = sqrt(base.q);
    EvaluableFn out;
    out.n = n;
    out.f = [=, f = std::move(f)](std::span<const Complex> z) {
        auto single = [&](const Complex& y) {
            Complex num = theta(u1 * y, base.p) * theta(u2 * y, base.p) * theta(u3 * y, base.p) *
                          theta(u4 * y, base.p) * theta(u5 * y, base.p);
            return num / (theta(pq * y / u0, base.p) * theta(y * y, base.p));
        };
        auto shifted = [&](const std::vector<Complex>& ys, std::uint64_t) {
            std::vector<Complex> arg(ys.size());
            for (std::size_t i = 0; i < ys.size(); ++i) arg[i] = sq * ys[i];
            return f(arg);
        };
        return pre * sigma_sum(z, base, single, shifted);
    };
    return out;
}

}  // namespace ellbc
