#include "ellbc/symbols.hpp"

namespace ellbc {

namespace {

// Powers z^k for k in [lo, hi].
class PowerTable {
public:
    PowerTable(const Complex& z, int lo, int hi) : lo_(lo)
    {
        if (hi < lo) return;
        vals_.resize(static_cast<std::size_t>(hi - lo + 1));
        vals_[0] = pow(z, lo);
        for (std::size_t k = 1; k < vals_.size(); ++k) vals_[k] = vals_[k - 1] * z;
    }
    const Complex& operator()(int k) const { return vals_[static_cast<std::size_t>(k - lo_)]; }

private:
    int lo_;
    std::vector<Complex> vals_;
};

Complex cells(CKind kind, const Partition& lambda, std::span<const Complex> xs, const Qtp& b, bool reflect)
{
    Complex r(1);
    if (lambda.empty() || xs.empty()) return r;
    const Partition lc = conjugate(lambda);
    const int l1 = lambda[1], len = lambda.length();
    // exponent ranges over all cells for the three kinds
    PowerTable qp(b.q, 0, 2 * l1);
    PowerTable tp(b.t, 1 - 2 * len, len + 1);
    for (int i = 1; i <= len; ++i) {
        for (int j = 1; j <= lambda[i]; ++j) {
            Complex shift;
            switch (kind) {
            case CKind::zero: shift = qp(j - 1) * tp(1 - i); break;
            case CKind::minus: shift = qp(lambda[i] - j) * tp(lc[j] - i); break;
            case CKind::plus: shift = qp(lambda[i] + j - 1) * tp(2 - lc[j] - i); break;
            }
            for (const auto& x : xs) r *= reflect ? theta(inv(shift * x), b.p) : theta(shift * x, b.p);
        }
    }
    return r;
}

}  // namespace

Complex c_symbol(CKind kind, const Partition& lambda, std::span<const Complex> xs, const Qtp& b)
{
    return cells(kind, lambda, xs, b, false);
}

Complex c_symbol_p(CKind kind, const Partition& lambda, std::span<const Complex> xs, const Qtp& b)
{
    return cells(kind, lambda, xs, b, true);
}

Complex c_symbol_p(CKind kind, const Partition& lambda, std::initializer_list<Complex> xs, const Qtp& b)
{
    return cells(kind, lambda, std::span<const Complex>(xs.begin(), xs.size()), b, true);
}

Complex c_symbol(CKind kind, const Partition& lambda, std::initializer_list<Complex> xs, const Qtp& b)
{
    return c_symbol(kind, lambda, std::span<const Complex>(xs.begin(), xs.size()), b);
}

Complex delta0(const Partition& lambda, const Complex& a, std::span<const Complex> bs, const Qtp& b)
{
    if (lambda.empty() || bs.empty()) return Complex(1);
    std::vector<Complex> den;
    den.reserve(bs.size());
    const Complex qa = b.q * a;
    for (const auto& x : bs) den.push_back(qa / x);
    return c_symbol(CKind::zero, lambda, bs, b) / c_symbol_p(CKind::zero, lambda, den, b);
}

Complex delta0(const Partition& lambda, const Complex& a, std::initializer_list<Complex> bs, const Qtp& b)
{
    return delta0(lambda, a, std::span<const Complex>(bs.begin(), bs.size()), b);
}

Complex delta(const Partition& lambda, const Complex& a, std::span<const Complex> bs, const Qtp& b)
{
    if (lambda.empty()) return Complex(1);
    Complex num = delta0(lambda, a, bs, b) * c_symbol_p(CKind::zero, stats(lambda).double_square, {b.q * a}, b);
    Complex den = cminus(lambda, {b.t}, b) * c_symbol_p(CKind::minus, lambda, {b.q}, b) * cplus(lambda, {a}, b) *
                  c_symbol_p(CKind::plus, lambda, {b.q * a / b.t}, b);
    return num / den;
}

Complex delta(const Partition& lambda, const Complex& a, std::initializer_list<Complex> bs, const Qtp& b)
{
    return delta(lambda, a, std::span<const Complex>(bs.begin(), bs.size()), b);
}

Complex delta_rect_limit(int m, int n, const Complex& a, std::span<const Complex> bs, const Qtp& b,
                         const NumericContext& ctx)
{
    const Partition rect = rectangle(m, n);
    const Complex pqa = b.p * b.q * a;
    const Complex qm = pow(b.q, m);
    auto at = [&](const Complex& x) {
        std::vector<Complex> args(bs.begin(), bs.end());
        args.push_back(qm * pqa / x);
        args.push_back(pqa / (x * pow(b.t, n)));
        args.push_back(pqa * x);
        args.push_back(b.p * b.q * pow(b.t, n - 1) * x / qm);
        return delta0(rect, a, args, b);
    };
    Real h1 = boost::multiprecision::pow(Real(10), -(ctx.digits / 2));
    Real h2 = h1 * 100;
    Complex f1 = at(Complex(Real(1) + h1)), f2 = at(Complex(Real(1) + h2));
    // f(h) = L + c h + O(h^2)
    return (f1 * Complex(h2) - f2 * Complex(h1)) / Complex(h2 - h1);
}

}  // namespace ellbc
