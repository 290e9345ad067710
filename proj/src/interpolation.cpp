#include "ellbc/interpolation.hpp"

#include <unordered_map>

namespace ellbc {

int interp_split(const Partition& lambda, const Partition& mu, int m, int n)
{
    int l0 = 0, l1 = 0;
    for (int i = 1; i <= n; ++i) {
        if (mu[i] != lambda[i]) l0 = i;
        if (mu[i] == m) l1 = i;
    }
    if (l0 == 0 || mu[l0] < lambda[l0]) return l1;
    return l0;
}

std::vector<Complex> interp_point(const Partition& lambda, const Partition& mu, int m, int n, const Complex& a,
                                  const Complex& b, const Qtp& base)
{
    const int l = interp_split(lambda, mu, m, n);
    std::vector<Complex> x;
    x.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (i <= l)
            x.push_back(b * pow(base.q, m - mu[i]) * pow(base.t, i - 1));
        else
            x.push_back(a * pow(base.q, mu[i]) * pow(base.t, n - i));
    }
    return x;
}

std::vector<Complex> principal_point(const Complex& v, int n, const Complex& t)
{
    std::vector<Complex> x;
    for (int i = 1; i <= n; ++i) x.push_back(v * pow(t, n - i));
    return x;
}

std::vector<Complex> partition_point(const Partition& mu, int n, const Complex& a, const Qtp& base)
{
    std::vector<Complex> x;
    for (int i = 1; i <= n; ++i) x.push_back(a * pow(base.q, mu[i]) * pow(base.t, n - i));
    return x;
}

InterpFunction::InterpFunction(Partition lambda, int m, int n, Complex a, Complex b, Qtp base, Complex v,
                               SymThetaElement elem)
    : lambda_(std::move(lambda)), m_(m), n_(n), a_(std::move(a)), b_(std::move(b)), base_(std::move(base)),
      v_(std::move(v)), elem_(std::move(elem))
{
}

Complex interp_normalization(const Partition& lambda, int m, int n, const Complex& a, const Complex& b,
                             const Complex& v, const Qtp& base)
{
    Complex tn1 = pow(base.t, n - 1);
    return c0(lambda, {tn1 * a * v, a / v}, base) * c0(complement(lambda, m, n), {tn1 * b * v, b / v}, base);
}

Complex default_v(const NumericContext& ctx)
{
    Rng rng(fnv1a("normalization-point", ctx.seed));
    return rng.point(0.7, 1.4);
}

namespace {

std::string cache_key(const Partition& lambda, int m, int n, std::initializer_list<const Complex*> vals,
                      const NumericContext& ctx)
{
    std::string key = lambda.str() + "|" + std::to_string(m) + "|" + std::to_string(n) + "|" +
                      std::to_string(Real::default_precision()) + "|" + std::to_string(ctx.seed);
    for (const Complex* z : vals) {
        key += "|" + z->re().str(0, std::ios_base::scientific);
        key += "," + z->im().str(0, std::ios_base::scientific);
    }
    return key;
}

std::unordered_map<std::string, InterpPtr>& interp_cache()
{
    thread_local std::unordered_map<std::string, InterpPtr> cache;
    return cache;
}

}  // namespace

void clear_interp_cache() { interp_cache().clear(); }

InterpPtr interp_theta(const Partition& lambda, int m, int n, const Complex& a, const Complex& b, const Qtp& base,
                       const NumericContext& ctx)
{
    return interp_theta(lambda, m, n, a, b, base, default_v(ctx), ctx);
}

InterpPtr interp_theta(const Partition& lambda, int m, int n, const Complex& a, const Complex& b, const Qtp& base,
                       const Complex& v, const NumericContext& ctx)
{
    if (!contains(lambda, rectangle(m, n)) && !(m == 0 && lambda.empty()))
        throw std::invalid_argument("interp_theta: lambda not inside m^n");
    auto& cache = interp_cache();
    std::string key = cache_key(lambda, m, n, {&a, &b, &base.q, &base.t, &base.p, &v}, ctx);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<std::vector<Complex>> vanishing;
    for (const auto& mu : enumerate(m, n))
        if (mu != lambda) vanishing.push_back(interp_point(lambda, mu, m, n, a, b, base));
    Normalization norm{principal_point(v, n, base.t), interp_normalization(lambda, m, n, a, b, v, base)};
    SymThetaElement elem = solve_from_conditions(m, n, base.p, vanishing, norm, ctx);
    auto fn = std::make_shared<const InterpFunction>(lambda, m, n, a, b, base, v, std::move(elem));
    if (cache.size() > 20000) cache.clear();
    cache.emplace(std::move(key), fn);
    return fn;
}

Complex interp_zero_closed(std::span<const Complex> x, int m, const Complex& b, const Qtp& base)
{
    Complex r(1);
    for (const auto& xi : x) r *= theta_poch(b * xi, base.q, base.p, m) * theta_poch(b / xi, base.q, base.p, m);
    return r;
}

RStar::RStar(const Partition& lambda, int n, const Complex& a, const Complex& b, const Qtp& base,
             const NumericContext& ctx, int m)
    : n_(n), m_(m < 0 ? lambda[1] : m), base_(base)
{
    if (lambda.length() > n) throw std::invalid_argument("RStar: length exceeds n");
    if (m_ < lambda[1]) throw std::invalid_argument("RStar: m below lambda_1");
    bshift_ = pow(base.q, -m_) * b;
    if (m_ > 0) p_ = interp_theta(lambda, m_, n, a, bshift_, base, ctx);
}

Complex RStar::operator()(std::span<const Complex> x) const
{
    if (m_ == 0) return Complex(1);
    return (*p_)(x) / interp_zero_closed(x, m_, bshift_, base_);
}

Complex rstar_eval(const Partition& lambda, int n, const Complex& a, const Complex& b, std::span<const Complex> x,
                   const Qtp& base, const NumericContext& ctx)
{
    return RStar(lambda, n, a, b, base, ctx)(x);
}

}  // namespace ellbc
