#include "ellbc/binomial.hpp"

#include "ellbc/interpolation.hpp"

#include <unordered_map>

namespace ellbc {

namespace {

// Distance below which b counts as sitting on the singular locus.
constexpr double kSingularRadius = 1e-8;

void append_key(std::string& key, const Complex& z)
{
    key += '|';
    key += z.re().str(0, std::ios_base::scientific);
    key += ',';
    key += z.im().str(0, std::ios_base::scientific);
}

std::unordered_map<std::string, Complex>& binom_cache()
{
    thread_local std::unordered_map<std::string, Complex> cache;
    return cache;
}

int default_n(const Partition& lambda, const Partition& mu, int n)
{
    int need = std::max(lambda.length(), mu.length());
    if (n < 0) return need;
    if (n < need) throw std::invalid_argument("binom: n below the partition lengths");
    return n;
}

// Round form straight from the definition.
Complex binom_direct(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b,
                     const Qtp& base, const NumericContext& ctx, int n)
{
    if (n == 0) return Complex(1);
    std::string key = "B|" + lambda.str() + "|" + mu.str() + "|" + std::to_string(n) + "|" +
                      std::to_string(Real::default_precision()) + "|" + std::to_string(ctx.seed);
    for (const Complex* z : {&a, &b, &base.q, &base.t, &base.p}) append_key(key, *z);
    auto& cache = binom_cache();
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    Complex sa = sqrt(a);
    RStar r(mu, n, pow(base.t, 1 - n) * sa, b / sa, base, ctx);
    std::vector<Complex> x;
    for (int i = 1; i <= n; ++i) x.push_back(sa * pow(base.q, lambda[i]) * pow(base.t, 1 - i));
    Complex value = delta(mu, a / b, {pow(base.t, n), inv(b)}, base) * r(x);

    if (cache.size() > 50000) cache.clear();
    cache.emplace(std::move(key), value);
    return value;
}

// Delta^0_lambda(a|b,v..) / Delta^0_mu(a/b|1/b,v..)
Complex angle_factor(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b,
                     std::span<const Complex> vs, const Qtp& base)
{
    std::vector<Complex> num{b}, den{inv(b)};
    num.insert(num.end(), vs.begin(), vs.end());
    den.insert(den.end(), vs.begin(), vs.end());
    return delta0(lambda, a, num, base) / delta0(mu, a / b, den, base);
}

Complex angle_direct(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b,
                     std::span<const Complex> vs, const Qtp& base, const NumericContext& ctx, int n)
{
    return angle_factor(lambda, mu, a, b, vs, base) * binom_direct(lambda, mu, a, b, base, ctx, n);
}

bool on_singular_locus(const Partition& lambda, const Partition& mu, const Complex& b, const Qtp& base, int n)
{
    return near_binom_singular(b, std::max(lambda[1], mu[1]) + 1, n + 1, base, kSingularRadius);
}

// Symmetric four-point extrapolation in log b; error O(h^4).
Complex angle_extrapolated(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b,
                           std::span<const Complex> vs, const Qtp& base, const NumericContext& ctx, int n)
{
    const Real h = boost::multiprecision::pow(Real(10), -(ctx.digits / 6));
    auto f = [&](int k) { return angle_direct(lambda, mu, a, b * exp(Complex(Real(k) * h)), vs, base, ctx, n); };
    Complex near = f(1) + f(-1);
    Complex far = f(2) + f(-2);
    return (Complex(4) * near - far) / Complex(6);
}

}  // namespace

bool near_binom_singular(const Complex& b, int kmax, int lmax, const Qtp& base, double radius)
{
    for (int k = 0; k <= kmax; ++k)
        for (int l = -lmax; l <= lmax; ++l)
            if (coset_distance(b * pow(base.q, k) * pow(base.t, -l), base.p) < radius) return true;
    return false;
}

Complex binom_normalized(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b,
                         std::span<const Complex> vs, const Qtp& base, const NumericContext& ctx, int n)
{
    if (!contains(mu, lambda)) return Complex();
    n = default_n(lambda, mu, n);
    if (on_singular_locus(lambda, mu, b, base, n)) return angle_extrapolated(lambda, mu, a, b, vs, base, ctx, n);
    return angle_direct(lambda, mu, a, b, vs, base, ctx, n);
}

Complex binom_normalized(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b,
                         std::initializer_list<Complex> vs, const Qtp& base, const NumericContext& ctx, int n)
{
    return binom_normalized(lambda, mu, a, b, std::span<const Complex>(vs.begin(), vs.size()), base, ctx, n);
}

Complex binom(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b, const Qtp& base,
              const NumericContext& ctx, int n)
{
    if (!contains(mu, lambda)) return Complex();
    n = default_n(lambda, mu, n);
    if (!on_singular_locus(lambda, mu, b, base, n)) return binom_direct(lambda, mu, a, b, base, ctx, n);

    // Round = angle / (Delta^0_lambda(a|b) / Delta^0_mu(a/b|1/b)).
    Complex num = c0(lambda, {b}, base);
    const Real floor = boost::multiprecision::pow(Real(10), -(ctx.digits / 2));
    if (abs(num) < floor) throw SingularError("binom: round normalization is singular at this b");
    Complex angle = angle_extrapolated(lambda, mu, a, b, {}, base, ctx, n);
    return angle / angle_factor(lambda, mu, a, b, {}, base);
}

Complex binom_closed(const Partition& lambda, const Partition& mu, const Complex& a, ClosedKind kind,
                     const Qtp& base)
{
    const bool inv_q = kind == ClosedKind::inv_q;
    if (!strip_relation(mu, lambda, 1, inv_q)) return Complex();
    const Partition lc = conjugate(lambda), mc = conjugate(mu);
    const Complex &q = base.q, &t = base.t, &p = base.p;
    const Complex pq = p * q;
    auto qt = [&](int qe, int te) { return pow(q, qe) * pow(t, te); };
    auto th = [&](const Complex& x) { return theta(x, p); };

    Complex r(1);
    auto cell = [&](int i, int j, bool in_mu) {
        const bool same = inv_q ? lambda[i] == mu[i] : lc[j] == mc[j];
        const Complex lam_minus = qt(lambda[i] - j, lc[j] - i);
        const Complex lam_plus = qt(lambda[i] + j - 1, 2 - lc[j] - i);
        const Complex mu_minus = qt(mu[i] - j, mc[j] - i);
        const Complex mu_plus = qt(mu[i] + j - 1, 2 - mc[j] - i);
        if (inv_q) {
            if (!in_mu)
                r *= same ? th(lam_plus * a) / th(mu_minus * t) : th(lam_minus * pq) / th(mu_plus * a * pq * q / t);
            else
                r *= same ? th(lam_minus * t) / th(mu_plus * a * q) : th(lam_plus * pq * a / t) / th(mu_minus * pq);
        } else {
            if (!in_mu)
                r *= same ? th(lam_plus * a) / th(mu_minus * pq) : th(lam_minus * t) / th(mu_plus * a * pq / (t * t));
            else
                r *= same ? th(lam_minus * pq) / th(mu_plus * a / t) : th(lam_plus * pq * a / t) / th(mu_minus * t);
        }
    };
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) cell(i, j, false);
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu[i]; ++j) cell(i, j, true);
    return r;
}

void clear_binom_cache() { binom_cache().clear(); }

}  // namespace ellbc
