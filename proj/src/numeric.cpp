#include "ellbc/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace ellbc {

Complex& Complex::operator*=(const Complex& o)
{
    Real r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    Real d = o.re_ * o.re_ + o.im_ * o.im_;
    if (d == 0) throw SingularError("complex division by zero");
    Real r = (re_ * o.re_ + im_ * o.im_) / d;
    im_ = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    return *this;
}

Real norm2(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }
Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re(), z.im()); }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im(), z.re()); }
Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }
Complex inv(const Complex& z) { return Complex(1) / z; }

Complex sqrt(const Complex& z)
{
    if (z.is_zero()) return z;
    Real r = abs(z);
    Real re = boost::multiprecision::sqrt((r + z.re()) / 2);
    Real im = boost::multiprecision::sqrt((r - z.re()) / 2);
    if (z.im() < 0) im = -im;
    return Complex(re, im);
}

Complex pow(const Complex& z, int k)
{
    if (k < 0) return pow(inv(z), -k);
    Complex result(1), base = z;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Complex polar(const Real& r, const Real& th)
{
    return Complex(r * boost::multiprecision::cos(th), r * boost::multiprecision::sin(th));
}

Complex exp(const Complex& z) { return polar(boost::multiprecision::exp(z.re()), z.im()); }

Complex log(const Complex& z)
{
    if (z.is_zero()) throw SingularError("log of zero");
    return Complex(boost::multiprecision::log(abs(z)), arg(z));
}

std::string to_string(const Real& x, int digits)
{
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

std::string to_string(const Complex& z, int digits)
{
    return "(" + to_string(z.re(), digits) + "," + to_string(z.im(), digits) + ")";
}

Complex parse_complex(std::string_view re, std::string_view im)
{
    return Complex(Real(std::string(re)), Real(std::string(im)));
}

double to_double(const Real& x) { return x.convert_to<double>(); }

Real NumericContext::eps() const { return boost::multiprecision::pow(Real(10), -digits); }

void NumericContext::validate() const
{
    if (digits < 15) throw std::invalid_argument("digits must be at least 15");
    if (tol < 0) throw std::invalid_argument("tol must be nonnegative");
    if (genericity_margin <= 0) throw std::invalid_argument("genericity margin must be positive");
}

PrecisionGuard::PrecisionGuard(const NumericContext& ctx) : PrecisionGuard(ctx.working_digits()) {}

PrecisionGuard::PrecisionGuard(int decimal_digits) : saved_(Real::default_precision())
{
    Real::default_precision(static_cast<unsigned>(decimal_digits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

std::uint64_t fnv1a(std::string_view s, std::uint64_t h)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Complex Rng::point(double lo, double hi)
{
    double r = lo * std::pow(hi / lo, uniform01());
    double a = 2.0 * uniform01() - 1.0;
    return polar(Real(r), Real(a) * boost::math::constants::pi<Real>());
}

Rng Rng::split(std::string_view tag) const
{
    std::mt19937_64 copy = eng_;
    return Rng(fnv1a(tag, copy()));
}

Real rel_residual(const Complex& lhs, const Complex& rhs, const NumericContext& ctx)
{
    return abs(lhs - rhs) / (abs(lhs) + abs(rhs) + ctx.eps());
}

// ---------------------------------------------------------------------------
// theta kernel
//
// Jacobi triple product: (p;p) theta(x;p) = sum_k (-1)^k p^{k(k-1)/2} x^k.
// Pairing k with 1-k gives sum_{k>=1} c_k (x^{1-k} - x^k) with
// c_k = (-1)^{k-1} p^{k(k-1)/2}; near x = 1 the factor (1-x) is pulled out
// exactly so the zero keeps full relative accuracy.

namespace {

struct ThetaCache {
    Complex p;
    unsigned prec = 0;
    Complex inv_pp;             // 1/(p;p)_inf
    std::vector<Complex> c;     // c_1..c_K stored at index k-1
};

ThetaCache& cache_for(const Complex& p)
{
    thread_local ThetaCache cache;
    unsigned prec = Real::default_precision();
    if (cache.prec == prec && cache.p == p) return cache;
    cache.p = p;
    cache.prec = prec;
    double lp = std::log10(to_double(abs(p)));
    double target = -static_cast<double>(prec) - 5.0;
    // (p;p)_inf
    Complex pp(1), pk = p;
    for (int k = 1; static_cast<double>(k) * lp > target; ++k) {
        pp *= Complex(1) - pk;
        pk *= p;
    }
    cache.inv_pp = inv(pp);
    // Terms are bounded by |p|^{k(k-2)/2} * 2k on the annulus |p|^{1/2} <= |x| <= |p|^{-1/2}.
    cache.c.clear();
    Complex pw(1);  // p^{k(k-1)/2}
    Complex pk1(1);  // p^{k-1}
    for (int k = 1;; ++k) {
        if (k > 1) {
            pk1 *= p;
            pw *= pk1;
        }
        cache.c.push_back((k % 2 == 1) ? pw : -pw);
        double bound = 0.5 * static_cast<double>(k) * static_cast<double>(k - 2) * lp + std::log10(2.0 * k + 2.0);
        if (k >= 2 && bound < target) break;
    }
    return cache;
}

Complex theta_core(const Complex& y, const ThetaCache& cache)
{
    Complex one(1);
    Complex d = one - y;
    Complex yi = inv(y);
    std::size_t K = cache.c.size();
    Complex sum;
    if (abs(d) < Real(0.25)) {
        // (1-y) sum_k c_k y^{1-k} S_{2k-1}(y), S_r = 1 + y + ... + y^{r-1}
        Complex s(1), ypow = y, yneg(1);
        for (std::size_t k = 1; k <= K; ++k) {
            if (k > 1) {
                s += ypow;
                ypow *= y;
                s += ypow;
                ypow *= y;
                yneg *= yi;
            }
            sum += cache.c[k - 1] * (yneg * s);
        }
        return d * sum * cache.inv_pp;
    }
    Complex ypos = y, yneg(1);
    for (std::size_t k = 1; k <= K; ++k) {
        if (k > 1) {
            ypos *= y;
            yneg *= yi;
        }
        sum += cache.c[k - 1] * (yneg - ypos);
    }
    return sum * cache.inv_pp;
}

}  // namespace

Complex theta(const Complex& x, const Complex& p)
{
    if (x.is_zero()) throw std::domain_error("theta: x = 0");
    if (p.is_zero()) return Complex(1) - x;
    Real ap = abs(p);
    if (ap >= 1) throw std::domain_error("theta: |p| >= 1");
    ThetaCache& cache = cache_for(p);
    double lp = std::log(to_double(ap));
    double lx = std::log(to_double(abs(x)));
    int k = static_cast<int>(std::lround(lx / lp));
    if (k == 0) return theta_core(x, cache);
    // theta(p^k y) = (-1)^k p^{-k(k-1)/2} y^{-k} theta(y)
    Complex y = x * pow(p, -k);
    Complex pref = pow(p, -k * (k - 1) / 2) * pow(y, -k);
    if (k % 2 != 0) pref = -pref;
    return pref * theta_core(y, cache);
}

Complex theta_poch(const Complex& x, const Complex& q, const Complex& p, int m)
{
    if (m < 0) throw std::invalid_argument("theta_poch: negative m");
    Complex r(1), y = x;
    for (int j = 0; j < m; ++j) {
        r *= theta(y, p);
        if (j + 1 < m) y *= q;
    }
    return r;
}

Complex theta_prod(std::initializer_list<Complex> xs, const Complex& p)
{
    Complex r(1);
    for (const auto& x : xs) r *= theta(x, p);
    return r;
}

double coset_distance(const Complex& z, const Complex& p)
{
    double lz = to_double(boost::multiprecision::log(abs(z)));
    double az = to_double(arg(z));
    if (p.is_zero()) return std::hypot(lz, az);
    double lp = to_double(boost::multiprecision::log(abs(p)));
    double apa = to_double(arg(p));
    double k = std::round(lz / lp);
    double r = lz - k * lp;
    double a = std::remainder(az - k * apa, 2.0 * std::numbers::pi);
    // neighbouring cosets can be closer once the argument is folded in
    double best = std::hypot(r, a);
    for (double dk : {-1.0, 1.0}) {
        double r2 = lz - (k + dk) * lp;
        double a2 = std::remainder(az - (k + dk) * apa, 2.0 * std::numbers::pi);
        best = std::min(best, std::hypot(r2, a2));
    }
    return best;
}

// ---------------------------------------------------------------------------

const Complex& ParameterSet::operator[](std::string_view name) const
{
    if (name == "p") return p;
    if (name == "q") return q;
    if (name == "t") return t;
    auto it = named_.find(name);
    if (it == named_.end()) throw std::out_of_range("parameter not set: " + std::string(name));
    return it->second;
}

Complex& ParameterSet::set(const std::string& name, Complex v)
{
    if (name == "p") return p = std::move(v);
    if (name == "q") return q = std::move(v);
    if (name == "t") return t = std::move(v);
    return named_[name] = std::move(v);
}

bool ParameterSet::has(std::string_view name) const
{
    return name == "p" || name == "q" || name == "t" || named_.find(name) != named_.end();
}

Complex ParameterSet::eval(const Monomial& mono) const
{
    Complex r = mono.coeff;
    for (const auto& [name, e] : mono.powers) r *= pow((*this)[name], e);
    return r;
}

ParameterSet sample_generic(const SampleSpec& spec, const NumericContext& ctx, Rng& rng)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ParameterSet ps;
        ps.m = spec.m;
        ps.n = spec.n;
        double pm = rng.uniform(spec.p_lo, spec.p_hi);
        ps.p = polar(Real(pm), Real(rng.uniform(-1.0, 1.0)) *
                                   boost::math::constants::pi<Real>());
        ps.q = rng.point();
        ps.t = rng.point();
        for (const auto& name : spec.names) ps.set(name, rng.point());
        for (const auto& rel : spec.relations) {
            Complex rest = rel.mono.coeff;
            int es = 0;
            for (const auto& [name, e] : rel.mono.powers) {
                if (name == rel.solve) {
                    es += e;
                    continue;
                }
                rest *= pow(ps[name], e);
            }
            if (es != 1 && es != -1) throw std::invalid_argument("relation: solved parameter needs exponent +-1");
            Complex v = inv(rest);
            ps.set(rel.solve, es == 1 ? v : inv(v));
        }
        bool ok = coset_distance(ps.q, ps.p) >= ctx.genericity_margin &&
                  coset_distance(ps.t, ps.p) >= ctx.genericity_margin;
        for (const auto& mono : spec.regular) {
            if (!ok) break;
            ok = coset_distance(ps.eval(mono), ps.p) >= ctx.genericity_margin;
        }
        if (ok) return ps;
    }
    throw GenericityError("sample_generic: no generic parameter set after 1000 attempts");
}

}  // namespace ellbc
