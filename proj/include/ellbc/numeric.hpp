#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ellbc {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

class Complex {
public:
    Complex() : re_(0), im_(0) {}
    Complex(const Real& re) : re_(re), im_(0) {}  // NOLINT: implicit by design
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(int re) : re_(re), im_(0) {}  // NOLINT
    Complex(double re, double im = 0.0) : re_(re), im_(im) {}  // NOLINT

    const Real& re() const noexcept { return re_; }
    const Real& im() const noexcept { return im_; }

    Complex& operator+=(const Complex& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return Complex(-re_, -im_); }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

private:
    Real re_, im_;
};

Real abs(const Complex& z);
Real norm2(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex inv(const Complex& z);
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, int k);
Complex polar(const Real& r, const Real& theta);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch

std::string to_string(const Real& x, int digits);
std::string to_string(const Complex& z, int digits);
Complex parse_complex(std::string_view re, std::string_view im = "0");
double to_double(const Real& x);

class SingularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NumericContext {
    int digits = 60;
    double tol = 1e-30;
    std::uint64_t seed = 42;
    double genericity_margin = 1e-3;

    // Working precision carried by MPFR: the requested digits plus guard digits.
    int working_digits() const { return digits + 10; }
    Real eps() const;  // 10^-digits
    void validate() const;
};

// Sets the MPFR default precision for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(const NumericContext& ctx);
    explicit PrecisionGuard(int decimal_digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Deterministic across platforms: mt19937_64 is fully specified and the
// double conversion uses the top 53 bits only.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    std::uint64_t next() { return eng_(); }
    int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
    // Modulus log-uniform in [lo, hi], argument uniform.
    Complex point(double lo = 0.5, double hi = 2.0);
    Rng split(std::string_view tag) const;

private:
    std::mt19937_64 eng_;
};

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull);

Real rel_residual(const Complex& lhs, const Complex& rhs, const NumericContext& ctx);

// theta(x;p) = prod_{k>=0} (1 - p^k x)(1 - p^{k+1}/x)
Complex theta(const Complex& x, const Complex& p);
// prod_{0<=j<m} theta(q^j x; p)
Complex theta_poch(const Complex& x, const Complex& q, const Complex& p, int m);

// Products of theta over several arguments.
Complex theta_prod(std::initializer_list<Complex> xs, const Complex& p);

// Distance of z from the coset p^Z in log-modulus / argument coordinates.
double coset_distance(const Complex& z, const Complex& p);

// ---------------------------------------------------------------------------
// Parameters and generic sampling

// coeff * prod name^exp; the names p, q, t refer to the base parameters.
struct Monomial {
    Complex coeff = Complex(1);
    std::vector<std::pair<std::string, int>> powers;
};

// Relation coeff * prod name^exp = 1, solved for `solve` (exponent must be +-1).
struct Relation {
    Monomial mono;
    std::string solve;
};

struct SampleSpec {
    std::vector<std::string> names;  // free parameters besides p, q, t
    std::vector<Relation> relations;
    std::vector<Monomial> regular;   // must avoid p^Z by the margin
    int m = 0;
    int n = 0;
    double p_lo = 0.05, p_hi = 0.3;
};

class ParameterSet {
public:
    Complex p, q, t;
    int m = 0, n = 0;

    const Complex& operator[](std::string_view name) const;
    Complex& set(const std::string& name, Complex v);
    bool has(std::string_view name) const;
    Complex eval(const Monomial& mono) const;
    const std::map<std::string, Complex, std::less<>>& named() const { return named_; }

private:
    std::map<std::string, Complex, std::less<>> named_;
};

ParameterSet sample_generic(const SampleSpec& spec, const NumericContext& ctx, Rng& rng);

}  // namespace ellbc
