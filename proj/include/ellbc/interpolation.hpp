#pragma once

#include "ellbc/numeric.hpp"
#include "ellbc/partition.hpp"
#include "ellbc/symbols.hpp"
#include "ellbc/theta_space.hpp"

#include <memory>
#include <span>
#include <vector>

namespace ellbc {

// Index of the last b-type coordinate in the vanishing point of mu for lambda.
int interp_split(const Partition& lambda, const Partition& mu, int m, int n);

// (b q^{m-mu_1}, .., b q^{m-mu_l} t^{l-1}, a q^{mu_{l+1}} t^{n-l-1}, .., a q^{mu_n})
std::vector<Complex> interp_point(const Partition& lambda, const Partition& mu, int m, int n, const Complex& a,
                                  const Complex& b, const Qtp& base);

// (v t^{n-1}, .., v)
std::vector<Complex> principal_point(const Complex& v, int n, const Complex& t);
// (a q^{mu_i} t^{n-i})
std::vector<Complex> partition_point(const Partition& mu, int n, const Complex& a, const Qtp& base);

class InterpFunction {
public:
    InterpFunction(Partition lambda, int m, int n, Complex a, Complex b, Qtp base, Complex v, SymThetaElement elem);

    const Partition& lambda() const noexcept { return lambda_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const Complex& a() const noexcept { return a_; }
    const Complex& b() const noexcept { return b_; }
    const Qtp& base() const noexcept { return base_; }
    const Complex& v() const noexcept { return v_; }
    const SymThetaElement& element() const noexcept { return elem_; }
    Real scale() const { return elem_.scale(); }

    Complex operator()(std::span<const Complex> x) const { return elem_(x); }
    Complex operator()(std::initializer_list<Complex> x) const { return elem_(x); }

private:
    Partition lambda_;
    int m_, n_;
    Complex a_, b_;
    Qtp base_;
    Complex v_;
    SymThetaElement elem_;
};

using InterpPtr = std::shared_ptr<const InterpFunction>;

// Value prescribed at the principal point (v t^{n-i}).
Complex interp_normalization(const Partition& lambda, int m, int n, const Complex& a, const Complex& b,
                             const Complex& v, const Qtp& base);

// Default auxiliary point v used for the normalization row.
Complex default_v(const NumericContext& ctx);

// Solves the vanishing system; results are memoized per thread.
InterpPtr interp_theta(const Partition& lambda, int m, int n, const Complex& a, const Complex& b, const Qtp& base,
                       const NumericContext& ctx);
InterpPtr interp_theta(const Partition& lambda, int m, int n, const Complex& a, const Complex& b, const Qtp& base,
                       const Complex& v, const NumericContext& ctx);

// prod_i theta(b x_i, b / x_i; q; p)_m
Complex interp_zero_closed(std::span<const Complex> x, int m, const Complex& b, const Qtp& base);

// R*_lambda(x; a, b) = P*_lambda(x; a, q^{-m} b) / P*_0(x; a, q^{-m} b) with m = lambda_1 unless given.
class RStar {
public:
    RStar(const Partition& lambda, int n, const Complex& a, const Complex& b, const Qtp& base,
          const NumericContext& ctx, int m = -1);
    Complex operator()(std::span<const Complex> x) const;
    Complex operator()(std::initializer_list<Complex> x) const
    {
        return (*this)(std::span<const Complex>(x.begin(), x.size()));
    }
    int m() const noexcept { return m_; }

private:
    int n_, m_;
    Complex bshift_;
    Qtp base_;
    InterpPtr p_;
};

Complex rstar_eval(const Partition& lambda, int n, const Complex& a, const Complex& b, std::span<const Complex> x,
                   const Qtp& base, const NumericContext& ctx);

void clear_interp_cache();

}  // namespace ellbc
