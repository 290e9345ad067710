#pragma once

#include "ellbc/interpolation.hpp"
#include "ellbc/numeric.hpp"
#include "ellbc/partition.hpp"
#include "ellbc/symbols.hpp"

#include <span>
#include <vector>

namespace ellbc {

// Parameters t0..t3, u0, u1 of the biorthogonal functions, balanced by
// t^{2n-2} t0 t1 t2 t3 u0 u1 = pq.
struct BiorthParams {
    Complex t0, t1, t2, t3, u0, u1;
    int n = 1;
    Qtp base;

    Real balance_residual(const NumericContext& ctx) const;
    // u1 chosen so that the balancing condition holds.
    static BiorthParams balanced(const Complex& t0, const Complex& t1, const Complex& t2, const Complex& t3,
                                 const Complex& u0, int n, const Qtp& base);
};

// Hatted parameters of the evaluation symmetry; principal square root.
BiorthParams hat_params(const BiorthParams& bp);

// R~_lambda as the finite sum over mu inside lambda of binomial coefficients
// times R*_mu(;t0,u0). The terms are built once; evaluation is cheap.
class RTilde {
public:
    RTilde(const Partition& lambda, const BiorthParams& bp, const NumericContext& ctx);
    Complex operator()(std::span<const Complex> x) const;
    Complex operator()(std::initializer_list<Complex> x) const
    {
        return (*this)(std::span<const Complex>(x.begin(), x.size()));
    }
    const Partition& lambda() const noexcept { return lambda_; }

private:
    Partition lambda_;
    int n_;
    std::vector<std::pair<Complex, RStar>> terms_;
};

Complex rtilde_eval(const Partition& lambda, const BiorthParams& bp, std::span<const Complex> x,
                    const NumericContext& ctx);

// R~_lambda at x_i = t0 t^{n-i} q^{kappa_i}.
Complex rtilde_at_partition(const Partition& lambda, const Partition& kappa, const BiorthParams& bp,
                            const NumericContext& ctx);

}  // namespace ellbc
