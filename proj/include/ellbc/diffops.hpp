#pragma once

#include "ellbc/numeric.hpp"
#include "ellbc/symbols.hpp"

#include <functional>
#include <span>
#include <vector>

namespace ellbc {

// An n-variable function known only through point evaluation.
struct EvaluableFn {
    int n = 0;
    std::function<Complex(std::span<const Complex>)> f;
    bool bc_symmetric = true;

    Complex operator()(std::span<const Complex> x) const { return f(x); }
    Complex operator()(std::initializer_list<Complex> x) const
    {
        return f(std::span<const Complex>(x.begin(), x.size()));
    }
};

// D^(n)(a,b,c,d;q,t;p) with the principal square root of q.
EvaluableFn apply_D(const Complex& a, const Complex& b, const Complex& c, const Complex& d, const Qtp& base,
                    int n, EvaluableFn f);

// Symmetrized sum of D without the f factor (the m = 0 case).
Complex d_weight_sum(const Complex& a, const Complex& b, const Complex& c, const Complex& d, const Qtp& base,
                     std::span<const Complex> x);

// u5 closes the balancing condition of the raising operator.
Complex raise_u5(const Complex& u0, const Complex& u1, const Complex& u2, const Complex& u3, const Complex& u4,
                 const Qtp& base, int n);

// D^{+(n)}_q(u0:u1:u2,u3,u4;t;p).
EvaluableFn apply_Dplus(const Complex& u0, const Complex& u1, const Complex& u2, const Complex& u3,
                        const Complex& u4, const Qtp& base, int n, EvaluableFn f);

}  // namespace ellbc
