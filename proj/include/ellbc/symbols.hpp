#pragma once

#include "ellbc/numeric.hpp"
#include "ellbc/partition.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace ellbc {

// The base parameters q, t, p shared by every symbol.
struct Qtp {
    Complex q, t, p;
};

enum class CKind { zero, minus, plus };

// Product over the cells of lambda; several arguments multiply.
Complex c_symbol(CKind kind, const Partition& lambda, std::span<const Complex> xs, const Qtp& b);
Complex c_symbol(CKind kind, const Partition& lambda, std::initializer_list<Complex> xs, const Qtp& b);

// C_lambda(p x) through theta(p y; p) = theta(1/y; p), so it stays finite at p = 0.
Complex c_symbol_p(CKind kind, const Partition& lambda, std::span<const Complex> xs, const Qtp& b);
Complex c_symbol_p(CKind kind, const Partition& lambda, std::initializer_list<Complex> xs, const Qtp& b);

inline Complex c0(const Partition& l, std::initializer_list<Complex> xs, const Qtp& b)
{
    return c_symbol(CKind::zero, l, xs, b);
}
inline Complex cminus(const Partition& l, std::initializer_list<Complex> xs, const Qtp& b)
{
    return c_symbol(CKind::minus, l, xs, b);
}
inline Complex cplus(const Partition& l, std::initializer_list<Complex> xs, const Qtp& b)
{
    return c_symbol(CKind::plus, l, xs, b);
}

Complex delta0(const Partition& lambda, const Complex& a, std::span<const Complex> bs, const Qtp& b);
Complex delta0(const Partition& lambda, const Complex& a, std::initializer_list<Complex> bs, const Qtp& b);
Complex delta(const Partition& lambda, const Complex& a, std::span<const Complex> bs, const Qtp& b);
Complex delta(const Partition& lambda, const Complex& a, std::initializer_list<Complex> bs, const Qtp& b);

// Delta_{m^n}(a|bs) through the x -> 1 limit of a Delta^0 with four extra
// arguments, evaluated at two points near 1 and extrapolated linearly.
Complex delta_rect_limit(int m, int n, const Complex& a, std::span<const Complex> bs, const Qtp& b,
                         const NumericContext& ctx);

}  // namespace ellbc
