#pragma once

#include "ellbc/numeric.hpp"
#include "ellbc/partition.hpp"
#include "ellbc/symbols.hpp"

#include <span>

namespace ellbc {

enum class BinomNorm { round, angle };

// (lambda mu)_{[a,b]}. n defaults to max(l(lambda), l(mu)); a larger n gives
// the same value. Near b in q^{-k} t^l <p> the value is obtained from the
// angle form; if that route is singular too, SingularError is thrown.
Complex binom(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b, const Qtp& base,
              const NumericContext& ctx, int n = -1);

// <lambda mu>_{[a,b](v..)}: finite at the special b where the round form is not.
Complex binom_normalized(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b,
                         std::span<const Complex> vs, const Qtp& base, const NumericContext& ctx, int n = -1);
Complex binom_normalized(const Partition& lambda, const Partition& mu, const Complex& a, const Complex& b,
                         std::initializer_list<Complex> vs, const Qtp& base, const NumericContext& ctx, int n = -1);

// Product formulas for <lambda mu>_{[a,1/q]} and <lambda mu>_{[a,t]}.
enum class ClosedKind { inv_q, t };
Complex binom_closed(const Partition& lambda, const Partition& mu, const Complex& a, ClosedKind kind,
                     const Qtp& base);

// True when b lies within `radius` of some q^{-k} t^l p^Z with 0 <= k <= kmax, |l| <= lmax.
bool near_binom_singular(const Complex& b, int kmax, int lmax, const Qtp& base, double radius);

void clear_binom_cache();

}  // namespace ellbc
