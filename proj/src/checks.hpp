#pragma once

// Shared plumbing for the check modules; not installed.

#include "ellbc/harness.hpp"
#include "ellbc/partition.hpp"
#include "ellbc/symbols.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ellbc::checks {

inline Qtp base_of(const ParameterSet& ps) { return Qtp{ps.q, ps.t, ps.p}; }

// Free parameters drawn with p, q, t; everything else is derived by the caller.
ParameterSet draw(CheckEnv& env, std::vector<std::string> names, int m = 0, int n = 0,
                  std::vector<Monomial> regular = {});

std::vector<Complex> random_vars(Rng& rng, int n);

// prod over the arguments of theta(x z^{+-1}; q; p)_m
Complex theta_pm(const Complex& x, const Complex& z, int m, const Qtp& b);

using Fn = std::function<Complex(std::span<const Complex>)>;

// Coefficients of target in the span of basis, from a square solve at random
// points; the caller compares them with closed forms.
std::vector<Complex> expand(const Fn& target, const std::vector<Fn>& basis, int n, Rng& rng);

// Number of draws for a row, honouring the nightly multiplier.
inline int scaled(const CheckEnv& env, int base) { return env.nightly ? 3 * base : base; }

void register_core(std::vector<CheckInfo>& out);
void register_interp(std::vector<CheckInfo>& out);
void register_binomial(std::vector<CheckInfo>& out);
void register_biorth(std::vector<CheckInfo>& out);
void register_bigrid(std::vector<CheckInfo>& out);

}  // namespace ellbc::checks
