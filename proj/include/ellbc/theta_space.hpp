#pragma once

#include "ellbc/linalg.hpp"
#include "ellbc/numeric.hpp"
#include "ellbc/partition.hpp"

#include <memory>
#include <span>
#include <vector>

namespace ellbc {

// Randomized product basis for BC_n-symmetric theta functions of degree m:
// b_k(x) = prod_j theta(w_kj x) theta(w_kj / x), k = 0..m, symmetrized over
// the distinct rearrangements of each mu inside m^n.
class ThetaBasis {
public:
    ThetaBasis(int m, int n, Complex p, Rng& rng);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const Complex& p() const noexcept { return p_; }
    const std::vector<std::vector<Complex>>& w() const noexcept { return w_; }
    const std::vector<Partition>& index() const noexcept { return index_; }
    std::size_t dim() const noexcept { return index_.size(); }

    // b_0(x) .. b_m(x)
    std::vector<Complex> univariate(const Complex& x) const;
    // B_mu(x) for every mu in index(), in that order
    std::vector<Complex> row(std::span<const Complex> x) const;

private:
    int m_, n_;
    Complex p_;
    std::vector<std::vector<Complex>> w_;
    std::vector<Partition> index_;
    std::vector<std::vector<std::vector<int>>> orbits_;  // distinct rearrangements per mu
};

using BasisPtr = std::shared_ptr<const ThetaBasis>;

// Seeded from ctx.seed and (m, n, attempt) so rebuilding gives the same basis.
BasisPtr make_basis(int m, int n, const Complex& p, const NumericContext& ctx, int attempt = 0);

class SymThetaElement {
public:
    SymThetaElement(BasisPtr basis, std::vector<Complex> coeffs, Real residual = Real(0));

    const ThetaBasis& basis() const noexcept { return *basis_; }
    const BasisPtr& basis_ptr() const noexcept { return basis_; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    int m() const noexcept { return basis_->m(); }
    int n() const noexcept { return basis_->n(); }
    Real scale() const;  // max |coeff|
    const Real& residual() const noexcept { return residual_; }

    Complex operator()(std::span<const Complex> x) const;
    Complex operator()(std::initializer_list<Complex> x) const
    {
        return (*this)(std::span<const Complex>(x.begin(), x.size()));
    }
    // Reuse a basis row computed once for several elements.
    Complex dot(std::span<const Complex> row) const;

private:
    BasisPtr basis_;
    std::vector<Complex> coeffs_;
    Real residual_;
};

struct Normalization {
    std::vector<Complex> point;
    Complex value;
};

// Square system: zero at each vanishing point, prescribed value at the
// normalization point. Rows are equilibrated before the condition test;
// an ill-conditioned system triggers a fresh basis, up to a few attempts.
SymThetaElement solve_from_conditions(int m, int n, const Complex& p,
                                      const std::vector<std::vector<Complex>>& vanishing,
                                      const Normalization& norm, const NumericContext& ctx);

}  // namespace ellbc
