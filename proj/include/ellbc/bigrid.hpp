#pragma once

#include "ellbc/numeric.hpp"
#include "ellbc/partition.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ellbc::bigrid {

// ---------------------------------------------------------------------------
// Prime field F_P, P < 2^63 so that sums of two residues do not overflow.

struct FieldElem {
    std::uint64_t v = 0;
    bool operator==(const FieldElem&) const = default;
    bool is_zero() const noexcept { return v == 0; }
};

class PrimeField {
public:
    static constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

    explicit PrimeField(std::uint64_t prime = kDefaultPrime);

    std::uint64_t prime() const noexcept { return p_; }
    FieldElem make(std::int64_t x) const;
    FieldElem add(FieldElem a, FieldElem b) const noexcept
    {
        std::uint64_t s = a.v + b.v;
        return {s >= p_ ? s - p_ : s};
    }
    FieldElem sub(FieldElem a, FieldElem b) const noexcept { return {a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
    FieldElem neg(FieldElem a) const noexcept { return {a.v == 0 ? 0 : p_ - a.v}; }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept
    {
        return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v) * b.v % p_)};
    }
    FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
    FieldElem inv(FieldElem a) const;  // throws on zero
    FieldElem random(Rng& rng) const { return {rng.next() % p_}; }
    FieldElem random_nonzero(Rng& rng) const;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Points of P^1 as normalized homogeneous pairs.

struct ProjPoint {
    FieldElem z, w;
    bool operator==(const ProjPoint&) const = default;
};

// Scales so the last nonzero coordinate is 1; rejects (0,0).
ProjPoint normalize(const PrimeField& F, FieldElem z, FieldElem w);
ProjPoint random_point(const PrimeField& F, Rng& rng);
// (z1,w1).(z2,w2) = z1 w2 - w1 z2
FieldElem dot(const PrimeField& F, const ProjPoint& x, const ProjPoint& y);

// Unimodular 2x2 transformation applied to homogeneous coordinates.
struct SL2 {
    FieldElem a, b, c, d;
};
SL2 random_sl2(const PrimeField& F, Rng& rng);
ProjPoint apply(const PrimeField& F, const SL2& g, const ProjPoint& x);

// ---------------------------------------------------------------------------
// Bigrids. Entries gamma(alpha, i, j) with alpha in {0,1}, 1 <= i <= n,
// 0 <= j <= m; a plain bigrid leaves gamma(0,i,m) and gamma(1,i,0) unset.

class Bigrid {
public:
    Bigrid(int m, int n, bool extended = false);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    bool extended() const noexcept { return extended_; }

    // True when (alpha, i, j) lies in the bigrid domain.
    bool in_domain(int alpha, int i, int j) const noexcept;
    const ProjPoint& operator()(int alpha, int i, int j) const;
    void set(int alpha, int i, int j, const ProjPoint& x);

    // Copy with the extended entries filled in.
    Bigrid extend(const PrimeField& F, Rng& rng) const;

private:
    std::size_t slot(int alpha, int i, int j) const;

    int m_, n_;
    bool extended_;
    std::vector<ProjPoint> data_;
    std::vector<char> set_;
};

enum class Kind { univariate, monomial, schur, cauchy, delta, elliptic_I1, random };

std::optional<Kind> parse_kind(std::string_view s);
std::string kind_name(Kind k);

// Parameters of a type I_1 degenerate elliptic bigrid:
// gamma(0,i,j) = phi(a q^j t^{n-i}), gamma(1,i,j) = phi(b q^{-j} t^{i-1}),
// phi(x) = (A(x^2 + tau) + B x : C(x^2 + tau) + D x).
struct EllipticI1 {
    FieldElem a, b, q, t, tau, A, B, C, D;
};
EllipticI1 random_elliptic_params(const PrimeField& F, Rng& rng);
ProjPoint elliptic_phi(const PrimeField& F, const EllipticI1& e, FieldElem x);
Bigrid elliptic_bigrid(const PrimeField& F, int m, int n, const EllipticI1& e);

// Random instance of a class. Univariate requires n == 1.
Bigrid make_bigrid(const PrimeField& F, Kind kind, int m, int n, Rng& rng);

// Cauchy bigrid from eta(i, j), 0 <= i <= n, 0 <= j < m (row-major in i).
Bigrid cauchy_bigrid(int m, int n, const std::vector<ProjPoint>& eta);

Bigrid truncate_right(const Bigrid& g);   // gamma_-: shape (m-1)^n
Bigrid truncate_down(const Bigrid& g);    // gamma^-: shape m^{n-1}
Bigrid truncate_left(const Bigrid& g);    // _-gamma: gamma(alpha,i,j+1)
Bigrid truncate_up(const Bigrid& g);      // ^-gamma: gamma(alpha,i+1,j)
Bigrid complement_bigrid(const Bigrid& g);
Bigrid transform(const PrimeField& F, const Bigrid& g, const SL2& s);

bool is_regular(const PrimeField& F, const Bigrid& g);

// gamma_lambda(mu) by the l-rule.
std::vector<ProjPoint> gamma_point(const Bigrid& g, const Partition& lambda, const Partition& mu);
int gamma_split(const Partition& lambda, const Partition& mu, int m, int n);

// ---------------------------------------------------------------------------
// Symmetric polynomials of degree m in n variables, stored over the degree-m
// monomials in e_0..e_n.

class SymPolynomial {
public:
    SymPolynomial(int m, int n);
    SymPolynomial(int m, int n, std::vector<FieldElem> coeffs);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
    std::vector<FieldElem>& coeffs() noexcept { return coeffs_; }
    std::size_t dim() const noexcept { return coeffs_.size(); }

    FieldElem operator()(const PrimeField& F, std::span<const ProjPoint> x) const;

    // Exponent vectors (k_0..k_n), sum m, in a fixed order.
    static const std::vector<std::vector<int>>& monomials(int m, int n);
    // Monomial values at x, in monomials(m, n) order.
    static std::vector<FieldElem> monomial_row(const PrimeField& F, int m, std::span<const ProjPoint> x);

private:
    int m_, n_;
    std::vector<FieldElem> coeffs_;
};

// e_0..e_n at x.
std::vector<FieldElem> elementary(const PrimeField& F, std::span<const ProjPoint> x);

// f: Lambda^{m-1}_n -> Lambda^m_n, multiplication by e_n.
SymPolynomial multiply_en(const SymPolynomial& p);
// g: Lambda^m_n -> Lambda^m_{n-1}, substitution x_n = (0,1).
SymPolynomial restrict_last(const SymPolynomial& p);

// Basis of the right nullspace of a row-major matrix.
std::vector<std::vector<FieldElem>> nullspace(const PrimeField& F, std::vector<std::vector<FieldElem>> rows,
                                              std::size_t cols);
std::size_t rank(const PrimeField& F, std::vector<std::vector<FieldElem>> rows, std::size_t cols);

class NotRegularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quasi-interpolation polynomial of index lambda, scaled so that its value at
// gamma_lambda(lambda) is 1. Throws NotRegularError if the nullspace is not
// one-dimensional or that value vanishes.
SymPolynomial quasi_interp_solve(const PrimeField& F, const Bigrid& g, const Partition& lambda);

// Both balanced vanishing families for one extension.
bool satisfies_balanced(const PrimeField& F, const Bigrid& extended, const SymPolynomial& p,
                        const Partition& lambda);

struct PerfectionReport {
    bool pass = false;
    bool regularity_ok = false;
    std::optional<Partition> failing_lambda;
    int trials = 0;
    std::string note;
};

PerfectionReport perfection_check(const PrimeField& F, const Bigrid& g, int trials, Rng& rng);

// Closed forms, for cross-checks.
FieldElem univariate_product(const PrimeField& F, const Bigrid& g, int j, const ProjPoint& x);
FieldElem cauchy_product(const PrimeField& F, const Bigrid& g, const Partition& lambda,
                         std::span<const ProjPoint> x);

}  // namespace ellbc::bigrid
