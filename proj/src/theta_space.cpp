#include "ellbc/theta_space.hpp"

#include <algorithm>
#include <deque>

namespace ellbc {

ThetaBasis::ThetaBasis(int m, int n, Complex p, Rng& rng) : m_(m), n_(n), p_(std::move(p))
{
    if (m < 0 || n < 0) throw std::invalid_argument("make_basis: negative degree or rank");
    w_.resize(static_cast<std::size_t>(m + 1));
    for (auto& wk : w_)
        for (int j = 0; j < m; ++j) wk.push_back(rng.point());
    index_ = enumerate(m, n);
    for (const auto& mu : index_) {
        std::vector<int> seq = mu.padded(n);
        std::sort(seq.begin(), seq.end());
        std::vector<std::vector<int>> orbit;
        do {
            orbit.push_back(seq);
        } while (std::next_permutation(seq.begin(), seq.end()));
        orbits_.push_back(std::move(orbit));
    }
}

std::vector<Complex> ThetaBasis::univariate(const Complex& x) const
{
    std::vector<Complex> out;
    out.reserve(w_.size());
    Complex xi = inv(x);
    for (const auto& wk : w_) {
        Complex r(1);
        for (const auto& w : wk) r *= theta(w * x, p_) * theta(w * xi, p_);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Complex> ThetaBasis::row(std::span<const Complex> x) const
{
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("ThetaBasis::row: wrong number of variables");
    std::vector<std::vector<Complex>> u;
    u.reserve(x.size());
    for (const auto& xi : x) u.push_back(univariate(xi));
    std::vector<Complex> out;
    out.reserve(orbits_.size());
    for (const auto& orbit : orbits_) {
        Complex s;
        for (const auto& seq : orbit) {
            Complex term(1);
            for (int i = 0; i < n_; ++i)
                term *= u[static_cast<std::size_t>(i)][static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])];
            s += term;
        }
        out.push_back(std::move(s));
    }
    return out;
}

BasisPtr make_basis(int m, int n, const Complex& p, const NumericContext& ctx, int attempt)
{
    struct Entry {
        int m, n, attempt;
        unsigned prec;
        std::uint64_t seed;
        Complex p;
        BasisPtr basis;
    };
    thread_local std::deque<Entry> cache;
    unsigned prec = Real::default_precision();
    for (const auto& e : cache)
        if (e.m == m && e.n == n && e.attempt == attempt && e.prec == prec && e.seed == ctx.seed && e.p == p)
            return e.basis;
    Rng rng(fnv1a("basis:" + std::to_string(m) + ":" + std::to_string(n) + ":" + std::to_string(attempt),
                  ctx.seed));
    auto basis = std::make_shared<const ThetaBasis>(m, n, p, rng);
    cache.push_back(Entry{m, n, attempt, prec, ctx.seed, p, basis});
    if (cache.size() > 64) cache.pop_front();
    return basis;
}

SymThetaElement::SymThetaElement(BasisPtr basis, std::vector<Complex> coeffs, Real residual)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)), residual_(std::move(residual))
{
    if (coeffs_.size() != basis_->dim()) throw std::invalid_argument("SymThetaElement: coefficient count mismatch");
}

Real SymThetaElement::scale() const
{
    Real s = 0;
    for (const auto& c : coeffs_) {
        Real a = abs(c);
        if (a > s) s = a;
    }
    return s;
}

Complex SymThetaElement::dot(std::span<const Complex> row) const
{
    Complex s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += coeffs_[i] * row[i];
    return s;
}

Complex SymThetaElement::operator()(std::span<const Complex> x) const { return dot(basis_->row(x)); }

SymThetaElement solve_from_conditions(int m, int n, const Complex& p,
                                      const std::vector<std::vector<Complex>>& vanishing,
                                      const Normalization& norm, const NumericContext& ctx)
{
    constexpr int max_attempts = 4;
    const Real limit = boost::multiprecision::pow(Real(10), ctx.digits / 2);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        BasisPtr basis = make_basis(m, n, p, ctx, attempt);
        const std::size_t N = basis->dim();
        if (vanishing.size() + 1 != N) throw std::invalid_argument("solve_from_conditions: need dim-1 vanishing points");
        CMatrix a(N, N);
        std::vector<Complex> rhs(N);
        std::vector<std::vector<Complex>> raw(N);
        for (std::size_t r = 0; r < N; ++r) {
            raw[r] = basis->row(r + 1 < N ? std::span<const Complex>(vanishing[r]) : std::span<const Complex>(norm.point));
            Real big = 0;
            for (const auto& v : raw[r]) {
                Real av = abs(v);
                if (av > big) big = av;
            }
            if (big == 0) big = 1;
            Complex s = Complex(Real(1) / big);
            for (std::size_t c = 0; c < N; ++c) a(r, c) = raw[r][c] * s;
            if (r + 1 == N) rhs[r] = norm.value * s;
        }
        SolveResult sol;
        try {
            sol = lu_solve(a, rhs);
        } catch (const SingularError&) {
            continue;
        }
        if (sol.condition > limit) continue;
        // relative residual of the unscaled system
        Real res = 0, cs = 0;
        for (const auto& c : sol.x) cs = std::max(cs, Real(abs(c)));
        for (std::size_t r = 0; r < N; ++r) {
            Complex lhs;
            Real rs = 0;
            for (std::size_t c = 0; c < N; ++c) {
                lhs += raw[r][c] * sol.x[c];
                rs = std::max(rs, Real(abs(raw[r][c])));
            }
            Complex target = (r + 1 == N) ? norm.value : Complex();
            Real e = abs(lhs - target) / (rs * cs + ctx.eps());
            if (e > res) res = e;
        }
        return SymThetaElement(basis, std::move(sol.x), res);
    }
    throw GenericityError("solve_from_conditions: ill-conditioned system for every basis attempt");
}

}  // namespace ellbc
