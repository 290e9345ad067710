#include "checks.hpp"

#include "ellbc/bigrid.hpp"

#include <algorithm>

namespace ellbc::checks {

namespace {

using namespace ellbc::bigrid;

std::vector<std::pair<int, int>> shapes(const CheckEnv& env)
{
    std::vector<std::pair<int, int>> s{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}};
    if (env.nightly) {
        s.emplace_back(3, 3);
        s.emplace_back(4, 2);
    }
    return s;
}

void perfect_kind(CheckEnv& env, Residual& res, Kind kind)
{
    PrimeField F;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            Bigrid g = make_bigrid(F, kind, m, n, env.rng);
            auto rep = perfection_check(F, g, 2, env.rng);
            res.require(rep.pass && rep.regularity_ok);
        }
    }
}

// Quasi-interpolation polynomial against a closed form, both scaled to 1 at gamma_lambda(lambda).
template <class Closed>
void against_closed(const PrimeField& F, const Bigrid& g, const Partition& lam, Closed closed, Rng& rng,
                    Residual& res)
{
    SymPolynomial P = quasi_interp_solve(F, g, lam);
    auto at = gamma_point(g, lam, lam);
    FieldElem norm = closed(std::span<const ProjPoint>(at));
    if (norm.is_zero()) {
        res.require(false);
        return;
    }
    for (int k = 0; k < 3; ++k) {
        std::vector<ProjPoint> x;
        for (int i = 0; i < g.n(); ++i) x.push_back(random_point(F, rng));
        res.require(F.mul(P(F, x), norm) == closed(std::span<const ProjPoint>(x)));
    }
}

void monomial(CheckEnv& env, Residual& res) { perfect_kind(env, res, Kind::monomial); }
void schur(CheckEnv& env, Residual& res) { perfect_kind(env, res, Kind::schur); }
void delta_kind(CheckEnv& env, Residual& res) { perfect_kind(env, res, Kind::delta); }
void elliptic(CheckEnv& env, Residual& res) { perfect_kind(env, res, Kind::elliptic_I1); }

void cauchy(CheckEnv& env, Residual& res)
{
    perfect_kind(env, res, Kind::cauchy);
    PrimeField F;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            Bigrid g = make_bigrid(F, Kind::cauchy, m, n, env.rng);
            for (const auto& lam : enumerate(m, n))
                against_closed(
                    F, g, lam, [&](std::span<const ProjPoint> x) { return cauchy_product(F, g, lam, x); }, env.rng,
                    res);
        }
    }
}

void univariate(CheckEnv& env, Residual& res)
{
    PrimeField F;
    for (int d = 0; d < env.draws; ++d) {
        for (int m = 1; m <= (env.nightly ? 6 : 4); ++m) {
            Bigrid g = make_bigrid(F, Kind::univariate, m, 1, env.rng);
            res.require(perfection_check(F, g, 2, env.rng).pass);
            for (int j = 0; j <= m; ++j)
                against_closed(
                    F, g, Partition{j},
                    [&](std::span<const ProjPoint> x) { return univariate_product(F, g, j, x[0]); }, env.rng, res);
        }
    }
}

// Random bigrids are expected to fail perfection from 2^2 on.
void random_fails(CheckEnv& env, Residual& res)
{
    PrimeField F;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
            Bigrid g = make_bigrid(F, Kind::random, m, n, env.rng);
            res.require(!perfection_check(F, g, 2, env.rng).pass);
        }
    }
}

std::size_t binomial(int a, int b)
{
    std::size_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::size_t>(a - b + i) / static_cast<std::size_t>(i);
    return r;
}

// Perfection survives truncation, complementation and SL2 action; the
// multiplication and restriction maps behave as an exact sequence.
void structure(CheckEnv& env, Residual& res)
{
    PrimeField F;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
            Bigrid g = make_bigrid(F, Kind::elliptic_I1, m, n, env.rng);
            for (const Bigrid& h : {truncate_right(g), truncate_down(g), truncate_left(g), truncate_up(g),
                                    complement_bigrid(g), transform(F, g, random_sl2(F, env.rng))})
                res.require(perfection_check(F, h, 1, env.rng).pass);

            const std::size_t dim = SymPolynomial::monomials(m, n).size();
            res.require(dim == binomial(m + n, n));
            // f: Lambda^{m-1}_n -> Lambda^m_n injective, g: Lambda^m_n -> Lambda^m_{n-1} kills its image
            const std::size_t lower = SymPolynomial::monomials(m - 1, n).size();
            std::vector<std::vector<FieldElem>> fmat;
            for (std::size_t k = 0; k < lower; ++k) {
                std::vector<FieldElem> e(lower, F.make(0));
                e[k] = F.make(1);
                SymPolynomial img = multiply_en(SymPolynomial(m - 1, n, e));
                fmat.push_back(img.coeffs());
                const SymPolynomial back = restrict_last(img);
                res.require(std::all_of(back.coeffs().begin(), back.coeffs().end(),
                                        [](FieldElem v) { return v.is_zero(); }));
            }
            res.require(rank(F, fmat, dim) == lower);
            std::vector<std::vector<FieldElem>> gmat;
            for (std::size_t k = 0; k < dim; ++k) {
                std::vector<FieldElem> e(dim, F.make(0));
                e[k] = F.make(1);
                gmat.push_back(restrict_last(SymPolynomial(m, n, e)).coeffs());
            }
            res.require(rank(F, gmat, SymPolynomial::monomials(m, n - 1).size()) == dim - lower);
        }
    }
}

}  // namespace

void register_bigrid(std::vector<CheckInfo>& out)
{
    out.push_back({"bigrid-monomial", "monomial bigrids are perfect and regular", 1, {}, 2, monomial});
    out.push_back({"bigrid-schur", "Schur bigrids are perfect and regular", 1, {}, 2, schur});
    out.push_back({"bigrid-cauchy", "Cauchy bigrids: perfection and product form", 1, {}, 2, cauchy});
    out.push_back({"bigrid-delta", "delta bigrids are perfect and regular", 1, {}, 2, delta_kind});
    out.push_back({"bigrid-elliptic", "type I_1 degenerate elliptic bigrids are perfect", 1, {}, 2, elliptic});
    out.push_back({"bigrid-univariate", "univariate bigrids and their product form", 1, {}, 2, univariate});
    out.push_back({"bigrid-random", "random bigrids fail perfection from 2^2 on", 1, {}, 2, random_fails});
    out.push_back({"bigrid-structure", "perfection under truncation, complement and SL2; exact sequence", 1, {}, 1,
                   structure});
}

}  // namespace ellbc::checks
