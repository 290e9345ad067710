#include "checks.hpp"

#include "ellbc/diffops.hpp"
#include "ellbc/theta_space.hpp"

namespace ellbc::checks {

namespace {

void theta_functional(CheckEnv& env, Residual& res)
{
    for (int k = 0; k < 50 * env.draws; ++k) {
        Complex x = env.rng.point(0.1, 10.0);
        Complex p = polar(Real(env.rng.uniform(0.01, 0.5)), Real(env.rng.uniform(-3.14159, 3.14159)));
        env.record("x", x);
        env.record("p", p);
        res.compare(theta(x, p), -x * theta(inv(x), p));
        res.compare(theta(x, p), -x * theta(p * x, p));
    }
}

// Each transformation as (lhs, rhs) over all lambda in m^n.
void delta_transforms(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 1}}) {
            ParameterSet ps = draw(env, {"a", "b0", "b1"}, m, n);
            Qtp B = base_of(ps);
            const Complex &q = B.q, &t = B.t, &p = B.p, &a = ps["a"];
            std::vector<Complex> bs{ps["b0"], ps["b1"]};
            Qtp dual{inv(t), inv(q), p};
            const Partition R = rectangle(m, n);
            const Complex dr = delta(R, a, bs, B);
            const Complex qm = pow(q, m), tn = pow(t, n), tn1 = pow(t, n - 1);
            for (const auto& lam : enumerate(m, n)) {
                res.compare(delta(conjugate(lam), a, bs, dual), delta(lam, a / (q * t), bs, B));

                std::vector<Complex> c2;
                for (const auto& b : bs) c2.push_back(tn1 * b / (qm * a));
                for (const Complex& e : {tn, inv(qm), p * q * tn1, p * q / (qm * t)}) c2.push_back(e);
                res.compare(delta(complement(lam, m, n), a, bs, B) / dr,
                            delta(lam, tn1 * tn1 / (qm * qm * a), c2, B));

                std::vector<Complex> c3;
                for (const auto& b : bs) c3.push_back(qm * b);
                for (const Complex& e : {tn, p * q * tn1, qm * a / tn1, p * q * qm * a / tn}) c3.push_back(e);
                res.compare(delta(add_rectangle(lam, m, n), a, bs, B) / dr, delta(lam, qm * qm * a, c3, B));

                std::vector<Complex> c4;
                for (const auto& b : bs) c4.push_back(b / tn);
                for (const Complex& e : {inv(qm), p * q / (qm * t), qm * a / tn1, p * q * qm * a / tn})
                    c4.push_back(e);
                res.compare(delta(concat_rectangle(lam, m, n), a, bs, B) / dr, delta(lam, a / (tn * tn), c4, B));
            }
        }
    }
}

void delta_rect(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2}}) {
            ParameterSet ps = draw(env, {"a", "b0", "b1"}, m, n);
            Qtp B = base_of(ps);
            std::vector<Complex> bs{ps["b0"], ps["b1"]};
            res.compare(delta_rect_limit(m, n, ps["a"], bs, B, env.ctx), delta(rectangle(m, n), ps["a"], bs, B));
        }
    }
}

// At p -> 0 every symbol reduces to its trigonometric counterpart.
void p0_consistency(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a", "x", "b0", "b1"});
        Qtp small{ps.q, ps.t, Complex(Real("1e-8"))};
        Qtp zero{ps.q, ps.t, Complex(0)};
        std::vector<Complex> bs{ps["b0"], ps["b1"]};
        for (const auto& lam : enumerate(2, 2)) {
            for (CKind k : {CKind::zero, CKind::minus, CKind::plus}) {
                Complex xs[] = {ps["x"]};
                res.compare(c_symbol(k, lam, xs, small), c_symbol(k, lam, xs, zero));
            }
            res.compare(delta(lam, ps["a"], bs, small), delta(lam, ps["a"], bs, zero));
        }
    }
}

EvaluableFn as_fn(const SymThetaElement& e)
{
    return EvaluableFn{e.n(), [e](std::span<const Complex> x) { return e(x); }};
}

SymThetaElement random_element(int m, int n, const Complex& p, CheckEnv& env)
{
    BasisPtr basis = make_basis(m, n, p, env.ctx, 1000 + env.rng.below(1000));
    std::vector<Complex> c;
    for (std::size_t k = 0; k < basis->dim(); ++k) c.push_back(env.rng.point());
    return SymThetaElement(basis, std::move(c));
}

// Image of a degree-m theta function under a balanced D: symmetric, and each
// variable obeys f(p x) = (p x^2)^{-m} f(x).
void d_degree(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
            ParameterSet ps = draw(env, {"a", "b", "c"}, m, n);
            Qtp B = base_of(ps);
            Complex dd = B.p / (pow(B.q, m) * pow(B.t, n - 1) * ps["a"] * ps["b"] * ps["c"]);
            EvaluableFn g = apply_D(ps["a"], ps["b"], ps["c"], dd, B, n, as_fn(random_element(m, n, B.p, env)));
            std::vector<Complex> x = random_vars(env.rng, n);
            Complex gx = g(x);
            auto y = x;
            y[0] = B.p * x[0];
            res.compare(g(y), gx / pow(B.p * x[0] * x[0], m));
            y = x;
            y[0] = inv(x[0]);
            res.compare(g(y), gx);
            if (n > 1) {
                y = x;
                std::swap(y[0], y[1]);
                res.compare(g(y), gx);
            }
        }
    }
}

void d_m0(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 3; ++n) {
            ParameterSet ps = draw(env, {"a", "b", "c"}, 0, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"], &c = ps["c"];
            Complex dd = B.p / (pow(B.t, n - 1) * a * b * c);
            Complex expect(1);
            for (int i = 1; i <= n; ++i) {
                Complex ti = pow(B.t, n - i);
                expect *= theta_prod({a * b * ti, a * c * ti, a * dd * ti}, B.p);
            }
            for (int k = 0; k < 2; ++k) res.compare(d_weight_sum(a, b, c, dd, B, random_vars(env.rng, n)), expect);
        }
    }
}

void d_quasicommute(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
            ParameterSet ps = draw(env, {"a", "b", "c", "c2"}, m, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"], &c = ps["c"], &c2 = ps["c2"];
            Complex dd = B.p / (pow(B.q, m) * pow(B.t, n - 1) * a * b * c);
            Complex d2 = c * dd / c2;
            Complex sq = sqrt(B.q);
            SymThetaElement f = random_element(m, n, B.p, env);
            EvaluableFn lhs = apply_D(a, b, c2, d2, B, n, apply_D(sq * a, sq * b, c / sq, dd / sq, B, n, as_fn(f)));
            EvaluableFn rhs = apply_D(a, b, c, dd, B, n, apply_D(sq * a, sq * b, c2 / sq, d2 / sq, B, n, as_fn(f)));
            for (int k = 0; k < 2; ++k) {
                auto x = random_vars(env.rng, n);
                res.compare(lhs(x), rhs(x));
            }
        }
    }
}

}  // namespace

void register_core(std::vector<CheckInfo>& out)
{
    out.push_back({"theta-functional", "theta(x) = -x theta(1/x) = -x theta(px)", 1, {}, 20, theta_functional});
    out.push_back({"delta-transforms", "Delta under conjugation, complement, rectangle shift and concatenation", 1,
                   {}, 20, delta_transforms});
    out.push_back({"delta-rect-limit", "rectangular Delta by the x -> 1 limit", 1e3, {}, 5, delta_rect});
    out.push_back({"p0-consistency", "symbols at p = 1e-8 against the trigonometric p = 0 values", 1, 1e-6, 5,
                   p0_consistency});
    out.push_back({"D-degree", "balanced D preserves degree-m BC_n theta functions", 1, {}, 3, d_degree});
    out.push_back({"D-m0", "D applied to 1 is the constant product", 1, {}, 3, d_m0});
    out.push_back({"D-quasicommute", "quasi-commutation of composed D operators", 1, {}, 2, d_quasicommute});
}

}  // namespace ellbc::checks
