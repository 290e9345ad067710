#include "checks.hpp"

#include "ellbc/binomial.hpp"
#include "ellbc/diffops.hpp"
#include "ellbc/interpolation.hpp"

namespace ellbc::checks {

namespace {

using Shape = std::pair<int, int>;  // (m, n)

const std::vector<Shape> kSmallShapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}};

std::vector<Shape> shapes(const CheckEnv& env)
{
    std::vector<Shape> s = kSmallShapes;
    if (env.nightly) {
        s.emplace_back(3, 2);
        s.emplace_back(2, 3);
    }
    return s;
}

int max_size(const CheckEnv& env) { return env.nightly ? 4 : 3; }

EvaluableFn as_fn(const InterpPtr& P)
{
    return EvaluableFn{P->n(), [P](std::span<const Complex> x) { return (*P)(x); }};
}

// sum |c_k B_k(x)|: the size of the terms that cancel when P vanishes at x.
Real magnitude(const InterpFunction& P, std::span<const Complex> x)
{
    auto row = P.element().basis().row(x);
    Real s = 0;
    for (std::size_t k = 0; k < row.size(); ++k) s += abs(P.element().coeffs()[k] * row[k]);
    return s;
}

void diffeq(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a", "b", "c"}, m, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"], &c = ps["c"];
            Complex dd = B.p / (pow(B.q, m) * pow(B.t, n - 1) * a * b * c);
            Complex sq = sqrt(B.q);
            for (const auto& lam : enumerate(m, n)) {
                auto P = interp_theta(lam, m, n, a, b, B, env.ctx);
                EvaluableFn lhs = apply_D(a, b, c, dd, B, n, as_fn(interp_theta(lam, m, n, sq * a, sq * b, B, env.ctx)));
                Complex factor(1);
                for (int i = 1; i <= n; ++i)
                    factor *= theta_prod({a * b * pow(B.q, m) * pow(B.t, n - i),
                                          a * c * pow(B.q, lam[i]) * pow(B.t, n - i),
                                          b * c * pow(B.q, m - lam[i]) * pow(B.t, i - 1)},
                                         B.p);
                auto x = random_vars(env.rng, n);
                res.compare(lhs(x), factor * (*P)(x));
            }
        }
    }
}

// Nonincreasing sequences of the given length with entries in [lo, hi].
void sequences(int len, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    int top = cur.empty() ? hi : cur.back();
    for (int v = lo; v <= top; ++v) {
        cur.push_back(v);
        sequences(len, lo, hi, cur, out);
        cur.pop_back();
    }
}

void extra_vanish(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a", "b"}, m, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"];
            for (const auto& lam : enumerate(m, n)) {
                auto P = interp_theta(lam, m, n, a, b, B, env.ctx);
                for (int l = 1; l <= n; ++l) {
                    // tail a q^{mu_i} t^{n-i}, i > l, with mu_{l+1} < lambda_{l+1}
                    if (l < n && lam[l + 1] > 0) {
                        std::vector<std::vector<int>> tails;
                        std::vector<int> cur;
                        sequences(n - l, 0, lam[l + 1] - 1, cur, tails);
                        for (const auto& tail : tails) {
                            auto x = random_vars(env.rng, n);
                            for (int i = l + 1; i <= n; ++i)
                                x[i - 1] = a * pow(B.q, tail[i - l - 1]) * pow(B.t, n - i);
                            res.vanish((*P)(x), magnitude(*P, x));
                        }
                    }
                    // head b q^{m-mu_i} t^{i-1}, i <= l, with mu_l > lambda_l
                    if (lam[l] < m) {
                        std::vector<std::vector<int>> heads;
                        std::vector<int> cur;
                        sequences(l, 0, m, cur, heads);
                        for (const auto& head : heads) {
                            if (head[l - 1] <= lam[l]) continue;
                            auto x = random_vars(env.rng, n);
                            for (int i = 1; i <= l; ++i) x[i - 1] = b * pow(B.q, m - head[i - 1]) * pow(B.t, i - 1);
                            res.vanish((*P)(x), magnitude(*P, x));
                        }
                    }
                }
            }
        }
    }
}

void complement_symm(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a", "b"}, m, n);
            Qtp B = base_of(ps);
            for (const auto& lam : enumerate(m, n)) {
                auto P = interp_theta(complement(lam, m, n), m, n, ps["a"], ps["b"], B, env.ctx);
                auto Q = interp_theta(lam, m, n, ps["b"], ps["a"], B, env.ctx);
                for (int k = 0; k < 2; ++k) {
                    auto x = random_vars(env.rng, n);
                    res.compare((*P)(x), (*Q)(x));
                }
            }
        }
    }
}

void cauchy_case(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a"}, m, n);
            Qtp B = base_of(ps);
            const Complex& a = ps["a"];
            Complex b = B.p * B.q / (pow(B.q, m) * pow(B.t, n) * a);
            for (const auto& lam : enumerate(m, n)) {
                auto P = interp_theta(lam, m, n, a, b, B, env.ctx);
                Partition lc = conjugate(lam);
                auto x = random_vars(env.rng, n);
                Complex expect(1);
                for (const auto& xi : x)
                    for (int j = 1; j <= m; ++j) expect *= theta_pm(a * pow(B.t, n - lc[j]) * pow(B.q, j - 1), xi, 1, B);
                res.compare((*P)(x), expect);
            }
        }
    }
}

Complex principal_formula(const Partition& lam, int m, int n, const Complex& a, const Complex& b, const Qtp& B)
{
    const Partition comp = complement(lam, m, n);
    const Complex qm = pow(B.q, m);
    return c0(comp, {B.p * B.q / (qm * a * b)}, B) * cplus(comp, {pow(B.t, n - 1) * b / (qm * a)}, B) *
           cminus(lam, {B.p * B.q, B.t}, B) * cplus(lam, {pow(B.t, 2 * n - 2) * a * a}, B) / c0(lam, {pow(B.t, n)}, B);
}

void principal(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a", "b"}, m, n);
            Qtp B = base_of(ps);
            for (const auto& lam : enumerate(m, n)) {
                auto P = interp_theta(lam, m, n, ps["a"], ps["b"], B, env.ctx);
                res.compare((*P)(partition_point(lam, n, ps["a"], B)), principal_formula(lam, m, n, ps["a"], ps["b"], B));
            }
        }
    }
}

void delta_case(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a"}, m, n);
            Qtp B = base_of(ps);
            const Complex& a = ps["a"];
            const Complex qm = pow(B.q, m);
            Complex b = inv(qm * pow(B.t, n - 1) * a);
            const auto box = enumerate(m, n);
            for (const auto& lam : box) {
                auto P = interp_theta(lam, m, n, a, b, B, env.ctx);
                const Partition comp = complement(lam, m, n);
                Complex diag = c0(comp, {B.p * B.q * pow(B.t, n - 1)}, B) * cplus(comp, {inv(qm * qm * a * a)}, B) *
                               cminus(lam, {B.p * B.q, B.t}, B) * cplus(lam, {pow(B.t, 2 * n - 2) * a * a}, B) /
                               c0(lam, {pow(B.t, n)}, B);
                for (const auto& mu : box) {
                    auto x = partition_point(mu, n, a, B);
                    if (mu == lam)
                        res.compare((*P)(x), diag);
                    else
                        res.vanish((*P)(x), magnitude(*P, x));
                }
            }
        }
    }
}

void mshift(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a", "b"}, m + 1, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"];
            for (const auto& lam : enumerate(m, n)) {
                auto big = interp_theta(lam, m + 1, n, a, b, B, env.ctx);
                auto small = interp_theta(lam, m, n, a, b * B.q, B, env.ctx);
                auto x = random_vars(env.rng, n);
                Complex f(1);
                for (const auto& xi : x) f *= theta_pm(b, xi, 1, B);
                res.compare((*big)(x), f * (*small)(x));
            }
            auto P0 = interp_theta(Partition{}, m, n, a, b, B, env.ctx);
            auto x = random_vars(env.rng, n);
            Complex f(1);
            for (const auto& xi : x) f *= theta_pm(b, xi, m, B);
            res.compare((*P0)(x), f);
        }
    }
}

// The six symmetries, the special values and the difference equation of R*.
void rstar_identities(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            ParameterSet ps = draw(env, {"a", "b", "c", "v"}, 0, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"], &q = B.q, &t = B.t, &p = B.p;
            const Complex sp = sqrt(p), sq = sqrt(q);
            const Qtp inv_base{inv(q), inv(t), p};
            for (const auto& lam : partitions_up_to(max_size(env), n)) {
                const auto st = stats(lam);
                const int sz = lam.size();
                RStar R(lam, n, a, b, B, ctx);
                auto z = random_vars(env.rng, n);
                std::vector<Complex> zn, zp;
                for (const auto& zi : z) {
                    zn.push_back(-zi);
                    zp.push_back(sp * zi);
                }
                const Complex rz = R(z);

                Complex f1 = pow(q * q * pow(t, 2 * n - 2) * a * a / (b * b), sz) * pow(t, -4 * st.nstat) *
                             pow(q, 4 * st.nstat_conj);
                res.compare(rz, f1 * RStar(lam, n, inv(a), inv(b), inv_base, ctx)(z));
                res.compare(rz, RStar(lam, n, -a, -b, B, ctx)(zn));
                Complex f3 = pow(b * pow(t, 1 - n) / (a * q), sz) * pow(t, 2 * st.nstat) * pow(q, -2 * st.nstat_conj);
                res.compare(RStar(lam, n, sp * a, sp * b, B, ctx)(zp), f3 * rz);
                res.compare(RStar(lam, n, sp * a, b / sp, B, ctx)(zp), pow(p * q / (a * b), sz) * rz);

                // rectangle shift with m = 1
                Complex pre(1);
                for (const auto& zi : z) pre *= theta_pm(a, zi, 1, B) / theta_pm(p * q / b, zi, 1, B);
                res.compare(RStar(add_rectangle(lam, 1, n), n, a, b, B, ctx)(z),
                            pre * RStar(lam, n, a * q, b / q, B, ctx)(z));

                // special branching with k = 1
                std::vector<Complex> z1 = z;
                z1.push_back(a);
                Complex cr = c0(lam, {pow(t, n), p * q * a / (b * t)}, B) / c0(lam, {pow(t, n + 1), p * q * a / b}, B);
                res.compare(RStar(lam, n + 1, a, b, B, ctx)(z1), cr * RStar(lam, n, t * a, b, B, ctx)(z));

                // m-independence
                res.compare(rz, RStar(lam, n, a, b, B, ctx, lam[1] + 1)(z));

                const Complex& v = ps["v"];
                const Complex tn1 = pow(t, n - 1);
                res.compare(R(principal_point(v, n, t)), delta0(lam, tn1 * a / b, {tn1 * a * v, a / v}, B));

                res.compare(R(partition_point(lam, n, a, B)),
                            cplus(lam, {tn1 * tn1 * a * a}, B) * c0(lam, {p * q * tn1 * a / b}, B) /
                                (cplus(lam, {tn1 * a / b}, B) * c0(lam, {tn1 * a * b}, B) *
                                 delta(lam, tn1 * a / b, {pow(t, n)}, B)));

                Complex bc = p * q / (pow(t, n) * a);
                Complex cauchy(1);
                const Partition lc = conjugate(lam);
                for (const auto& zi : z)
                    for (int j = 1; j <= lam[1]; ++j)
                        cauchy *= theta_pm(a * pow(t, n - lc[j]) * pow(q, j - 1), zi, 1, B) /
                                  theta_pm(a * pow(t, n) * pow(q, j - 1), zi, 1, B);
                res.compare(RStar(lam, n, a, bc, B, ctx)(z), cauchy);

                const Complex& c = ps["c"];
                Complex dd = p / (tn1 * a * b * c);
                RStar Rs(lam, n, sq * a, sq * b, B, ctx);
                EvaluableFn shifted{n, [Rs](std::span<const Complex> x) { return Rs(x); }};
                Complex factor(1);
                for (int i = 1; i <= n; ++i)
                    factor *= theta_prod({a * b * pow(t, n - i), a * c * pow(q, lam[i]) * pow(t, n - i),
                                          b * c * pow(q, -lam[i]) * pow(t, i - 1)},
                                         p);
                res.compare(apply_D(a, b, c, dd, B, n, shifted)(z), factor * rz);
            }
        }
    }
}

// Compares expansion coefficients with closed forms; structurally zero
// coefficients are measured against the largest one.
void match_coefficients(Residual& res, const std::vector<Complex>& got, const std::vector<Complex>& want)
{
    Real scale = 0;
    for (const auto& g : got) scale = std::max(scale, abs(g));
    for (std::size_t k = 0; k < got.size(); ++k) {
        if (want[k].is_zero())
            res.vanish(got[k], scale);
        else
            res.compare(got[k], want[k]);
    }
}

void connection(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a", "b", "a2", "b2"}, m, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"], &a2 = ps["a2"], &b2 = ps["b2"];
            const Complex tn1 = pow(B.t, n - 1), qm = pow(B.q, m), tn = pow(B.t, n);
            const Complex pq = B.p * B.q;
            const Partition R = rectangle(m, n);
            const auto box = enumerate(m, n);
            std::vector<Fn> basis_b, basis_a;
            for (const auto& mu : box) {
                auto Pb = interp_theta(mu, m, n, a, b2, B, ctx);
                auto Pa = interp_theta(mu, m, n, a2, b, B, ctx);
                basis_b.push_back([Pb](std::span<const Complex> x) { return (*Pb)(x); });
                basis_a.push_back([Pa](std::span<const Complex> x) { return (*Pa)(x); });
            }
            for (const auto& lam : box) {
                auto P = interp_theta(lam, m, n, a, b, B, ctx);
                Fn target = [P](std::span<const Complex> x) { return (*P)(x); };

                std::vector<Complex> want;
                for (const auto& mu : box) {
                    Complex ab2 = tn1 * a / (qm * b2);
                    want.push_back(c0(R, {tn1 * a * b, b / a}, B) / c0(R, {tn1 * a * b2, b2 / a}, B) *
                                   delta(mu, ab2, {b / b2, tn, inv(qm), pq / (qm * b * b2)}, B) /
                                   delta(lam, tn1 * a / (qm * b), {b2 / b, tn, inv(qm), pq / (qm * b * b2)}, B) *
                                   binom(mu, lam, ab2, b / b2, B, ctx));
                }
                match_coefficients(res, expand(target, basis_b, n, env.rng), want);

                want.clear();
                for (const auto& mu : box)
                    want.push_back(contains(mu, lam)
                                       ? binom_normalized(lam, mu, tn1 * a / (qm * b), a / a2, {tn1 * a * a2}, B, ctx)
                                       : Complex(0));
                match_coefficients(res, expand(target, basis_a, n, env.rng), want);
            }
        }
        // the same with abelian functions
        for (int n = 1; n <= 2; ++n) {
            ParameterSet ps = draw(env, {"a", "b", "a2"}, 0, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"], &a2 = ps["a2"];
            const Complex tn1 = pow(B.t, n - 1);
            for (const auto& lam : partitions_up_to(max_size(env) - 1, n)) {
                auto lower = interval(Partition{}, lam);
                std::vector<Fn> basis;
                for (const auto& mu : lower) {
                    RStar r(mu, n, a2, b, B, ctx);
                    basis.push_back([r](std::span<const Complex> x) { return r(x); });
                }
                RStar R(lam, n, a, b, B, ctx);
                std::vector<Complex> want;
                for (const auto& mu : lower)
                    want.push_back(binom_normalized(lam, mu, tn1 * a / b, a / a2, {tn1 * a * a2}, B, ctx));
                match_coefficients(res, expand([R](std::span<const Complex> x) { return R(x); }, basis, n, env.rng),
                                   want);
            }
        }
    }
}

void sixj(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a", "b", "a2", "b2"}, m, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"], &a2 = ps["a2"], &b2 = ps["b2"];
            const Complex tn1 = pow(B.t, n - 1), qm = pow(B.q, m), tn = pow(B.t, n);
            const Complex pq = B.p * B.q;
            const Partition R = rectangle(m, n);
            const auto box = enumerate(m, n);
            std::vector<Fn> basis;
            for (const auto& kap : box) {
                auto P = interp_theta(kap, m, n, a2, b2, B, ctx);
                basis.push_back([P](std::span<const Complex> x) { return (*P)(x); });
            }
            const Complex A1 = tn1 * a / (qm * b), A2 = tn1 * a2 / (qm * b2);
            for (const auto& lam : box) {
                auto P = interp_theta(lam, m, n, a, b, B, ctx);
                std::vector<Complex> want;
                for (const auto& kap : box) {
                    Complex s;
                    for (const auto& mu : box) {
                        if (!contains(mu, lam) || !contains(mu, kap)) continue;
                        s += binom_normalized(lam, mu, A1, a / a2, {}, B, ctx) *
                             binom_normalized(kap, mu, A2, b / b2, {}, B, ctx) /
                             delta(mu, tn1 * a2 / (qm * b), {tn, inv(qm), tn1 * a * a2, pq / (qm * b * b2)}, B);
                    }
                    want.push_back(c0(R, {tn1 * a2 * b, b / a2}, B) / c0(R, {tn1 * a2 * b2, b2 / a2}, B) *
                                   delta(kap, A2, {tn, inv(qm), pq / (qm * b * b2)}, B) /
                                   delta0(lam, A1, {pq / (qm * a2 * b)}, B) * s);
                }
                match_coefficients(res, expand([P](std::span<const Complex> x) { return (*P)(x); }, basis, n, env.rng),
                                   want);
            }
        }
    }
}

void branching(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            ParameterSet ps = draw(env, {"a", "b", "v"}, 0, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"], &v = ps["v"], &t = B.t;
            const Complex tn = pow(t, n);
            for (const auto& lam : partitions_up_to(max_size(env), n + 1)) {
                auto z = random_vars(env.rng, n);
                auto zv = z;
                zv.push_back(v);
                Complex rhs;
                for (const auto& kap : interval(Partition{}, lam)) {
                    if (kap.length() > n) continue;
                    rhs += binom_normalized(lam, kap, tn * a / b, t, {tn * a * v, tn * a / v, B.p * B.q * a / (t * b)},
                                            B, ctx) *
                           RStar(kap, n, a, b, B, ctx)(z);
                }
                res.compare(RStar(lam, n + 1, a, b, B, ctx)(zv), rhs);
            }
        }
    }
}

// Partitions kappa with lambda inside kappa inside lambda + m^n.
std::vector<Partition> strip_above(const Partition& lam, int m, int n)
{
    std::vector<int> up = lam.padded(n);
    for (auto& u : up) u += m;
    return interval(lam, Partition(up));
}

void pieri(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            for (int m = 1; m <= (env.nightly ? 2 : 1); ++m) {
                ParameterSet ps = draw(env, {"a", "b", "v"}, m, n);
                Qtp B = base_of(ps);
                const Complex &a = ps["a"], &b = ps["b"], &v = ps["v"];
                const Complex tn1 = pow(B.t, n - 1), qm = pow(B.q, m), tn = pow(B.t, n);
                const Complex pq = B.p * B.q;
                const Complex pre = delta0(rectangle(m, n), tn1 * v / b, {tn1 * v * a, v / a}, B);
                for (const auto& lam : partitions_up_to(max_size(env) - 1, n)) {
                    auto z = random_vars(env.rng, n);
                    Complex lhs = RStar(lam, n, a, b / qm, B, ctx)(z);
                    for (const auto& zi : z) lhs *= theta_pm(v, zi, m, B) / theta_pm(pq / b, zi, m, B);
                    Complex rhs;
                    for (const auto& kap : strip_above(lam, m, n)) {
                        Complex c = pre * delta(kap, tn1 * a / b, {tn, pq / (v * b), qm * v / b}, B) /
                                    delta(lam, qm * tn1 * a / b, {tn, pq / (v * b), qm * v / b}, B) *
                                    binom_normalized(kap, lam, tn1 * a / b, inv(qm), {}, B, ctx);
                        rhs += c * RStar(kap, n, a, b, B, ctx)(z);
                    }
                    res.compare(lhs, rhs);
                }
            }
        }
    }
}

void cauchy_identity(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes(env)) {
            ParameterSet ps = draw(env, {"a", "b"}, m, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"];
            const Qtp dual{inv(B.t), inv(B.q), B.p};
            const Complex sp = sqrt(B.p);
            const Complex tn1 = pow(B.t, n - 1), qm = pow(B.q, m);
            auto x = random_vars(env.rng, n);
            auto y = random_vars(env.rng, m);
            std::vector<Complex> yd;
            for (const auto& yj : y) yd.push_back(sp / yj);
            Complex lhs(1);
            for (const auto& xi : x)
                for (const auto& yj : y) lhs *= theta_pm(yj, xi, 1, B);
            Complex rhs;
            const Complex norm = c0(rectangle(m, n), {tn1 * a * b, b / a}, B);
            for (const auto& mu : enumerate(m, n)) {
                auto P = interp_theta(mu, m, n, a, b, B, ctx);
                auto Q = interp_theta(complement(conjugate(mu), n, m), n, m, sp / a, sp / b, dual, ctx);
                rhs += delta(mu, tn1 * a / (qm * b), {pow(B.t, n), inv(qm)}, B) / norm * (*P)(x) * (*Q)(yd);
            }
            res.compare(lhs, rhs);
        }
    }
}

void raise_op(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            ParameterSet ps = draw(env, {"u0", "u1", "u2", "u3", "u4"}, 0, n);
            Qtp B = base_of(ps);
            const Complex &u0 = ps["u0"], &u1 = ps["u1"], &u2 = ps["u2"], &u3 = ps["u3"], &u4 = ps["u4"];
            const Complex u5 = raise_u5(u0, u1, u2, u3, u4, B, n);
            const Complex sq = sqrt(B.q), pq = B.p * B.q, tn1 = pow(B.t, n - 1);
            const std::vector<Complex> args{pow(B.t, n), pq / (u0 * u2), pq / (u0 * u3), pq / (u0 * u4), pq / (u0 * u5)};
            for (const auto& lam : partitions_up_to(max_size(env) - 1, n)) {
                RStar R(lam, n, sq * u1, u0 / sq, B, ctx);
                EvaluableFn f{n, [R](std::span<const Complex> x) { return R(x); }};
                EvaluableFn lhs = apply_Dplus(u0, u1, u2, u3, u4, B, n, f);
                auto z = random_vars(env.rng, n);
                Complex rhs;
                for (const auto& mu : strip_above(lam, 1, n)) {
                    Complex c = delta(mu, tn1 * u1 / u0, args, B) / delta(lam, B.q * tn1 * u1 / u0, args, B) *
                                binom_normalized(mu, lam, tn1 * u1 / u0, inv(B.q), {}, B, ctx);
                    rhs += c * RStar(mu, n, u1, u0, B, ctx)(z);
                }
                res.compare(lhs(z), rhs);
            }
        }
    }
}

}  // namespace

void register_interp(std::vector<CheckInfo>& out)
{
    out.push_back({"interp-diffeq", "difference equation of the interpolation theta functions", 1, {}, 2, diffeq});
    out.push_back({"interp-extra-vanish", "vanishing on the extended families of points", 1, {}, 2, extra_vanish});
    out.push_back({"interp-complement", "complementation symmetry a <-> b", 1, {}, 2, complement_symm});
    out.push_back({"interp-cauchy-case", "product form when q^m t^n ab = pq", 1, {}, 2, cauchy_case});
    out.push_back({"interp-principal", "value at the principal partition point", 1, {}, 2, principal});
    out.push_back({"interp-delta-case", "delta property when q^m t^{n-1} ab = 1", 1, {}, 2, delta_case});
    out.push_back({"interp-mshift", "dependence on m and the lambda = 0 product", 1, {}, 2, mshift});
    out.push_back({"rstar-symmetries", "symmetries, special values and difference equation of R*", 1, {}, 1,
                   rstar_identities});
    out.push_back({"interp-connection", "connection coefficients for a changed b or a", 1, {}, 1, connection});
    out.push_back({"interp-6j", "general connection coefficients as a sum", 1, {}, 1, sixj});
    out.push_back({"interp-branching", "bulk branching rule for R*", 1, {}, 1, branching});
    out.push_back({"interp-pieri", "generalized Pieri identity for R*", 1, {}, 1, pieri});
    out.push_back({"interp-cauchy-id", "Cauchy identity for interpolation theta functions", 1, {}, 2,
                   cauchy_identity});
    out.push_back({"raise-op", "raising operator on R*", 1, {}, 1, raise_op});
}

}  // namespace ellbc::checks
