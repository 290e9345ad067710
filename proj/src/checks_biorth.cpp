#include "checks.hpp"

#include "ellbc/binomial.hpp"
#include "ellbc/biorthogonal.hpp"
#include "ellbc/diffops.hpp"
#include "ellbc/interpolation.hpp"
#include "ellbc/linalg.hpp"

namespace ellbc::checks {

namespace {

int max_size(const CheckEnv& env) { return env.nightly ? 3 : 2; }

BiorthParams draw_params(CheckEnv& env, int n)
{
    ParameterSet ps = draw(env, {"t0", "t1", "t2", "t3", "u0"}, 0, n);
    return BiorthParams::balanced(ps["t0"], ps["t1"], ps["t2"], ps["t3"], ps["u0"], n, base_of(ps));
}

// t^{n-1} t0 {t1, t2, t3, u1}
std::vector<Complex> shifted_args(const BiorthParams& bp)
{
    Complex s = pow(bp.base.t, bp.n - 1) * bp.t0;
    return {s * bp.t1, s * bp.t2, s * bp.t3, s * bp.u1};
}

Fn as_fn(const RTilde& r)
{
    return [r](std::span<const Complex> x) { return r(x); };
}

void symmetry(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            BiorthParams bp = draw_params(env, n);
            const Qtp& B = bp.base;
            const Complex tn1 = pow(B.t, n - 1), pq = B.p * B.q;
            BiorthParams swapped = bp;
            std::swap(swapped.t0, swapped.t1);
            for (const auto& lam : partitions_up_to(max_size(env) + 1, n)) {
                RTilde R(lam, bp, ctx);
                Complex at_t1 = R(principal_point(bp.t1, n, B.t));
                Complex expect = delta0(lam, inv(bp.u0 * bp.u1),
                                        {tn1 * bp.t1 * bp.t2, tn1 * bp.t1 * bp.t3, inv(tn1 * bp.t1 * bp.u1),
                                         pq * tn1 * bp.t0 / bp.u0},
                                        B);
                res.compare(at_t1, expect);
                auto x = random_vars(env.rng, n);
                res.compare(RTilde(lam, swapped, ctx)(x), R(x) / expect);
            }

            // u1 = 1/(t^{n-1} t1) reduces to an interpolation function
            BiorthParams sp = bp;
            sp.u1 = inv(tn1 * bp.t1);
            sp.t3 = pq / (pow(B.t, 2 * n - 2) * sp.t0 * sp.t1 * sp.t2 * sp.u0 * sp.u1);
            for (const auto& lam : partitions_up_to(max_size(env) + 1, n)) {
                auto x = random_vars(env.rng, n);
                res.compare(RTilde(lam, sp, ctx)(x),
                            RStar(lam, n, sp.t1, sp.u0, B, ctx)(x) /
                                delta0(lam, tn1 * sp.t1 / sp.u0, {tn1 * sp.t0 * sp.t1, sp.t1 / sp.t0}, B));
            }
        }
    }
}

void diffeq(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            BiorthParams bp = draw_params(env, n);
            const Qtp& B = bp.base;
            const Complex sq = sqrt(B.q);
            BiorthParams sh{sq * bp.t0, sq * bp.t1, bp.t2 / sq, bp.t3 / sq, sq * bp.u0, bp.u1 / sq, n, B};
            const Complex dd = pow(B.t, 1 - n) * B.p / (bp.u0 * bp.t0 * bp.t1);
            for (const auto& lam : partitions_up_to(max_size(env) + 1, n)) {
                RTilde Rs(lam, sh, ctx);
                EvaluableFn f{n, as_fn(Rs)};
                Complex factor(1);
                for (int i = 1; i <= n; ++i) {
                    Complex ti = pow(B.t, n - i);
                    factor *= theta_prod({ti * bp.u0 * bp.t0, ti * bp.u0 * bp.t1, ti * bp.t0 * bp.t1}, B.p);
                }
                auto x = random_vars(env.rng, n);
                res.compare(apply_D(bp.u0, bp.t0, bp.t1, dd, B, n, f)(x), factor * RTilde(lam, bp, ctx)(x));
            }
        }
    }
}

void eval_symm(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            BiorthParams bp = draw_params(env, n);
            BiorthParams hat = hat_params(bp);
            const auto parts = partitions_up_to(max_size(env) + 1, n);
            for (const auto& lam : parts)
                for (const auto& kap : parts)
                    res.compare(rtilde_at_partition(lam, kap, bp, ctx), rtilde_at_partition(kap, lam, hat, ctx));
        }
    }
}

void match(Residual& res, const std::vector<Complex>& got, const std::vector<Complex>& want)
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

// R*_lambda(;t0,u0) expanded in R~_mu, solving at the partition nodes mu inside lambda.
void inverse_binom(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            BiorthParams bp = draw_params(env, n);
            const Qtp& B = bp.base;
            const Complex tn1 = pow(B.t, n - 1), pq = B.p * B.q;
            for (const auto& lam : partitions_up_to(max_size(env) + 1, n)) {
                const auto below = interval(Partition{}, lam);
                const std::size_t N = below.size();
                std::vector<RTilde> basis;
                for (const auto& mu : below) basis.emplace_back(mu, bp, ctx);
                RStar R(lam, n, bp.t0, bp.u0, B, ctx);
                CMatrix A(N, N);
                std::vector<Complex> rhs(N);
                for (std::size_t r = 0; r < N; ++r) {
                    auto x = partition_point(below[r], n, bp.t0, B);
                    for (std::size_t c = 0; c < N; ++c) A(r, c) = basis[c](x);
                    rhs[r] = R(x);
                }
                auto got = lu_solve(std::move(A), std::move(rhs), false).x;
                const Complex den = delta0(lam, tn1 * bp.t0 / bp.u0,
                                           {pq / (bp.u0 * bp.t1), pq / (bp.u0 * bp.t2), pq / (bp.u0 * bp.t3),
                                            pq / (bp.u0 * bp.u1)},
                                           B);
                std::vector<Complex> want;
                for (const auto& mu : below)
                    want.push_back(binom(lam, mu, tn1 * bp.t0 / bp.u0, tn1 * bp.t0 * bp.u1, B, ctx) / den);
                match(res, got, want);
            }
        }
    }
}

void connection(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            BiorthParams bp = draw_params(env, n);
            const Qtp& B = bp.base;
            const Complex tn1 = pow(B.t, n - 1), pq = B.p * B.q;
            BiorthParams pr = bp;
            pr.t1 = env.rng.point();
            pr.t2 = env.rng.point();
            pr.t3 = env.rng.point();
            pr.u1 = bp.t1 * bp.t2 * bp.t3 * bp.u1 / (pr.t1 * pr.t2 * pr.t3);
            env.record("t1'", pr.t1);
            env.record("t2'", pr.t2);
            env.record("t3'", pr.t3);
            const Complex v = env.rng.point();
            env.record("v", v);
            BiorthParams pv = bp;
            pv.t1 = bp.t1 * v;
            pv.u1 = bp.u1 / v;
            const Complex a0 = tn1 * bp.t0 / bp.u0;
            for (const auto& lam : partitions_up_to(max_size(env) + 1, n)) {
                const auto below = interval(Partition{}, lam);
                std::vector<Fn> basis, basis_v;
                for (const auto& kap : below) {
                    basis.push_back(as_fn(RTilde(kap, pr, ctx)));
                    basis_v.push_back(as_fn(RTilde(kap, pv, ctx)));
                }
                Fn target = as_fn(RTilde(lam, bp, ctx));
                std::vector<Complex> want, want_v;
                for (const auto& kap : below) {
                    Complex s;
                    for (const auto& mu : interval(kap, lam))
                        s += delta0(mu, a0, shifted_args(pr), B) / delta0(mu, a0, shifted_args(bp), B) *
                             binom(lam, mu, inv(bp.u0 * bp.u1), inv(tn1 * bp.t0 * bp.u1), B, ctx) *
                             binom(mu, kap, a0, tn1 * bp.t0 * pr.u1, B, ctx);
                    want.push_back(s);
                    want_v.push_back(binom_normalized(lam, kap, inv(bp.u0 * bp.u1), inv(v),
                                                      {tn1 * bp.t2 * bp.t3, pq * tn1 * bp.t0 / bp.u0, bp.t1 * v / bp.u1},
                                                      B, ctx));
                }
                match(res, expand(target, basis, n, env.rng), want);
                match(res, expand(target, basis_v, n, env.rng), want_v);
            }
        }
    }
}

void discrete(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
            ParameterSet ps = draw(env, {"t0", "t2", "t3", "u0"}, m, n);
            Qtp B = base_of(ps);
            const Complex qm = pow(B.q, m), tn1 = pow(B.t, n - 1), tn = pow(B.t, n), pq = B.p * B.q;
            const Complex &t0 = ps["t0"], &t2 = ps["t2"], &t3 = ps["t3"], &u0 = ps["u0"];
            const Complex t1 = inv(qm * tn1 * t0);
            const Complex u1 = pq * qm / (tn1 * t2 * t3 * u0);
            BiorthParams bp{t0, t1, t2, t3, u0, u1, n, B};
            BiorthParams bq{t0, t1, t2, t3, u1, u0, n, B};
            const auto box = enumerate(m, n);
            std::vector<RTilde> left, right;
            for (const auto& lam : box) {
                left.emplace_back(lam, bp, ctx);
                right.emplace_back(lam, bq, ctx);
            }
            const Complex s = tn1 * t0;
            std::vector<Complex> weight;
            std::vector<std::vector<Complex>> nodes;
            for (const auto& mu : box) {
                weight.push_back(delta(mu, tn1 * tn1 * t0 * t0, {tn, s * t1, s * t2, s * t3, s * u0, s * u1}, B));
                nodes.push_back(partition_point(mu, n, t0, B));
            }
            const Complex norm =
                delta0(rectangle(m, n), tn1 * t1 / u0, {t1 / t0, pq / (u0 * t2), pq / (u0 * t3), pq / (u0 * u1)}, B);
            for (std::size_t i = 0; i < box.size(); ++i) {
                for (std::size_t j = 0; j < box.size(); ++j) {
                    Complex sum;
                    Real mag = 0;
                    for (std::size_t k = 0; k < box.size(); ++k) {
                        Complex term = left[i](nodes[k]) * right[j](nodes[k]) * weight[k];
                        sum += term;
                        mag += abs(term);
                    }
                    if (i == j)
                        res.compare(sum, norm / delta(box[i], inv(u0 * u1),
                                                      {tn, s * t1, s * t2, s * t3, inv(s * u0), inv(s * u1)}, B));
                    else
                        res.vanish(sum, mag);
                }
            }
        }
    }
}

void quasi_branch(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            BiorthParams big = draw_params(env, n + 1);
            const Qtp& B = big.base;
            const Complex& t = B.t;
            BiorthParams small{big.t0 * t, big.t1, big.t2, big.t3, big.u0, big.u1 * t, n, B};
            const Complex pq = B.p * B.q, tn = pow(t, n);
            const Complex bb = inv(big.u0 * big.u1);
            for (const auto& lam : partitions_up_to(max_size(env) + 1, n + 1)) {
                auto z = random_vars(env.rng, n);
                auto zt = z;
                zt.push_back(big.t0);
                Complex rhs;
                for (const auto& kap : interval(Partition{}, lam)) {
                    if (kap.length() > n) continue;
                    rhs += binom_normalized(lam, kap, bb, t,
                                            {pq / (tn * t * big.u0 * big.u1), inv(big.t0 * big.u1), pq * tn * big.t0 / big.u0},
                                            B, ctx) *
                           RTilde(kap, small, ctx)(z);
                }
                res.compare(RTilde(lam, big, ctx)(zt), rhs);
            }
        }
    }
}

std::vector<Partition> strip_above(const Partition& lam, int m, int n)
{
    std::vector<int> up = lam.padded(n);
    for (auto& u : up) u += m;
    return interval(lam, Partition(up));
}

void quasi_pieri(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    const int m = 1;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            BiorthParams bp = draw_params(env, n);
            const Qtp& B = bp.base;
            const Complex qm = pow(B.q, m), tn1 = pow(B.t, n - 1), pq = B.p * B.q;
            BiorthParams sh = bp;
            sh.t0 = qm * bp.t0;
            sh.u0 = bp.u0 / qm;
            const Complex pre = delta0(rectangle(m, n), tn1 * bp.t0 / bp.u0, shifted_args(bp), B);
            for (const auto& lam : partitions_up_to(max_size(env), n)) {
                auto z = random_vars(env.rng, n);
                Complex lhs = RTilde(lam, sh, ctx)(z);
                for (const auto& zi : z) lhs *= theta_pm(bp.t0, zi, m, B) / theta_pm(pq / bp.u0, zi, m, B);
                Complex rhs;
                for (const auto& kap : strip_above(lam, m, n))
                    rhs += pre *
                           binom_normalized(kap, lam, inv(bp.u0 * bp.u1), inv(qm),
                                            {pow(B.t, n), inv(tn1 * bp.t0 * bp.u1), qm * bp.t0 / bp.u0}, B, ctx) *
                           RTilde(kap, bp, ctx)(z);
                res.compare(lhs, rhs);
            }
        }
    }
}

void cauchy(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    std::vector<std::pair<int, int>> shapes{{1, 1}, {1, 2}, {2, 1}};
    if (env.nightly) shapes.emplace_back(2, 2);
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : shapes) {
            BiorthParams bp = draw_params(env, n);
            const Qtp& B = bp.base;
            const Qtp swapped{B.t, B.q, B.p};
            const Complex qm = pow(B.q, m), tn1 = pow(B.t, n - 1), tn = pow(B.t, n), pq = B.p * B.q;
            BiorthParams dual{bp.t0, bp.t1, bp.t2, bp.t3, tn * bp.u0 / qm, tn1 * bp.u1 / pow(B.q, m - 1), m, swapped};
            auto x = random_vars(env.rng, n);
            auto y = random_vars(env.rng, m);
            Complex F(1);
            for (const auto& xi : x) {
                for (const auto& yj : y) F *= theta_pm(yj, xi, 1, B);
                F /= theta_pm(bp.u0 / qm, xi, m, B);
            }
            for (const auto& yj : y)
                F /= theta_poch(B.p * qm / (bp.u0 * yj), inv(B.t), B.p, n) * theta_poch(qm * yj / bp.u0, inv(B.t), B.p, n);
            Complex lhs;
            for (const auto& mu : enumerate(m, n)) {
                Complex c = delta(mu, inv(bp.u0 * bp.u1), {tn, inv(qm), inv(tn1 * bp.t0 * bp.u1), qm * bp.t0 / bp.u0}, B);
                lhs += c * RTilde(mu, bp, ctx)(x) * RTilde(complement(conjugate(mu), n, m), dual, ctx)(y);
            }
            const Partition R = rectangle(m, n);
            Complex rhs = c0(R, {pq / (bp.u0 * bp.t0), qm * bp.t0 / bp.u0}, B) * F /
                          delta0(R, tn1 * bp.t0 / bp.u0, shifted_args(bp), B);
            res.compare(lhs, rhs);
        }
    }
}

}  // namespace

void register_biorth(std::vector<CheckInfo>& out)
{
    out.push_back({"biorth-symmetry", "t0 <-> t1 symmetry and the value at t1 t^{n-i}", 1, {}, 1, symmetry});
    out.push_back({"biorth-diffeq", "difference equation of the biorthogonal functions", 1, {}, 1, diffeq});
    out.push_back({"biorth-eval-symm", "evaluation symmetry with hatted parameters", 1, {}, 1, eval_symm});
    out.push_back({"biorth-inverse-binom", "interpolation functions expanded in biorthogonal ones", 1, {}, 1,
                   inverse_binom});
    out.push_back({"biorth-connection", "connection coefficients for changed t1, t2, t3, u1", 1, {}, 1, connection});
    out.push_back({"biorth-discrete", "discrete biorthogonality on m^n", 1e2, {}, 1, discrete});
    out.push_back({"biorth-quasi-branch", "quasi-branching rule", 1, {}, 1, quasi_branch});
    out.push_back({"biorth-quasi-pieri", "quasi-Pieri identity", 1, {}, 1, quasi_pieri});
    out.push_back({"biorth-cauchy", "Cauchy identity for biorthogonal functions", 1, {}, 1, cauchy});
}

}  // namespace ellbc::checks
