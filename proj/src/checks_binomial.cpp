#include "checks.hpp"

#include "ellbc/binomial.hpp"

#include <array>

namespace ellbc::checks {

namespace {

// Pairs kappa inside lambda, |lambda| <= size, l(lambda) <= len.
std::vector<std::pair<Partition, Partition>> nested_pairs(int size, int len)
{
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& lam : partitions_up_to(size, len))
        for (const auto& kap : interval(Partition{}, lam)) out.emplace_back(lam, kap);
    return out;
}

int bulk_size(const CheckEnv& env) { return env.nightly ? 5 : 4; }

// Sum over kappa <= mu <= lambda, together with the sum of absolute terms.
template <class Term>
std::pair<Complex, Real> skew_sum(const Partition& kap, const Partition& lam, Term term)
{
    Complex s;
    Real mag = 0;
    for (const auto& mu : interval(kap, lam)) {
        Complex v = term(mu);
        mag += abs(v);
        s += v;
    }
    return {s, mag};
}

void bde(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a", "b", "c", "d"});
        Qtp B = base_of(ps);
        const Complex &a = ps["a"], &b = ps["b"], &c = ps["c"], &dd = ps["d"];
        const Complex pq = B.p * B.q;
        const Complex e = a * pq / (b * c * dd);
        for (const auto& [lam, kap] : nested_pairs(bulk_size(env), 3)) {
            auto [s, mag] = skew_sum(kap, lam, [&](const Partition& mu) {
                return delta0(mu, a / b, {c / b, pq * a, dd, e}, B) * binom(lam, mu, a, b, B, ctx) *
                       binom(mu, kap, a / b, c / b, B, ctx);
            });
            Complex rhs = delta0(kap, a / c, {inv(c), b * dd, b * e, pq * a / b}, B) /
                          delta0(lam, a, {c, b * dd, b * e, pq * a / b}, B) * s;
            res.compare(binom(lam, kap, a, c, B, ctx), rhs);
        }
    }
}

void inversion(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a", "b"});
        Qtp B = base_of(ps);
        const Complex &a = ps["a"], &b = ps["b"];
        for (const auto& [lam, kap] : nested_pairs(bulk_size(env), 3)) {
            auto [s, mag] = skew_sum(kap, lam, [&](const Partition& mu) {
                return binom(lam, mu, a, b, B, ctx) * binom(mu, kap, a / b, inv(b), B, ctx);
            });
            if (lam == kap)
                res.compare(s, Complex(1));
            else
                res.vanish(s, mag);
        }
    }
}

// Product formulas at b = 1/q and b = t against the generic evaluation.
void closed_product(CheckEnv& env, Residual& res, ClosedKind kind)
{
    const NumericContext& ctx = env.ctx;
    const int size = env.nightly ? 4 : 3;
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a"});
        Qtp B = base_of(ps);
        const Complex& a = ps["a"];
        const Complex b = kind == ClosedKind::inv_q ? inv(B.q) : B.t;
        for (const auto& lam : partitions_up_to(size, 3)) {
            const auto below = interval(Partition{}, lam);
            std::vector<Complex> got, want;
            Real scale = 0;
            for (const auto& mu : below) {
                got.push_back(binom_normalized(lam, mu, a, b, {}, B, ctx));
                want.push_back(binom_closed(lam, mu, a, kind, B));
                scale = std::max(scale, abs(got.back()));
            }
            for (std::size_t k = 0; k < below.size(); ++k) {
                bool live = strip_relation(below[k], lam, 1, kind == ClosedKind::inv_q);
                if (live) {
                    res.compare(got[k], want[k]);
                } else {
                    res.vanish(got[k], scale);
                    res.vanish(want[k], scale);
                }
            }
        }
    }
}

void q_product(CheckEnv& env, Residual& res) { closed_product(env, res, ClosedKind::inv_q); }
void t_product(CheckEnv& env, Residual& res) { closed_product(env, res, ClosedKind::t); }

void duality(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a", "b"});
        Qtp B = base_of(ps);
        const Qtp dual{inv(B.t), inv(B.q), B.p};
        const Complex &a = ps["a"], &b = ps["b"];
        for (const auto& [lam, mu] : nested_pairs(bulk_size(env), 3))
            res.compare(binom(lam, mu, a, b, B, ctx),
                        binom(conjugate(lam), conjugate(mu), a * B.q * B.t, b, dual, ctx));
    }
}

void complementation(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
            ParameterSet ps = draw(env, {"a", "b"}, m, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"];
            const Complex tn = pow(B.t, n), qm = pow(B.q, m), t1n = pow(B.t, 1 - n);
            const Complex dr = delta(rectangle(m, n), a, {tn, inv(qm), b, qm * t1n * a / b}, B);
            const Complex a2 = pow(B.t, 2 * n - 2) * b / (qm * qm * a);
            for (const auto& lam : enumerate(m, n))
                for (const auto& mu : interval(Partition{}, lam))
                    res.compare(binom(lam, mu, a, b, B, ctx, n) / dr,
                                delta(mu, a / b, {tn, inv(qm), inv(b), qm * t1n * a}, B) /
                                    delta(lam, a, {tn, inv(qm), b, qm * t1n * a / b}, B) *
                                    binom(complement(mu, m, n), complement(lam, m, n), a2, b, B, ctx, n));
        }
    }
}

// Both sides of an identity whose vanishing is known combinatorially.
void compare_or_vanish(Residual& res, bool live, const Complex& lhs, const Complex& rhs, const Real& scale)
{
    if (live) {
        res.compare(lhs, rhs);
    } else {
        res.vanish(lhs, scale);
        res.vanish(rhs, scale);
    }
}

void spec_recur(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    const int k = 1;
    for (int d = 0; d < env.draws; ++d) {
        for (int n = 1; n <= 2; ++n) {
            ParameterSet ps = draw(env, {"a"}, 0, n);
            Qtp B = base_of(ps);
            const Complex& a = ps["a"];
            const Complex qk = pow(B.q, k), tk = pow(B.t, k), tn = pow(B.t, n), pq = B.p * B.q;
            const Partition kn = rectangle(k, n);
            const Complex pre = c0(kn, {inv(qk)}, B) / c0(kn, {pq * a * qk}, B);
            for (const auto& lam : partitions_up_to(2, n)) {
                const Partition top = add_rectangle(lam, k, n);
                std::vector<std::tuple<bool, Complex, Complex>> rows;
                Real scale = 0;
                for (const auto& mu : interval(Partition{}, top)) {
                    Complex lhs = binom_normalized(top, mu, a, inv(qk), {}, B, ctx, n);
                    Complex rhs = pre * delta(mu, qk * a, {tn, pow(B.t, 1 - n) * qk * a}, B) /
                                  delta(lam, qk * qk * a, {tn, pow(B.t, 1 - n) * qk * a}, B) *
                                  binom_normalized(mu, lam, qk * a, inv(qk), {}, B, ctx, n);
                    scale = std::max({scale, abs(lhs), abs(rhs)});
                    rows.emplace_back(strip_relation(mu, top, k, true), lhs, rhs);
                }
                for (const auto& [live, l, r] : rows) compare_or_vanish(res, live, l, r, scale);
            }
            // the dual form, with m^k . lambda
            for (int m = 1; m <= 2; ++m) {
                const Partition mk = rectangle(m, k);
                const Complex pre2 = c0(mk, {tk}, B) / c0(mk, {pq * a / tk}, B);
                const Complex qm = pow(B.q, m);
                for (const auto& lam : enumerate(m, n)) {
                    const Partition top = concat_rectangle(lam, m, k);
                    std::vector<std::tuple<bool, Complex, Complex>> rows;
                    Real scale = 0;
                    for (const auto& mu : interval(Partition{}, top)) {
                        Complex lhs = binom_normalized(top, mu, a, tk, {}, B, ctx);
                        Complex rhs = pre2 * delta(mu, a / tk, {inv(qm), qm * pow(B.t, 1 - k) * a}, B) /
                                      delta(lam, a / (tk * tk), {inv(qm), qm * pow(B.t, 1 - k) * a}, B) *
                                      binom_normalized(mu, lam, a / tk, tk, {}, B, ctx);
                        scale = std::max({scale, abs(lhs), abs(rhs)});
                        rows.emplace_back(strip_relation(mu, top, k, false), lhs, rhs);
                    }
                    for (const auto& [live, l, r] : rows) compare_or_vanish(res, live, l, r, scale);
                }
            }
        }
    }
}

Complex bailey_sum(const Partition& lam, const Partition& kap, const Complex& a, const Complex& b, const Complex& c,
                   const Complex& d, const Complex& e, const Complex& f, const Complex& g, const Qtp& B,
                   const NumericContext& ctx)
{
    const Complex pq = B.p * B.q;
    auto [s, mag] = skew_sum(kap, lam, [&](const Partition& mu) {
        return delta0(mu, a / b, {c / b, f, g}, B) / delta0(mu, a / b, {inv(b), d, e}, B) *
               binom(lam, mu, a, b, B, ctx) * binom(mu, kap, a / b, c / b, B, ctx);
    });
    return delta0(lam, a, {b, a * pq / (b * f)}, B) / delta0(kap, a / c, {b / c, a * pq / (b * d)}, B) * s;
}

void bailey(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a", "b", "b2", "c", "d", "f"});
        Qtp B = base_of(ps);
        const Complex &a = ps["a"], &b = ps["b"], &b2 = ps["b2"], &c = ps["c"], &dd = ps["d"], &f = ps["f"];
        const Complex pq = B.p * B.q;
        const Complex e = c * a * pq / (b * b2 * dd);
        const Complex g = a * pq / (b * b2 * f);
        for (const auto& [lam, kap] : nested_pairs(bulk_size(env), 3))
            res.compare(bailey_sum(lam, kap, a, b, c, dd, e, f, g, B, ctx),
                        bailey_sum(lam, kap, a, b2, c, dd, e, f, g, B, ctx));
    }
}

// c is a square root of b v0 v1 v2 v3 / (apq); the branch is the caller's.
Complex omega(const Partition& lam, const Partition& kap, const Complex& a, const Complex& b,
              const std::array<Complex, 4>& v, const Complex& c, const Qtp& B, const NumericContext& ctx)
{
    const Complex pq = B.p * B.q;
    const std::vector<Complex> outer{pq * a / v[0], pq * a / v[1], pq * a / v[2], pq * a / v[3]};
    const std::vector<Complex> inner{v[0] / c, v[1] / c, v[2] / c, v[3] / c};
    const Complex c0l = c_symbol(CKind::zero, lam, outer, B);
    const Complex c0k = c_symbol(CKind::zero, kap, inner, B);
    auto [s, mag] = skew_sum(kap, lam, [&](const Partition& mu) {
        return c0l / c_symbol(CKind::zero, mu, outer, B) * c_symbol(CKind::zero, mu, inner, B) / c0k *
               binom_normalized(lam, mu, pq * a * a, pq * a * c, {}, B, ctx) *
               binom_normalized(mu, kap, a / c, b / c, {}, B, ctx);
    });
    return s;
}

void d4(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a", "b", "v0", "v1", "v2", "v3"});
        Qtp B = base_of(ps);
        const Complex &a = ps["a"], &b = ps["b"];
        std::array<Complex, 4> v{ps["v0"], ps["v1"], ps["v2"], ps["v3"]};
        std::array<Complex, 4> w{v[0], v[1], inv(v[2]), inv(v[3])};
        // the branch of c must follow the inversion continuously
        const Complex c = sqrt(b * v[0] * v[1] * v[2] * v[3] / (a * B.p * B.q));
        const Complex cw = c / (v[2] * v[3]);
        for (const auto& [lam, kap] : nested_pairs(bulk_size(env) - 1, 3))
            res.compare(omega(lam, kap, a, b, v, c, B, ctx), omega(lam, kap, a, b, w, cw, B, ctx));
    }
}

Complex central_expr(const Partition& lam, const Partition& kap, const Complex& a, const Complex& b, const Complex& c,
                     const Complex& d, const Complex& b2, const Complex& c2, const Complex& d2, const Qtp& B,
                     const NumericContext& ctx)
{
    const Complex pq = B.p * B.q;
    auto [s, mag] = skew_sum(kap, lam, [&](const Partition& mu) {
        return binom(lam, mu, a, b, B, ctx) * binom(mu, kap, a / b, b2, B, ctx) /
               delta0(mu, a / b, {pq * a / (b * b2), pq * a / c2, pq * a / d2, inv(b), c, d}, B);
    });
    return delta0(lam, a, {b, c, d}, B) / delta0(kap, a / (b * b2), {pq * a / b2, pq * a / (b * c), pq * a / (b * d)}, B) *
           s;
}

void central_d4(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a", "b", "c", "d", "b2", "c2"});
        Qtp B = base_of(ps);
        const Complex &a = ps["a"], &b = ps["b"], &c = ps["c"], &dd = ps["d"], &b2 = ps["b2"], &c2 = ps["c2"];
        const Complex d2 = b * c * dd / (b2 * c2);
        for (const auto& [lam, kap] : nested_pairs(bulk_size(env) - 1, 3))
            res.compare(central_expr(lam, kap, a, b, c, dd, b2, c2, d2, B, ctx),
                        central_expr(lam, kap, a, b2, c2, d2, b, c, dd, B, ctx));
    }
}

// theta(x;q;p)_k
Complex qp(const Complex& x, int k, const Qtp& B) { return theta_poch(x, B.q, B.p, k); }

void ft(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (int N = 0; N <= (env.nightly ? 5 : 3); ++N) {
            // classical one-variable sum
            ParameterSet ps = draw(env, {"a", "b", "c", "d"});
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"], &c = ps["c"], &dd = ps["d"], &q = B.q, &p = B.p;
            const Complex qN = pow(q, N);
            const Complex e = a * a * qN * q / (b * c * dd);
            Complex s;
            for (int k = 0; k <= N; ++k) {
                Complex term = theta(a * pow(q, 2 * k), p) / theta(a, p) * pow(q, k);
                for (const Complex& x : {a, b, c, dd, e, inv(qN)}) term *= qp(x, k, B);
                for (const Complex& x : {q, a * q / b, a * q / c, a * q / dd, a * q / e, a * qN * q}) term /= qp(x, k, B);
                s += term;
            }
            Complex rhs = qp(a * q, N, B) * qp(a * q / (b * c), N, B) * qp(a * q / (b * dd), N, B) *
                          qp(a * q / (c * dd), N, B) /
                          (qp(a * q / b, N, B) * qp(a * q / c, N, B) * qp(a * q / dd, N, B) *
                           qp(a * q / (b * c * dd), N, B));
            res.compare(s, rhs);

            // the single-row case of the bulk identity
            ParameterSet ps2 = draw(env, {"a", "b", "c", "d"});
            Qtp B2 = base_of(ps2);
            const Complex &A = ps2["a"], &Bb = ps2["b"], &C = ps2["c"], &D = ps2["d"];
            const Complex pq = B2.p * B2.q;
            const Complex E = A * pq / (Bb * C * D);
            const Partition lam{N};
            auto [sum, mag] = skew_sum(Partition{}, lam, [&](const Partition& mu) {
                return delta0(mu, A / Bb, {C / Bb, pq * A, D, E}, B2) * binom(lam, mu, A, Bb, B2, ctx, 1) *
                       binom(mu, Partition{}, A / Bb, C / Bb, B2, ctx, 1);
            });
            res.compare(binom(lam, Partition{}, A, C, B2, ctx, 1),
                        delta0(Partition{}, A / C, {}, B2) / delta0(lam, A, {C, Bb * D, Bb * E, pq * A / Bb}, B2) *
                            sum);
        }
    }
}

void warnaar(CheckEnv& env, Residual& res)
{
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2}}) {
            ParameterSet ps = draw(env, {"a", "b0", "b1", "b2"}, m, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b0 = ps["b0"], &b1 = ps["b1"], &b2 = ps["b2"];
            const Complex pq = B.p * B.q, qm = pow(B.q, m), tn = pow(B.t, n);
            const Complex b3 = a * a * pq * B.t * qm / (tn * b0 * b1 * b2);
            Complex s;
            for (const auto& mu : enumerate(m, n)) s += delta(mu, a, {tn, inv(qm), b0, b1, b2, b3}, B);
            const Partition R = rectangle(m, n);
            res.compare(s, c0(R, {pq * a, pq * a / (b0 * b1), pq * a / (b0 * b2), pq * a / (b1 * b2)}, B) /
                               c0(R, {pq * a / b0, pq * a / b1, pq * a / b2, pq * a / (b0 * b1 * b2)}, B));
        }
    }
}

void special_values(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a", "b"});
        Qtp B = base_of(ps);
        const Complex &a = ps["a"], &b = ps["b"];
        for (const auto& lam : partitions_up_to(bulk_size(env), 3)) {
            res.compare(binom(lam, Partition{}, a, b, B, ctx), Complex(1));
            res.compare(binom(lam, lam, a, b, B, ctx),
                        cplus(lam, {a}, B) * delta0(lam, a / b, {inv(b)}, B) /
                            (cplus(lam, {a / b}, B) * delta0(lam, a, {b}, B)));
            for (const auto& mu : interval(Partition{}, lam)) {
                Complex v = binom_normalized(lam, mu, a, Complex(1), {}, B, ctx);
                if (lam == mu)
                    res.compare(v, Complex(1));
                else
                    res.vanish(v, Real(1));
            }
        }
        for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}, std::pair{1, 3}}) {
            for (const auto& lam : enumerate(m, n))
                res.compare(binom(rectangle(m, n), lam, a, b, B, ctx, n),
                            delta(lam, a / b, {pow(B.t, n), pow(B.q, -m), pow(B.t, 1 - n) * pow(B.q, m) * a, inv(b)}, B));
        }
    }
}

void transforms(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        ParameterSet ps = draw(env, {"a", "b"});
        Qtp B = base_of(ps);
        const Qtp inv_base{inv(B.q), inv(B.t), B.p};
        const Complex &a = ps["a"], &b = ps["b"];
        for (const auto& [lam, mu] : nested_pairs(bulk_size(env), 3)) {
            Complex v = binom(lam, mu, a, b, B, ctx);
            res.compare(binom(lam, mu, B.p * a, b, B, ctx), v);
            res.compare(binom(lam, mu, a, B.p * b, B, ctx), v);
            res.compare(binom(lam, mu, inv(a), inv(b), inv_base, ctx), v);
            res.compare(binom(lam, mu, a, b, B, ctx, 4), v);
        }
    }
}

void rect_shift(CheckEnv& env, Residual& res)
{
    const NumericContext& ctx = env.ctx;
    for (int d = 0; d < env.draws; ++d) {
        for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
            ParameterSet ps = draw(env, {"a", "b"}, m, n);
            Qtp B = base_of(ps);
            const Complex &a = ps["a"], &b = ps["b"];
            const Complex qm = pow(B.q, m), pq = B.p * B.q, tn1 = pow(B.t, n - 1);
            const Partition R = rectangle(m, n);
            const Complex rr = binom(R, R, a, b, B, ctx);
            const Complex A = qm * qm * a;
            for (const auto& [lam, mu] : nested_pairs(2, n)) {
                Complex lhs = binom(add_rectangle(lam, m, n), add_rectangle(mu, m, n), a, b, B, ctx) / rr;
                Complex rhs = delta0(lam, A, {b, pq * a * qm / b, pq * tn1 * qm, A / tn1}, B) /
                              delta0(mu, A / b, {inv(b), pq * a * qm, pq * tn1 * qm, A / (tn1 * b)}, B) *
                              binom(lam, mu, A, b, B, ctx);
                res.compare(lhs, rhs);
            }
            // concatenation below the rectangle
            const Complex t2n = pow(B.t, 2 * n), tn = pow(B.t, n);
            for (const auto& [lam, mu] : nested_pairs(2, 2)) {
                if (lam[1] > m) continue;
                Complex lhs = binom(concat_rectangle(lam, m, n), concat_rectangle(mu, m, n), a, b, B, ctx) / rr;
                Complex rhs = delta0(lam, a / t2n, {b, pq * a / (tn * b), pq / (qm * tn * B.t), qm * a * B.t / t2n}, B) /
                              delta0(mu, a / (t2n * b), {inv(b), pq * a / tn, pq / (qm * tn * B.t), qm * a * B.t / (t2n * b)},
                                     B) *
                              binom(lam, mu, a / t2n, b, B, ctx);
                res.compare(lhs, rhs);
            }
        }
    }
}

}  // namespace

void register_binomial(std::vector<CheckInfo>& out)
{
    out.push_back({"binom-bde", "bulk difference equation", 1, {}, 2, bde});
    out.push_back({"binom-inversion", "inversion of the binomial matrix", 1, {}, 2, inversion});
    out.push_back({"binom-q-product", "product form at b = 1/q", 1, {}, 2, q_product});
    out.push_back({"binom-t-product", "product form at b = t", 1, {}, 2, t_product});
    out.push_back({"binom-duality", "duality under conjugation and (q,t) -> (1/t,1/q)", 1, {}, 2, duality});
    out.push_back({"binom-complementation", "complementation inside a rectangle", 1, {}, 2, complementation});
    out.push_back({"binom-spec-recur", "recurrences at b = q^-k and b = t^k", 1, {}, 1, spec_recur});
    out.push_back({"binom-bailey", "Bailey transformation symmetry b <-> b'", 1, {}, 1, bailey});
    out.push_back({"binom-d4", "D4 symmetry of the Omega sum", 1, {}, 1, d4});
    out.push_back({"binom-central-d4", "central D4 transformation", 1, {}, 1, central_d4});
    out.push_back({"ft-summation", "one-variable elliptic Jackson sum by two routes", 1, {}, 2, ft});
    out.push_back({"warnaar-rect", "rectangular elliptic Jackson sum over m^n", 1, {}, 3, warnaar});
    out.push_back({"binom-special-values", "values at mu = 0, mu = lambda, b = 1 and lambda = m^n", 1, {}, 2,
                   special_values});
    out.push_back({"binom-transforms", "invariance under a -> pa, b -> pb, inversion and n", 1, {}, 2, transforms});
    out.push_back({"binom-rect-shift", "rectangle shift and concatenation", 1, {}, 2, rect_shift});
}

}  // namespace ellbc::checks
