#include "ellbc/harness.hpp"

#include "checks.hpp"

#include "ellbc/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

namespace ellbc {

void Residual::update(const Real& r)
{
    ++count_;
    if (boost::multiprecision::isnan(r)) {
        worst_ = Real(1);
        return;
    }
    if (r > worst_) worst_ = r;
}

void Residual::compare(const Complex& lhs, const Complex& rhs)
{
    update(abs(lhs - rhs) / (abs(lhs) + abs(rhs) + eps_));
}

void Residual::vanish(const Complex& value, const Real& scale) { update(abs(value) / (abs(scale) + eps_)); }

void Residual::require(bool ok) { update(ok ? Real(0) : Real(1)); }

CheckEnv::CheckEnv(const NumericContext& c, const CheckOverrides& ov, int d, std::uint64_t stream)
    : ctx(c), nightly(ov.nightly), draws(d), rng(c.seed ^ stream), hash_(fnv1a("params"))
{
}

ParameterSet CheckEnv::sample(const SampleSpec& spec)
{
    ParameterSet ps = sample_generic(spec, ctx, rng);
    record("p", ps.p);
    record("q", ps.q);
    record("t", ps.t);
    for (const auto& [name, v] : ps.named()) record(name, v);
    return ps;
}

void CheckEnv::record(std::string_view label, const Complex& z)
{
    hash_ = fnv1a(label, hash_);
    hash_ = fnv1a(to_string(z, 20), hash_);
}

std::string CheckEnv::digest() const
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
}

namespace checks {

ParameterSet draw(CheckEnv& env, std::vector<std::string> names, int m, int n, std::vector<Monomial> regular)
{
    SampleSpec spec;
    spec.names = std::move(names);
    spec.m = m;
    spec.n = n;
    spec.regular = std::move(regular);
    return env.sample(spec);
}

std::vector<Complex> random_vars(Rng& rng, int n)
{
    std::vector<Complex> x;
    for (int i = 0; i < n; ++i) x.push_back(rng.point());
    return x;
}

Complex theta_pm(const Complex& x, const Complex& z, int m, const Qtp& b)
{
    return theta_poch(x * z, b.q, b.p, m) * theta_poch(x / z, b.q, b.p, m);
}

std::vector<Complex> expand(const Fn& target, const std::vector<Fn>& basis, int n, Rng& rng)
{
    const std::size_t N = basis.size();
    CMatrix A(N, N);
    std::vector<Complex> rhs(N);
    for (std::size_t r = 0; r < N; ++r) {
        auto x = random_vars(rng, n);
        for (std::size_t c = 0; c < N; ++c) A(r, c) = basis[c](x);
        rhs[r] = target(x);
    }
    return lu_solve(std::move(A), std::move(rhs), false).x;
}

}  // namespace checks

const std::vector<CheckInfo>& registry()
{
    static const std::vector<CheckInfo> rows = [] {
        std::vector<CheckInfo> r;
        checks::register_core(r);
        checks::register_interp(r);
        checks::register_binomial(r);
        checks::register_biorth(r);
        checks::register_bigrid(r);
        return r;
    }();
    return rows;
}

const CheckInfo* find_check(std::string_view id)
{
    for (const auto& c : registry())
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

ResidualReport run_unguarded(const CheckInfo& info, const NumericContext& ctx, const CheckOverrides& ov)
{
    ResidualReport rep;
    rep.check_id = info.id;
    rep.seed = ctx.seed;
    rep.digits = ctx.digits;
    rep.tol = info.fixed_tol ? *info.fixed_tol : ctx.tol * info.tol_scale;
    CheckEnv env(ctx, ov, ov.draws.value_or(info.default_draws), fnv1a(info.id));
    Residual res(ctx);
    auto start = std::chrono::steady_clock::now();
    try {
        info.run(env, res);
        rep.max_rel_residual = res.worst();
        rep.pass = res.count() > 0 && res.worst() <= rep.tol;
        if (res.count() == 0) rep.error = "no comparisons made";
    } catch (const GenericityError& e) {
        rep.max_rel_residual = Real(1);
        rep.error = std::string("genericity: ") + e.what();
    } catch (const std::exception& e) {
        rep.max_rel_residual = Real(1);
        rep.error = e.what();
    }
    rep.runtime_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    rep.params_digest = env.digest();
    return rep;
}

}  // namespace

ResidualReport run_check(std::string_view id, const NumericContext& ctx, const CheckOverrides& ov)
{
    ctx.validate();
    const CheckInfo* info = find_check(id);
    if (!info) throw std::invalid_argument("unknown check id: " + std::string(id));
    PrecisionGuard guard(ctx);
    return run_unguarded(*info, ctx, ov);
}

bool glob_match(std::string_view pat, std::string_view s)
{
    if (pat.empty()) return true;
    std::size_t pi = 0, si = 0, star = std::string_view::npos, mark = 0;
    while (si < s.size()) {
        if (pi < pat.size() && (pat[pi] == '?' || pat[pi] == s[si])) {
            ++pi;
            ++si;
        } else if (pi < pat.size() && pat[pi] == '*') {
            star = pi++;
            mark = si;
        } else if (star != std::string_view::npos) {
            pi = star + 1;
            si = ++mark;
        } else {
            return false;
        }
    }
    while (pi < pat.size() && pat[pi] == '*') ++pi;
    return pi == pat.size();
}

std::vector<ResidualReport> run_suite(std::string_view filter, const NumericContext& ctx, const CheckOverrides& ov,
                                      int jobs)
{
    ctx.validate();
    std::vector<const CheckInfo*> todo;
    for (const auto& c : registry())
        if (glob_match(filter, c.id)) todo.push_back(&c);
    std::vector<ResidualReport> out(todo.size());

    // The MPFR default precision is a process-wide static in this Boost, so it
    // is set once here and the workers only read it.
    PrecisionGuard guard(ctx);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < todo.size();) out[i] = run_unguarded(*todo[i], ctx, ov);
    };
    int nthreads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(todo.size(), 1)));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

namespace {

nlohmann::ordered_json to_json(const ResidualReport& r, bool with_timing)
{
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["params_digest"] = r.params_digest;
    j["max_rel_residual"] = to_string(r.max_rel_residual, 4);
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["seed"] = r.seed;
    j["digits"] = r.digits;
    if (!r.error.empty()) j["error"] = r.error;
    if (with_timing) j["runtime_ms"] = r.runtime_ms;
    return j;
}

}  // namespace

std::string report_json(const ResidualReport& r, bool with_timing) { return to_json(r, with_timing).dump(2); }

std::string reports_json(const std::vector<ResidualReport>& reports, bool with_timing)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, with_timing));
    return arr.dump(2);
}

}  // namespace ellbc
