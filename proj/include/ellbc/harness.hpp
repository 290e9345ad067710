#pragma once

#include "ellbc/numeric.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ellbc {

struct ResidualReport {
    std::string check_id;
    std::string params_digest;
    Real max_rel_residual;
    double tol = 0;
    bool pass = false;
    long runtime_ms = 0;
    std::uint64_t seed = 0;
    int digits = 0;
    std::string error;  // set when the check could not run
};

// Per-run knobs on top of the numeric context.
struct CheckOverrides {
    bool nightly = false;
    std::optional<int> draws;  // replaces the row's default sample count
};

class CheckEnv;
class Residual;

struct CheckInfo {
    std::string id;
    std::string summary;
    double tol_scale = 1;                // tolerance = ctx.tol * tol_scale
    std::optional<double> fixed_tol;     // used instead when set
    int default_draws = 1;
    std::function<void(CheckEnv&, Residual&)> run;
};

const std::vector<CheckInfo>& registry();
const CheckInfo* find_check(std::string_view id);

// Unknown ids throw std::invalid_argument.
ResidualReport run_check(std::string_view id, const NumericContext& ctx, const CheckOverrides& ov = {});

// Shell-style pattern with * and ?; an empty filter matches everything.
bool glob_match(std::string_view pattern, std::string_view text);
std::vector<ResidualReport> run_suite(std::string_view filter, const NumericContext& ctx,
                                      const CheckOverrides& ov = {}, int jobs = 1);

// Deterministic JSON; runtimes are included only on request since they vary
// from run to run.
std::string reports_json(const std::vector<ResidualReport>& reports, bool with_timing = false);
std::string report_json(const ResidualReport& report, bool with_timing = false);

// ---------------------------------------------------------------------------
// Helpers handed to each check.

class Residual {
public:
    explicit Residual(const NumericContext& ctx) : eps_(ctx.eps()) {}

    // |lhs - rhs| / (|lhs| + |rhs| + eps)
    void compare(const Complex& lhs, const Complex& rhs);
    // |value| / (scale + eps), for quantities that must vanish
    void vanish(const Complex& value, const Real& scale);
    // Boolean outcome: 0 when ok, 1 otherwise.
    void require(bool ok);

    const Real& worst() const noexcept { return worst_; }
    long count() const noexcept { return count_; }

private:
    void update(const Real& r);
    Real eps_;
    Real worst_ = 0;
    long count_ = 0;
};

class CheckEnv {
public:
    CheckEnv(const NumericContext& ctx, const CheckOverrides& ov, int draws, std::uint64_t stream);

    const NumericContext& ctx;
    bool nightly;
    int draws;
    Rng rng;

    // Samples a parameter set and folds it into the digest.
    ParameterSet sample(const SampleSpec& spec);
    void record(std::string_view label, const Complex& z);
    std::string digest() const;

private:
    std::uint64_t hash_;
};

}  // namespace ellbc
