// Command-line front end: point evaluations, identity checks and the bigrid checker.
#include "ellbc/bigrid.hpp"
#include "ellbc/binomial.hpp"
#include "ellbc/biorthogonal.hpp"
#include "ellbc/harness.hpp"
#include "ellbc/interpolation.hpp"
#include "ellbc/symbols.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ellbc;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complex numbers in JSON: a number, a decimal string, [re, im] or {"re":..,"im":..}.
std::string scalar_text(const json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return os.str();
    }
    throw UsageError("expected a number or decimal string, got " + j.dump());
}

Complex to_complex(const json& j)
{
    if (j.is_array() && j.size() == 2) return parse_complex(scalar_text(j[0]), scalar_text(j[1]));
    if (j.is_object()) return parse_complex(scalar_text(j.at("re")), j.contains("im") ? scalar_text(j["im"]) : "0");
    return parse_complex(scalar_text(j));
}

json from_complex(const Complex& z, int digits)
{
    return json{{"re", to_string(z.re(), digits)}, {"im", to_string(z.im(), digits)}};
}

const json& field(const json& in, const char* key)
{
    if (!in.contains(key)) throw UsageError(std::string("missing field \"") + key + "\"");
    return in.at(key);
}

Complex cfield(const json& in, const char* key) { return to_complex(field(in, key)); }

Partition pfield(const json& in, const char* key)
{
    const json& j = in.contains(key) ? in.at(key) : json::array();
    return Partition(j.get<std::vector<int>>());
}

std::vector<Complex> cvec(const json& in, const char* key)
{
    std::vector<Complex> out;
    for (const auto& v : field(in, key)) out.push_back(to_complex(v));
    return out;
}

Qtp base_from(const json& in) { return {cfield(in, "q"), cfield(in, "t"), cfield(in, "p")}; }

json partition_json(const Partition& l) { return l.parts(); }

json eval_kind(const std::string& kind, const json& in, const NumericContext& ctx)
{
    const int d = ctx.digits;
    json out;
    if (kind == "theta") {
        Complex x = cfield(in, "x"), p = cfield(in, "p");
        Complex v = in.contains("q") ? theta_poch(x, cfield(in, "q"), p, in.value("m", 1)) : theta(x, p);
        out["value"] = from_complex(v, d);
    } else if (kind == "csym") {
        static const std::map<std::string, CKind> kinds{
            {"zero", CKind::zero}, {"minus", CKind::minus}, {"plus", CKind::plus}};
        auto it = kinds.find(in.value("kind", "zero"));
        if (it == kinds.end()) throw UsageError("csym kind must be zero, minus or plus");
        Partition lam = pfield(in, "lambda");
        auto xs = cvec(in, "x");
        out["lambda"] = partition_json(lam);
        out["value"] = from_complex(c_symbol(it->second, lam, xs, base_from(in)), d);
    } else if (kind == "delta") {
        Partition lam = pfield(in, "lambda");
        auto bs = cvec(in, "b");
        Complex a = cfield(in, "a");
        Complex v = in.value("zero", false) ? delta0(lam, a, bs, base_from(in)) : delta(lam, a, bs, base_from(in));
        out["lambda"] = partition_json(lam);
        out["value"] = from_complex(v, d);
    } else if (kind == "interp") {
        Partition lam = pfield(in, "lambda");
        int m = field(in, "m").get<int>(), n = field(in, "n").get<int>();
        auto x = cvec(in, "x");
        if (static_cast<int>(x.size()) != n) throw UsageError("x must have n entries");
        auto P = interp_theta(lam, m, n, cfield(in, "a"), cfield(in, "b"), base_from(in), ctx);
        out["lambda"] = partition_json(lam);
        out["m"] = m;
        out["n"] = n;
        out["value"] = from_complex((*P)(x), d);
    } else if (kind == "rstar") {
        Partition lam = pfield(in, "lambda");
        auto x = cvec(in, "x");
        int n = in.value("n", static_cast<int>(x.size()));
        RStar R(lam, n, cfield(in, "a"), cfield(in, "b"), base_from(in), ctx, in.value("m", -1));
        out["lambda"] = partition_json(lam);
        out["m"] = R.m();
        out["n"] = n;
        out["value"] = from_complex(R(x), d);
    } else if (kind == "binom") {
        Partition lam = pfield(in, "lambda"), mu = pfield(in, "mu");
        Complex a = cfield(in, "a"), b = cfield(in, "b");
        int n = in.value("n", -1);
        std::string norm = in.value("normalization", "round");
        Complex v;
        if (norm == "round") {
            v = binom(lam, mu, a, b, base_from(in), ctx, n);
        } else if (norm == "angle") {
            auto vs = cvec(in, "v");
            v = binom_normalized(lam, mu, a, b, vs, base_from(in), ctx, n);
        } else {
            throw UsageError("normalization must be round or angle");
        }
        out["lambda"] = partition_json(lam);
        out["mu"] = partition_json(mu);
        out["value"] = from_complex(v, d);
        out["normalization"] = norm;
    } else if (kind == "biorth") {
        Partition lam = pfield(in, "lambda");
        auto x = cvec(in, "x");
        const json& pj = field(in, "params");
        Qtp base = base_from(in);
        int n = static_cast<int>(x.size());
        BiorthParams bp = pj.contains("u1")
                              ? BiorthParams{cfield(pj, "t0"), cfield(pj, "t1"), cfield(pj, "t2"), cfield(pj, "t3"),
                                             cfield(pj, "u0"), cfield(pj, "u1"), n, base}
                              : BiorthParams::balanced(cfield(pj, "t0"), cfield(pj, "t1"), cfield(pj, "t2"),
                                                       cfield(pj, "t3"), cfield(pj, "u0"), n, base);
        out["lambda"] = partition_json(lam);
        json params;
        for (auto [k, v] : {std::pair{"t0", bp.t0}, {"t1", bp.t1}, {"t2", bp.t2}, {"t3", bp.t3}, {"u0", bp.u0},
                            {"u1", bp.u1}})
            params[k] = from_complex(v, d);
        out["params"] = params;
        json xs = json::array();
        for (const auto& xi : x) xs.push_back(from_complex(xi, d));
        out["x"] = xs;
        out["value"] = from_complex(rtilde_eval(lam, bp, x, ctx), d);
    } else {
        throw UsageError("unknown eval kind: " + kind);
    }
    return out;
}

int exit_for(const std::vector<ResidualReport>& reports)
{
    bool fail = false;
    for (const auto& r : reports) {
        if (r.error.rfind("genericity:", 0) == 0) return kExitUsage;
        fail = fail || !r.pass;
    }
    return fail ? kExitFail : 0;
}

void load_config(const std::string& path, NumericContext& ctx)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file " + path);
    json j = json::parse(f);
    ctx.digits = j.value("digits", ctx.digits);
    ctx.tol = j.value("tol", ctx.tol);
    ctx.seed = j.value("seed", ctx.seed);
    ctx.genericity_margin = j.value("genericity_margin", ctx.genericity_margin);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"BC_n-symmetric elliptic special functions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config;
    std::optional<int> digits;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config, "JSON file presetting digits, tol, seed, genericity_margin");
    app.add_option("--digits", digits, "decimal digits of working precision")->check(CLI::PositiveNumber);
    app.add_option("--tol", tol, "residual tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "random seed");

    auto* eval = app.add_subcommand("eval", "evaluate a function; JSON request on stdin, JSON result on stdout");
    std::string kind;
    std::string input;
    eval->add_option("kind", kind, "theta|csym|delta|interp|rstar|binom|biorth")
        ->required()
        ->check(CLI::IsMember({"theta", "csym", "delta", "interp", "rstar", "binom", "biorth"}));
    eval->add_option("--input", input, "read the request from this file instead of stdin");

    auto* check = app.add_subcommand("check", "run one registry check");
    std::string check_id;
    bool nightly = false;
    std::optional<int> draws;
    bool timing = false;
    check->add_option("id", check_id)->required();
    check->add_flag("--nightly", nightly, "larger shapes and partitions");
    check->add_option("--draws", draws, "number of parameter draws")->check(CLI::PositiveNumber);
    check->add_flag("--timing", timing, "include runtime_ms in the report");

    auto* suite = app.add_subcommand("suite", "run all checks matching a glob");
    std::string filter;
    int jobs = 1;
    std::string json_path;
    suite->add_option("--filter", filter, "glob over check ids");
    suite->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    suite->add_option("--json", json_path, "write the JSON reports to this file");
    suite->add_flag("--nightly", nightly);
    suite->add_flag("--timing", timing);

    auto* list = app.add_subcommand("list", "list registry ids");

    auto* bg = app.add_subcommand("bigrid", "exact bigrid computations");
    bg->require_subcommand(1);
    auto* bgcheck = bg->add_subcommand("check", "perfection check for a constructed bigrid");
    std::pair<int, int> shape{2, 2};
    std::string bkind = "elliptic";
    std::uint64_t prime = bigrid::PrimeField::kDefaultPrime;
    int trials = 2;
    bgcheck->add_option("--shape", shape, "M,N")->delimiter(',')->required();
    bgcheck->add_option("--kind", bkind, "univariate|monomial|schur|cauchy|delta|elliptic|random");
    bgcheck->add_option("--prime", prime, "field characteristic");
    bgcheck->add_option("--trials", trials, "random extensions tried per partition")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        NumericContext ctx;
        if (!config.empty()) load_config(config, ctx);
        if (digits) ctx.digits = *digits;
        if (tol) ctx.tol = *tol;
        if (seed) ctx.seed = *seed;
        ctx.validate();

        if (*list) {
            for (const auto& c : registry()) std::cout << c.id << "  " << c.summary << '\n';
            return 0;
        }
        if (*eval) {
            json in;
            if (input.empty()) {
                in = json::parse(std::cin);
            } else {
                std::ifstream f(input);
                if (!f) throw UsageError("cannot read " + input);
                in = json::parse(f);
            }
            PrecisionGuard guard(ctx);
            std::cout << eval_kind(kind, in, ctx).dump(2) << '\n';
            return 0;
        }
        if (*check) {
            if (!find_check(check_id)) throw UsageError("unknown check id: " + check_id);
            auto rep = run_check(check_id, ctx, {nightly, draws});
            std::cout << report_json(rep, timing) << '\n';
            return exit_for({rep});
        }
        if (*suite) {
            auto reps = run_suite(filter, ctx, {nightly, std::nullopt}, jobs);
            std::string text = reports_json(reps, timing);
            if (!json_path.empty()) {
                std::ofstream f(json_path);
                if (!f) throw UsageError("cannot write " + json_path);
                f << text << '\n';
            }
            for (const auto& r : reps)
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.check_id << "  " << to_string(r.max_rel_residual, 4)
                          << (r.error.empty() ? "" : "  " + r.error) << '\n';
            return exit_for(reps);
        }
        if (*bgcheck) {
            auto k = bigrid::parse_kind(bkind);
            if (!k) throw UsageError("unknown bigrid kind: " + bkind);
            if (shape.first < 0 || shape.second < 1) throw UsageError("shape needs M >= 0 and N >= 1");
            bigrid::PrimeField F(prime);
            Rng rng(ctx.seed);
            auto g = bigrid::make_bigrid(F, *k, shape.first, shape.second, rng);
            auto rep = bigrid::perfection_check(F, g, trials, rng);
            json out;
            out["pass"] = rep.pass;
            if (rep.failing_lambda) out["failing_lambda"] = partition_json(*rep.failing_lambda);
            out["regularity_ok"] = rep.regularity_ok;
            std::cout << out.dump(2) << '\n';
            return rep.pass ? 0 : kExitFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GenericityError& e) {
        std::cerr << "genericity: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return 0;
}
