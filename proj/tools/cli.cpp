#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "output.hpp"
#include "seiffert/errors.hpp"
#include "seiffert/kernels.hpp"
#include "seiffert/means.hpp"
#include "seiffert/thresholds.hpp"
#include "seiffert/verifier.hpp"

namespace seiffert::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20120906;
constexpr double kSharpnessStep = 1e-3;
constexpr double kRecoveryTolerance = 1e-6;
constexpr std::size_t kCertifyPairs = 1000;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    const char* env = std::getenv("SEIFFERT_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (env[used] != '\0') throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("SEIFFERT_SEED is not an unsigned integer: ") + env);
    }
}

json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    return json{{"x", w->x}, {"f", w->f}, {"endpoint_limit", w->endpoint_limit}};
}

json report_json(const CertificateReport& r) {
    json j{{"u", r.params.u()},
           {"p", r.params.p()},
           {"verdict", std::string(to_string(r.verdict))},
           {"negative_witness", witness_json(r.negative_witness)},
           {"positive_witness", witness_json(r.positive_witness)},
           {"endpoint_limit", r.endpoint_limit},
           {"grid_points", r.grid_points},
           {"x_min", r.x_min},
           {"x_max", r.x_max}};
    j["extremum_x0"] = r.extremum_x0 ? json(*r.extremum_x0) : json(nullptr);
    return j;
}

void print_witness(std::ostream& out, const char* name, const std::optional<Witness>& w) {
    out << "  " << name << ": ";
    if (!w) {
        out << "none\n";
        return;
    }
    if (w->endpoint_limit) {
        out << "x -> 1-, h = " << format_double(w->f) << '\n';
    } else {
        out << "x = " << format_double(w->x) << ", f = " << format_double(w->f) << '\n';
    }
}

void print_report(std::ostream& out, const CertificateReport& r) {
    out << "scan u = " << format_double(r.params.u()) << ", p = " << format_double(r.params.p())
        << ": " << to_string(r.verdict) << '\n';
    print_witness(out, "negative witness", r.negative_witness);
    print_witness(out, "positive witness", r.positive_witness);
    out << "  endpoint limit h_p(u) = " << format_double(r.endpoint_limit) << '\n';
    if (r.extremum_x0) out << "  interior minimum x0 = " << format_double(*r.extremum_x0) << '\n';
    out << "  grid: " << r.grid_points << " points on [" << format_double(r.x_min) << ", "
        << format_double(r.x_max) << "]\n";
}

// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string mean;
    double a = 0.0;
    double b = 0.0;
    std::optional<double> t;
    std::optional<double> p;
};

int cmd_eval(const EvalArgs& args, std::ostream& out) {
    const PositivePair pair(args.a, args.b);
    double value = 0.0;
    if (args.mean == "A") {
        value = arithmetic_mean(pair);
    } else if (args.mean == "T") {
        value = seiffert_mean(pair);
    } else if (args.mean == "S") {
        value = root_mean_square(pair);
    } else if (args.mean == "C") {
        value = contraharmonic_mean(pair);
    } else if (args.mean == "Q") {
        if (!args.t || !args.p) throw UsageError("mean Q requires --t and --p");
        value = q_family(pair, WeightParam(*args.t), ExponentParam(*args.p));
    } else {
        throw UsageError("unknown mean '" + args.mean + "' (expected A, T, S, C or Q)");
    }
    out << format_double(value) << '\n';
    return kExitPass;
}

struct TableArgs {
    double p_min = 0.5;
    double p_max = 10.0;
    int steps = 20;
    bool empirical = false;
    bool json = false;
    std::size_t grid_size = ScanConfig{}.grid_size;
};

int cmd_table(const TableArgs& args, std::ostream& out) {
    ExponentParam(args.p_min);
    if (!(args.p_min < args.p_max) || !std::isfinite(args.p_max)) {
        throw DomainError("table requires p-min < p-max");
    }
    if (args.steps < 2) throw DomainError("table requires steps >= 2");
    ScanConfig cfg;
    cfg.grid_size = args.grid_size;
    cfg.validate();

    OutputRecord record;
    record.columns = {"p", "t_lower", "t_upper", "gap"};
    if (args.empirical) {
        record.columns.insert(record.columns.end(), {"empirical_t_lower", "empirical_t_upper"});
    }
    const double ratio = args.p_max / args.p_min;
    for (int i = 0; i < args.steps; ++i) {
        double p = args.p_min * std::pow(ratio, static_cast<double>(i) / (args.steps - 1));
        if (i == args.steps - 1) p = args.p_max;
        const ThresholdPair th = thresholds(p);
        std::vector<double> row{p, th.t_lower, th.t_upper, th.t_upper - th.t_lower};
        if (args.empirical) {
            row.push_back(empirical_t_lower(p, cfg));
            row.push_back(empirical_t_upper(p, cfg));
        }
        record.rows.push_back(std::move(row));
    }
    if (args.json) {
        out << to_json(record).dump() << '\n';
    } else {
        write_csv(record, out);
    }
    return kExitPass;
}

struct CertifyArgs {
    double p = 1.0;
    std::optional<double> t;
    std::size_t grid_size = ScanConfig{}.grid_size;
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
};

// Scan at a single weight and compare the verdict with the theorem.
int certify_single(const CertifyArgs& args, const ScanConfig& cfg, std::ostream& out) {
    const WeightParam w(*args.t);
    const KernelParams params(w.u(), args.p);
    const CertificateReport report = scan_sign(params, cfg);
    const CaseReport cases = check_case_structure(params, cfg);

    const ThresholdPair th = thresholds(args.p);
    Verdict expected = Verdict::mixed;
    if (w.t() <= th.t_lower) expected = Verdict::all_negative;
    if (w.t() >= th.t_upper) expected = Verdict::all_positive;
    const bool pass = report.verdict == expected;

    if (args.json) {
        json j = report_json(report);
        j["t"] = w.t();
        j["case"] = std::string(to_string(cases.label));
        j["expected_verdict"] = std::string(to_string(expected));
        j["pass"] = pass;
        out << j.dump() << '\n';
    } else {
        out << "t = " << format_double(w.t()) << " (t_lower = " << format_double(th.t_lower)
            << ", t_upper = " << format_double(th.t_upper) << ")\n";
        print_report(out, report);
        out << "  case: " << to_string(cases.label) << '\n';
        out << "  expected " << to_string(expected) << ": " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kExitPass : kExitContradiction;
}

struct Check {
    std::string name;
    bool pass;
    json detail;
};

int certify_suite(const CertifyArgs& args, const ScanConfig& cfg, std::ostream& out) {
    const double p = args.p;
    const ThresholdPair th = thresholds(p);
    std::vector<Check> checks;

    const double emp_lower = empirical_t_lower(p, cfg);
    const double emp_upper = empirical_t_upper(p, cfg);
    const double d_lower = std::abs(emp_lower - th.t_lower);
    const double d_upper = std::abs(emp_upper - th.t_upper);
    checks.push_back({"t_lower recovery", d_lower < kRecoveryTolerance,
                      json{{"closed_form", th.t_lower}, {"empirical", emp_lower}, {"abs_diff", d_lower}}});
    checks.push_back({"t_upper recovery", d_upper < kRecoveryTolerance,
                      json{{"closed_form", th.t_upper}, {"empirical", emp_upper}, {"abs_diff", d_upper}}});

    const double t_above = th.t_lower + kSharpnessStep;
    const CertificateReport above = scan_sign(KernelParams(u_from_t(t_above), p), cfg);
    checks.push_back({"lower bound sharp", above.positive_witness.has_value(),
                      json{{"t", t_above}, {"report", report_json(above)}}});

    const double t_below = th.t_upper - kSharpnessStep;
    const CertificateReport below = scan_sign(KernelParams(u_from_t(t_below), p), cfg);
    checks.push_back({"upper bound sharp", below.negative_witness.has_value(),
                      json{{"t", t_below}, {"report", report_json(below)}}});

    const double t_mid = (th.t_lower + th.t_upper) / 2.0;
    const CertificateReport mid = scan_sign(KernelParams(u_from_t(t_mid), p), cfg);
    checks.push_back({"band is indeterminate", mid.verdict == Verdict::mixed,
                      json{{"t", t_mid}, {"report", report_json(mid)}}});

    // Both directions of the mean inequality at the sharp weights.
    std::mt19937_64 rng(args.seed);
    const ExponentParam exponent(p);
    std::size_t lower_ok = 0;
    std::size_t upper_ok = 0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < kCertifyPairs; ++i) {
        const RandomSample s = draw_sample(rng);
        if (s.a == s.b) continue;
        const PositivePair pair(s.a, s.b);
        ++used;
        lower_ok += certify_mean_inequality(pair, WeightParam(th.t_lower), exponent).sign < 0;
        upper_ok += certify_mean_inequality(pair, WeightParam(th.t_upper), exponent).sign > 0;
    }
    checks.push_back({"Q(t_lower) < T on random pairs", lower_ok == used,
                      json{{"pairs", used}, {"holding", lower_ok}, {"seed", args.seed}}});
    checks.push_back({"Q(t_upper) > T on random pairs", upper_ok == used,
                      json{{"pairs", used}, {"holding", upper_ok}, {"seed", args.seed}}});

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;

    if (args.json) {
        json j{{"p", p}, {"pass", all}, {"checks", json::array()}};
        for (const auto& c : checks) {
            j["checks"].push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        out << j.dump() << '\n';
    } else {
        out << "p = " << format_double(p) << '\n';
        out << "t_lower: closed " << format_double(th.t_lower) << ", empirical "
            << format_double(emp_lower) << ", |diff| " << format_double(d_lower) << '\n';
        out << "t_upper: closed " << format_double(th.t_upper) << ", empirical "
            << format_double(emp_upper) << ", |diff| " << format_double(d_upper) << '\n';
        for (const auto& c : checks) {
            out << (c.pass ? "PASS  " : "FAIL  ") << c.name << '\n';
        }
        out << (all ? "PASS" : "FAIL") << '\n';
    }
    return all ? kExitPass : kExitContradiction;
}

int cmd_certify(const CertifyArgs& args, std::ostream& out) {
    ExponentParam(args.p);
    ScanConfig cfg;
    cfg.grid_size = args.grid_size;
    cfg.validate();
    return args.t ? certify_single(args, cfg, out) : certify_suite(args, cfg, out);
}

struct TraceArgs {
    double p = 1.0;
    std::optional<double> u;
    std::optional<double> t;
    double x_min = ScanConfig{}.x_min;
    double x_max = ScanConfig{}.x_max;
    int n = 100;
    bool json = false;
};

int cmd_trace(const TraceArgs& args, std::ostream& out) {
    if (args.u.has_value() == args.t.has_value()) {
        throw UsageError("trace requires exactly one of --u or --t");
    }
    const double u = args.u ? *args.u : u_from_t(*args.t);
    const KernelParams params(u, args.p);
    if (!(args.x_min > 0.0 && args.x_min < args.x_max && args.x_max < 1.0)) {
        throw DomainError("trace requires 0 < x-min < x-max < 1");
    }
    if (args.n < 2) throw DomainError("trace requires n >= 2");

    OutputRecord record;
    record.columns = {"x", "f", "g"};
    const double step = (args.x_max - args.x_min) / (args.n - 1);
    for (int i = 0; i < args.n; ++i) {
        const double x = i == args.n - 1 ? args.x_max : args.x_min + step * i;
        const KernelPoint point(x);
        record.rows.push_back({x, eval_f(params, point), eval_g(args.p, point)});
    }
    if (args.json) {
        out << to_json(record).dump() << '\n';
    } else {
        write_csv(record, out);
    }
    return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bivariate means, sharp Seiffert-mean bounds for Q_{t,p}, and their numerical "
                 "certification",
                 "seiffert"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate a mean A, T, S, C or Q at (a, b)");
    eval->add_option("mean", eval_args.mean, "A, T, S, C or Q")->required();
    eval->add_option("a", eval_args.a)->required();
    eval->add_option("b", eval_args.b)->required();
    eval->add_option("--t", eval_args.t, "Weight t in [1/2, 1] (Q only)");
    eval->add_option("--p", eval_args.p, "Exponent p >= 1/2 (Q only)");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Tabulate t_lower(p), t_upper(p) on a log grid");
    table->add_option("--p-min", table_args.p_min)->capture_default_str();
    table->add_option("--p-max", table_args.p_max)->capture_default_str();
    table->add_option("--steps", table_args.steps)->capture_default_str();
    table->add_flag("--empirical", table_args.empirical, "Add scan-based threshold columns");
    table->add_option("--grid-size,--grid", table_args.grid_size)->capture_default_str();
    table->add_flag("--json", table_args.json);

    CertifyArgs certify_args;
    std::optional<std::uint64_t> seed_flag;
    auto* certify = app.add_subcommand("certify", "Certify the sharp thresholds numerically");
    certify->add_option("--p", certify_args.p, "Exponent p >= 1/2")->required();
    certify->add_option("--t", certify_args.t, "Scan a single weight instead of the full suite");
    certify->add_option("--grid-size,--grid", certify_args.grid_size)->capture_default_str();
    certify->add_option("--seed", seed_flag, "Seed for random pairs (default: $SEIFFERT_SEED)");
    certify->add_flag("--json", certify_args.json);

    TraceArgs trace_args;
    auto* trace = app.add_subcommand("trace", "Emit (x, f, g) rows for plotting");
    trace->add_option("--p", trace_args.p)->required();
    trace->add_option("--u", trace_args.u);
    trace->add_option("--t", trace_args.t);
    trace->add_option("--x-min", trace_args.x_min)->capture_default_str();
    trace->add_option("--x-max", trace_args.x_max)->capture_default_str();
    trace->add_option("--n", trace_args.n)->capture_default_str();
    trace->add_flag("--json", trace_args.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(eval_args, out);
        if (*table) return cmd_table(table_args, out);
        if (*certify) {
            certify_args.seed = seed_flag ? *seed_flag : default_seed();
            return cmd_certify(certify_args, out);
        }
        if (*trace) return cmd_trace(trace_args, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const IndeterminateError& e) {
        err << "indeterminate: " << e.what() << '\n';
        return kExitIndeterminate;
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << '\n';
        return kExitContradiction;
    }
    return kExitUsage;
}

}  // namespace seiffert::cli
