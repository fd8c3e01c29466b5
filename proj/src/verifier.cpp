#include "seiffert/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "seiffert/bisection.hpp"
#include "seiffert/errors.hpp"
#include "seiffert/thresholds.hpp"

namespace seiffert {

namespace {

std::string describe(const KernelParams& params, const ScanConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    os << "u=" << params.u() << ", p=" << params.p() << ", grid=" << cfg.grid_size << " on ["
       << cfg.x_min << ", " << cfg.x_max << "]";
    return os.str();
}

double derivative_at(const KernelParams& params, double x) {
    return eval_f_derivative(params, KernelPoint(x));
}

// Boundary in t of a predicate that holds at t = 1/2 and fails at t = 1.
// A coarse probe checks the predicate is a single true-then-false run before
// bisecting inside the bracket it identifies.
template <class Predicate>
double predicate_boundary(Predicate&& holds, int iters, const char* what) {
    constexpr int kProbes = 9;
    std::array<double, kProbes> ts{};
    std::array<bool, kProbes> values{};
    for (int k = 0; k < kProbes; ++k) {
        ts[k] = 0.5 + 0.5 * static_cast<double>(k) / (kProbes - 1);
        values[k] = holds(ts[k]);
    }
    if (!values.front() || values.back()) {
        throw InconsistencyError(std::string(what) +
                                 ": predicate has the wrong value at the ends of [1/2, 1]");
    }
    int last_true = 0;
    for (int k = 1; k < kProbes; ++k) {
        if (values[k] != values[k - 1] && values[k]) {
            throw InconsistencyError(std::string(what) + ": predicate not monotone in t");
        }
        if (values[k]) last_true = k;
    }
    return bisect_boundary(holds, ts[last_true], ts[last_true + 1], iters);
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::all_negative: return "ALL_NEGATIVE";
        case Verdict::all_positive: return "ALL_POSITIVE";
        case Verdict::mixed: return "MIXED";
    }
    return "?";
}

std::string_view to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::case1: return "CASE1";
        case CaseLabel::case2: return "CASE2";
        case CaseLabel::case3: return "CASE3";
    }
    return "?";
}

double locate_extremum(const KernelParams& params, double lo, double hi, double tol) {
    return bisect_boundary([&](double x) { return derivative_at(params, x) < 0.0; }, lo, hi,
                           200, tol);
}

CertificateReport scan_sign(const KernelParams& params, const ScanConfig& cfg, Execution exec) {
    const std::vector<double> xs = scan_grid(cfg);
    const std::vector<double> fs = evaluate_f(params, xs, exec);

    // Deterministic reduction in grid order: extreme values, lowest index on ties.
    std::optional<Witness> neg;
    std::optional<Witness> pos;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double band = witness_band(xs[i]);
        if (fs[i] < -band && (!neg || fs[i] < neg->f)) neg = Witness{xs[i], fs[i]};
        if (fs[i] > band && (!pos || fs[i] > pos->f)) pos = Witness{xs[i], fs[i]};
    }

    const double h = eval_h(params.p(), params.u());
    if (!neg && h < -kEndpointBand) neg = Witness{1.0, h, true};
    if (!pos && h > kEndpointBand) pos = Witness{1.0, h, true};

    if (!neg && !pos) {
        throw IndeterminateError("scan cannot classify the sign of f: every sample is within "
                                 "the near-zero band (" + describe(params, cfg) + ")");
    }

    CertificateReport report{params,  Verdict::mixed, neg,     pos,       std::nullopt,
                             h,       xs.size(),      cfg.x_min, cfg.x_max};
    if (!neg) report.verdict = Verdict::all_positive;
    if (!pos) report.verdict = Verdict::all_negative;

    if (derivative_at(params, cfg.x_min) < 0.0 && derivative_at(params, cfg.x_max) > 0.0) {
        report.extremum_x0 = locate_extremum(params, cfg.x_min, cfg.x_max);
    }
    return report;
}

double empirical_t_lower(double p, const ScanConfig& cfg) {
    p = ExponentParam(p).value();
    cfg.validate();
    auto all_negative = [&](double t) {
        return scan_sign(KernelParams(u_from_t(t), p), cfg).verdict == Verdict::all_negative;
    };
    return predicate_boundary(all_negative, cfg.refine_iters, "empirical_t_lower");
}

double empirical_t_upper(double p, const ScanConfig& cfg) {
    p = ExponentParam(p).value();
    cfg.validate();
    auto not_all_positive = [&](double t) {
        return scan_sign(KernelParams(u_from_t(t), p), cfg).verdict != Verdict::all_positive;
    };
    return predicate_boundary(not_all_positive, cfg.refine_iters, "empirical_t_upper");
}

MeanComparison certify_mean_inequality(const PositivePair& pair, const WeightParam& w,
                                       const ExponentParam& p) {
    if (pair.a() == pair.b()) {
        throw DomainError("strict comparison of Q and T is undefined at a == b");
    }
    const double direct = std::log(q_family(pair, w, p) / seiffert_mean(pair));
    const double kernel =
        eval_f(KernelParams(w.u(), p.value()), KernelPoint(pair.normalized_gap()));
    if (!(std::abs(direct - kernel) <= kCrossPathTolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << "log(Q/T) routes disagree at (a, b) = (" << pair.a() << ", " << pair.b()
           << "), t = " << w.t() << ", p = " << p.value() << ": direct " << direct
           << ", kernel " << kernel;
        throw InconsistencyError(os.str());
    }
    const int sign = kernel > 0.0 ? 1 : (kernel < 0.0 ? -1 : 0);
    return MeanComparison{sign, direct, kernel};
}

CaseReport check_case_structure(const KernelParams& params, const ScanConfig& cfg) {
    const double u = params.u();
    const double p = params.p();
    CaseLabel label = CaseLabel::case3;
    if (u >= g_limit_at_zero(p)) {
        label = CaseLabel::case1;
    } else if (u <= g_limit_at_one(p)) {
        label = CaseLabel::case2;
    }

    const std::vector<double> xs = scan_grid(cfg);
    const std::vector<double> fs = evaluate_f(params, xs);

    // Signs of consecutive differences; steps within rounding noise are flat.
    constexpr double eps = std::numeric_limits<double>::epsilon();
    int changes = 0;
    int previous = 0;
    int rising = 0;
    int falling = 0;
    std::size_t turn_index = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double d = fs[i + 1] - fs[i];
        if (std::abs(d) <= 4.0 * eps * (std::abs(fs[i]) + std::abs(fs[i + 1]))) continue;
        const int s = d > 0.0 ? 1 : -1;
        (s > 0 ? rising : falling)++;
        if (previous != 0 && s != previous) {
            ++changes;
            turn_index = i;
        }
        previous = s;
    }

    const std::string where = describe(params, cfg);
    CaseReport report{label, std::nullopt, changes};
    switch (label) {
        case CaseLabel::case1:
            if (falling != 0 || rising == 0) {
                throw InconsistencyError("Case 1 requires f increasing on the grid (" + where + ")");
            }
            break;
        case CaseLabel::case2:
            if (rising != 0 || falling == 0) {
                throw InconsistencyError("Case 2 requires f decreasing on the grid (" + where + ")");
            }
            break;
        case CaseLabel::case3: {
            if (!(derivative_at(params, cfg.x_min) < 0.0 &&
                  derivative_at(params, cfg.x_max) > 0.0)) {
                throw IndeterminateError("Case 3 extremum lies outside the scan bounds (" +
                                         where + ")");
            }
            const double x0 = locate_extremum(params, cfg.x_min, cfg.x_max);
            if (x0 <= xs[1] || x0 >= xs[xs.size() - 2]) {
                throw IndeterminateError("Case 3 extremum lies in an end interval of the grid (" +
                                         where + ")");
            }
            if (changes != 1 || falling == 0 || rising == 0) {
                throw InconsistencyError("Case 3 requires one decrease-to-increase turn, found " +
                                         std::to_string(changes) + " sign changes (" + where + ")");
            }
            // The grid minimum sits at xs[turn_index]; x0 must lie next to it.
            if (x0 < xs[turn_index - 1] || x0 > xs[turn_index + 1]) {
                throw InconsistencyError("Case 3 extremum disagrees with the grid minimum (" +
                                         where + ")");
            }
            report.x0 = x0;
            break;
        }
    }
    return report;
}

RandomSample draw_sample(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double log_lo = std::log(1e-3);
    const double log_hi = std::log(1e3);
    RandomSample s{};
    s.a = std::exp(log_lo + (log_hi - log_lo) * unit(rng));
    s.b = std::exp(log_lo + (log_hi - log_lo) * unit(rng));
    s.t = std::clamp(0.5 + 0.5 * unit(rng), std::nextafter(0.5, 1.0), std::nextafter(1.0, 0.0));
    s.p = std::exp(std::log(0.5) + (std::log(10.0) - std::log(0.5)) * unit(rng));
    return s;
}

CrossCheckSummary cross_check(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<RandomSample> samples(n);
    for (auto& s : samples) s = draw_sample(rng);

    std::vector<double> diffs(n, 0.0);
    std::vector<char> skipped(n, 0);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const RandomSample& s = samples[i];
        if (s.a == s.b) {
            skipped[i] = 1;
            continue;
        }
        const PositivePair pair(s.a, s.b);
        const WeightParam w(s.t);
        const ExponentParam p(s.p);
        const double direct = std::log(q_family(pair, w, p) / seiffert_mean(pair));
        const double kernel = eval_f(KernelParams(w.u(), p.value()), KernelPoint(pair.normalized_gap()));
        diffs[i] = std::abs(direct - kernel);
    }

    CrossCheckSummary summary;
    summary.samples = n;
    for (std::size_t i = 0; i < n; ++i) {
        summary.skipped += skipped[i];
        summary.max_abs_diff = std::max(summary.max_abs_diff, diffs[i]);
    }
    return summary;
}

}  // namespace seiffert
