#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "seiffert/kernels.hpp"
#include "seiffert/means.hpp"
#include "seiffert/scan.hpp"

namespace seiffert {

enum class Verdict { all_negative, all_positive, mixed };

std::string_view to_string(Verdict v);

/// A sample with a strict sign. `endpoint_limit` marks the x -> 1- limit
/// h_p(u) standing in for a grid point (x is then reported as 1).
struct Witness {
    double x;
    double f;
    bool endpoint_limit = false;
};

struct CertificateReport {
    KernelParams params;
    Verdict verdict;
    std::optional<Witness> negative_witness;
    std::optional<Witness> positive_witness;
    /// Interior minimum of f when the derivative changes sign from - to + on
    /// [x_min, x_max].
    std::optional<double> extremum_x0;
    double endpoint_limit;
    std::size_t grid_points;
    double x_min;
    double x_max;
};

/// |f(x)| must exceed this to count as a strict-sign witness. f vanishes
/// quadratically at 0, hence the x^2 term.
inline double witness_band(double x) {
    return 1e-13 + 1e-9 * x * x;
}

/// Tolerance on the endpoint limit h_p(u) when it is used as evidence.
inline constexpr double kEndpointBand = 1e-13;

/// Classifies the sign of f_{u,p} on (0, 1) from the two-tier grid plus the
/// analytic x -> 1- limit. Throws IndeterminateError when no sample has a
/// strict sign.
CertificateReport scan_sign(const KernelParams& params, const ScanConfig& cfg = {},
                            Execution exec = Execution::parallel);

/// Largest t such that scan_sign(u_from_t(t), p) is ALL_NEGATIVE, by bisection
/// on t in [1/2, 1]. Never consults the closed-form thresholds.
double empirical_t_lower(double p, const ScanConfig& cfg = {});

/// Smallest t such that scan_sign(u_from_t(t), p) is ALL_POSITIVE.
double empirical_t_upper(double p, const ScanConfig& cfg = {});

/// Bisects the derivative sign of f on [lo, hi] (negative at lo, positive at
/// hi) down to a bracket of width `tol`.
double locate_extremum(const KernelParams& params, double lo, double hi, double tol = 1e-12);

struct MeanComparison {
    int sign;               // sign of log(Q/T)
    double direct_log;      // log(Q/T) from the means
    double kernel_log;      // f_{u,p}(|a-b|/(a+b))
};

inline constexpr double kCrossPathTolerance = 1e-10;

/// log(Q_{t,p}/T) two ways; throws InconsistencyError if they differ by more
/// than kCrossPathTolerance, DomainError if a == b.
MeanComparison certify_mean_inequality(const PositivePair& pair, const WeightParam& w,
                                       const ExponentParam& p);

enum class CaseLabel { case1, case2, case3 };

std::string_view to_string(CaseLabel c);

struct CaseReport {
    CaseLabel label;
    std::optional<double> x0;
    /// Sign changes of consecutive grid differences of f (flat steps skipped).
    int derivative_sign_changes;
};

/// Case 1: u >= 1/(3p), f increasing. Case 2: u <= (pi-2)/((2p-1)pi+2), f
/// decreasing. Case 3: otherwise, f decreases then increases around x0.
/// Throws InconsistencyError if the grid shape contradicts the label.
CaseReport check_case_structure(const KernelParams& params, const ScanConfig& cfg = {});

/// Random inputs for the cross-path check: magnitudes log-uniform in
/// [1e-3, 1e3], t uniform in (1/2, 1), p log-uniform in [1/2, 10].
struct RandomSample {
    double a;
    double b;
    double t;
    double p;
};

RandomSample draw_sample(std::mt19937_64& rng);

struct CrossCheckSummary {
    std::size_t samples = 0;
    std::size_t skipped = 0;      // a == b draws
    double max_abs_diff = 0.0;
};

/// Runs certify_mean_inequality's two routes on `n` seeded samples without
/// throwing, reporting the worst disagreement.
CrossCheckSummary cross_check(std::size_t n, std::uint64_t seed);

}  // namespace seiffert
