#pragma once

namespace seiffert {

/// Sharp weights for Q_{t,p}(a,b) < T(a,b) < Q_{t',p}(a,b): the lower bound
/// holds for all a != b iff t <= t_lower, the upper iff t' >= t_upper.
struct ThresholdPair {
    double p;
    double t_lower;
    double t_upper;
};

/// 1/2 + sqrt((4/pi)^(1/p) - 1) / 2.
double t_lower(double p);

/// 1/2 + sqrt(3p) / (6p).
double t_upper(double p);

ThresholdPair thresholds(double p);

/// (2t - 1)^2 for t in [1/2, 1].
double u_from_t(double t);

/// 1/2 + sqrt(u)/2 for u in [0, 1].
double t_from_u(double u);

/// The four classical constants: p = 1/2 gives the root-mean-square bounds
/// (alpha, beta), p = 1 the contraharmonic bounds (lambda, mu).
struct CornerConstants {
    double alpha;   // (1 + sqrt(16/pi^2 - 1)) / 2
    double beta;    // (3 + sqrt 6) / 6
    double lambda;  // (1 + sqrt(4/pi - 1)) / 2
    double mu;      // (3 + sqrt 3) / 6
};

CornerConstants corner_constants();

}  // namespace seiffert
