#include "seiffert/thresholds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "seiffert/errors.hpp"
#include "seiffert/kernels.hpp"
#include "seiffert/means.hpp"

namespace seiffert {

double t_lower(double p) {
    return t_from_u(u_zero_of_h(p));
}

double t_upper(double p) {
    p = ExponentParam(p).value();
    return 0.5 + std::sqrt(3.0 * p) / (6.0 * p);
}

ThresholdPair thresholds(double p) {
    return ThresholdPair{p, t_lower(p), t_upper(p)};
}

double u_from_t(double t) {
    return WeightParam(t).u();
}

double t_from_u(double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError("u must lie in [0, 1], got " + std::to_string(u));
    }
    return 0.5 + std::sqrt(u) / 2.0;
}

CornerConstants corner_constants() {
    constexpr double pi = std::numbers::pi;
    return CornerConstants{
        (1.0 + std::sqrt(16.0 / (pi * pi) - 1.0)) / 2.0,
        (3.0 + std::sqrt(6.0)) / 6.0,
        (1.0 + std::sqrt(4.0 / pi - 1.0)) / 2.0,
        (3.0 + std::sqrt(3.0)) / 6.0,
    };
}

}  // namespace seiffert
