#include "seiffert/means.hpp"

#include <cmath>
#include <string>

#include "seiffert/errors.hpp"

namespace seiffert {

namespace {

constexpr double kSeiffertSeriesCutoff = 1e-4;

// arctan(x)/x = 1 - x^2/3 + x^4/5 - x^6/7 + O(x^8)
double atan_ratio_short_series(double x) {
    const double x2 = x * x;
    return 1.0 - x2 * (1.0 / 3.0 - x2 * (1.0 / 5.0 - x2 / 7.0));
}

}  // namespace

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("pair entries must be finite");
    }
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("pair entries must be strictly positive, got (" + std::to_string(a) +
                          ", " + std::to_string(b) + ")");
    }
}

double PositivePair::normalized_gap() const noexcept {
    return std::abs(a_ - b_) / (a_ + b_);
}

WeightParam::WeightParam(double t) : t_(t) {
    if (!(t >= 0.5 && t <= 1.0)) {
        throw DomainError("weight t must lie in [1/2, 1], got " + std::to_string(t));
    }
    const double s = 2.0 * t - 1.0;
    u_ = s * s;
}

ExponentParam::ExponentParam(double p) : p_(p) {
    if (!std::isfinite(p) || !(p >= 0.5)) {
        throw DomainError("exponent p must satisfy p >= 1/2, got " + std::to_string(p));
    }
}

double arithmetic_mean(const PositivePair& pair) {
    return (pair.a() + pair.b()) / 2.0;
}

double seiffert_mean(const PositivePair& pair) {
    const double x = pair.normalized_gap();
    if (x < kSeiffertSeriesCutoff) {
        return arithmetic_mean(pair) / atan_ratio_short_series(x);
    }
    // |a - b| keeps the result bit-identical under swapping the arguments.
    return std::abs(pair.a() - pair.b()) / (2.0 * std::atan(x));
}

double root_mean_square(const PositivePair& pair) {
    const double a = pair.a();
    const double b = pair.b();
    return std::sqrt((a * a + b * b) / 2.0);
}

double contraharmonic_mean(const PositivePair& pair) {
    const double a = pair.a();
    const double b = pair.b();
    return (a * a + b * b) / (a + b);
}

PositivePair weighted_pair(const PositivePair& pair, const WeightParam& w) {
    const double t = w.t();
    const double s = 1.0 - t;
    return PositivePair(t * pair.a() + s * pair.b(), t * pair.b() + s * pair.a());
}

double q_family(const PositivePair& pair, const WeightParam& w, const ExponentParam& p) {
    // C^p A^(1-p) == A (C/A)^p, which stays finite for large p.
    const double a = arithmetic_mean(pair);
    const double c = contraharmonic_mean(weighted_pair(pair, w));
    return a * std::pow(c / a, p.value());
}

}  // namespace seiffert
