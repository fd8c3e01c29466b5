#include "seiffert/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "seiffert/errors.hpp"
#include "seiffert/means.hpp"

namespace seiffert {

namespace {

double checked_p(double p) {
    return ExponentParam(p).value();
}

void check_u(double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError("u must lie in [0, 1], got " + std::to_string(u));
    }
}

const double kLogPiOver4 = std::log(std::numbers::pi) - std::log(4.0);

}  // namespace

KernelPoint::KernelPoint(double x) : x_(x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError("kernel point x must lie in (0, 1), got " + std::to_string(x));
    }
}

KernelParams::KernelParams(double u, double p) : u_(u), p_(checked_p(p)) {
    check_u(u);
}

namespace detail {

double log_atan_ratio_series(double x) {
    // arctan(x)/x - 1 = sum_{k>=1} (-1)^k x^{2k} / (2k+1); terms through x^12
    // leave a remainder below x^14/15, far under one ulp for x < 1e-2.
    const double y = x * x;
    const double s =
        -y * (1.0 / 3.0 -
              y * (1.0 / 5.0 - y * (1.0 / 7.0 - y * (1.0 / 9.0 - y * (1.0 / 11.0 - y / 13.0)))));
    return std::log1p(s);
}

double log_atan_ratio_direct(double x) {
    return std::log1p(std::atan(x) / x - 1.0);
}

double g_numerator_over_cube_series(double x) {
    // (1+x^2) arctan x - x = 2 sum_{n>=1} (-1)^{n+1} x^{2n+1} / ((2n-1)(2n+1)).
    // Eleven terms leave a remainder below x^22/600, under one ulp for x < 0.1.
    constexpr int kTerms = 11;
    const double y = x * x;
    double acc = 0.0;
    for (int n = kTerms; n >= 1; --n) {
        const double coeff = 1.0 / static_cast<double>((2 * n - 1) * (2 * n + 1));
        acc = (n % 2 == 1 ? coeff : -coeff) + y * acc;
    }
    return 2.0 * acc;
}

double g_numerator_over_cube_direct(double x) {
    return ((1.0 + x * x) * std::atan(x) - x) / (x * x * x);
}

}  // namespace detail

double eval_f(const KernelParams& params, KernelPoint point) {
    const double x = point.value();
    const double log_ratio = x < kKernelSeriesCutoff ? detail::log_atan_ratio_series(x)
                                                     : detail::log_atan_ratio_direct(x);
    return params.p() * std::log1p(params.u() * x * x) + log_ratio;
}

double eval_f_derivative(const KernelParams& params, KernelPoint point) {
    const double x = point.value();
    const double p = params.p();
    const double u = params.u();
    const double atan_ratio = std::atan(x) / x;
    // g2 / (x arctan x) = x [(2p-1) arctan(x)/x + 1/(1+x^2)] / (arctan(x)/x)
    const double g2_scaled = (2.0 * p - 1.0) * atan_ratio + 1.0 / (1.0 + x * x);
    const double prefactor = x * g2_scaled / ((1.0 + u * x * x) * atan_ratio);
    return prefactor * (u - eval_g(p, point));
}

double eval_g(double p, KernelPoint point) {
    p = checked_p(p);
    const double x = point.value();
    const double numerator = x < kGSeriesCutoff ? detail::g_numerator_over_cube_series(x)
                                                : detail::g_numerator_over_cube_direct(x);
    // Denominator divided by x^3; both terms are positive, no cancellation.
    const double denominator = (2.0 * p - 1.0) * (1.0 + x * x) * (std::atan(x) / x) + 1.0;
    return numerator / denominator;
}

double eval_g_derivative_ratio(double p, KernelPoint x) {
    p = checked_p(p);
    const double v = x.value();
    return 1.0 / ((2.0 * p - 1.0) * eval_phi(x) + p * v * v + p + 1.0);
}

double eval_phi(KernelPoint point) {
    const double x = point.value();
    const double s = 1.0 + x * x;
    return s * s * (std::atan(x) / x);
}

double eval_h(double p, double u) {
    p = checked_p(p);
    check_u(u);
    return p * std::log1p(u) + kLogPiOver4;
}

double u_zero_of_h(double p) {
    p = checked_p(p);
    // (4/pi)^(1/p) - 1 = expm1(log(4/pi) / p)
    return std::expm1(-kLogPiOver4 / p);
}

double g_limit_at_zero(double p) {
    p = checked_p(p);
    return 1.0 / (3.0 * p);
}

double g_limit_at_one(double p) {
    p = checked_p(p);
    constexpr double pi = std::numbers::pi;
    return (pi - 2.0) / ((2.0 * p - 1.0) * pi + 2.0);
}

}  // namespace seiffert
