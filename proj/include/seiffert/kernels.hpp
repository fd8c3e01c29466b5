#pragma once

// Auxiliary functions of the sharpness argument for Q_{t,p} versus the
// Seiffert mean. With x = |a-b|/(a+b) and u = (2t-1)^2,
//
//   log(Q_{t,p}(a,b) / T(a,b)) = f_{u,p}(x) = p log(1 + u x^2) + log(arctan(x)/x),
//
// so the sign of f on (0, 1) decides which side of T the family lies on.

namespace seiffert {

/// x in the open interval (0, 1).
class KernelPoint {
public:
    explicit KernelPoint(double x);

    double value() const noexcept { return x_; }

private:
    double x_;
};

/// u in [0, 1], p >= 1/2.
class KernelParams {
public:
    KernelParams(double u, double p);

    double u() const noexcept { return u_; }
    double p() const noexcept { return p_; }

private:
    double u_;
    double p_;
};

/// Below this x, log(arctan(x)/x) inside f switches to its Taylor series.
inline constexpr double kKernelSeriesCutoff = 1e-2;

/// Below this x, the numerator of g switches to its Taylor series. The direct
/// form loses about eps/x^2 in relative accuracy, so the switch sits higher.
inline constexpr double kGSeriesCutoff = 1e-1;

/// f_{u,p}(x) = p log(1 + u x^2) - log x + log arctan x.
double eval_f(const KernelParams& params, KernelPoint x);

/// f'_{u,p}(x) in factored form: g2(x) / (x (1 + u x^2) arctan x) * (u - g(x)),
/// where g2(x) = (2p-1) x^2 arctan x + x^3/(1+x^2) > 0. Its sign is sign(u - g(x)).
double eval_f_derivative(const KernelParams& params, KernelPoint x);

/// g(x) = [(1+x^2) arctan x - x] / [(2p-1) x^2 (1+x^2) arctan x + x^3].
/// Strictly decreasing from 1/(3p) at 0+ to (pi-2)/((2p-1)pi+2) at 1-.
double eval_g(double p, KernelPoint x);

/// g1'(x)/g2'(x) = 1 / ((2p-1) phi(x) + p x^2 + p + 1).
double eval_g_derivative_ratio(double p, KernelPoint x);

/// phi(x) = (1+x^2)^2 arctan(x) / x, increasing from 1 to pi on (0, 1).
double eval_phi(KernelPoint x);

/// h_p(u) = p log(1 + u) + log(pi/4), the x -> 1- limit of f.
double eval_h(double p, double u);

/// (4/pi)^(1/p) - 1, the unique zero of h_p.
double u_zero_of_h(double p);

double g_limit_at_zero(double p);
double g_limit_at_one(double p);

namespace detail {

// log(arctan(x)/x) by each route; the series route is only accurate for
// small x. Exposed so tests can compare the two at the crossover.
double log_atan_ratio_series(double x);
double log_atan_ratio_direct(double x);

// [(1+x^2) arctan x - x] / x^3 by each route.
double g_numerator_over_cube_series(double x);
double g_numerator_over_cube_direct(double x);

}  // namespace detail

}  // namespace seiffert
