#pragma once

// 50-digit reference evaluations. Written straight from the defining
// formulas with no series, no factorization and no shared code with the
// library, so they can check the double-precision kernels independently.

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using hp = boost::multiprecision::cpp_bin_float_50;

inline hp pi() {
    return boost::math::constants::pi<hp>();
}

inline hp seiffert(hp a, hp b) {
    if (a == b) return a;
    return (a - b) / (2 * atan((a - b) / (a + b)));
}

inline hp contraharmonic(hp a, hp b) {
    return (a * a + b * b) / (a + b);
}

inline hp q_family(hp a, hp b, hp t, hp p) {
    const hp c = contraharmonic(t * a + (1 - t) * b, t * b + (1 - t) * a);
    return pow(c, p) * pow((a + b) / 2, 1 - p);
}

/// p log(1 + u x^2) - log x + log arctan x
inline hp f(hp u, hp p, hp x) {
    return p * log(1 + u * x * x) - log(x) + log(atan(x));
}

/// Unfactored derivative of f.
inline hp f_prime(hp u, hp p, hp x) {
    return 2 * p * u * x / (1 + u * x * x) + 1 / ((1 + x * x) * atan(x)) - 1 / x;
}

/// Displayed ratio [(1+x^2) arctan x - x] / [(2p-1) x^2 (1+x^2) arctan x + x^3].
inline hp g(hp p, hp x) {
    const hp s = 1 + x * x;
    return (s * atan(x) - x) / ((2 * p - 1) * x * x * s * atan(x) + x * x * x);
}

/// g1(x) = arctan x - x/(1+x^2), g2(x) = (2p-1) x^2 arctan x + x^3/(1+x^2).
inline hp g1(hp x) {
    return atan(x) - x / (1 + x * x);
}

inline hp g2(hp p, hp x) {
    return (2 * p - 1) * x * x * atan(x) + x * x * x / (1 + x * x);
}

/// g1'/g2' by central finite differences in 50-digit arithmetic.
inline hp derivative_ratio_fd(hp p, hp x) {
    const hp h("1e-20");
    const hp d1 = (g1(x + h) - g1(x - h)) / (2 * h);
    const hp d2 = (g2(p, x + h) - g2(p, x - h)) / (2 * h);
    return d1 / d2;
}

/// Zero of the unfactored f' on [lo, hi] by plain bisection to 1e-30.
inline hp extremum(hp u, hp p, hp lo, hp hi) {
    const hp tol("1e-30");
    while (hi - lo > tol) {
        const hp mid = (lo + hi) / 2;
        if (f_prime(u, p, mid) < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

inline double to_double(const hp& v) {
    return v.convert_to<double>();
}

}  // namespace oracle
