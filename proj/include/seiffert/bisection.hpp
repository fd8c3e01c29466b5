#pragma once

#include <cmath>

namespace seiffert {

/// Boundary of a predicate that holds at `lo` and fails at `hi`. Halves the
/// bracket at most `max_iters` times, stopping early once it is no wider than
/// `tol`, and returns the final midpoint. The caller guarantees the bracket.
template <class Predicate>
double bisect_boundary(Predicate&& holds, double lo, double hi, int max_iters, double tol = 0.0) {
    for (int i = 0; i < max_iters && std::abs(hi - lo) > tol; ++i) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid == lo || mid == hi) break;
        if (holds(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo + (hi - lo) / 2.0;
}

}  // namespace seiffert
