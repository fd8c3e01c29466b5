#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "seiffert/kernels.hpp"

namespace seiffert {

struct ScanConfig {
    std::size_t grid_size = 4096;
    double x_min = 1e-6;
    double x_max = 1.0 - 1e-9;
    int refine_iters = 60;

    /// Throws DomainError unless 0 < x_min < x_max < 1, grid_size >= 16 and
    /// refine_iters > 0.
    void validate() const;
};

/// Sorted, duplicate-free union of a uniform grid of `grid_size` points on
/// [x_min, x_max] and the geometric sequence x_max * 2^-k (k >= 1) down to x_min.
std::vector<double> scan_grid(const ScanConfig& cfg);

enum class Execution { serial, parallel };

/// out[i] = f_{u,p}(xs[i]). Every xs[i] must lie in (0, 1).
void evaluate_f_serial(const KernelParams& params, std::span<const double> xs,
                       std::span<double> out);

/// Same values as evaluate_f_serial, computed with an OpenMP parallel loop.
void evaluate_f_parallel(const KernelParams& params, std::span<const double> xs,
                         std::span<double> out);

std::vector<double> evaluate_f(const KernelParams& params, std::span<const double> xs,
                               Execution exec = Execution::parallel);

}  // namespace seiffert
