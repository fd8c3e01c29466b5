#include "seiffert/scan.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "seiffert/errors.hpp"

namespace seiffert {

namespace {

void check_points(std::span<const double> xs, std::span<double> out) {
    if (xs.size() != out.size()) {
        throw DomainError("output span size does not match the grid");
    }
    for (double x : xs) {
        if (!(x > 0.0 && x < 1.0)) {
            throw DomainError("grid point outside (0, 1): " + std::to_string(x));
        }
    }
}

}  // namespace

void ScanConfig::validate() const {
    if (!(x_min > 0.0 && x_min < x_max && x_max < 1.0)) {
        throw DomainError("scan bounds must satisfy 0 < x_min < x_max < 1");
    }
    if (grid_size < 16) {
        throw DomainError("grid_size must be at least 16, got " + std::to_string(grid_size));
    }
    if (refine_iters <= 0) {
        throw DomainError("refine_iters must be positive");
    }
}

std::vector<double> scan_grid(const ScanConfig& cfg) {
    cfg.validate();
    std::vector<double> xs;
    xs.reserve(cfg.grid_size + 64);
    const double step = (cfg.x_max - cfg.x_min) / static_cast<double>(cfg.grid_size - 1);
    for (std::size_t i = 0; i + 1 < cfg.grid_size; ++i) {
        xs.push_back(cfg.x_min + step * static_cast<double>(i));
    }
    xs.push_back(cfg.x_max);
    for (double x = cfg.x_max / 2.0; x >= cfg.x_min; x /= 2.0) {
        xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

void evaluate_f_serial(const KernelParams& params, std::span<const double> xs,
                       std::span<double> out) {
    check_points(xs, out);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out[i] = eval_f(params, KernelPoint(xs[i]));
    }
}

void evaluate_f_parallel(const KernelParams& params, std::span<const double> xs,
                         std::span<double> out) {
    check_points(xs, out);
    const auto n = static_cast<std::int64_t>(xs.size());
    // Points are validated above, so KernelPoint cannot throw inside the region.
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[i] = eval_f(params, KernelPoint(xs[i]));
    }
}

std::vector<double> evaluate_f(const KernelParams& params, std::span<const double> xs,
                               Execution exec) {
    std::vector<double> out(xs.size());
    if (exec == Execution::parallel) {
        evaluate_f_parallel(params, xs, out);
    } else {
        evaluate_f_serial(params, xs, out);
    }
    return out;
}

}  // namespace seiffert
