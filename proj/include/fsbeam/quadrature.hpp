#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fsbeam {

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Flattened nodes and weights of a composite rule over a partition.
struct QuadraturePoints {
    std::vector<double> x;
    std::vector<double> w;

    std::size_t size() const noexcept { return x.size(); }
};

/// Applies an n-point Gauss-Legendre rule on every panel [b[i], b[i+1]].
QuadraturePoints composite_rule(std::span<const double> breakpoints, int points_per_panel);

/// `panels` equal panels on [0, a].
std::vector<double> uniform_breakpoints(double a, int panels);

/// Uniform partition whose first and last panels are subdivided geometrically
/// (widths h ratio^1 ... h ratio^levels) toward the endpoints.
std::vector<double> graded_breakpoints(double a, int panels, double ratio, int levels);

/// Sorted union of two partitions of the same interval with near-duplicates removed.
std::vector<double> merge_breakpoints(std::vector<double> base, std::span<const double> extra);

struct AdaptiveResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

/// Composite Gauss-Legendre with panel doubling until successive estimates
/// agree to rel_tol (or abs_tol). Every segment between consecutive
/// breakpoints starts with `min_panels` panels.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f,
                                  std::span<const double> breakpoints, double rel_tol,
                                  double abs_tol, int min_panels, int max_panels = 1 << 14,
                                  int points_per_panel = 8);

}  // namespace fsbeam
