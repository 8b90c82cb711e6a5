#include "fsbeam/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fsbeam/error.hpp"

namespace fsbeam {

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw InvalidInput("Gauss-Legendre rule needs at least one point");
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

QuadraturePoints composite_rule(std::span<const double> breakpoints, int points_per_panel) {
    const GaussLegendreRule rule = gauss_legendre(points_per_panel);
    QuadraturePoints q;
    if (breakpoints.size() < 2) return q;
    const std::size_t panels = breakpoints.size() - 1;
    q.x.reserve(panels * rule.nodes.size());
    q.w.reserve(panels * rule.nodes.size());
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = breakpoints[p];
        const double hi = breakpoints[p + 1];
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            q.x.push_back(mid + half * rule.nodes[i]);
            q.w.push_back(half * rule.weights[i]);
        }
    }
    return q;
}

std::vector<double> uniform_breakpoints(double a, int panels) {
    if (panels < 1) throw InvalidInput("need at least one quadrature panel");
    std::vector<double> b(static_cast<std::size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i) b[static_cast<std::size_t>(i)] = a * i / panels;
    b.back() = a;
    return b;
}

std::vector<double> graded_breakpoints(double a, int panels, double ratio, int levels) {
    std::vector<double> b = uniform_breakpoints(a, panels);
    const double h = a / panels;
    std::vector<double> extra;
    double width = h;
    for (int l = 0; l < levels; ++l) {
        width *= ratio;
        extra.push_back(width);
        extra.push_back(a - width);
    }
    return merge_breakpoints(std::move(b), extra);
}

std::vector<double> merge_breakpoints(std::vector<double> base, std::span<const double> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    std::sort(base.begin(), base.end());
    const double span = base.empty() ? 0.0 : base.back() - base.front();
    const double tol = 1e-14 * span;
    std::vector<double> out;
    out.reserve(base.size());
    for (double v : base) {
        if (out.empty() || v - out.back() > tol) out.push_back(v);
    }
    return out;
}

namespace {

double composite_sum(const std::function<double(double)>& f, std::span<const double> segments,
                     int panels_per_segment, const GaussLegendreRule& rule) {
    double sum = 0.0;
    for (std::size_t s = 0; s + 1 < segments.size(); ++s) {
        const double lo = segments[s];
        const double width = (segments[s + 1] - lo) / panels_per_segment;
        for (int p = 0; p < panels_per_segment; ++p) {
            const double plo = lo + width * p;
            const double half = 0.5 * width;
            const double mid = plo + half;
            double panel = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
            }
            sum += half * panel;
        }
    }
    return sum;
}

}  // namespace

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f,
                                  std::span<const double> breakpoints, double rel_tol,
                                  double abs_tol, int min_panels, int max_panels,
                                  int points_per_panel) {
    if (breakpoints.size() < 2) throw InvalidInput("integration interval is empty");
    const GaussLegendreRule rule = gauss_legendre(points_per_panel);
    int panels = std::max(1, min_panels);
    AdaptiveResult result;
    double previous = composite_sum(f, breakpoints, panels, rule);
    while (panels < max_panels) {
        panels *= 2;
        const double current = composite_sum(f, breakpoints, panels, rule);
        result.value = current;
        result.error_estimate = std::abs(current - previous);
        result.panels = panels;
        if (result.error_estimate <= std::max(rel_tol * std::abs(current), abs_tol)) {
            result.converged = true;
            return result;
        }
        previous = current;
    }
    return result;
}

}  // namespace fsbeam
