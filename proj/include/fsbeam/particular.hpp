#pragma once

#include <span>
#include <vector>

#include "fsbeam/model.hpp"
#include "fsbeam/supplementary.hpp"

namespace fsbeam {

inline constexpr int kDefaultTruncation = 40;

/// alpha_m = m pi / a for the 1-based term index m.
double sine_frequency(int m, double a);

/// order-th derivative of sum_m c[m-1] sin(alpha_m x).
double sine_series_derivative(std::span<const double> coeffs, double a, int order, double x);

/// Half-range sine coefficients of q - q_s (smooth part, closed form for the
/// polynomial part, adaptive quadrature for sampled data) plus the Dirac
/// contributions 2 P sin(alpha_m x0) / a. Returns M coefficients.
std::vector<double> residual_sine_coefficients(const LoadSpec& load,
                                               const SupplementarySolution& supp, int M,
                                               double a);

/// V2_m = V_qp_m / (EI alpha_m^4 + Gp alpha_m^2 + k)
std::vector<double> solve_particular_coefficients(const FoundationBeamModel& model,
                                                  std::span<const double> load_coeffs);

/// Internal function w0(x) = sum_m V2_m sin(alpha_m x), which vanishes with its
/// second derivative at both ends.
class ParticularSolution {
public:
    ParticularSolution(double a, std::vector<double> load_coeffs, std::vector<double> coeffs);

    static ParticularSolution build(const FoundationBeamModel& model, const LoadSpec& load,
                                    const SupplementarySolution& supp, int M);

    int terms() const noexcept { return static_cast<int>(coeffs_.size()); }
    double length() const noexcept { return a_; }
    double alpha(int m) const { return sine_frequency(m, a_); }

    /// Sine coefficients of the residual load q_p.
    const std::vector<double>& load_coeffs() const noexcept { return load_coeffs_; }
    /// Sine coefficients of w0.
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    double eval(int order, double x) const { return sine_series_derivative(coeffs_, a_, order, x); }

private:
    double a_;
    std::vector<double> load_coeffs_;
    std::vector<double> coeffs_;
};

}  // namespace fsbeam
