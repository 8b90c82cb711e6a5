#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fsbeam/model.hpp"

namespace fsbeam {

inline constexpr int kMaxSupplementaryOrder = 10;

/// Interpolating polynomial of the smooth load on uniform nodes.
struct LoadInterpolant {
    std::vector<double> nodes;    ///< x_n = n a / N, n = 0..N
    std::vector<double> samples;  ///< smooth load at the nodes
    std::vector<double> coeffs;   ///< q_s(x) = sum_j coeffs[j] (x/a)^j
};

/// Fits a degree-`order` polynomial through the smooth load (point loads are
/// never sampled). Requires 1 <= order <= kMaxSupplementaryOrder.
LoadInterpolant fit_load_polynomial(const LoadSpec& load, int order, double a);

/// Upper-triangular operator matrix mapping polynomial coefficients of w_s to
/// those of EI w_s'''' - Gp w_s'' + k w_s, in the (x/a)^j basis.
Eigen::MatrixXd assemble_Rs(const FoundationBeamModel& model, int order);

/// Back substitution of the upper-triangular system Rs a_s = a_qs.
std::vector<double> solve_supplementary(const Eigen::MatrixXd& Rs,
                                        const std::vector<double>& load_coeffs);

/// Polynomial solution w_s with EI w_s'''' - Gp w_s'' + k w_s = q_s exactly.
/// Order 0 means "absent": every evaluation returns zero.
class SupplementarySolution {
public:
    SupplementarySolution() = default;

    static SupplementarySolution build(const FoundationBeamModel& model, const LoadSpec& load,
                                       int order);

    int order() const noexcept { return order_; }
    bool empty() const noexcept { return order_ == 0; }
    double length() const noexcept { return a_; }

    const LoadInterpolant& interpolant() const noexcept { return interp_; }
    /// Coefficients of w_s in the (x/a)^j basis.
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    /// d^order w_s / dx^order
    double eval(int derivative, double x) const;
    /// q_s(x)
    double eval_load(double x) const;

private:
    int order_ = 0;
    double a_ = 1.0;
    LoadInterpolant interp_;
    std::vector<double> coeffs_;
};

}  // namespace fsbeam
