#pragma once

#include <span>

#include <Eigen/Dense>

#include "fsbeam/homogeneous_basis.hpp"
#include "fsbeam/supplementary.hpp"

namespace fsbeam {

/// Boundary function basis Phi1^T(x) = p1^T(x) R1^{-1}, where
/// R1 = [p1(a); p1''(a); p1(0); p1''(0)]. Phi1 interpolates
/// q1 = [w(a), w''(a), w(0), w''(0)].
class BoundaryFunctionSystem {
public:
    /// Throws SolverFailure when R1 is numerically singular.
    explicit BoundaryFunctionSystem(HomogeneousBasis basis);

    /// Builds the basis for the model; a singular normalized complex-root
    /// system is retried with the decaying-exponential spanning set.
    static BoundaryFunctionSystem assemble(const FoundationBeamModel& model,
                                           double rel_tol = kDefaultRegimeTolerance);

    const HomogeneousBasis& basis() const noexcept { return basis_; }
    const Eigen::Matrix4d& R1() const noexcept { return R1_; }
    /// Reciprocal condition estimate of R1.
    double rcond() const noexcept { return rcond_; }

    /// order-th derivative of the j-th component of Phi1 at x.
    double eval(int j, int order, double x) const { return eval_all(order, x)(j); }
    Eigen::Vector4d eval_all(int order, double x) const;

    /// Evaluates p1^(order)(x)^T C for an arbitrary 4x4 coefficient map C.
    Eigen::Vector4d combine(const Eigen::Matrix4d& C, int order, double x) const;

    /// R1^{-1}
    const Eigen::Matrix4d& coefficient_map() const noexcept { return R1_inv_; }

private:
    HomogeneousBasis basis_;
    Eigen::Matrix4d R1_;
    Eigen::Matrix4d R1_inv_;
    double rcond_ = 0.0;
};

Eigen::Matrix4d assemble_R1(const HomogeneousBasis& basis);

/// Change of unknowns from q1 to the displacement data
/// q_b = [w(0), theta(0), w(a), theta(a)]:
///   Phi_b^T   = Phi1^T R_f^{-1},   R_f = [Phi1(0); Phi1'(0); Phi1(a); Phi1'(a)]
///   Phi_0R,m  = sin(alpha_m x) - Phi_b^T [0, alpha_m, 0, alpha_m (-1)^m]^T
///   Phi_sR    = w_s - Phi_b^T [w_s(0), w_s'(0), w_s(a), w_s'(a)]^T
class TransformedBases {
public:
    /// M sine terms; supp may be empty (q_qs = 0).
    TransformedBases(BoundaryFunctionSystem system, int M,
                     SupplementarySolution supp = SupplementarySolution());

    const BoundaryFunctionSystem& system() const noexcept { return system_; }
    const SupplementarySolution& supplementary() const noexcept { return supp_; }
    const Eigen::Matrix4d& Rf() const noexcept { return Rf_; }
    int terms() const noexcept { return M_; }
    double length() const noexcept { return system_.basis().length(); }

    Eigen::Vector4d phi_b(int order, double x) const;
    /// m is 1-based.
    double phi_0R(int m, int order, double x) const;
    double w_sR(int order, double x) const;

    /// Displacement trace [f(0), f'(0), f(a), f'(a)] of sum_m q02_m sin(alpha_m x).
    Eigen::Vector4d sine_trace(std::span<const double> q02) const;

    /// w^(order)(x) = sum_m q02_m Phi_0R,m + Phi_b^T q_b + Phi_sR (transformed form).
    double evaluate(std::span<const double> q02, const Eigen::Vector4d& q_b, int order,
                    double x) const;

private:
    BoundaryFunctionSystem system_;
    int M_;
    SupplementarySolution supp_;
    Eigen::Matrix4d Rf_;
    Eigen::Matrix4d phi_b_map_;  // R1^{-1} R_f^{-1}
    Eigen::Vector4d supp_trace_ = Eigen::Vector4d::Zero();
};

}  // namespace fsbeam
