#pragma once

#include <Eigen/Dense>

namespace fsbeam {

struct LinearSolveReport {
    Eigen::VectorXd x;
    /// ||A x - b||_inf
    double residual = 0.0;
    /// residual / (||A||_inf ||x||_inf), zero when x = 0
    double relative_residual = 0.0;
};

/// Dense solve with partial pivoting. Throws SolverFailure when a pivot falls
/// below n * eps * ||A||_inf.
LinearSolveReport solve_linear_system(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

}  // namespace fsbeam
