#include "fsbeam/linear_solve.hpp"

#include <limits>
#include <sstream>

#include "fsbeam/error.hpp"

namespace fsbeam {

LinearSolveReport solve_linear_system(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    if (A.rows() != A.cols()) throw InvalidInput("solve_linear_system: matrix is not square");
    if (b.size() != A.rows()) throw InvalidInput("solve_linear_system: right-hand side size mismatch");

    LinearSolveReport report;
    if (A.rows() == 0) return report;

    const double norm_a = A.cwiseAbs().rowwise().sum().maxCoeff();
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double threshold =
        static_cast<double>(A.rows()) * std::numeric_limits<double>::epsilon() * norm_a;
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    if (!(norm_a > 0.0) || pivots.minCoeff() <= threshold) {
        std::ostringstream os;
        os << "numerically singular " << A.rows() << "x" << A.cols()
           << " system (smallest pivot " << pivots.minCoeff() << ", ||A|| = " << norm_a << ")";
        throw SolverFailure(os.str());
    }

    report.x = lu.solve(b);
    report.residual = (A * report.x - b).cwiseAbs().maxCoeff();
    const double scale = norm_a * report.x.cwiseAbs().maxCoeff();
    report.relative_residual = scale > 0.0 ? report.residual / scale : 0.0;
    return report;
}

}  // namespace fsbeam
