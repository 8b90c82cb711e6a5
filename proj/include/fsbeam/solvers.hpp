#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "fsbeam/boundary_function.hpp"
#include "fsbeam/model.hpp"
#include "fsbeam/particular.hpp"
#include "fsbeam/supplementary.hpp"

namespace fsbeam {

/// Fourier coefficient comparison (FCCM) or minimum potential energy (VM).
enum class Method { FCCM, VM };

const char* method_name(Method method);
Method method_from_string(std::string_view name);

/// Composite-series solution w = w0 + w1 + ws, stored either in the
/// boundary-value form (FCCM: q02, q1, ws) or in the displacement-transformed
/// form (VM: q02, q_b).
class MultiscaleSolution {
public:
    struct BoundaryValueForm {
        SupplementarySolution supp;
        ParticularSolution particular;
        BoundaryFunctionSystem system;
        Eigen::Vector4d q1;  ///< [w1(a), w1''(a), w1(0), w1''(0)]
    };
    struct TransformedForm {
        TransformedBases bases;
        std::vector<double> q02;
        Eigen::Vector4d q_b;  ///< [w(0), theta(0), w(a), theta(a)]
    };

    MultiscaleSolution(BeamProblem problem, Method method, BoundaryValueForm form,
                       std::vector<std::string> warnings = {});
    MultiscaleSolution(BeamProblem problem, Method method, TransformedForm form,
                       std::vector<std::string> warnings = {});

    Method method() const noexcept { return method_; }
    const BeamProblem& problem() const noexcept { return problem_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    int terms() const;
    int supplementary_order() const;
    /// Sine coefficients q02 of the internal function.
    const std::vector<double>& sine_coeffs() const;
    const BoundaryFunctionSystem& boundary_system() const;

    bool is_boundary_value_form() const noexcept {
        return std::holds_alternative<BoundaryValueForm>(form_);
    }
    const BoundaryValueForm& boundary_value_form() const { return std::get<BoundaryValueForm>(form_); }
    const TransformedForm& transformed_form() const { return std::get<TransformedForm>(form_); }

    /// d^order w / dx^order at x.
    double derivative(int order, double x) const;

    /// [w(0), theta(0), w(a), theta(a)]
    Eigen::Vector4d displacement_trace() const;

    /// Same field re-expressed as w_0R + w_b + w_sR.
    MultiscaleSolution to_transformed() const;

private:
    BeamProblem problem_;
    Method method_;
    std::variant<BoundaryValueForm, TransformedForm> form_;
    std::vector<std::string> warnings_;
};

/// FCCM: supplementary polynomial of order N1s (0 = none), M sine terms, and
/// q1 from the four prescribed end quantities. Free ends are allowed but
/// produce a convergence warning.
MultiscaleSolution solve_fccm(const BeamProblem& problem, int M, int N1s = 0,
                              double regime_tol = kDefaultRegimeTolerance);

/// Discrete potential energy 0.5 q^T K q - q^T Q over the DOFs
/// [q02 (M sine terms), w(0), theta(0), w(a), theta(a)].
struct EnergySystem {
    TransformedBases bases;
    Eigen::MatrixXd K;
    Eigen::VectorXd Q;
    std::vector<int> fixed_dofs;
    std::vector<double> fixed_values;
    /// max |K_ss(quadrature) - K_ss(closed form)| / max diag, sine-sine block
    double sine_block_deviation = 0.0;
    std::size_t quadrature_points = 0;

    int terms() const noexcept { return bases.terms(); }
    double potential(const Eigen::VectorXd& q) const { return 0.5 * q.dot(K * q) - q.dot(Q); }
};

EnergySystem assemble_energy_system(const BeamProblem& problem, int M,
                                    double regime_tol = kDefaultRegimeTolerance);

/// Minimizes the energy with the displacement-type end data imposed on q_b.
MultiscaleSolution solve_vm(const BeamProblem& problem, int M,
                            double regime_tol = kDefaultRegimeTolerance);
MultiscaleSolution solve_energy_system(const BeamProblem& problem, const EnergySystem& system);

/// [q02; q_b] of a solution in the VM degree-of-freedom ordering. Requires
/// N1s = 0 (no supplementary part).
Eigen::VectorXd energy_coordinates(const MultiscaleSolution& solution);

/// Dispatch on method; VM ignores N1s only when it is zero, otherwise throws.
MultiscaleSolution solve(const BeamProblem& problem, Method method, int M, int N1s = 0);

}  // namespace fsbeam
