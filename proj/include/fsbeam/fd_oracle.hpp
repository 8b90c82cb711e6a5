#pragma once

#include <vector>

#include "fsbeam/fields.hpp"
#include "fsbeam/model.hpp"

namespace fsbeam {

/// How the free-end shear condition is read.
///   Literal:     EI w''' = Q
///   Variational: EI w''' - Gp w' = -Q  (natural condition of the energy
///                functional used by the variational solver)
/// Both agree when Q = 0 and Gp = 0; moment conditions are identical.
enum class ShearConvention { Literal, Variational };

constexpr int kMinFdIntervals = 64;

/// Central finite-difference solution of EI w'''' - Gp w'' + k w = q on
/// n + 1 uniform nodes with two ghost nodes per end.
class FdSolution {
public:
    FdSolution(const BeamProblem& problem, int n, ShearConvention shear = ShearConvention::Literal);

    int intervals() const noexcept { return n_; }
    double spacing() const noexcept { return h_; }
    /// Node i = 0..n.
    double node(int i) const { return i * h_; }
    double w_node(int i) const { return w_[static_cast<std::size_t>(i + 2)]; }
    FieldSample node_fields(int i) const;

    /// Cubic Lagrange interpolation of the nodal fields.
    FieldSample eval(double x) const;
    FieldFunction as_function() const;

    /// Normwise backward error max|A x - b| / (max|A| max|x| + max|b|) after refinement.
    double relative_residual() const noexcept { return residual_; }

private:
    int n_;
    double h_;
    double EI_;
    std::vector<double> w_;  // nodes -2 .. n+2
    std::vector<FieldSample> fields_;
    double residual_ = 0.0;
};

}  // namespace fsbeam
