#include "fsbeam/boundary_function.hpp"

#include <sstream>

#include "fsbeam/error.hpp"
#include "fsbeam/particular.hpp"

namespace fsbeam {

namespace {

constexpr double kMinRcond = 1e-14;

Eigen::Vector4d to_vector(const std::array<double, 4>& v) { return {v[0], v[1], v[2], v[3]}; }

}  // namespace

Eigen::Matrix4d assemble_R1(const HomogeneousBasis& basis) {
    const double a = basis.length();
    Eigen::Matrix4d R1;
    R1.row(0) = to_vector(basis.eval_all(0, a)).transpose();
    R1.row(1) = to_vector(basis.eval_all(2, a)).transpose();
    R1.row(2) = to_vector(basis.eval_all(0, 0.0)).transpose();
    R1.row(3) = to_vector(basis.eval_all(2, 0.0)).transpose();
    return R1;
}

BoundaryFunctionSystem::BoundaryFunctionSystem(HomogeneousBasis basis)
    : basis_(std::move(basis)), R1_(assemble_R1(basis_)) {
    if (!R1_.allFinite()) throw SolverFailure("R1 has non-finite entries");
    const Eigen::PartialPivLU<Eigen::Matrix4d> lu(R1_);
    rcond_ = lu.rcond();
    if (!(rcond_ > kMinRcond)) {
        std::ostringstream os;
        os << "boundary-function matrix R1 is singular (rcond " << rcond_ << ", "
           << regime_name(basis_.regime()) << " roots)";
        throw SolverFailure(os.str());
    }
    R1_inv_ = lu.inverse();
}

BoundaryFunctionSystem BoundaryFunctionSystem::assemble(const FoundationBeamModel& model,
                                                        double rel_tol) {
    HomogeneousBasis basis = HomogeneousBasis::for_model(model, rel_tol);
    try {
        return BoundaryFunctionSystem(basis);
    } catch (const SolverFailure&) {
        if (basis.spanning_set() == SpanningSet::Normalized &&
            std::holds_alternative<ComplexConjugate>(basis.regime())) {
            return BoundaryFunctionSystem(HomogeneousBasis(
                basis.regime(), basis.length(), SpanningSet::DecayingExponential));
        }
        throw;
    }
}

Eigen::Vector4d BoundaryFunctionSystem::eval_all(int order, double x) const {
    return combine(R1_inv_, order, x);
}

Eigen::Vector4d BoundaryFunctionSystem::combine(const Eigen::Matrix4d& C, int order,
                                                double x) const {
    return C.transpose() * to_vector(basis_.eval_all(order, x));
}

TransformedBases::TransformedBases(BoundaryFunctionSystem system, int M,
                                   SupplementarySolution supp)
    : system_(std::move(system)), M_(M), supp_(std::move(supp)) {
    if (M < 0) throw InvalidInput("number of sine terms must be non-negative");
    const double a = length();
    Rf_.row(0) = system_.eval_all(0, 0.0).transpose();
    Rf_.row(1) = system_.eval_all(1, 0.0).transpose();
    Rf_.row(2) = system_.eval_all(0, a).transpose();
    Rf_.row(3) = system_.eval_all(1, a).transpose();
    const Eigen::PartialPivLU<Eigen::Matrix4d> lu(Rf_);
    if (!(lu.rcond() > kMinRcond)) {
        std::ostringstream os;
        os << "displacement-trace matrix R_f is singular (rcond " << lu.rcond() << ", "
           << regime_name(system_.basis().regime()) << " roots)";
        throw SolverFailure(os.str());
    }
    phi_b_map_ = system_.coefficient_map() * lu.inverse();
    if (!supp_.empty()) {
        supp_trace_ = {supp_.eval(0, 0.0), supp_.eval(1, 0.0), supp_.eval(0, a),
                       supp_.eval(1, a)};
    }
}

Eigen::Vector4d TransformedBases::phi_b(int order, double x) const {
    return system_.combine(phi_b_map_, order, x);
}

double TransformedBases::phi_0R(int m, int order, double x) const {
    if (m < 1) throw std::out_of_range("sine term index is 1-based");
    const double alpha = sine_frequency(m, length());
    const Eigen::Vector4d b = phi_b(order, x);
    const double trace_a = (m % 2 == 0) ? alpha : -alpha;
    std::vector<double> single(static_cast<std::size_t>(m), 0.0);
    single.back() = 1.0;
    return sine_series_derivative(single, length(), order, x) - alpha * b(1) - trace_a * b(3);
}

double TransformedBases::w_sR(int order, double x) const {
    if (supp_.empty()) return 0.0;
    return supp_.eval(order, x) - phi_b(order, x).dot(supp_trace_);
}

Eigen::Vector4d TransformedBases::sine_trace(std::span<const double> q02) const {
    const double a = length();
    return {0.0, sine_series_derivative(q02, a, 1, 0.0), 0.0, sine_series_derivative(q02, a, 1, a)};
}

double TransformedBases::evaluate(std::span<const double> q02, const Eigen::Vector4d& q_b,
                                  int order, double x) const {
    const Eigen::Vector4d correction = q_b - sine_trace(q02) - supp_trace_;
    return sine_series_derivative(q02, length(), order, x) + phi_b(order, x).dot(correction) +
           supp_.eval(order, x);
}

}  // namespace fsbeam
