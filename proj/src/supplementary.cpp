#include "fsbeam/supplementary.hpp"

#include <sstream>

#include "fsbeam/error.hpp"
#include "fsbeam/polynomial.hpp"

namespace fsbeam {

namespace {

void check_order(int order) {
    if (order < 1 || order > kMaxSupplementaryOrder) {
        std::ostringstream os;
        os << "supplementary interpolation order must be in [1, " << kMaxSupplementaryOrder
           << "], got " << order;
        throw InvalidInput(os.str());
    }
}

}  // namespace

LoadInterpolant fit_load_polynomial(const LoadSpec& load, int order, double a) {
    check_order(order);
    if (!load.has_smooth_part()) {
        throw InvalidInput("supplementary solution requires a smooth (distributed) load");
    }
    const auto n = static_cast<Eigen::Index>(order) + 1;
    LoadInterpolant fit;
    fit.nodes.resize(static_cast<std::size_t>(n));
    fit.samples.resize(static_cast<std::size_t>(n));
    Eigen::MatrixXd vandermonde(n, n);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = (i == n - 1) ? a : a * static_cast<double>(i) / order;
        const double xi = static_cast<double>(i) / order;
        fit.nodes[static_cast<std::size_t>(i)] = x;
        fit.samples[static_cast<std::size_t>(i)] = load.smooth_density(a, x);
        rhs(i) = fit.samples[static_cast<std::size_t>(i)];
        double power = 1.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            vandermonde(i, j) = power;
            power *= xi;
        }
    }
    const Eigen::VectorXd c = vandermonde.partialPivLu().solve(rhs);
    fit.coeffs.assign(c.data(), c.data() + c.size());
    return fit;
}

Eigen::MatrixXd assemble_Rs(const FoundationBeamModel& model, int order) {
    check_order(order);
    const auto n = static_cast<Eigen::Index>(order) + 1;
    const double a = model.a();
    const double a2 = a * a;
    Eigen::MatrixXd Rs = Eigen::MatrixXd::Zero(n, n);
    // Row i (1-based) collects the coefficient of (x/a)^(i-1).
    for (Eigen::Index r = 0; r < n; ++r) {
        const double i = static_cast<double>(r + 1);
        Rs(r, r) = model.k();
        if (r + 2 < n) Rs(r, r + 2) = -model.Gp() / a2 * i * (i + 1.0);
        if (r + 4 < n) Rs(r, r + 4) = model.EI() / (a2 * a2) * i * (i + 1.0) * (i + 2.0) * (i + 3.0);
    }
    return Rs;
}

std::vector<double> solve_supplementary(const Eigen::MatrixXd& Rs,
                                        const std::vector<double>& load_coeffs) {
    const auto n = Rs.rows();
    if (Rs.cols() != n || static_cast<Eigen::Index>(load_coeffs.size()) != n) {
        throw InvalidInput("supplementary system size mismatch");
    }
    std::vector<double> x(static_cast<std::size_t>(n));
    for (Eigen::Index r = n; r-- > 0;) {
        double s = load_coeffs[static_cast<std::size_t>(r)];
        for (Eigen::Index c = r + 1; c < n; ++c) s -= Rs(r, c) * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(r)] = s / Rs(r, r);
    }
    return x;
}

SupplementarySolution SupplementarySolution::build(const FoundationBeamModel& model,
                                                   const LoadSpec& load, int order) {
    SupplementarySolution s;
    s.a_ = model.a();
    if (order == 0) return s;
    s.order_ = order;
    s.interp_ = fit_load_polynomial(load, order, model.a());
    s.coeffs_ = solve_supplementary(assemble_Rs(model, order), s.interp_.coeffs);
    return s;
}

double SupplementarySolution::eval(int derivative, double x) const {
    if (empty()) return 0.0;
    return scaled_monomial_derivative(coeffs_, a_, derivative, x);
}

double SupplementarySolution::eval_load(double x) const {
    if (empty()) return 0.0;
    return scaled_monomial_derivative(interp_.coeffs, a_, 0, x);
}

}  // namespace fsbeam
