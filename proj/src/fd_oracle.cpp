#include "fsbeam/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "fsbeam/error.hpp"

namespace fsbeam {

namespace {

constexpr int kMaxRefinementSteps = 8;

// Error-free transformations for a compensated dot product.
void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double z = s - a;
    e = (a - (s - z)) + (b - z);
}

void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

}  // namespace

FdSolution::FdSolution(const BeamProblem& problem, int n, ShearConvention shear)
    : n_(n), h_(problem.model.a() / n), EI_(problem.model.EI()) {
    if (n < kMinFdIntervals) {
        throw InvalidInput("finite-difference grid needs at least " + std::to_string(kMinFdIntervals) +
                           " intervals, got " + std::to_string(n));
    }
    const FoundationBeamModel& model = problem.model;
    const double a = model.a();
    const double h = h_;
    const double EI = model.EI();
    const int unknowns = n + 5;
    const auto col = [](int node) { return node + 2; };

    // Rows are scaled so that stencil coefficients are small integers.
    const double c4 = 1.0;
    const double c2 = model.Gp() * h * h / EI;
    const double c0 = model.k() * h * h * h * h / EI;
    const double load_scale = h * h * h * h / EI;

    std::vector<Eigen::Triplet<double>> entries;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(unknowns);
    for (int i = 0; i <= n; ++i) {
        const int r = i;
        entries.emplace_back(r, col(i - 2), c4);
        entries.emplace_back(r, col(i - 1), -4.0 * c4);
        entries.emplace_back(r, col(i), 6.0 * c4);
        entries.emplace_back(r, col(i + 1), -4.0 * c4);
        entries.emplace_back(r, col(i + 2), c4);
        // kept apart from the integer stencil; summing them would round away c0
        entries.emplace_back(r, col(i - 1), -c2);
        entries.emplace_back(r, col(i), 2.0 * c2);
        entries.emplace_back(r, col(i + 1), -c2);
        entries.emplace_back(r, col(i), c0);
        if (problem.load.has_smooth_part()) {
            rhs(r) = load_scale * problem.load.smooth_density(a, std::min(i * h, a));
        }
    }
    for (const PointLoad& p : problem.load.points) {
        const double s = p.x0 / h;
        const int j = std::clamp(static_cast<int>(std::floor(s)), 0, n - 1);
        const double t = s - j;
        rhs(j) += load_scale * p.P * (1.0 - t) / h;
        rhs(j + 1) += load_scale * p.P * t / h;
    }

    int row = n + 1;
    const auto end_rows = [&](const EndCondition& end, int i) {
        const auto w_row = [&](double v) {
            entries.emplace_back(row, col(i), 1.0);
            rhs(row++) = v;
        };
        const auto theta_row = [&](double v) {
            entries.emplace_back(row, col(i + 1), 0.5);
            entries.emplace_back(row, col(i - 1), -0.5);
            rhs(row++) = h * v;
        };
        const auto moment_row = [&](double v) {
            entries.emplace_back(row, col(i + 1), 1.0);
            entries.emplace_back(row, col(i), -2.0);
            entries.emplace_back(row, col(i - 1), 1.0);
            rhs(row++) = h * h * v / EI;
        };
        const auto shear_row = [&](double v) {
            double slope_coef = 0.0;
            if (shear == ShearConvention::Variational) {
                slope_coef = model.Gp() * h * h / EI;
                v = -v;
            }
            entries.emplace_back(row, col(i + 2), 0.5);
            entries.emplace_back(row, col(i + 1), -1.0);
            entries.emplace_back(row, col(i - 1), 1.0);
            if (slope_coef != 0.0) {
                entries.emplace_back(row, col(i + 1), -0.5 * slope_coef);
                entries.emplace_back(row, col(i - 1), 0.5 * slope_coef);
            }
            entries.emplace_back(row, col(i - 2), -0.5);
            rhs(row++) = h * h * h * v / EI;
        };
        switch (end.kind) {
            case EndKind::Clamped:
                w_row(end.value1);
                theta_row(end.value2);
                break;
            case EndKind::Simple:
                w_row(end.value1);
                moment_row(end.value2);
                break;
            case EndKind::Free:
                moment_row(end.value1);
                shear_row(end.value2);
                break;
        }
    };
    end_rows(problem.bc.left, 0);
    end_rows(problem.bc.right, n);

    Eigen::SparseMatrix<double> A(unknowns, unknowns);
    A.setFromTriplets(entries.begin(), entries.end());
    A.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) {
        throw SolverFailure("finite-difference system for " + problem.bc.label() +
                            " ends is singular: " + lu.lastErrorMessage());
    }
    Eigen::VectorXd x = lu.solve(rhs);

    // Refinement against residuals of the unsummed entries, each row
    // accumulated with a compensated dot product.
    std::vector<std::vector<std::pair<int, double>>> rows(static_cast<std::size_t>(unknowns));
    for (const auto& t : entries) rows[static_cast<std::size_t>(t.row())].emplace_back(t.col(), t.value());
    const auto residual = [&](const Eigen::VectorXd& v) {
        Eigen::VectorXd r(unknowns);
        for (int i = 0; i < unknowns; ++i) {
            double sum = rhs(i), tail = 0.0;
            for (const auto& [c, value] : rows[static_cast<std::size_t>(i)]) {
                double p, pe, se;
                two_prod(-value, v(c), p, pe);
                two_sum(sum, p, sum, se);
                tail += pe + se;
            }
            r(i) = sum + tail;
        }
        return r;
    };
    Eigen::VectorXd r = residual(x);
    for (int step = 0; step < kMaxRefinementSteps; ++step) {
        const Eigen::VectorXd dx = lu.solve(r);
        x += dx;
        r = residual(x);
        if (dx.cwiseAbs().maxCoeff() <= 1e-17 * x.cwiseAbs().maxCoeff()) break;
    }
    double a_norm = 0.0;
    for (int c = 0; c < A.outerSize(); ++c) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, c); it; ++it) {
            a_norm = std::max(a_norm, std::abs(it.value()));
        }
    }
    const double scale = a_norm * x.cwiseAbs().maxCoeff() + rhs.cwiseAbs().maxCoeff();
    residual_ = scale > 0.0 ? r.cwiseAbs().maxCoeff() / scale : 0.0;

    w_.assign(x.data(), x.data() + unknowns);
    fields_.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) fields_.push_back(node_fields(i));
}

FieldSample FdSolution::node_fields(int i) const {
    const auto w = [&](int j) { return w_[static_cast<std::size_t>(j + 2)]; };
    const double h = h_;
    return {i * h, w(i), (w(i + 1) - w(i - 1)) / (2.0 * h),
            EI_ * (w(i + 1) - 2.0 * w(i) + w(i - 1)) / (h * h),
            EI_ * (w(i + 2) - 2.0 * w(i + 1) + 2.0 * w(i - 1) - w(i - 2)) / (2.0 * h * h * h)};
}

FieldSample FdSolution::eval(double x) const {
    const double s = x / h_;
    const int j = std::clamp(static_cast<int>(std::floor(s)) - 1, 0, n_ - 3);
    FieldSample out{x, 0.0, 0.0, 0.0, 0.0};
    for (int p = 0; p < 4; ++p) {
        double l = 1.0;
        for (int q = 0; q < 4; ++q) {
            if (q != p) l *= (s - (j + q)) / static_cast<double>(p - q);
        }
        const FieldSample& f = fields_[static_cast<std::size_t>(j + p)];
        out.w += l * f.w;
        out.theta += l * f.theta;
        out.moment += l * f.moment;
        out.shear += l * f.shear;
    }
    return out;
}

FieldFunction FdSolution::as_function() const {
    return [this](double x) { return eval(x); };
}

}  // namespace fsbeam
