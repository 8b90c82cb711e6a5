#include "fsbeam/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fsbeam/error.hpp"
#include "fsbeam/linear_solve.hpp"
#include "fsbeam/quadrature.hpp"

namespace fsbeam {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Prescribed {
    int order;     // derivative of w
    double scale;  // 1 for w, theta; EI for M, Q
    double value;
};

std::array<Prescribed, 2> prescribed_quantities(const EndCondition& end, double EI) {
    switch (end.kind) {
        case EndKind::Clamped: return {{{0, 1.0, end.value1}, {1, 1.0, end.value2}}};
        case EndKind::Simple: return {{{0, 1.0, end.value1}, {2, EI, end.value2}}};
        case EndKind::Free: return {{{2, EI, end.value1}, {3, EI, end.value2}}};
    }
    throw InvalidInput("unknown end kind");
}

double max_root_modulus(const RootRegime& regime) {
    return std::visit(Overloaded{
                          [](const DistinctReal& r) { return r.alpha1; },
                          [](const DoubleReal& r) { return r.alpha3; },
                          [](const ComplexConjugate& r) { return std::hypot(r.alpha5, r.alpha6); },
                      },
                      regime);
}

constexpr int kPointsPerPanel = 8;
constexpr int kMinPanels = 64;
constexpr double kLayerThreshold = 30.0;
constexpr double kGradingRatio = 0.5;
constexpr int kGradingLevels = 8;
constexpr double kSineBlockTolerance = 1e-9;

// Values of [Phi_0R (M), Phi_b (4)] and derivative `order` at x.
void transformed_row(const TransformedBases& tb, int order, double x, Eigen::Ref<Eigen::VectorXd> out) {
    const int M = tb.terms();
    const double a = tb.length();
    const Eigen::Vector4d b = tb.phi_b(order, x);
    const bool odd = order % 2 == 1;
    const double sign = ((order / 2) % 2 == 0) ? 1.0 : -1.0;
    for (int m = 1; m <= M; ++m) {
        const double alpha = sine_frequency(m, a);
        const double trig = odd ? std::cos(alpha * x) : std::sin(alpha * x);
        const double trace_a = (m % 2 == 0) ? alpha : -alpha;
        out(m - 1) = sign * std::pow(alpha, order) * trig - alpha * b(1) - trace_a * b(3);
    }
    out.tail<4>() = b;
}

}  // namespace

const char* method_name(Method method) { return method == Method::FCCM ? "FCCM" : "VM"; }

Method method_from_string(std::string_view name) {
    if (name == "FCCM" || name == "fccm") return Method::FCCM;
    if (name == "VM" || name == "vm") return Method::VM;
    throw InvalidInput("unknown method '" + std::string(name) + "' (expected FCCM or VM)");
}

MultiscaleSolution::MultiscaleSolution(BeamProblem problem, Method method, BoundaryValueForm form,
                                       std::vector<std::string> warnings)
    : problem_(std::move(problem)), method_(method), form_(std::move(form)),
      warnings_(std::move(warnings)) {}

MultiscaleSolution::MultiscaleSolution(BeamProblem problem, Method method, TransformedForm form,
                                       std::vector<std::string> warnings)
    : problem_(std::move(problem)), method_(method), form_(std::move(form)),
      warnings_(std::move(warnings)) {}

int MultiscaleSolution::terms() const { return static_cast<int>(sine_coeffs().size()); }

int MultiscaleSolution::supplementary_order() const {
    return std::visit(Overloaded{
                          [](const BoundaryValueForm& f) { return f.supp.order(); },
                          [](const TransformedForm& f) { return f.bases.supplementary().order(); },
                      },
                      form_);
}

const std::vector<double>& MultiscaleSolution::sine_coeffs() const {
    return std::visit(Overloaded{
                          [](const BoundaryValueForm& f) -> const std::vector<double>& {
                              return f.particular.coeffs();
                          },
                          [](const TransformedForm& f) -> const std::vector<double>& { return f.q02; },
                      },
                      form_);
}

const BoundaryFunctionSystem& MultiscaleSolution::boundary_system() const {
    return std::visit(Overloaded{
                          [](const BoundaryValueForm& f) -> const BoundaryFunctionSystem& {
                              return f.system;
                          },
                          [](const TransformedForm& f) -> const BoundaryFunctionSystem& {
                              return f.bases.system();
                          },
                      },
                      form_);
}

double MultiscaleSolution::derivative(int order, double x) const {
    return std::visit(Overloaded{
                          [&](const BoundaryValueForm& f) {
                              return f.particular.eval(order, x) +
                                     f.system.eval_all(order, x).dot(f.q1) + f.supp.eval(order, x);
                          },
                          [&](const TransformedForm& f) {
                              return f.bases.evaluate(f.q02, f.q_b, order, x);
                          },
                      },
                      form_);
}

Eigen::Vector4d MultiscaleSolution::displacement_trace() const {
    const double a = problem_.model.a();
    return {derivative(0, 0.0), derivative(1, 0.0), derivative(0, a), derivative(1, a)};
}

MultiscaleSolution MultiscaleSolution::to_transformed() const {
    if (const auto* tf = std::get_if<TransformedForm>(&form_)) {
        return MultiscaleSolution(problem_, method_, *tf, warnings_);
    }
    const auto& f = std::get<BoundaryValueForm>(form_);
    TransformedForm out{TransformedBases(f.system, f.particular.terms(), f.supp),
                        f.particular.coeffs(), displacement_trace()};
    return MultiscaleSolution(problem_, method_, std::move(out), warnings_);
}

MultiscaleSolution solve_fccm(const BeamProblem& problem, int M, int N1s, double regime_tol) {
    const FoundationBeamModel& model = problem.model;
    if (M < 1) throw InvalidInput("truncation order M must be at least 1");
    if (N1s < 0) throw InvalidInput("supplementary order must be non-negative");
    if (N1s > 0 && !problem.load.has_smooth_part()) {
        throw InvalidInput("a supplementary solution needs a distributed load component");
    }

    SupplementarySolution supp = SupplementarySolution::build(model, problem.load, N1s);
    ParticularSolution particular = ParticularSolution::build(model, problem.load, supp, M);
    BoundaryFunctionSystem system = BoundaryFunctionSystem::assemble(model, regime_tol);

    const double a = model.a();
    Eigen::Matrix4d A;
    Eigen::Vector4d rhs;
    int row = 0;
    for (const auto& [end, x] : {std::pair{problem.bc.left, 0.0}, std::pair{problem.bc.right, a}}) {
        for (const Prescribed& p : prescribed_quantities(end, model.EI())) {
            A.row(row) = p.scale * system.eval_all(p.order, x).transpose();
            rhs(row) = p.value - p.scale * (particular.eval(p.order, x) + supp.eval(p.order, x));
            ++row;
        }
    }

    Eigen::Vector4d q1;
    try {
        q1 = solve_linear_system(A, rhs).x;
    } catch (const SolverFailure& e) {
        std::ostringstream os;
        os << "FCCM boundary system for " << problem.bc.label() << " ends ("
           << regime_name(system.basis().regime()) << " roots, k_r = " << model.k_r()
           << ", G_pr = " << model.G_pr() << "): " << e.what();
        throw SolverFailure(os.str());
    }

    std::vector<std::string> warnings;
    if (problem.bc.left.kind == EndKind::Free || problem.bc.right.kind == EndKind::Free) {
        warnings.push_back(
            "FCCM with a free end: boundary values of w and theta converge slowly in M");
    }
    return MultiscaleSolution(problem, Method::FCCM,
                              MultiscaleSolution::BoundaryValueForm{std::move(supp),
                                                                    std::move(particular),
                                                                    std::move(system), q1},
                              std::move(warnings));
}

EnergySystem assemble_energy_system(const BeamProblem& problem, int M, double regime_tol) {
    const FoundationBeamModel& model = problem.model;
    if (M < 1) throw InvalidInput("truncation order M must be at least 1");
    const double a = model.a();
    const double EI = model.EI();
    const double k = model.k();
    const double Gp = model.Gp();

    EnergySystem es{TransformedBases(BoundaryFunctionSystem::assemble(model, regime_tol), M), {}, {},
                    {}, {}, 0.0, 0};
    const TransformedBases& tb = es.bases;
    const int n = M + 4;

    std::vector<double> breaks = uniform_breakpoints(a, std::max(4 * M, kMinPanels));
    if (max_root_modulus(tb.system().basis().regime()) * a > kLayerThreshold) {
        breaks = graded_breakpoints(a, std::max(4 * M, kMinPanels), kGradingRatio, kGradingLevels);
    }
    if (problem.load.sampled) {
        std::vector<double> inner;
        for (double b : problem.load.sampled->breakpoints) {
            if (b > 0.0 && b < a) inner.push_back(b);
        }
        breaks = merge_breakpoints(std::move(breaks), inner);
    }
    const QuadraturePoints quad = composite_rule(breaks, kPointsPerPanel);
    es.quadrature_points = quad.size();

    es.K = Eigen::MatrixXd::Zero(n, n);
    es.Q = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd sine_block = Eigen::MatrixXd::Zero(M, M);
    Eigen::VectorXd g0(n), g1(n), g2(n);
    Eigen::VectorXd s0(M), s1(M), s2(M);
    for (std::size_t i = 0; i < quad.size(); ++i) {
        const double x = quad.x[i];
        const double w = quad.w[i];
        transformed_row(tb, 0, x, g0);
        transformed_row(tb, 1, x, g1);
        transformed_row(tb, 2, x, g2);
        es.K.noalias() += (w * EI) * g2 * g2.transpose();
        es.K.noalias() += (w * k) * g0 * g0.transpose();
        if (Gp != 0.0) es.K.noalias() += (w * Gp) * g1 * g1.transpose();
        if (problem.load.has_smooth_part()) es.Q += (w * problem.load.smooth_density(a, x)) * g0;

        for (int m = 1; m <= M; ++m) {
            const double alpha = sine_frequency(m, a);
            const double s = std::sin(alpha * x);
            s0(m - 1) = s;
            s1(m - 1) = alpha * std::cos(alpha * x);
            s2(m - 1) = -alpha * alpha * s;
        }
        sine_block.noalias() += (w * EI) * s2 * s2.transpose();
        sine_block.noalias() += (w * k) * s0 * s0.transpose();
        if (Gp != 0.0) sine_block.noalias() += (w * Gp) * s1 * s1.transpose();
    }

    Eigen::MatrixXd closed = Eigen::MatrixXd::Zero(M, M);
    for (int m = 1; m <= M; ++m) {
        const double alpha2 = std::pow(sine_frequency(m, a), 2);
        closed(m - 1, m - 1) = 0.5 * a * (EI * alpha2 * alpha2 + Gp * alpha2 + k);
    }
    es.sine_block_deviation =
        (sine_block - closed).cwiseAbs().maxCoeff() / closed.diagonal().maxCoeff();
    if (!(es.sine_block_deviation <= kSineBlockTolerance)) {
        std::ostringstream os;
        os << "stiffness quadrature self-check failed: sine block deviates by "
           << es.sine_block_deviation << " from the orthogonality identity";
        throw SolverFailure(os.str());
    }

    for (const PointLoad& p : problem.load.points) {
        transformed_row(tb, 0, p.x0, g0);
        es.Q += p.P * g0;
    }

    // Work of prescribed end moments and shears.
    const auto add_end_loads = [&](const EndCondition& end, double x, double sign) {
        double moment = 0.0;
        double shear = 0.0;
        if (end.kind == EndKind::Simple) moment = end.value2;
        if (end.kind == EndKind::Free) {
            moment = end.value1;
            shear = end.value2;
        }
        if (moment == 0.0 && shear == 0.0) return;
        transformed_row(tb, 0, x, g0);
        transformed_row(tb, 1, x, g1);
        es.Q += sign * (shear * g0 + moment * g1);
    };
    add_end_loads(problem.bc.right, a, 1.0);
    add_end_loads(problem.bc.left, 0.0, -1.0);

    const auto fix = [&](int dof, double value) {
        es.fixed_dofs.push_back(M + dof);
        es.fixed_values.push_back(value);
    };
    const auto fix_end = [&](const EndCondition& end, int w_dof) {
        if (end.kind == EndKind::Clamped) {
            fix(w_dof, end.value1);
            fix(w_dof + 1, end.value2);
        } else if (end.kind == EndKind::Simple) {
            fix(w_dof, end.value1);
        }
    };
    fix_end(problem.bc.left, 0);
    fix_end(problem.bc.right, 2);
    return es;
}

MultiscaleSolution solve_energy_system(const BeamProblem& problem, const EnergySystem& es) {
    const auto n = es.K.rows();
    std::vector<bool> is_fixed(static_cast<std::size_t>(n), false);
    Eigen::VectorXd q = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < es.fixed_dofs.size(); ++i) {
        is_fixed[static_cast<std::size_t>(es.fixed_dofs[i])] = true;
        q(es.fixed_dofs[i]) = es.fixed_values[i];
    }
    std::vector<Eigen::Index> free;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!is_fixed[static_cast<std::size_t>(i)]) free.push_back(i);
    }
    const auto nf = static_cast<Eigen::Index>(free.size());
    Eigen::MatrixXd Kff(nf, nf);
    Eigen::VectorXd rhs(nf);
    const Eigen::VectorXd Kq = es.K * q;  // contribution of the fixed values
    for (Eigen::Index r = 0; r < nf; ++r) {
        rhs(r) = es.Q(free[r]) - Kq(free[r]);
        for (Eigen::Index c = 0; c < nf; ++c) Kff(r, c) = es.K(free[r], free[c]);
    }
    const Eigen::LLT<Eigen::MatrixXd> llt(Kff);
    if (llt.info() != Eigen::Success) {
        throw SolverFailure(
            "reduced stiffness matrix is not positive definite (energy assembly invariant violated)");
    }
    const Eigen::VectorXd qf = llt.solve(rhs);
    for (Eigen::Index r = 0; r < nf; ++r) q(free[r]) = qf(r);

    const int M = es.terms();
    MultiscaleSolution::TransformedForm form{
        es.bases, std::vector<double>(q.data(), q.data() + M), q.tail<4>()};
    return MultiscaleSolution(problem, Method::VM, std::move(form));
}

MultiscaleSolution solve_vm(const BeamProblem& problem, int M, double regime_tol) {
    return solve_energy_system(problem, assemble_energy_system(problem, M, regime_tol));
}

Eigen::VectorXd energy_coordinates(const MultiscaleSolution& solution) {
    if (solution.supplementary_order() != 0) {
        throw InvalidInput("energy coordinates exist only for solutions without a supplementary part");
    }
    const auto& q02 = solution.sine_coeffs();
    Eigen::VectorXd q(static_cast<Eigen::Index>(q02.size()) + 4);
    for (std::size_t i = 0; i < q02.size(); ++i) q(static_cast<Eigen::Index>(i)) = q02[i];
    q.tail<4>() = solution.displacement_trace();
    return q;
}

MultiscaleSolution solve(const BeamProblem& problem, Method method, int M, int N1s) {
    if (method == Method::FCCM) return solve_fccm(problem, M, N1s);
    if (N1s != 0) {
        throw InvalidInput("the variational method does not use a supplementary solution (N1s must be 0)");
    }
    return solve_vm(problem, M);
}

}  // namespace fsbeam
