#include "fsbeam/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "fsbeam/error.hpp"
#include "fsbeam/fd_oracle.hpp"
#include "fsbeam/homogeneous_basis.hpp"

namespace fsbeam {

namespace {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string describe(const std::string& scheme, const ParameterPair& p, int N1s, Method m) {
    std::ostringstream os;
    os << scheme << " k_r=" << format_number(p.k_r) << " G_pr=" << format_number(p.G_pr)
       << " N1s=" << N1s << " " << method_name(m);
    return os.str();
}

bool polynomial_only(const LoadSpec& load) {
    return load.points.empty() && !load.sampled && !load.poly.empty();
}

bool has_free_end(const BoundaryConditionSpec& bc) {
    return bc.left.kind == EndKind::Free || bc.right.kind == EndKind::Free;
}

}  // namespace

OutputFormat output_format_from_string(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw InvalidInput("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

void write_table(std::ostream& out, const ResultTable& table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? "," : "") << csv_escape(table.columns[c]);
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out << ',';
                if (const auto* s = std::get_if<std::string>(&row[c])) {
                    out << csv_escape(*s);
                } else {
                    out << format_number(std::get<double>(row[c]));
                }
            }
            out << '\n';
        }
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::visit([&](const auto& v) { obj[table.columns[c]] = v; }, row[c]);
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

int polynomial_degree(const LoadSpec& load) {
    for (int j = static_cast<int>(load.poly.size()) - 1; j >= 0; --j) {
        if (load.poly[static_cast<std::size_t>(j)] != 0.0) return j;
    }
    return 0;
}

StudyResult run_convergence(const std::vector<ExperimentPlan>& plans, int interior_points) {
    StudyResult result;
    result.table.columns = {"scheme", "k_r", "G_pr", "N1s", "method", "M", "field", "e_I", "e_B"};
    for (std::size_t pi = 0; pi < plans.size(); ++pi) {
        const ExperimentPlan& plan = plans[pi];
        if (!polynomial_only(plan.load)) {
            throw ConfigError("plan " + std::to_string(pi) +
                              ": convergence studies need a purely polynomial load (exact reference)");
        }
        const int ref_order = plan.reference_order > 0
                                  ? plan.reference_order
                                  : std::max(1, polynomial_degree(plan.load));
        if (ref_order < polynomial_degree(plan.load)) {
            throw ConfigError("plan " + std::to_string(pi) + ": reference_N1s is below the load degree");
        }
        const int ref_terms =
            plan.truncations.empty() ? 1 : *std::max_element(plan.truncations.begin(), plan.truncations.end());

        for (const ParameterPair& params : plan.parameters) {
            const BeamProblem problem(plan.model(params), plan.bc, plan.load);
            for (int N1s : plan.supplementary_orders) {
                for (Method method : plan.methods) {
                    const std::size_t index = result.combinations++;
                    const std::string label = describe(plan.scheme(), params, N1s, method);
                    std::vector<std::vector<ResultTable::Cell>> rows;
                    try {
                        const MultiscaleSolution reference = solve_fccm(problem, ref_terms, ref_order);
                        for (int M : plan.truncations) {
                            const MultiscaleSolution sol = solve(problem, method, M, N1s);
                            const ErrorReport report = compute_errors(
                                field_function(sol), field_function(reference), plan.a, interior_points);
                            for (Field f : kErrorFields) {
                                rows.push_back({plan.scheme(), params.k_r, params.G_pr,
                                                static_cast<double>(N1s), std::string(method_name(method)),
                                                static_cast<double>(M), std::string(field_name(f)),
                                                report[f].interior, report[f].boundary});
                            }
                        }
                    } catch (const Error& e) {
                        result.failures.push_back({pi, index, label, e.what()});
                        continue;
                    }
                    for (auto& r : rows) result.table.rows.push_back(std::move(r));
                }
            }
        }
    }
    return result;
}

StudyResult run_greens(const std::vector<ExperimentPlan>& plans) {
    StudyResult result;
    result.table.columns = {"k_r", "G_pr", "N1s", "method", "M", "x", "w", "theta", "moment", "shear", "w_rel"};
    for (std::size_t pi = 0; pi < plans.size(); ++pi) {
        const ExperimentPlan& plan = plans[pi];
        const std::vector<int> truncations =
            plan.truncations.empty() ? std::vector<int>{kDefaultTruncation} : plan.truncations;
        for (const ParameterPair& params : plan.parameters) {
            const BeamProblem problem(plan.model(params), plan.bc, plan.load);
            for (int N1s : plan.supplementary_orders) {
                for (Method method : plan.methods) {
                    const std::size_t index = result.combinations++;
                    const std::string label = describe(plan.scheme(), params, N1s, method);
                    std::vector<std::vector<ResultTable::Cell>> rows;
                    std::string flag;
                    try {
                        for (int M : truncations) {
                            const MultiscaleSolution sol = solve(problem, method, M, N1s);
                            const double w_mid = sol.derivative(0, 0.5 * plan.a);
                            if (w_mid == 0.0) {
                                flag = "w(a/2) = 0 at M = " + std::to_string(M) + ", profile not normalized";
                            }
                            const int n = plan.profile_points - 1;
                            for (int i = 0; i <= n; ++i) {
                                const FieldSample s = eval_fields(sol, plan.a * i / n);
                                rows.push_back({params.k_r, params.G_pr, static_cast<double>(N1s),
                                                std::string(method_name(method)), static_cast<double>(M),
                                                s.x, s.w, s.theta, s.moment, s.shear,
                                                w_mid != 0.0 ? s.w / w_mid
                                                             : std::numeric_limits<double>::quiet_NaN()});
                            }
                        }
                    } catch (const Error& e) {
                        result.failures.push_back({pi, index, label, e.what()});
                        continue;
                    }
                    if (!flag.empty()) result.failures.push_back({pi, index, label, flag});
                    for (auto& r : rows) result.table.rows.push_back(std::move(r));
                }
            }
        }
    }
    return result;
}

ResultTable field_table(const MultiscaleSolution& solution, int intervals) {
    if (intervals < 1) throw InvalidInput("field table needs at least one interval");
    ResultTable t;
    t.columns = {"x", "w", "theta", "moment", "shear"};
    const double a = solution.problem().model.a();
    for (int i = 0; i <= intervals; ++i) {
        const FieldSample s = eval_fields(solution, a * i / intervals);
        t.rows.push_back({s.x, s.w, s.theta, s.moment, s.shear});
    }
    return t;
}

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Warn: return "WARN";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skip: return "SKIP";
    }
    return "?";
}

bool VerifyReport::any_failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

namespace {

constexpr int kAnnihilationPoints = 200;
constexpr double kAnnihilationTol = 1e-8;
constexpr double kBoundaryTol = 1e-8;
constexpr double kExactTol = 1e-8;
constexpr double kMethodTol = 1e-3;
constexpr double kSmoothOracleTol = 1e-4;
constexpr double kRoughOracleTol = 1e-2;

struct Quantity {
    const char* name;
    int order;
    double scale;
};

Quantity quantity(int which, double EI) {
    static constexpr const char* names[] = {"w", "theta", "moment", "shear"};
    return {names[which], which, which >= 2 ? EI : 1.0};
}

// Prescribed quantities of an end as indices into {w, theta, moment, shear}.
std::array<int, 2> prescribed(EndKind kind) {
    switch (kind) {
        case EndKind::Clamped: return {0, 1};
        case EndKind::Simple: return {0, 2};
        case EndKind::Free: return {2, 3};
    }
    return {0, 1};
}

double sup_on_grid(const MultiscaleSolution& sol, const Quantity& q, double a) {
    double sup = 0.0;
    for (int i = 0; i <= 100; ++i) sup = std::max(sup, std::abs(q.scale * sol.derivative(q.order, a * i / 100)));
    return sup;
}

double max_abs_load(const LoadSpec& load, double a) {
    double m = 0.0;
    if (!load.has_smooth_part()) return 0.0;
    for (int i = 0; i <= 200; ++i) m = std::max(m, std::abs(load.smooth_density(a, a * i / 200)));
    return m;
}

}  // namespace

VerifyReport verify_problem(const ProblemConfig& config, int fd_intervals) {
    VerifyReport report;
    const BeamProblem& problem = config.problem;
    const FoundationBeamModel& model = problem.model;
    const double a = model.a();
    const double EI = model.EI();
    const int M = config.terms;
    const int N1s = config.method == Method::FCCM ? config.supplementary_order : 0;
    const auto add = [&](std::string name, CheckStatus s, double measured, double tol, std::string detail) {
        report.checks.push_back({std::move(name), s, measured, tol, std::move(detail)});
    };

    // Magnitude of each quantity implied by the load alone.
    double force = max_abs_load(problem.load, a) * a;
    for (const PointLoad& p : problem.load.points) force += std::abs(p.P);
    const double deflection = force / (EI / (a * a * a) + model.Gp() / a + model.k() * a);
    const auto load_scale = [&](const Quantity& q) {
        const double s = q.order >= 2 ? force * std::pow(a, 3 - q.order) : deflection / std::pow(a, q.order);
        return std::max(s, 1e-300);
    };

    // Homogeneous basis.
    try {
        const BoundaryFunctionSystem system = BoundaryFunctionSystem::assemble(model);
        const HomogeneousBasis& basis = system.basis();
        double worst = 0.0;
        for (int j = 0; j < 4; ++j) {
            double sup = 0.0, res = 0.0;
            for (int i = 0; i <= kAnnihilationPoints; ++i) {
                const double x = a * i / kAnnihilationPoints;
                sup = std::max(sup, std::abs(basis.eval(j, 0, x)));
                res = std::max(res, std::abs(EI * basis.eval(j, 4, x) - model.Gp() * basis.eval(j, 2, x) +
                                             model.k() * basis.eval(j, 0, x)));
            }
            worst = std::max(worst, res / (model.k() * std::max(1.0, sup)));
        }
        add("operator annihilation", worst <= kAnnihilationTol ? CheckStatus::Pass : CheckStatus::Fail, worst,
            kAnnihilationTol, std::string(regime_name(basis.regime())) + " roots");
    } catch (const Error& e) {
        add("operator annihilation", CheckStatus::Fail, 0.0, kAnnihilationTol, e.what());
    }

    std::optional<MultiscaleSolution> fccm, vm;
    try {
        fccm.emplace(solve_fccm(problem, M, N1s));
    } catch (const Error& e) {
        add("FCCM solve", CheckStatus::Fail, 0.0, 0.0, e.what());
    }
    try {
        vm.emplace(solve_vm(problem, M));
    } catch (const Error& e) {
        add("VM solve", CheckStatus::Fail, 0.0, 0.0, e.what());
    }

    if (fccm) {
        for (const auto& [end, x, side] : {std::tuple{problem.bc.left, 0.0, "left"},
                                           std::tuple{problem.bc.right, a, "right"}}) {
            const std::array<double, 2> values = {end.value1, end.value2};
            const auto which = prescribed(end.kind);
            for (int i = 0; i < 2; ++i) {
                const Quantity q = quantity(which[static_cast<std::size_t>(i)], EI);
                const double v = q.scale * fccm->derivative(q.order, x);
                const double ref = std::max({std::abs(values[static_cast<std::size_t>(i)]),
                                             sup_on_grid(*fccm, q, a), load_scale(q)});
                const double res = std::abs(v - values[static_cast<std::size_t>(i)]) / ref;
                CheckStatus s = CheckStatus::Pass;
                std::string detail = "FCCM, M = " + std::to_string(M);
                if (res > kBoundaryTol) {
                    s = end.kind == EndKind::Free ? CheckStatus::Warn : CheckStatus::Fail;
                    if (s == CheckStatus::Warn) detail += ", free-end values converge slowly in M";
                }
                add(std::string("FCCM boundary ") + side + " " + q.name, s, res, kBoundaryTol, detail);
            }
        }

        // ODE residual away from point loads.
        const double qmax = std::max(max_abs_load(problem.load, a), 1e-300);
        const auto ode_residual = [&](const MultiscaleSolution& sol) {
            double worst = 0.0;
            for (double x : interior_grid(a, kDefaultInteriorPoints)) {
                const double q = problem.load.has_smooth_part() ? problem.load.smooth_density(a, x) : 0.0;
                const double r = EI * sol.derivative(4, x) - model.Gp() * sol.derivative(2, x) +
                                 model.k() * sol.derivative(0, x) - q;
                worst = std::max(worst, std::abs(r));
            }
            return worst / qmax;
        };
        if (!problem.load.points.empty()) {
            add("ODE residual", CheckStatus::Skip, 0.0, 0.0,
                "point loads have no pointwise sine-series residual");
        } else try {
            const double r1 = ode_residual(*fccm);
            const bool exact = polynomial_only(problem.load) && N1s >= polynomial_degree(problem.load) && N1s > 0;
            if (exact) {
                add("ODE residual", r1 <= kExactTol ? CheckStatus::Pass : CheckStatus::Fail, r1, kExactTol,
                    "supplementary polynomial carries the whole load");
            } else {
                const double r2 = ode_residual(solve_fccm(problem, 2 * M, N1s));
                add("ODE residual", r2 <= r1 ? CheckStatus::Pass : CheckStatus::Warn, r2, r1,
                    "residual at 2M against residual at M = " + std::to_string(M));
            }
        } catch (const Error& e) {
            add("ODE residual", CheckStatus::Fail, 0.0, 0.0, e.what());
        }
    }

    if (vm) {
        std::optional<MultiscaleSolution> vm_fine;
        for (const auto& [end, x, side] : {std::tuple{problem.bc.left, 0.0, "left"},
                                           std::tuple{problem.bc.right, a, "right"}}) {
            const std::array<double, 2> values = {end.value1, end.value2};
            const auto which = prescribed(end.kind);
            for (int i = 0; i < 2; ++i) {
                const int w = which[static_cast<std::size_t>(i)];
                const Quantity q = quantity(w, EI);
                double target = values[static_cast<std::size_t>(i)];
                // Natural shear condition: EI w''' - Gp w' = -Q at both ends.
                if (w == 3) target = -target;
                const auto residual = [&](const MultiscaleSolution& sol) {
                    double v = q.scale * sol.derivative(q.order, x);
                    if (w == 3) v -= model.Gp() * sol.derivative(1, x);
                    const double ref = std::max({std::abs(target), sup_on_grid(sol, q, a), load_scale(q)});
                    return std::abs(v - target) / ref;
                };
                const double res = residual(*vm);
                const std::string name = std::string("VM boundary ") + side + " " + q.name;
                if (w <= 1) {
                    add(name, res <= kBoundaryTol ? CheckStatus::Pass : CheckStatus::Fail, res, kBoundaryTol,
                        "imposed on the boundary coordinates");
                    continue;
                }
                if (res <= kBoundaryTol) {
                    add(name, CheckStatus::Pass, res, kBoundaryTol, "natural condition");
                    continue;
                }
                try {
                    if (!vm_fine) vm_fine.emplace(solve_vm(problem, 2 * M));
                    const double fine = residual(*vm_fine);
                    add(name, fine <= res ? CheckStatus::Pass : CheckStatus::Warn, fine, res,
                        "natural condition: residual at 2M against residual at M = " + std::to_string(M));
                } catch (const Error& e) {
                    add(name, CheckStatus::Fail, 0.0, 0.0, e.what());
                }
            }
        }
    }

    if (fccm && vm) {
        const bool comparable =
            !has_free_end(problem.bc) ||
            (model.Gp() == 0.0 && (problem.bc.left.kind != EndKind::Free || problem.bc.left.value2 == 0.0) &&
             (problem.bc.right.kind != EndKind::Free || problem.bc.right.value2 == 0.0));
        if (!comparable) {
            add("FCCM vs VM", CheckStatus::Skip, 0.0, kMethodTol,
                "free-end shear conditions of the two methods differ for nonzero Gp or shear data");
        } else {
            const double e = compute_errors(field_function(*fccm), field_function(*vm), a)[Field::Deflection].interior;
            CheckStatus s = CheckStatus::Pass;
            if (e > kMethodTol) {
                s = (has_free_end(problem.bc) || !problem.load.points.empty()) ? CheckStatus::Warn
                                                                              : CheckStatus::Fail;
            }
            add("FCCM vs VM", s, e, kMethodTol, "interior e_I(w), M = " + std::to_string(M));
        }
    }

    if (vm) {
        try {
            const FdSolution fd(problem, fd_intervals, ShearConvention::Variational);
            const bool smooth = problem.load.points.empty() && model.k_r() <= 1e2;
            const double tol = smooth ? kSmoothOracleTol : kRoughOracleTol;
            const double e = compute_errors(field_function(*vm), fd.as_function(), a)[Field::Deflection].interior;
            add("finite-difference oracle", e <= tol ? CheckStatus::Pass : CheckStatus::Fail, e, tol,
                "VM against central differences, n = " + std::to_string(fd_intervals));
        } catch (const Error& e) {
            add("finite-difference oracle", CheckStatus::Fail, 0.0, 0.0, e.what());
        }
    }

    // Free-end displacements under FCCM converge slowly in M; compare M and 2M.
    if (fccm && has_free_end(problem.bc)) {
        try {
            const MultiscaleSolution fine = solve_fccm(problem, 2 * M, N1s);
            double change = 0.0;
            for (const auto& [end, x] : {std::pair{problem.bc.left, 0.0}, std::pair{problem.bc.right, a}}) {
                if (end.kind != EndKind::Free) continue;
                for (int w = 0; w < 2; ++w) {
                    const Quantity q = quantity(w, EI);
                    const double ref = std::max(sup_on_grid(fine, q, a), load_scale(q));
                    change = std::max(change, std::abs(fine.derivative(w, x) - fccm->derivative(w, x)) / ref);
                }
            }
            add("FCCM free-end w, theta", change <= kMethodTol ? CheckStatus::Pass : CheckStatus::Warn, change,
                kMethodTol, "change between M and 2M; free-end values converge slowly under FCCM");
        } catch (const Error& e) {
            add("FCCM free-end w, theta", CheckStatus::Fail, 0.0, 0.0, e.what());
        }
    }
    return report;
}

ResultTable verify_table(const VerifyReport& report) {
    ResultTable t;
    t.columns = {"check", "status", "measured", "tolerance", "detail"};
    for (const CheckResult& c : report.checks) {
        t.rows.push_back({c.name, std::string(check_status_name(c.status)), c.measured, c.tolerance, c.detail});
    }
    return t;
}

}  // namespace fsbeam
