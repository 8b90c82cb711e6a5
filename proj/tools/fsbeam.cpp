#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "fsbeam/config.hpp"
#include "fsbeam/error.hpp"
#include "fsbeam/experiments.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kAllFailed = 2, kPartialFailure = 3 };

struct Options {
    std::string config;
    std::string out;
    std::string format = "csv";
    int grid = 0;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw fsbeam::ConfigError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int study_exit_code(const fsbeam::StudyResult& r) {
    for (const auto& f : r.failures) {
        std::cerr << "failed: " << f.description << ": " << f.message << '\n';
    }
    if (r.failures.empty()) return kOk;
    return r.failures.size() >= r.combinations ? kAllFailed : kPartialFailure;
}

int run_solve(const Options& o) {
    const auto cfg = fsbeam::parse_problem_config(fsbeam::read_text_file(o.config), o.config);
    const auto format = fsbeam::output_format_from_string(o.format);
    try {
        const auto sol = fsbeam::solve(cfg.problem, cfg.method, cfg.terms, cfg.supplementary_order);
        for (const auto& w : sol.warnings()) std::cerr << "warning: " << w << '\n';
        Output out(o.out);
        fsbeam::write_table(out.stream(), fsbeam::field_table(sol, o.grid > 0 ? o.grid : 100), format);
    } catch (const fsbeam::SolverFailure& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kAllFailed;
    }
    return kOk;
}

int run_converge(const Options& o) {
    const auto plans = fsbeam::parse_experiment_plans(fsbeam::read_text_file(o.config), o.config);
    const auto format = fsbeam::output_format_from_string(o.format);
    const auto result =
        fsbeam::run_convergence(plans, o.grid > 0 ? o.grid : fsbeam::kDefaultInteriorPoints);
    Output out(o.out);
    fsbeam::write_table(out.stream(), result.table, format);
    return study_exit_code(result);
}

int run_greens(const Options& o) {
    auto plans = fsbeam::parse_experiment_plans(fsbeam::read_text_file(o.config), o.config);
    const auto format = fsbeam::output_format_from_string(o.format);
    if (o.grid > 0) {
        for (auto& p : plans) p.profile_points = o.grid + 1;
    }
    const auto result = fsbeam::run_greens(plans);
    Output out(o.out);
    fsbeam::write_table(out.stream(), result.table, format);
    return study_exit_code(result);
}

int run_verify(const Options& o) {
    const auto cfg = fsbeam::parse_problem_config(fsbeam::read_text_file(o.config), o.config);
    const auto format = fsbeam::output_format_from_string(o.format);
    const auto report = fsbeam::verify_problem(cfg, o.grid > 0 ? o.grid : fsbeam::kDefaultOracleIntervals);
    Output out(o.out);
    fsbeam::write_table(out.stream(), fsbeam::verify_table(report), format);
    for (const auto& c : report.checks) {
        std::cerr << fsbeam::check_status_name(c.status) << "  " << c.name << "  " << c.measured;
        if (c.tolerance > 0.0) std::cerr << " (tol " << c.tolerance << ")";
        std::cerr << "  " << c.detail << '\n';
    }
    return report.any_failed() ? kPartialFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beams on two-parameter elastic foundations by composite Fourier series"};
    app.require_subcommand(1);

    Options o;
    const auto add_common = [&](CLI::App* sub, const char* grid_help) {
        sub->add_option("--config", o.config, "JSON problem or plan file")->required();
        sub->add_option("--out", o.out, "output file (default stdout)");
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--grid", o.grid, grid_help)->check(CLI::PositiveNumber);
    };
    auto* solve = app.add_subcommand("solve", "solve one problem and tabulate w, theta, M, Q");
    add_common(solve, "number of output intervals (default 100)");
    auto* converge = app.add_subcommand("converge", "error indices against the exact solution");
    add_common(converge, "interior sample points for the error indices (default 99)");
    auto* greens = app.add_subcommand("greens", "normalized deflection profiles w(x)/w(a/2)");
    add_common(greens, "number of profile intervals (default 200)");
    auto* verify = app.add_subcommand("verify", "invariant diagnostics for one problem");
    add_common(verify, "finite-difference intervals (default 4096)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*solve) return run_solve(o);
        if (*converge) return run_converge(o);
        if (*greens) return run_greens(o);
        return run_verify(o);
    } catch (const fsbeam::InvalidInput& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const fsbeam::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kAllFailed;
    }
}
