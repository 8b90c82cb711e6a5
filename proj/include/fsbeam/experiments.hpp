#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "fsbeam/config.hpp"
#include "fsbeam/fields.hpp"

namespace fsbeam {

/// Column-oriented result table; cells are text or numbers.
struct ResultTable {
    using Cell = std::variant<std::string, double>;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_string(std::string_view name);

/// CSV numbers use 17 significant digits; JSON is an array of row objects.
void write_table(std::ostream& out, const ResultTable& table, OutputFormat format);

struct CombinationFailure {
    std::size_t plan = 0;
    std::size_t combination = 0;
    std::string description;
    std::string message;
};

struct StudyResult {
    ResultTable table;
    std::vector<CombinationFailure> failures;
    std::size_t combinations = 0;
};

/// Highest nonzero power of the polynomial load.
int polynomial_degree(const LoadSpec& load);

/// Error indices against the exact solution obtained with a supplementary
/// polynomial matching the load degree. Polynomial loads only.
StudyResult run_convergence(const std::vector<ExperimentPlan>& plans,
                            int interior_points = kDefaultInteriorPoints);

/// w(x)/w(a/2) on a uniform grid for each parameter pair.
StudyResult run_greens(const std::vector<ExperimentPlan>& plans);

/// Field table of one solved problem on n + 1 uniform points.
ResultTable field_table(const MultiscaleSolution& solution, int intervals);

enum class CheckStatus { Pass, Warn, Fail, Skip };

const char* check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool any_failed() const;
};

constexpr int kDefaultOracleIntervals = 4096;

/// Runs the invariant suite on one configured problem.
VerifyReport verify_problem(const ProblemConfig& config, int fd_intervals = kDefaultOracleIntervals);

ResultTable verify_table(const VerifyReport& report);

}  // namespace fsbeam
