#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsbeam/model.hpp"
#include "fsbeam/solvers.hpp"

namespace fsbeam {

/// A single problem plus the discretization to solve it with.
struct ProblemConfig {
    BeamProblem problem;
    Method method = Method::VM;
    int terms = kDefaultTruncation;
    int supplementary_order = 0;
};

struct ParameterPair {
    double k_r = 0.0;
    double G_pr = 0.0;
};

/// Cross-product experiment description: every (parameters, N1s, method)
/// combination is solved at every truncation.
struct ExperimentPlan {
    std::string name;
    BoundaryConditionSpec bc;
    double EI = 1.0;
    double a = 1.0;
    std::vector<ParameterPair> parameters;
    std::vector<int> supplementary_orders{0};
    std::vector<Method> methods{Method::FCCM};
    std::vector<int> truncations;
    LoadSpec load;
    /// Order of the exact reference solution; -1 picks the load degree.
    int reference_order = -1;
    /// Sample count of greens profiles.
    int profile_points = 201;

    std::string scheme() const { return bc.label(); }
    FoundationBeamModel model(const ParameterPair& p) const;
    std::size_t combination_count() const {
        return parameters.size() * supplementary_orders.size() * methods.size();
    }
};

/// Parses a problem document. Syntax errors carry line and column; semantic
/// errors carry the JSON path of the offending key. Throws ConfigError.
ProblemConfig parse_problem_config(std::string_view text, std::string_view source = "<config>");

/// Accepts a single plan object or {"plans": [...]}.
std::vector<ExperimentPlan> parse_experiment_plans(std::string_view text,
                                                   std::string_view source = "<config>");

std::string read_text_file(const std::string& path);

}  // namespace fsbeam
