#include <gtest/gtest.h>

#include <sstream>

#include "fsbeam/config.hpp"
#include "fsbeam/error.hpp"
#include "fsbeam/experiments.hpp"

using namespace fsbeam;

namespace {

ExperimentPlan clamped_plan() {
    ExperimentPlan plan;
    plan.name = "t";
    plan.bc = BoundaryConditionSpec::from_label("CC");
    plan.parameters = {{1e4, 10}};
    plan.supplementary_orders = {0, 1};
    plan.methods = {Method::FCCM, Method::VM};
    plan.truncations = {5, 20};
    plan.load = LoadSpec{{1.0, 2.0}, {}, {}};
    return plan;
}

std::string csv(const ResultTable& t) {
    std::ostringstream os;
    write_table(os, t, OutputFormat::Csv);
    return os.str();
}

}  // namespace

TEST(Convergence, EmptyTruncationsGiveEmptyTable) {
    auto plan = clamped_plan();
    plan.truncations.clear();
    const auto r = run_convergence({plan});
    EXPECT_TRUE(r.table.rows.empty());
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(r.table.columns.size(), 9u);
}

TEST(Convergence, RowsAndFailures) {
    const auto r = run_convergence({clamped_plan()});
    // VM with N1s = 1 is a failed combination
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.combinations, 4u);
    EXPECT_EQ(r.table.rows.size(), 3u * 2u * 3u);
    for (const auto& row : r.table.rows) {
        const double e_I = std::get<double>(row[7]);
        EXPECT_GE(e_I, 0.0);
        EXPECT_LT(e_I, 1.0);
    }
}

TEST(Convergence, Deterministic) {
    EXPECT_EQ(csv(run_convergence({clamped_plan()}).table), csv(run_convergence({clamped_plan()}).table));
}

TEST(Convergence, RejectsNonPolynomialLoad) {
    auto plan = clamped_plan();
    plan.load.points.push_back({1.0, 0.5});
    EXPECT_THROW(run_convergence({plan}), ConfigError);
    EXPECT_EQ(polynomial_degree(LoadSpec{{1, 0, 3, 0}, {}, {}}), 2);
}

TEST(Greens, SymmetricProfile) {
    ExperimentPlan plan;
    plan.bc = BoundaryConditionSpec::from_label("FF");
    plan.parameters = {{1e4, 1000}};
    plan.methods = {Method::VM};
    plan.load = LoadSpec{{1000.0}, {{1000.0, 0.5}}, {}};
    plan.profile_points = 101;
    const auto r = run_greens({plan});
    ASSERT_EQ(r.table.rows.size(), 101u);
    const std::size_t col = r.table.columns.size() - 1;
    EXPECT_EQ(r.table.columns[col], "w_rel");
    EXPECT_NEAR(std::get<double>(r.table.rows[50][col]), 1.0, 1e-15);
    for (std::size_t i = 0; i < 50; ++i) {
        EXPECT_NEAR(std::get<double>(r.table.rows[i][col]), std::get<double>(r.table.rows[100 - i][col]), 1e-8);
    }
}

TEST(Output, CsvAndJson) {
    ResultTable t{{"name", "value"}, {{std::string("a,b"), 0.1}, {std::string("c"), 1e-300}}};
    const auto text = csv(t);
    EXPECT_NE(text.find("name,value"), std::string::npos);
    EXPECT_NE(text.find("\"a,b\",0.10000000000000001"), std::string::npos);
    std::ostringstream js;
    write_table(js, t, OutputFormat::Json);
    EXPECT_NE(js.str().find("\"name\""), std::string::npos);
    EXPECT_EQ(js.str().front(), '[');
    EXPECT_EQ(output_format_from_string("json"), OutputFormat::Json);
    EXPECT_THROW(output_format_from_string("xml"), InvalidInput);
}

TEST(Verify, FreeBeamUniformLoadPasses) {
    const auto c = parse_problem_config(read_text_file(std::string(FSBEAM_CONFIG_DIR) + "/ff_uniform.json"));
    const auto report = verify_problem(c, 512);
    EXPECT_FALSE(report.any_failed());
    for (const auto& check : report.checks) {
        EXPECT_NE(check.status, CheckStatus::Fail) << check.name;
        EXPECT_NE(check.status, CheckStatus::Warn) << check.name;
    }
}

TEST(Verify, CantileverFccmWarnsAtFreeEnd) {
    ProblemConfig c{BeamProblem(FoundationBeamModel::from_dimensionless(1e6, 0), BoundaryConditionSpec::from_label("CF"),
                                LoadSpec{{1e3, 2e3, 5e3, 1e4}, {}, {}}),
                    Method::FCCM, 40, 0};
    const auto report = verify_problem(c, 1024);
    EXPECT_FALSE(report.any_failed());
    bool warned = false;
    for (const auto& check : report.checks) warned = warned || check.status == CheckStatus::Warn;
    EXPECT_TRUE(warned);
    EXPECT_EQ(verify_table(report).rows.size(), report.checks.size());
}
