#include <gtest/gtest.h>

#include <cmath>

#include "fsbeam/error.hpp"
#include "fsbeam/supplementary.hpp"

using namespace fsbeam;

namespace {
const LoadSpec kEq97{{1e3, 2e3, 5e3, 1e4}, {}, {}};
}

TEST(Supplementary, FitIsExactForMatchingDegree) {
    auto fit = fit_load_polynomial(LoadSpec{{3.0, -2.0}, {}, {}}, 1, 2.0);
    ASSERT_EQ(fit.coeffs.size(), 2u);
    EXPECT_NEAR(fit.coeffs[0], 3.0, 1e-13);
    EXPECT_NEAR(fit.coeffs[1], -2.0, 1e-13);

    fit = fit_load_polynomial(kEq97, 3, 1.0);
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(fit.coeffs[j], kEq97.poly[j], 1e-9 * 1e4);
    EXPECT_EQ(fit.nodes.size(), 4u);
    EXPECT_DOUBLE_EQ(fit.nodes[1], 1.0 / 3.0);
}

TEST(Supplementary, UnderResolvedFitLeavesResidual) {
    const LoadSpec cubic{{0, 0, 0, 1}, {}, {}};
    const auto supp = SupplementarySolution::build(FoundationBeamModel(1, 1, 1, 0), cubic, 2);
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double x = i / 1000.0;
        worst = std::max(worst, std::abs(supp.eval_load(x) - x * x * x));
    }
    EXPECT_GT(worst, 1e-3);
}

TEST(Supplementary, PointLoadsAreNotSampled) {
    const LoadSpec load{{2.0}, {{5.0, 0.5}}, {}};
    const auto fit = fit_load_polynomial(load, 2, 1.0);
    for (double s : fit.samples) EXPECT_DOUBLE_EQ(s, 2.0);
}

TEST(Supplementary, OperatorMatrixEntries) {
    const FoundationBeamModel m(3.0, 2.0, 5.0, 7.0);
    const auto Rs = assemble_Rs(m, 4);
    ASSERT_EQ(Rs.rows(), 5);
    EXPECT_DOUBLE_EQ(Rs(0, 0), 5.0);
    EXPECT_DOUBLE_EQ(Rs(0, 2), -2 * 7.0 / 4.0);
    EXPECT_DOUBLE_EQ(Rs(0, 4), 24 * 3.0 / 16.0);
    EXPECT_DOUBLE_EQ(Rs(1, 3), -6 * 7.0 / 4.0);
    EXPECT_DOUBLE_EQ(Rs(1, 0), 0.0);
    EXPECT_DOUBLE_EQ(Rs(0, 1), 0.0);

    const auto R1 = assemble_Rs(m, 1);
    EXPECT_TRUE(R1.isApprox(5.0 * Eigen::Matrix2d::Identity()));
}

TEST(Supplementary, BackSubstitution) {
    const FoundationBeamModel m(1, 1, 1, 1);
    auto a = solve_supplementary(assemble_Rs(m, 2), {0, 0, 1});
    EXPECT_DOUBLE_EQ(a[0], 2.0);
    EXPECT_DOUBLE_EQ(a[1], 0.0);
    EXPECT_DOUBLE_EQ(a[2], 1.0);

    const FoundationBeamModel m2(2, 3, 7, 5);
    a = solve_supplementary(assemble_Rs(m2, 3), {4.0, 0, 0, 0});
    EXPECT_DOUBLE_EQ(a[0], 4.0 / 7.0);
    for (int j = 1; j < 4; ++j) EXPECT_EQ(a[j], 0.0);
}

TEST(Supplementary, Evaluation) {
    const SupplementarySolution empty;
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(empty.eval(d, 0.3), 0.0);

    const auto s = SupplementarySolution::build(FoundationBeamModel(1, 1, 1, 1), LoadSpec{{0, 0, 1}, {}, {}}, 2);
    EXPECT_NEAR(s.eval(0, 0.5), 2.25, 1e-12);
    EXPECT_NEAR(s.eval(2, 0.7), 2.0, 1e-12);
    EXPECT_NEAR(s.eval(4, 0.7), 0.0, 1e-12);
}

TEST(Supplementary, ExactForCubicLoad) {
    const FoundationBeamModel m(1, 1, 1e6, 0);
    const auto s = SupplementarySolution::build(m, kEq97, 3);
    double worst = 0.0, qmax = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = i / 99.0;
        const double q = s.eval_load(x);
        qmax = std::max(qmax, std::abs(q));
        worst = std::max(worst, std::abs(m.EI() * s.eval(4, x) - m.Gp() * s.eval(2, x) + m.k() * s.eval(0, x) - q));
    }
    EXPECT_LE(worst, 1e-9 * qmax);
    // Horner on the known coefficients: w_s = q / k for Gp = 0 and cubic q
    EXPECT_NEAR(s.eval(0, 0.5), (1e3 + 2e3 * 0.5 + 5e3 * 0.25 + 1e4 * 0.125) / 1e6, 1e-15);
}

TEST(Supplementary, RejectsBadOrder) {
    EXPECT_THROW(fit_load_polynomial(kEq97, kMaxSupplementaryOrder + 1, 1.0), InvalidInput);
    EXPECT_THROW(fit_load_polynomial(kEq97, 0, 1.0), InvalidInput);
}
