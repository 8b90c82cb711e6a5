#pragma once

#include <array>
#include <variant>

#include "fsbeam/model.hpp"

namespace fsbeam {

/// Four distinct real roots +-alpha1, +-alpha2 (alpha1 > alpha2 > 0).
struct DistinctReal {
    double alpha1;
    double alpha2;
};

/// Two double real roots +-alpha3.
struct DoubleReal {
    double alpha3;
};

/// Four complex roots +-alpha5 +- i alpha6.
struct ComplexConjugate {
    double alpha5;
    double alpha6;
};

using RootRegime = std::variant<DistinctReal, DoubleReal, ComplexConjugate>;

inline constexpr double kDefaultRegimeTolerance = 1e-9;

/// Roots of EI eta^4 - Gp eta^2 + k = 0. |delta_r| <= rel_tol * max(G_pr^2, 4 k_r)
/// is classified as the double-root case.
RootRegime classify_regime(const FoundationBeamModel& model,
                           double rel_tol = kDefaultRegimeTolerance);

const char* regime_name(const RootRegime& regime);

/// sinh(alpha x) / sinh(alpha a) without overflow for alpha a up to ~1e300.
double scaled_sinh_ratio(double alpha, double x, double a);

/// cosh(alpha x) / sinh(alpha a), same scaling as scaled_sinh_ratio.
double scaled_cosh_ratio(double alpha, double x, double a);

/// Which four functions span the homogeneous solution space.
enum class SpanningSet {
    /// Normalized hyperbolic/trigonometric products, one column per regime.
    Normalized,
    /// Bounded exponentials e^{-alpha5 (a-x)} {cos, sin}(alpha6 x) and
    /// e^{-alpha5 x} {cos, sin}(alpha6 (a-x)); complex regime only, used when
    /// sin(alpha6 a) is too close to zero for the normalized set.
    DecayingExponential,
};

/// Four linearly independent solutions of EI p'''' - Gp p'' + k p = 0 on [0, a]
/// with closed-form derivatives of any order.
class HomogeneousBasis {
public:
    HomogeneousBasis(RootRegime regime, double a, SpanningSet set = SpanningSet::Normalized);

    /// Classifies the model and picks the normalized set unless
    /// |sin(alpha6 a)| < 1e-8.
    static HomogeneousBasis for_model(const FoundationBeamModel& model,
                                      double rel_tol = kDefaultRegimeTolerance);

    const RootRegime& regime() const noexcept { return regime_; }
    SpanningSet spanning_set() const noexcept { return set_; }
    double length() const noexcept { return a_; }

    /// d^order p_member / dx^order at x; member in [0, 4), order in [0, 4].
    double eval(int member, int order, double x) const;

    /// All four members at once.
    std::array<double, 4> eval_all(int order, double x) const;

private:
    RootRegime regime_;
    double a_;
    SpanningSet set_;
    double inv_sin_a_ = 0.0;  // 1 / sin(alpha6 a), normalized complex set only
};

}  // namespace fsbeam
