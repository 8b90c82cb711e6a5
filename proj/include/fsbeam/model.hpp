#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fsbeam {

/// Bernoulli-Euler beam of length a resting on a two-parameter (Pasternak)
/// foundation. Governing equation: EI w'''' - Gp w'' + k w = q on [0, a].
///
/// Immutable once constructed; the constructor rejects EI <= 0, a <= 0,
/// k <= 0 and Gp < 0.
class FoundationBeamModel {
public:
    FoundationBeamModel(double EI, double a, double k, double Gp);

    /// Model with EI = a = 1 so that k = k_r and Gp = G_pr.
    static FoundationBeamModel from_dimensionless(double k_r, double G_pr);

    double EI() const noexcept { return EI_; }
    double a() const noexcept { return a_; }
    double k() const noexcept { return k_; }
    double Gp() const noexcept { return Gp_; }

    /// k a^4 / EI
    double k_r() const noexcept { return k_ * a_ * a_ * a_ * a_ / EI_; }
    /// Gp a^2 / EI
    double G_pr() const noexcept { return Gp_ * a_ * a_ / EI_; }
    /// G_pr^2 - 4 k_r; its sign selects the characteristic-root regime.
    double delta_r() const noexcept { return G_pr() * G_pr() - 4.0 * k_r(); }

private:
    double EI_;
    double a_;
    double k_;
    double Gp_;
};

struct DimensionlessParameters {
    double k_r;
    double G_pr;
    double delta_r;
};

DimensionlessParameters derive_dimensionless(const FoundationBeamModel& model);

/// Generalized clamped (w, theta), simply supported (w, M) and free (M, Q) ends.
enum class EndKind { Clamped, Simple, Free };

char to_char(EndKind kind);
EndKind end_kind_from_char(char c);

/// Two prescribed values per end, interpreted by kind:
/// C -> (w, theta), S -> (w, M), F -> (M, Q).
struct EndCondition {
    EndKind kind = EndKind::Clamped;
    double value1 = 0.0;
    double value2 = 0.0;
};

struct BoundaryConditionSpec {
    EndCondition left;   ///< at x = 0
    EndCondition right;  ///< at x = a

    /// Scheme label such as "CC", "SS", "CF".
    std::string label() const;

    /// Homogeneous data for a two-letter label ("CF" -> clamped left, free right).
    static BoundaryConditionSpec from_label(std::string_view label);
};

/// Concentrated force P (N) at x0 (m), 0 < x0 < a.
struct PointLoad {
    double P = 0.0;
    double x0 = 0.0;
};

/// User-supplied smooth load density. Quadrature panels are split at
/// `breakpoints` so that kinks of tabulated data fall on panel edges.
struct SampledLoad {
    std::function<double(double)> density;
    std::vector<double> breakpoints;
};

/// Transverse load: polynomial part sum_j poly[j] (x/a)^j, optional sampled
/// part, and Dirac point loads carried symbolically.
struct LoadSpec {
    std::vector<double> poly;
    std::vector<PointLoad> points;
    std::optional<SampledLoad> sampled;

    bool has_smooth_part() const noexcept { return !poly.empty() || sampled.has_value(); }

    /// Throws InvalidInput when empty or when a point load is not strictly interior.
    void validate(double a) const;

    /// Smooth load density at x (point loads excluded). Throws on x outside [0, a].
    double smooth_density(double a, double x) const;
};

/// Free-function form of LoadSpec::smooth_density.
double evaluate_smooth_load(const LoadSpec& load, double a, double x);

/// Tabulated load (x_i, q_i) linearly interpolated; breakpoints at the samples.
SampledLoad tabulated_load(std::vector<double> xs, std::vector<double> qs);

/// Model, boundary conditions and load of one bending problem.
struct BeamProblem {
    FoundationBeamModel model;
    BoundaryConditionSpec bc;
    LoadSpec load;

    BeamProblem(FoundationBeamModel m, BoundaryConditionSpec b, LoadSpec l);
};

}  // namespace fsbeam
