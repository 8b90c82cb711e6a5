#include "fsbeam/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fsbeam/error.hpp"

namespace fsbeam {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidInput(std::string(name) + " must be finite");
    }
}

}  // namespace

FoundationBeamModel::FoundationBeamModel(double EI, double a, double k, double Gp)
    : EI_(EI), a_(a), k_(k), Gp_(Gp) {
    require_finite(EI, "EI");
    require_finite(a, "a");
    require_finite(k, "k");
    require_finite(Gp, "Gp");
    if (EI <= 0.0) throw InvalidInput("flexural rigidity EI must be positive");
    if (a <= 0.0) throw InvalidInput("beam length a must be positive");
    if (k == 0.0) {
        throw InvalidInput(
            "k = 0 is not supported: the polynomial supplementary solution and the "
            "homogeneous basis both require a nonzero Winkler modulus");
    }
    if (k < 0.0) throw InvalidInput("Winkler modulus k must be positive");
    if (Gp < 0.0) throw InvalidInput("foundation shear parameter Gp must be non-negative");
    if (!std::isfinite(k_r()) || !std::isfinite(G_pr())) {
        throw InvalidInput("dimensionless parameters k_r, G_pr overflow");
    }
}

FoundationBeamModel FoundationBeamModel::from_dimensionless(double k_r, double G_pr) {
    return FoundationBeamModel(1.0, 1.0, k_r, G_pr);
}

DimensionlessParameters derive_dimensionless(const FoundationBeamModel& model) {
    return {model.k_r(), model.G_pr(), model.delta_r()};
}

char to_char(EndKind kind) {
    switch (kind) {
        case EndKind::Clamped: return 'C';
        case EndKind::Simple: return 'S';
        case EndKind::Free: return 'F';
    }
    return '?';
}

EndKind end_kind_from_char(char c) {
    switch (c) {
        case 'C': case 'c': return EndKind::Clamped;
        case 'S': case 's': return EndKind::Simple;
        case 'F': case 'f': return EndKind::Free;
        default: break;
    }
    throw InvalidInput(std::string("unknown end condition kind '") + c + "' (expected C, S or F)");
}

std::string BoundaryConditionSpec::label() const {
    return {to_char(left.kind), to_char(right.kind)};
}

BoundaryConditionSpec BoundaryConditionSpec::from_label(std::string_view label) {
    if (label.size() != 2) {
        throw InvalidInput("boundary condition label must have two letters, got '" +
                           std::string(label) + "'");
    }
    BoundaryConditionSpec bc;
    bc.left.kind = end_kind_from_char(label[0]);
    bc.right.kind = end_kind_from_char(label[1]);
    return bc;
}

void LoadSpec::validate(double a) const {
    if (poly.empty() && points.empty() && !sampled) {
        throw InvalidInput("load specification is empty");
    }
    for (double c : poly) require_finite(c, "polynomial load coefficient");
    for (const auto& p : points) {
        require_finite(p.P, "point load magnitude");
        if (!(p.x0 > 0.0 && p.x0 < a)) {
            std::ostringstream os;
            os << "point load location x0 = " << p.x0 << " must lie strictly inside (0, " << a
               << ")";
            throw InvalidInput(os.str());
        }
    }
    if (sampled && !sampled->density) throw InvalidInput("sampled load has no density function");
}

double LoadSpec::smooth_density(double a, double x) const {
    if (!(x >= 0.0 && x <= a)) {
        std::ostringstream os;
        os << "load evaluated at x = " << x << " outside [0, " << a << "]";
        throw InvalidInput(os.str());
    }
    double value = 0.0;
    const double xi = x / a;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) value = value * xi + *it;
    if (sampled) value += sampled->density(x);
    return value;
}

double evaluate_smooth_load(const LoadSpec& load, double a, double x) {
    return load.smooth_density(a, x);
}

SampledLoad tabulated_load(std::vector<double> xs, std::vector<double> qs) {
    if (xs.size() != qs.size() || xs.size() < 2) {
        throw InvalidInput("tabulated load needs at least two (x, q) pairs of equal length");
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) throw InvalidInput("tabulated load abscissae must increase");
    }
    SampledLoad s;
    s.breakpoints = xs;
    s.density = [xs = std::move(xs), qs = std::move(qs)](double x) {
        if (x <= xs.front()) return qs.front();
        if (x >= xs.back()) return qs.back();
        const auto hi = static_cast<std::size_t>(
            std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
        const std::size_t lo = hi - 1;
        const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
        return (1.0 - t) * qs[lo] + t * qs[hi];
    };
    return s;
}

BeamProblem::BeamProblem(FoundationBeamModel m, BoundaryConditionSpec b, LoadSpec l)
    : model(m), bc(b), load(std::move(l)) {
    load.validate(model.a());
}

}  // namespace fsbeam
