#include "fsbeam/homogeneous_basis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "fsbeam/error.hpp"

namespace fsbeam {

namespace {

constexpr double kSinSingularity = 1e-8;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// j-th derivative of sinh(alpha t)/sinh(alpha a) with respect to t.
double sinh_ratio_derivative(double alpha, int j, double t, double a) {
    const double scale = std::pow(alpha, j);
    return scale * ((j % 2 == 0) ? scaled_sinh_ratio(alpha, t, a) : scaled_cosh_ratio(alpha, t, a));
}

// j-th derivative of sin(beta t).
double sin_derivative(double beta, int j, double t) {
    const double scale = std::pow(beta, j);
    switch (j % 4) {
        case 0: return scale * std::sin(beta * t);
        case 1: return scale * std::cos(beta * t);
        case 2: return -scale * std::sin(beta * t);
        default: return -scale * std::cos(beta * t);
    }
}

double sign_pow(int order) { return (order % 2 == 0) ? 1.0 : -1.0; }

constexpr std::array<std::array<double, 5>, 5> kBinomial = {{
    {1, 0, 0, 0, 0},
    {1, 1, 0, 0, 0},
    {1, 2, 1, 0, 0},
    {1, 3, 3, 1, 0},
    {1, 4, 6, 4, 1},
}};

void check_member(int member, int order) {
    if (member < 0 || member > 3) {
        throw std::out_of_range("homogeneous basis member must be in [0, 4)");
    }
    if (order < 0 || order > 4) {
        throw std::out_of_range("homogeneous basis derivative order must be in [0, 4]");
    }
}

}  // namespace

RootRegime classify_regime(const FoundationBeamModel& model, double rel_tol) {
    if (!(rel_tol > 0.0)) throw InvalidInput("regime tolerance must be positive");
    const double a = model.a();
    const double kr = model.k_r();
    const double gpr = model.G_pr();
    const double delta = model.delta_r();
    const double scale = std::max(gpr * gpr, 4.0 * kr);

    if (std::abs(delta) <= rel_tol * scale) {
        return DoubleReal{std::sqrt(0.5 * gpr) / a};
    }
    if (delta > 0.0) {
        const double alpha1 = std::sqrt(0.5 * (gpr + std::sqrt(delta))) / a;
        // alpha1^2 alpha2^2 = k_r / a^4 avoids cancellation in gpr - sqrt(delta).
        const double alpha2 = std::sqrt(kr) / (a * a * alpha1);
        return DistinctReal{alpha1, alpha2};
    }
    const std::complex<double> root =
        std::sqrt(std::complex<double>(0.5 * gpr, 0.5 * std::sqrt(-delta))) / a;
    return ComplexConjugate{root.real(), root.imag()};
}

const char* regime_name(const RootRegime& regime) {
    return std::visit(Overloaded{
                          [](const DistinctReal&) { return "distinct-real"; },
                          [](const DoubleReal&) { return "double-real"; },
                          [](const ComplexConjugate&) { return "complex"; },
                      },
                      regime);
}

double scaled_sinh_ratio(double alpha, double x, double a) {
    const double den = -std::expm1(-2.0 * alpha * a);
    return std::exp(alpha * (x - a)) * (-std::expm1(-2.0 * alpha * x)) / den;
}

double scaled_cosh_ratio(double alpha, double x, double a) {
    const double den = -std::expm1(-2.0 * alpha * a);
    return std::exp(alpha * (x - a)) * (1.0 + std::exp(-2.0 * alpha * x)) / den;
}

HomogeneousBasis::HomogeneousBasis(RootRegime regime, double a, SpanningSet set)
    : regime_(regime), a_(a), set_(set) {
    if (!(a > 0.0)) throw InvalidInput("basis length must be positive");
    const auto* cc = std::get_if<ComplexConjugate>(&regime_);
    if (set_ == SpanningSet::DecayingExponential && cc == nullptr) {
        throw InvalidInput("decaying-exponential spanning set applies to complex roots only");
    }
    if (cc != nullptr && set_ == SpanningSet::Normalized) {
        const double s = std::sin(cc->alpha6 * a_);
        if (std::abs(s) < kSinSingularity) {
            std::ostringstream os;
            os << "normalized complex-root basis is singular: sin(alpha6 a) = " << s;
            throw SolverFailure(os.str());
        }
        inv_sin_a_ = 1.0 / s;
    }
}

HomogeneousBasis HomogeneousBasis::for_model(const FoundationBeamModel& model, double rel_tol) {
    RootRegime regime = classify_regime(model, rel_tol);
    if (const auto* cc = std::get_if<ComplexConjugate>(&regime)) {
        if (std::abs(std::sin(cc->alpha6 * model.a())) < kSinSingularity) {
            return HomogeneousBasis(regime, model.a(), SpanningSet::DecayingExponential);
        }
    }
    return HomogeneousBasis(regime, model.a(), SpanningSet::Normalized);
}

double HomogeneousBasis::eval(int member, int order, double x) const {
    check_member(member, order);
    const double a = a_;
    return std::visit(
        Overloaded{
            [&](const DistinctReal& r) {
                const double alpha = (member < 2) ? r.alpha1 : r.alpha2;
                if (member % 2 == 0) return sinh_ratio_derivative(alpha, order, x, a);
                return sign_pow(order) * sinh_ratio_derivative(alpha, order, a - x, a);
            },
            [&](const DoubleReal& r) {
                const double alpha = r.alpha3;
                const bool mirrored = member >= 2;
                const double t = mirrored ? a - x : x;
                const double sign = mirrored ? sign_pow(order) : 1.0;
                if (member % 2 == 0) return sign * sinh_ratio_derivative(alpha, order, t, a);
                // d^n [t f(t)] = t f^(n) + n f^(n-1)
                double value = t * sinh_ratio_derivative(alpha, order, t, a);
                if (order > 0) value += order * sinh_ratio_derivative(alpha, order - 1, t, a);
                return sign * value / a;
            },
            [&](const ComplexConjugate& r) {
                if (set_ == SpanningSet::DecayingExponential) {
                    const std::complex<double> lambda =
                        (member < 2) ? std::complex<double>(r.alpha5, r.alpha6)
                                     : std::complex<double>(-r.alpha5, -r.alpha6);
                    const std::complex<double> phase =
                        (member < 2) ? std::complex<double>(-r.alpha5 * (a - x), r.alpha6 * x)
                                     : std::complex<double>(-r.alpha5 * x, r.alpha6 * (a - x));
                    std::complex<double> value = std::exp(phase);
                    for (int i = 0; i < order; ++i) value *= lambda;
                    return (member % 2 == 0) ? value.real() : value.imag();
                }
                // member bit 1: hyperbolic factor mirrored; bit 0: trigonometric factor mirrored.
                const bool hyp_mirrored = member >= 2;
                const bool trig_mirrored = member % 2 == 1;
                const double u = hyp_mirrored ? a - x : x;
                const double v = trig_mirrored ? a - x : x;
                double value = 0.0;
                for (int j = 0; j <= order; ++j) {
                    const double f = (hyp_mirrored ? sign_pow(j) : 1.0) *
                                     sinh_ratio_derivative(r.alpha5, j, u, a);
                    const double g = (trig_mirrored ? sign_pow(order - j) : 1.0) *
                                     sin_derivative(r.alpha6, order - j, v);
                    value += kBinomial[order][j] * f * g;
                }
                return value * inv_sin_a_;
            },
        },
        regime_);
}

std::array<double, 4> HomogeneousBasis::eval_all(int order, double x) const {
    return {eval(0, order, x), eval(1, order, x), eval(2, order, x), eval(3, order, x)};
}

}  // namespace fsbeam
