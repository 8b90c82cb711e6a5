#include "fsbeam/particular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fsbeam/error.hpp"
#include "fsbeam/polynomial.hpp"
#include "fsbeam/quadrature.hpp"

namespace fsbeam {

namespace {

// int_0^1 p(xi) sin(m pi xi) dxi for p(xi) = sum_j c[j] xi^j. Repeated
// integration by parts terminates for polynomials and, since sin(m pi) = 0,
// only even derivatives at the endpoints survive:
//   sum_k (-1)^k [p^(2k)(0) - (-1)^m p^(2k)(1)] / beta^(2k+1).
double polynomial_sine_moment(std::span<const double> c, int m) {
    const double beta = m * std::numbers::pi;
    const double end_sign = (m % 2 == 0) ? 1.0 : -1.0;
    double sum = 0.0;
    double beta_pow = beta;
    double sign = 1.0;
    for (int order = 0; order < static_cast<int>(c.size()); order += 2) {
        const double at0 = scaled_monomial_derivative(c, 1.0, order, 0.0);
        const double at1 = scaled_monomial_derivative(c, 1.0, order, 1.0);
        sum += sign * (at0 - end_sign * at1) / beta_pow;
        beta_pow *= beta * beta;
        sign = -sign;
    }
    return sum;
}

constexpr double kSampledRelTol = 1e-12;

}  // namespace

double sine_frequency(int m, double a) { return m * std::numbers::pi / a; }

double sine_series_derivative(std::span<const double> coeffs, double a, int order, double x) {
    if (order < 0) throw std::out_of_range("derivative order must be non-negative");
    const bool odd = order % 2 == 1;
    const double sign = ((order / 2) % 2 == 0) ? 1.0 : -1.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        const double alpha = sine_frequency(static_cast<int>(i) + 1, a);
        const double trig = odd ? std::cos(alpha * x) : std::sin(alpha * x);
        sum += coeffs[i] * std::pow(alpha, order) * trig;
    }
    return sign * sum;
}

std::vector<double> residual_sine_coefficients(const LoadSpec& load,
                                               const SupplementarySolution& supp, int M,
                                               double a) {
    if (M < 1) throw InvalidInput("truncation order M must be at least 1");
    std::vector<double> out(static_cast<std::size_t>(M), 0.0);

    // Polynomial part of q - q_s in the (x/a)^j basis.
    std::vector<double> diff = load.poly;
    const auto& qs = supp.interpolant().coeffs;
    if (diff.size() < qs.size()) diff.resize(qs.size(), 0.0);
    for (std::size_t j = 0; j < qs.size(); ++j) diff[j] -= qs[j];

    std::vector<double> segments;
    if (load.sampled) {
        segments = {0.0, a};
        std::vector<double> inner;
        for (double b : load.sampled->breakpoints) {
            if (b > 0.0 && b < a) inner.push_back(b);
        }
        segments = merge_breakpoints(segments, inner);
    }

    for (int m = 1; m <= M; ++m) {
        double v = diff.empty() ? 0.0 : 2.0 * polynomial_sine_moment(diff, m);
        const double alpha = sine_frequency(m, a);
        if (load.sampled) {
            const auto& density = load.sampled->density;
            const auto integrand = [&](double x) { return density(x) * std::sin(alpha * x); };
            const AdaptiveResult r = integrate_adaptive(integrand, segments, kSampledRelTol,
                                                        1e-14, std::max(4 * m, 4));
            if (!r.converged) {
                std::ostringstream os;
                os << "sampled-load sine coefficient " << m << " did not reach relative tolerance "
                   << kSampledRelTol << " (estimate " << r.error_estimate << ")";
                throw SolverFailure(os.str());
            }
            v += 2.0 / a * r.value;
        }
        for (const auto& p : load.points) v += 2.0 * p.P / a * std::sin(alpha * p.x0);
        out[static_cast<std::size_t>(m - 1)] = v;
    }
    return out;
}

std::vector<double> solve_particular_coefficients(const FoundationBeamModel& model,
                                                  std::span<const double> load_coeffs) {
    std::vector<double> out(load_coeffs.size());
    for (std::size_t i = 0; i < load_coeffs.size(); ++i) {
        const double alpha = sine_frequency(static_cast<int>(i) + 1, model.a());
        const double a2 = alpha * alpha;
        out[i] = load_coeffs[i] / (model.EI() * a2 * a2 + model.Gp() * a2 + model.k());
    }
    return out;
}

ParticularSolution::ParticularSolution(double a, std::vector<double> load_coeffs,
                                       std::vector<double> coeffs)
    : a_(a), load_coeffs_(std::move(load_coeffs)), coeffs_(std::move(coeffs)) {
    if (!(a > 0.0)) throw InvalidInput("particular solution length must be positive");
}

ParticularSolution ParticularSolution::build(const FoundationBeamModel& model,
                                             const LoadSpec& load,
                                             const SupplementarySolution& supp, int M) {
    std::vector<double> vqp = residual_sine_coefficients(load, supp, M, model.a());
    std::vector<double> v2 = solve_particular_coefficients(model, vqp);
    return ParticularSolution(model.a(), std::move(vqp), std::move(v2));
}

}  // namespace fsbeam
