#include "fsbeam/polynomial.hpp"

#include <cmath>
#include <cstddef>

namespace fsbeam {

double scaled_monomial_derivative(std::span<const double> c, double a, int order, double x) {
    const auto n = static_cast<std::size_t>(order);
    if (c.size() <= n) return 0.0;
    const double xi = x / a;
    // Horner over the differentiated coefficients c[j] j!/(j-n)!.
    double value = 0.0;
    for (std::size_t j = c.size(); j-- > n;) {
        double falling = 1.0;
        for (std::size_t i = 0; i < n; ++i) falling *= static_cast<double>(j - i);
        value = value * xi + c[j] * falling;
    }
    return value / std::pow(a, order);
}

}  // namespace fsbeam
