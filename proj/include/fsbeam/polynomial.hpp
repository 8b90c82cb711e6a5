#pragma once

#include <span>

namespace fsbeam {

/// order-th derivative with respect to x of sum_j c[j] (x/a)^j.
double scaled_monomial_derivative(std::span<const double> c, double a, int order, double x);

}  // namespace fsbeam
