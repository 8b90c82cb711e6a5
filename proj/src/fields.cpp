#include "fsbeam/fields.hpp"

#include <algorithm>
#include <cmath>

#include "fsbeam/error.hpp"

namespace fsbeam {

FieldSample eval_fields(const MultiscaleSolution& sol, double x) {
    const double EI = sol.problem().model.EI();
    return {x, sol.derivative(0, x), sol.derivative(1, x), EI * sol.derivative(2, x),
            EI * sol.derivative(3, x)};
}

FieldFunction field_function(const MultiscaleSolution& sol) {
    return [&sol](double x) { return eval_fields(sol, x); };
}

const char* field_name(Field f) {
    switch (f) {
        case Field::Deflection: return "w";
        case Field::Slope: return "theta";
        case Field::Moment: return "moment";
    }
    return "?";
}

double field_value(const FieldSample& s, Field f) {
    switch (f) {
        case Field::Deflection: return s.w;
        case Field::Slope: return s.theta;
        case Field::Moment: return s.moment;
    }
    return 0.0;
}

std::vector<double> interior_grid(double a, int grid) {
    std::vector<double> xs(static_cast<std::size_t>(grid));
    for (int i = 1; i <= grid; ++i) xs[static_cast<std::size_t>(i - 1)] = a * i / (grid + 1);
    return xs;
}

ErrorReport compute_errors(const FieldFunction& solution, const FieldFunction& reference, double a,
                           int grid) {
    if (grid < 1) throw InvalidInput("error grid needs at least one interior point");
    std::vector<FieldSample> sol, ref;
    for (double x : interior_grid(a, grid)) {
        sol.push_back(solution(x));
        ref.push_back(reference(x));
    }
    const std::array<FieldSample, 2> sol_end = {solution(0.0), solution(a)};
    const std::array<FieldSample, 2> ref_end = {reference(0.0), reference(a)};

    ErrorReport report;
    report.interior_points = grid;
    for (Field f : kErrorFields) {
        double num = 0.0, den = 0.0, sup = 0.0;
        for (std::size_t i = 0; i < sol.size(); ++i) {
            const double r = field_value(ref[i], f);
            const double d = field_value(sol[i], f) - r;
            num += d * d;
            den += r * r;
            sup = std::max(sup, std::abs(r));
        }
        FieldIndex& idx = report[f];
        if (den > 0.0) {
            idx.interior = std::sqrt(num / den);
        } else {
            idx.interior = std::sqrt(num / grid);
            idx.absolute = true;
        }
        double end_err = 0.0;
        for (std::size_t e = 0; e < 2; ++e) {
            end_err = std::max(end_err, std::abs(field_value(sol_end[e], f) - field_value(ref_end[e], f)));
        }
        idx.boundary = end_err / std::max(sup, kErrorFloor);
    }
    return report;
}

}  // namespace fsbeam
