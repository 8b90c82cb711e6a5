#pragma once

#include <array>
#include <functional>
#include <vector>

#include "fsbeam/solvers.hpp"

namespace fsbeam {

struct FieldSample {
    double x = 0.0;
    double w = 0.0;
    double theta = 0.0;
    double moment = 0.0;
    double shear = 0.0;
};

FieldSample eval_fields(const MultiscaleSolution& sol, double x);

/// Anything that can produce a FieldSample at x (multiscale solution, FD
/// oracle, closed form).
using FieldFunction = std::function<FieldSample(double)>;

FieldFunction field_function(const MultiscaleSolution& sol);

enum class Field { Deflection, Slope, Moment };

const char* field_name(Field f);
constexpr std::array<Field, 3> kErrorFields = {Field::Deflection, Field::Slope, Field::Moment};

double field_value(const FieldSample& s, Field f);

struct FieldIndex {
    double interior = 0.0;  // e_I
    double boundary = 0.0;  // e_B
    /// Reference vanishes on the interior grid; interior is then the
    /// absolute RMS error.
    bool absolute = false;
};

struct ErrorReport {
    std::array<FieldIndex, 3> fields;  // indexed like kErrorFields
    int interior_points = 0;

    const FieldIndex& operator[](Field f) const { return fields[static_cast<std::size_t>(f)]; }
    FieldIndex& operator[](Field f) { return fields[static_cast<std::size_t>(f)]; }
};

constexpr int kDefaultInteriorPoints = 99;
constexpr double kErrorFloor = 1e-30;

/// e_I: relative root-sum-square error on x_i = i a / (grid + 1), i = 1..grid.
/// e_B: largest endpoint error divided by the interior sup of the reference.
ErrorReport compute_errors(const FieldFunction& solution, const FieldFunction& reference, double a,
                           int grid = kDefaultInteriorPoints);

/// Uniform interior sample positions used by compute_errors.
std::vector<double> interior_grid(double a, int grid);

}  // namespace fsbeam
