#pragma once

#include "shellga/surface.hpp"

namespace shellga {

// Built-in charts, all with exact first and second partials.

// (X1, X2, 0)
Chart make_plane(double extent = 3.0);

// Arc-length parametrized cylinder of radius R:
// (X1, R cos(X2/R), R sin(X2/R)); X1 axial, X2 azimuthal arc length.
Chart make_cylinder(double radius, double axial_extent = 3.0);

// Sphere of radius R in colatitude/longitude, with a margin excluded around
// the poles where the parametrization degenerates.
Chart make_sphere(double radius, double pole_margin = 0.35);

// Copy of a chart with the exact derivative callbacks removed, forcing the
// central-difference path.
Chart strip_exact(const Chart& chart);

} // namespace shellga
