#pragma once

#include "shellga/analytic.hpp"
#include "shellga/kinematics.hpp"

namespace shellga {

// Built-in motions.  All carry exact derivatives where the underlying chart
// does, so the high-accuracy verification paths stay free of step error.

Motion identity_motion(const Chart& ref);

// Rotation about `axis` through `center` at constant rate, plus a uniform
// translation velocity.
Motion rigid_motion(const Chart& ref, const Vec3& axis, double rate,
                    const Vec3& center = {}, const Vec3& translation_velocity = {});

// x = X + eps * X1 * axis  (background stretch along a fixed direction).
Motion uniaxial_motion(const Chart& ref, double eps, const Vec3& axis = {1.0, 0.0, 0.0});

// Radius R -> R (1 + delta s(t)) with convected coordinates kept from the
// arc-length chart of the original cylinder; s = sin(omega t) when omega > 0,
// else s = 1.
Motion cylinder_inflation_motion(double radius, double delta, double omega = 0.0);

// x = X + U(X1, X2, t) with U an analytic ambient-component field.
Motion analytic_displacement_motion(const Chart& ref, const AnalyticVecField& field,
                                    const std::string& id = "analytic");

} // namespace shellga
