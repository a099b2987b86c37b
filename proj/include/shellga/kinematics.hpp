#pragma once

#include <functional>
#include <string>

#include "shellga/surface.hpp"

namespace shellga {

// A motion of the reference configuration, given directly in reference
// coordinates: (X1, X2, t) -> point.  The spatial configuration at fixed t is
// then a chart in convected coordinates.  All derivative callbacks are
// optional; missing ones fall back to central differences.
struct Motion {
    std::string id;
    std::function<Vec3(double, double, double)> position;
    std::function<Vec3(double, double, double)> d1, d2, d11, d12, d22;
    std::function<Vec3(double, double, double)> velocity;
    std::function<Vec3(double, double, double)> vel_d1, vel_d2;
    std::function<Vec3(double, double, double)> acceleration;
};

// The deformed configuration at time t as a chart over the same parameter
// rectangle (convected coordinates).
Chart spatial_chart(const Chart& ref, const Motion& motion, double t);

struct TimePolicy {
    double dt = 1e-5;
};

struct DeformationState {
    SurfaceFrame ref, spa;
    Mat2 cauchy_green;           // C_ij = g_ij
    Mat2 strain;                 // E_ij = (g_ij - G_ij)/2
    double stretch1 = 0.0, stretch2 = 0.0; // ascending
    double det_f = 0.0;
};

DeformationState deformation_state(const Chart& ref, const Motion& motion,
                                   double u1, double u2, double t,
                                   const DiffPolicy& policy = {});

// H_ij = b_ij - B_ij in convected components.
Mat2 curvature_change(const DeformationState& state);
Mat2 curvature_change(const Chart& ref, const Motion& motion, double u1, double u2,
                      double t, const DiffPolicy& policy = {});

// Velocity-gradient decomposition at a point.  Component matrices are indexed
// over the convected frame {e1, e2, e3}.
struct VelocityTensors {
    Vec3 velocity;
    double l[3][3]{};
    double n[3][3]{};
    double w[3][3]{};
    Multivector angular_velocity; // bivector omega with w(y) = y . omega
};

VelocityTensors velocity_tensors(const Chart& ref, const Motion& motion,
                                 double u1, double u2, double t,
                                 const DiffPolicy& policy = {},
                                 const TimePolicy& time = {});

struct RateTensors {
    Mat2 strain_rate;    // dE/dt at fixed (X1, X2)
    Mat2 curvature_rate; // dH/dt at fixed (X1, X2)
};

RateTensors rate_tensors(const Chart& ref, const Motion& motion,
                         double u1, double u2, double t,
                         const DiffPolicy& policy = {}, const TimePolicy& time = {});

struct KinematicState {
    DeformationState def;
    Mat2 curvature_change;
    VelocityTensors vel;
    RateTensors rate;
};

KinematicState kinematic_state(const Chart& ref, const Motion& motion,
                               double u1, double u2, double t,
                               const DiffPolicy& policy = {}, const TimePolicy& time = {});

// Velocity/acceleration with fallbacks, used by the balance evaluators.
Vec3 motion_velocity(const Motion& motion, double u1, double u2, double t, double dt);
Vec3 motion_acceleration(const Motion& motion, double u1, double u2, double t, double dt);

} // namespace shellga
