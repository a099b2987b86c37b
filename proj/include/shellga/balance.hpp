#pragma once

#include <array>
#include <functional>

#include "shellga/stress.hpp"

namespace shellga {

// Component field T^{ai}(u): spatial-frame row a, reference coordinate
// column i.
using VectorComponentField = std::function<void(double, double, double out[3][2])>;

// Component field M^{Ai}(u) over the bivector rows {(1,3),(2,3),(1,2)}.
// The divergence formula below requires a vanishing (1,2) row, the range
// restriction carried by couple stresses.
using BivectorComponentField = std::function<void(double, double, double out[3][2])>;

struct VectorDivergence {
    double comp[3]{}; // coefficients over the convected frame {e1, e2, e3}
    Vec3 ambient;
};

VectorDivergence covariant_divergence_vector(const VectorComponentField& field,
                                             const SurfaceFrame& ref,
                                             const SurfaceFrame& spa,
                                             const ParamRect& domain,
                                             double u1, double u2, double step);

struct BivectorDivergence {
    double comp13 = 0.0, comp23 = 0.0, comp12 = 0.0;
    Multivector ambient;
};

BivectorDivergence covariant_divergence_bivector(const BivectorComponentField& field,
                                                 const SurfaceFrame& ref,
                                                 const SurfaceFrame& spa,
                                                 const ParamRect& domain,
                                                 double u1, double u2, double step);

// Rate of work done on a body with angular velocity omega by a torque q,
// both as bivectors.
double bivector_work(const Multivector& omega, const Multivector& torque);

// Everything needed to evaluate the local balance laws at grid points.
struct PointCase {
    const Chart* ref = nullptr;
    const Motion* motion = nullptr;
    double time = 0.0;
    MaterialParams material;
    // per unit mass; null means zero
    std::function<Vec3(double, double, double)> body_force;
    // (c^{(1,3)}, c^{(2,3)}) per unit mass; the (1,2) component is zero
    std::function<std::array<double, 2>(double, double, double)> body_moment;
    // spatial area density; null means rho0 / det F
    std::function<double(double, double, double)> rho_field;
    DiffPolicy policy;
    TimePolicy timestep;
    double stencil_step = 1e-3;
};

// Full pointwise stress assembly (kinematics, constitutive law, shear
// closure) for a case.
struct AssembledPoint {
    DeformationState def;
    Mat2 curvature_change;
    ConstitutiveResult constitutive;
    ShearStress shear;
    StressState stress;
};
AssembledPoint assemble_point(const PointCase& pc, double u1, double u2);

// rho0 dV/dt - div T - rho0 b
Vec3 momentum_residual(const PointCase& pc, double u1, double u2);

struct AngularMomentumInputs {
    double s31 = 0.0, s32 = 0.0;
    Mat2 stress2;     // in-plane S^{ij}
    Mat2 couple_mod;  // N^{ij}
    Mat2 bmix;        // spatial b^i_j
    double div13 = 0.0, div23 = 0.0; // couple-stress divergence coefficients
    double c13 = 0.0, c23 = 0.0;
    double rho0 = 1.0;
};

// The three bivector components of the local angular momentum balance.
std::array<double, 3> angular_momentum_residual(const AngularMomentumInputs& in);
std::array<double, 3> angular_momentum_residual(const PointCase& pc, double u1, double u2);

// rho0 dE/dt - tr(Stilde Edot) - tr(N Hdot), the time derivative taken by
// central differences along the convected point.
double energy_residual(const PointCase& pc, double u1, double u2, double dt);

// d/dt of rho det F along the motion.
double mass_residual(const PointCase& pc, double u1, double u2, double dt);

struct PointResiduals {
    Vec3 momentum;
    std::array<double, 3> angular{};
    double energy = 0.0;
    double mass = 0.0;
};
PointResiduals evaluate_residuals(const PointCase& pc, double u1, double u2);

} // namespace shellga
