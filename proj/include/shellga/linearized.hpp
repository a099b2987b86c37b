#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shellga/analytic.hpp"
#include "shellga/motions.hpp"
#include "shellga/stress.hpp"

namespace shellga {

// Static displacement field over reference coordinates with exact partials.
// Time-dependent backgrounds go through the Motion pipeline instead.
struct DisplacementField {
    std::function<Vec3(double, double)> value, d1, d2, d11, d12, d22;

    static DisplacementField zero();
    static DisplacementField from_series(const AnalyticVecField& field, double t = 0.0);
};

// Sum U0 + scale * U1 with derivatives.
DisplacementField combine(const DisplacementField& base, const DisplacementField& shape,
                          double scale);

Motion static_displacement_motion(const Chart& ref, const DisplacementField& field,
                                  const std::string& id = "displacement");

// Total displacement U = base + eps * shape about a background that is
// assumed to satisfy the balance laws on its own.
struct PerturbedMotion {
    DisplacementField base;  // background displacement
    DisplacementField shape; // perturbation shape
    double eps = 0.0;
    bool base_time_dependent = false;  // data-model flag; evaluators require false
    bool shape_time_dependent = false;
};

template <typename T>
struct Perturbed {
    T zeroth{};
    T first{};
};

struct PerturbedKinematics {
    SurfaceFrame ref;
    Vec3 f0[2], fp[2];               // deformation gradient columns, both orders
    Perturbed<double> det_f;
    double finv0[2][3]{}, finvp[2][3]{}; // inverse-map rows over the ambient basis
    Perturbed<Mat2> strain;
    Perturbed<Vec3> normal;          // convected normal
    Perturbed<Mat2> curvature_change;
    Mat2 metric0;                    // zeroth-order convected metric
    Mat2 fbf0, fbfp;                 // curvature map F^-1 b F, mixed components
};

PerturbedKinematics perturb_kinematics(const PerturbedMotion& pm, const Chart& ref,
                                       double u1, double u2);

struct PerturbedStress {
    Perturbed<Mat2> couple_mod;  // N and N'
    Perturbed<Mat2> stress2;     // tangential S and S'
    Vec3 t0[2], tp[2];           // T(E^i) columns, both orders
    Multivector m0[2], mp[2];    // M(E^i) columns, both orders
    Perturbed<double> rho_area;  // rho det F: reference density and its rate
};

PerturbedStress perturb_constitutive(const PerturbedKinematics& pk,
                                     const MaterialParams& mat, double rho_mass);

// First-order change of curvature for a perturbation about the undeformed
// state (normal second-derivative form).
Mat2 small_displacement_curvature(const DisplacementField& shape, const Chart& ref,
                                  double u1, double u2);

// rho0 d2U'/dt2 - div T' - rho0 b' - rho' b0 for a static perturbation
// (the inertia term vanishes).
Vec3 linearized_momentum_residual(const PerturbedMotion& pm, const Chart& ref,
                                  const MaterialParams& mat, double rho_mass,
                                  double u1, double u2, double step,
                                  const std::function<Vec3(double, double)>& body_force_first,
                                  const std::function<Vec3(double, double)>& body_force_zero);

// First-order angular momentum expression as a bivector:
// F0(E_i)^T'(E^i) + F'(E_i)^T0(E^i) + div M' + rho0 c' + rho' c0.
Multivector linearized_angular_momentum(const PerturbedMotion& pm, const Chart& ref,
                                        const MaterialParams& mat, double rho_mass,
                                        double u1, double u2, double step,
                                        const Multivector& c_first = {},
                                        const Multivector& c_zero = {});

// Uni-axial pre-strained cylinder with an analytic perturbation given by its
// local frame components over (X1, X2).
struct CylinderCase {
    double radius = 1.0;
    double eps = 0.0; // background axial strain
    MaterialParams material;
    AnalyticSeries shape_local[3]; // U'_1 axial, U'_2 azimuthal, U'_3 normal
};

struct CylinderTables {
    Mat2 strain0, strain1;
    Mat2 curv0, curv1;
    Mat2 couple0, couple1;
    Mat2 stress0, stress1;
    double det_f0 = 0.0;
};

// Component tables from the printed closed forms of the pre-strained
// cylinder.
CylinderTables cylinder_closed_form(const CylinderCase& cc, double u1, double u2);

// Same tables through the general perturbation pipeline.
CylinderTables cylinder_general(const CylinderCase& cc, double u1, double u2);

// Same tables by central-difference extraction from the nonlinear pipeline.
CylinderTables cylinder_extracted(const CylinderCase& cc, double u1, double u2,
                                  double eps_fd = 1e-5);

DisplacementField cylinder_background(const CylinderCase& cc);
DisplacementField cylinder_shape_ambient(const CylinderCase& cc);

// Richardson verification that every expansion drops the quadratic remainder.
struct RichardsonEntry {
    std::string tensor;
    double scale = 0.0;              // magnitude of the expansion terms
    std::vector<double> err;         // remainder max-norm per eps
    std::vector<double> ratio;       // err[k] / err[k+1]
    bool exact = false;              // remainder at round-off for linear maps
};

struct RichardsonReport {
    std::vector<RichardsonEntry> entries;
    bool pass(double lo = 3.5, double hi = 4.5) const;
};

RichardsonReport linearization_consistency(const PerturbedMotion& pm, const Chart& ref,
                                           const MaterialParams& mat, double rho_mass,
                                           const std::vector<std::pair<double, double>>& points,
                                           const std::vector<double>& eps_list);

} // namespace shellga
