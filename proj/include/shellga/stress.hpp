#pragma once

#include <array>
#include <functional>

#include "shellga/kinematics.hpp"

namespace shellga {

struct MaterialParams {
    double young = 1.0;     // Young's modulus
    double poisson = 0.3;   // Poisson's ratio
    double thickness = 0.1; // shell thickness
    double density0 = 1.0;  // reference area density

    void validate() const;

    double membrane_modulus() const
    {
        return young * thickness / (1.0 - poisson * poisson);
    }
    double bending_modulus() const
    {
        return young * thickness * thickness * thickness /
               (12.0 * (1.0 - poisson * poisson));
    }
};

// Quadratic shell energy per unit reference area: a membrane term in the
// strain and a bending term in the change of curvature, traces raised with
// the reference metric.
double energy_density(const Mat2& strain, const Mat2& curvature_change,
                      const Mat2& metric_inv, const MaterialParams& mat);

struct ConstitutiveResult {
    Mat2 stress_mod; // contravariant components of the modified 2nd PK stress
    Mat2 couple_mod; // contravariant components of the modified 2nd couple stress
};

ConstitutiveResult constitutive_eval(const Mat2& strain, const Mat2& curvature_change,
                                     const Mat2& metric_inv, const MaterialParams& mat);

// couple-stress component field over the coordinates, each evaluation in the
// local frames at that point
using CoupleField = std::function<Mat2(double, double)>;

struct ShearStress {
    double s31 = 0.0, s32 = 0.0;
};

// Normal-stress components from the in-plane angular momentum balance: the
// couple-stress divergence and the body moment determine S^{3i} without a
// constitutive law.
ShearStress shear_closure(const CoupleField& couple, const SurfaceFrame& ref,
                          const SurfaceFrame& spa, const ParamRect& domain,
                          double u1, double u2, double step,
                          double c13, double c23, double rho0);

struct StressState {
    Mat2 stress_mod;  // S-tilde, contravariant
    Mat2 couple_mod;  // N, contravariant
    double s[3][2]{}; // S^{ai} including the closure row
    double t[3][2]{}; // T^{ai} in convected components
    Vec3 t_cols[2];   // T(E^i) in the ambient basis
    Multivector m_cols[2];  // M(E^i), bivector-valued
    double m_comp[3][2]{};  // M^{Ai}, A over {(1,3),(2,3),(1,2)}
    double mmod[2][2]{};    // modified first couple stress, mmod[j][i]
    double sigma[3][2]{};   // spatial Cauchy components
    double m_spatial[3][2]{}; // spatial couple-stress components
    double energy = 0.0;      // energy per unit reference area
};

StressState assemble_stresses(const DeformationState& def, const Mat2& curvature_change,
                              const ConstitutiveResult& cr, const ShearStress& shear,
                              const MaterialParams& mat);

} // namespace shellga
