#include "shellga/balance.hpp"

#include <cmath>

#include "shellga/errors.hpp"

namespace shellga {

namespace {

void check_stencil(const ParamRect& domain, double u1, double u2, double h)
{
    if (!domain.contains(u1 - h, u2) || !domain.contains(u1 + h, u2) ||
        !domain.contains(u1, u2 - h) || !domain.contains(u1, u2 + h))
        throw StencilOutOfDomain("divergence stencil leaves the parameter rectangle");
}

} // namespace

VectorDivergence covariant_divergence_vector(const VectorComponentField& field,
                                             const SurfaceFrame& ref,
                                             const SurfaceFrame& spa,
                                             const ParamRect& domain,
                                             double u1, double u2, double step)
{
    check_stencil(domain, u1, u2, step);
    double c[3][2], p1[3][2], m1[3][2], p2[3][2], m2[3][2];
    field(u1, u2, c);
    field(u1 + step, u2, p1);
    field(u1 - step, u2, m1);
    field(u1, u2 + step, p2);
    field(u1, u2 - step, m2);

    VectorDivergence out;
    for (int a = 0; a < 3; ++a) {
        double v = (p1[a][0] - m1[a][0]) / (2.0 * step) +
                   (p2[a][1] - m2[a][1]) / (2.0 * step);
        for (int i = 0; i < 2; ++i) {
            for (int b = 0; b < 3; ++b) v += spa.gamma[a][i][b] * c[b][i];
            for (int j = 0; j < 2; ++j) v += ref.gamma[i][i][j] * c[a][j];
        }
        out.comp[a] = v;
    }
    const Vec3 frame[3] = {spa.e[0], spa.e[1], spa.n};
    out.ambient = out.comp[0] * frame[0] + out.comp[1] * frame[1] + out.comp[2] * frame[2];
    return out;
}

BivectorDivergence covariant_divergence_bivector(const BivectorComponentField& field,
                                                 const SurfaceFrame& ref,
                                                 const SurfaceFrame& spa,
                                                 const ParamRect& domain,
                                                 double u1, double u2, double step)
{
    check_stencil(domain, u1, u2, step);
    double c[3][2], p1[3][2], m1[3][2], p2[3][2], m2[3][2];
    field(u1, u2, c);
    field(u1 + step, u2, p1);
    field(u1 - step, u2, m1);
    field(u1, u2 + step, p2);
    field(u1, u2 - step, m2);

    BivectorDivergence out;
    double comp[2];
    for (int I = 0; I < 2; ++I) {
        double v = (p1[I][0] - m1[I][0]) / (2.0 * step) +
                   (p2[I][1] - m2[I][1]) / (2.0 * step);
        for (int i = 0; i < 2; ++i) {
            for (int J = 0; J < 2; ++J) v += spa.gamma_biv[I][i][J] * c[J][i];
            for (int j = 0; j < 2; ++j) v += ref.gamma[i][i][j] * c[I][j];
        }
        comp[I] = v;
    }
    out.comp13 = comp[0];
    out.comp23 = comp[1];

    double v12 = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int J = 0; J < 2; ++J) v12 += spa.gamma_biv[2][i][J] * c[J][i];
    out.comp12 = v12;

    out.ambient = out.comp13 * spa.biv_frame[0] + out.comp23 * spa.biv_frame[1] +
                  out.comp12 * spa.biv_frame[2];
    return out;
}

double bivector_work(const Multivector& omega, const Multivector& torque)
{
    return -inner_scalar(omega, torque);
}

namespace {

std::array<double, 2> body_moment_at(const PointCase& pc, double u1, double u2)
{
    if (!pc.body_moment) return {0.0, 0.0};
    return pc.body_moment(u1, u2, pc.time);
}

} // namespace

AssembledPoint assemble_point(const PointCase& pc, double u1, double u2)
{
    AssembledPoint out{deformation_state(*pc.ref, *pc.motion, u1, u2, pc.time, pc.policy),
                       Mat2{}, ConstitutiveResult{}, ShearStress{}, StressState{}};
    out.curvature_change = curvature_change(out.def);
    out.constitutive = constitutive_eval(out.def.strain, out.curvature_change,
                                         out.def.ref.metric_inv, pc.material);

    CoupleField couple = [&pc](double v1, double v2) {
        const DeformationState d =
            deformation_state(*pc.ref, *pc.motion, v1, v2, pc.time, pc.policy);
        const Mat2 h = curvature_change(d);
        return constitutive_eval(d.strain, h, d.ref.metric_inv, pc.material).couple_mod;
    };
    const auto c = body_moment_at(pc, u1, u2);
    out.shear = shear_closure(couple, out.def.ref, out.def.spa, pc.ref->domain, u1, u2,
                              pc.stencil_step, c[0], c[1], pc.material.density0);
    out.stress = assemble_stresses(out.def, out.curvature_change, out.constitutive,
                                   out.shear, pc.material);
    return out;
}

Vec3 momentum_residual(const PointCase& pc, double u1, double u2)
{
    const double rho0 = pc.material.density0;
    const AssembledPoint center = assemble_point(pc, u1, u2);

    VectorComponentField t_field = [&pc](double v1, double v2, double out[3][2]) {
        const AssembledPoint p = assemble_point(pc, v1, v2);
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < 2; ++i) out[a][i] = p.stress.t[a][i];
    };
    const VectorDivergence div = covariant_divergence_vector(
        t_field, center.def.ref, center.def.spa, pc.ref->domain, u1, u2, pc.stencil_step);

    const Vec3 accel = motion_acceleration(*pc.motion, u1, u2, pc.time, pc.timestep.dt);
    const Vec3 b = pc.body_force ? pc.body_force(u1, u2, pc.time) : Vec3{};
    return rho0 * accel - div.ambient - rho0 * b;
}

std::array<double, 3> angular_momentum_residual(const AngularMomentumInputs& in)
{
    std::array<double, 3> r{};
    r[0] = in.s31 + in.div13 + in.rho0 * in.c13;
    r[1] = in.s32 + in.div23 + in.rho0 * in.c23;
    r[2] = in.stress2(1, 0) - in.stress2(0, 1);
    for (int i = 0; i < 2; ++i)
        r[2] += in.couple_mod(1, i) * in.bmix(0, i) - in.couple_mod(0, i) * in.bmix(1, i);
    return r;
}

std::array<double, 3> angular_momentum_residual(const PointCase& pc, double u1, double u2)
{
    const AssembledPoint p = assemble_point(pc, u1, u2);

    CoupleField couple = [&pc](double v1, double v2) {
        const DeformationState d =
            deformation_state(*pc.ref, *pc.motion, v1, v2, pc.time, pc.policy);
        const Mat2 h = curvature_change(d);
        return constitutive_eval(d.strain, h, d.ref.metric_inv, pc.material).couple_mod;
    };
    BivectorComponentField m_field = [&couple](double v1, double v2, double out[3][2]) {
        const Mat2 n = couple(v1, v2);
        for (int i = 0; i < 2; ++i) {
            out[0][i] = n(0, i);
            out[1][i] = n(1, i);
            out[2][i] = 0.0;
        }
    };
    const BivectorDivergence div = covariant_divergence_bivector(
        m_field, p.def.ref, p.def.spa, pc.ref->domain, u1, u2, pc.stencil_step);

    AngularMomentumInputs in;
    in.s31 = p.shear.s31;
    in.s32 = p.shear.s32;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) in.stress2(i, j) = p.stress.s[i][j];
    in.couple_mod = p.stress.couple_mod;
    in.bmix = p.def.spa.metric_inv * p.def.spa.second_form;
    in.div13 = div.comp13;
    in.div23 = div.comp23;
    const auto c = body_moment_at(pc, u1, u2);
    in.c13 = c[0];
    in.c23 = c[1];
    in.rho0 = pc.material.density0;
    return angular_momentum_residual(in);
}

double energy_residual(const PointCase& pc, double u1, double u2, double dt)
{
    auto energy_at = [&](double t) {
        const DeformationState d = deformation_state(*pc.ref, *pc.motion, u1, u2, t,
                                                     pc.policy);
        const Mat2 h = curvature_change(d);
        return energy_density(d.strain, h, d.ref.metric_inv, pc.material);
    };
    const double lhs = (energy_at(pc.time + dt) - energy_at(pc.time - dt)) / (2.0 * dt);

    const DeformationState d =
        deformation_state(*pc.ref, *pc.motion, u1, u2, pc.time, pc.policy);
    const Mat2 h = curvature_change(d);
    const ConstitutiveResult cr =
        constitutive_eval(d.strain, h, d.ref.metric_inv, pc.material);
    const RateTensors rt =
        rate_tensors(*pc.ref, *pc.motion, u1, u2, pc.time, pc.policy, pc.timestep);

    double rhs = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            rhs += cr.stress_mod(i, j) * rt.strain_rate(i, j) +
                   cr.couple_mod(i, j) * rt.curvature_rate(i, j);
    return lhs - rhs;
}

double mass_residual(const PointCase& pc, double u1, double u2, double dt)
{
    auto rho_detf = [&](double t) {
        const DeformationState d =
            deformation_state(*pc.ref, *pc.motion, u1, u2, t, pc.policy);
        const double rho = pc.rho_field ? pc.rho_field(u1, u2, t)
                                        : pc.material.density0 / d.det_f;
        return rho * d.det_f;
    };
    return (rho_detf(pc.time + dt) - rho_detf(pc.time - dt)) / (2.0 * dt);
}

PointResiduals evaluate_residuals(const PointCase& pc, double u1, double u2)
{
    PointResiduals r;
    r.momentum = momentum_residual(pc, u1, u2);
    r.angular = angular_momentum_residual(pc, u1, u2);
    r.energy = energy_residual(pc, u1, u2, pc.timestep.dt);
    r.mass = mass_residual(pc, u1, u2, pc.timestep.dt);
    return r;
}

} // namespace shellga
