#include "shellga/linearized.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "shellga/charts.hpp"
#include "shellga/errors.hpp"

namespace shellga {

DisplacementField DisplacementField::zero()
{
    auto z = [](double, double) { return Vec3{}; };
    return {z, z, z, z, z, z};
}

DisplacementField DisplacementField::from_series(const AnalyticVecField& field, double t)
{
    auto fld = std::make_shared<AnalyticVecField>(field);
    DisplacementField out;
    out.value = [fld, t](double a, double b) { return fld->value(a, b, t); };
    out.d1 = [fld, t](double a, double b) { return fld->d1(a, b, t); };
    out.d2 = [fld, t](double a, double b) { return fld->d2(a, b, t); };
    out.d11 = [fld, t](double a, double b) { return fld->d11(a, b, t); };
    out.d12 = [fld, t](double a, double b) { return fld->d12(a, b, t); };
    out.d22 = [fld, t](double a, double b) { return fld->d22(a, b, t); };
    return out;
}

DisplacementField combine(const DisplacementField& base, const DisplacementField& shape,
                          double scale)
{
    auto mix = [scale](const std::function<Vec3(double, double)>& f,
                       const std::function<Vec3(double, double)>& g) {
        return [f, g, scale](double a, double b) { return f(a, b) + scale * g(a, b); };
    };
    DisplacementField out;
    out.value = mix(base.value, shape.value);
    out.d1 = mix(base.d1, shape.d1);
    out.d2 = mix(base.d2, shape.d2);
    out.d11 = mix(base.d11, shape.d11);
    out.d12 = mix(base.d12, shape.d12);
    out.d22 = mix(base.d22, shape.d22);
    return out;
}

Motion static_displacement_motion(const Chart& ref, const DisplacementField& field,
                                  const std::string& id)
{
    if (!ref.has_exact_first() || !ref.has_exact_second())
        throw std::invalid_argument(
            "static_displacement_motion requires a chart with exact derivatives");
    Motion m;
    m.id = id;
    m.position = [p = ref.position, f = field.value](double a, double b, double) {
        return p(a, b) + f(a, b);
    };
    m.d1 = [p = ref.d1, f = field.d1](double a, double b, double) { return p(a, b) + f(a, b); };
    m.d2 = [p = ref.d2, f = field.d2](double a, double b, double) { return p(a, b) + f(a, b); };
    m.d11 = [p = ref.d11, f = field.d11](double a, double b, double) { return p(a, b) + f(a, b); };
    m.d12 = [p = ref.d12, f = field.d12](double a, double b, double) { return p(a, b) + f(a, b); };
    m.d22 = [p = ref.d22, f = field.d22](double a, double b, double) { return p(a, b) + f(a, b); };
    auto z3 = [](double, double, double) { return Vec3{}; };
    m.velocity = z3;
    m.vel_d1 = z3;
    m.vel_d2 = z3;
    m.acceleration = z3;
    return m;
}

namespace {

void require_static(const PerturbedMotion& pm)
{
    if (pm.base_time_dependent || pm.shape_time_dependent)
        throw std::invalid_argument(
            "perturbation evaluators support time-independent fields only");
}

} // namespace

PerturbedKinematics perturb_kinematics(const PerturbedMotion& pm, const Chart& ref,
                                       double u1, double u2)
{
    require_static(pm);
    PerturbedKinematics out;
    out.ref = frames_at(ref, u1, u2);

    const Vec3 b_d1 = pm.base.d1(u1, u2), b_d2 = pm.base.d2(u1, u2);
    const Vec3 s_d1 = pm.shape.d1(u1, u2), s_d2 = pm.shape.d2(u1, u2);

    out.f0[0] = out.ref.e[0] + b_d1;
    out.f0[1] = out.ref.e[1] + b_d2;
    out.fp[0] = s_d1;
    out.fp[1] = s_d2;

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.metric0(i, j) = dot(out.f0[i], out.f0[j]);
    const double det0 = out.metric0.det();
    if (det0 < 1e-12)
        throw DegenerateFrame("background deformation collapses the frame");
    const Mat2 g0inv = out.metric0.inverse();

    Vec3 e0recip[2];
    for (int i = 0; i < 2; ++i)
        e0recip[i] = g0inv(i, 0) * out.f0[0] + g0inv(i, 1) * out.f0[1];

    const double vol0 = std::sqrt(det0);
    out.det_f.zeroth = vol0 / out.ref.vol;
    const double trace = dot(e0recip[0], out.fp[0]) + dot(e0recip[1], out.fp[1]);
    out.det_f.first = out.det_f.zeroth * trace;

    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 3; ++k) out.finv0[i][k] = e0recip[i][k];
    for (int j = 0; j < 2; ++j) {
        Vec3 row{};
        for (int i = 0; i < 2; ++i) row -= dot(e0recip[j], out.fp[i]) * e0recip[i];
        for (int k = 0; k < 3; ++k) out.finvp[j][k] = row[k];
    }

    out.strain.zeroth = 0.5 * (out.metric0 - out.ref.metric);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.strain.first(i, j) =
                0.5 * (dot(out.f0[i], out.fp[j]) + dot(out.fp[i], out.f0[j]));

    out.normal.zeroth = dual((1.0 / vol0) * wedge(out.f0[0], out.f0[1])).vector_part();
    out.normal.first = (1.0 / vol0) * (cross(out.fp[0], out.f0[1]) +
                                       cross(out.f0[0], out.fp[1]) -
                                       trace * cross(out.f0[0], out.f0[1]));

    // curvature map in convected components: P_ij = e3 . d_i f_j
    const Vec3 b_dd[2][2] = {{pm.base.d11(u1, u2), pm.base.d12(u1, u2)},
                             {pm.base.d12(u1, u2), pm.base.d22(u1, u2)}};
    const Vec3 s_dd[2][2] = {{pm.shape.d11(u1, u2), pm.shape.d12(u1, u2)},
                             {pm.shape.d12(u1, u2), pm.shape.d22(u1, u2)}};
    Mat2 p0, pp;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Vec3 df0 = out.ref.dframe[i][j] + b_dd[i][j];
            p0(i, j) = dot(out.normal.zeroth, df0);
            pp(i, j) = dot(out.normal.zeroth, s_dd[i][j]) + dot(out.normal.first, df0);
        }
    out.curvature_change.zeroth = p0 - out.ref.second_form;
    out.curvature_change.first = pp;

    // F^-1 b F = g^-1 P; differentiate the inverse metric for the first order
    out.fbf0 = g0inv * p0;
    const Mat2 gp = 2.0 * out.strain.first;
    out.fbfp = g0inv * pp - g0inv * gp * g0inv * p0;
    return out;
}

PerturbedStress perturb_constitutive(const PerturbedKinematics& pk,
                                     const MaterialParams& mat, double rho_mass)
{
    PerturbedStress out;
    // the law is linear, so both orders go through the same evaluation
    const ConstitutiveResult r0 = constitutive_eval(
        pk.strain.zeroth, pk.curvature_change.zeroth, pk.ref.metric_inv, mat);
    const ConstitutiveResult r1 = constitutive_eval(
        pk.strain.first, pk.curvature_change.first, pk.ref.metric_inv, mat);
    out.couple_mod.zeroth = r0.couple_mod;
    out.couple_mod.first = r1.couple_mod;

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double s0 = r0.stress_mod(i, j);
            double sp = r1.stress_mod(i, j);
            for (int k = 0; k < 2; ++k) {
                s0 += pk.fbf0(i, k) * r0.couple_mod(k, j);
                sp += pk.fbf0(i, k) * r1.couple_mod(k, j) +
                      pk.fbfp(i, k) * r0.couple_mod(k, j);
            }
            out.stress2.zeroth(i, j) = s0;
            out.stress2.first(i, j) = sp;
        }

    for (int i = 0; i < 2; ++i) {
        Vec3 t0{}, tp{};
        Multivector m0, mp;
        for (int j = 0; j < 2; ++j) {
            t0 += out.stress2.zeroth(j, i) * pk.f0[j];
            tp += out.stress2.first(j, i) * pk.f0[j] +
                  out.stress2.zeroth(j, i) * pk.fp[j];
            const Multivector w0 = wedge(pk.f0[j], pk.normal.zeroth);
            m0 = m0 + out.couple_mod.zeroth(j, i) * w0;
            mp = mp + out.couple_mod.first(j, i) * w0 +
                 out.couple_mod.zeroth(j, i) *
                     (wedge(pk.fp[j], pk.normal.zeroth) +
                      wedge(pk.f0[j], pk.normal.first));
        }
        out.t0[i] = t0;
        out.tp[i] = tp;
        out.m0[i] = m0;
        out.mp[i] = mp;
    }

    out.rho_area.zeroth = rho_mass * pk.det_f.zeroth;
    out.rho_area.first = rho_mass * pk.det_f.first;
    return out;
}

Mat2 small_displacement_curvature(const DisplacementField& shape, const Chart& ref,
                                  double u1, double u2)
{
    const SurfaceFrame f = frames_at(ref, u1, u2);
    const Vec3 dd[2][2] = {{shape.d11(u1, u2), shape.d12(u1, u2)},
                           {shape.d12(u1, u2), shape.d22(u1, u2)}};
    const Vec3 d[2] = {shape.d1(u1, u2), shape.d2(u1, u2)};
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double v = dot(f.n, dd[i][j]);
            for (int k = 0; k < 2; ++k) v -= f.gamma[k][i][j] * dot(f.n, d[k]);
            out(i, j) = v;
        }
    return out;
}

namespace {

struct LinearizedColumns {
    PerturbedKinematics kin;
    PerturbedStress str;
};

LinearizedColumns columns_at(const PerturbedMotion& pm, const Chart& ref,
                             const MaterialParams& mat, double rho_mass,
                             double u1, double u2)
{
    LinearizedColumns out{perturb_kinematics(pm, ref, u1, u2), PerturbedStress{}};
    out.str = perturb_constitutive(out.kin, mat, rho_mass);
    return out;
}

} // namespace

Vec3 linearized_momentum_residual(const PerturbedMotion& pm, const Chart& ref,
                                  const MaterialParams& mat, double rho_mass,
                                  double u1, double u2, double step,
                                  const std::function<Vec3(double, double)>& body_force_first,
                                  const std::function<Vec3(double, double)>& body_force_zero)
{
    if (!ref.domain.contains(u1 - step, u2) || !ref.domain.contains(u1 + step, u2) ||
        !ref.domain.contains(u1, u2 - step) || !ref.domain.contains(u1, u2 + step))
        throw StencilOutOfDomain("linearized stress stencil leaves the domain");

    auto tp_col = [&](double a, double b, int i) {
        return columns_at(pm, ref, mat, rho_mass, a, b).str.tp[i];
    };
    Vec3 div = (tp_col(u1 + step, u2, 0) - tp_col(u1 - step, u2, 0)) / (2.0 * step) +
               (tp_col(u1, u2 + step, 1) - tp_col(u1, u2 - step, 1)) / (2.0 * step);
    const LinearizedColumns c = columns_at(pm, ref, mat, rho_mass, u1, u2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            div += c.kin.ref.gamma[i][i][j] * c.str.tp[j];

    const double rho0 = c.str.rho_area.zeroth;
    const double rhop = c.str.rho_area.first;
    const Vec3 bp = body_force_first ? body_force_first(u1, u2) : Vec3{};
    const Vec3 b0 = body_force_zero ? body_force_zero(u1, u2) : Vec3{};
    // static perturbation: no inertia term
    return -1.0 * div - rho0 * bp - rhop * b0;
}

Multivector linearized_angular_momentum(const PerturbedMotion& pm, const Chart& ref,
                                        const MaterialParams& mat, double rho_mass,
                                        double u1, double u2, double step,
                                        const Multivector& c_first,
                                        const Multivector& c_zero)
{
    if (!ref.domain.contains(u1 - step, u2) || !ref.domain.contains(u1 + step, u2) ||
        !ref.domain.contains(u1, u2 - step) || !ref.domain.contains(u1, u2 + step))
        throw StencilOutOfDomain("linearized couple stencil leaves the domain");

    auto mp_col = [&](double a, double b, int i) {
        return columns_at(pm, ref, mat, rho_mass, a, b).str.mp[i];
    };
    Multivector div = (1.0 / (2.0 * step)) *
                      (mp_col(u1 + step, u2, 0) - mp_col(u1 - step, u2, 0));
    div = div + (1.0 / (2.0 * step)) *
                    (mp_col(u1, u2 + step, 1) - mp_col(u1, u2 - step, 1));
    const LinearizedColumns c = columns_at(pm, ref, mat, rho_mass, u1, u2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            div = div + c.kin.ref.gamma[i][i][j] * c.str.mp[j];

    Multivector expr = div;
    // wedge terms: F0(E_i) ^ T'(E^i) + F'(E_i) ^ T0(E^i)
    for (int i = 0; i < 2; ++i)
        expr = expr + wedge(c.kin.f0[i], c.str.tp[i]) + wedge(c.kin.fp[i], c.str.t0[i]);
    expr = expr + c.str.rho_area.zeroth * c_first + c.str.rho_area.first * c_zero;
    return expr;
}

DisplacementField cylinder_background(const CylinderCase& cc)
{
    const double eps = cc.eps;
    DisplacementField f = DisplacementField::zero();
    f.value = [eps](double u1, double) { return Vec3{eps * u1, 0.0, 0.0}; };
    f.d1 = [eps](double, double) { return Vec3{eps, 0.0, 0.0}; };
    return f;
}

namespace {

struct CylFrames {
    Vec3 e1, e2, e3, de2, de3, dde2, dde3;
};

CylFrames cylinder_frames(double radius, double u2)
{
    const double C = 1.0 / radius;
    const double a = u2 * C;
    CylFrames f;
    f.e1 = {1.0, 0.0, 0.0};
    f.e2 = {0.0, -std::sin(a), std::cos(a)};
    f.e3 = {0.0, -std::cos(a), -std::sin(a)}; // inward normal
    f.de2 = C * f.e3;
    f.de3 = -C * f.e2;
    f.dde2 = -C * C * f.e2;
    f.dde3 = -C * C * f.e3;
    return f;
}

} // namespace

DisplacementField cylinder_shape_ambient(const CylinderCase& cc)
{
    const double R = cc.radius;
    auto series = std::make_shared<std::array<AnalyticSeries, 3>>(
        std::array<AnalyticSeries, 3>{cc.shape_local[0], cc.shape_local[1],
                                      cc.shape_local[2]});
    auto jets = [series](double u1, double u2, Jet2 j[3]) {
        for (int a = 0; a < 3; ++a) j[a] = (*series)[a].eval(u1, u2, 0.0);
    };

    DisplacementField out;
    out.value = [R, jets](double u1, double u2) {
        Jet2 j[3];
        jets(u1, u2, j);
        const CylFrames f = cylinder_frames(R, u2);
        return j[0].v * f.e1 + j[1].v * f.e2 + j[2].v * f.e3;
    };
    out.d1 = [R, jets](double u1, double u2) {
        Jet2 j[3];
        jets(u1, u2, j);
        const CylFrames f = cylinder_frames(R, u2);
        return j[0].d1 * f.e1 + j[1].d1 * f.e2 + j[2].d1 * f.e3;
    };
    out.d2 = [R, jets](double u1, double u2) {
        Jet2 j[3];
        jets(u1, u2, j);
        const CylFrames f = cylinder_frames(R, u2);
        return j[0].d2 * f.e1 + j[1].d2 * f.e2 + j[2].d2 * f.e3 + j[1].v * f.de2 +
               j[2].v * f.de3;
    };
    out.d11 = [R, jets](double u1, double u2) {
        Jet2 j[3];
        jets(u1, u2, j);
        const CylFrames f = cylinder_frames(R, u2);
        return j[0].d11 * f.e1 + j[1].d11 * f.e2 + j[2].d11 * f.e3;
    };
    out.d12 = [R, jets](double u1, double u2) {
        Jet2 j[3];
        jets(u1, u2, j);
        const CylFrames f = cylinder_frames(R, u2);
        return j[0].d12 * f.e1 + j[1].d12 * f.e2 + j[2].d12 * f.e3 + j[1].d1 * f.de2 +
               j[2].d1 * f.de3;
    };
    out.d22 = [R, jets](double u1, double u2) {
        Jet2 j[3];
        jets(u1, u2, j);
        const CylFrames f = cylinder_frames(R, u2);
        return j[0].d22 * f.e1 + j[1].d22 * f.e2 + j[2].d22 * f.e3 +
               2.0 * (j[1].d2 * f.de2 + j[2].d2 * f.de3) + j[1].v * f.dde2 +
               j[2].v * f.dde3;
    };
    return out;
}

CylinderTables cylinder_closed_form(const CylinderCase& cc, double u1, double u2)
{
    const Chart cyl = make_cylinder(cc.radius);
    const SurfaceFrame f = frames_at(cyl, u1, u2);
    if (max_abs(f.metric - Mat2::identity()) > 1e-10)
        throw std::logic_error("closed forms require an orthonormal chart");

    const double C = 1.0 / cc.radius;
    const double eps = cc.eps;
    const double lam = 1.0 + eps;
    const double km = cc.material.membrane_modulus();
    const double kb = cc.material.bending_modulus();
    const double nu = cc.material.poisson;

    Jet2 j[3];
    for (int a = 0; a < 3; ++a) j[a] = cc.shape_local[a].eval(u1, u2, 0.0);

    CylinderTables t;
    t.det_f0 = lam;
    t.strain0(0, 0) = eps + 0.5 * eps * eps;

    t.strain1(0, 0) = lam * j[0].d1;
    t.strain1(1, 1) = j[1].d2 - C * j[2].v;
    t.strain1(0, 1) = t.strain1(1, 0) =
        0.5 * (j[1].d1 + j[0].d2) + 0.5 * eps * j[0].d2;

    t.curv1(0, 0) = j[2].d11;
    t.curv1(1, 1) = j[2].d22 + 2.0 * C * j[1].d2 - C * C * j[2].v;
    t.curv1(0, 1) = t.curv1(1, 0) = j[2].d12 + C * j[1].d1;

    t.couple1(0, 0) = kb * (t.curv1(0, 0) + nu * t.curv1(1, 1));
    t.couple1(1, 1) = kb * (t.curv1(1, 1) + nu * t.curv1(0, 0));
    t.couple1(0, 1) = t.couple1(1, 0) = kb * (1.0 - nu) * t.curv1(0, 1);

    t.stress0(0, 0) = km * t.strain0(0, 0);
    t.stress0(1, 1) = nu * km * t.strain0(0, 0);

    t.stress1(0, 0) = km * (t.strain1(0, 0) + nu * t.strain1(1, 1));
    t.stress1(1, 1) = km * (t.strain1(1, 1) + nu * t.strain1(0, 0)) + C * t.couple1(1, 1);
    t.stress1(0, 1) = km * (1.0 - nu) * t.strain1(0, 1);
    t.stress1(1, 0) = km * (1.0 - nu) * t.strain1(1, 0) + C * t.couple1(1, 0);
    return t;
}

CylinderTables cylinder_general(const CylinderCase& cc, double u1, double u2)
{
    const Chart cyl = make_cylinder(cc.radius);
    PerturbedMotion pm;
    pm.base = cylinder_background(cc);
    pm.shape = cylinder_shape_ambient(cc);
    const PerturbedKinematics pk = perturb_kinematics(pm, cyl, u1, u2);
    const PerturbedStress ps = perturb_constitutive(pk, cc.material, 1.0);

    CylinderTables t;
    t.det_f0 = pk.det_f.zeroth;
    t.strain0 = pk.strain.zeroth;
    t.strain1 = pk.strain.first;
    t.curv0 = pk.curvature_change.zeroth;
    t.curv1 = pk.curvature_change.first;
    t.couple0 = ps.couple_mod.zeroth;
    t.couple1 = ps.couple_mod.first;
    t.stress0 = ps.stress2.zeroth;
    t.stress1 = ps.stress2.first;
    return t;
}

namespace {

struct NonlinearTables {
    Mat2 strain, curv, couple, stress;
    double det_f = 0.0;
};

NonlinearTables nonlinear_tables(const Chart& ref, const DisplacementField& base,
                                 const DisplacementField& shape, double scale,
                                 const MaterialParams& mat, double u1, double u2)
{
    const Motion m = static_displacement_motion(ref, combine(base, shape, scale));
    const DeformationState d = deformation_state(ref, m, u1, u2, 0.0);
    NonlinearTables t;
    t.det_f = d.det_f;
    t.strain = d.strain;
    t.curv = curvature_change(d);
    const ConstitutiveResult cr =
        constitutive_eval(d.strain, t.curv, d.ref.metric_inv, mat);
    t.couple = cr.couple_mod;
    const Mat2 bmix = d.spa.metric_inv * d.spa.second_form;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double v = cr.stress_mod(i, j);
            for (int k = 0; k < 2; ++k) v += bmix(i, k) * cr.couple_mod(j, k);
            t.stress(i, j) = v;
        }
    return t;
}

} // namespace

CylinderTables cylinder_extracted(const CylinderCase& cc, double u1, double u2,
                                  double eps_fd)
{
    const Chart cyl = make_cylinder(cc.radius);
    const DisplacementField base = cylinder_background(cc);
    const DisplacementField shape = cylinder_shape_ambient(cc);

    const NonlinearTables c0 = nonlinear_tables(cyl, base, shape, 0.0, cc.material, u1, u2);
    const NonlinearTables cp =
        nonlinear_tables(cyl, base, shape, eps_fd, cc.material, u1, u2);
    const NonlinearTables cm =
        nonlinear_tables(cyl, base, shape, -eps_fd, cc.material, u1, u2);

    const double inv = 1.0 / (2.0 * eps_fd);
    CylinderTables t;
    t.det_f0 = c0.det_f;
    t.strain0 = c0.strain;
    t.curv0 = c0.curv;
    t.couple0 = c0.couple;
    t.stress0 = c0.stress;
    t.strain1 = inv * (cp.strain - cm.strain);
    t.curv1 = inv * (cp.curv - cm.curv);
    t.couple1 = inv * (cp.couple - cm.couple);
    t.stress1 = inv * (cp.stress - cm.stress);
    return t;
}

bool RichardsonReport::pass(double lo, double hi) const
{
    for (const RichardsonEntry& e : entries) {
        if (e.exact) continue;
        for (double r : e.ratio)
            if (!(r >= lo && r <= hi)) return false;
    }
    return !entries.empty();
}

RichardsonReport linearization_consistency(const PerturbedMotion& pm, const Chart& ref,
                                           const MaterialParams& mat, double rho_mass,
                                           const std::vector<std::pair<double, double>>& points,
                                           const std::vector<double>& eps_list)
{
    // The remainder of each expansion, flattened per tensor, max over points.
    struct Flat {
        std::string name;
        std::vector<double> values;
    };

    auto flatten_linear = [&](const PerturbedKinematics& pk, const PerturbedStress& ps,
                              double eps) {
        std::vector<Flat> out;
        auto add = [&out](const std::string& name, std::initializer_list<double> v) {
            out.push_back({name, v});
        };
        auto addm = [&out](const std::string& name, const Mat2& m) {
            out.push_back({name, {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}});
        };
        auto addv = [&out](const std::string& name, const Vec3& v) {
            out.push_back({name, {v.x, v.y, v.z}});
        };
        const Vec3 f1 = pk.f0[0] + eps * pk.fp[0];
        const Vec3 f2 = pk.f0[1] + eps * pk.fp[1];
        addv("F.1", f1);
        addv("F.2", f2);
        add("detF", {pk.det_f.zeroth + eps * pk.det_f.first});
        // the inverse map probed on the zeroth-order image frame, where its
        // expansion is free of the tilting of the image plane
        {
            std::vector<double> v;
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    const Vec3 r0{pk.finv0[j][0], pk.finv0[j][1], pk.finv0[j][2]};
                    const Vec3 rp{pk.finvp[j][0], pk.finvp[j][1], pk.finvp[j][2]};
                    v.push_back(dot(r0, pk.f0[k]) + eps * dot(rp, pk.f0[k]));
                }
            out.push_back({"Finv", v});
        }
        addm("E", pk.strain.zeroth + eps * pk.strain.first);
        addv("e3", pk.normal.zeroth + eps * pk.normal.first);
        addm("H", pk.curvature_change.zeroth + eps * pk.curvature_change.first);
        addm("N", ps.couple_mod.zeroth + eps * ps.couple_mod.first);
        addm("S", ps.stress2.zeroth + eps * ps.stress2.first);
        addv("T.1", ps.t0[0] + eps * ps.tp[0]);
        addv("T.2", ps.t0[1] + eps * ps.tp[1]);
        for (int i = 0; i < 2; ++i) {
            const Multivector mm = ps.m0[i] + eps * ps.mp[i];
            const auto b = mm.bivector_part();
            out.push_back({"M." + std::to_string(i + 1), {b[0], b[1], b[2]}});
        }
        add("rho", {ps.rho_area.zeroth + eps * ps.rho_area.first});
        return out;
    };

    auto flatten_nonlinear = [&](const PerturbedKinematics& pk, double u1, double u2,
                                 double eps) {
        const Motion m = static_displacement_motion(ref, combine(pm.base, pm.shape, eps));
        const DeformationState d = deformation_state(ref, m, u1, u2, 0.0);
        const Mat2 curv = curvature_change(d);
        const ConstitutiveResult cr =
            constitutive_eval(d.strain, curv, d.ref.metric_inv, mat);
        const Mat2 bmix = d.spa.metric_inv * d.spa.second_form;
        Mat2 stress;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double v = cr.stress_mod(i, j);
                for (int k = 0; k < 2; ++k) v += bmix(i, k) * cr.couple_mod(j, k);
                stress(i, j) = v;
            }

        std::vector<Flat> out;
        auto addm = [&out](const std::string& name, const Mat2& mm) {
            out.push_back({name, {mm(0, 0), mm(0, 1), mm(1, 0), mm(1, 1)}});
        };
        auto addv = [&out](const std::string& name, const Vec3& v) {
            out.push_back({name, {v.x, v.y, v.z}});
        };
        addv("F.1", d.spa.e[0]);
        addv("F.2", d.spa.e[1]);
        out.push_back({"detF", {d.det_f}});
        {
            std::vector<double> v;
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) v.push_back(dot(d.spa.erecip[j], pk.f0[k]));
            out.push_back({"Finv", v});
        }
        addm("E", d.strain);
        addv("e3", d.spa.n);
        addm("H", curv);
        addm("N", cr.couple_mod);
        addm("S", stress);
        Vec3 tcol[2];
        Multivector mcol[2];
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                tcol[i] += stress(j, i) * d.spa.e[j];
                mcol[i] = mcol[i] + cr.couple_mod(j, i) * wedge(d.spa.e[j], d.spa.n);
            }
        }
        addv("T.1", tcol[0]);
        addv("T.2", tcol[1]);
        for (int i = 0; i < 2; ++i) {
            const auto b = mcol[i].bivector_part();
            out.push_back({"M." + std::to_string(i + 1), {b[0], b[1], b[2]}});
        }
        out.push_back({"rho", {rho_mass * d.det_f}});
        return out;
    };

    RichardsonReport report;
    const size_t n_eps = eps_list.size();

    std::vector<RichardsonEntry> entries;
    bool first_point = true;
    for (const auto& [u1, u2] : points) {
        const PerturbedKinematics pk = perturb_kinematics(pm, ref, u1, u2);
        const PerturbedStress ps = perturb_constitutive(pk, mat, rho_mass);
        for (size_t k = 0; k < n_eps; ++k) {
            const double eps = eps_list[k];
            const auto linear = flatten_linear(pk, ps, eps);
            const auto nonlinear = flatten_nonlinear(pk, u1, u2, eps);
            if (first_point && k == 0) {
                entries.resize(linear.size());
                for (size_t q = 0; q < linear.size(); ++q) {
                    entries[q].tensor = linear[q].name;
                    entries[q].err.assign(n_eps, 0.0);
                }
            }
            for (size_t q = 0; q < linear.size(); ++q) {
                double err = 0.0, scale = 0.0;
                for (size_t c = 0; c < linear[q].values.size(); ++c) {
                    err = std::max(err,
                                   std::abs(nonlinear[q].values[c] - linear[q].values[c]));
                    scale = std::max(scale, std::abs(linear[q].values[c]));
                }
                entries[q].err[k] = std::max(entries[q].err[k], err);
                entries[q].scale = std::max(entries[q].scale, scale);
            }
        }
        first_point = false;
    }

    for (RichardsonEntry& e : entries) {
        e.exact = e.err[0] <= 1e-12 * std::max(1.0, e.scale);
        for (size_t k = 0; k + 1 < e.err.size(); ++k)
            e.ratio.push_back(e.err[k] / std::max(e.err[k + 1], 1e-300));
        report.entries.push_back(e);
    }
    return report;
}

} // namespace shellga
