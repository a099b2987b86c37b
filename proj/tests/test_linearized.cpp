#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "shellga/charts.hpp"
#include "shellga/linearized.hpp"

using namespace shellga;

namespace {

AnalyticVecField field_a()
{
    AnalyticVecField f;
    f.comp[0].terms.push_back({0.05, 2, 0, 0, 0, 0.0, 0.0, 0.0, 0.0});
    f.comp[2].terms.push_back({0.08, 0, 0, 0, 1, 1.2, 0.7, 0.0, 0.3});
    return f;
}

AnalyticVecField field_b()
{
    AnalyticVecField f;
    f.comp[1].terms.push_back({0.06, 1, 1, 0, 0, 0.0, 0.0, 0.0, 0.0});
    f.comp[2].terms.push_back({0.07, 0, 0, 0, 2, 0.9, 1.1, 0.0, 0.1});
    return f;
}

AnalyticVecField field_c()
{
    AnalyticVecField f;
    f.comp[0].terms.push_back({0.04, 0, 1, 0, 1, 0.8, 0.0, 0.0, 0.6});
    f.comp[1].terms.push_back({0.05, 1, 0, 0, 0, 0.0, 0.0, 0.0, 0.0});
    f.comp[2].terms.push_back({0.06, 1, 1, 0, 0, 0.0, 0.0, 0.0, 0.0});
    return f;
}

CylinderCase random_cylinder_case(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> rad(0.8, 3.0);
    std::uniform_real_distribution<double> strain(-0.15, 0.25);
    std::uniform_real_distribution<double> coeff(-0.1, 0.1);
    std::uniform_real_distribution<double> freq(0.3, 1.2);

    CylinderCase cc;
    cc.radius = rad(rng);
    cc.eps = strain(rng);
    cc.material.young = 1.0 + std::abs(coeff(rng)) * 20.0;
    cc.material.poisson = 0.27 + 0.1 * coeff(rng);
    cc.material.thickness = 0.05 + std::abs(coeff(rng));
    for (int a = 0; a < 3; ++a) {
        cc.shape_local[a].terms.push_back(
            {coeff(rng), 1, 0, 0, 0, 0.0, 0.0, 0.0, 0.0});
        cc.shape_local[a].terms.push_back(
            {coeff(rng), 0, 0, 0, 1, freq(rng), freq(rng), 0.0, coeff(rng)});
    }
    return cc;
}

} // namespace

TEST_CASE("zero displacement keeps every expansion at its reference value")
{
    const Chart cyl = make_cylinder(1.3);
    PerturbedMotion pm;
    pm.base = DisplacementField::zero();
    pm.shape = DisplacementField::zero();
    const PerturbedKinematics pk = perturb_kinematics(pm, cyl, 0.3, 2.0);
    CHECK(max_abs(pk.f0[0] - pk.ref.e[0]) == 0.0);
    CHECK(pk.det_f.zeroth == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pk.det_f.first == 0.0);
    CHECK(max_abs(pk.strain.zeroth) < 1e-14);
    CHECK(max_abs(pk.strain.first) == 0.0);
    CHECK(max_abs(pk.normal.zeroth - pk.ref.n) < 1e-13);
    CHECK(max_abs(pk.normal.first) < 1e-14);
    CHECK(max_abs(pk.curvature_change.zeroth) < 1e-13);
    CHECK(max_abs(pk.curvature_change.first) < 1e-13);
}

TEST_CASE("determinant expansion matches the nonlinear determinant to second order")
{
    const Chart plane = make_plane();
    PerturbedMotion pm;
    pm.base = DisplacementField::from_series(field_a());
    pm.shape = DisplacementField::from_series(field_b());
    const double u1 = 0.3, u2 = -0.2;
    const PerturbedKinematics pk = perturb_kinematics(pm, plane, u1, u2);

    auto detf_at = [&](double eps) {
        const Motion m = static_displacement_motion(plane, combine(pm.base, pm.shape, eps));
        return deformation_state(plane, m, u1, u2, 0.0).det_f;
    };
    auto remainder = [&](double eps) {
        return std::abs(detf_at(eps) - pk.det_f.zeroth - eps * pk.det_f.first);
    };
    const double r = remainder(1e-2) / remainder(5e-3);
    CHECK(r > 3.5);
    CHECK(r < 4.5);
}

TEST_CASE("zero background annihilates every zeroth-order stress")
{
    const Chart sph = make_sphere(2.0);
    PerturbedMotion pm;
    pm.base = DisplacementField::zero();
    pm.shape = DisplacementField::from_series(field_c());
    const PerturbedKinematics pk = perturb_kinematics(pm, sph, 1.2, 2.5);
    const PerturbedStress ps = perturb_constitutive(pk, MaterialParams{}, 1.0);
    CHECK(max_abs(ps.stress2.zeroth) < 1e-12);
    CHECK(max_abs(ps.couple_mod.zeroth) < 1e-12);
    for (int i = 0; i < 2; ++i) {
        CHECK(max_abs(ps.t0[i]) < 1e-12);
        CHECK(max_abs(ps.m0[i]) < 1e-12);
    }
}

TEST_CASE("small-displacement curvature of a rigid translation vanishes")
{
    const Chart cyl = make_cylinder(1.7);
    DisplacementField shift = DisplacementField::zero();
    shift.value = [](double, double) { return Vec3{0.3, -0.1, 0.2}; };
    CHECK(max_abs(small_displacement_curvature(shift, cyl, 0.2, 1.0)) < 1e-13);
}

TEST_CASE("small-displacement curvature of a quadratic normal bump")
{
    const Chart plane = make_plane();
    AnalyticVecField f;
    f.comp[2].terms.push_back({0.5, 2, 0, 0, 0, 0.0, 0.0, 0.0, 0.0}); // z = x^2 / 2
    const DisplacementField shape = DisplacementField::from_series(f);
    const Mat2 h = small_displacement_curvature(shape, plane, 0.4, -0.7);
    CHECK(h(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(h(0, 1)) < 1e-13);
    CHECK(std::abs(h(1, 0)) < 1e-13);
    CHECK(std::abs(h(1, 1)) < 1e-13);
}

TEST_CASE("small-displacement curvature agrees with the general first order at zero background")
{
    for (const Chart& ref : {make_plane(), make_cylinder(1.4), make_sphere(2.0)}) {
        PerturbedMotion pm;
        pm.base = DisplacementField::zero();
        pm.shape = DisplacementField::from_series(field_b());
        const double u1 = ref.id == "sphere" ? 1.3 : 0.3;
        const double u2 = ref.id == "plane" ? -0.4 : 2.2;
        const PerturbedKinematics pk = perturb_kinematics(pm, ref, u1, u2);
        const Mat2 hs = small_displacement_curvature(pm.shape, ref, u1, u2);
        CHECK(max_abs(hs - pk.curvature_change.first) < 1e-8);
    }
}

TEST_CASE("an infinitesimal rotation produces no first-order strain or bending")
{
    const Chart cyl = make_cylinder(1.1);
    const Vec3 w{0.4, -0.2, 0.7};
    DisplacementField rot;
    rot.value = [p = cyl.position, w](double a, double b) { return cross(w, p(a, b)); };
    rot.d1 = [p = cyl.d1, w](double a, double b) { return cross(w, p(a, b)); };
    rot.d2 = [p = cyl.d2, w](double a, double b) { return cross(w, p(a, b)); };
    rot.d11 = [p = cyl.d11, w](double a, double b) { return cross(w, p(a, b)); };
    rot.d12 = [p = cyl.d12, w](double a, double b) { return cross(w, p(a, b)); };
    rot.d22 = [p = cyl.d22, w](double a, double b) { return cross(w, p(a, b)); };

    PerturbedMotion pm;
    pm.base = DisplacementField::zero();
    pm.shape = rot;
    const PerturbedKinematics pk = perturb_kinematics(pm, cyl, 0.4, 2.8);
    CHECK(max_abs(pk.strain.first) < 1e-12);
    CHECK(max_abs(pk.curvature_change.first) < 1e-12);
}

TEST_CASE("general pipeline reduces to the explicit small-displacement stress")
{
    const Chart cyl = make_cylinder(1.6);
    PerturbedMotion pm;
    pm.base = DisplacementField::zero();
    pm.shape = DisplacementField::from_series(field_c());
    const double u1 = -0.3, u2 = 3.1;
    const MaterialParams mat;
    const PerturbedKinematics pk = perturb_kinematics(pm, cyl, u1, u2);
    const PerturbedStress ps = perturb_constitutive(pk, mat, 1.0);

    // with no background: S' = membrane law in E' plus the mixed reference
    // curvature acting on the couple stress
    const SurfaceFrame f = frames_at(cyl, u1, u2);
    const ConstitutiveResult cr = constitutive_eval(pk.strain.first,
                                                    pk.curvature_change.first,
                                                    f.metric_inv, mat);
    const Mat2 bmix = f.metric_inv * f.second_form;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double expect = cr.stress_mod(i, j);
            for (int k = 0; k < 2; ++k) expect += bmix(i, k) * cr.couple_mod(k, j);
            CHECK(ps.stress2.first(i, j) == doctest::Approx(expect).epsilon(1e-10));
        }
    CHECK(max_abs(ps.couple_mod.first - cr.couple_mod) < 1e-12);
}

TEST_CASE("pre-strained cylinder background tables")
{
    std::mt19937_64 rng(81);
    const CylinderCase cc = random_cylinder_case(rng);
    const CylinderTables t = cylinder_general(cc, 0.4, 2.0);
    const double e011 = cc.eps + 0.5 * cc.eps * cc.eps;
    CHECK(t.strain0(0, 0) == doctest::Approx(e011).epsilon(1e-12));
    CHECK(std::abs(t.strain0(0, 1)) < 1e-12);
    CHECK(std::abs(t.strain0(1, 1)) < 1e-12);
    CHECK(t.det_f0 == doctest::Approx(1.0 + cc.eps).epsilon(1e-12));
    CHECK(max_abs(t.curv0) < 1e-10);
    CHECK(max_abs(t.couple0) < 1e-10);
    const double km = cc.material.membrane_modulus();
    CHECK(t.stress0(0, 0) == doctest::Approx(km * e011).epsilon(1e-10));
    CHECK(t.stress0(1, 1) == doctest::Approx(cc.material.poisson * km * e011).epsilon(1e-10));
}

TEST_CASE("cylinder closed form equals the general pipeline at 20 random draws")
{
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> ax(-0.8, 0.8);
    for (int trial = 0; trial < 20; ++trial) {
        const CylinderCase cc = random_cylinder_case(rng);
        const double u1 = ax(rng);
        const double u2 = (0.3 + 0.5 * std::abs(ax(rng))) * cc.radius * M_PI;
        const CylinderTables closed = cylinder_closed_form(cc, u1, u2);
        const CylinderTables general = cylinder_general(cc, u1, u2);
        CHECK(max_abs(closed.strain0 - general.strain0) < 1e-8);
        CHECK(max_abs(closed.strain1 - general.strain1) < 1e-8);
        CHECK(max_abs(closed.curv0 - general.curv0) < 1e-8);
        CHECK(max_abs(closed.curv1 - general.curv1) < 1e-8);
        CHECK(max_abs(closed.couple0 - general.couple0) < 1e-8);
        CHECK(max_abs(closed.couple1 - general.couple1) < 1e-8);
        CHECK(max_abs(closed.stress0 - general.stress0) < 1e-8);
        CHECK(max_abs(closed.stress1 - general.stress1) < 1e-8);
        CHECK(std::abs(closed.det_f0 - general.det_f0) < 1e-12);
    }
}

TEST_CASE("cylinder closed form equals the nonlinear first-order extraction")
{
    std::mt19937_64 rng(85);
    std::uniform_real_distribution<double> ax(-0.8, 0.8);
    for (int trial = 0; trial < 5; ++trial) {
        const CylinderCase cc = random_cylinder_case(rng);
        const double u1 = ax(rng);
        const double u2 = (0.4 + 0.4 * std::abs(ax(rng))) * cc.radius * M_PI;
        const CylinderTables closed = cylinder_closed_form(cc, u1, u2);
        const CylinderTables ex = cylinder_extracted(cc, u1, u2);
        CHECK(max_abs(closed.strain1 - ex.strain1) < 1e-8);
        CHECK(max_abs(closed.curv1 - ex.curv1) < 1e-8);
        CHECK(max_abs(closed.couple1 - ex.couple1) < 1e-8);
        CHECK(max_abs(closed.stress1 - ex.stress1) < 1e-8);
    }
}

TEST_CASE("pure sinusoidal normal perturbation bends with the closed-form coefficient")
{
    // U'_3 = sin(X2 / R) alone: the azimuthal bending reduces to
    // -(2 / R^2) sin(X2 / R), and the general pipeline must agree
    const double R = 1.7, C = 1.0 / R;
    CylinderCase cc;
    cc.radius = R;
    cc.eps = 0.08;
    cc.shape_local[2].terms.push_back({1.0, 0, 0, 0, 1, 0.0, C, 0.0, 0.0});

    const double u1 = 0.3, u2 = 1.1 * R;
    const CylinderTables closed = cylinder_closed_form(cc, u1, u2);
    const CylinderTables general = cylinder_general(cc, u1, u2);
    const double expected = -2.0 * C * C * std::sin(u2 * C);
    CHECK(closed.curv1(1, 1) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(general.curv1(1, 1) == doctest::Approx(expected).epsilon(1e-8));
    CHECK(max_abs(closed.curv1 - general.curv1) < 1e-8);
    // membrane part: E'_22 = -C U'_3
    CHECK(closed.strain1(1, 1) ==
          doctest::Approx(-C * std::sin(u2 * C)).epsilon(1e-12));
    CHECK(max_abs(closed.strain1 - general.strain1) < 1e-10);
}

TEST_CASE("azimuthal curvature couples the first-order stress diagonally")
{
    // the curvature correction lands in the azimuthal row: S'_22 carries
    // C N'_22 and S'_21 carries C N'_21, while S'_11 and S'_12 stay bare
    std::mt19937_64 rng(87);
    const CylinderCase cc = random_cylinder_case(rng);
    const double C = 1.0 / cc.radius;
    const double u1 = 0.2, u2 = 1.2 * cc.radius;
    const CylinderTables t = cylinder_general(cc, u1, u2);
    const double km = cc.material.membrane_modulus();
    const double nu = cc.material.poisson;
    CHECK(t.stress1(1, 1) - km * (t.strain1(1, 1) + nu * t.strain1(0, 0)) ==
          doctest::Approx(C * t.couple1(1, 1)).epsilon(1e-9));
    CHECK(t.stress1(1, 0) - km * (1.0 - nu) * t.strain1(1, 0) ==
          doctest::Approx(C * t.couple1(1, 0)).epsilon(1e-9));
    CHECK(t.stress1(0, 0) ==
          doctest::Approx(km * (t.strain1(0, 0) + nu * t.strain1(1, 1))).epsilon(1e-9));
    CHECK(t.stress1(0, 1) ==
          doctest::Approx(km * (1.0 - nu) * t.strain1(0, 1)).epsilon(1e-9));
}

TEST_CASE("every expansion passes the quadratic-remainder test on three pairs")
{
    struct Pair { Chart ref; AnalyticVecField base, shape; double u1, u2; };
    std::vector<Pair> pairs;
    pairs.push_back({make_plane(), field_a(), field_b(), 0.3, -0.2});
    pairs.push_back({make_cylinder(1.5), field_c(), field_a(), 0.4, 2.4});
    pairs.push_back({make_sphere(2.0), field_b(), field_c(), 1.2, 2.8});

    const std::vector<double> eps_list{1e-2, 5e-3, 2.5e-3};
    for (const Pair& p : pairs) {
        PerturbedMotion pm;
        pm.base = DisplacementField::from_series(p.base);
        pm.shape = DisplacementField::from_series(p.shape);
        const RichardsonReport rep = linearization_consistency(
            pm, p.ref, MaterialParams{}, 1.0, {{p.u1, p.u2}}, eps_list);
        CHECK(rep.pass());
        // the deformation gradient itself is linear in the scale
        for (const RichardsonEntry& e : rep.entries)
            if (e.tensor.rfind("F.", 0) == 0) CHECK(e.exact);
    }
}

TEST_CASE("linearized momentum residual closes under a manufactured load")
{
    const Chart cyl = make_cylinder(1.5);
    PerturbedMotion pm;
    pm.base = cylinder_background({1.5, 0.12, MaterialParams{}, {}});
    pm.shape = DisplacementField::from_series(field_b());
    const MaterialParams mat;
    const double u1 = 0.2, u2 = 2.0, step = 1e-3;

    const Vec3 imbalance = linearized_momentum_residual(pm, cyl, mat, 1.0, u1, u2, step,
                                                        nullptr, nullptr);
    const PerturbedKinematics pk = perturb_kinematics(pm, cyl, u1, u2);
    const PerturbedStress ps = perturb_constitutive(pk, mat, 1.0);
    auto bp = [imbalance, rho0 = ps.rho_area.zeroth](double, double) {
        return (1.0 / rho0) * imbalance;
    };
    CHECK(max_abs(linearized_momentum_residual(pm, cyl, mat, 1.0, u1, u2, step, bp,
                                               nullptr)) < 1e-10);
}

TEST_CASE("in-plane part of the linearized angular momentum expression vanishes")
{
    const Chart cyl = make_cylinder(1.5);
    PerturbedMotion pm;
    pm.base = cylinder_background({1.5, 0.1, MaterialParams{}, {}});
    pm.shape = DisplacementField::from_series(field_b());
    const double u1 = 0.3, u2 = 2.2;
    const Multivector expr =
        linearized_angular_momentum(pm, cyl, MaterialParams{}, 1.0, u1, u2, 1e-3);

    const PerturbedKinematics pk = perturb_kinematics(pm, cyl, u1, u2);
    // component against the background in-plane reciprocal bivector
    const Mat2 g0inv = pk.metric0.inverse();
    Vec3 e0r[2];
    for (int i = 0; i < 2; ++i)
        e0r[i] = g0inv(i, 0) * pk.f0[0] + g0inv(i, 1) * pk.f0[1];
    const Multivector recip12 = wedge(e0r[1], e0r[0]);
    CHECK(std::abs(inner_scalar(recip12, expr)) < 1e-8);
}
