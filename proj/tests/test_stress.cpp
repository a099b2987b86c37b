#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "shellga/balance.hpp"
#include "shellga/charts.hpp"
#include "shellga/motions.hpp"
#include "shellga/stress.hpp"

using namespace shellga;

namespace {

Mat2 random_sym(std::mt19937_64& rng, double scale)
{
    std::uniform_real_distribution<double> d(-scale, scale);
    Mat2 m;
    m(0, 0) = d(rng);
    m(1, 1) = d(rng);
    m(0, 1) = m(1, 0) = d(rng);
    return m;
}

Mat2 random_metric(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-0.3, 0.3);
    Mat2 a;
    a(0, 0) = 1.0 + d(rng);
    a(1, 1) = 1.0 + d(rng);
    a(0, 1) = a(1, 0) = d(rng);
    return a.transpose() * a; // symmetric positive definite
}

} // namespace

TEST_CASE("material validation rejects out-of-range parameters")
{
    MaterialParams ok;
    CHECK_NOTHROW(ok.validate());
    MaterialParams bad = ok;
    bad.young = -1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
    bad = ok;
    bad.poisson = 0.5;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
    bad = ok;
    bad.thickness = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
    bad = ok;
    bad.density0 = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
}

TEST_CASE("energy vanishes in the unstrained state")
{
    MaterialParams mat;
    CHECK(energy_density(Mat2{}, Mat2{}, Mat2::identity(), mat) == 0.0);
}

TEST_CASE("pure trace strain reproduces the hand-expanded energy")
{
    MaterialParams mat;
    mat.young = 1.0;
    mat.poisson = 0.3;
    mat.thickness = 0.1;
    const double eps = 0.01;
    const Mat2 strain = eps * Mat2::identity();

    // tr(E^2) = 2 eps^2 and tr(E)^2 = 4 eps^2 for E = eps * Id
    const double pref = mat.young * mat.thickness /
                        (2.0 * (1.0 - mat.poisson * mat.poisson));
    const double expected =
        pref * ((1.0 - mat.poisson) * 2.0 * eps * eps + mat.poisson * 4.0 * eps * eps);
    CHECK(energy_density(strain, Mat2{}, Mat2::identity(), mat) ==
          doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("thickness scaling separates membrane and bending terms")
{
    std::mt19937_64 rng(51);
    MaterialParams mat;
    MaterialParams mat2 = mat;
    mat2.thickness = 2.0 * mat.thickness;
    const Mat2 e = random_sym(rng, 0.05);
    const Mat2 h = random_sym(rng, 0.2);
    const Mat2 ginv = Mat2::identity();
    CHECK(energy_density(e, Mat2{}, ginv, mat2) ==
          doctest::Approx(2.0 * energy_density(e, Mat2{}, ginv, mat)).epsilon(1e-13));
    CHECK(energy_density(Mat2{}, h, ginv, mat2) ==
          doctest::Approx(8.0 * energy_density(Mat2{}, h, ginv, mat)).epsilon(1e-13));
}

TEST_CASE("energy is nonnegative for admissible Poisson ratios")
{
    std::mt19937_64 rng(53);
    MaterialParams mat;
    mat.poisson = 0.45;
    for (int k = 0; k < 200; ++k) {
        const Mat2 g = random_metric(rng);
        CHECK(energy_density(random_sym(rng, 0.1), random_sym(rng, 0.5), g.inverse(),
                             mat) >= 0.0);
    }
}

TEST_CASE("constitutive law vanishes at zero strain and curvature change")
{
    MaterialParams mat;
    const ConstitutiveResult r =
        constitutive_eval(Mat2{}, Mat2{}, Mat2::identity(), mat);
    CHECK(max_abs(r.stress_mod) == 0.0);
    CHECK(max_abs(r.couple_mod) == 0.0);
}

TEST_CASE("constitutive outputs are the energy gradients")
{
    std::mt19937_64 rng(55);
    MaterialParams mat;
    mat.young = 2.3;
    mat.poisson = 0.31;
    mat.thickness = 0.12;
    const double step = 1e-6;
    for (int trial = 0; trial < 100; ++trial) {
        const Mat2 g = random_metric(rng);
        const Mat2 ginv = g.inverse();
        const Mat2 e = random_sym(rng, 0.05);
        const Mat2 h = random_sym(rng, 0.3);
        const ConstitutiveResult r = constitutive_eval(e, h, ginv, mat);
        const double scale =
            std::max({max_abs(r.stress_mod), max_abs(r.couple_mod), 1e-12});
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Mat2 ep = e, em = e;
                ep(a, b) += step;
                em(a, b) -= step;
                const double de = (energy_density(ep, h, ginv, mat) -
                                   energy_density(em, h, ginv, mat)) / (2.0 * step);
                CHECK(std::abs(de - r.stress_mod(a, b)) / scale < 1e-6);

                Mat2 hp = h, hm = h;
                hp(a, b) += step;
                hm(a, b) -= step;
                const double dh = (energy_density(e, hp, ginv, mat) -
                                   energy_density(e, hm, ginv, mat)) / (2.0 * step);
                CHECK(std::abs(dh - r.couple_mod(a, b)) / scale < 1e-6);
            }
    }
}

TEST_CASE("uni-axial background stress matches the closed form")
{
    MaterialParams mat;
    mat.young = 1.7;
    mat.poisson = 0.28;
    mat.thickness = 0.05;
    const double eps = 0.1;
    Mat2 e0;
    e0(0, 0) = eps + 0.5 * eps * eps;
    const ConstitutiveResult r = constitutive_eval(e0, Mat2{}, Mat2::identity(), mat);
    const double km = mat.membrane_modulus();
    CHECK(r.stress_mod(0, 0) == doctest::Approx(km * e0(0, 0)).epsilon(1e-13));
    CHECK(r.stress_mod(1, 1) == doctest::Approx(mat.poisson * km * e0(0, 0)).epsilon(1e-13));
    CHECK(std::abs(r.stress_mod(0, 1)) < 1e-15);
    CHECK(std::abs(r.stress_mod(1, 0)) < 1e-15);
}

TEST_CASE("couple-stress shear modulus reduces to the plain shear coefficient")
{
    MaterialParams mat;
    mat.young = 2.0;
    mat.poisson = 0.3;
    mat.thickness = 0.2;
    Mat2 h;
    h(0, 1) = h(1, 0) = 0.4;
    const ConstitutiveResult r = constitutive_eval(Mat2{}, h, Mat2::identity(), mat);
    const double expected = mat.young * std::pow(mat.thickness, 3) /
                            (12.0 * (1.0 + mat.poisson)) * h(0, 1);
    CHECK(r.couple_mod(0, 1) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(r.couple_mod(1, 0) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("shear closure on a uniform couple field vanishes")
{
    const Chart plane = make_plane();
    const SurfaceFrame f = frames_at(plane, 0.1, 0.2);
    Mat2 n;
    n(0, 0) = 0.3;
    n(1, 1) = -0.2;
    n(0, 1) = n(1, 0) = 0.15;
    CoupleField field = [n](double, double) { return n; };
    const ShearStress s =
        shear_closure(field, f, f, plane.domain, 0.1, 0.2, 1e-4, 0.0, 0.0, 1.0);
    CHECK(std::abs(s.s31) < 1e-12);
    CHECK(std::abs(s.s32) < 1e-12);
}

TEST_CASE("shear closure reproduces the analytic divergence of a linear field")
{
    const Chart plane = make_plane();
    const SurfaceFrame f = frames_at(plane, 0.2, -0.3);
    CoupleField field = [](double u1, double u2) {
        Mat2 n;
        n(0, 0) = 0.5 * u1 + 0.2 * u2;
        n(0, 1) = 0.1 * u2;
        n(1, 0) = -0.3 * u1;
        n(1, 1) = 0.7 * u1 - 0.4 * u2;
        return n;
    };
    const ShearStress s =
        shear_closure(field, f, f, plane.domain, 0.2, -0.3, 1e-4, 0.0, 0.0, 1.0);
    // S^{31} = -(d1 N^{11} + d2 N^{12}),  S^{32} = -(d1 N^{21} + d2 N^{22})
    CHECK(s.s31 == doctest::Approx(-(0.5 + 0.1)).epsilon(1e-8));
    CHECK(s.s32 == doctest::Approx(-(-0.3 - 0.4)).epsilon(1e-8));
}

TEST_CASE("body moment enters the shear closure with the reference density")
{
    const Chart plane = make_plane();
    const SurfaceFrame f = frames_at(plane, 0.0, 0.0);
    CoupleField field = [](double, double) { return Mat2{}; };
    const double rho0 = 1.9;
    const ShearStress s =
        shear_closure(field, f, f, plane.domain, 0.0, 0.0, 1e-4, 0.2, 0.0, rho0);
    CHECK(s.s31 == doctest::Approx(-rho0 * 0.2).epsilon(1e-12));
    CHECK(s.s32 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("identity motion assembly keeps all stress pictures aligned")
{
    const Chart cyl = make_cylinder(1.5);
    const Motion id = identity_motion(cyl);
    PointCase pc;
    pc.ref = &cyl;
    pc.motion = &id;
    // seed nonzero stress through a fake strain state is not possible for the
    // identity, so check the trivial alignment instead
    const AssembledPoint p = assemble_point(pc, 0.3, 2.0);
    CHECK(max_abs(p.stress.stress_mod) < 1e-12);
    CHECK(max_abs(p.stress.couple_mod) < 1e-12);
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 2; ++i) {
            CHECK(p.stress.t[a][i] == p.stress.s[a][i]);
            CHECK(std::abs(p.stress.sigma[a][i] - p.stress.s[a][i]) < 1e-12);
        }
}

TEST_CASE("assembled couple stress satisfies its component identities")
{
    const Chart cyl = make_cylinder(2.0);
    AnalyticVecField bend;
    bend.comp[2].terms.push_back({0.08, 0, 0, 0, 1, 0.9, 0.35, 1.1, 0.4});
    bend.comp[0].terms.push_back({0.05, 1, 0, 0, 2, 0.0, 0.0, 0.7, 0.1});
    const Motion m = analytic_displacement_motion(cyl, bend, "bend");

    PointCase pc;
    pc.ref = &cyl;
    pc.motion = &m;
    pc.time = 0.4;
    const AssembledPoint p = assemble_point(pc, 0.3, 3.0);

    for (int i = 0; i < 2; ++i) {
        // M^{(1,3)i} = N^{1i}, M^{(2,3)i} = N^{2i}, M^{(1,2)i} = 0
        CHECK(p.stress.m_comp[0][i] ==
              doctest::Approx(p.stress.couple_mod(0, i)).epsilon(1e-10));
        CHECK(p.stress.m_comp[1][i] ==
              doctest::Approx(p.stress.couple_mod(1, i)).epsilon(1e-10));
        CHECK(std::abs(p.stress.m_comp[2][i]) < 1e-12);
        // modified first couple stress shares the same components
        for (int j = 0; j < 2; ++j)
            CHECK(p.stress.mmod[j][i] ==
                  doctest::Approx(p.stress.couple_mod(j, i)).epsilon(1e-10));
        // and lies in the spatial tangent plane
        const Vec3 mvec = -vec_dot_bivector(p.def.spa.n, p.stress.m_cols[i]);
        CHECK(std::abs(dot(mvec, p.def.spa.n)) < 1e-12);
    }
}

TEST_CASE("in-plane angular momentum identity holds for assembled states")
{
    const Chart cyl = make_cylinder(1.2);
    AnalyticVecField fld;
    fld.comp[2].terms.push_back({0.07, 0, 0, 0, 2, 0.8, 0.5, 0.9, 0.0});
    fld.comp[1].terms.push_back({0.04, 1, 1, 0, 0, 0.0, 0.0, 0.0, 0.0});
    const Motion m = analytic_displacement_motion(cyl, fld, "mix");

    PointCase pc;
    pc.ref = &cyl;
    pc.motion = &m;
    pc.time = 0.2;
    for (double u1 : {-0.4, 0.5}) {
        for (double u2 : {1.5, 4.0}) {
            const AssembledPoint p = assemble_point(pc, u1, u2);
            const Mat2 bmix = p.def.spa.metric_inv * p.def.spa.second_form;
            double r = p.stress.s[1][0] - p.stress.s[0][1];
            for (int i = 0; i < 2; ++i)
                r += p.stress.couple_mod(1, i) * bmix(0, i) -
                     p.stress.couple_mod(0, i) * bmix(1, i);
            CHECK(std::abs(r) < 1e-10);
        }
    }
}

TEST_CASE("push-forward and pull-back of the stress columns round-trip")
{
    const Chart plane = make_plane();
    AnalyticVecField fld;
    fld.comp[0].terms.push_back({0.06, 2, 0, 0, 0, 0.0, 0.0, 0.0, 0.0});
    fld.comp[2].terms.push_back({0.09, 0, 0, 0, 1, 1.2, 0.7, 0.0, 0.3});
    const Motion m = analytic_displacement_motion(plane, fld, "warp");

    PointCase pc;
    pc.ref = &plane;
    pc.motion = &m;
    const AssembledPoint p = assemble_point(pc, 0.25, -0.4);

    const Vec3 frame[3] = {p.def.spa.e[0], p.def.spa.e[1], p.def.spa.n};
    for (int i = 0; i < 2; ++i) {
        Vec3 sigma_col{};
        for (int a = 0; a < 3; ++a) sigma_col += p.stress.sigma[a][i] * frame[a];
        // T(E^i) = det F * sigma(e^i)
        CHECK(max_abs(p.def.det_f * sigma_col - p.stress.t_cols[i]) < 1e-12);
    }
}

TEST_CASE("rigid motions produce no stress at all")
{
    const Chart cyl = make_cylinder(1.0);
    const Motion rot = rigid_motion(cyl, {0.3, 0.8, 0.52}, 0.6, {0.1, -0.2, 0.3});
    PointCase pc;
    pc.ref = &cyl;
    pc.motion = &rot;
    pc.time = 0.5;
    const AssembledPoint p = assemble_point(pc, 0.2, 2.5);
    CHECK(max_abs(p.stress.stress_mod) < 1e-8);
    CHECK(max_abs(p.stress.couple_mod) < 1e-8);
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 2; ++i) CHECK(std::abs(p.stress.t[a][i]) < 1e-8);
    for (int i = 0; i < 2; ++i) CHECK(max_abs(p.stress.m_cols[i]) < 1e-8);
}
