#include "shellga/surface.hpp"

#include <cmath>
#include <stdexcept>

namespace shellga {

namespace {

constexpr double kDegenerateDet = 1e-12;

bool resolve_exact(const Chart& chart, const DiffPolicy& policy)
{
    switch (policy.mode) {
    case DiffPolicy::Mode::exact:
        if (!chart.has_exact_first() || !chart.has_exact_second())
            throw std::invalid_argument("chart '" + chart.id +
                                        "' provides no exact derivatives");
        return true;
    case DiffPolicy::Mode::central:
        return false;
    case DiffPolicy::Mode::automatic:
    default:
        return chart.has_exact_first() && chart.has_exact_second();
    }
}

struct ChartDerivs {
    Vec3 e1, e2;
    Vec3 d11, d12, d22;
    Vec3 dn1, dn2; // partials of the unit normal
};

Vec3 normal_from_firsts(const Vec3& e1, const Vec3& e2)
{
    const Vec3 w = cross(e1, e2);
    const double nw = norm(w);
    if (nw * nw < kDegenerateDet)
        throw DegenerateFrame("collapsed parametrization while forming normal");
    return w / nw;
}

// First partials at an arbitrary nearby point, honoring the policy.
void first_partials(const Chart& c, double u1, double u2, bool exact, double h,
                    Vec3& e1, Vec3& e2)
{
    if (exact && c.has_exact_first()) {
        e1 = c.d1(u1, u2);
        e2 = c.d2(u1, u2);
    } else {
        e1 = (c.position(u1 + h, u2) - c.position(u1 - h, u2)) / (2.0 * h);
        e2 = (c.position(u1, u2 + h) - c.position(u1, u2 - h)) / (2.0 * h);
    }
}

ChartDerivs chart_derivs(const Chart& c, double u1, double u2, bool exact, double h)
{
    ChartDerivs d;
    first_partials(c, u1, u2, exact, h, d.e1, d.e2);

    if (exact) {
        d.d11 = c.d11(u1, u2);
        d.d12 = c.d12(u1, u2);
        d.d22 = c.d22(u1, u2);
        // n = w/|w| with w = e1 x e2; differentiate the quotient.
        const Vec3 w = cross(d.e1, d.e2);
        const double nw = norm(w);
        const Vec3 dw1 = cross(d.d11, d.e2) + cross(d.e1, d.d12);
        const Vec3 dw2 = cross(d.d12, d.e2) + cross(d.e1, d.d22);
        d.dn1 = dw1 / nw - (dot(w, dw1) / (nw * nw * nw)) * w;
        d.dn2 = dw2 / nw - (dot(w, dw2) / (nw * nw * nw)) * w;
    } else {
        d.d11 = (c.position(u1 + h, u2) - 2.0 * c.position(u1, u2) +
                 c.position(u1 - h, u2)) / (h * h);
        d.d22 = (c.position(u1, u2 + h) - 2.0 * c.position(u1, u2) +
                 c.position(u1, u2 - h)) / (h * h);
        d.d12 = (c.position(u1 + h, u2 + h) - c.position(u1 + h, u2 - h) -
                 c.position(u1 - h, u2 + h) + c.position(u1 - h, u2 - h)) /
                (4.0 * h * h);
        auto normal_at = [&](double v1, double v2) {
            Vec3 a, b;
            first_partials(c, v1, v2, false, h, a, b);
            return normal_from_firsts(a, b);
        };
        d.dn1 = (normal_at(u1 + h, u2) - normal_at(u1 - h, u2)) / (2.0 * h);
        d.dn2 = (normal_at(u1, u2 + h) - normal_at(u1, u2 - h)) / (2.0 * h);
    }
    return d;
}

} // namespace

SurfaceFrame frames_at(const Chart& chart, double u1, double u2, const DiffPolicy& policy)
{
    const bool exact = resolve_exact(chart, policy);
    const double h = policy.step;
    const double margin = exact ? 0.0 : 2.0 * h;
    if (!chart.domain.contains(u1, u2, margin))
        throw OutOfDomain("point outside parameter rectangle of chart '" + chart.id + "'");

    const ChartDerivs d = chart_derivs(chart, u1, u2, exact, h);

    SurfaceFrame f;
    f.e[0] = d.e1;
    f.e[1] = d.e2;
    f.metric(0, 0) = dot(d.e1, d.e1);
    f.metric(0, 1) = dot(d.e1, d.e2);
    f.metric(1, 0) = f.metric(0, 1);
    f.metric(1, 1) = dot(d.e2, d.e2);

    const double detg = f.metric.det();
    if (detg < kDegenerateDet)
        throw DegenerateFrame("det(G_ij) below threshold on chart '" + chart.id + "'");
    f.metric_inv = f.metric.inverse();

    const Multivector e12 = wedge(d.e1, d.e2);
    f.vol = std::sqrt(detg);
    f.pseudo = (1.0 / f.vol) * e12;
    f.n = dual(f.pseudo).vector_part();

    for (int i = 0; i < 2; ++i)
        f.erecip[i] = f.metric_inv(i, 0) * f.e[0] + f.metric_inv(i, 1) * f.e[1];

    f.dframe[0][0] = d.d11;
    f.dframe[0][1] = d.d12;
    f.dframe[1][0] = d.d12;
    f.dframe[1][1] = d.d22;
    f.dframe[0][2] = d.dn1;
    f.dframe[1][2] = d.dn2;

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            f.second_form(i, j) = dot(f.n, f.dframe[i][j]);

    const Mat2 mixed = f.metric_inv * f.second_form;
    const auto curv = eigenvalues_ascending(mixed);
    f.curv1 = curv[0];
    f.curv2 = curv[1];

    // gamma[a][i][b] = E^a . d_i E_b  (E^3 = E_3 = n)
    for (int i = 0; i < 2; ++i)
        for (int b = 0; b < 3; ++b) {
            f.gamma[0][i][b] = dot(f.erecip[0], f.dframe[i][b]);
            f.gamma[1][i][b] = dot(f.erecip[1], f.dframe[i][b]);
            f.gamma[2][i][b] = dot(f.n, f.dframe[i][b]);
        }

    // Bivector bases and their coefficients.
    f.biv_frame[0] = wedge(f.e[0], f.n);
    f.biv_frame[1] = wedge(f.e[1], f.n);
    f.biv_frame[2] = wedge(f.e[0], f.e[1]);
    f.biv_recip[0] = wedge(f.n, f.erecip[0]);
    f.biv_recip[1] = wedge(f.n, f.erecip[1]);
    f.biv_recip[2] = wedge(f.erecip[1], f.erecip[0]);

    // d_i of the bivector frame elements by the product rule, then
    // gamma_biv[A][i][B] = E^A . d_i E_B.
    for (int i = 0; i < 2; ++i) {
        const Multivector dbiv[3] = {
            wedge(f.dframe[i][0], f.n) + wedge(f.e[0], f.dframe[i][2]),
            wedge(f.dframe[i][1], f.n) + wedge(f.e[1], f.dframe[i][2]),
            wedge(f.dframe[i][0], f.e[1]) + wedge(f.e[0], f.dframe[i][1]),
        };
        for (int A = 0; A < 3; ++A)
            for (int B = 0; B < 3; ++B)
                f.gamma_biv[A][i][B] = inner_scalar(f.biv_recip[A], dbiv[B]);
    }

    return f;
}

CurvatureResult second_fundamental_form(const Chart& chart, double u1, double u2,
                                        const DiffPolicy& policy)
{
    const SurfaceFrame f = frames_at(chart, u1, u2, policy);
    return {f.second_form, f.curv1, f.curv2};
}

Christoffels christoffels(const Chart& chart, double u1, double u2,
                          const DiffPolicy& policy)
{
    const SurfaceFrame f = frames_at(chart, u1, u2, policy);
    Christoffels out;
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 2; ++i)
            for (int b = 0; b < 3; ++b) {
                out.gamma[a][i][b] = f.gamma[a][i][b];
                out.gamma_biv[a][i][b] = f.gamma_biv[a][i][b];
            }
    return out;
}

BivectorComponents bivector_components(const Multivector& omega, const SurfaceFrame& frame)
{
    BivectorComponents out;
    for (int A = 0; A < 3; ++A) {
        out.cov[A] = inner_scalar(omega, frame.biv_frame[A]);
        out.contra[A] = inner_scalar(omega, frame.biv_recip[A]);
    }
    return out;
}

Multivector bivector_from_cov(const std::array<double, 3>& cov, const SurfaceFrame& frame)
{
    return cov[0] * frame.biv_recip[0] + cov[1] * frame.biv_recip[1] +
           cov[2] * frame.biv_recip[2];
}

Multivector bivector_from_contra(const std::array<double, 3>& contra, const SurfaceFrame& frame)
{
    return contra[0] * frame.biv_frame[0] + contra[1] * frame.biv_frame[1] +
           contra[2] * frame.biv_frame[2];
}

} // namespace shellga
