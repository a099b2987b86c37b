#include "shellga/analytic.hpp"

#include <cmath>

namespace shellga {

namespace {

// x^p with first and second derivatives; p < 0 treated as p = 0.
struct Pw { double v, d, dd; };

Pw powjet(double x, int p)
{
    if (p <= 0) return {1.0, 0.0, 0.0};
    if (p == 1) return {x, 1.0, 0.0};
    const double xm2 = std::pow(x, p - 2);
    return {xm2 * x * x, p * xm2 * x, double(p) * (p - 1) * xm2};
}

// trig(theta) with derivatives in theta.
struct Tw { double v, d, dd; };

Tw trigjet(int kind, double theta)
{
    if (kind == 1) return {std::sin(theta), std::cos(theta), -std::sin(theta)};
    if (kind == 2) return {std::cos(theta), -std::sin(theta), -std::cos(theta)};
    return {1.0, 0.0, 0.0};
}

} // namespace

Jet2 eval_term(const AnalyticTerm& m, double x1, double x2, double t)
{
    const Pw px = powjet(x1, m.p1);
    const Pw py = powjet(x2, m.p2);
    const Pw pt = powjet(t, m.pt);
    const double theta = m.a1 * x1 + m.a2 * x2 + m.at * t + m.phase;
    const Tw tr = trigjet(m.trig, theta);

    // P and its partials
    const double P = m.coeff * px.v * py.v * pt.v;
    const double P1 = m.coeff * px.d * py.v * pt.v;
    const double P2 = m.coeff * px.v * py.d * pt.v;
    const double Pt = m.coeff * px.v * py.v * pt.d;
    const double P11 = m.coeff * px.dd * py.v * pt.v;
    const double P22 = m.coeff * px.v * py.dd * pt.v;
    const double Ptt = m.coeff * px.v * py.v * pt.dd;
    const double P12 = m.coeff * px.d * py.d * pt.v;
    const double P1t = m.coeff * px.d * py.v * pt.d;
    const double P2t = m.coeff * px.v * py.d * pt.d;

    Jet2 j;
    j.v = P * tr.v;
    j.d1 = P1 * tr.v + P * tr.d * m.a1;
    j.d2 = P2 * tr.v + P * tr.d * m.a2;
    j.dt = Pt * tr.v + P * tr.d * m.at;
    j.d11 = P11 * tr.v + 2.0 * P1 * tr.d * m.a1 + P * tr.dd * m.a1 * m.a1;
    j.d22 = P22 * tr.v + 2.0 * P2 * tr.d * m.a2 + P * tr.dd * m.a2 * m.a2;
    j.dtt = Ptt * tr.v + 2.0 * Pt * tr.d * m.at + P * tr.dd * m.at * m.at;
    j.d12 = P12 * tr.v + P1 * tr.d * m.a2 + P2 * tr.d * m.a1 + P * tr.dd * m.a1 * m.a2;
    j.d1t = P1t * tr.v + P1 * tr.d * m.at + Pt * tr.d * m.a1 + P * tr.dd * m.a1 * m.at;
    j.d2t = P2t * tr.v + P2 * tr.d * m.at + Pt * tr.d * m.a2 + P * tr.dd * m.a2 * m.at;
    return j;
}

Jet2 AnalyticSeries::eval(double x1, double x2, double t) const
{
    Jet2 sum;
    for (const auto& term : terms) {
        const Jet2 j = eval_term(term, x1, x2, t);
        sum.v += j.v;
        sum.d1 += j.d1; sum.d2 += j.d2; sum.dt += j.dt;
        sum.d11 += j.d11; sum.d12 += j.d12; sum.d22 += j.d22;
        sum.d1t += j.d1t; sum.d2t += j.d2t; sum.dtt += j.dtt;
    }
    return sum;
}

#define SHELLGA_FIELD_ACCESSOR(name, member)                                   \
    Vec3 AnalyticVecField::name(double x1, double x2, double t) const          \
    {                                                                          \
        return {comp[0].eval(x1, x2, t).member,                                \
                comp[1].eval(x1, x2, t).member,                                \
                comp[2].eval(x1, x2, t).member};                               \
    }

SHELLGA_FIELD_ACCESSOR(value, v)
SHELLGA_FIELD_ACCESSOR(d1, d1)
SHELLGA_FIELD_ACCESSOR(d2, d2)
SHELLGA_FIELD_ACCESSOR(d11, d11)
SHELLGA_FIELD_ACCESSOR(d12, d12)
SHELLGA_FIELD_ACCESSOR(d22, d22)
SHELLGA_FIELD_ACCESSOR(dt, dt)
SHELLGA_FIELD_ACCESSOR(d1t, d1t)
SHELLGA_FIELD_ACCESSOR(d2t, d2t)
SHELLGA_FIELD_ACCESSOR(dtt, dtt)

#undef SHELLGA_FIELD_ACCESSOR

} // namespace shellga
