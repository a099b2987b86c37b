#pragma once

#include <vector>

#include "shellga/multivector.hpp"

namespace shellga {

// One term  coeff * X1^p1 * X2^p2 * t^pt * trig(a1*X1 + a2*X2 + at*t + phase)
// of an analytic scalar field.  trig: 0 none, 1 sin, 2 cos.
struct AnalyticTerm {
    double coeff = 0.0;
    int p1 = 0, p2 = 0, pt = 0;
    int trig = 0;
    double a1 = 0.0, a2 = 0.0, at = 0.0, phase = 0.0;
};

// Value and first/second partial derivatives in (X1, X2, t).
struct Jet2 {
    double v = 0, d1 = 0, d2 = 0, dt = 0;
    double d11 = 0, d12 = 0, d22 = 0;
    double d1t = 0, d2t = 0, dtt = 0;
};

Jet2 eval_term(const AnalyticTerm& term, double x1, double x2, double t);

struct AnalyticSeries {
    std::vector<AnalyticTerm> terms;
    Jet2 eval(double x1, double x2, double t) const;
};

// Ambient-component vector field built from three scalar series.
struct AnalyticVecField {
    AnalyticSeries comp[3];

    Vec3 value(double x1, double x2, double t) const;
    Vec3 d1(double x1, double x2, double t) const;
    Vec3 d2(double x1, double x2, double t) const;
    Vec3 d11(double x1, double x2, double t) const;
    Vec3 d12(double x1, double x2, double t) const;
    Vec3 d22(double x1, double x2, double t) const;
    Vec3 dt(double x1, double x2, double t) const;
    Vec3 d1t(double x1, double x2, double t) const;
    Vec3 d2t(double x1, double x2, double t) const;
    Vec3 dtt(double x1, double x2, double t) const;
};

} // namespace shellga
