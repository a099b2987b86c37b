#pragma once

#include <array>
#include <functional>
#include <string>

#include "shellga/errors.hpp"
#include "shellga/mat2.hpp"
#include "shellga/multivector.hpp"

namespace shellga {

struct ParamRect {
    double u1min = 0.0, u1max = 1.0;
    double u2min = 0.0, u2max = 1.0;

    bool contains(double u1, double u2, double margin = 0.0) const
    {
        return u1 >= u1min + margin && u1 <= u1max - margin &&
               u2 >= u2min + margin && u2 <= u2max - margin;
    }
};

// Parametrized configuration. Exact partial derivatives are optional; when
// absent the differentiation policy falls back to central differences.
struct Chart {
    std::string id;
    ParamRect domain;
    std::function<Vec3(double, double)> position;
    std::function<Vec3(double, double)> d1, d2;
    std::function<Vec3(double, double)> d11, d12, d22;

    bool has_exact_first() const { return static_cast<bool>(d1) && static_cast<bool>(d2); }
    bool has_exact_second() const
    {
        return static_cast<bool>(d11) && static_cast<bool>(d12) && static_cast<bool>(d22);
    }
};

struct DiffPolicy {
    enum class Mode { automatic, exact, central };
    Mode mode = Mode::automatic;
    double step = 1e-5;
};

// All pointwise geometry of a configuration.  Index conventions: lowercase
// i,j run over the two coordinates, a,b over {1,2,3} with 3 the normal slot;
// capital bivector indices run over {(1,3),(2,3),(1,2)} in that order.
struct SurfaceFrame {
    Vec3 e[2];
    Vec3 n;
    Vec3 erecip[2];
    Multivector pseudo;  // unit bivector E1^E2 / |E1^E2|
    double vol = 0.0;    // |E1^E2|
    Mat2 metric, metric_inv;
    Mat2 second_form;
    double curv1 = 0.0, curv2 = 0.0; // ascending
    double gamma[3][2][3]{};         // gamma[a][i][b]
    double gamma_biv[3][2][3]{};     // gamma_biv[A][i][B]
    Vec3 dframe[2][3];               // dframe[i][a] = d_i E_(a+1)
    Multivector biv_frame[3];        // E_(1,3), E_(2,3), E_(1,2)
    Multivector biv_recip[3];        // E^(1,3), E^(2,3), E^(1,2)
};

SurfaceFrame frames_at(const Chart& chart, double u1, double u2,
                       const DiffPolicy& policy = {});

struct CurvatureResult {
    Mat2 second_form;
    double curv1 = 0.0, curv2 = 0.0;
};
CurvatureResult second_fundamental_form(const Chart& chart, double u1, double u2,
                                        const DiffPolicy& policy = {});

struct Christoffels {
    double gamma[3][2][3]{};
    double gamma_biv[3][2][3]{};
};
Christoffels christoffels(const Chart& chart, double u1, double u2,
                          const DiffPolicy& policy = {});

// Components of a bivector against the frame's bivector bases.
struct BivectorComponents {
    std::array<double, 3> cov{};    // omega . E_A
    std::array<double, 3> contra{}; // omega . E^A
};
BivectorComponents bivector_components(const Multivector& omega, const SurfaceFrame& frame);

// omega_A E^A (must reproduce omega for any bivector).
Multivector bivector_from_cov(const std::array<double, 3>& cov, const SurfaceFrame& frame);
// omega^A E_A
Multivector bivector_from_contra(const std::array<double, 3>& contra, const SurfaceFrame& frame);

} // namespace shellga
