#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace shellga {

// Dense 2x2 tensor components (metric, strain, curvature, stress blocks).
struct Mat2 {
    double a[2][2]{};

    double operator()(int i, int j) const { return a[i][j]; }
    double& operator()(int i, int j) { return a[i][j]; }

    static Mat2 identity()
    {
        Mat2 m; m.a[0][0] = 1.0; m.a[1][1] = 1.0; return m;
    }

    double det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    double trace() const { return a[0][0] + a[1][1]; }

    Mat2 transpose() const
    {
        Mat2 m;
        m.a[0][0] = a[0][0]; m.a[0][1] = a[1][0];
        m.a[1][0] = a[0][1]; m.a[1][1] = a[1][1];
        return m;
    }

    Mat2 inverse() const
    {
        const double d = det();
        Mat2 m;
        m.a[0][0] =  a[1][1] / d; m.a[0][1] = -a[0][1] / d;
        m.a[1][0] = -a[1][0] / d; m.a[1][1] =  a[0][0] / d;
        return m;
    }
};

inline Mat2 operator+(const Mat2& x, const Mat2& y)
{
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.a[i][j] = x.a[i][j] + y.a[i][j];
    return m;
}

inline Mat2 operator-(const Mat2& x, const Mat2& y)
{
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.a[i][j] = x.a[i][j] - y.a[i][j];
    return m;
}

inline Mat2 operator*(double s, const Mat2& x)
{
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.a[i][j] = s * x.a[i][j];
    return m;
}

inline Mat2 operator*(const Mat2& x, const Mat2& y)
{
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
    return m;
}

inline double max_abs(const Mat2& x)
{
    double m = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(x.a[i][j]));
    return m;
}

inline bool approx_equal(const Mat2& x, const Mat2& y, double tol = 1e-12)
{
    return max_abs(x - y) <= tol;
}

// Eigenvalues of a 2x2 map with real spectrum (e.g. metric-raised symmetric
// tensors), ascending.  Small negative discriminants from round-off are
// clamped to zero.
inline std::array<double, 2> eigenvalues_ascending(const Mat2& m)
{
    const double tr = m.trace();
    const double de = m.det();
    const double disc = std::max(tr * tr - 4.0 * de, 0.0);
    const double r = std::sqrt(disc);
    return {0.5 * (tr - r), 0.5 * (tr + r)};
}

} // namespace shellga
