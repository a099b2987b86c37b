#pragma once

#include <array>
#include <cmath>
#include <cstdlib>

#include "shellga/kernels.hpp"

namespace shellga {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) { a = a + b; return a; }
inline Vec3& operator-=(Vec3& a, const Vec3& b) { a = a - b; return a; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double max_abs(const Vec3& a)
{
    return std::max(std::abs(a.x), std::max(std::abs(a.y), std::abs(a.z)));
}

// Graded element of the geometric algebra of Euclidean 3-space.
// Coefficients over {1, e1, e2, e3, e12, e13, e23, e123}.
struct Multivector {
    std::array<double, 8> c{};

    static Multivector scalar(double s)
    {
        Multivector m; m.c[0] = s; return m;
    }
    static Multivector vector(const Vec3& v)
    {
        Multivector m; m.c[1] = v.x; m.c[2] = v.y; m.c[3] = v.z; return m;
    }
    static Multivector bivector(double c12, double c13, double c23)
    {
        Multivector m; m.c[4] = c12; m.c[5] = c13; m.c[6] = c23; return m;
    }
    static Multivector pseudoscalar(double p)
    {
        Multivector m; m.c[7] = p; return m;
    }

    double scalar_part() const { return c[0]; }
    Vec3 vector_part() const { return {c[1], c[2], c[3]}; }
    std::array<double, 3> bivector_part() const { return {c[4], c[5], c[6]}; }
    double pseudoscalar_part() const { return c[7]; }

    // Projection onto grade k (0..3).
    Multivector grade(int k) const
    {
        Multivector m;
        switch (k) {
        case 0: m.c[0] = c[0]; break;
        case 1: m.c[1] = c[1]; m.c[2] = c[2]; m.c[3] = c[3]; break;
        case 2: m.c[4] = c[4]; m.c[5] = c[5]; m.c[6] = c[6]; break;
        case 3: m.c[7] = c[7]; break;
        default: break;
        }
        return m;
    }
};

inline Multivector operator+(const Multivector& a, const Multivector& b)
{
    Multivector m;
    for (int i = 0; i < 8; ++i) m.c[i] = a.c[i] + b.c[i];
    return m;
}

inline Multivector operator-(const Multivector& a, const Multivector& b)
{
    Multivector m;
    for (int i = 0; i < 8; ++i) m.c[i] = a.c[i] - b.c[i];
    return m;
}

inline Multivector operator-(const Multivector& a)
{
    Multivector m;
    for (int i = 0; i < 8; ++i) m.c[i] = -a.c[i];
    return m;
}

inline Multivector operator*(double s, const Multivector& a)
{
    Multivector m;
    for (int i = 0; i < 8; ++i) m.c[i] = s * a.c[i];
    return m;
}

inline Multivector operator*(const Multivector& a, double s) { return s * a; }

// Geometric product, routed through the dispatched kernel.
inline Multivector operator*(const Multivector& a, const Multivector& b)
{
    Multivector m;
    kernels::geometric_product(a.c.data(), b.c.data(), m.c.data());
    return m;
}

inline double max_abs(const Multivector& a)
{
    double m = 0.0;
    for (double v : a.c) m = std::max(m, std::abs(v));
    return m;
}

inline bool approx_equal(const Multivector& a, const Multivector& b, double tol = 1e-12)
{
    return max_abs(a - b) <= tol;
}

// Ambient pseudoscalar e1 e2 e3.
inline const Multivector& ambient_pseudoscalar()
{
    static const Multivector i3 = Multivector::pseudoscalar(1.0);
    return i3;
}

// Multiplication by -I3; maps the unit bivector of an oriented plane to its
// unit normal.
inline Multivector dual(const Multivector& a)
{
    return -(ambient_pseudoscalar() * a);
}

// Outer product of two vectors, as a bivector.
inline Multivector wedge(const Vec3& a, const Vec3& b)
{
    return (Multivector::vector(a) * Multivector::vector(b)).grade(2);
}

// a x b = -I3 (a ^ b)
inline Vec3 cross(const Vec3& a, const Vec3& b)
{
    return dual(wedge(a, b)).vector_part();
}

// Scalar part of the product; for two bivectors this is their inner product.
inline double inner_scalar(const Multivector& a, const Multivector& b)
{
    return (a * b).scalar_part();
}

// y . B for a vector y and bivector B (grade-1 part of yB).
inline Vec3 vec_dot_bivector(const Vec3& y, const Multivector& b)
{
    return (Multivector::vector(y) * b).grade(1).vector_part();
}

} // namespace shellga
