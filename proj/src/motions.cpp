#include "shellga/motions.hpp"

#include <cmath>
#include <memory>

namespace shellga {

namespace {

Vec3 zero3(double, double, double) { return {}; }

// Rodrigues rotation of v about unit axis by angle.
Vec3 rotate(const Vec3& axis, double angle, const Vec3& v)
{
    const double c = std::cos(angle), s = std::sin(angle);
    return c * v + s * cross(axis, v) + (1.0 - c) * dot(axis, v) * axis;
}

} // namespace

Motion identity_motion(const Chart& ref)
{
    Motion m;
    m.id = "identity";
    const auto pos = ref.position;
    m.position = [pos](double u1, double u2, double) { return pos(u1, u2); };
    auto lift = [](const std::function<Vec3(double, double)>& f)
        -> std::function<Vec3(double, double, double)> {
        if (!f) return {};
        return [f](double u1, double u2, double) { return f(u1, u2); };
    };
    m.d1 = lift(ref.d1);
    m.d2 = lift(ref.d2);
    m.d11 = lift(ref.d11);
    m.d12 = lift(ref.d12);
    m.d22 = lift(ref.d22);
    m.velocity = zero3;
    m.vel_d1 = zero3;
    m.vel_d2 = zero3;
    m.acceleration = zero3;
    return m;
}

Motion rigid_motion(const Chart& ref, const Vec3& axis, double rate,
                    const Vec3& center, const Vec3& translation_velocity)
{
    const Vec3 a = axis / norm(axis);
    Motion m;
    m.id = "rigid";
    const auto pos = ref.position;
    m.position = [pos, a, rate, center, translation_velocity](double u1, double u2, double t) {
        return center + rotate(a, rate * t, pos(u1, u2) - center) + t * translation_velocity;
    };
    auto lift_rot = [a, rate](const std::function<Vec3(double, double)>& f)
        -> std::function<Vec3(double, double, double)> {
        if (!f) return {};
        return [f, a, rate](double u1, double u2, double t) {
            return rotate(a, rate * t, f(u1, u2));
        };
    };
    m.d1 = lift_rot(ref.d1);
    m.d2 = lift_rot(ref.d2);
    m.d11 = lift_rot(ref.d11);
    m.d12 = lift_rot(ref.d12);
    m.d22 = lift_rot(ref.d22);
    m.velocity = [pos, a, rate, center, translation_velocity](double u1, double u2, double t) {
        return rate * cross(a, rotate(a, rate * t, pos(u1, u2) - center)) +
               translation_velocity;
    };
    if (ref.d1 && ref.d2) {
        m.vel_d1 = [f = ref.d1, a, rate](double u1, double u2, double t) {
            return rate * cross(a, rotate(a, rate * t, f(u1, u2)));
        };
        m.vel_d2 = [f = ref.d2, a, rate](double u1, double u2, double t) {
            return rate * cross(a, rotate(a, rate * t, f(u1, u2)));
        };
    }
    m.acceleration = [pos, a, rate, center](double u1, double u2, double t) {
        const Vec3 r = rotate(a, rate * t, pos(u1, u2) - center);
        return rate * rate * cross(a, cross(a, r));
    };
    return m;
}

Motion uniaxial_motion(const Chart& ref, double eps, const Vec3& axis)
{
    Motion m;
    m.id = "uniaxial";
    const auto pos = ref.position;
    m.position = [pos, eps, axis](double u1, double u2, double) {
        return pos(u1, u2) + (eps * u1) * axis;
    };
    if (ref.d1)
        m.d1 = [f = ref.d1, eps, axis](double u1, double u2, double) {
            return f(u1, u2) + eps * axis;
        };
    auto lift = [](const std::function<Vec3(double, double)>& f)
        -> std::function<Vec3(double, double, double)> {
        if (!f) return {};
        return [f](double u1, double u2, double) { return f(u1, u2); };
    };
    m.d2 = lift(ref.d2);
    m.d11 = lift(ref.d11);
    m.d12 = lift(ref.d12);
    m.d22 = lift(ref.d22);
    m.velocity = zero3;
    m.vel_d1 = zero3;
    m.vel_d2 = zero3;
    m.acceleration = zero3;
    return m;
}

Motion cylinder_inflation_motion(double radius, double delta, double omega)
{
    const double R = radius;
    auto s = [delta, omega](double t) { return omega > 0.0 ? delta * std::sin(omega * t) : delta; };
    auto ds = [delta, omega](double t) { return omega > 0.0 ? delta * omega * std::cos(omega * t) : 0.0; };
    auto dds = [delta, omega](double t) {
        return omega > 0.0 ? -delta * omega * omega * std::sin(omega * t) : 0.0;
    };

    Motion m;
    m.id = "inflation";
    m.position = [R, s](double u1, double u2, double t) {
        const double f = 1.0 + s(t);
        return Vec3{u1, R * f * std::cos(u2 / R), R * f * std::sin(u2 / R)};
    };
    m.d1 = [](double, double, double) { return Vec3{1.0, 0.0, 0.0}; };
    m.d2 = [R, s](double, double u2, double t) {
        const double f = 1.0 + s(t);
        return Vec3{0.0, -f * std::sin(u2 / R), f * std::cos(u2 / R)};
    };
    m.d11 = zero3;
    m.d12 = zero3;
    m.d22 = [R, s](double, double u2, double t) {
        const double f = 1.0 + s(t);
        return Vec3{0.0, -f * std::cos(u2 / R) / R, -f * std::sin(u2 / R) / R};
    };
    m.velocity = [R, ds](double, double u2, double t) {
        return Vec3{0.0, R * ds(t) * std::cos(u2 / R), R * ds(t) * std::sin(u2 / R)};
    };
    m.vel_d1 = zero3;
    m.vel_d2 = [R, ds](double, double u2, double t) {
        return Vec3{0.0, -ds(t) * std::sin(u2 / R), ds(t) * std::cos(u2 / R)};
    };
    m.acceleration = [R, dds](double, double u2, double t) {
        return Vec3{0.0, R * dds(t) * std::cos(u2 / R), R * dds(t) * std::sin(u2 / R)};
    };
    return m;
}

Motion analytic_displacement_motion(const Chart& ref, const AnalyticVecField& field,
                                    const std::string& id)
{
    auto fld = std::make_shared<AnalyticVecField>(field);
    Motion m;
    m.id = id;
    const auto pos = ref.position;
    m.position = [pos, fld](double u1, double u2, double t) {
        return pos(u1, u2) + fld->value(u1, u2, t);
    };
    if (ref.has_exact_first()) {
        m.d1 = [f = ref.d1, fld](double u1, double u2, double t) {
            return f(u1, u2) + fld->d1(u1, u2, t);
        };
        m.d2 = [f = ref.d2, fld](double u1, double u2, double t) {
            return f(u1, u2) + fld->d2(u1, u2, t);
        };
    }
    if (ref.has_exact_second()) {
        m.d11 = [f = ref.d11, fld](double u1, double u2, double t) {
            return f(u1, u2) + fld->d11(u1, u2, t);
        };
        m.d12 = [f = ref.d12, fld](double u1, double u2, double t) {
            return f(u1, u2) + fld->d12(u1, u2, t);
        };
        m.d22 = [f = ref.d22, fld](double u1, double u2, double t) {
            return f(u1, u2) + fld->d22(u1, u2, t);
        };
    }
    m.velocity = [fld](double u1, double u2, double t) { return fld->dt(u1, u2, t); };
    m.vel_d1 = [fld](double u1, double u2, double t) { return fld->d1t(u1, u2, t); };
    m.vel_d2 = [fld](double u1, double u2, double t) { return fld->d2t(u1, u2, t); };
    m.acceleration = [fld](double u1, double u2, double t) { return fld->dtt(u1, u2, t); };
    return m;
}

} // namespace shellga
