#include "shellga/charts.hpp"

#include <cmath>

namespace shellga {

Chart make_plane(double extent)
{
    Chart c;
    c.id = "plane";
    c.domain = {-extent, extent, -extent, extent};
    c.position = [](double u1, double u2) { return Vec3{u1, u2, 0.0}; };
    c.d1 = [](double, double) { return Vec3{1.0, 0.0, 0.0}; };
    c.d2 = [](double, double) { return Vec3{0.0, 1.0, 0.0}; };
    c.d11 = [](double, double) { return Vec3{}; };
    c.d12 = [](double, double) { return Vec3{}; };
    c.d22 = [](double, double) { return Vec3{}; };
    return c;
}

Chart make_cylinder(double radius, double axial_extent)
{
    const double R = radius;
    Chart c;
    c.id = "cylinder";
    c.domain = {-axial_extent, axial_extent, 0.0, 2.0 * M_PI * R};
    c.position = [R](double u1, double u2) {
        return Vec3{u1, R * std::cos(u2 / R), R * std::sin(u2 / R)};
    };
    c.d1 = [](double, double) { return Vec3{1.0, 0.0, 0.0}; };
    c.d2 = [R](double, double u2) {
        return Vec3{0.0, -std::sin(u2 / R), std::cos(u2 / R)};
    };
    c.d11 = [](double, double) { return Vec3{}; };
    c.d12 = [](double, double) { return Vec3{}; };
    c.d22 = [R](double, double u2) {
        return Vec3{0.0, -std::cos(u2 / R) / R, -std::sin(u2 / R) / R};
    };
    return c;
}

Chart make_sphere(double radius, double pole_margin)
{
    const double R = radius;
    Chart c;
    c.id = "sphere";
    c.domain = {pole_margin, M_PI - pole_margin, 0.0, 2.0 * M_PI};
    c.position = [R](double th, double ph) {
        return Vec3{R * std::sin(th) * std::cos(ph), R * std::sin(th) * std::sin(ph),
                    R * std::cos(th)};
    };
    c.d1 = [R](double th, double ph) {
        return Vec3{R * std::cos(th) * std::cos(ph), R * std::cos(th) * std::sin(ph),
                    -R * std::sin(th)};
    };
    c.d2 = [R](double th, double ph) {
        return Vec3{-R * std::sin(th) * std::sin(ph), R * std::sin(th) * std::cos(ph), 0.0};
    };
    c.d11 = [R](double th, double ph) {
        return Vec3{-R * std::sin(th) * std::cos(ph), -R * std::sin(th) * std::sin(ph),
                    -R * std::cos(th)};
    };
    c.d12 = [R](double th, double ph) {
        return Vec3{-R * std::cos(th) * std::sin(ph), R * std::cos(th) * std::cos(ph), 0.0};
    };
    c.d22 = [R](double th, double ph) {
        return Vec3{-R * std::sin(th) * std::cos(ph), -R * std::sin(th) * std::sin(ph), 0.0};
    };
    return c;
}

Chart strip_exact(const Chart& chart)
{
    Chart c;
    c.id = chart.id + "-numeric";
    c.domain = chart.domain;
    c.position = chart.position;
    return c;
}

} // namespace shellga
