#include "shellga/kinematics.hpp"

#include <cmath>

namespace shellga {

namespace {

std::function<Vec3(double, double)> bind_t(
    const std::function<Vec3(double, double, double)>& fn, double t)
{
    if (!fn) return {};
    return [fn, t](double u1, double u2) { return fn(u1, u2, t); };
}

} // namespace

Chart spatial_chart(const Chart& ref, const Motion& motion, double t)
{
    Chart c;
    c.id = ref.id + ":" + motion.id;
    c.domain = ref.domain;
    const auto pos = motion.position;
    c.position = [pos, t](double u1, double u2) { return pos(u1, u2, t); };
    c.d1 = bind_t(motion.d1, t);
    c.d2 = bind_t(motion.d2, t);
    c.d11 = bind_t(motion.d11, t);
    c.d12 = bind_t(motion.d12, t);
    c.d22 = bind_t(motion.d22, t);
    return c;
}

DeformationState deformation_state(const Chart& ref, const Motion& motion,
                                   double u1, double u2, double t,
                                   const DiffPolicy& policy)
{
    DeformationState s;
    s.ref = frames_at(ref, u1, u2, policy);
    const Chart spa = spatial_chart(ref, motion, t);
    s.spa = frames_at(spa, u1, u2, policy);

    s.cauchy_green = s.spa.metric; // C_ij = g_ij in convected coordinates
    s.strain = 0.5 * (s.cauchy_green - s.ref.metric);

    const Mat2 mixed = s.ref.metric_inv * s.cauchy_green;
    const auto ev = eigenvalues_ascending(mixed);
    s.stretch1 = std::sqrt(std::max(ev[0], 0.0));
    s.stretch2 = std::sqrt(std::max(ev[1], 0.0));

    s.det_f = s.spa.vol / s.ref.vol;
    if (!(s.det_f > 0.0))
        throw OrientationReversed("det F <= 0 for motion '" + motion.id + "'");
    return s;
}

Mat2 curvature_change(const DeformationState& state)
{
    return state.spa.second_form - state.ref.second_form;
}

Mat2 curvature_change(const Chart& ref, const Motion& motion, double u1, double u2,
                      double t, const DiffPolicy& policy)
{
    return curvature_change(deformation_state(ref, motion, u1, u2, t, policy));
}

Vec3 motion_velocity(const Motion& motion, double u1, double u2, double t, double dt)
{
    if (motion.velocity) return motion.velocity(u1, u2, t);
    return (motion.position(u1, u2, t + dt) - motion.position(u1, u2, t - dt)) / (2.0 * dt);
}

Vec3 motion_acceleration(const Motion& motion, double u1, double u2, double t, double dt)
{
    if (motion.acceleration) return motion.acceleration(u1, u2, t);
    if (motion.velocity)
        return (motion.velocity(u1, u2, t + dt) - motion.velocity(u1, u2, t - dt)) /
               (2.0 * dt);
    return (motion.position(u1, u2, t + dt) - 2.0 * motion.position(u1, u2, t) +
            motion.position(u1, u2, t - dt)) / (dt * dt);
}

namespace {

// d_i V at fixed t; exact when the motion carries velocity Jacobians.
void velocity_partials(const Motion& motion, double u1, double u2, double t,
                       double h, double dt, Vec3& dv1, Vec3& dv2)
{
    if (motion.vel_d1 && motion.vel_d2) {
        dv1 = motion.vel_d1(u1, u2, t);
        dv2 = motion.vel_d2(u1, u2, t);
        return;
    }
    dv1 = (motion_velocity(motion, u1 + h, u2, t, dt) -
           motion_velocity(motion, u1 - h, u2, t, dt)) / (2.0 * h);
    dv2 = (motion_velocity(motion, u1, u2 + h, t, dt) -
           motion_velocity(motion, u1, u2 - h, t, dt)) / (2.0 * h);
}

// v_{3|i} = e3 . d_i V, needed as a field for the curvature rate.
void normal_velocity_gradient(const Motion& motion, double u1, double u2, double t,
                              const DiffPolicy& policy, const TimePolicy& time,
                              const SurfaceFrame& spa, double out[2])
{
    Vec3 dv1, dv2;
    velocity_partials(motion, u1, u2, t, policy.step, time.dt, dv1, dv2);
    out[0] = dot(spa.n, dv1);
    out[1] = dot(spa.n, dv2);
}

} // namespace

VelocityTensors velocity_tensors(const Chart& ref, const Motion& motion,
                                 double u1, double u2, double t,
                                 const DiffPolicy& policy, const TimePolicy& time)
{
    const Chart spa_chart = spatial_chart(ref, motion, t);
    const SurfaceFrame spa = frames_at(spa_chart, u1, u2, policy);

    VelocityTensors out;
    out.velocity = motion_velocity(motion, u1, u2, t, time.dt);

    Vec3 dv[2];
    velocity_partials(motion, u1, u2, t, policy.step, time.dt, dv[0], dv[1]);

    // v_{a|i} = e_a . d_i V
    double vcov[3][2];
    for (int i = 0; i < 2; ++i) {
        vcov[0][i] = dot(spa.e[0], dv[i]);
        vcov[1][i] = dot(spa.e[1], dv[i]);
        vcov[2][i] = dot(spa.n, dv[i]);
    }

    // l_{ai} = v_{a|i};  l_{a3} from de3/dt = -v_{3|i} e^i
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 2; ++i) out.l[a][i] = vcov[a][i];
    out.l[0][2] = -vcov[2][0];
    out.l[1][2] = -vcov[2][1];
    out.l[2][2] = 0.0;

    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            out.n[a][b] = 0.5 * (out.l[a][b] + out.l[b][a]);
            out.w[a][b] = 0.5 * (out.l[a][b] - out.l[b][a]);
        }

    // omega = (1/2) e^a ^ w(e_a) with w(e_a) = w_{ca} e^c
    const Vec3 recip[3] = {spa.erecip[0], spa.erecip[1], spa.n};
    Multivector omega;
    for (int a = 0; a < 3; ++a) {
        Vec3 wa{};
        for (int c = 0; c < 3; ++c) wa += out.w[c][a] * recip[c];
        omega = omega + wedge(recip[a], wa);
    }
    out.angular_velocity = 0.5 * omega;
    return out;
}

RateTensors rate_tensors(const Chart& ref, const Motion& motion,
                         double u1, double u2, double t,
                         const DiffPolicy& policy, const TimePolicy& time)
{
    const VelocityTensors vt = velocity_tensors(ref, motion, u1, u2, t, policy, time);
    const Chart spa_chart = spatial_chart(ref, motion, t);
    const SurfaceFrame spa = frames_at(spa_chart, u1, u2, policy);

    RateTensors out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.strain_rate(i, j) = vt.n[i][j];

    // dH_ij/dt = d_i l_{3j} - gamma^k_{ij} l_{3k} - gamma^a_{i3} l_{aj},
    // with the l_{3j} field differenced over the coordinates.
    const double h = policy.step;
    auto l3_at = [&](double v1, double v2, double l3[2]) {
        const SurfaceFrame f = frames_at(spa_chart, v1, v2, policy);
        normal_velocity_gradient(motion, v1, v2, t, policy, time, f, l3);
    };
    double p1[2], m1[2], p2[2], m2[2];
    l3_at(u1 + h, u2, p1);
    l3_at(u1 - h, u2, m1);
    l3_at(u1, u2 + h, p2);
    l3_at(u1, u2 - h, m2);
    double dl3[2][2]; // dl3[i][j] = d_i l_{3j}
    for (int j = 0; j < 2; ++j) {
        dl3[0][j] = (p1[j] - m1[j]) / (2.0 * h);
        dl3[1][j] = (p2[j] - m2[j]) / (2.0 * h);
    }

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double v = dl3[i][j];
            for (int k = 0; k < 2; ++k) v -= spa.gamma[k][i][j] * vt.l[2][k];
            for (int a = 0; a < 3; ++a) v -= spa.gamma[a][i][2] * vt.l[a][j];
            out.curvature_rate(i, j) = v;
        }
    return out;
}

KinematicState kinematic_state(const Chart& ref, const Motion& motion,
                               double u1, double u2, double t,
                               const DiffPolicy& policy, const TimePolicy& time)
{
    KinematicState s{deformation_state(ref, motion, u1, u2, t, policy), Mat2{},
                     velocity_tensors(ref, motion, u1, u2, t, policy, time),
                     rate_tensors(ref, motion, u1, u2, t, policy, time)};
    s.curvature_change = curvature_change(s.def);
    return s;
}

} // namespace shellga
