#include "shellga/case_config.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

#include "shellga/balance.hpp"
#include "shellga/charts.hpp"
#include "shellga/errors.hpp"
#include "shellga/kernels.hpp"
#include "shellga/version.hpp"

namespace shellga {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json serialize_series(const AnalyticSeries& s)
{
    json arr = json::array();
    for (const AnalyticTerm& t : s.terms) {
        json o;
        o["c"] = t.coeff;
        if (t.p1) o["p1"] = t.p1;
        if (t.p2) o["p2"] = t.p2;
        if (t.pt) o["pt"] = t.pt;
        if (t.trig == 1) o["trig"] = "sin";
        if (t.trig == 2) o["trig"] = "cos";
        if (t.a1 != 0.0) o["a1"] = t.a1;
        if (t.a2 != 0.0) o["a2"] = t.a2;
        if (t.at != 0.0) o["at"] = t.at;
        if (t.phase != 0.0) o["phase"] = t.phase;
        arr.push_back(o);
    }
    return arr;
}

// Canonical echo of the parsed config; parsing this back reproduces the run.
ordered_json config_echo(const CaseConfig& cfg)
{
    ordered_json e;
    e["schema"] = cfg.schema;
    e["chart"] = {{"id", cfg.chart_id}, {"radius", cfg.chart_radius},
                  {"extent", cfg.chart_extent}};
    ordered_json m;
    m["id"] = cfg.motion_id;
    if (cfg.motion_id == "rigid") {
        m["axis"] = {cfg.motion_axis.x, cfg.motion_axis.y, cfg.motion_axis.z};
        m["center"] = {cfg.motion_center.x, cfg.motion_center.y, cfg.motion_center.z};
        m["translation_velocity"] = {cfg.motion_translation.x, cfg.motion_translation.y,
                                     cfg.motion_translation.z};
        m["rate"] = cfg.motion_rate;
    } else if (cfg.motion_id == "uniaxial") {
        m["eps"] = cfg.motion_eps;
        m["axis"] = {cfg.motion_axis.x, cfg.motion_axis.y, cfg.motion_axis.z};
    } else if (cfg.motion_id == "inflation") {
        m["delta"] = cfg.motion_delta;
        m["omega"] = cfg.motion_omega;
    } else if (cfg.motion_id == "displacement") {
        m["components"] = {serialize_series(cfg.motion_field.comp[0]),
                           serialize_series(cfg.motion_field.comp[1]),
                           serialize_series(cfg.motion_field.comp[2])};
    }
    e["motion"] = m;
    e["material"] = {{"young", cfg.material.young},
                     {"poisson", cfg.material.poisson},
                     {"thickness", cfg.material.thickness},
                     {"density0", cfg.material.density0}};
    e["grid"] = {{"u1", {cfg.grid_u1_min, cfg.grid_u1_max}},
                 {"u2", {cfg.grid_u2_min, cfg.grid_u2_max}},
                 {"n1", cfg.grid_n1},
                 {"n2", cfg.grid_n2}};
    e["time"] = cfg.time;
    e["steps"] = {{"h", cfg.step_h}, {"dt", cfg.step_dt}, {"stencil", cfg.step_stencil}};
    e["tolerances"] = {{"residual", cfg.tol_residual}};
    e["outputs"] = cfg.outputs;
    e["format"] = cfg.format;
    if (cfg.cylinder) {
        e["cylinder_case"] = {{"eps", cfg.cylinder->eps},
                              {"uprime",
                               {serialize_series(cfg.cylinder->shape_local[0]),
                                serialize_series(cfg.cylinder->shape_local[1]),
                                serialize_series(cfg.cylinder->shape_local[2])}}};
    }
    return e;
}

bool wants(const CaseConfig& cfg, const std::string& group)
{
    for (const std::string& o : cfg.outputs)
        if (o == group) return true;
    return false;
}

std::vector<std::string> column_names(const CaseConfig& cfg)
{
    std::vector<std::string> cols;
    auto add = [&cols](std::initializer_list<const char*> names) {
        for (const char* n : names) cols.emplace_back(n);
    };
    for (const std::string& g : cfg.outputs) {
        if (g == "geometry")
            add({"G_11", "G_12", "G_22", "B_11", "B_12", "B_22", "C_1", "C_2", "vol"});
        else if (g == "strain")
            add({"E_11", "E_12", "E_22", "lambda_1", "lambda_2", "detF"});
        else if (g == "curvature_change")
            add({"H_11", "H_12", "H_22"});
        else if (g == "rates")
            add({"Edot_11", "Edot_12", "Edot_22", "Hdot_11", "Hdot_12", "Hdot_22"});
        else if (g == "omega")
            add({"omega_13", "omega_23", "omega_12"});
        else if (g == "stress")
            add({"Stilde_11", "Stilde_12", "Stilde_22", "N_11", "N_12", "N_22", "S_11",
                 "S_12", "S_21", "S_22", "S_31", "S_32"});
        else if (g == "energy")
            add({"energy"});
        else if (g == "residuals")
            add({"res_momentum_1", "res_momentum_2", "res_momentum_3", "res_angular_13",
                 "res_angular_23", "res_angular_12", "res_energy", "res_mass"});
        else if (g == "cylinder_tables") {
            for (const char* p : {"closed", "general"})
                for (const char* t :
                     {"E0_11", "E0_12", "E0_22", "Ep_11", "Ep_12", "Ep_22", "Hp_11",
                      "Hp_12", "Hp_22", "Np_11", "Np_12", "Np_22", "S0_11", "S0_22",
                      "Sp_11", "Sp_12", "Sp_21", "Sp_22", "detF0"})
                    cols.push_back(std::string(p) + "_" + t);
            cols.emplace_back("delta_max");
        }
    }
    return cols;
}

struct PointRecord {
    int i = 0, j = 0;
    double u1 = 0.0, u2 = 0.0;
    std::map<std::string, double> values;
    std::string error;
};

void emit_tables(const CylinderTables& t, const std::string& prefix,
                 PointRecord& rec, double& delta_ref, const CylinderTables* other)
{
    auto put = [&rec, &prefix](const char* name, double v) {
        rec.values[prefix + "_" + name] = v;
    };
    put("E0_11", t.strain0(0, 0));
    put("E0_12", t.strain0(0, 1));
    put("E0_22", t.strain0(1, 1));
    put("Ep_11", t.strain1(0, 0));
    put("Ep_12", t.strain1(0, 1));
    put("Ep_22", t.strain1(1, 1));
    put("Hp_11", t.curv1(0, 0));
    put("Hp_12", t.curv1(0, 1));
    put("Hp_22", t.curv1(1, 1));
    put("Np_11", t.couple1(0, 0));
    put("Np_12", t.couple1(0, 1));
    put("Np_22", t.couple1(1, 1));
    put("S0_11", t.stress0(0, 0));
    put("S0_22", t.stress0(1, 1));
    put("Sp_11", t.stress1(0, 0));
    put("Sp_12", t.stress1(0, 1));
    put("Sp_21", t.stress1(1, 0));
    put("Sp_22", t.stress1(1, 1));
    put("detF0", t.det_f0);
    if (other) {
        delta_ref = std::max({delta_ref, max_abs(t.strain0 - other->strain0),
                              max_abs(t.strain1 - other->strain1),
                              max_abs(t.curv1 - other->curv1),
                              max_abs(t.couple1 - other->couple1),
                              max_abs(t.stress0 - other->stress0),
                              max_abs(t.stress1 - other->stress1),
                              std::abs(t.det_f0 - other->det_f0)});
    }
}

PointRecord evaluate_point(const CaseConfig& cfg, const Chart& chart,
                           const Motion& motion, int i, int j, double u1, double u2)
{
    PointRecord rec;
    rec.i = i;
    rec.j = j;
    rec.u1 = u1;
    rec.u2 = u2;

    DiffPolicy policy{DiffPolicy::Mode::automatic, cfg.step_h};
    TimePolicy tpol{cfg.step_dt};

    try {
        std::optional<DeformationState> def;
        auto need_def = [&]() -> const DeformationState& {
            if (!def) def = deformation_state(chart, motion, u1, u2, cfg.time, policy);
            return *def;
        };

        for (const std::string& g : cfg.outputs) {
            if (g == "geometry") {
                const SurfaceFrame f = frames_at(chart, u1, u2, policy);
                rec.values["G_11"] = f.metric(0, 0);
                rec.values["G_12"] = f.metric(0, 1);
                rec.values["G_22"] = f.metric(1, 1);
                rec.values["B_11"] = f.second_form(0, 0);
                rec.values["B_12"] = f.second_form(0, 1);
                rec.values["B_22"] = f.second_form(1, 1);
                rec.values["C_1"] = f.curv1;
                rec.values["C_2"] = f.curv2;
                rec.values["vol"] = f.vol;
            } else if (g == "strain") {
                const DeformationState& d = need_def();
                rec.values["E_11"] = d.strain(0, 0);
                rec.values["E_12"] = d.strain(0, 1);
                rec.values["E_22"] = d.strain(1, 1);
                rec.values["lambda_1"] = d.stretch1;
                rec.values["lambda_2"] = d.stretch2;
                rec.values["detF"] = d.det_f;
            } else if (g == "curvature_change") {
                const Mat2 h = curvature_change(need_def());
                rec.values["H_11"] = h(0, 0);
                rec.values["H_12"] = h(0, 1);
                rec.values["H_22"] = h(1, 1);
            } else if (g == "rates") {
                const RateTensors r = rate_tensors(chart, motion, u1, u2, cfg.time,
                                                   policy, tpol);
                rec.values["Edot_11"] = r.strain_rate(0, 0);
                rec.values["Edot_12"] = r.strain_rate(0, 1);
                rec.values["Edot_22"] = r.strain_rate(1, 1);
                rec.values["Hdot_11"] = r.curvature_rate(0, 0);
                rec.values["Hdot_12"] = r.curvature_rate(0, 1);
                rec.values["Hdot_22"] = r.curvature_rate(1, 1);
            } else if (g == "omega") {
                const VelocityTensors vt =
                    velocity_tensors(chart, motion, u1, u2, cfg.time, policy, tpol);
                const BivectorComponents comp =
                    bivector_components(vt.angular_velocity, need_def().spa);
                rec.values["omega_13"] = comp.cov[0];
                rec.values["omega_23"] = comp.cov[1];
                rec.values["omega_12"] = comp.cov[2];
            } else if (g == "stress" || g == "energy") {
                PointCase pc;
                pc.ref = &chart;
                pc.motion = &motion;
                pc.time = cfg.time;
                pc.material = cfg.material;
                pc.policy = policy;
                pc.timestep = tpol;
                pc.stencil_step = cfg.step_stencil;
                const AssembledPoint p = assemble_point(pc, u1, u2);
                if (g == "energy") {
                    rec.values["energy"] = p.stress.energy;
                } else {
                    rec.values["Stilde_11"] = p.stress.stress_mod(0, 0);
                    rec.values["Stilde_12"] = p.stress.stress_mod(0, 1);
                    rec.values["Stilde_22"] = p.stress.stress_mod(1, 1);
                    rec.values["N_11"] = p.stress.couple_mod(0, 0);
                    rec.values["N_12"] = p.stress.couple_mod(0, 1);
                    rec.values["N_22"] = p.stress.couple_mod(1, 1);
                    rec.values["S_11"] = p.stress.s[0][0];
                    rec.values["S_12"] = p.stress.s[0][1];
                    rec.values["S_21"] = p.stress.s[1][0];
                    rec.values["S_22"] = p.stress.s[1][1];
                    rec.values["S_31"] = p.stress.s[2][0];
                    rec.values["S_32"] = p.stress.s[2][1];
                }
            } else if (g == "residuals") {
                PointCase pc;
                pc.ref = &chart;
                pc.motion = &motion;
                pc.time = cfg.time;
                pc.material = cfg.material;
                pc.policy = policy;
                pc.timestep = tpol;
                pc.stencil_step = cfg.step_stencil;
                const PointResiduals r = evaluate_residuals(pc, u1, u2);
                rec.values["res_momentum_1"] = r.momentum.x;
                rec.values["res_momentum_2"] = r.momentum.y;
                rec.values["res_momentum_3"] = r.momentum.z;
                rec.values["res_angular_13"] = r.angular[0];
                rec.values["res_angular_23"] = r.angular[1];
                rec.values["res_angular_12"] = r.angular[2];
                rec.values["res_energy"] = r.energy;
                rec.values["res_mass"] = r.mass;
            } else if (g == "cylinder_tables") {
                CylinderCase cc;
                cc.radius = cfg.chart_radius;
                cc.eps = cfg.cylinder->eps;
                cc.material = cfg.material;
                for (int k = 0; k < 3; ++k) cc.shape_local[k] = cfg.cylinder->shape_local[k];
                const CylinderTables closed = cylinder_closed_form(cc, u1, u2);
                const CylinderTables general = cylinder_general(cc, u1, u2);
                double delta = 0.0;
                emit_tables(closed, "closed", rec, delta, &general);
                emit_tables(general, "general", rec, delta, nullptr);
                rec.values["delta_max"] = delta;
            }
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k)
        v[k] = lo + (hi - lo) * (n == 1 ? 0.0 : double(k) / double(n - 1));
    return v;
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

RunResult run_case(const CaseConfig& cfg)
{
    const Chart chart = config_chart(cfg);
    const Motion motion = config_motion(cfg, chart);

    double u1lo = cfg.grid_u1_min, u1hi = cfg.grid_u1_max;
    double u2lo = cfg.grid_u2_min, u2hi = cfg.grid_u2_max;
    if (!cfg.grid_explicit) {
        // default interior box, clear of the divergence stencils
        const double m1 = 0.12 * (chart.domain.u1max - chart.domain.u1min);
        const double m2 = 0.12 * (chart.domain.u2max - chart.domain.u2min);
        u1lo = chart.domain.u1min + m1;
        u1hi = chart.domain.u1max - m1;
        u2lo = chart.domain.u2min + m2;
        u2hi = chart.domain.u2max - m2;
    }
    const std::vector<double> grid1 = linspace(u1lo, u1hi, cfg.grid_n1);
    const std::vector<double> grid2 = linspace(u2lo, u2hi, cfg.grid_n2);

    RunResult result;
    std::vector<PointRecord> records;
    records.reserve(grid1.size() * grid2.size());
    for (size_t i = 0; i < grid1.size(); ++i)
        for (size_t j = 0; j < grid2.size(); ++j)
            records.push_back(evaluate_point(cfg, chart, motion, int(i), int(j),
                                             grid1[i], grid2[j]));

    // residual norms over the grid (ordered reduction)
    ordered_json norms;
    if (wants(cfg, "residuals")) {
        const char* keys[] = {"res_momentum_1", "res_momentum_2", "res_momentum_3",
                              "res_angular_13", "res_angular_23", "res_angular_12",
                              "res_energy", "res_mass"};
        double worst = 0.0;
        for (const char* key : keys) {
            double mx = 0.0, sum2 = 0.0;
            int n = 0;
            for (const PointRecord& r : records) {
                if (!r.error.empty()) continue;
                const auto it = r.values.find(key);
                if (it == r.values.end()) continue;
                mx = std::max(mx, std::abs(it->second));
                sum2 += it->second * it->second;
                ++n;
            }
            norms[std::string(key) + "_max"] = mx;
            norms[std::string(key) + "_rms"] = n ? std::sqrt(sum2 / n) : 0.0;
            worst = std::max(worst, mx);
        }
        norms["tolerance"] = cfg.tol_residual;
        result.residuals_ok = worst <= cfg.tol_residual;
    }

    const std::vector<std::string> cols = column_names(cfg);

    ordered_json doc;
    doc["schema"] = "shellga-result/1";
    doc["provenance"] = {{"tool", "shellga"},
                         {"version", SHELLGA_VERSION},
                         {"kernel", kernels::name(kernels::active())},
                         {"config", config_echo(cfg)}};
    doc["grid"] = {{"u1", grid1}, {"u2", grid2}};
    ordered_json points = ordered_json::array();
    for (const PointRecord& r : records) {
        ordered_json p;
        p["i"] = r.i;
        p["j"] = r.j;
        p["u1"] = r.u1;
        p["u2"] = r.u2;
        if (!r.error.empty()) {
            p["error"] = r.error;
            result.had_point_errors = true;
        } else {
            for (const std::string& c : cols) {
                const auto it = r.values.find(c);
                if (it != r.values.end()) p[c] = it->second;
            }
        }
        points.push_back(p);
    }
    doc["points"] = points;
    if (wants(cfg, "residuals")) {
        doc["residual_norms"] = norms;
        doc["residuals_ok"] = result.residuals_ok;
    }
    result.document = doc;

    // flat CSV, one row per grid point
    std::string csv = "i,j,u1,u2";
    for (const std::string& c : cols) csv += "," + c;
    csv += ",point_error\n";
    for (const PointRecord& r : records) {
        csv += std::to_string(r.i) + "," + std::to_string(r.j) + "," +
               format_double(r.u1) + "," + format_double(r.u2);
        for (const std::string& c : cols) {
            const auto it = r.values.find(c);
            csv += ",";
            if (r.error.empty() && it != r.values.end()) csv += format_double(it->second);
        }
        csv += r.error.empty() ? ",0\n" : ",1\n";
    }
    result.csv = csv;
    return result;
}

} // namespace shellga
