#include "shellga/case_config.hpp"

#include <fstream>
#include <set>

#include "shellga/charts.hpp"
#include "shellga/errors.hpp"
#include "shellga/motions.hpp"

namespace shellga {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& context)
{
    if (!obj.is_object())
        throw ConfigInvalid(context + " must be a JSON object");
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw ConfigInvalid("unknown key '" + item.key() + "' in " + context);
}

double get_number(const json& obj, const std::string& key, double fallback)
{
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number())
        throw ConfigInvalid("'" + key + "' must be a number");
    return obj[key].get<double>();
}

Vec3 get_vec3(const json& obj, const std::string& key, const Vec3& fallback)
{
    if (!obj.contains(key)) return fallback;
    const json& v = obj[key];
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
        !v[2].is_number())
        throw ConfigInvalid("'" + key + "' must be an array of three numbers");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

const std::set<std::string> kOutputNames = {
    "geometry", "strain", "curvature_change", "rates", "omega",
    "stress", "energy", "residuals", "cylinder_tables"};

} // namespace

AnalyticSeries parse_term_series(const json& arr, const std::string& context)
{
    if (!arr.is_array())
        throw ConfigInvalid(context + " must be an array of term objects");
    AnalyticSeries series;
    for (const json& t : arr) {
        check_keys(t, {"c", "p1", "p2", "pt", "trig", "a1", "a2", "at", "phase"},
                   context + " term");
        if (!t.contains("c"))
            throw ConfigInvalid(context + " term needs a coefficient 'c'");
        AnalyticTerm term;
        term.coeff = get_number(t, "c", 0.0);
        term.p1 = static_cast<int>(get_number(t, "p1", 0));
        term.p2 = static_cast<int>(get_number(t, "p2", 0));
        term.pt = static_cast<int>(get_number(t, "pt", 0));
        if (t.contains("trig")) {
            const std::string trig = t["trig"].get<std::string>();
            if (trig == "sin") term.trig = 1;
            else if (trig == "cos") term.trig = 2;
            else throw ConfigInvalid(context + " trig must be 'sin' or 'cos'");
        }
        term.a1 = get_number(t, "a1", 0.0);
        term.a2 = get_number(t, "a2", 0.0);
        term.at = get_number(t, "at", 0.0);
        term.phase = get_number(t, "phase", 0.0);
        series.terms.push_back(term);
    }
    return series;
}

CaseConfig parse_case_config(const json& doc)
{
    check_keys(doc, {"schema", "chart", "motion", "material", "grid", "time", "steps",
                     "tolerances", "outputs", "format", "cylinder_case"},
               "case config");

    CaseConfig cfg;
    if (!doc.contains("schema") || !doc["schema"].is_string())
        throw ConfigInvalid("case config needs a string 'schema' field");
    cfg.schema = doc["schema"].get<std::string>();
    if (cfg.schema != "shellga-case/1")
        throw ConfigInvalid("unsupported schema '" + cfg.schema + "'");

    if (!doc.contains("chart")) throw ConfigInvalid("case config needs a 'chart'");
    {
        const json& c = doc["chart"];
        check_keys(c, {"id", "radius", "extent"}, "chart");
        if (!c.contains("id")) throw ConfigInvalid("chart needs an 'id'");
        cfg.chart_id = c["id"].get<std::string>();
        if (cfg.chart_id != "plane" && cfg.chart_id != "cylinder" &&
            cfg.chart_id != "sphere")
            throw ConfigInvalid("unknown chart id '" + cfg.chart_id + "'");
        cfg.chart_radius = get_number(c, "radius", 1.0);
        cfg.chart_extent = get_number(c, "extent", 3.0);
        if (cfg.chart_id != "plane" && !(cfg.chart_radius > 0.0))
            throw ConfigInvalid("chart radius must be positive");
    }

    {
        json m = doc.contains("motion") ? doc["motion"] : json{{"id", "identity"}};
        check_keys(m, {"id", "axis", "center", "translation_velocity", "rate", "eps",
                       "delta", "omega", "components"},
                   "motion");
        cfg.motion_id = m.contains("id") ? m["id"].get<std::string>() : "identity";
        cfg.motion_axis = get_vec3(m, "axis", {1.0, 0.0, 0.0});
        cfg.motion_center = get_vec3(m, "center", {});
        cfg.motion_translation = get_vec3(m, "translation_velocity", {});
        cfg.motion_rate = get_number(m, "rate", 0.0);
        cfg.motion_eps = get_number(m, "eps", 0.0);
        cfg.motion_delta = get_number(m, "delta", 0.0);
        cfg.motion_omega = get_number(m, "omega", 0.0);
        if (cfg.motion_id == "displacement") {
            if (!m.contains("components") || !m["components"].is_array() ||
                m["components"].size() != 3)
                throw ConfigInvalid(
                    "displacement motion needs 'components': three term arrays");
            for (int k = 0; k < 3; ++k)
                cfg.motion_field.comp[k] =
                    parse_term_series(m["components"][k], "motion component");
        } else if (cfg.motion_id != "identity" && cfg.motion_id != "rigid" &&
                   cfg.motion_id != "uniaxial" && cfg.motion_id != "inflation") {
            throw ConfigInvalid("unknown motion id '" + cfg.motion_id + "'");
        }
        if (cfg.motion_id == "inflation" && cfg.chart_id != "cylinder")
            throw ConfigInvalid("inflation motion requires the cylinder chart");
    }

    if (doc.contains("material")) {
        const json& m = doc["material"];
        check_keys(m, {"young", "poisson", "thickness", "density0"}, "material");
        cfg.material.young = get_number(m, "young", cfg.material.young);
        cfg.material.poisson = get_number(m, "poisson", cfg.material.poisson);
        cfg.material.thickness = get_number(m, "thickness", cfg.material.thickness);
        cfg.material.density0 = get_number(m, "density0", cfg.material.density0);
        cfg.material.validate();
    }

    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        check_keys(g, {"u1", "u2", "n1", "n2"}, "grid");
        auto range = [&](const char* key, double& lo, double& hi) {
            if (!g.contains(key)) throw ConfigInvalid("grid needs ranges 'u1' and 'u2'");
            const json& r = g[key];
            if (!r.is_array() || r.size() != 2)
                throw ConfigInvalid("grid range must be [lo, hi]");
            lo = r[0].get<double>();
            hi = r[1].get<double>();
            if (!(hi > lo)) throw ConfigInvalid("grid range must be increasing");
        };
        range("u1", cfg.grid_u1_min, cfg.grid_u1_max);
        range("u2", cfg.grid_u2_min, cfg.grid_u2_max);
        cfg.grid_n1 = static_cast<int>(get_number(g, "n1", 2));
        cfg.grid_n2 = static_cast<int>(get_number(g, "n2", 2));
        if (cfg.grid_n1 < 2 || cfg.grid_n2 < 2)
            throw ConfigInvalid("grid counts must be at least 2 per axis");
        cfg.grid_explicit = true;
    } else {
        cfg.grid_n1 = cfg.grid_n2 = 3;
    }

    cfg.time = get_number(doc, "time", 0.0);

    if (doc.contains("steps")) {
        const json& s = doc["steps"];
        check_keys(s, {"h", "dt", "stencil"}, "steps");
        cfg.step_h = get_number(s, "h", cfg.step_h);
        cfg.step_dt = get_number(s, "dt", cfg.step_dt);
        cfg.step_stencil = get_number(s, "stencil", cfg.step_stencil);
        if (!(cfg.step_h > 0.0) || !(cfg.step_dt > 0.0) || !(cfg.step_stencil > 0.0))
            throw ConfigInvalid("steps must be positive");
    }

    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        check_keys(t, {"residual"}, "tolerances");
        cfg.tol_residual = get_number(t, "residual", cfg.tol_residual);
        if (!(cfg.tol_residual > 0.0)) throw ConfigInvalid("tolerances must be positive");
    }

    if (doc.contains("outputs")) {
        if (!doc["outputs"].is_array())
            throw ConfigInvalid("'outputs' must be an array of field-group names");
        for (const json& o : doc["outputs"]) {
            const std::string name = o.get<std::string>();
            if (!kOutputNames.count(name))
                throw ConfigInvalid("unknown output '" + name + "'");
            cfg.outputs.push_back(name);
        }
    } else {
        cfg.outputs = {"geometry", "strain"};
    }

    if (doc.contains("format")) {
        cfg.format = doc["format"].get<std::string>();
        if (cfg.format != "json" && cfg.format != "csv")
            throw ConfigInvalid("format must be 'json' or 'csv'");
    }

    if (doc.contains("cylinder_case")) {
        if (cfg.chart_id != "cylinder")
            throw ConfigInvalid("'cylinder_case' requires the cylinder chart");
        const json& c = doc["cylinder_case"];
        check_keys(c, {"eps", "uprime"}, "cylinder_case");
        CaseConfig::CylinderBlock blk;
        blk.eps = get_number(c, "eps", 0.0);
        if (!c.contains("uprime") || !c["uprime"].is_array() || c["uprime"].size() != 3)
            throw ConfigInvalid("cylinder_case needs 'uprime': three term arrays");
        for (int k = 0; k < 3; ++k)
            blk.shape_local[k] = parse_term_series(c["uprime"][k], "uprime component");
        cfg.cylinder = blk;
    }

    for (const std::string& o : cfg.outputs)
        if (o == "cylinder_tables" && !cfg.cylinder)
            throw ConfigInvalid("output 'cylinder_tables' needs a 'cylinder_case' block");

    return cfg;
}

CaseConfig load_case_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigInvalid("config parse error: " + std::string(e.what()));
    }
    return parse_case_config(doc);
}

Chart config_chart(const CaseConfig& cfg)
{
    if (cfg.chart_id == "plane") return make_plane(cfg.chart_extent);
    if (cfg.chart_id == "cylinder") return make_cylinder(cfg.chart_radius, cfg.chart_extent);
    return make_sphere(cfg.chart_radius);
}

Motion config_motion(const CaseConfig& cfg, const Chart& ref)
{
    if (cfg.motion_id == "identity") return identity_motion(ref);
    if (cfg.motion_id == "rigid")
        return rigid_motion(ref, cfg.motion_axis, cfg.motion_rate, cfg.motion_center,
                            cfg.motion_translation);
    if (cfg.motion_id == "uniaxial")
        return uniaxial_motion(ref, cfg.motion_eps, cfg.motion_axis);
    if (cfg.motion_id == "inflation")
        return cylinder_inflation_motion(cfg.chart_radius, cfg.motion_delta,
                                         cfg.motion_omega);
    return analytic_displacement_motion(ref, cfg.motion_field, "displacement");
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw IoError("failed writing output file '" + path + "'");
}

} // namespace shellga
