#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "shellga/analytic.hpp"
#include "shellga/linearized.hpp"
#include "shellga/stress.hpp"

namespace shellga {

// Parsed, validated case description.  Unknown keys are rejected so typos in
// tensor names fail loudly.
struct CaseConfig {
    std::string schema;

    std::string chart_id;      // plane | cylinder | sphere
    double chart_radius = 1.0; // cylinder/sphere
    double chart_extent = 3.0; // plane half-extent / cylinder axial half-extent

    std::string motion_id; // identity | rigid | uniaxial | inflation | displacement
    Vec3 motion_axis{1.0, 0.0, 0.0};
    Vec3 motion_center{};
    Vec3 motion_translation{};
    double motion_rate = 0.0;
    double motion_eps = 0.0;
    double motion_delta = 0.0;
    double motion_omega = 0.0;
    AnalyticVecField motion_field; // displacement motion

    MaterialParams material;

    double grid_u1_min = 0.0, grid_u1_max = 1.0;
    double grid_u2_min = 0.0, grid_u2_max = 1.0;
    int grid_n1 = 2, grid_n2 = 2;
    bool grid_explicit = false; // false: use the chart's default interior box

    double time = 0.0;
    double step_h = 1e-5;       // coordinate differentiation step
    double step_dt = 1e-5;      // time differentiation step
    double step_stencil = 1e-3; // divergence stencil step
    double tol_residual = 1e-8;

    std::vector<std::string> outputs;
    std::string format = "json"; // json | csv

    // optional pre-strained cylinder comparison block
    struct CylinderBlock {
        double eps = 0.0;
        AnalyticSeries shape_local[3];
    };
    std::optional<CylinderBlock> cylinder;
};

// Throws ConfigInvalid on malformed input.
CaseConfig parse_case_config(const nlohmann::json& doc);
CaseConfig load_case_config(const std::string& path); // throws IoError too

AnalyticSeries parse_term_series(const nlohmann::json& arr, const std::string& context);

// Instantiate the chart and motion described by a config.
Chart config_chart(const CaseConfig& cfg);
Motion config_motion(const CaseConfig& cfg, const Chart& ref);

struct RunResult {
    nlohmann::ordered_json document;
    std::string csv;
    bool residuals_ok = true;
    bool had_point_errors = false;
};

RunResult run_case(const CaseConfig& cfg);

void write_text_file(const std::string& path, const std::string& text); // throws IoError

} // namespace shellga
