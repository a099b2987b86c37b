#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "shellga/case_config.hpp"
#include "shellga/errors.hpp"
#include "shellga/verify.hpp"
#include "shellga/version.hpp"

namespace {

using namespace shellga;

// exit codes: 0 pass, 1 verification failure, 2 usage/config error, 3 I/O
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string infer_format(const std::string& path, const std::string& fallback)
{
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return "csv";
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return "json";
    return fallback;
}

int cmd_run(const std::string& config_path, const std::string& output_path)
{
    CaseConfig cfg = load_case_config(config_path);
    const RunResult result = run_case(cfg);

    const std::string format =
        output_path.empty() ? cfg.format : infer_format(output_path, cfg.format);
    const std::string text =
        format == "csv" ? result.csv : result.document.dump(2) + "\n";
    if (output_path.empty())
        std::cout << text;
    else
        write_text_file(output_path, text);

    return result.residuals_ok ? kExitOk : kExitVerifyFail;
}

int cmd_verify(const std::string& suite, double tol_scale, int samples)
{
    VerifyOptions opt;
    opt.tol_scale = tol_scale;
    opt.samples = samples;
    const auto reports = verify_suites(suite, opt);
    bool ok = true;
    int checks = 0;
    for (const SuiteReport& rep : reports) {
        print_report(rep, std::cout);
        ok = ok && rep.all_pass();
        checks += static_cast<int>(rep.checks.size());
    }
    std::cout << (ok ? "OK" : "FAILED") << " (" << checks << " checks)\n";
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_cylinder(double radius, double eps, const std::string& uprime_path,
                 const MaterialParams& mat, int grid_n, double tol,
                 const std::string& output_path)
{
    std::ifstream in(uprime_path);
    if (!in) throw IoError("cannot open coefficient file '" + uprime_path + "'");
    nlohmann::json shape;
    try {
        in >> shape;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigInvalid("coefficient file parse error: " + std::string(e.what()));
    }

    nlohmann::json doc;
    doc["schema"] = "shellga-case/1";
    doc["chart"] = {{"id", "cylinder"}, {"radius", radius}};
    doc["motion"] = {{"id", "uniaxial"}, {"eps", eps}};
    doc["material"] = {{"young", mat.young},
                       {"poisson", mat.poisson},
                       {"thickness", mat.thickness},
                       {"density0", mat.density0}};
    doc["grid"] = {{"u1", {-0.8 * 3.0, 0.8 * 3.0}},
                   {"u2", {0.3 * radius, 1.7 * radius}},
                   {"n1", grid_n},
                   {"n2", grid_n}};
    doc["outputs"] = {"cylinder_tables"};
    doc["cylinder_case"] = {{"eps", eps}, {"uprime", shape}};

    const CaseConfig cfg = parse_case_config(doc);
    const RunResult result = run_case(cfg);

    double worst = 0.0;
    for (const auto& p : result.document["points"]) {
        if (p.contains("error")) return kExitVerifyFail;
        worst = std::max(worst, p["delta_max"].get<double>());
    }

    nlohmann::ordered_json out = result.document;
    out["delta_max"] = worst;
    out["tolerance"] = tol;
    out["verdict"] = worst <= tol ? "pass" : "fail";
    const std::string text = out.dump(2) + "\n";
    if (output_path.empty())
        std::cout << text;
    else
        write_text_file(output_path, text);
    return worst <= tol ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"geometric-algebra shell mechanics evaluator"};
    app.set_version_flag("--version", SHELLGA_VERSION);
    app.require_subcommand(1);

    std::string config_path, output_path;
    CLI::App* run = app.add_subcommand("run", "evaluate a case over a coordinate grid");
    run->add_option("config", config_path, "case configuration (JSON)")->required();
    run->add_option("-o,--output", output_path, "output file (.json or .csv)");

    std::string suite;
    double tol_scale = 1.0;
    int samples = 100;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "geometry | kinematics | stress | balance | linearized | all")
        ->required();
    verify->add_option("--tol", tol_scale, "scale applied to every absolute tolerance");
    verify->add_option("--grid", samples, "random samples per chart");

    double radius = 1.0, eps = 0.0, cyl_tol = 1e-8;
    int grid_n = 4;
    MaterialParams mat;
    std::string uprime_path, cyl_output;
    CLI::App* cyl = app.add_subcommand(
        "cylinder", "pre-strained cylinder: closed form vs general pipeline");
    cyl->add_option("--R", radius, "cylinder radius")->required();
    cyl->add_option("--eps", eps, "background axial strain")->required();
    cyl->add_option("--uprime", uprime_path,
                    "JSON file: three term arrays for the local components")
        ->required();
    cyl->add_option("--young", mat.young, "Young's modulus");
    cyl->add_option("--nu", mat.poisson, "Poisson's ratio");
    cyl->add_option("--thickness", mat.thickness, "shell thickness");
    cyl->add_option("--grid", grid_n, "grid points per axis");
    cyl->add_option("--tol", cyl_tol, "closed-form vs general tolerance");
    cyl->add_option("-o,--output", cyl_output, "output file (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(config_path, output_path);
        if (verify->parsed()) return cmd_verify(suite, tol_scale, samples);
        if (cyl->parsed()) {
            mat.validate();
            return cmd_cylinder(radius, eps, uprime_path, mat, grid_n, cyl_tol,
                                cyl_output);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ConfigInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
