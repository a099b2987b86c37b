#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shellga/balance.hpp"
#include "shellga/linearized.hpp"

namespace shellga {

struct VerifyOptions {
    int samples = 100;      // random points per chart
    double tol_scale = 1.0; // multiplies every absolute tolerance
    unsigned seed = 20240; // fixed seed: reruns are byte-identical
};

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note; // "max", "ratio", ...
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

SuiteReport verify_geometry(const VerifyOptions& opt = {});
SuiteReport verify_kinematics(const VerifyOptions& opt = {});
SuiteReport verify_stress(const VerifyOptions& opt = {});
SuiteReport verify_balance(const VerifyOptions& opt = {});
SuiteReport verify_linearized(const VerifyOptions& opt = {});

// suite in {geometry, kinematics, stress, balance, linearized, all};
// throws UnknownSuite otherwise.
std::vector<SuiteReport> verify_suites(const std::string& suite,
                                       const VerifyOptions& opt = {});

void print_report(const SuiteReport& report, std::ostream& os);

} // namespace shellga
