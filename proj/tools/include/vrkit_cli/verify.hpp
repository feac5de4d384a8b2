#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vrkit/cx_geom.hpp"
#include "vrkit_cli/json_io.hpp"

namespace vrkit::cli {

struct verify_options {
    bool z0_set = false;
    cx z0;             // suite default used when not set
    long n = 1000;     // sample count
    uint64_t seed = 42;
    bool tol_set = false;
    double tol = 0.0;  // suite default used when not set
};

struct verify_failure {
    std::string input;    // what was sampled/checked
    cx value;             // offending value
    std::string verdict;  // what went wrong
    double margin = 0.0;  // by how much
};

struct verify_report {
    std::string suite;
    long samples_run = 0;
    std::vector<verify_failure> failures;
    double max_violation = 0.0;
    double wall_time_s = 0.0;
};

// runs one of: hp-containment, hp-inverse, disc-szapiel, disc-herglotz,
// curve-identities, nesting, f0; throws out_of_range for unknown names
verify_report run_suite(const std::string& suite, const verify_options& opt);

json report_to_json(const verify_report& report);

}  // namespace vrkit::cli
