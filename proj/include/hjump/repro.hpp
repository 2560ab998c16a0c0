#ifndef HJUMP_REPRO_HPP
#define HJUMP_REPRO_HPP

#include <string>
#include <vector>

#include "hjump/frankl_rodl.hpp"
#include "hjump/pattern.hpp"

namespace hjump {

// A built-in regression target: a pattern, a pivot, and the density its
// certificate is expected to establish.
struct ReproCase {
    std::string name;
    RPattern pattern;
    Vertex pivot = 1;
    double expected_alpha = 0.0;
    double expected_lambda = 0.0;  // expected_alpha / r!
    double tolerance = 1e-6;
    std::string source;
};

std::vector<ReproCase> builtin_repro_cases();

struct ReproOutcome {
    std::string name;
    std::string source;
    double expected_alpha = 0.0;
    double measured_alpha = 0.0;
    double abs_error = 0.0;
    bool certificate_pass = false;
    bool pass = false;  // certificate passed and alpha matched
    CertificateReport report;
};

struct ReproSuiteResult {
    std::vector<ReproOutcome> outcomes;
    bool all_pass = true;
};

ReproSuiteResult run_repro_suite(const SolverConfig& cfg = {});

}  // namespace hjump

#endif
