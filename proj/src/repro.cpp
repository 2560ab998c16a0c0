#include "hjump/repro.hpp"

#include <cmath>

namespace hjump {

namespace {

double factorial_d(int r) {
    double f = 1.0;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

ReproCase make_case(std::string name, RPattern p, Vertex pivot, double alpha,
                    std::string source) {
    ReproCase c;
    c.name = std::move(name);
    c.expected_lambda = alpha / factorial_d(p.uniformity());
    c.pattern = std::move(p);
    c.pivot = pivot;
    c.expected_alpha = alpha;
    c.source = std::move(source);
    return c;
}

// Every size-3 multiset on [k] except the k diagonal ones vvv.
RPattern offdiagonal_pattern(int k) {
    std::vector<std::vector<Vertex>> edges;
    for (Vertex a = 1; a <= k; ++a)
        for (Vertex b = a; b <= k; ++b)
            for (Vertex c = b; c <= k; ++c)
                if (!(a == b && b == c)) edges.push_back({a, b, c});
    return make_pattern(3, k, edges);
}

}  // namespace

std::vector<ReproCase> builtin_repro_cases() {
    std::vector<ReproCase> cases;
    cases.push_back(make_case(
        "r3-minimal",
        make_pattern(3, 4, {{1, 2, 2}, {1, 3, 3}, {1, 4, 4}, {1, 2, 3}, {1, 3, 4}, {2, 3, 4}}),
        2, 6.0 / 121.0 * (5.0 * std::sqrt(5.0) - 2.0), "minimal r=3 certificate"));
    cases.push_back(make_case("r4-minimal", make_pattern(4, 3, {{1, 2, 3, 3}}), 3, 3.0 / 16.0,
                              "minimal r=4 certificate"));
    cases.push_back(make_case("yan-peng",
                              make_pattern(3, 3, {{1, 1, 2}, {1, 2, 3}, {2, 2, 3}}), 1,
                              12.0 / 25.0, "Yan and Peng"));
    cases.push_back(make_case(
        "fprt", make_pattern(3, 3, {{1, 1, 2}, {1, 3, 3}, {1, 2, 3}, {2, 2, 3}}), 1, 5.0 / 9.0,
        "Frankl, Peng, Rodl and Talbot"));
    cases.push_back(make_case("fr-k7", offdiagonal_pattern(7), 1, 48.0 / 49.0,
                              "Frankl and Rodl, k=7"));
    return cases;
}

ReproSuiteResult run_repro_suite(const SolverConfig& cfg) {
    ReproSuiteResult suite;
    for (const ReproCase& c : builtin_repro_cases()) {
        ReproOutcome out;
        out.name = c.name;
        out.source = c.source;
        out.expected_alpha = c.expected_alpha;
        out.report = check_nonjump_certificate(c.pattern, c.pivot, cfg, c.tolerance);
        out.measured_alpha = out.report.alpha;
        out.abs_error = std::abs(out.measured_alpha - c.expected_alpha);
        out.certificate_pass = out.report.pass;
        out.pass = out.certificate_pass && out.abs_error <= c.tolerance;
        suite.all_pass = suite.all_pass && out.pass;
        suite.outcomes.push_back(std::move(out));
    }
    return suite;
}

}  // namespace hjump
