#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lw {

struct VerifyOptions {
    long max_size = 5;   // size cap for partition sweeps
    double tol = 1e-9;   // numeric tolerance
    int jobs = 1;        // worker threads for partition fan-out
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    bool conjectural = false;  // a failing conjectural suite warns, never gates
    long checks = 0;
    std::string detail;        // first counterexample, or a short summary
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt);

}  // namespace lw
