#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace braidlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool expected_failure = false; // known unattainable; does not count against the exit code
    std::string detail;
    double seconds = 0; // wall time, kept out of the JSON
};

struct AcceptanceOptions {
    uint64_t seed = 12345;   // random rational lambdas of criterion 10
    bool determinism = true; // criterion 12 repeats criteria 1-11
    // called after each criterion, for progress output
    std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_criteria(const AcceptanceOptions& opt); // 1..11
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt); // 1..12

// Timing-free report: {"schema_version", "criteria": [{id, name, status, detail}], "unexpected_failures"}.
std::string acceptance_json(const std::vector<CriterionResult>& results);
std::string acceptance_table(const std::vector<CriterionResult>& results);
int unexpected_failures(const std::vector<CriterionResult>& results);

} // namespace braidlab
