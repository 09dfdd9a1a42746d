#pragma once

#include <string>
#include <vector>

namespace chronocalc::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double value = 0.0;      // worst measured quantity
    double tolerance = 0.0;  // the pinned gate
    double runtime_ms = 0.0;
    std::string detail;
};

/// Criteria 1..12 (13, the full-suite determinism/runtime gate, is driven
/// from the CLI by the acceptance harness).
CriterionResult run_criterion(int id);

/// Suite bundles reachable from the CLI.
/// gauge={1,2}, trotter={3,8}, dyson={4,5,6,7,12}, pathsum={9,10}, kernels={11},
/// all = union.
std::vector<int> suite_criteria(const std::string& name);

}  // namespace chronocalc::acceptance
