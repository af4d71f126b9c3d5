// Invariant suite behind `hmono verify`.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hmono/constants.hpp"

namespace hmono {

struct CheckResult {
    std::string name;
    double value = 0.0;      // worst residual over every manifold checked
    double tolerance = 0.0;
    bool passed = false;
};

/// Algebra, manifold, monopole and Stark invariants for n = 1..n_max.
/// Requires 1 <= n_max <= 8.
std::vector<CheckResult> run_verification(int n_max, const Tolerances& tol = Tolerances::defaults());

nlohmann::ordered_json verification_report(int n_max, const std::string& profile,
                                           const std::vector<CheckResult>& checks);

}  // namespace hmono
