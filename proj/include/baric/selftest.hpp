#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "baric/algebra.hpp"

namespace baric {

/// One verification check: a named reproducible computation with a
/// wall-clock budget.  pass is true only when the computed facts hold
/// AND the run stayed within budget.
struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;
};

/// Runs the full built-in verification suite: the bundled example
/// algebras with their exact solution sets, the solver cross-check on
/// seeded random algebras, the uniqueness properties, the
/// transition-matrix criterion, the coset census, and the row-sum
/// constructor and stochastic-group checks.  Deterministic in seed; the
/// verdicts do not depend on it.
std::vector<CheckResult> run_builtin_checks(std::uint64_t seed = 20'25);

}  // namespace baric
