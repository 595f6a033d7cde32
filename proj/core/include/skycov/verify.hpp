// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "skycov/analysis.hpp"
#include "skycov/montecarlo.hpp"

namespace skycov {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Cross-checks run by `skycov verify`:
///  - KS distance of the interfering-beam gain vs Gamma(1, eta) at M=32 and M=4,
///  - Toeplitz recursion vs the dense matrix-exponential sum,
///  - analytic SCDP vs gain-level Monte Carlo for the AU and the GU.
VerifyReport run_verification(const SystemParams& params, const McConfig& mc,
                              const AnalysisOptions& analysis = {});

}  // namespace skycov
