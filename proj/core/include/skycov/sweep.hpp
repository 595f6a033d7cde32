// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "skycov/analysis.hpp"
#include "skycov/config.hpp"

namespace skycov {

struct SweepOptions {
  unsigned threads = 1;
  bool timing = false;  // adds a wall_s column; breaks bit-stability of the CSV
  AnalysisOptions analysis;
};

/// CSV with one row per axis value, in the order given. Header:
/// <axis>, then each output (Monte Carlo outputs followed by <output>_hw),
/// optionally wall_s, and finally status ("ok" or the error message).
std::string run_sweep(const SystemParams& base, const SweepSpec& spec,
                      const SweepOptions& options = {});

/// Shortest round-trip decimal representation, independent of locale.
std::string format_number(double value);

}  // namespace skycov
