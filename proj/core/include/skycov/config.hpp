// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skycov/montecarlo.hpp"
#include "skycov/params.hpp"

namespace skycov {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SweepAxis { ThetaDb, HeightAerial, TiltDeg, Users, Antennas, DensityPerKm2 };

enum class SweepOutput {
  ScdpAuAnalytic,
  ScdpGuAnalytic,
  ScdpAuMcCb,
  ScdpAuMcZf,
  ScdpAuMcSingle,
  ScdpGuMcCb,
  ScdpGuMcZf,
  ScdpGuMcSingle,
  SeMc,
};

struct SweepSpec {
  SweepAxis axis = SweepAxis::ThetaDb;
  std::vector<double> values;
  std::vector<SweepOutput> outputs{SweepOutput::ScdpAuAnalytic, SweepOutput::ScdpGuAnalytic};
  McConfig mc;
};

struct LoadedConfig {
  SystemParams params;
  SweepSpec sweep;
};

/// Parses `key = value` lines (`#` starts a comment). Missing keys keep the
/// defaults of default_params(); dB, degree and per-km² keys are converted to
/// linear SI values. Throws ConfigError naming the offending key.
LoadedConfig parse_config(std::string_view text);
LoadedConfig load_config(const std::filesystem::path& path);

/// Value of the sweep axis in config units (dB, degrees, per km²).
double current_axis_value(const SystemParams& params, SweepAxis axis);

/// Copy of `base` with the sweep axis set to `value`, re-validated.
SystemParams apply_axis(const SystemParams& base, SweepAxis axis, double value);

std::string_view to_string(SweepAxis axis);
std::string_view to_string(SweepOutput output);
bool is_monte_carlo(SweepOutput output);

}  // namespace skycov
