// SPDX-License-Identifier: Apache-2.0
#include "skycov/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace skycov {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::string_view key, const std::string& why) {
  throw ConfigError("config key '" + std::string(key) + "': " + why);
}

double parse_double(std::string_view key, std::string_view token) {
  double v = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    fail(key, "'" + std::string(token) + "' is not a number");
  return v;
}

long parse_integer(std::string_view key, std::string_view token) {
  const double v = parse_double(key, token);
  if (v != std::floor(v)) fail(key, "'" + std::string(token) + "' must be an integer");
  return static_cast<long>(v);
}

// Splits "<number> [unit]" and checks the unit against the accepted spellings.
std::string_view split_unit(std::string_view key, std::string_view value,
                            std::initializer_list<std::string_view> units,
                            std::string_view* unit_out = nullptr) {
  const auto space = value.find_first_of(" \t");
  if (space == std::string_view::npos) {
    if (unit_out) *unit_out = {};
    return value;
  }
  const std::string_view unit = trim(value.substr(space));
  if (std::find(units.begin(), units.end(), unit) == units.end())
    fail(key, "invalid unit '" + std::string(unit) + "'");
  if (unit_out) *unit_out = unit;
  return trim(value.substr(0, space));
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

using Setter = std::function<void(LoadedConfig&, std::string_view key, std::string_view value)>;

Setter real(double SystemParams::*field, std::initializer_list<std::string_view> units = {}) {
  return [field, units](LoadedConfig& c, std::string_view key, std::string_view value) {
    c.params.*field = parse_double(key, split_unit(key, value, units));
  };
}

Setter length(double SystemParams::*field) {
  return [field](LoadedConfig& c, std::string_view key, std::string_view value) {
    std::string_view unit;
    const double v = parse_double(key, split_unit(key, value, {"m", "km"}, &unit));
    c.params.*field = unit == "km" ? v * 1000.0 : v;
  };
}

Setter integer(int SystemParams::*field) {
  return [field](LoadedConfig& c, std::string_view key, std::string_view value) {
    c.params.*field = static_cast<int>(parse_integer(key, split_unit(key, value, {})));
  };
}

Setter decibel(double SystemParams::*field) {
  return [field](LoadedConfig& c, std::string_view key, std::string_view value) {
    c.params.*field = db_to_linear(parse_double(key, split_unit(key, value, {"dB"})));
  };
}

Setter degrees(double SystemParams::*field) {
  return [field](LoadedConfig& c, std::string_view key, std::string_view value) {
    c.params.*field = deg_to_rad(parse_double(key, split_unit(key, value, {"deg"})));
  };
}

Setter per_km2(double SystemParams::*field) {
  return [field](LoadedConfig& c, std::string_view key, std::string_view value) {
    c.params.*field = parse_double(key, split_unit(key, value, {"/km2", "km^-2"})) * 1e-6;
  };
}

SweepAxis parse_axis(std::string_view key, std::string_view v) {
  for (auto axis : {SweepAxis::ThetaDb, SweepAxis::HeightAerial, SweepAxis::TiltDeg,
                    SweepAxis::Users, SweepAxis::Antennas, SweepAxis::DensityPerKm2}) {
    if (to_string(axis) == v) return axis;
  }
  fail(key, "unknown sweep axis '" + std::string(v) + "'");
}

SweepOutput parse_output(std::string_view key, std::string_view v) {
  for (int i = 0; i <= static_cast<int>(SweepOutput::SeMc); ++i) {
    const auto out = static_cast<SweepOutput>(i);
    if (to_string(out) == v) return out;
  }
  fail(key, "unknown sweep output '" + std::string(v) + "'");
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"lambda_per_km2", per_km2(&SystemParams::lambda_bs)},
      {"h_bs", length(&SystemParams::h_bs)},
      {"h_g", length(&SystemParams::h_g)},
      {"h_d", length(&SystemParams::h_d)},
      {"M", integer(&SystemParams::M)},
      {"K", integer(&SystemParams::K)},
      {"P_t", real(&SystemParams::P_t, {"W"})},
      {"theta_db", decibel(&SystemParams::theta)},
      {"sigma2", real(&SystemParams::sigma2)},
      {"eta", real(&SystemParams::eta)},
      {"m_l", integer(&SystemParams::m_l)},
      {"m_n", integer(&SystemParams::m_n)},
      {"alpha_l", real(&SystemParams::alpha_l)},
      {"alpha_n", real(&SystemParams::alpha_n)},
      {"A_l_db", decibel(&SystemParams::A_l)},
      {"A_n_db", decibel(&SystemParams::A_n)},
      {"G_m_db", decibel(&SystemParams::G_m)},
      {"G_s_db", decibel(&SystemParams::G_s)},
      {"theta_t_deg", degrees(&SystemParams::theta_t)},
      {"theta_b_deg", degrees(&SystemParams::theta_b)},
      {"a", real(&SystemParams::a)},
      {"nu_per_km2", per_km2(&SystemParams::nu_b)},
      {"c", length(&SystemParams::c)},
      {"sweep.axis",
       [](LoadedConfig& c, std::string_view k, std::string_view v) {
         c.sweep.axis = parse_axis(k, v);
       }},
      {"sweep.values",
       [](LoadedConfig& c, std::string_view k, std::string_view v) {
         c.sweep.values.clear();
         for (auto item : split_list(v)) c.sweep.values.push_back(parse_double(k, item));
         if (c.sweep.values.empty()) fail(k, "needs at least one value");
       }},
      {"sweep.outputs",
       [](LoadedConfig& c, std::string_view k, std::string_view v) {
         c.sweep.outputs.clear();
         for (auto item : split_list(v)) c.sweep.outputs.push_back(parse_output(k, item));
         if (c.sweep.outputs.empty()) fail(k, "needs at least one output");
       }},
      {"mc.n_deployments",
       [](LoadedConfig& c, std::string_view k, std::string_view v) {
         c.sweep.mc.n_deployments = parse_integer(k, v);
       }},
      {"mc.n_fading",
       [](LoadedConfig& c, std::string_view k, std::string_view v) {
         c.sweep.mc.n_fading_per_deployment = static_cast<int>(parse_integer(k, v));
       }},
      {"mc.fidelity",
       [](LoadedConfig& c, std::string_view k, std::string_view v) {
         if (v == "gain_level") c.sweep.mc.fidelity = Fidelity::GainLevel;
         else if (v == "full_physical") c.sweep.mc.fidelity = Fidelity::FullPhysical;
         else fail(k, "expected gain_level or full_physical");
       }},
      {"mc.seed",
       [](LoadedConfig& c, std::string_view k, std::string_view v) {
         std::uint64_t seed = 0;
         const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
         if (ec != std::errc() || ptr != v.data() + v.size()) fail(k, "expected an unsigned integer");
         c.sweep.mc.seed = seed;
       }},
      {"mc.window_tail_mass",
       [](LoadedConfig& c, std::string_view k, std::string_view v) {
         c.sweep.mc.window_tail_mass = parse_double(k, v);
       }},
  };
  return table;
}

void validate_sweep(const LoadedConfig& c) {
  const auto& v = c.sweep.values;
  const bool up = std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  const bool down = std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
  if (!up && !down) fail("sweep.values", "values must be strictly ordered");
  for (double x : v) {
    try {
      (void)apply_axis(c.params, c.sweep.axis, x);
    } catch (const std::invalid_argument& e) {
      fail("sweep.values", e.what());
    }
  }
  try {
    c.sweep.mc.validate();
  } catch (const std::invalid_argument& e) {
    fail("mc", e.what());
  }
}

}  // namespace

LoadedConfig parse_config(std::string_view text) {
  LoadedConfig c;
  c.params = default_params();
  bool have_values = false;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) fail(key, "unknown key");
    if (value.empty()) fail(key, "missing value");
    it->second(c, key, value);
    if (key == "sweep.values") have_values = true;
  }

  try {
    c.params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!have_values) c.sweep.values = {current_axis_value(c.params, c.sweep.axis)};
  validate_sweep(c);
  return c;
}

LoadedConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

double current_axis_value(const SystemParams& p, SweepAxis axis) {
  switch (axis) {
    case SweepAxis::ThetaDb: return linear_to_db(p.theta);
    case SweepAxis::HeightAerial: return p.h_d;
    case SweepAxis::TiltDeg: return rad_to_deg(p.theta_t);
    case SweepAxis::Users: return p.K;
    case SweepAxis::Antennas: return p.M;
    case SweepAxis::DensityPerKm2: return p.lambda_bs * 1e6;
  }
  return 0.0;
}

SystemParams apply_axis(const SystemParams& base, SweepAxis axis, double value) {
  SystemParams p = base;
  auto as_int = [&](double v) {
    if (v != std::floor(v)) throw std::invalid_argument("axis value must be an integer");
    return static_cast<int>(v);
  };
  switch (axis) {
    case SweepAxis::ThetaDb: p.theta = db_to_linear(value); break;
    case SweepAxis::HeightAerial: p.h_d = value; break;
    case SweepAxis::TiltDeg: p.theta_t = deg_to_rad(value); break;
    case SweepAxis::Users: p.K = as_int(value); break;
    case SweepAxis::Antennas: p.M = as_int(value); break;
    case SweepAxis::DensityPerKm2: p.lambda_bs = value * 1e-6; break;
  }
  p.validate();
  return p;
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::ThetaDb: return "theta_db";
    case SweepAxis::HeightAerial: return "h_d";
    case SweepAxis::TiltDeg: return "theta_t_deg";
    case SweepAxis::Users: return "K";
    case SweepAxis::Antennas: return "M";
    case SweepAxis::DensityPerKm2: return "lambda_per_km2";
  }
  return "?";
}

std::string_view to_string(SweepOutput output) {
  switch (output) {
    case SweepOutput::ScdpAuAnalytic: return "scdp_au_analytic";
    case SweepOutput::ScdpGuAnalytic: return "scdp_gu_analytic";
    case SweepOutput::ScdpAuMcCb: return "scdp_au_mc_cb";
    case SweepOutput::ScdpAuMcZf: return "scdp_au_mc_zf";
    case SweepOutput::ScdpAuMcSingle: return "scdp_au_mc_single";
    case SweepOutput::ScdpGuMcCb: return "scdp_gu_mc_cb";
    case SweepOutput::ScdpGuMcZf: return "scdp_gu_mc_zf";
    case SweepOutput::ScdpGuMcSingle: return "scdp_gu_mc_single";
    case SweepOutput::SeMc: return "se_mc";
  }
  return "?";
}

bool is_monte_carlo(SweepOutput output) {
  return output != SweepOutput::ScdpAuAnalytic && output != SweepOutput::ScdpGuAnalytic;
}

}  // namespace skycov
