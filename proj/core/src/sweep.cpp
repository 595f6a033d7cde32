// SPDX-License-Identifier: Apache-2.0
#include "skycov/sweep.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>

#include "skycov/montecarlo.hpp"

namespace skycov {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

namespace {

struct McTarget {
  UserKind user;
  Scheme scheme;
};

McTarget mc_target(SweepOutput out) {
  switch (out) {
    case SweepOutput::ScdpAuMcCb: return {UserKind::Aerial, Scheme::CB};
    case SweepOutput::ScdpAuMcZf: return {UserKind::Aerial, Scheme::ZF};
    case SweepOutput::ScdpAuMcSingle: return {UserKind::Aerial, Scheme::SingleAntenna};
    case SweepOutput::ScdpGuMcCb: return {UserKind::Ground, Scheme::CB};
    case SweepOutput::ScdpGuMcZf: return {UserKind::Ground, Scheme::ZF};
    case SweepOutput::ScdpGuMcSingle: return {UserKind::Ground, Scheme::SingleAntenna};
    default: return {UserKind::Aerial, Scheme::CB};
  }
}

std::string sanitize(std::string s) {
  for (char& ch : s) {
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
  }
  return s;
}

}  // namespace

std::string run_sweep(const SystemParams& base, const SweepSpec& spec,
                      const SweepOptions& options) {
  std::string csv(to_string(spec.axis));
  for (SweepOutput out : spec.outputs) {
    csv += ',';
    csv += to_string(out);
    if (is_monte_carlo(out)) {
      csv += ',';
      csv += to_string(out);
      csv += "_hw";
    }
  }
  if (options.timing) csv += ",wall_s";
  csv += ",status\n";

  AnalysisOptions analysis = options.analysis;
  analysis.threads = options.threads;
  analysis.window_tail_mass = spec.mc.window_tail_mass;

  // SIR samples do not depend on the threshold, so a theta sweep reuses them.
  const bool reuse_samples = spec.axis == SweepAxis::ThetaDb;
  std::map<std::pair<int, int>, std::vector<SirSample>> cache;

  for (double x : spec.values) {
    const auto start = std::chrono::steady_clock::now();
    std::string row = format_number(x);
    std::string status = "ok";
    std::string cells;
    try {
      const SystemParams p = apply_axis(base, spec.axis, x);
      for (SweepOutput out : spec.outputs) {
        if (out == SweepOutput::ScdpAuAnalytic || out == SweepOutput::ScdpGuAnalytic) {
          const UserKind user =
              out == SweepOutput::ScdpAuAnalytic ? UserKind::Aerial : UserKind::Ground;
          cells += ',' + format_number(scdp(p, user, analysis).value);
          continue;
        }
        McConfig mc = spec.mc;
        mc.threads = options.threads;
        Estimate est{};
        if (out == SweepOutput::SeMc) {
          mc.scheme = Scheme::CB;
          est = estimate_se(p, mc);
        } else {
          const McTarget target = mc_target(out);
          mc.scheme = target.scheme;
          if (target.scheme == Scheme::ZF) mc.fidelity = Fidelity::FullPhysical;
          const auto key = std::make_pair(static_cast<int>(target.user), static_cast<int>(target.scheme));
          std::vector<SirSample> fresh;
          const std::vector<SirSample>* samples = nullptr;
          if (reuse_samples) {
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, simulate_sir(p, mc, target.user)).first;
            samples = &it->second;
          } else {
            fresh = simulate_sir(p, mc, target.user);
            samples = &fresh;
          }
          est = estimate_scdp(*samples, p.theta);
        }
        cells += ',' + format_number(est.value) + ',' + format_number(est.half_width);
      }
    } catch (const std::exception& e) {
      status = "error: " + sanitize(e.what());
      cells.clear();
      for (SweepOutput out : spec.outputs) cells += is_monte_carlo(out) ? ",nan,nan" : ",nan";
    }
    row += cells;
    if (options.timing) {
      const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
      row += ',' + format_number(wall.count());
    }
    row += ',' + status + '\n';
    csv += row;
  }
  return csv;
}

}  // namespace skycov
