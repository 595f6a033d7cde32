// SPDX-License-Identifier: Apache-2.0
//
// skycov: analytic and Monte Carlo content-delivery probability for aerial
// and ground users served by down-tilted massive-MIMO base stations.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skycov/config.hpp"
#include "skycov/sweep.hpp"
#include "skycov/verify.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned threads = 1;
  std::optional<long> deployments;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config, "Parameter/sweep file (key = value lines)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", flags.seed, "Monte Carlo seed (overrides mc.seed)");
  cmd->add_option("--out", flags.out, "Output path (default: stdout)");
  cmd->add_option("--threads", flags.threads, "Worker threads, 0 = auto; results do not depend on it");
  cmd->add_option("--deployments", flags.deployments, "Override mc.n_deployments");
}

skycov::LoadedConfig load(const CommonFlags& flags) {
  skycov::LoadedConfig cfg = flags.config.empty() ? skycov::parse_config("")
                                                  : skycov::load_config(flags.config);
  if (flags.seed) cfg.sweep.mc.seed = *flags.seed;
  if (flags.deployments) cfg.sweep.mc.n_deployments = *flags.deployments;
  cfg.sweep.mc.validate();
  return cfg;
}

void emit(const CommonFlags& flags, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + flags.out);
  out << text;
}

// Keeps only analytic (or only Monte Carlo) outputs, with a default pair.
void restrict_outputs(skycov::SweepSpec& spec, bool monte_carlo) {
  using skycov::SweepOutput;
  std::vector<SweepOutput> kept;
  for (SweepOutput o : spec.outputs) {
    if (skycov::is_monte_carlo(o) == monte_carlo) kept.push_back(o);
  }
  if (kept.empty()) {
    kept = monte_carlo ? std::vector{SweepOutput::ScdpAuMcCb, SweepOutput::ScdpGuMcCb}
                       : std::vector{SweepOutput::ScdpAuAnalytic, SweepOutput::ScdpGuAnalytic};
  }
  spec.outputs = std::move(kept);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Content-delivery probability of aerial and ground users under conjugate beamforming"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, simulate_flags, sweep_flags, verify_flags;
  bool timing = false;
  auto* analyze = app.add_subcommand("analyze", "Analytic SCDP over the configured sweep");
  add_common(analyze, analyze_flags);
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo SCDP/SE over the configured sweep");
  add_common(simulate, simulate_flags);
  auto* sweep = app.add_subcommand("sweep", "Run a figure recipe: every configured output");
  add_common(sweep, sweep_flags);
  sweep->add_flag("--timing", timing, "Append a wall_s column (not bit-stable)");
  auto* verify = app.add_subcommand("verify", "Cross-checks; exits nonzero if any fails");
  add_common(verify, verify_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed() || simulate->parsed() || sweep->parsed()) {
      const CommonFlags& flags =
          analyze->parsed() ? analyze_flags : simulate->parsed() ? simulate_flags : sweep_flags;
      skycov::LoadedConfig cfg = load(flags);
      if (analyze->parsed()) restrict_outputs(cfg.sweep, false);
      if (simulate->parsed()) restrict_outputs(cfg.sweep, true);
      skycov::SweepOptions options;
      options.threads = flags.threads;
      options.timing = timing;
      emit(flags, skycov::run_sweep(cfg.params, cfg.sweep, options));
      return 0;
    }

    skycov::LoadedConfig cfg = load(verify_flags);
    skycov::AnalysisOptions analysis;
    analysis.threads = verify_flags.threads;
    cfg.sweep.mc.threads = verify_flags.threads;
    const skycov::VerifyReport report = skycov::run_verification(cfg.params, cfg.sweep.mc, analysis);
    std::string text;
    for (const auto& c : report.checks) {
      text += (c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    }
    emit(verify_flags, text);
    return report.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "skycov: " << e.what() << "\n";
    return 2;
  }
}
