// SPDX-License-Identifier: Apache-2.0
#include "skycov/verify.hpp"

#include <algorithm>
#include <cmath>

#include "skycov/fading.hpp"
#include "skycov/random.hpp"
#include "skycov/stats.hpp"
#include "skycov/sweep.hpp"

namespace skycov {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

CheckResult interfering_gain_ks(const SystemParams& p, int M, double limit, std::uint64_t seed) {
  Rng rng = substream(seed, 0x71, static_cast<std::uint64_t>(M));
  std::vector<double> gains(100000);
  for (double& g : gains) g = std::norm(sample_interfering_coefficient(M, p.m_l, p.eta, p.sigma2, rng));
  const double ks = ks_statistic(gains, [&](double x) { return gamma_cdf(x, 1.0, p.eta); });
  return {"interfering_gain_ks_M" + std::to_string(M), ks < limit,
          "KS " + format_number(ks) + " (limit " + format_number(limit) + ")"};
}

CheckResult toeplitz_identity(const SystemParams& base, const AnalysisOptions& opts) {
  double worst = 0.0;
  int tuples = 0;
  for (double r : {30.0, 150.0, 600.0}) {
    for (double theta_db : {0.0, 10.0}) {
      for (LinkKind kind : {LinkKind::LoS, LinkKind::NLoS}) {
        SystemParams p = base;
        p.theta = db_to_linear(theta_db);
        const LinkClass link = kind == LinkKind::LoS ? LinkClass::los(p) : LinkClass::nlos(p);
        const auto tower = toeplitz_entries(make_context(p, UserKind::Aerial, r, link), opts);
        const double diff =
            std::abs(conditional_scdp(tower.entries) - toeplitz_exp_l1_norm(tower.entries));
        worst = std::max(worst, diff);
        ++tuples;
      }
    }
  }
  return {"toeplitz_recursion_vs_exponential", worst <= 1e-10,
          "max |diff| " + format_number(worst) + " over " + std::to_string(tuples) + " tuples"};
}

CheckResult analytic_vs_mc(const SystemParams& p, UserKind user, const McConfig& base,
                           const AnalysisOptions& opts) {
  McConfig mc = base;
  mc.scheme = Scheme::CB;
  mc.fidelity = Fidelity::GainLevel;
  AnalysisOptions a = opts;
  a.window_tail_mass = mc.window_tail_mass;
  const double analytic = scdp(p, user, a).value;
  const auto samples = simulate_sir(p, mc, user);
  const Estimate est = estimate_scdp(samples, p.theta);
  const double gap = std::abs(analytic - est.value);
  return {std::string("analytic_vs_mc_") + (user == UserKind::Aerial ? "au" : "gu"), gap <= 0.02,
          "analytic " + format_number(analytic) + " mc " + format_number(est.value) + " +- " +
              format_number(est.half_width)};
}

}  // namespace

VerifyReport run_verification(const SystemParams& params, const McConfig& mc,
                              const AnalysisOptions& analysis) {
  VerifyReport report;
  report.checks.push_back(interfering_gain_ks(params, 32, 0.015, mc.seed));
  report.checks.push_back(interfering_gain_ks(params, 4, 0.06, mc.seed));
  report.checks.push_back(toeplitz_identity(params, analysis));
  report.checks.push_back(analytic_vs_mc(params, UserKind::Aerial, mc, analysis));
  report.checks.push_back(analytic_vs_mc(params, UserKind::Ground, mc, analysis));
  return report;
}

}  // namespace skycov
