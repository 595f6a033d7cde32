// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "skycov/analysis.hpp"
#include "skycov/antenna.hpp"
#include "skycov/fading.hpp"
#include "skycov/geometry.hpp"
#include "skycov/montecarlo.hpp"
#include "skycov/stats.hpp"
#include "skycov/toeplitz.hpp"

using namespace skycov;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Residuals of every analytic evaluation made by the suite.
struct ResidualLog {
  double outer = 0.0;
  double inner = 0.0;
  long calls = 0;
};
ResidualLog g_residuals;

double analytic(const SystemParams& p, UserKind user) {
  const ScdpResult r = scdp(p, user);
  g_residuals.outer = std::max(g_residuals.outer, r.outer_residual);
  g_residuals.inner = std::max(g_residuals.inner, r.inner_residual);
  ++g_residuals.calls;
  return r.value;
}

int sign_changes(const std::vector<double>& y) {
  int changes = 0;
  int last = 0;
  for (std::size_t i = 1; i < y.size(); ++i) {
    const double d = y[i] - y[i - 1];
    const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (s != 0 && last != 0 && s != last) ++changes;
    if (s != 0) last = s;
  }
  return changes;
}

std::size_t argmax(const std::vector<double>& y) {
  return static_cast<std::size_t>(std::max_element(y.begin(), y.end()) - y.begin());
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome interfering_gain_law() {
  const auto t0 = Clock::now();
  Rng rng = substream(2020, 1, 0);
  auto ks_at = [&](int M) {
    std::vector<double> g(100000);
    for (double& v : g) v = std::norm(sample_interfering_coefficient(M, 3.0, 1.0, 1.0, rng));
    return ks_statistic(g, [](double x) { return gamma_cdf(x, 1.0, 1.0); });
  };
  const double ks32 = ks_at(32);
  const double ks4 = ks_at(4);
  const double t = seconds_since(t0);
  return {ks32 < 0.015 && ks4 < 0.06 && t < 10.0,
          fmt("KS(M=32)=%.4f<0.015 KS(M=4)=%.4f<0.06 time=%.1fs<10s", ks32, ks4, t)};
}

Outcome toeplitz_identity() {
  const auto t0 = Clock::now();
  const double rs[] = {15.0, 90.0, 260.0, 700.0, 1600.0};
  const double thetas_db[] = {-5.0, 0.0, 5.0, 10.0, 20.0};
  const int Ks[] = {1, 2, 4, 8};
  const int Ms[] = {8, 16, 32};
  double worst = 0.0;
  int tuples = 0;
  bool has96 = false;
  for (int i = 0; tuples < 50; ++i) {
    SystemParams p = default_params();
    p.theta = db_to_linear(thetas_db[i % 5]);
    p.K = Ks[(i / 5) % 4];
    p.M = Ms[(i / 3) % 3];
    const double r = rs[(i * 7) % 5];
    const bool los = i % 2 == 0;
    const UserKind user = i % 5 == 4 ? UserKind::Ground : UserKind::Aerial;
    const LaplaceContext ctx =
        make_context(p, user, r, los ? LinkClass::los(p) : LinkClass::nlos(p));
    const std::vector<double> t = toeplitz_entries(ctx).entries;
    has96 = has96 || t.size() == 96;
    worst = std::max(worst, std::abs(conditional_scdp(t) - toeplitz_exp_l1_norm(t)));
    ++tuples;
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-10 && has96 && t < 30.0,
          fmt("%d tuples, M_v=96 covered=%s, max|recursion-dense|=%.2e<=1e-10 time=%.1fs<30s",
              tuples, has96 ? "yes" : "no", worst, t)};
}

Outcome analytic_vs_monte_carlo() {
  const double dbs[] = {0.0, 5.0, 10.0, 15.0};
  bool pass = true;
  double worst_gain = 0.0;
  double worst_full = 0.0;
  double slowest = 0.0;

  const SystemParams p = default_params();
  McConfig mc;
  mc.n_deployments = 20000;
  mc.n_fading_per_deployment = 5;
  mc.seed = 2020;
  for (UserKind user : {UserKind::Aerial, UserKind::Ground}) {
    const auto t0 = Clock::now();
    const auto samples = simulate_sir(p, mc, user);
    const double sim_time = seconds_since(t0);
    for (double db : dbs) {
      const auto t1 = Clock::now();
      SystemParams q = p;
      q.theta = db_to_linear(db);
      const double err = std::abs(analytic(q, user) - estimate_scdp(samples, q.theta).value);
      worst_gain = std::max(worst_gain, err);
      slowest = std::max(slowest, sim_time + seconds_since(t1));
    }
  }

  SystemParams desk = default_params();
  desk.M = 8;
  desk.K = 2;
  desk.m_l = 2;
  McConfig full = mc;
  full.fidelity = Fidelity::FullPhysical;
  for (UserKind user : {UserKind::Aerial, UserKind::Ground}) {
    const auto t0 = Clock::now();
    const auto samples = simulate_sir(desk, full, user);
    const double sim_time = seconds_since(t0);
    for (double db : dbs) {
      const auto t1 = Clock::now();
      SystemParams q = desk;
      q.theta = db_to_linear(db);
      const double err = std::abs(analytic(q, user) - estimate_scdp(samples, q.theta).value);
      worst_full = std::max(worst_full, err);
      slowest = std::max(slowest, sim_time + seconds_since(t1));
    }
  }
  pass = worst_gain <= 0.02 && worst_full <= 0.03 && slowest < 300.0;
  return {pass, fmt("gain-level max|err|=%.4f<=0.02 full-physical(M=8,K=2,m_l=2) max|err|=%.4f<=0.03 "
                    "slowest point=%.1fs<300s",
                    worst_gain, worst_full, slowest)};
}

Outcome limits_and_invariances() {
  std::string detail;
  bool pass = true;
  const SystemParams base = default_params();

  SystemParams tiny = base;
  tiny.theta = 1e-12;
  const double lim = std::max(std::abs(analytic(tiny, UserKind::Aerial) - 1.0),
                              std::abs(analytic(tiny, UserKind::Ground) - 1.0));
  pass = pass && lim <= 1e-6;
  detail += fmt("|scdp(theta->0)-1|=%.1e ", lim);

  double pt = 0.0;
  for (double db : {0.0, 10.0}) {
    SystemParams a = base;
    a.theta = db_to_linear(db);
    SystemParams b = a;
    b.P_t = 2.0 * a.P_t;
    for (UserKind u : {UserKind::Aerial, UserKind::Ground}) {
      const double x = analytic(a, u);
      const double y = analytic(b, u);
      pt = std::max(pt, std::abs(x - y) / std::abs(x));
    }
  }
  pass = pass && pt < 1e-9;
  detail += fmt("P_t rel change=%.1e ", pt);

  auto monotone = [&](const std::vector<double>& axis, auto set, bool increasing) {
    bool ok = true;
    for (UserKind u : {UserKind::Aerial, UserKind::Ground}) {
      double prev = increasing ? -1.0 : 2.0;
      for (double v : axis) {
        SystemParams q = base;
        set(q, v);
        const double c = analytic(q, u);
        ok = ok && (increasing ? c >= prev : c <= prev);
        prev = c;
      }
    }
    return ok;
  };
  const bool th = monotone({-5.0, 0.0, 5.0, 10.0, 15.0, 20.0},
                           [](SystemParams& q, double v) { q.theta = db_to_linear(v); }, false);
  const bool k = monotone({1, 2, 4, 8}, [](SystemParams& q, double v) { q.K = static_cast<int>(v); },
                          false);
  const bool m = monotone({8, 16, 32, 64},
                          [](SystemParams& q, double v) { q.M = static_cast<int>(v); }, true);
  pass = pass && th && k && m;
  detail += fmt("non-increasing in theta=%s, in K=%s; non-decreasing in M=%s", th ? "yes" : "no",
                k ? "yes" : "no", m ? "yes" : "no");
  return {pass, detail};
}

Outcome fig2a_orderings() {
  SystemParams p = default_params();
  p.h_bs = 30.0;
  p.h_d = 90.0;
  p.theta = db_to_linear(5.0);
  McConfig mc;
  mc.n_deployments = 20000;
  mc.seed = 2020;
  const double gu = analytic(p, UserKind::Ground);

  McConfig full = mc;
  full.fidelity = Fidelity::FullPhysical;
  full.n_deployments = 5000;
  full.scheme = Scheme::ZF;
  const Estimate zf = estimate_scdp(simulate_sir(p, full, UserKind::Aerial), p.theta);
  full.scheme = Scheme::CB;
  const Estimate cb = estimate_scdp(simulate_sir(p, full, UserKind::Aerial), p.theta);
  const Estimate single =
      estimate_scdp(baseline_single_antenna(p, mc, UserKind::Aerial), p.theta);

  const bool pass = gu - zf.value > zf.half_width && zf.value - cb.value > zf.half_width + cb.half_width &&
                    cb.value - single.value > cb.half_width + single.half_width;
  return {pass, fmt("GU=%.4f > ZF=%.4f(+-%.4f) > CB=%.4f(+-%.4f) > single=%.4f(+-%.4f)", gu, zf.value,
                    zf.half_width, cb.value, cb.half_width, single.value, single.half_width)};
}

Outcome fig2b_shape() {
  SystemParams p = default_params();
  p.theta = db_to_linear(5.0);
  p.lambda_bs = 50e-6;
  std::vector<double> y;
  std::string curve;
  for (double h = 20.0; h <= 200.0; h += 20.0) {
    p.h_d = h;
    y.push_back(analytic(p, UserKind::Aerial));
    curve += fmt("%.3f ", y.back());
  }
  const int changes = sign_changes(y);
  const std::size_t peak = argmax(y);
  const bool pass = changes == 1 && peak > 0 && peak + 1 < y.size();
  return {pass, fmt("sign changes=%d, peak at h_d=%.0f m; curve: %s", changes, 20.0 + 20.0 * peak,
                    curve.c_str())};
}

Outcome fig3_tilt() {
  auto curve = [](double h_d, UserKind user) {
    SystemParams p = default_params();
    p.h_d = h_d;
    std::vector<double> y;
    for (double t = 0.0; t <= 60.0; t += 5.0) {
      p.theta_t = deg_to_rad(t);
      y.push_back(analytic(p, user));
    }
    return y;
  };
  const auto au30 = curve(30.0, UserKind::Aerial);
  const auto gu30 = curve(30.0, UserKind::Ground);
  const auto au80 = curve(80.0, UserKind::Aerial);
  const double au_peak = 5.0 * argmax(au30);
  const double gu_peak = 5.0 * argmax(gu30);
  const auto lowest = static_cast<std::size_t>(std::min_element(au80.begin(), au80.end()) - au80.begin());
  const bool interior_min = lowest > 0 && lowest + 1 < au80.size() && au80[lowest] < au80.front() &&
                            au80[lowest] < au80.back();
  const bool pass = gu_peak > au_peak && interior_min;
  return {pass, fmt("h_d=30: argmax AU=%.0f deg < GU=%.0f deg; h_d=80: AU minimum %.4f at %.0f deg "
                    "(ends %.4f, %.4f)",
                    au_peak, gu_peak, au80[lowest], 5.0 * lowest, au80.front(), au80.back())};
}

Outcome se_trend() {
  SystemParams p = default_params();
  McConfig mc;
  mc.n_deployments = 5000;
  mc.seed = 2020;
  std::vector<double> se;
  std::string values;
  for (int K : {1, 2, 4, 8}) {
    p.K = K;
    const Estimate e = estimate_se(p, mc);
    se.push_back(e.value);
    values += fmt("K=%d:%.3f(+-%.3f) ", K, e.value, e.half_width);
  }
  bool pass = true;
  for (std::size_t i = 1; i < se.size(); ++i) pass = pass && se[i] > se[i - 1];
  return {pass, "strictly increasing: " + values};
}

Outcome geometry_and_residuals() {
  const SystemParams p = default_params();
  Rng rng = substream(2020, 9, 0);
  const double R = window_radius(p.lambda_bs, 1e-6);
  std::vector<double> r(100000);
  for (double& v : r) v = sample_deployment(p, R, UserKind::Aerial, rng).tagged_distance;
  const double ks = ks_statistic(r, [&](double x) { return nearest_distance_cdf(x, p.lambda_bs); });

  bool flat = true;
  for (double x = 0.0; x < 57.7; x += 0.05) flat = flat && los_probability(x, p, p.h_d) == 1.0;

  const AnalysisOptions opts;
  const bool residuals_ok =
      g_residuals.calls > 0 && g_residuals.outer < opts.outer_rel_tol && g_residuals.inner < opts.inner_rel_tol;
  return {ks < 0.01 && flat && residuals_ok,
          fmt("KS=%.4f<0.01, P_l(r<57.7)==1: %s, max residuals over %ld analytic runs: outer=%.1e<1e-6 "
              "inner=%.1e<1e-8",
              ks, flat ? "yes" : "no", g_residuals.calls, g_residuals.outer, g_residuals.inner)};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      interfering_gain_law, toeplitz_identity, analytic_vs_monte_carlo, limits_and_invariances,
      fig2a_orderings,      fig2b_shape,       fig3_tilt,               se_trend,
      geometry_and_residuals};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu: %s  %s  [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
