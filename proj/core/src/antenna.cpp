// SPDX-License-Identifier: Apache-2.0
#include "skycov/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace skycov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
  double lo, hi;
};

// Solutions of r * slope > rhs (greater = true) or r * slope < rhs.
Interval solve_linear(double slope, double rhs, bool greater) {
  if (slope == 0.0) {
    const bool all = greater ? (0.0 > rhs) : (0.0 < rhs);
    return all ? Interval{-kInf, kInf} : Interval{0.0, 0.0};
  }
  const double root = rhs / slope;
  const bool above_root = (slope > 0.0) == greater;
  return above_root ? Interval{root, kInf} : Interval{-kInf, root};
}

}  // namespace

double directivity_gain(double r, double h_user, const SystemParams& params) {
  if (!(r >= 0.0)) throw std::domain_error("directivity_gain: r must be >= 0");
  const double lower = params.h_bs - r * std::tan(params.theta_t + params.theta_b / 2.0);
  const double upper = params.h_bs - r * std::tan(params.theta_t - params.theta_b / 2.0);
  return (lower < h_user && h_user < upper) ? params.G_m : params.G_s;
}

std::optional<MainLobeInterval> main_lobe_interval(double h_user, const SystemParams& params) {
  const double drop = params.h_bs - h_user;
  const Interval a =
      solve_linear(std::tan(params.theta_t + params.theta_b / 2.0), drop, /*greater=*/true);
  const Interval b =
      solve_linear(std::tan(params.theta_t - params.theta_b / 2.0), drop, /*greater=*/false);
  const double lo = std::max({0.0, a.lo, b.lo});
  const double hi = std::min(a.hi, b.hi);
  if (!(lo < hi)) return std::nullopt;
  return MainLobeInterval{lo, hi};
}

std::vector<double> gain_breakpoints(const SystemParams& params, double h_user, double lo,
                                     double hi) {
  std::vector<double> out;
  if (const auto lobe = main_lobe_interval(h_user, params)) {
    for (double edge : {lobe->lo, lobe->hi}) {
      if (std::isfinite(edge) && edge > lo && edge < hi) out.push_back(edge);
    }
  }
  return out;
}

double zeta(double r, double h_user, const LinkClass& link, const SystemParams& params) {
  const double dh = h_user - params.h_bs;
  const double d2 = r * r + dh * dh;
  if (!(d2 > 0.0)) throw std::domain_error("zeta: zero 3D distance");
  return link.A * directivity_gain(r, h_user, params) * std::pow(d2, -link.alpha / 2.0);
}

double signal_amplitude(double r, double h_user, const LinkClass& link,
                        const SystemParams& params) {
  return std::sqrt(params.P_t / params.K * zeta(r, h_user, link, params));
}

}  // namespace skycov
