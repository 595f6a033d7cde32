// SPDX-License-Identifier: Apache-2.0
#include "skycov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace skycov {

namespace {

// sqrt(a * nu) / 1000 with nu expressed per km^2.
double building_rate(const SystemParams& p) {
  const double nu_per_km2 = p.nu_b * 1e6;
  return std::sqrt(p.a * nu_per_km2) / 1000.0;
}

}  // namespace

double window_radius(double lambda_bs, double tail_mass) {
  if (!(lambda_bs > 0.0)) throw std::invalid_argument("window_radius: lambda must be > 0");
  if (!(tail_mass > 0.0 && tail_mass < 1.0))
    throw std::invalid_argument("window_radius: tail mass must lie in (0, 1)");
  return std::sqrt(-std::log(tail_mass) / (std::numbers::pi * lambda_bs));
}

Deployment sample_deployment(const SystemParams& params, double radius, UserKind user,
                             Rng& rng) {
  if (!(radius > 0.0)) throw std::invalid_argument("sample_deployment: radius must be > 0");

  const double mean_count = params.lambda_bs * std::numbers::pi * radius * radius;
  std::poisson_distribution<long> count_dist(mean_count);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  long n = 0;
  while ((n = count_dist(rng)) == 0) {
  }

  struct Point {
    double distance, x, y;
  };
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double rho = radius * std::sqrt(unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    points.push_back({rho, rho * std::cos(phi), rho * std::sin(phi)});
  }
  std::sort(points.begin(), points.end(),
            [](const Point& l, const Point& r) { return l.distance < r.distance; });

  const double h_user = user_altitude(params, user);
  auto draw_state = [&](double r) {
    if (user == UserKind::Ground) return LinkKind::NLoS;
    return unit(rng) < los_probability(r, params, h_user) ? LinkKind::LoS : LinkKind::NLoS;
  };

  Deployment d;
  d.tagged_distance = points.front().distance;
  d.tagged_x = points.front().x;
  d.tagged_y = points.front().y;
  d.tagged_state = draw_state(d.tagged_distance);
  d.interferers.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto& pt = points[i];
    d.interferers.push_back({pt.distance, pt.x, pt.y, draw_state(pt.distance)});
  }
  return d;
}

double nearest_distance_pdf(double r, double lambda_bs) {
  if (r < 0.0) throw std::domain_error("nearest_distance_pdf: r must be >= 0");
  const double pl = std::numbers::pi * lambda_bs;
  return 2.0 * pl * r * std::exp(-pl * r * r);
}

double nearest_distance_cdf(double r, double lambda_bs) {
  if (r < 0.0) throw std::domain_error("nearest_distance_cdf: r must be >= 0");
  return -std::expm1(-std::numbers::pi * lambda_bs * r * r);
}

double los_probability(double r, const SystemParams& params, double h_user) {
  if (!(r >= 0.0)) throw std::domain_error("los_probability: r must be >= 0");
  const double p = std::floor(r * building_rate(params) - 1.0);
  if (p < 0.0) return 1.0;

  const double h = h_user - params.h_bs;
  const double two_c2 = 2.0 * params.c * params.c;
  const long count = static_cast<long>(p);
  double prob = 1.0;
  for (long n = 0; n <= count; ++n) {
    const double height = params.h_bs + h * (static_cast<double>(n) + 0.5) / (p + 1.0);
    prob *= -std::expm1(-height * height / two_c2);
    if (prob == 0.0) break;
  }
  return prob;
}

std::vector<double> los_breakpoints(const SystemParams& params, double lo, double hi) {
  std::vector<double> out;
  const double rate = building_rate(params);
  // r_p = (p + 1) / rate for p = 0, 1, ...
  double first = std::max(1.0, std::floor(lo * rate));
  for (double j = first; j / rate < hi; j += 1.0) {
    const double rp = j / rate;
    if (rp > lo) out.push_back(rp);
  }
  return out;
}

}  // namespace skycov
