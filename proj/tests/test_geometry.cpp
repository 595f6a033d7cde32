#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "skycov/geometry.hpp"
#include "skycov/quadrature.hpp"
#include "skycov/stats.hpp"

using namespace skycov;

TEST_CASE("window radius and mean count at 1 BS/km^2") {
  const double R = window_radius(1e-6, 1e-6);
  CHECK(R == doctest::Approx(2097.0487818066053).epsilon(1e-12));
  CHECK(1e-6 * std::numbers::pi * R * R == doctest::Approx(13.815510557964275).epsilon(1e-12));
}

TEST_CASE("nearest distance density") {
  CHECK(nearest_distance_pdf(0.0, 1e-6) == 0.0);
  CHECK(nearest_distance_pdf(500.0, 1e-6) == doctest::Approx(0.001432371872681138).epsilon(1e-12));
  CHECK_THROWS_AS(nearest_distance_pdf(-1.0, 1e-6), std::domain_error);

  const double hi = window_radius(1e-6, 1e-300);
  double total = 0.0;
  const std::vector<double> edges = make_panels(0.0, hi, {}, PanelLayout{1.25, hi / 50.0});
  for_each_node(edges, [&](double r, double w, std::size_t) { total += w * nearest_distance_pdf(r, 1e-6); });
  CHECK(std::abs(total - 1.0) < 1e-8);
}

TEST_CASE("sampled tagged distance follows the nearest-neighbour law") {
  SystemParams p = default_params();
  const double R = window_radius(p.lambda_bs, 1e-6);
  Rng rng(11);
  std::vector<double> r;
  r.reserve(100000);
  bool ordered = true;
  for (int i = 0; i < 100000; ++i) {
    const Deployment d = sample_deployment(p, R, UserKind::Aerial, rng);
    double last = d.tagged_distance;
    for (const auto& j : d.interferers) {
      ordered = ordered && j.distance >= last && j.distance > 0.0;
      last = j.distance;
    }
    r.push_back(d.tagged_distance);
  }
  CHECK(ordered);
  const double ks = ks_statistic(r, [&](double x) { return nearest_distance_cdf(x, p.lambda_bs); });
  CHECK(ks < 0.01);
}

TEST_CASE("dense networks shrink the tagged distance") {
  SystemParams p = default_params();
  const double R = 1000.0;
  Rng rng(3);
  double sparse = 0.0;
  double dense = 0.0;
  for (int i = 0; i < 2000; ++i) sparse += sample_deployment(p, R, UserKind::Ground, rng).tagged_distance;
  p.lambda_bs = 1e-3;
  for (int i = 0; i < 2000; ++i) dense += sample_deployment(p, R, UserKind::Ground, rng).tagged_distance;
  CHECK(dense < 0.05 * sparse);
}

TEST_CASE("ground links are always NLoS") {
  const SystemParams p = default_params();
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Deployment d = sample_deployment(p, window_radius(p.lambda_bs, 1e-6), UserKind::Ground, rng);
    CHECK(d.tagged_state == LinkKind::NLoS);
    for (const auto& j : d.interferers) CHECK(j.los_state == LinkKind::NLoS);
  }
}

TEST_CASE("LoS probability examples") {
  const SystemParams p = default_params();
  CHECK(los_probability(50.0, p, p.h_d) == 1.0);
  CHECK(los_probability(57.7, p, p.h_d) == 1.0);
  CHECK(los_probability(0.0, p, p.h_d) == 1.0);
  CHECK(los_probability(200.0, p, p.h_d) == doctest::Approx(0.9308323489420598).epsilon(1e-12));
  CHECK(los_probability(1e5, p, p.h_d) < 1e-6);
}

TEST_CASE("LoS probability properties") {
  const SystemParams p = default_params();
  double prev = 1.0;
  for (double r = 0.0; r <= 3000.0; r += 7.3) {
    const double pl = los_probability(r, p, p.h_d);
    CHECK(pl >= 0.0);
    CHECK(pl <= prev + 1e-15);
    prev = pl;
  }
  for (double r : {80.0, 200.0, 750.0, 1500.0}) {
    double last = 0.0;
    for (double h = p.h_bs; h <= 300.0; h += 5.0) {
      const double pl = los_probability(r, p, h);
      CHECK(pl >= last - 1e-15);
      last = pl;
    }
  }
}

TEST_CASE("LoS breakpoints sit at the index increments") {
  const SystemParams p = default_params();
  const std::vector<double> b = los_breakpoints(p, 0.0, 300.0);
  REQUIRE(b.size() == 5);
  CHECK(b[0] == doctest::Approx(57.73502691896257));
  for (double x : b) {
    CHECK(los_probability(x * (1 - 1e-9), p, p.h_d) > los_probability(x * (1 + 1e-9), p, p.h_d));
  }
}
