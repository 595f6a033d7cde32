#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "skycov/antenna.hpp"

using namespace skycov;

TEST_CASE("main lobe for a ground user") {
  const SystemParams p = default_params();
  const auto lobe = main_lobe_interval(p.h_g, p);
  REQUIRE(lobe.has_value());
  CHECK(lobe->lo == doctest::Approx(41.435657350863856).epsilon(1e-12));
  CHECK(lobe->hi == doctest::Approx(410.1707220871582).epsilon(1e-12));
  CHECK(directivity_gain(100.0, p.h_g, p) == p.G_m);
  CHECK(directivity_gain(30.0, p.h_g, p) == p.G_s);
  CHECK(directivity_gain(500.0, p.h_g, p) == p.G_s);
  CHECK(directivity_gain(0.0, p.h_g, p) == p.G_s);
}

TEST_CASE("aerial user above the BS sees only the side lobe") {
  const SystemParams p = default_params();
  CHECK_FALSE(main_lobe_interval(p.h_d, p).has_value());
  for (double r = 0.0; r < 5000.0; r += 13.0) CHECK(directivity_gain(r, p.h_d, p) == p.G_s);
}

TEST_CASE("main lobe interval agrees with the pointwise gain") {
  SystemParams p = default_params();
  for (double tilt : {0.0, 10.0, 25.0, 40.0, 60.0}) {
    p.theta_t = deg_to_rad(tilt);
    for (double h : {1.0, 30.0, 54.0, 80.0}) {
      const auto lobe = main_lobe_interval(h, p);
      for (double r = 0.5; r < 4000.0; r *= 1.07) {
        const bool inside = lobe && r > lobe->lo && r < lobe->hi;
        CHECK(directivity_gain(r, h, p) == (inside ? p.G_m : p.G_s));
      }
    }
  }
}

TEST_CASE("zeta examples") {
  const SystemParams p = default_params();
  CHECK(zeta(0.0, 1.0, LinkClass::nlos(p), p) == doctest::Approx(8.175670889229256e-11).epsilon(1e-12));

  const double h = p.h_d - p.h_bs;
  const double r1 = 3000.0;
  const double d1 = std::hypot(r1, h);
  const double r2 = std::sqrt(4 * d1 * d1 - h * h);
  CHECK(zeta(r2, p.h_d, LinkClass::los(p), p) / zeta(r1, p.h_d, LinkClass::los(p), p) ==
        doctest::Approx(std::pow(2.0, -p.alpha_l)).epsilon(1e-12));

  CHECK_THROWS_AS(zeta(0.0, p.h_bs, LinkClass::los(p), p), std::domain_error);
}

TEST_CASE("zeta jumps by G_m/G_s at the main lobe edge") {
  const SystemParams p = default_params();
  const auto lobe = main_lobe_interval(p.h_g, p);
  REQUIRE(lobe.has_value());
  for (double edge : {lobe->lo, lobe->hi}) {
    const double in = zeta(edge * (edge == lobe->lo ? 1 + 1e-12 : 1 - 1e-12), p.h_g, LinkClass::nlos(p), p);
    const double out = zeta(edge * (edge == lobe->lo ? 1 - 1e-12 : 1 + 1e-12), p.h_g, LinkClass::nlos(p), p);
    CHECK(in / out == doctest::Approx(19.99861869632744).epsilon(1e-8));
  }
  CHECK(linear_to_db(p.G_m / p.G_s) == doctest::Approx(13.01).epsilon(1e-9));
}

TEST_CASE("signal amplitude splits power over the beams") {
  SystemParams p = default_params();
  const double a4 = signal_amplitude(120.0, p.h_g, LinkClass::nlos(p), p);
  CHECK(a4 * a4 == doctest::Approx(p.P_t / p.K * zeta(120.0, p.h_g, LinkClass::nlos(p), p)));
  p.K = 8;
  const double a8 = signal_amplitude(120.0, p.h_g, LinkClass::nlos(p), p);
  CHECK(a8 * a8 == doctest::Approx(0.5 * a4 * a4));
}

TEST_CASE("gain breakpoints are the finite lobe edges") {
  const SystemParams p = default_params();
  const auto b = gain_breakpoints(p, p.h_g, 0.0, 1000.0);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == doctest::Approx(41.435657350863856));
  CHECK(gain_breakpoints(p, p.h_g, 50.0, 400.0).empty());
  CHECK(gain_breakpoints(p, p.h_d, 0.0, 1000.0).empty());
}
