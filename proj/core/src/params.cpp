// SPDX-License-Identifier: Apache-2.0
#include "skycov/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace skycov {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("invalid parameters: ") + what);
}

}  // namespace

void SystemParams::validate() const {
  require(std::isfinite(lambda_bs) && lambda_bs > 0.0, "lambda_bs must be > 0");
  require(M >= 1, "M must be >= 1");
  require(K >= 1, "K must be >= 1");
  require(K <= M, "K must not exceed M");
  require(std::isfinite(h_bs) && h_bs >= 0.0, "h_bs must be >= 0");
  require(std::isfinite(h_g) && h_g >= 0.0, "h_g must be >= 0");
  require(std::isfinite(h_d) && h_d >= 0.0, "h_d must be >= 0");
  require(P_t > 0.0, "P_t must be > 0");
  require(std::isfinite(theta) && theta >= 0.0, "theta must be >= 0");
  require(sigma2 > 0.0, "sigma2 must be > 0");
  require(eta > 0.0, "eta must be > 0");
  require(m_n >= 1, "m_n must be >= 1");
  require(m_l >= m_n, "m_l must be >= m_n");
  require(alpha_l > 0.0 && alpha_l < alpha_n, "need 0 < alpha_l < alpha_n");
  require(A_l > 0.0 && A_n > 0.0, "path-loss constants must be > 0");
  require(G_m > 0.0 && G_s > 0.0, "antenna gains must be > 0");
  require(theta_b > 0.0, "theta_b must be > 0");
  constexpr double right_angle = std::numbers::pi / 2.0;
  require(std::abs(theta_t + theta_b / 2.0) < right_angle,
          "theta_t + theta_b/2 must lie strictly inside (-90, 90) degrees");
  require(std::abs(theta_t - theta_b / 2.0) < right_angle,
          "theta_t - theta_b/2 must lie strictly inside (-90, 90) degrees");
  require(a > 0.0 && a <= 1.0, "a must lie in (0, 1]");
  require(nu_b > 0.0, "nu_b must be > 0");
  require(c > 0.0, "c must be > 0");
}

SystemParams default_params() { return SystemParams{}; }

std::string_view to_string(UserKind user) {
  return user == UserKind::Aerial ? "AU" : "GU";
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }
double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace skycov
