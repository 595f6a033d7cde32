// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

namespace skycov {

/// Scalar model parameters. Every field is stored in SI units and linear
/// scale; the config loader converts dB, degrees and per-km² inputs.
struct SystemParams {
  double lambda_bs = 1e-6;  // BS density [1/m^2]
  double h_bs = 55.0;       // BS height [m]
  double h_g = 1.0;         // ground user altitude [m]
  double h_d = 90.0;        // aerial user altitude [m]
  int M = 32;               // antennas per sector
  int K = 4;                // scheduled users per sector
  double P_t = 1.0;         // transmit power [W]
  double theta = 10.0;      // SIR threshold (linear)
  double sigma2 = 1.0;      // GU per-antenna channel variance
  double eta = 1.0;         // Nakagami spread
  int m_l = 3;              // Nakagami shape, LoS
  int m_n = 1;              // Nakagami shape, NLoS
  double alpha_l = 2.09;
  double alpha_n = 3.75;
  double A_l = 7.762471166286917e-05;  // -41.1 dB
  double A_n = 5.128613839913648e-04;  // -32.9 dB
  double G_m = 10.0;                   // 10 dB
  double G_s = 0.5000345349769785;     // -3.01 dB
  double theta_t = 0.5235987755982988;  // down-tilt [rad], 30 deg
  double theta_b = 0.7853981633974483;  // vertical beamwidth [rad], 45 deg
  double a = 0.6;           // built-up land fraction
  double nu_b = 500e-6;     // buildings per m^2
  double c = 25.0;          // Rayleigh scale of building heights [m]

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

/// Defaults used throughout the numerical study (M=32, K=4, 1 BS/km², ...).
SystemParams default_params();

enum class UserKind { Aerial, Ground };

enum class LinkKind { LoS, NLoS };

/// Propagation class of a single BS-to-user link.
struct LinkClass {
  LinkKind kind;
  double alpha;
  double A;
  int m;

  static LinkClass los(const SystemParams& p) { return {LinkKind::LoS, p.alpha_l, p.A_l, p.m_l}; }
  static LinkClass nlos(const SystemParams& p) { return {LinkKind::NLoS, p.alpha_n, p.A_n, p.m_n}; }
};

inline double user_altitude(const SystemParams& p, UserKind user) {
  return user == UserKind::Aerial ? p.h_d : p.h_g;
}

std::string_view to_string(UserKind user);

double db_to_linear(double db);
double linear_to_db(double x);
double deg_to_rad(double deg);
double rad_to_deg(double rad);

}  // namespace skycov
