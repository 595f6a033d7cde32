// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "skycov/params.hpp"

namespace skycov {

/// Open interval (lo, hi) of horizontal distances served by the main lobe.
struct MainLobeInterval {
  double lo;
  double hi;
};

/// Vertical-pattern gain seen by a user at altitude `h_user` located at
/// horizontal distance r from a BS: G_m inside the tilted main lobe, G_s
/// everywhere else (above or below).
double directivity_gain(double r, double h_user, const SystemParams& params);

/// The set of r >= 0 where directivity_gain returns G_m, if non-empty.
std::optional<MainLobeInterval> main_lobe_interval(double h_user, const SystemParams& params);

/// Finite main-lobe edges inside (lo, hi); the gain jumps only there.
std::vector<double> gain_breakpoints(const SystemParams& params, double h_user, double lo,
                                     double hi);

/// Antenna gain times path loss, A * G(r) * d^-alpha with d the 3D distance.
double zeta(double r, double h_user, const LinkClass& link, const SystemParams& params);

/// Per-beam received amplitude sqrt(P_t / K * zeta).
double signal_amplitude(double r, double h_user, const LinkClass& link,
                        const SystemParams& params);

}  // namespace skycov
