// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "skycov/params.hpp"
#include "skycov/random.hpp"

namespace skycov {

struct Interferer {
  double distance;  // horizontal distance to the typical user [m]
  double x;
  double y;
  LinkKind los_state;  // state of the link to the typical user
};

/// One PPP realization seen from the typical user at the origin.
/// The tagged BS is the nearest point; interferers are sorted by distance.
struct Deployment {
  double tagged_distance = 0.0;
  double tagged_x = 0.0;
  double tagged_y = 0.0;
  LinkKind tagged_state = LinkKind::NLoS;
  std::vector<Interferer> interferers;
};

/// Radius R with void probability exp(-pi*lambda*R^2) equal to `tail_mass`.
double window_radius(double lambda_bs, double tail_mass);

/// Draws BSs on a disk of radius `window_radius` around the origin.
/// Empty realizations are redrawn. Links of aerial users get independent
/// Bernoulli LoS states, ground-user links are always NLoS.
Deployment sample_deployment(const SystemParams& params, double window_radius,
                             UserKind user, Rng& rng);

/// Nearest-BS horizontal distance density 2*pi*lambda*r*exp(-pi*lambda*r^2).
double nearest_distance_pdf(double r, double lambda_bs);

/// Nearest-BS horizontal distance CDF 1 - exp(-pi*lambda*r^2).
double nearest_distance_cdf(double r, double lambda_bs);

/// Blockage-driven LoS probability for a link of horizontal length r between
/// a BS and a user at altitude `h_user`.
double los_probability(double r, const SystemParams& params, double h_user);

/// Distances in (lo, hi) where the building-count index of los_probability
/// increments, i.e. 1000(p+1)/sqrt(a*nu) with nu in 1/km^2.
std::vector<double> los_breakpoints(const SystemParams& params, double lo, double hi);

}  // namespace skycov
