// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "skycov/params.hpp"

namespace skycov {

enum class Fidelity {
  FullPhysical,  // draw every channel vector and form the actual precoders
  GainLevel,     // draw aggregate beam gains from their Gamma laws
};

enum class Scheme { CB, ZF, SingleAntenna };

struct McConfig {
  long n_deployments = 20000;
  int n_fading_per_deployment = 5;
  Fidelity fidelity = Fidelity::GainLevel;
  Scheme scheme = Scheme::CB;
  std::uint64_t seed = 1;
  double window_tail_mass = 1e-6;
  unsigned threads = 1;  // 0 = one per hardware thread; never changes results

  void validate() const;
};

struct SirSample {
  double sir;
  UserKind user;
  Scheme scheme;
  long deployment_id;
  int fading_id;
};

/// Unit-norm precoders (one column per user) for the channels in the
/// columns of H. ZF uses H (H^H H)^-1; CB and SingleAntenna use H itself.
Eigen::MatrixXcd precoders(const Eigen::MatrixXcd& H, Scheme scheme);

/// SIR of the typical user over n_deployments x n_fading_per_deployment
/// draws, ordered by (deployment, fading block). ZF needs full-physical
/// fidelity; SingleAntenna runs with M = K = 1.
std::vector<SirSample> simulate_sir(const SystemParams& params, const McConfig& mc,
                                    UserKind user);

/// Single-antenna BSs (M = K = 1): plain Nakagami/Rayleigh links without
/// precoding, interferers fading with their own link class.
std::vector<SirSample> baseline_single_antenna(const SystemParams& params, const McConfig& mc,
                                               UserKind user);

struct Estimate {
  double value;
  double half_width;  // 95% normal-approximation half-width
};

/// Fraction of samples with SIR above theta. The half-width treats each
/// deployment (all its fading blocks) as one independent cluster.
/// Needs at least 1000 samples.
Estimate estimate_scdp(std::span<const SirSample> samples, double theta);

/// Mean per-cell sum rate sum_k log2(1 + SIR_k) over the tagged cell's AU and
/// K-1 GUs; GUs are dropped uniformly on a disk of radius (pi*lambda)^-1/2
/// around the tagged BS. CB only.
Estimate estimate_se(const SystemParams& params, const McConfig& mc);

std::string_view to_string(Scheme scheme);
std::string_view to_string(Fidelity fidelity);

}  // namespace skycov
