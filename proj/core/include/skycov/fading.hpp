// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include <Eigen/Core>

#include "skycov/params.hpp"
#include "skycov/random.hpp"

namespace skycov {

using ComplexVector = Eigen::VectorXcd;

/// Gamma(shape, scale) law of a channel power gain.
struct GammaGain {
  double shape;
  double scale;

  double mean() const { return shape * scale; }
  double sample(Rng& rng) const;
};

/// Nakagami-m amplitude, drawn as the square root of Gamma(m, eta/m).
double sample_nakagami_amplitude(double m, double eta, Rng& rng);

/// Nakagami amplitude with an independent uniform phase.
std::complex<double> sample_nakagami_coefficient(double m, double eta, Rng& rng);

/// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
std::complex<double> sample_complex_gaussian(double variance, Rng& rng);

/// M iid CN(0, sigma2) entries.
ComplexVector sample_gu_channel(int M, double sigma2, Rng& rng);

/// M iid Nakagami(m, eta) entries with uniform phases.
ComplexVector sample_au_channel(int M, double m, double eta, Rng& rng);

enum class LinkRole { Intended, Interfering };

/// Channel-gain catalogue for a CB beam: intended GU Gamma(M, sigma2), intended
/// AU Gamma(m*M, eta/m), any interfering beam at a GU Gamma(1, sigma2) and at
/// an AU Gamma(1, eta). `m` is the AU link's Nakagami shape.
GammaGain table1_gain(LinkRole role, UserKind seen_by, const SystemParams& params, int m = 1);

/// One interfering-beam coefficient h^H f / |h|, with h a CN(0, sigma2) precoding
/// channel and f a Nakagami(m, eta) channel to the observed user.
std::complex<double> sample_interfering_coefficient(int M, double m, double eta, double sigma2,
                                                    Rng& rng);

}  // namespace skycov
