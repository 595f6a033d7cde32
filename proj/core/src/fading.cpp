// SPDX-License-Identifier: Apache-2.0
#include "skycov/fading.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace skycov {

double GammaGain::sample(Rng& rng) const {
  return std::gamma_distribution<double>(shape, scale)(rng);
}

double sample_nakagami_amplitude(double m, double eta, Rng& rng) {
  if (!(m >= 0.5) || !(eta > 0.0))
    throw std::domain_error("nakagami: need m >= 0.5 and eta > 0");
  return std::sqrt(std::gamma_distribution<double>(m, eta / m)(rng));
}

std::complex<double> sample_nakagami_coefficient(double m, double eta, Rng& rng) {
  const double amplitude = sample_nakagami_amplitude(m, eta, rng);
  const double phase = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  return std::polar(amplitude, phase);
}

std::complex<double> sample_complex_gaussian(double variance, Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

ComplexVector sample_gu_channel(int M, double sigma2, Rng& rng) {
  if (M < 1) throw std::invalid_argument("sample_gu_channel: M must be >= 1");
  ComplexVector h(M);
  for (int i = 0; i < M; ++i) h[i] = sample_complex_gaussian(sigma2, rng);
  return h;
}

ComplexVector sample_au_channel(int M, double m, double eta, Rng& rng) {
  if (M < 1) throw std::invalid_argument("sample_au_channel: M must be >= 1");
  ComplexVector f(M);
  for (int i = 0; i < M; ++i) f[i] = sample_nakagami_coefficient(m, eta, rng);
  return f;
}

GammaGain table1_gain(LinkRole role, UserKind seen_by, const SystemParams& params, int m) {
  if (role == LinkRole::Intended) {
    if (seen_by == UserKind::Ground) return {static_cast<double>(params.M), params.sigma2};
    return {static_cast<double>(m) * params.M, params.eta / m};
  }
  return {1.0, seen_by == UserKind::Ground ? params.sigma2 : params.eta};
}

std::complex<double> sample_interfering_coefficient(int M, double m, double eta, double sigma2,
                                                    Rng& rng) {
  if (M < 1) throw std::invalid_argument("sample_interfering_coefficient: M must be >= 1");
  ComplexVector h;
  double norm = 0.0;
  do {
    h = sample_gu_channel(M, sigma2, rng);
    norm = h.norm();
  } while (norm == 0.0);
  const ComplexVector f = sample_au_channel(M, m, eta, rng);
  return h.dot(f) / norm;  // Eigen's dot conjugates the left operand
}

}  // namespace skycov
