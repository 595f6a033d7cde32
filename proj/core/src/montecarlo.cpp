// SPDX-License-Identifier: Apache-2.0
#include "skycov/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "skycov/antenna.hpp"
#include "skycov/fading.hpp"
#include "skycov/geometry.hpp"
#include "skycov/parallel.hpp"
#include "skycov/random.hpp"

namespace skycov {

void McConfig::validate() const {
  if (n_deployments < 1) throw std::invalid_argument("McConfig: n_deployments must be >= 1");
  if (n_fading_per_deployment < 1)
    throw std::invalid_argument("McConfig: n_fading_per_deployment must be >= 1");
  if (!(window_tail_mass > 0.0 && window_tail_mass <= 1e-3))
    throw std::invalid_argument("McConfig: window_tail_mass must lie in (0, 1e-3]");
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::CB: return "cb";
    case Scheme::ZF: return "zf";
    case Scheme::SingleAntenna: return "single";
  }
  return "?";
}

std::string_view to_string(Fidelity fidelity) {
  return fidelity == Fidelity::FullPhysical ? "full_physical" : "gain_level";
}

namespace {

constexpr std::uint64_t kAerialStream = 0xa0;
constexpr std::uint64_t kGroundStream = 0x90;
constexpr std::uint64_t kSeStream = 0x5e;

LinkClass class_of(const SystemParams& p, LinkKind kind) {
  return kind == LinkKind::LoS ? LinkClass::los(p) : LinkClass::nlos(p);
}

// Small-scale channel from one BS to the typical user.
ComplexVector user_channel(const SystemParams& p, UserKind user, const LinkClass& link, Rng& rng) {
  if (user == UserKind::Ground) return sample_gu_channel(p.M, p.sigma2, rng);
  return sample_au_channel(p.M, link.m, p.eta, rng);
}

bool well_conditioned(const Eigen::MatrixXcd& H) {
  const Eigen::MatrixXcd gram = H.adjoint() * H;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(gram);
  return lu.isInvertible();
}

// Fills H with K iid CN(0, sigma2) columns, redrawing rank-deficient draws for ZF.
Eigen::MatrixXcd other_users(const SystemParams& p, int columns, Scheme scheme, Rng& rng) {
  Eigen::MatrixXcd H(p.M, columns);
  do {
    for (int k = 0; k < columns; ++k) H.col(k) = sample_gu_channel(p.M, p.sigma2, rng);
  } while (scheme == Scheme::ZF && !well_conditioned(H));
  return H;
}

struct BeamGains {
  double intended;
  double intra;
};

// Tagged-cell gains seen by the typical user whose channel is `f`.
BeamGains tagged_gains_physical(const SystemParams& p, Scheme scheme, const ComplexVector& f,
                                Rng& rng) {
  if (p.K == 1 || scheme == Scheme::CB) {
    BeamGains g{f.squaredNorm(), 0.0};
    for (int k = 1; k < p.K; ++k) {
      const ComplexVector h = sample_gu_channel(p.M, p.sigma2, rng);
      g.intra += std::norm(h.dot(f)) / h.squaredNorm();
    }
    return g;
  }
  Eigen::MatrixXcd H(p.M, p.K);
  do {
    H.col(0) = f;
    for (int k = 1; k < p.K; ++k) H.col(k) = sample_gu_channel(p.M, p.sigma2, rng);
  } while (!well_conditioned(H));
  const Eigen::MatrixXcd W = precoders(H, scheme);
  const Eigen::RowVectorXcd seen = f.adjoint() * W;
  BeamGains g{std::norm(seen(0)), 0.0};
  for (int k = 1; k < p.K; ++k) g.intra += std::norm(seen(k));
  return g;
}

// Sum over the K beams of an interfering BS as seen through channel f.
double interferer_gain_physical(const SystemParams& p, Scheme scheme, const ComplexVector& f,
                                Rng& rng) {
  const Eigen::MatrixXcd W = precoders(other_users(p, p.K, scheme, rng), scheme);
  return (f.adjoint() * W).cwiseAbs2().sum();
}

struct SirContext {
  const SystemParams& p;
  const McConfig& mc;
  UserKind user;
  double h_user;
  double beam_power;  // P_t / K
};

double draw_sir(const SirContext& c, const Deployment& d, Rng& rng) {
  const SystemParams& p = c.p;
  const LinkClass tagged = class_of(p, d.tagged_state);
  const double signal_path = c.beam_power * zeta(d.tagged_distance, c.h_user, tagged, p);
  const double spread = c.user == UserKind::Aerial ? p.eta : p.sigma2;

  double intended = 0.0;
  double intra = 0.0;
  double inter = 0.0;

  if (c.mc.scheme == Scheme::SingleAntenna) {
    auto gain = [&](const LinkClass& link) {
      const double m = c.user == UserKind::Aerial ? link.m : 1.0;
      return GammaGain{m, spread / m}.sample(rng);
    };
    intended = gain(tagged);
    for (const auto& j : d.interferers) {
      const LinkClass link = class_of(p, j.los_state);
      inter += c.beam_power * zeta(j.distance, c.h_user, link, p) * gain(link);
    }
  } else if (c.mc.fidelity == Fidelity::GainLevel) {
    const int m = c.user == UserKind::Aerial ? tagged.m : 1;
    intended = table1_gain(LinkRole::Intended, c.user, p, m).sample(rng);
    if (p.K > 1) intra = GammaGain{static_cast<double>(p.K - 1), spread}.sample(rng);
    const GammaGain aggregate{static_cast<double>(p.K), spread};
    for (const auto& j : d.interferers) {
      const LinkClass link = class_of(p, j.los_state);
      inter += c.beam_power * zeta(j.distance, c.h_user, link, p) * aggregate.sample(rng);
    }
  } else {
    const ComplexVector f = user_channel(p, c.user, tagged, rng);
    const BeamGains g = tagged_gains_physical(p, c.mc.scheme, f, rng);
    intended = g.intended;
    intra = g.intra;
    for (const auto& j : d.interferers) {
      const LinkClass link = class_of(p, j.los_state);
      const ComplexVector fj = user_channel(p, c.user, link, rng);
      inter += c.beam_power * zeta(j.distance, c.h_user, link, p) *
               interferer_gain_physical(p, c.mc.scheme, fj, rng);
    }
  }

  const double interference = signal_path * intra + inter;
  const double signal = signal_path * intended;
  if (interference == 0.0) return std::numeric_limits<double>::infinity();
  return signal / interference;
}

std::vector<SirSample> run(const SystemParams& params, const McConfig& mc, UserKind user) {
  params.validate();
  mc.validate();
  if (mc.scheme == Scheme::ZF && mc.fidelity != Fidelity::FullPhysical)
    throw std::invalid_argument("ZF precoding requires full_physical fidelity");

  const double radius = window_radius(params.lambda_bs, mc.window_tail_mass);
  const SirContext ctx{params, mc, user, user_altitude(params, user),
                       params.P_t / params.K};
  const std::uint64_t tag = user == UserKind::Aerial ? kAerialStream : kGroundStream;
  const auto blocks = static_cast<std::size_t>(mc.n_fading_per_deployment);

  std::vector<SirSample> out(static_cast<std::size_t>(mc.n_deployments) * blocks);
  parallel_for(static_cast<std::size_t>(mc.n_deployments), mc.threads, [&](std::size_t d) {
    Rng rng = substream(mc.seed, tag, d);
    const Deployment dep = sample_deployment(params, radius, user, rng);
    for (std::size_t f = 0; f < blocks; ++f) {
      out[d * blocks + f] = {draw_sir(ctx, dep, rng), user, mc.scheme, static_cast<long>(d),
                             static_cast<int>(f)};
    }
  });
  return out;
}

}  // namespace

Eigen::MatrixXcd precoders(const Eigen::MatrixXcd& H, Scheme scheme) {
  Eigen::MatrixXcd W;
  if (scheme == Scheme::ZF) {
    const Eigen::MatrixXcd gram = H.adjoint() * H;
    W = H * gram.inverse();
  } else {
    W = H;
  }
  for (Eigen::Index k = 0; k < W.cols(); ++k) W.col(k).normalize();
  return W;
}

std::vector<SirSample> simulate_sir(const SystemParams& params, const McConfig& mc,
                                    UserKind user) {
  if (mc.scheme == Scheme::SingleAntenna) return baseline_single_antenna(params, mc, user);
  return run(params, mc, user);
}

std::vector<SirSample> baseline_single_antenna(const SystemParams& params, const McConfig& mc,
                                               UserKind user) {
  SystemParams single = params;
  single.M = 1;
  single.K = 1;
  McConfig cfg = mc;
  cfg.scheme = Scheme::SingleAntenna;
  return run(single, cfg, user);
}

Estimate estimate_scdp(std::span<const SirSample> samples, double theta) {
  if (samples.size() < 1000) throw std::invalid_argument("estimate_scdp: needs >= 1000 samples");

  // Per-deployment success counts; clusters are consecutive in simulator output
  // but grouping by id keeps the estimate valid for any ordering.
  std::map<long, std::pair<double, double>> clusters;
  double hits = 0.0;
  for (const auto& s : samples) {
    const double hit = s.sir > theta ? 1.0 : 0.0;
    hits += hit;
    auto& c = clusters[s.deployment_id];
    c.first += hit;
    c.second += 1.0;
  }
  const double n = static_cast<double>(samples.size());
  const double p = hits / n;
  // Ratio-estimator variance over clusters.
  double ss = 0.0;
  for (const auto& [id, c] : clusters) {
    const double resid = c.first - p * c.second;
    ss += resid * resid;
  }
  const double g = static_cast<double>(clusters.size());
  double var = g > 1.0 ? ss * g / (g - 1.0) / (n * n) : p * (1.0 - p) / n;
  var = std::max(var, 0.0);
  return {p, 1.96 * std::sqrt(var)};
}

Estimate estimate_se(const SystemParams& params, const McConfig& mc) {
  params.validate();
  mc.validate();
  if (mc.scheme != Scheme::CB) throw std::invalid_argument("estimate_se supports CB only");

  const SystemParams& p = params;
  const double radius = window_radius(p.lambda_bs, mc.window_tail_mass);
  const double cell_radius = 1.0 / std::sqrt(std::numbers::pi * p.lambda_bs);
  const double beam_power = p.P_t / p.K;
  const SirContext au_ctx{p, mc, UserKind::Aerial, p.h_d, beam_power};
  const LinkClass nlos = LinkClass::nlos(p);
  const auto blocks = static_cast<std::size_t>(mc.n_fading_per_deployment);

  std::vector<double> rates(static_cast<std::size_t>(mc.n_deployments) * blocks);
  parallel_for(static_cast<std::size_t>(mc.n_deployments), mc.threads, [&](std::size_t d) {
    Rng rng = substream(mc.seed, kSeStream, d);
    const Deployment dep = sample_deployment(p, radius, UserKind::Aerial, rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // GU drop positions are fixed per deployment, like the BS layout.
    struct Gu {
      double serving;
      std::vector<double> interferer_distance;
    };
    std::vector<Gu> gus;
    for (int k = 1; k < p.K; ++k) {
      const double rho = cell_radius * std::sqrt(unit(rng));
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      const double gx = dep.tagged_x + rho * std::cos(phi);
      const double gy = dep.tagged_y + rho * std::sin(phi);
      Gu gu{std::hypot(gx - dep.tagged_x, gy - dep.tagged_y), {}};
      for (const auto& j : dep.interferers) {
        gu.interferer_distance.push_back(std::hypot(gx - j.x, gy - j.y));
      }
      gus.push_back(std::move(gu));
    }

    for (std::size_t f = 0; f < blocks; ++f) {
      double rate = std::log2(1.0 + draw_sir(au_ctx, dep, rng));
      for (const Gu& gu : gus) {
        const double path = beam_power * zeta(gu.serving, p.h_g, nlos, p);
        double intended = 0.0;
        double intra = 0.0;
        double inter = 0.0;
        if (mc.fidelity == Fidelity::GainLevel) {
          intended = table1_gain(LinkRole::Intended, UserKind::Ground, p).sample(rng);
          intra = GammaGain{static_cast<double>(p.K - 1), p.sigma2}.sample(rng);
          const GammaGain aggregate{static_cast<double>(p.K), p.sigma2};
          for (double u : gu.interferer_distance) {
            inter += beam_power * zeta(u, p.h_g, nlos, p) * aggregate.sample(rng);
          }
        } else {
          const ComplexVector h = sample_gu_channel(p.M, p.sigma2, rng);
          const BeamGains g = tagged_gains_physical(p, Scheme::CB, h, rng);
          intended = g.intended;
          intra = g.intra;
          for (double u : gu.interferer_distance) {
            const ComplexVector fj = sample_gu_channel(p.M, p.sigma2, rng);
            inter += beam_power * zeta(u, p.h_g, nlos, p) *
                     interferer_gain_physical(p, Scheme::CB, fj, rng);
          }
        }
        rate += std::log2(1.0 + path * intended / (path * intra + inter));
      }
      rates[d * blocks + f] = rate;
    }
  });

  // Cluster by deployment for the half-width, as in estimate_scdp.
  const double n = static_cast<double>(rates.size());
  double mean = 0.0;
  for (double r : rates) mean += r;
  mean /= n;
  double ss = 0.0;
  for (std::size_t d = 0; d < static_cast<std::size_t>(mc.n_deployments); ++d) {
    double resid = 0.0;
    for (std::size_t f = 0; f < blocks; ++f) resid += rates[d * blocks + f] - mean;
    ss += resid * resid;
  }
  const double g = static_cast<double>(mc.n_deployments);
  const double var = g > 1.0 ? ss * g / (g - 1.0) / (n * n) : 0.0;
  return {mean, 1.96 * std::sqrt(var)};
}

}  // namespace skycov
