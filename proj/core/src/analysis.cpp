// SPDX-License-Identifier: Apache-2.0
#include "skycov/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "skycov/antenna.hpp"
#include "skycov/geometry.hpp"
#include "skycov/parallel.hpp"

namespace skycov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Tower components below this are treated as converged regardless of their
// relative change; they sit far beneath anything the recursion can resolve.
constexpr double kTowerAbsFloor = 1e-250;

LinkClass tagged_class_for(const SystemParams& params, UserKind user, const LinkClass& link) {
  return user == UserKind::Ground ? LinkClass::nlos(params) : link;
}

// Interfering-link classes seen by the typical user: ground users only see
// NLoS links, aerial users see the LoS/NLoS mixture at their altitude.
struct InterfererClasses {
  std::array<LinkClass, 2> links;
  int count;
};

InterfererClasses interferer_classes(const SystemParams& params, UserKind user) {
  if (user == UserKind::Ground) return {{LinkClass::nlos(params), LinkClass::nlos(params)}, 1};
  return {{LinkClass::los(params), LinkClass::nlos(params)}, 2};
}

// LoS breakpoints past the point where P_l drops below this are not panel
// aligned; the LoS share there is far beneath the quadrature tolerances.
constexpr double kLosNegligible = 1e-18;

std::vector<double> resolved_los_breakpoints(const SystemParams& params, double h_user, double lo,
                                             double hi) {
  std::vector<double> b = los_breakpoints(params, lo, hi);
  const auto end = std::partition_point(b.begin(), b.end(), [&](double x) {
    return los_probability(x, params, h_user) >= kLosNegligible;
  });
  if (end != b.end()) b.erase(end + 1, b.end());
  return b;
}

// log binom(K+k-1, k) is never needed explicitly: the negative-binomial pmf
// terms are generated by ratio, starting from (1+x)^-K evaluated in log space.
void accumulate_pmf(double x, int K, double weight, std::vector<double>& acc) {
  const std::size_t n = acc.size();
  const double log_head = -static_cast<double>(K) * std::log1p(x);
  acc[0] += weight * -std::expm1(log_head);
  if (n == 1) return;
  const double y = x / (1.0 + x);
  if (log_head > -700.0) {
    double term = std::exp(log_head);
    for (std::size_t k = 1; k < n; ++k) {
      term *= y * static_cast<double>(K + static_cast<int>(k) - 1) / static_cast<double>(k);
      acc[k] += weight * term;
    }
    return;
  }
  // (1+x)^-K underflows: evaluate each term fully in log space.
  const double log_y = std::log(y);
  double log_binom = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    log_binom += std::log(static_cast<double>(K + static_cast<int>(k) - 1) / static_cast<double>(k));
    acc[k] += weight * std::exp(log_binom + static_cast<double>(k) * log_y + log_head);
  }
}

// Integrals I_0 = int sum_w P_w (1 - (1+x_w)^-K) nu dnu and
// I_k = int sum_w P_w NB_k(x_w) nu dnu over [r, nu_max], certified by doubling.
CertifiedIntegral interference_integrals(const LaplaceContext& ctx, int count,
                                         const AnalysisOptions& opts) {
  const SystemParams& p = ctx.params;
  const double nu_max = window_radius(p.lambda_bs, opts.window_tail_mass);
  const auto n = static_cast<std::size_t>(count);
  if (ctx.r >= nu_max || ctx.s == 0.0) return {std::vector<double>(n, 0.0), 0.0, 0};

  const double h_user = user_altitude(p, ctx.user);
  const double dh2 = (h_user - p.h_bs) * (h_user - p.h_bs);
  const InterfererClasses classes = interferer_classes(p, ctx.user);

  // log of s * spread * P_t / K * A_w; the gain and distance enter per node.
  std::array<double, 2> log_prefactor{};
  for (int w = 0; w < classes.count; ++w) {
    log_prefactor[w] = std::log(ctx.s * ctx.spread() * p.P_t / p.K * classes.links[w].A);
  }

  std::vector<double> breaks = gain_breakpoints(p, h_user, ctx.r, nu_max);
  if (ctx.user == UserKind::Aerial) {
    const auto los = resolved_los_breakpoints(p, h_user, ctx.r, nu_max);
    breaks.insert(breaks.end(), los.begin(), los.end());
  }
  std::vector<double> edges = make_panels(ctx.r, nu_max, breaks, opts.inner_layout);

  auto integrate = [&](std::span<const double> e) {
    std::vector<double> acc(n, 0.0);
    std::vector<double> panel_los(e.size());
    std::vector<double> panel_log_gain(e.size());
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      // Gain and LoS probability are constant on each panel by construction.
      const double mid = 0.5 * (e[i] + e[i + 1]);
      panel_los[i] = ctx.user == UserKind::Aerial ? los_probability(mid, p, h_user) : 0.0;
      panel_log_gain[i] = std::log(directivity_gain(mid, h_user, p));
    }
    for_each_node(e, [&](double nu, double weight, std::size_t panel) {
      const double log_d2 = std::log(nu * nu + dh2);
      for (int w = 0; w < classes.count; ++w) {
        const LinkClass& link = classes.links[w];
        double prob = 1.0;
        if (ctx.user == UserKind::Aerial) {
          prob = link.kind == LinkKind::LoS ? panel_los[panel] : 1.0 - panel_los[panel];
        }
        if (prob <= 0.0) continue;
        const double x =
            std::exp(log_prefactor[w] + panel_log_gain[panel] - 0.5 * link.alpha * log_d2);
        accumulate_pmf(x, p.K, weight * prob * nu, acc);
      }
    });
    return acc;
  };
  return certify(std::move(edges), opts.inner_rel_tol, kTowerAbsFloor, opts.max_doublings,
                 integrate, "interference integral");
}

}  // namespace

LaplaceContext make_context(const SystemParams& params, UserKind user, double r,
                            const LinkClass& link) {
  LaplaceContext ctx{params, user, tagged_class_for(params, user, link), r, 0.0};
  const double h_user = user_altitude(params, user);
  const double z = zeta(r, h_user, ctx.link, params);
  ctx.s = params.theta * params.K * ctx.link.m / (ctx.spread() * params.P_t * z);
  return ctx;
}

TowerResult toeplitz_entries(const LaplaceContext& ctx, int count, const AnalysisOptions& opts) {
  if (count < 1) throw std::invalid_argument("toeplitz_entries: count must be >= 1");
  const SystemParams& p = ctx.params;
  const CertifiedIntegral integrals = interference_integrals(ctx, count, opts);

  // Intra-cell beams share the tagged link's path gain: x0 = s * spread * P_v(r)^2.
  const double h_user = user_altitude(p, ctx.user);
  const double x0 = ctx.s * ctx.spread() * p.P_t / p.K * zeta(ctx.r, h_user, ctx.link, p);
  const double intra = static_cast<double>(p.K - 1);
  const double scale = kTwoPi * p.lambda_bs;

  TowerResult out;
  out.residual = integrals.residual;
  out.entries.resize(static_cast<std::size_t>(count));
  out.entries[0] = -intra * std::log1p(x0) - scale * integrals.values[0];
  const double y0 = x0 / (1.0 + x0);
  double y0_pow = 1.0;
  for (int k = 1; k < count; ++k) {
    y0_pow *= y0;
    const double log_part = intra > 0.0 ? intra / k * y0_pow : 0.0;
    out.entries[static_cast<std::size_t>(k)] = log_part + scale * integrals.values[static_cast<std::size_t>(k)];
  }
  for (int k = 1; k < count; ++k) {
    if (!(out.entries[static_cast<std::size_t>(k)] >= 0.0)) {
      throw ConsistencyError("Toeplitz entry t_" + std::to_string(k) + " is negative");
    }
  }
  return out;
}

TowerResult toeplitz_entries(const LaplaceContext& ctx, const AnalysisOptions& opts) {
  return toeplitz_entries(ctx, ctx.matrix_size(), opts);
}

double varpi(const LaplaceContext& ctx, const AnalysisOptions& opts) {
  return toeplitz_entries(ctx, 1, opts).entries[0];
}

double varpi_derivative(const LaplaceContext& ctx, int k, const AnalysisOptions& opts) {
  if (k < 1) throw std::invalid_argument("varpi_derivative: order must be >= 1");
  if (!(ctx.s > 0.0)) throw std::domain_error("varpi_derivative: needs s > 0");
  const double t_k = toeplitz_entries(ctx, k + 1, opts).entries[static_cast<std::size_t>(k)];
  if (t_k == 0.0) return 0.0;
  // varpi^(k) = t_k * k! / (-s)^k
  const double magnitude = std::exp(std::log(t_k) + std::lgamma(k + 1.0) - k * std::log(ctx.s));
  return (k % 2 == 0) ? magnitude : -magnitude;
}

namespace {

struct Conditional {
  double value;
  double residual;
};

Conditional conditional_eval(const SystemParams& params, UserKind user, double r,
                             const LinkClass& link, const AnalysisOptions& opts) {
  const LaplaceContext ctx = make_context(params, user, r, link);
  TowerResult tower = toeplitz_entries(ctx, opts);
  const double value = conditional_scdp(tower.entries);
  if (opts.cross_check) {
    const double dense = toeplitz_exp_l1_norm(tower.entries);
    if (std::abs(dense - value) > 1e-10) {
      throw ConsistencyError("recursion and dense exponential disagree at r = " +
                             std::to_string(r));
    }
  }
  return {value, tower.residual};
}

}  // namespace

double conditional_scdp_at(const SystemParams& params, UserKind user, double r,
                           const LinkClass& link, const AnalysisOptions& opts) {
  return conditional_eval(params, user, r, link, opts).value;
}

ScdpResult scdp(const SystemParams& params, UserKind user, const AnalysisOptions& opts) {
  params.validate();
  const double r_max = window_radius(params.lambda_bs, opts.window_tail_mass);
  const double h_user = user_altitude(params, user);

  std::vector<double> breaks = gain_breakpoints(params, h_user, 0.0, r_max);
  if (user == UserKind::Aerial) {
    const auto los = resolved_los_breakpoints(params, h_user, 0.0, r_max);
    breaks.insert(breaks.end(), los.begin(), los.end());
  }
  PanelLayout layout{0.0, r_max / std::max(1, opts.outer_min_panels)};
  std::vector<double> edges = make_panels(0.0, r_max, breaks, layout);

  ScdpResult result;
  auto integrate = [&](std::span<const double> e) {
    std::vector<double> rs, ws;
    for_each_node(e, [&](double r, double w, std::size_t) {
      rs.push_back(r);
      ws.push_back(w);
    });
    std::vector<double> values(rs.size(), 0.0);
    std::vector<double> residuals(rs.size(), 0.0);
    parallel_for(rs.size(), opts.threads, [&](std::size_t i) {
      const double r = rs[i];
      try {
        double value = 0.0;
        double residual = 0.0;
        if (user == UserKind::Ground) {
          const Conditional c = conditional_eval(params, user, r, LinkClass::nlos(params), opts);
          value = c.value;
          residual = c.residual;
        } else {
          const double p_los = los_probability(r, params, h_user);
          if (p_los > 0.0) {
            const Conditional c = conditional_eval(params, user, r, LinkClass::los(params), opts);
            value += p_los * c.value;
            residual = std::max(residual, c.residual);
          }
          if (p_los < 1.0) {
            const Conditional c = conditional_eval(params, user, r, LinkClass::nlos(params), opts);
            value += (1.0 - p_los) * c.value;
            residual = std::max(residual, c.residual);
          }
        }
        values[i] = value * nearest_distance_pdf(r, params.lambda_bs);
        residuals[i] = residual;
      } catch (const NumericalFailure& e) {
        throw NumericalFailure(std::string(e.what()) + " at r = " + std::to_string(r),
                               e.residual());
      }
    });
    double total = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      total += ws[i] * values[i];
      result.inner_residual = std::max(result.inner_residual, residuals[i]);
    }
    result.conditional_evaluations += static_cast<long>(rs.size());
    return std::vector<double>{total};
  };

  const CertifiedIntegral outer =
      certify(std::move(edges), opts.outer_rel_tol, 1e-14, opts.max_doublings, integrate,
              "serving-distance integral");
  // Condition on a BS inside the window, matching the simulator's redraw rule.
  const double window_mass = nearest_distance_cdf(r_max, params.lambda_bs);
  result.value = std::clamp(outer.values[0] / window_mass, 0.0, 1.0);
  result.outer_residual = outer.residual;
  return result;
}

double scdp_au(const SystemParams& params, const AnalysisOptions& opts) {
  return scdp(params, UserKind::Aerial, opts).value;
}

double scdp_gu(const SystemParams& params, const AnalysisOptions& opts) {
  return scdp(params, UserKind::Ground, opts).value;
}

}  // namespace skycov
