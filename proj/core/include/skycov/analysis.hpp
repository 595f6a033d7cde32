// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "skycov/params.hpp"
#include "skycov/quadrature.hpp"
#include "skycov/toeplitz.hpp"

namespace skycov {

struct AnalysisOptions {
  double window_tail_mass = 1e-6;  // sets both r_max and nu_max
  double inner_rel_tol = 1e-8;
  double outer_rel_tol = 1e-6;
  int max_doublings = 8;
  PanelLayout inner_layout{1.25, 0.0};
  int outer_min_panels = 24;  // width cap r_max / outer_min_panels
  /// Compare every conditional SCDP against the dense matrix-exponential
  /// finite sum and throw ConsistencyError above 1e-10. Expensive.
  bool cross_check = false;
  unsigned threads = 1;
};

/// Laplace argument and tagged-link data for one conditional evaluation.
/// `spread` is eta for aerial users and sigma2 for ground users.
struct LaplaceContext {
  SystemParams params;
  UserKind user;
  LinkClass link;  // class of the tagged link
  double r;        // serving horizontal distance [m]
  double s;        // Laplace argument

  int matrix_size() const { return params.M * link.m; }
  double spread() const { return user == UserKind::Aerial ? params.eta : params.sigma2; }
};

/// Builds the context with s = theta * K * m / (spread * P_t * zeta(r)).
/// Ground users are forced onto the NLoS Rayleigh class.
LaplaceContext make_context(const SystemParams& params, UserKind user, double r,
                            const LinkClass& link);

/// Entries t_0..t_{n-1} of the Toeplitz generator together with the largest
/// relative node-doubling residual of the shared inner quadrature.
struct TowerResult {
  std::vector<double> entries;
  double residual = 0.0;
};

/// t_k = (-s)^k / k! * varpi^(k)(s) for k < count, from closed-form
/// derivatives of the intra-cell log term and of the PPP integrand.
TowerResult toeplitz_entries(const LaplaceContext& ctx, int count,
                             const AnalysisOptions& opts = {});

/// Same with count = matrix_size().
TowerResult toeplitz_entries(const LaplaceContext& ctx, const AnalysisOptions& opts = {});

/// Conditional log-Laplace transform of the aggregate interference.
double varpi(const LaplaceContext& ctx, const AnalysisOptions& opts = {});

/// k-th derivative of varpi with respect to s (k >= 1).
double varpi_derivative(const LaplaceContext& ctx, int k, const AnalysisOptions& opts = {});

/// P(SIR > theta | r, tagged class) via the Toeplitz recursion.
double conditional_scdp_at(const SystemParams& params, UserKind user, double r,
                           const LinkClass& link, const AnalysisOptions& opts = {});

struct ScdpResult {
  double value = 0.0;
  double outer_residual = 0.0;
  double inner_residual = 0.0;  // max over all conditional evaluations
  long conditional_evaluations = 0;
};

/// Unconditional SCDP: LoS/NLoS-weighted conditional SCDP averaged over the
/// nearest-BS distance law. Ground users use the NLoS-only pipeline.
ScdpResult scdp(const SystemParams& params, UserKind user, const AnalysisOptions& opts = {});

double scdp_au(const SystemParams& params, const AnalysisOptions& opts = {});
double scdp_gu(const SystemParams& params, const AnalysisOptions& opts = {});

}  // namespace skycov
