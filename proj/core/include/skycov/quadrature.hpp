// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace skycov {

/// Raised when a certified integral does not settle within the allowed
/// number of node doublings. Carries the last relative residual.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Fixed-order Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Shared rule of the order used by every composite integral in the library.
const GaussRule& gauss_rule();

struct PanelLayout {
  double max_ratio = 1.25;  // right/left edge ratio for panels away from 0
  double max_width = 0.0;   // 0 disables the absolute width cap
};

/// Panel edges covering [lo, hi]. Every breakpoint inside (lo, hi) becomes an
/// edge so piecewise integrands stay smooth on each panel.
std::vector<double> make_panels(double lo, double hi, std::span<const double> breakpoints,
                                const PanelLayout& layout);

/// Splits every panel in two.
std::vector<double> bisect_panels(std::span<const double> edges);

/// Calls visit(x, w, panel) for every node of the composite rule.
template <class Visit>
void for_each_node(std::span<const double> edges, Visit&& visit) {
  const GaussRule& rule = gauss_rule();
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    const double mid = 0.5 * (edges[p + 1] + edges[p]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      visit(mid + half * rule.nodes[i], half * rule.weights[i], p);
    }
  }
}

struct CertifiedIntegral {
  std::vector<double> values;
  double residual = 0.0;  // max relative change at the final doubling
  int doublings = 0;
};

/// Integrates a vector-valued integrand on `edges`, doubling the panel count
/// until every component changes by less than rel_tol (relative, with an
/// absolute floor abs_floor). `integrate(edges)` returns the vector of
/// integrals for a given panel set.
template <class Integrate>
CertifiedIntegral certify(std::vector<double> edges, double rel_tol, double abs_floor,
                          int max_doublings, Integrate&& integrate, const char* label) {
  std::vector<double> coarse = integrate(std::span<const double>(edges));
  double residual = 0.0;
  for (int level = 1; level <= max_doublings; ++level) {
    edges = bisect_panels(edges);
    std::vector<double> fine = integrate(std::span<const double>(edges));
    residual = 0.0;
    bool converged = true;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      const double diff = std::abs(fine[i] - coarse[i]);
      const double scale = std::abs(fine[i]);
      if (diff > rel_tol * scale + abs_floor) converged = false;
      if (diff > abs_floor) residual = std::max(residual, scale > 0.0 ? diff / scale : diff);
    }
    if (converged) return {std::move(fine), residual, level};
    coarse = std::move(fine);
  }
  throw NumericalFailure(std::string(label) + ": quadrature did not converge", residual);
}

}  // namespace skycov
