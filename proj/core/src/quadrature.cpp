// SPDX-License-Identifier: Apache-2.0
#include "skycov/quadrature.hpp"

#include <algorithm>

#include <boost/math/quadrature/gauss.hpp>

namespace skycov {

namespace {

constexpr unsigned kGaussOrder = 10;

GaussRule build_rule() {
  using Gauss = boost::math::quadrature::gauss<double, kGaussOrder>;
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  GaussRule rule;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      rule.nodes.push_back(0.0);
      rule.weights.push_back(w[i]);
      continue;
    }
    rule.nodes.push_back(-x[i]);
    rule.weights.push_back(w[i]);
    rule.nodes.push_back(x[i]);
    rule.weights.push_back(w[i]);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_rule() {
  static const GaussRule rule = build_rule();
  return rule;
}

std::vector<double> make_panels(double lo, double hi, std::span<const double> breakpoints,
                                const PanelLayout& layout) {
  if (!(hi > lo)) throw std::invalid_argument("make_panels: need hi > lo");
  std::vector<double> cuts{lo};
  for (double b : breakpoints) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> edges{cuts.front()};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    // Geometric pieces when the segment stays away from zero, then a width cap.
    std::vector<double> seg{a};
    if (a > 0.0 && layout.max_ratio > 1.0) {
      const int n = static_cast<int>(std::ceil(std::log(b / a) / std::log(layout.max_ratio) - 1e-12));
      const double q = std::pow(b / a, 1.0 / std::max(n, 1));
      for (int j = 1; j < n; ++j) seg.push_back(a * std::pow(q, j));
    }
    seg.push_back(b);
    for (std::size_t j = 0; j + 1 < seg.size(); ++j) {
      const double sa = seg[j];
      const double sb = seg[j + 1];
      int n = 1;
      if (layout.max_width > 0.0) {
        n = std::max(1, static_cast<int>(std::ceil((sb - sa) / layout.max_width - 1e-12)));
      }
      for (int k = 1; k < n; ++k) edges.push_back(sa + (sb - sa) * k / n);
      edges.push_back(sb);
    }
  }
  return edges;
}

std::vector<double> bisect_panels(std::span<const double> edges) {
  std::vector<double> out;
  out.reserve(2 * edges.size());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    out.push_back(edges[i]);
    out.push_back(0.5 * (edges[i] + edges[i + 1]));
  }
  if (!edges.empty()) out.push_back(edges.back());
  return out;
}

}  // namespace skycov
