// SPDX-License-Identifier: Apache-2.0
#include "skycov/toeplitz.hpp"

#include <cmath>
#include <string>

namespace skycov {

void run_recursion(ToeplitzExpState& state) {
  const auto& t = state.entries;
  const std::size_t n = t.size();
  state.partials.assign(n, 0.0);
  if (n == 0) return;
  auto& p = state.partials;
  p[0] = std::exp(t[0]);
  for (std::size_t i = 1; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t l = 0; l < i; ++l) {
      acc += static_cast<double>(i - l) * p[l] * t[i - l];
    }
    p[i] = acc / static_cast<double>(i);
  }
}

double conditional_scdp(ToeplitzExpState& state) {
  run_recursion(state);
  double sum = 0.0;
  for (double p : state.partials) sum += p;
  if (sum > 1.0 + 1e-9) {
    throw ConsistencyError("conditional SCDP " + std::to_string(sum) +
                           " exceeds one; Toeplitz entries are inconsistent");
  }
  return sum;
}

double conditional_scdp(std::span<const double> entries) {
  ToeplitzExpState state{{entries.begin(), entries.end()}, {}};
  return conditional_scdp(state);
}

Eigen::MatrixXd toeplitz_matrix(std::span<const double> entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) T(i, j) = entries[static_cast<std::size_t>(i - j)];
  }
  return T;
}

double toeplitz_exp_l1_norm(std::span<const double> entries) {
  if (entries.empty()) return 0.0;
  const auto n = static_cast<Eigen::Index>(entries.size());
  Eigen::MatrixXd N = toeplitz_matrix(entries);
  N.diagonal().setZero();

  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd sum = term;
  for (Eigen::Index j = 1; j < n; ++j) {
    term = (term * N) / static_cast<double>(j);
    sum += term;
  }
  sum *= std::exp(entries[0]);
  return sum.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace skycov
