// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace skycov {

/// Raised when Toeplitz entries produce a coverage value above one, which
/// only happens when the derivative tower is wrong.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// First column t_0..t_{n-1} of a lower-triangular Toeplitz matrix T and the
/// first column p_0..p_{n-1} of exp(T).
struct ToeplitzExpState {
  std::vector<double> entries;
  std::vector<double> partials;

  std::size_t size() const { return entries.size(); }
};

/// Fills `partials` with p_0 = exp(t_0), p_i = sum_{l<i} (i-l)/i * p_l * t_{i-l}.
void run_recursion(ToeplitzExpState& state);

/// sum_i p_i, i.e. the induced l1 norm of exp(T) for entries with t_k >= 0
/// (k >= 1). Throws ConsistencyError if the sum exceeds 1 + 1e-9.
double conditional_scdp(std::span<const double> entries);
double conditional_scdp(ToeplitzExpState& state);

/// Dense lower-triangular Toeplitz matrix with the given first column.
Eigen::MatrixXd toeplitz_matrix(std::span<const double> entries);

/// Induced l1 norm of exp(T) from the exact finite sum
/// exp(t_0) * sum_{j<n} N^j / j!, where N = T - t_0 I is nilpotent.
double toeplitz_exp_l1_norm(std::span<const double> entries);

}  // namespace skycov
