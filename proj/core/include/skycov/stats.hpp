// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace skycov {

/// Kolmogorov-Smirnov distance between the empirical law of `samples` and
/// a continuous CDF. Sorts `samples` in place.
double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf);

/// CDF of Gamma(shape, scale) at x.
double gamma_cdf(double x, double shape, double scale);

}  // namespace skycov
