// stats.hpp
//
// Small helpers for Monte Carlo frequency checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

namespace robandit {

// Standard deviation of a frequency estimated from n Bernoulli(p) trials.
inline double binomial_sigma(double p, std::size_t n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

// Wilson score interval for successes out of n trials.
inline std::pair<double, double> wilson_interval(std::size_t successes, std::size_t n,
                                                 double z = 1.959963984540054) {
    if (n == 0) return {0.0, 1.0};
    const double nn = static_cast<double>(n);
    const double ph = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (ph + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(ph * (1.0 - ph) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

} // namespace robandit
