// estimators.hpp
//
// Empirical median and MAD, sample-size formulas and confidence intervals
// under contamination.
#pragma once

#include <cstdint>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "robandit/distributions.hpp"

namespace robandit {

// Odd n: middle order statistic. Even n: average of the two middle ones.
double empirical_median(std::span<const double> xs);
// Median of |x_i - empirical_median(xs)|.
double empirical_mad(std::span<const double> xs);

struct EstimationParams {
    double eps0 = 0.0;
    FamilyParams family;
    AdversaryModel model = AdversaryModel::Oblivious;
};

// Throw InfeasibleRegime when eps0 is too large for median (resp. MAD)
// estimation at this t_bar and B.
void check_median_regime(const EstimationParams& params);
void check_mad_regime(const EstimationParams& params);

// Corruption level seen by the median: eps0 / (2(1 - eps0)) for oblivious and
// prescient adversaries, eps0 for malicious ones.
double effective_corruption(double eps0, AdversaryModel model);

std::uint64_t sample_size_median(double E, double delta, const EstimationParams& params);
std::uint64_t sample_size_mad(double E, double delta, const EstimationParams& params);

// Smallest n for which the concentration bounds apply (real valued).
double median_sample_floor(double delta, const EstimationParams& params);
double mad_sample_floor(double delta, const EstimationParams& params);

enum class Statistic { Median, Mad };
const char* to_string(Statistic s);

struct RobustEstimateReport {
    double estimate = 0.0;
    double bias_U = 0.0;
    double half_width_E = 0.0;
    std::uint64_t n = 0;
    AdversaryModel model = AdversaryModel::Oblivious;
    Statistic statistic = Statistic::Median;

    double lower() const { return estimate - (bias_U + half_width_E); }
    double upper() const { return estimate + (bias_U + half_width_E); }
    bool covers(double v) const { return lower() <= v && v <= upper(); }
};

// Throws TooFewSamples when xs is shorter than the corresponding floor.
RobustEstimateReport estimate_median_ci(std::span<const double> xs, double delta,
                                        const EstimationParams& params, double m2_used);
RobustEstimateReport estimate_mad_ci(std::span<const double> xs, double delta,
                                     const EstimationParams& params, double m2_used);

// Order-statistic window that must contain the empirical median of a batch in
// which s < n/2 of the n clean values were replaced: [Y_(ceil(n/2) - s),
// Y_(floor(n/2) + 1 + s)], 1-indexed. ys need not be sorted.
std::pair<double, double> sandwich_bounds(std::vector<double> ys, std::size_t s);

// Streaming median with O(log n) insertion.
class RunningMedian {
public:
    void push(double x);
    double median() const;
    std::size_t size() const { return low_.size() + high_.size(); }

private:
    std::priority_queue<double> low_;
    std::priority_queue<double, std::vector<double>, std::greater<>> high_;
};

} // namespace robandit
