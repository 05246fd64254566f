#include "robandit/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "robandit/error.hpp"

namespace robandit {

namespace {

double median_in_place(std::vector<double>& v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (n % 2 == 1) return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

void require_nonempty(std::span<const double> xs) {
    if (xs.empty()) throw Error(ErrorCode::EmptyInput, "empty sample");
}

void check_E_delta(double E, double delta) {
    if (!(E > 0.0)) throw Error(ErrorCode::InvalidArgument, "E must be positive");
    if (!(delta > 0.0 && delta < 1.0))
        throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
}

bool malicious(const EstimationParams& p) { return p.model == AdversaryModel::Malicious; }

double median_log_factor(double delta, const EstimationParams& p) {
    return std::log((malicious(p) ? 3.0 : 2.0) / delta);
}

double mad_log_factor(double delta, const EstimationParams& p) {
    return std::log((malicious(p) ? 6.0 : 4.0) / delta);
}

// t_bar minus the effective corruption; positive in the feasible regime.
double median_margin(const EstimationParams& p) {
    return p.family.t_bar - effective_corruption(p.eps0, p.model);
}

double mad_margin(const EstimationParams& p) {
    return std::min(p.family.t_bar, 1.0 / p.family.B) - effective_corruption(p.eps0, p.model);
}

std::uint64_t ceil_count(double x) {
    if (!std::isfinite(x) || x > 1e18)
        throw Error(ErrorCode::InfeasibleRegime, "sample size overflows");
    return static_cast<std::uint64_t>(std::ceil(x));
}

} // namespace

double empirical_median(std::span<const double> xs) {
    require_nonempty(xs);
    std::vector<double> v(xs.begin(), xs.end());
    return median_in_place(v);
}

double empirical_mad(std::span<const double> xs) {
    require_nonempty(xs);
    std::vector<double> v(xs.begin(), xs.end());
    const double m = median_in_place(v);
    for (double& x : v) x = std::fabs(x - m);
    return median_in_place(v);
}

double effective_corruption(double eps0, AdversaryModel model) {
    if (model == AdversaryModel::Malicious) return eps0;
    return eps0 / (2.0 * (1.0 - eps0));
}

void check_median_regime(const EstimationParams& p) {
    p.family.validate();
    if (!(p.eps0 >= 0.0 && p.eps0 < 0.5))
        throw Error(ErrorCode::InfeasibleRegime, "eps0 must lie in [0, 1/2)");
    const bool ok = malicious(p) ? p.eps0 < p.family.t_bar : p.eps0 < eps_bar(p.family.t_bar);
    if (!ok || !(median_margin(p) > 0.0))
        throw Error(ErrorCode::InfeasibleRegime,
                    std::string("eps0 = ") + std::to_string(p.eps0) +
                        " is too large for median estimation at t_bar = " +
                        std::to_string(p.family.t_bar) + " (" + to_string(p.model) + ")");
}

void check_mad_regime(const EstimationParams& p) {
    check_median_regime(p);
    if (!(p.eps0 < 1.0 / p.family.B) || !(mad_margin(p) > 0.0))
        throw Error(ErrorCode::InfeasibleRegime,
                    "eps0 = " + std::to_string(p.eps0) +
                        " must stay below 1/B = " + std::to_string(1.0 / p.family.B) +
                        " for MAD estimation");
}

std::uint64_t sample_size_median(double E, double delta, const EstimationParams& p) {
    check_E_delta(E, delta);
    check_median_regime(p);
    const double bm = p.family.B * p.family.m2_bar;
    const double margin = median_margin(p);
    const double m = std::max(bm * bm / (E * E), 1.0 / (margin * margin));
    return ceil_count(2.0 * m * median_log_factor(delta, p));
}

std::uint64_t sample_size_mad(double E, double delta, const EstimationParams& p) {
    check_E_delta(E, delta);
    check_mad_regime(p);
    const double kbm = p.family.kappa * p.family.B * p.family.m2_bar;
    const double margin = mad_margin(p);
    const double m = std::max(16.0 * kbm * kbm / (E * E), 1.0 / (margin * margin));
    return ceil_count(2.0 * m * mad_log_factor(delta, p));
}

double median_sample_floor(double delta, const EstimationParams& p) {
    check_median_regime(p);
    const double margin = median_margin(p);
    return 2.0 / (margin * margin) * median_log_factor(delta, p);
}

double mad_sample_floor(double delta, const EstimationParams& p) {
    check_mad_regime(p);
    const double margin = mad_margin(p);
    return 2.0 / (margin * margin) * mad_log_factor(delta, p);
}

const char* to_string(Statistic s) { return s == Statistic::Median ? "median" : "mad"; }

RobustEstimateReport estimate_median_ci(std::span<const double> xs, double delta,
                                        const EstimationParams& p, double m2_used) {
    require_nonempty(xs);
    if (!(delta > 0.0 && delta < 1.0))
        throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
    const double floor = median_sample_floor(delta, p);
    const auto n = xs.size();
    if (static_cast<double>(n) < floor)
        throw Error(ErrorCode::TooFewSamples, std::to_string(n) + " samples, need at least " +
                                                  std::to_string(std::ceil(floor)));
    RobustEstimateReport r;
    r.estimate = empirical_median(xs);
    r.bias_U = bias_U(p.eps0, p.family.B, m2_used, p.model);
    r.half_width_E = p.family.B * m2_used *
                     std::sqrt(2.0 * median_log_factor(delta, p) / static_cast<double>(n));
    r.n = n;
    r.model = p.model;
    r.statistic = Statistic::Median;
    return r;
}

RobustEstimateReport estimate_mad_ci(std::span<const double> xs, double delta,
                                     const EstimationParams& p, double m2_used) {
    require_nonempty(xs);
    if (!(delta > 0.0 && delta < 1.0))
        throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
    const double floor = mad_sample_floor(delta, p);
    const auto n = xs.size();
    if (static_cast<double>(n) < floor)
        throw Error(ErrorCode::TooFewSamples, std::to_string(n) + " samples, need at least " +
                                                  std::to_string(std::ceil(floor)));
    const double kappa = p.family.kappa;
    RobustEstimateReport r;
    r.estimate = empirical_mad(xs);
    r.bias_U = (1.0 + 2.0 * kappa) * bias_U(p.eps0, p.family.B, m2_used, p.model);
    r.half_width_E = 4.0 * kappa * p.family.B * m2_used *
                     std::sqrt(2.0 * mad_log_factor(delta, p) / static_cast<double>(n));
    r.n = n;
    r.model = p.model;
    r.statistic = Statistic::Mad;
    return r;
}

std::pair<double, double> sandwich_bounds(std::vector<double> ys, std::size_t s) {
    const std::size_t n = ys.size();
    if (n == 0) throw Error(ErrorCode::EmptyInput, "empty sample");
    if (2 * s >= n)
        throw Error(ErrorCode::InvalidArgument, "sandwich needs fewer than n/2 replacements");
    std::sort(ys.begin(), ys.end());
    const std::size_t lo = (n + 1) / 2 - s;  // 1-indexed
    const std::size_t hi = n / 2 + 1 + s;
    return {ys[lo - 1], ys[hi - 1]};
}

void RunningMedian::push(double x) {
    if (low_.empty() || x <= low_.top())
        low_.push(x);
    else
        high_.push(x);
    if (low_.size() > high_.size() + 1) {
        high_.push(low_.top());
        low_.pop();
    } else if (high_.size() > low_.size()) {
        low_.push(high_.top());
        high_.pop();
    }
}

double RunningMedian::median() const {
    if (low_.empty()) throw Error(ErrorCode::EmptyInput, "median of an empty stream");
    if (low_.size() > high_.size()) return low_.top();
    return 0.5 * (low_.top() + high_.top());
}

} // namespace robandit
