#include "robandit/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "robandit/error.hpp"

namespace robandit {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

std::uint64_t sum(const std::vector<std::uint64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

// Keeps arms whose estimate reaches max - width. Returns the removed ones.
std::vector<std::size_t> eliminate(std::vector<std::size_t>& survivors,
                                   const std::vector<double>& est, double width) {
    double best = -std::numeric_limits<double>::infinity();
    for (auto i : survivors) best = std::max(best, est[i]);
    std::vector<std::size_t> kept, removed;
    for (auto i : survivors) (est[i] >= best - width ? kept : removed).push_back(i);
    survivors = std::move(kept);
    return removed;
}

std::size_t best_survivor(const std::vector<std::size_t>& survivors, const std::vector<double>& est) {
    std::size_t best = survivors.front();
    for (auto i : survivors)
        if (est[i] > est[best]) best = i;
    return best;
}

} // namespace

void BanditInstance::validate() const {
    if (arms.empty()) throw Error(ErrorCode::InvalidArgument, "instance needs at least one arm");
    for (std::size_t i = 0; i < arms.size(); ++i) {
        validate_arm(arms[i]);
        if (arms[i].eps != eps || arms[i].model != model)
            throw Error(ErrorCode::InvalidArgument,
                        "arm " + std::to_string(i) + " does not share the instance eps and model");
    }
}

BanditInstance make_instance(std::vector<ContaminatedArm> arms) {
    if (arms.empty()) throw Error(ErrorCode::InvalidArgument, "instance needs at least one arm");
    BanditInstance inst;
    inst.model = arms.front().model;
    inst.eps = arms.front().eps;
    inst.arms = std::move(arms);
    inst.validate();
    return inst;
}

void AlgoConfig::validate(AdversaryModel model) const {
    if (!(alpha >= 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
    if (!(delta > 0.0 && delta < 1.0))
        throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
    if (max_rounds == 0) throw Error(ErrorCode::InvalidArgument, "max_rounds must be >= 1");
    check_median_regime(estimation(model));
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::Complete: return "complete";
        case Termination::SingleSurvivor: return "single-survivor";
        case Termination::EarlyStop: return "early-stop";
        case Termination::RoundCap: return "round-cap";
    }
    return "unknown";
}

double EffectiveGapReport::min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (const auto& a : gaps) g = std::min(g, a.gap);
    return g;
}

std::size_t argmax_lowest(const std::vector<double>& v) {
    if (v.empty()) throw Error(ErrorCode::EmptyInput, "argmax of an empty vector");
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

EffectiveGapReport effective_gaps(const BanditInstance& instance, const std::vector<double>& B) {
    instance.validate();
    const std::size_t k = instance.k();
    if (B.size() != k) throw Error(ErrorCode::InvalidArgument, "one B per arm required");
    EffectiveGapReport r;
    r.m1.resize(k);
    r.U.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Distribution& f = instance.arms[i].clean;
        r.m1[i] = unique_median(f);
        r.U[i] = bias_U(instance.eps, B[i], unique_mad(f), instance.model);
    }
    r.best_arm = argmax_lowest(r.m1);
    const double top = r.m1[r.best_arm] - r.U[r.best_arm];
    for (std::size_t i = 0; i < k; ++i) {
        if (i == r.best_arm) continue;
        const double g = top - (r.m1[i] + r.U[i]);
        r.gaps.push_back({i, g});
        if (!(g > 0.0)) r.nonpositive.push_back(i);
    }
    return r;
}

EffectiveGapReport effective_gaps(const BanditInstance& instance, const FamilyParams& family) {
    return effective_gaps(instance, std::vector<double>(instance.k(), family.B));
}

double delta_schedule(double delta, std::size_t k, std::uint64_t r) {
    const double rr = static_cast<double>(r);
    return 6.0 * delta / (kPi2 * static_cast<double>(k) * rr * rr);
}

std::uint64_t simple_pulls_per_arm(std::size_t k, const AlgoConfig& config, AdversaryModel model) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
    if (!(config.alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
    return sample_size_median(config.alpha / 2.0, config.delta / static_cast<double>(k),
                              config.estimation(model));
}

BanditRunResult run_simple(const BanditInstance& instance, const AlgoConfig& config,
                           RandomStream& rng) {
    instance.validate();
    config.validate(instance.model);
    const std::size_t k = instance.k();
    const std::uint64_t n = simple_pulls_per_arm(k, config, instance.model);

    BanditRunResult res;
    res.pulls_per_arm.assign(k, n);
    res.final_estimates.resize(k);
    std::vector<double> leader_samples;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<double> xs = draw_batch(instance.arms[i], n, rng);
        res.final_estimates[i] = empirical_median(xs);
        if (i == 0 || res.final_estimates[i] > res.final_estimates[res.chosen_arm]) {
            res.chosen_arm = i;
            leader_samples = std::move(xs);
        }
    }
    res.chosen_mad = empirical_mad(leader_samples);
    res.total_pulls = sum(res.pulls_per_arm);
    res.rounds = 1;
    res.terminated_by = Termination::Complete;
    return res;
}

MedianOracle::MedianOracle(std::vector<ContaminatedArm> arms)
    : arms_(std::move(arms)), medians_(arms_.size()) {
    for (const auto& a : arms_) validate_arm(a);
}

void MedianOracle::pull(std::size_t arm, RandomStream& rng) {
    medians_.at(arm).push(draw_batch(arms_.at(arm), 1, rng).front());
}

double MedianOracle::estimate(std::size_t arm) const { return medians_.at(arm).median(); }

double pibai_radius(double c, double delta, std::uint64_t r) {
    return std::sqrt(c * std::log(1.0 / delta) / static_cast<double>(r));
}

BanditRunResult run_succ_elim_pibai(EstimatorOracle& oracle, std::size_t k, double delta,
                                    double c, RandomStream& rng, std::uint64_t max_rounds) {
    if (k == 0 || oracle.arms() != k)
        throw Error(ErrorCode::InvalidArgument, "oracle must expose exactly k >= 1 arms");
    if (!(delta > 0.0 && delta < 1.0))
        throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
    if (!(c > 0.0)) throw Error(ErrorCode::InvalidArgument, "c must be positive");

    BanditRunResult res;
    res.pulls_per_arm.assign(k, 0);
    res.final_estimates.assign(k, std::numeric_limits<double>::quiet_NaN());
    res.terminated_by = Termination::SingleSurvivor;
    if (k == 1) return res;

    std::vector<std::size_t> survivors(k);
    std::iota(survivors.begin(), survivors.end(), std::size_t{0});
    for (std::uint64_t r = 1;; ++r) {
        for (auto i : survivors) {
            oracle.pull(i, rng);
            ++res.pulls_per_arm[i];
        }
        for (auto i : survivors) res.final_estimates[i] = oracle.estimate(i);
        const double width = 2.0 * pibai_radius(c, delta_schedule(delta, k, r), r);
        auto removed = eliminate(survivors, res.final_estimates, width);
        if (!removed.empty()) res.elimination_trace.push_back({r, std::move(removed)});
        res.rounds = r;
        if (survivors.size() == 1) break;
        if (r >= max_rounds) {
            res.terminated_by = Termination::RoundCap;
            break;
        }
    }
    res.chosen_arm = best_survivor(survivors, res.final_estimates);
    res.total_pulls = sum(res.pulls_per_arm);
    return res;
}

double cbai_warmup_scale(const AlgoConfig& config, AdversaryModel model) {
    check_median_regime(config.estimation(model));
    const double margin = config.family.t_bar - effective_corruption(config.eps0, model);
    return 2.0 / (margin * margin);
}

std::uint64_t cbai_warmup_pulls(std::size_t k, double delta, double N) {
    return static_cast<std::uint64_t>(
        std::ceil(N * std::log(kPi2 * static_cast<double>(k) / (2.0 * delta))));
}

std::uint64_t cbai_round_pulls(std::uint64_t r, double N) {
    const double rr = static_cast<double>(r);
    return 1 + static_cast<std::uint64_t>(std::ceil(2.0 * N * std::log1p(1.0 / rr)));
}

double cbai_radius(const AlgoConfig& config, double delta_r, std::uint64_t r) {
    const double B = config.family.B;
    const double m2 = config.family.m2_bar;
    const double scale = config.radius == RadiusForm::Proof ? B * B : B;
    return std::sqrt(2.0 * scale * m2 * m2 * std::log(3.0 / delta_r) / static_cast<double>(r));
}

BanditRunResult run_succ_elim_cbai(const BanditInstance& instance, const AlgoConfig& config,
                                   RandomStream& rng) {
    instance.validate();
    config.validate(instance.model);
    const std::size_t k = instance.k();
    const double N = cbai_warmup_scale(config, instance.model);
    const std::uint64_t warmup = cbai_warmup_pulls(k, config.delta, N);

    BanditRunResult res;
    res.pulls_per_arm.assign(k, 0);
    res.final_estimates.resize(k);
    std::vector<RunningMedian> medians(k);

    auto pull = [&](std::size_t i, std::uint64_t m) {
        for (double x : draw_batch(instance.arms[i], m, rng)) medians[i].push(x);
        res.pulls_per_arm[i] += m;
        res.final_estimates[i] = medians[i].median();
    };

    for (std::size_t i = 0; i < k; ++i) pull(i, warmup);
    res.terminated_by = Termination::SingleSurvivor;

    std::vector<std::size_t> survivors(k);
    std::iota(survivors.begin(), survivors.end(), std::size_t{0});
    if (k > 1) {
        for (std::uint64_t r = 1;; ++r) {
            const std::uint64_t m = cbai_round_pulls(r, N);
            for (auto i : survivors) pull(i, m);
            const double width =
                2.0 * cbai_radius(config, delta_schedule(config.delta, k, r), r);
            auto removed = eliminate(survivors, res.final_estimates, width);
            if (!removed.empty()) res.elimination_trace.push_back({r, std::move(removed)});
            res.rounds = r;
            if (survivors.size() == 1) break;
            if (config.early_stop && width <= config.alpha / 2.0) {
                res.terminated_by = Termination::EarlyStop;
                break;
            }
            if (r >= config.max_rounds) {
                res.terminated_by = Termination::RoundCap;
                break;
            }
        }
    }
    res.chosen_arm = best_survivor(survivors, res.final_estimates);
    res.total_pulls = sum(res.pulls_per_arm);
    return res;
}

} // namespace robandit
