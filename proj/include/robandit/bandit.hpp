// bandit.hpp
//
// Contaminated best-arm identification: uniform exploration, successive
// elimination over a generic estimator oracle, and successive elimination
// with a warm-up phase for median estimates.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "robandit/contamination.hpp"
#include "robandit/estimators.hpp"

namespace robandit {

struct BanditInstance {
    std::vector<ContaminatedArm> arms;
    AdversaryModel model = AdversaryModel::Oblivious;
    double eps = 0.0;

    std::size_t k() const { return arms.size(); }
    // k >= 1, every arm valid and sharing eps and model.
    void validate() const;
};

BanditInstance make_instance(std::vector<ContaminatedArm> arms);

// Constant inside the elimination radius of the median-based variant.
//   Proof:   sqrt(2 B^2 m2_bar^2 log(3/delta) / r)
//   Caption: sqrt(2 B   m2_bar^2 log(3/delta) / r)
enum class RadiusForm { Proof, Caption };

struct AlgoConfig {
    double alpha = 0.1;
    double delta = 0.1;
    FamilyParams family;
    double eps0 = 0.0;
    std::uint64_t max_rounds = 1'000'000;
    bool early_stop = false;
    RadiusForm radius = RadiusForm::Proof;

    EstimationParams estimation(AdversaryModel model) const { return {eps0, family, model}; }
    // Throws InvalidArgument or InfeasibleRegime.
    void validate(AdversaryModel model) const;
};

enum class Termination { Complete, SingleSurvivor, EarlyStop, RoundCap };
const char* to_string(Termination t);

struct EliminationEvent {
    std::uint64_t round = 0;
    std::vector<std::size_t> arms;
};

struct BanditRunResult {
    std::size_t chosen_arm = 0;
    std::vector<std::uint64_t> pulls_per_arm;
    std::uint64_t total_pulls = 0;
    std::uint64_t rounds = 0;
    std::vector<EliminationEvent> elimination_trace;
    Termination terminated_by = Termination::Complete;
    // Estimate of every arm when the run stopped (last value for eliminated arms).
    std::vector<double> final_estimates;
    // Empirical MAD of the chosen arm's samples; filled by run_simple.
    std::optional<double> chosen_mad;

    bool hit_round_cap() const { return terminated_by == Termination::RoundCap; }
};

struct ArmGap {
    std::size_t arm = 0;
    double gap = 0.0;
};

struct EffectiveGapReport {
    std::size_t best_arm = 0;
    std::vector<double> m1;
    std::vector<double> U;
    std::vector<ArmGap> gaps;  // suboptimal arms only
    std::vector<std::size_t> nonpositive;

    bool feasible() const { return nonpositive.empty(); }
    double min_gap() const;
};

// Effective gaps with U_i = bias_U(eps, B, m2(F_i), model). Throws NonUniqueMedian.
EffectiveGapReport effective_gaps(const BanditInstance& instance, const FamilyParams& family);
// Same with a separate slope constant for each arm.
EffectiveGapReport effective_gaps(const BanditInstance& instance, const std::vector<double>& B);

// 6 delta / (pi^2 k r^2).
double delta_schedule(double delta, std::size_t k, std::uint64_t r);

std::size_t argmax_lowest(const std::vector<double>& v);

// Pulls every arm sample_size_median(alpha/2, delta/k) times and returns the
// arm with the largest empirical median.
BanditRunResult run_simple(const BanditInstance& instance, const AlgoConfig& config,
                           RandomStream& rng);
std::uint64_t simple_pulls_per_arm(std::size_t k, const AlgoConfig& config, AdversaryModel model);

// Source of p_hat_{i,r}: one pull adds one sample to arm i.
class EstimatorOracle {
public:
    virtual ~EstimatorOracle() = default;
    virtual std::size_t arms() const = 0;
    virtual void pull(std::size_t arm, RandomStream& rng) = 0;
    virtual double estimate(std::size_t arm) const = 0;
};

// Empirical median of each arm's contaminated pulls.
class MedianOracle : public EstimatorOracle {
public:
    explicit MedianOracle(std::vector<ContaminatedArm> arms);
    std::size_t arms() const override { return arms_.size(); }
    void pull(std::size_t arm, RandomStream& rng) override;
    double estimate(std::size_t arm) const override;

private:
    std::vector<ContaminatedArm> arms_;
    std::vector<RunningMedian> medians_;
};

// sqrt(c log(1/delta) / r).
double pibai_radius(double c, double delta, std::uint64_t r);

BanditRunResult run_succ_elim_pibai(EstimatorOracle& oracle, std::size_t k, double delta,
                                    double c, RandomStream& rng,
                                    std::uint64_t max_rounds = 1'000'000);

// Warm-up scale N: 2 (t_bar - eps0/(2(1-eps0)))^-2, or 2 (t_bar - eps0)^-2
// for malicious adversaries.
double cbai_warmup_scale(const AlgoConfig& config, AdversaryModel model);
std::uint64_t cbai_warmup_pulls(std::size_t k, double delta, double N);
std::uint64_t cbai_round_pulls(std::uint64_t r, double N);
double cbai_radius(const AlgoConfig& config, double delta_r, std::uint64_t r);

BanditRunResult run_succ_elim_cbai(const BanditInstance& instance, const AlgoConfig& config,
                                   RandomStream& rng);

} // namespace robandit
