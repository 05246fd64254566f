// lower_bounds.hpp
//
// Smoothed-Bernoulli hard instances, their liftings to contaminated
// instances with matching effective gaps, and the sample-complexity lower bound.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "robandit/bandit.hpp"

namespace robandit {

// KL(SBer(p), SBer(q)) = KL(Ber(p), Ber(q)) / 2, p, q in (0, 1).
double kl_sber(double p, double q);

// (C_eta / 4) sum_i log(1/(2.4 delta)) / max(gap_i, alpha)^2.
// delta must lie in (0, 3/20); throws ParameterOutOfRange otherwise.
double lower_bound_samples(const std::vector<double>& gaps, double alpha, double delta,
                           double C_eta);

struct LiftedInstance {
    std::size_t k = 0;
    std::vector<double> p;  // sorted so the best arm comes first
    std::vector<std::size_t> order;  // order[j] = caller's index of lifted arm j
    double eps = 0.0;
    AdversaryModel model = AdversaryModel::Oblivious;
    std::vector<ContaminatedArm> lifted_arms;
    std::vector<Distribution> observable_law;  // SBer(p_j)
    // Smallest slope constant for each arm; with it U_j equals the median
    // shift exactly (eps or 2 eps).
    std::vector<double> B;

    BanditInstance instance() const;
    std::vector<double> classical_gaps() const;
};

// p_i in [1/3, 2/3], eps in [0, 1/15). Throws ParameterOutOfRange.
LiftedInstance build_lifting_oblivious(const std::vector<double>& p, double eps);
LiftedInstance build_lifting_malicious(const std::vector<double>& p, double eps);

// max |contaminated cdf - SBer cdf| over `grid` evenly spaced points of [-0.5, 1.5].
double lifting_sup_distance(const LiftedInstance& lifted, int grid = 1000);

struct HardnessReport {
    std::size_t replications = 0;
    double mean_pulls = 0.0;
    double success_rate = 0.0;
    double lower_bound = 0.0;
    double ratio = 0.0;
    double mean_rounds = 0.0;
    std::size_t round_cap_hits = 0;
};

// Runs the warm-up successive elimination on the lifted instance.
HardnessReport hardness_probe(const LiftedInstance& lifted, const AlgoConfig& config,
                              std::size_t replications, std::uint64_t seed,
                              unsigned parallelism = 1, double C_eta = 1.0);

} // namespace robandit
