// quality.hpp
//
// Lower-tail guarantees for the selected arm from its median and MAD.
#pragma once

#include <cstddef>

#include "robandit/bandit.hpp"

namespace robandit {

struct QualityGuarantee {
    double t = 0.0;
    double threshold = 0.0;
    double probability_floor = 0.0;
    // True when 1/2 + t - 3 delta / k fell outside [0, 1] and was clamped.
    bool vacuous = false;
};

// m1 - t B m2: P(Y >= threshold) >= 1/2 + t for every F in the family with
// these moments. Rejects t outside [0, t_bar].
double lower_tail_bound(double m1, double m2, double B, double t, double t_bar);

// Threshold (m1_hat - t B m2_hat) - ((1/2 + 2 kappa t B) alpha + (1 + (1 + 2 kappa) B t) U_bar)
// with floor 1/2 + t - 3 delta / k.
QualityGuarantee quantile_guarantee(double m1_hat, double m2_hat, double t, double alpha,
                                    double U_bar, double B, double kappa, double delta,
                                    std::size_t k, double t_bar);

// Which MAD enters U_bar: the family bound m2_bar, or the selected arm's own m2.
enum class UBarSource { FamilyBound, SelectedArm };

// Guarantee from a run_simple result, reusing the run's own samples.
// selected_m2 is only read for UBarSource::SelectedArm.
QualityGuarantee guarantee_after_simple(const BanditRunResult& run, const AlgoConfig& config,
                                        AdversaryModel model, double t,
                                        UBarSource source = UBarSource::FamilyBound,
                                        double selected_m2 = 0.0);

} // namespace robandit
