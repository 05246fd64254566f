#include "robandit/quality.hpp"

#include <algorithm>
#include <string>

#include "robandit/error.hpp"

namespace robandit {

namespace {

void check_t(double t, double t_bar) {
    if (!(t >= 0.0 && t <= t_bar))
        throw Error(ErrorCode::InvalidArgument,
                    "t = " + std::to_string(t) + " outside [0, " + std::to_string(t_bar) + "]");
}

} // namespace

double lower_tail_bound(double m1, double m2, double B, double t, double t_bar) {
    check_t(t, t_bar);
    return m1 - t * B * m2;
}

QualityGuarantee quantile_guarantee(double m1_hat, double m2_hat, double t, double alpha,
                                    double U_bar, double B, double kappa, double delta,
                                    std::size_t k, double t_bar) {
    check_t(t, t_bar);
    if (!(alpha >= 0.0 && U_bar >= 0.0 && B > 0.0 && kappa >= 0.0))
        throw Error(ErrorCode::InvalidArgument, "alpha, U_bar, kappa must be >= 0 and B > 0");
    if (!(delta > 0.0 && delta < 1.0) || k == 0)
        throw Error(ErrorCode::InvalidArgument, "need delta in (0, 1) and k >= 1");
    QualityGuarantee q;
    q.t = t;
    const double slack =
        (0.5 + 2.0 * kappa * t * B) * alpha + (1.0 + (1.0 + 2.0 * kappa) * B * t) * U_bar;
    q.threshold = (m1_hat - t * B * m2_hat) - slack;
    const double floor = 0.5 + t - 3.0 * delta / static_cast<double>(k);
    q.probability_floor = std::clamp(floor, 0.0, 1.0);
    q.vacuous = floor != q.probability_floor;
    return q;
}

QualityGuarantee guarantee_after_simple(const BanditRunResult& run, const AlgoConfig& config,
                                        AdversaryModel model, double t, UBarSource source,
                                        double selected_m2) {
    if (!run.chosen_mad)
        throw Error(ErrorCode::InvalidArgument, "run carries no MAD of the chosen arm");
    check_mad_regime(config.estimation(model));
    const double m2 = source == UBarSource::FamilyBound ? config.family.m2_bar : selected_m2;
    const double U_bar = bias_U(config.eps0, config.family.B, m2, model);
    return quantile_guarantee(run.final_estimates.at(run.chosen_arm), *run.chosen_mad, t,
                              config.alpha, U_bar, config.family.B, config.family.kappa,
                              config.delta, run.pulls_per_arm.size(), config.family.t_bar);
}

} // namespace robandit
