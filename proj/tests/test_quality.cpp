#include <doctest.h>

#include "robandit/error.hpp"
#include "robandit/quality.hpp"

using namespace robandit;

TEST_CASE("lower tail bound") {
    CHECK(lower_tail_bound(0.5, 0.25, 4.0, 0.0, 0.4) == 0.5);
    const double thr = lower_tail_bound(0.5, 0.25, 4.0, 0.1, 0.4);
    CHECK(thr == doctest::Approx(0.4));
    // Tight for Uniform(0, 1): P(Y >= 0.4) = 0.6.
    CHECK(1.0 - cdf(Distribution::uniform(0, 1), thr) == doctest::Approx(0.6));
    CHECK(lower_tail_bound(0.5, 0.25, 4.0, 0.4, 0.4) == doctest::Approx(0.1));
    CHECK_THROWS_AS(lower_tail_bound(0.5, 0.25, 4.0, 0.41, 0.4), Error);
}

TEST_CASE("quantile guarantee") {
    const auto q = quantile_guarantee(0.5, 0.25, 0.1, 0.05, 0.05, 4.0, 2.0, 0.1, 4, 0.4);
    // 0.4 - ((0.5 + 1.6) * 0.05 + (1 + 5 * 0.4) * 0.05)
    CHECK(q.threshold == doctest::Approx(0.4 - (2.1 * 0.05 + 3.0 * 0.05)));
    CHECK(q.threshold == doctest::Approx(0.145));
    CHECK(q.probability_floor == doctest::Approx(0.525));
    CHECK_FALSE(q.vacuous);

    const auto zero = quantile_guarantee(0.7, 0.3, 0.0, 0.0, 0.0, 4.0, 2.0, 0.1, 4, 0.4);
    CHECK(zero.threshold == 0.7);
    CHECK(zero.probability_floor == doctest::Approx(0.5 - 0.075));

    const auto k0 = quantile_guarantee(0.7, 0.3, 0.0, 0.2, 0.05, 4.0, 0.0, 0.1, 4, 0.4);
    CHECK(k0.threshold == doctest::Approx(0.7 - 0.1 - 0.05));

    const auto vac = quantile_guarantee(0.7, 0.3, 0.0, 0.0, 0.0, 4.0, 2.0, 0.9, 1, 0.4);
    CHECK(vac.vacuous);
    CHECK(vac.probability_floor == 0.0);
}

TEST_CASE("guarantee after uniform exploration") {
    AlgoConfig cfg;
    cfg.alpha = 0.1;
    cfg.delta = 0.1;
    cfg.family = {0.4, 4.0, 0.25, 2.0};
    cfg.eps0 = 0.1;
    const auto inst = make_instance({make_arm(Distribution::uniform(0, 1), UniformTailShift{1},
                                              0.1, AdversaryModel::Oblivious),
                                     make_arm(Distribution::uniform(0.3, 1.3),
                                              UniformTailShift{-1}, 0.1,
                                              AdversaryModel::Oblivious)});
    RandomStream rng(30);
    const auto run = run_simple(inst, cfg, rng);
    const auto q = guarantee_after_simple(run, cfg, inst.model, 0.05);
    const double U = bias_U(0.1, 4.0, 0.25, AdversaryModel::Oblivious);
    const auto direct = quantile_guarantee(run.final_estimates[run.chosen_arm], *run.chosen_mad,
                                           0.05, 0.1, U, 4.0, 2.0, 0.1, 2, 0.4);
    CHECK(q.threshold == direct.threshold);
    CHECK(q.probability_floor == direct.probability_floor);

    const auto own = guarantee_after_simple(run, cfg, inst.model, 0.05, UBarSource::SelectedArm, 0.1);
    CHECK(own.threshold > q.threshold);

    cfg.eps0 = 0.3;  // beyond 1/B
    CHECK_THROWS_AS(guarantee_after_simple(run, cfg, inst.model, 0.05), Error);
}
