#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "robandit/error.hpp"
#include "robandit/lower_bounds.hpp"

using namespace robandit;

namespace {

double kl_bernoulli(double p, double q) {
    return p * std::log(p / q) + (1 - p) * std::log((1 - p) / (1 - q));
}

AlgoConfig probe_config(const LiftedInstance& L) {
    AlgoConfig c;
    c.alpha = 0.0;
    c.delta = 0.1;
    c.family.t_bar = 0.4;
    c.family.B = *std::max_element(L.B.begin(), L.B.end());
    c.family.m2_bar = 0.5;
    c.eps0 = L.eps;
    return c;
}

} // namespace

TEST_CASE("kl of smoothed Bernoulli") {
    CHECK(kl_sber(0.5, 0.25) == doctest::Approx(0.0719205).epsilon(1e-5));
    CHECK(kl_sber(0.5, 0.25) == doctest::Approx(0.5 * kl_bernoulli(0.5, 0.25)));
    CHECK(kl_sber(0.37, 0.37) == 0.0);
    CHECK_THROWS_AS(kl_sber(0.0, 0.5), Error);
}

TEST_CASE("lower bound formula") {
    const double v = lower_bound_samples({0.1, 0.1, 0.1}, 0.05, 0.1, 1.0);
    CHECK(v == doctest::Approx(75 * std::log(1 / 0.24)));
    CHECK(v == doctest::Approx(107.03).epsilon(1e-4));
    // alpha dominates every gap
    CHECK(lower_bound_samples({0.1, 0.2}, 0.5, 0.1, 1.0) ==
          doctest::Approx(0.25 * 2 * 4 * std::log(1 / 0.24)));
    CHECK(lower_bound_samples({0.05}, 0.0, 0.1, 1.0) ==
          doctest::Approx(4 * lower_bound_samples({0.1}, 0.0, 0.1, 1.0)));
    try {
        lower_bound_samples({0.1}, 0.0, 0.15, 1.0);
        FAIL("expected ParameterOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParameterOutOfRange);
    }
}

TEST_CASE("oblivious lifting") {
    const auto L = build_lifting_oblivious({0.4, 0.6, 0.5}, 0.05);
    CHECK(L.p == std::vector<double>{0.6, 0.5, 0.4});
    CHECK(L.order == std::vector<std::size_t>{1, 2, 0});
    CHECK(lifting_sup_distance(L) <= 1e-12);
    const auto rep = effective_gaps(L.instance(), L.B);
    const auto classical = L.classical_gaps();
    for (std::size_t j = 0; j < rep.gaps.size(); ++j)
        CHECK(std::fabs(rep.gaps[j].gap - classical[j]) <= 1e-12);

    // No contamination: the lifted arms are the SBer arms themselves.
    const auto L0 = build_lifting_oblivious({0.6, 0.4}, 0.0);
    for (std::size_t j = 0; j < 2; ++j)
        for (double x : {-0.1, 0.2, 0.7, 1.0})
            CHECK(cdf(L0.lifted_arms[j].clean, x) == doctest::Approx(cdf(L0.observable_law[j], x)));

    CHECK_THROWS_AS(build_lifting_oblivious({0.3, 0.5}, 0.05), Error);
    CHECK_THROWS_AS(build_lifting_oblivious({0.4, 0.5}, 0.07), Error);
}

TEST_CASE("malicious lifting") {
    const auto L = build_lifting_malicious({0.6, 0.4}, 0.05);
    CHECK(lifting_sup_distance(L) <= 1e-12);
    const auto rep = effective_gaps(L.instance(), L.B);
    CHECK(std::fabs(rep.gaps[0].gap - 0.2) <= 1e-12);
    RandomStream rng(40);
    for (const auto& arm : L.lifted_arms) CHECK(verify_marginals(arm, 100000, rng, 1e-3).passed());

    const auto L0 = build_lifting_malicious({0.6, 0.4}, 0.0);
    CHECK(lifting_sup_distance(L0) <= 1e-12);
}

TEST_CASE("hardness probe") {
    const auto single = build_lifting_oblivious({0.5}, 0.05);
    const auto r1 = hardness_probe(single, probe_config(single), 3, 1);
    CHECK(r1.mean_rounds == 0.0);

    const auto wide = build_lifting_oblivious({0.6, 0.4}, 0.02);
    const auto narrow = build_lifting_oblivious({0.55, 0.45}, 0.02);
    // One slope constant for both so only the gap changes.
    auto cfg = probe_config(wide);
    cfg.family.B = std::max(cfg.family.B, probe_config(narrow).family.B);
    const auto rw = hardness_probe(wide, cfg, 40, 7);
    const auto rn = hardness_probe(narrow, cfg, 40, 8);
    CHECK(rw.success_rate >= 0.9);
    CHECK(rn.success_rate >= 0.9);
    CHECK(rw.ratio >= 1.0);
    const double ratio = rn.mean_pulls / rw.mean_pulls;
    CHECK(ratio >= 3.0);
    CHECK(ratio <= 6.0);
}
