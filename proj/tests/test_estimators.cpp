#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "robandit/contamination.hpp"
#include "robandit/error.hpp"
#include "robandit/estimators.hpp"

using namespace robandit;

namespace {

double sorted_median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double sorted_mad(const std::vector<double>& v) {
    const double m = sorted_median(v);
    std::vector<double> d;
    for (double x : v) d.push_back(std::fabs(x - m));
    return sorted_median(d);
}

EstimationParams params(double eps0, AdversaryModel m, double kappa = 2.0) {
    return {eps0, {0.4, 4.0, 0.25, kappa}, m};
}

} // namespace

TEST_CASE("empirical median and MAD") {
    CHECK(empirical_median(std::vector<double>{3, 1, 2}) == 2);
    CHECK(empirical_median(std::vector<double>{1, 2, 3, 4}) == 2.5);
    CHECK(empirical_median(std::vector<double>{5}) == 5);
    CHECK(empirical_mad(std::vector<double>{1, 2, 3}) == 1);
    CHECK(empirical_mad(std::vector<double>{7, 7, 7, 7}) == 0);
    CHECK(empirical_mad(std::vector<double>{1, 2, 3, 4, 100}) == 1);
    CHECK_THROWS_AS(empirical_median(std::vector<double>{}), Error);

    RandomStream rng(10);
    for (int rep = 0; rep < 2000; ++rep) {
        const auto n = 1 + rng.index(50);
        std::vector<double> v(n);
        for (auto& x : v) x = std::floor(rng.uniform01() * 20.0) - 10.0;
        CHECK(empirical_median(v) == sorted_median(v));
        CHECK(empirical_mad(v) == sorted_mad(v));
    }
}

TEST_CASE("median sample size") {
    const double t = 0.4 - 0.1 / (2 * 0.9);
    const double obl = 2 * std::max(100.0, 1 / (t * t)) * std::log(2 / 0.05);
    CHECK(sample_size_median(0.1, 0.05, params(0.1, AdversaryModel::Oblivious)) ==
          static_cast<std::uint64_t>(std::ceil(obl)));
    CHECK(sample_size_median(0.1, 0.05, params(0.1, AdversaryModel::Oblivious)) == 738);
    CHECK(sample_size_median(0.1, 0.05, params(0.1, AdversaryModel::Malicious)) == 819);
    CHECK_THROWS_AS(sample_size_median(0.1, 0.05, params(0.4, AdversaryModel::Malicious)), Error);
}

TEST_CASE("MAD sample size") {
    // 2 * 1600 * log(80) = 14022.49, so the ceiling is 14023.
    const double raw = 2 * 1600 * std::log(80.0);
    CHECK(raw == doctest::Approx(14022.49).epsilon(1e-6));
    CHECK(sample_size_mad(0.2, 0.05, params(0.05, AdversaryModel::Oblivious)) == 14023);
    CHECK_THROWS_AS(sample_size_mad(0.2, 0.05, params(0.25, AdversaryModel::Oblivious)), Error);
    // kappa = 0 leaves only the quantile term.
    const double tt = 0.25 - 0.05 / (2 * 0.95);
    CHECK(sample_size_mad(0.2, 0.05, params(0.05, AdversaryModel::Oblivious, 0.0)) ==
          static_cast<std::uint64_t>(std::ceil(2 / (tt * tt) * std::log(80.0))));
}

TEST_CASE("confidence intervals") {
    std::vector<double> xs(1000);
    RandomStream rng(11);
    for (auto& x : xs) x = rng.uniform01();
    const auto p0 = params(0.0, AdversaryModel::Oblivious);
    const auto r = estimate_median_ci(xs, 0.05, p0, 0.25);
    CHECK(r.bias_U == 0.0);
    CHECK(r.half_width_E == doctest::Approx(4 * 0.25 * std::sqrt(2 * std::log(40.0) / 1000)));
    CHECK(r.estimate == empirical_median(xs));

    const auto rm = estimate_mad_ci(xs, 0.05, p0, 0.25);
    CHECK(rm.bias_U == 0.0);
    CHECK(rm.half_width_E == doctest::Approx(8 * 4 * 0.25 * std::sqrt(2 * std::log(80.0) / 1000)));

    std::vector<double> tiny(3, 0.5);
    try {
        estimate_median_ci(tiny, 0.05, params(0.1, AdversaryModel::Oblivious), 0.25);
        FAIL("expected TooFewSamples");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooFewSamples);
    }
}

TEST_CASE("median coverage under tail shift") {
    const auto arm = make_arm(Distribution::uniform(0, 1), UniformTailShift{1}, 0.1,
                              AdversaryModel::Oblivious);
    const auto p = params(0.1, AdversaryModel::Oblivious);
    RandomStream rng(12);
    int covered = 0;
    const int reps = 300;
    for (int i = 0; i < reps; ++i) {
        const auto xs = draw_batch(arm, 10000, rng);
        covered += estimate_median_ci(xs, 0.05, p, 0.25).covers(0.5);
    }
    CHECK(static_cast<double>(covered) / reps >= 0.95);
}

TEST_CASE("sandwich bounds") {
    // 1-indexed order statistics ceil(n/2) - s and floor(n/2) + 1 + s.
    const std::vector<double> ys = {5, 1, 4, 2, 3, 6, 7};
    const auto [lo, hi] = sandwich_bounds(ys, 1);
    CHECK(lo == 3);
    CHECK(hi == 5);
    const auto [lo4, hi4] = sandwich_bounds({1, 2, 3, 4}, 1);
    CHECK(lo4 == 1);
    CHECK(hi4 == 4);
    CHECK_THROWS_AS(sandwich_bounds({1, 2, 3, 4}, 2), Error);
}

TEST_CASE("running median") {
    RunningMedian rm;
    std::vector<double> seen;
    RandomStream rng(13);
    for (int i = 0; i < 500; ++i) {
        const double x = std::floor(rng.uniform01() * 30);
        rm.push(x);
        seen.push_back(x);
        CHECK(rm.median() == sorted_median(seen));
    }
}
