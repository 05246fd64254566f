#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "robandit/distributions.hpp"
#include "robandit/error.hpp"

using namespace robandit;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected robandit::Error");
    return ErrorCode::InvalidArgument;
}

// Plain bisection for inf{x : F(x) >= p}, independent of the library's quantile code.
double bisect_left(const Distribution& d, double p, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(d, mid) >= p) hi = mid;
        else lo = mid;
    }
    return hi;
}

} // namespace

TEST_CASE("cdf values") {
    CHECK(cdf(Distribution::uniform(0, 1), 0.3) == doctest::Approx(0.3).epsilon(1e-15));
    // SBer(p) below 1: half the Bernoulli mass at 0 plus half the uniform.
    const auto sb = Distribution::smoothed_bernoulli(0.6);
    CHECK(cdf(sb, 0.5) == doctest::Approx(0.5 * 0.4 + 0.5 * 0.5).epsilon(1e-15));
    CHECK(cdf(sb, 0.5) == doctest::Approx(0.45));
    const auto dirac = Distribution::dirac(2.0);
    CHECK(cdf(dirac, 1.9) == 0.0);
    CHECK(cdf(dirac, 2.0) == 1.0);
    CHECK(cdf_left(dirac, 2.0) == 0.0);
    CHECK(atom(dirac, 2.0) == 1.0);
    CHECK(cdf(Distribution::gaussian(0, 1), 0.0) == doctest::Approx(0.5));
    CHECK(cdf(Distribution::cauchy(1, 2), 3.0) == doctest::Approx(0.75));
}

TEST_CASE("quantiles") {
    const auto u = Distribution::uniform(0, 1);
    CHECK(quantile_left(u, 0.5) == doctest::Approx(0.5));
    CHECK(quantile_right(u, 0.5) == doctest::Approx(0.5));

    const auto b = Distribution::bernoulli(0.5);
    CHECK(quantile_left(b, 0.5) == 0.0);
    CHECK(quantile_right(b, 0.5) == 1.0);

    const auto sb = Distribution::smoothed_bernoulli(0.6);
    CHECK(quantile_left(sb, 0.5) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(quantile_right(sb, 0.5) == doctest::Approx(0.6).epsilon(1e-12));

    const auto g = Distribution::gaussian(0, 1);
    for (double p : {0.01, 0.3, 0.9, 0.999})
        CHECK(quantile_left(g, p) == doctest::Approx(bisect_left(g, p, -50, 50)).epsilon(1e-9));
    for (double p : {1e-12, 1 - 1e-12}) {
        CHECK(std::isfinite(quantile_left(g, p)));
        CHECK(std::isfinite(quantile_right(Distribution::cauchy(0, 1), p)));
    }
    CHECK(code_of([&] { quantile_left(u, 0.0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { quantile_right(u, 1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("sampling") {
    RandomStream rng(42);
    const auto dirac = Distribution::dirac(3.0);
    for (int i = 0; i < 100; ++i) CHECK(sample(dirac, rng) == 3.0);

    const auto u = Distribution::uniform(0, 1);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) sum += sample(u, rng);
    CHECK(std::fabs(sum / n - 0.5) <= 0.01);

    // Mixture frequency of the Bernoulli branch of SBer(0.3).
    const auto sb = Distribution::smoothed_bernoulli(0.3);
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += sample(sb, rng) == 1.0;
    CHECK(static_cast<double>(ones) / n == doctest::Approx(0.15).epsilon(0.1));
}

TEST_CASE("robust moments") {
    for (double a : {1.0, 2.5, 10.0}) {
        const auto m = robust_moments(Distribution::uniform(0, a));
        CHECK(m.m1 == doctest::Approx(a / 2));
        CHECK(m.m2 == doctest::Approx(a / 4));
        CHECK(m.m1_unique);
        CHECK(m.m2_unique);
    }
    const auto c = robust_moments(Distribution::cauchy(0, 1));
    CHECK(c.m1 == doctest::Approx(0.0));
    CHECK(c.m2 == doctest::Approx(1.0));
    CHECK(c.m4 == doctest::Approx(std::numbers::sqrt3 - 1.0).epsilon(1e-10));

    // m4 of Uniform(0,1) by bisection on the law of ||Y - 1/2| - 1/4|.
    const auto u = Distribution::uniform(0, 1);
    auto h = [&](double x) {
        // P(||Y - 0.5| - 0.25| <= x) for x in [0, 0.25]
        return cdf(u, 0.75 + x) - cdf(u, 0.75 - x) + cdf(u, 0.25 + x) - cdf(u, 0.25 - x);
    };
    double lo = 0, hi = 0.25;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) >= 0.5 ? hi : lo) = mid;
    }
    CHECK(robust_moments(u).m4 == doctest::Approx(hi).epsilon(1e-10));
    CHECK(robust_moments(u).m4 == doctest::Approx(0.125));

    CHECK(code_of([] { unique_median(Distribution::bernoulli(0.5)); }) ==
          ErrorCode::NonUniqueMedian);
    CHECK_FALSE(robust_moments(Distribution::bernoulli(0.5)).m1_unique);
}

TEST_CASE("family FtB") {
    const auto u = Distribution::uniform(0, 1);
    CHECK(check_family_FtB(u, 0.4, 4.0));
    CHECK_FALSE(check_family_FtB(u, 0.4, 3.9));
    CHECK(code_of([] { check_family_FtB(Distribution::bernoulli(0.5), 0.2, 10.0); }) ==
          ErrorCode::NonUniqueMedian);
}

TEST_CASE("family Fmad") {
    const auto u = Distribution::uniform(0, 1);
    CHECK(check_family_Fmad(u, {0.4, 4.0, 0.25, 2.0}));
    CHECK_FALSE(check_family_Fmad(u, {0.4, 4.0, 0.25, 1.9}));

    const double tan04 = std::tan(0.4 * std::numbers::pi);
    const double B = std::numbers::pi * (1.0 + tan04 * tan04);
    const auto c = Distribution::cauchy(0, 1);
    // m2/m4 = 1/(sqrt3 - 1) = (sqrt3 + 1)/2 is the smallest admissible kappa.
    CHECK(check_family_Fmad(c, {0.4, B * 1.000001, 1.0, (std::numbers::sqrt3 + 1.0) / 2.0}));
    CHECK_FALSE(check_family_Fmad(c, {0.4, B * 1.000001, 1.0, std::numbers::sqrt3 - 1.0}));
}

TEST_CASE("median shift bound and bias") {
    const auto u = Distribution::uniform(0, 1);
    CHECK(median_shift_bound(u, 0.1) == doctest::Approx(0.1 / (2 * 0.9)));
    CHECK(median_shift_bound(u, 0.1) ==
          doctest::Approx(bias_U(0.1, 4.0, 0.25, AdversaryModel::Oblivious)));
    CHECK(median_shift_bound(Distribution::dirac(1.5), 0.2) == 0.0);
    CHECK(median_shift_bound(Distribution::gaussian(0, 1), 1e-9) < 1e-8);

    CHECK(bias_U(0.1, 4, 0.25, AdversaryModel::Oblivious) == doctest::Approx(0.0555555555555));
    CHECK(bias_U(0.1, 4, 0.25, AdversaryModel::Malicious) == doctest::Approx(0.1));
    for (auto m : {AdversaryModel::Oblivious, AdversaryModel::Prescient, AdversaryModel::Malicious})
        CHECK(bias_U(0.0, 3.0, 0.7, m) == 0.0);
    CHECK(eps_bar(0.4) == doctest::Approx(0.8 / 1.8));
}

TEST_CASE("affine and folded laws") {
    const auto g = Distribution::gaussian(1.0, 2.0);
    const auto a = Distribution::affine(g, -3.0, 0.5);
    const auto ma = robust_moments(a), mg = robust_moments(g);
    CHECK(ma.m1 == doctest::Approx(-3.0 * mg.m1 + 0.5));
    CHECK(ma.m2 == doctest::Approx(3.0 * mg.m2));
    CHECK(ma.m4 == doctest::Approx(3.0 * mg.m4));

    const auto f = Distribution::folded(Distribution::uniform(0, 1), 0.5);
    CHECK(cdf(f, 0.25) == doctest::Approx(0.5));
    CHECK(unique_median(f) == doctest::Approx(0.25));
}

TEST_CASE("mixture") {
    const auto m = Distribution::mixture({0.25, 0.75},
                                         {Distribution::dirac(0.0), Distribution::uniform(0, 1)});
    CHECK(cdf(m, 0.0) == doctest::Approx(0.25));
    CHECK(cdf(m, 0.5) == doctest::Approx(0.25 + 0.75 * 0.5));
    CHECK(quantile_left(m, 0.25) == 0.0);
    CHECK(code_of([] {
              Distribution::mixture({0.5, 0.6}, {Distribution::dirac(0), Distribution::dirac(1)});
          }) == ErrorCode::InvalidArgument);
}
