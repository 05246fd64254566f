#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "robandit/contamination.hpp"
#include "robandit/error.hpp"
#include "robandit/estimators.hpp"

using namespace robandit;

TEST_CASE("eps = 0 reproduces the clean sampler") {
    const auto g = Distribution::gaussian(0.3, 2.0);
    const auto arm = make_arm(g, ShiftMedianUp{}, 0.0, AdversaryModel::Oblivious);
    RandomStream a(99), b(99);
    const auto xs = draw_batch(arm, 1000, a);
    for (double x : xs) CHECK(x == sample(g, b));
}

TEST_CASE("shift median up contaminates an eps fraction") {
    const auto arm =
        make_arm(Distribution::uniform(0, 1), ShiftMedianUp{1e6}, 0.1, AdversaryModel::Oblivious);
    RandomStream rng(1);
    const auto xs = draw_batch(arm, 100000, rng);
    const auto big = std::count_if(xs.begin(), xs.end(), [](double x) { return x > 1.0; });
    CHECK(std::fabs(static_cast<double>(big) / 1e5 - 0.1) <= 0.01);
}

TEST_CASE("uniform tail shift stretches the support") {
    const double eps = 0.1;
    for (double a : {1.0, 3.0}) {
        const auto arm = make_arm(Distribution::uniform(0, a), UniformTailShift{1}, eps,
                                  AdversaryModel::Oblivious);
        for (double x : {0.1 * a, 0.5 * a, a, 1.05 * a})
            CHECK(*contaminated_cdf(arm, x) == doctest::Approx(x / (a / (1 - eps))));
        RandomStream rng(2);
        const auto xs = draw_batch(arm, 200000, rng);
        const double expect = a / 2 + a * eps / (2 * (1 - eps));
        CHECK(std::fabs(empirical_median(xs) - expect) <= 0.005 * a);
    }
}

TEST_CASE("malicious coupling") {
    const auto f = Distribution::uniform(-1, 1);
    const auto arm = malicious_coupling_lemma6(f, 0.1);
    CHECK(arm.model == AdversaryModel::Malicious);
    CHECK(flip_probability(arm, -0.5) == doctest::Approx(0.2));
    CHECK(flip_probability(arm, 0.5) == 0.0);
    // Contaminated law: the lower 2 eps mass above the median moves to Q_R(1/2 + eps).
    const auto* s = std::get_if<MaliciousCouplingLemma6>(&arm.strategy);
    REQUIRE(s);
    CHECK(s->target == doctest::Approx(0.2));
    CHECK(*contaminated_cdf(arm, -0.5) == doctest::Approx(0.25 * 0.8));

    RandomStream rng(3);
    CHECK(verify_marginals(arm, 100000, rng, 1e-3).passed());

    const auto none = malicious_coupling_lemma6(f, 0.0);
    RandomStream r1(5), r2(5);
    const auto xs = draw_batch(none, 100, r1);
    for (double x : xs) CHECK(x == sample(f, r2));
}

TEST_CASE("verify marginals") {
    RandomStream rng(4);
    const auto fixed = make_arm(Distribution::uniform(0, 1),
                                FixedContamination{Distribution::dirac(0)}, 0.2,
                                AdversaryModel::Oblivious);
    CHECK(verify_marginals(fixed, 100000, rng, 1e-3).passed());
    const auto clean = make_arm(Distribution::uniform(0, 1),
                                FixedContamination{Distribution::dirac(0)}, 0.0,
                                AdversaryModel::Oblivious);
    const auto rep = verify_marginals(clean, 1000, rng, 1e-3);
    CHECK(rep.d_frequency == 0.0);
    CHECK(rep.passed());
}

TEST_CASE("strategy and model pairing") {
    const auto u = Distribution::uniform(0, 1);
    CHECK_THROWS_AS(make_arm(u, PrescientOrderAware{}, 0.1, AdversaryModel::Oblivious), Error);
    CHECK_THROWS_AS(make_arm(u, MaliciousCouplingLemma6{0.5, 0.2, 0.6}, 0.1,
                             AdversaryModel::Prescient),
                    Error);
    CHECK_NOTHROW(make_arm(u, ShiftMedianUp{}, 0.1, AdversaryModel::Malicious));
    CHECK_THROWS_AS(make_arm(u, ShiftMedianUp{}, 0.5, AdversaryModel::Oblivious), Error);
}

TEST_CASE("prescient order aware sees the batch") {
    const auto arm = make_arm(Distribution::uniform(0, 1), PrescientOrderAware{0.75}, 0.3,
                              AdversaryModel::Prescient);
    CHECK_FALSE(contaminated_cdf(arm, 0.5).has_value());
    RandomStream rng(6);
    const auto b = draw_batch_debug(arm, 200, rng);
    std::vector<double> ys = b.y;
    std::sort(ys.begin(), ys.end());
    const double q = ys[static_cast<std::size_t>(std::ceil(0.75 * 200)) - 1];
    for (std::size_t i = 0; i < b.x.size(); ++i) {
        if (b.d[i]) CHECK(b.x[i] == q);
        else CHECK(b.x[i] == b.y[i]);
    }
}

TEST_CASE("ks distance") {
    const auto u = Distribution::uniform(0, 1);
    CHECK(ks_distance({0.5}, u) == doctest::Approx(0.5));
    CHECK(ks_distance({0.0, 0.0}, Distribution::dirac(0.0)) == 0.0);
}
