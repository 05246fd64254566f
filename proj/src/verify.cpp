#include "robandit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "robandit/bandit.hpp"
#include "robandit/contamination.hpp"
#include "robandit/error.hpp"
#include "robandit/estimators.hpp"
#include "robandit/lower_bounds.hpp"
#include "robandit/parallel.hpp"
#include "robandit/quality.hpp"
#include "robandit/stats.hpp"

namespace robandit {

namespace {

using Suite = std::function<SuiteResult(std::uint64_t, unsigned)>;

SuiteResult make(const std::string& name, bool passed, double stat, double bound,
                 const std::string& detail) {
    return {name, passed, stat, bound, detail};
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

double uniform_in(RandomStream& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.uniform01();
}

// Strategies a Uniform(0, 1) arm is checked against, with the model each needs.
std::vector<std::pair<ContaminationStrategy, AdversaryModel>> uniform_attacks() {
    return {
        {FixedContamination{Distribution::dirac(0.9)}, AdversaryModel::Oblivious},
        {FixedContamination{Distribution::gaussian(0.5, 3.0)}, AdversaryModel::Oblivious},
        {ShiftMedianUp{}, AdversaryModel::Oblivious},
        {ShiftMedianDown{}, AdversaryModel::Oblivious},
        {UniformTailShift{1}, AdversaryModel::Oblivious},
        {UniformTailShift{-1}, AdversaryModel::Oblivious},
        {PrescientOrderAware{0.99}, AdversaryModel::Prescient},
        {PrescientOrderAware{0.01}, AdversaryModel::Prescient},
    };
}

SuiteResult quantile_galois(std::uint64_t, unsigned) {
    std::size_t violations = 0, checks = 0;
    auto dists = builtin_distributions();
    dists.push_back(Distribution::bernoulli(0.3));
    dists.push_back(Distribution::bernoulli(0.5));
    for (const auto& d : dists) {
        for (int i = 1; i < 200; ++i) {
            const double p = i / 200.0;
            const double ql = quantile_left(d, p);
            const double qr = quantile_right(d, p);
            const double h = 1e-6 * std::max(1.0, std::fabs(ql));
            ++checks;
            if (!(cdf(d, ql) >= p - 1e-12) || !(cdf(d, ql - h) < p) || !(ql <= qr)) ++violations;
        }
    }
    return make("quantile-galois", violations == 0, static_cast<double>(violations), 0.0,
                std::to_string(checks) + " quantile checks");
}

SuiteResult moment_oracle(std::uint64_t seed, unsigned) {
    double worst = 0.0;
    // Closed-form moments.
    struct Known {
        Distribution d;
        double m1, m2, m4;
    };
    const double q34 = 0.6744897501960817;
    const std::vector<Known> known = {
        {Distribution::uniform(0.0, 1.0), 0.5, 0.25, 0.125},
        {Distribution::uniform(-2.0, 6.0), 2.0, 2.0, 1.0},
        {Distribution::cauchy(0.0, 1.0), 0.0, 1.0, std::numbers::sqrt3 - 1.0},
        {Distribution::cauchy(3.0, 2.0), 3.0, 2.0, 2.0 * (std::numbers::sqrt3 - 1.0)},
        {Distribution::gaussian(1.0, 2.0), 1.0, 2.0 * q34, -1.0},
    };
    for (const auto& k : known) {
        const RobustMoments m = robust_moments(k.d);
        worst = std::max({worst, std::fabs(m.m1 - k.m1), std::fabs(m.m2 - k.m2)});
        if (k.m4 >= 0.0) worst = std::max(worst, std::fabs(m.m4 - k.m4));
    }
    const bool exact_ok = worst <= 1e-9;

    // Monte Carlo cross-check against empirical median and MAD.
    RandomStream rng(derive_seed(seed, 11));
    double mc_worst = 0.0;
    for (const auto& d : builtin_distributions()) {
        const RobustMoments m = robust_moments(d);
        std::vector<double> xs(100000);
        for (auto& x : xs) x = sample(d, rng);
        const double tol = 0.02 * std::max(1.0, m.m2);
        mc_worst = std::max(mc_worst, std::fabs(empirical_median(xs) - m.m1) / tol);
        mc_worst = std::max(mc_worst, std::fabs(empirical_mad(xs) - m.m2) / tol);
    }
    return make("moment-oracle", exact_ok && mc_worst <= 1.0, worst, 1e-9,
                "closed-form error " + fmt(worst) + ", Monte Carlo error/tolerance " +
                    fmt(mc_worst));
}

SuiteResult sandwich(std::uint64_t seed, unsigned) {
    RandomStream rng(derive_seed(seed, 12));
    std::vector<ContaminatedArm> arms;
    for (double eps : {0.05, 0.2, 0.4})
        for (const auto& [s, model] : uniform_attacks())
            arms.push_back(make_arm(Distribution::uniform(0.0, 1.0), s, eps, model));
    arms.push_back(malicious_coupling_lemma6(Distribution::uniform(-1.0, 1.0), 0.2));
    arms.push_back(make_arm(Distribution::gaussian(0.0, 1.0), ShiftMedianUp{}, 0.3,
                            AdversaryModel::Oblivious));
    std::size_t checked = 0, violations = 0;
    for (int rep = 0; rep < 40; ++rep) {
        for (const auto& arm : arms) {
            const auto n = 1 + static_cast<std::size_t>(rng.index(200));
            const DebugBatch b = draw_batch_debug(arm, n, rng);
            const std::size_t s = b.contaminated();
            if (2 * s >= n) continue;
            const auto [lo, hi] = sandwich_bounds(b.y, s);
            const double med = empirical_median(b.x);
            ++checked;
            if (med < lo || med > hi) ++violations;
        }
    }
    return make("sandwich", violations == 0 && checked > 0, static_cast<double>(violations), 0.0,
                std::to_string(checked) + " batches");
}

SuiteResult lipschitz(std::uint64_t seed, unsigned) {
    RandomStream rng(derive_seed(seed, 13));
    double worst = 0.0;
    const ContaminatedArm arm = make_arm(Distribution::gaussian(0.0, 1.0), ShiftMedianUp{1e3}, 0.2,
                                         AdversaryModel::Oblivious);
    for (int rep = 0; rep < 2000; ++rep) {
        const auto n = 1 + static_cast<std::size_t>(rng.index(100));
        std::vector<double> x = draw_batch(arm, n, rng);
        const double c = uniform_in(rng, -5.0, 5.0);
        std::vector<double> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = std::fabs(x[i] + c);
            b[i] = std::fabs(x[i]);
        }
        const double excess = std::fabs(empirical_median(a) - empirical_median(b)) - std::fabs(c);
        worst = std::max(worst, excess);
    }
    return make("lipschitz", worst <= 1e-12, worst, 1e-12, "largest excess over |c|");
}

SuiteResult m4_bound(std::uint64_t, unsigned) {
    double worst = -1e300;
    std::size_t checked = 0;
    auto dists = builtin_distributions();
    dists.push_back(Distribution::dirac(2.0));
    for (const auto& d : dists) {
        const RobustMoments m = robust_moments(d);
        if (!(m.m1_unique && m.m2_unique && m.m4_unique)) continue;
        ++checked;
        worst = std::max(worst, m.m4 - 2.0 * m.m2);
    }
    return make("m4-bound", worst <= 1e-12, worst, 0.0,
                std::to_string(checked) + " distributions, max(m4 - 2 m2)");
}

SuiteResult family_closure(std::uint64_t seed, unsigned) {
    RandomStream rng(derive_seed(seed, 14));
    std::size_t failures = 0, checks = 0;
    const std::vector<Distribution> bases = {
        Distribution::uniform(0.0, 1.0), Distribution::gaussian(0.0, 1.0),
        Distribution::cauchy(0.0, 1.0), Distribution::smoothed_bernoulli(0.6)};
    for (int rep = 0; rep < 20; ++rep) {
        const auto& base = bases[static_cast<std::size_t>(rng.index(bases.size()))];
        double a = uniform_in(rng, 0.2, 5.0);
        if (rng.bernoulli(0.5)) a = -a;
        const double b = uniform_in(rng, -3.0, 3.0);
        const RobustMoments m = robust_moments(base);
        const RobustMoments t = robust_moments(Distribution::affine(base, a, b));
        const double tol = 1e-9 * std::max(1.0, std::fabs(a));
        ++checks;
        if (std::fabs(t.m1 - (a * m.m1 + b)) > tol + 1e-9 * std::fabs(b) ||
            std::fabs(t.m2 - std::fabs(a) * m.m2) > tol || std::fabs(t.m4 - std::fabs(a) * m.m4) > tol)
            ++failures;
    }
    // Membership is invariant under affine maps; slopes well away from the boundary.
    struct Case {
        Distribution d;
        double t_bar, B;
        bool expect;
    };
    const std::vector<Case> cases = {
        {Distribution::uniform(0.0, 1.0), 0.4, 4.5, true},
        {Distribution::uniform(0.0, 1.0), 0.4, 3.5, false},
        {Distribution::gaussian(0.0, 1.0), 0.15, 4.2, true},
        {Distribution::gaussian(0.0, 1.0), 0.15, 3.5, false},
        {Distribution::gaussian(0.0, 1.0), 0.4, 8.5, true},
        {Distribution::gaussian(0.0, 1.0), 0.4, 8.3, false},
    };
    for (const auto& c : cases) {
        for (int rep = 0; rep < 3; ++rep) {
            double a = uniform_in(rng, 0.2, 5.0);
            if (rep == 1) a = -a;
            const auto moved = Distribution::affine(c.d, a, uniform_in(rng, -3.0, 3.0));
            ++checks;
            if (check_family_FtB(moved, c.t_bar, c.B, 2000) != c.expect) ++failures;
            if (c.expect) {
                // Strictly increasing on the quantile interval.
                const double lo = quantile_left(moved, 0.5 - c.t_bar);
                const double hi = quantile_right(moved, 0.5 + c.t_bar);
                double prev = cdf(moved, lo);
                for (int g = 1; g <= 500; ++g) {
                    const double f = cdf(moved, lo + (hi - lo) * g / 500.0);
                    if (!(f > prev)) {
                        ++failures;
                        break;
                    }
                    prev = f;
                }
            }
        }
    }
    // The law of |Y - m1| inherits a slope bound with constant kappa B on a
    // quantile window of half-width 1/B.
    const FamilyParams fp{0.4, 10.0, 2.0, 2.0};
    for (const auto& d : {Distribution::uniform(0.0, 1.0), Distribution::gaussian(0.0, 1.0),
                          Distribution::gaussian(4.0, 0.5)}) {
        ++checks;
        if (!check_family_Fmad(d, fp, 2000)) {
            ++failures;
            continue;
        }
        const auto h = Distribution::folded(d, unique_median(d));
        if (!check_family_FtB(h, 1.0 / fp.B, fp.kappa * fp.B, 2000)) ++failures;
    }
    return make("family-closure", failures == 0, static_cast<double>(failures), 0.0,
                std::to_string(checks) + " checks");
}

SuiteResult lifting_identity(std::uint64_t seed, unsigned) {
    double sup = 0.0, gap_err = 0.0;
    bool marginal_ok = true;
    RandomStream rng(derive_seed(seed, 15));
    const std::vector<std::vector<double>> ps = {{0.6, 0.4}, {0.5, 0.45, 0.62, 0.34}};
    for (const auto& p : ps) {
        for (double eps : {0.01, 0.05, 0.066}) {
            for (bool mal : {false, true}) {
                const LiftedInstance L =
                    mal ? build_lifting_malicious(p, eps) : build_lifting_oblivious(p, eps);
                sup = std::max(sup, lifting_sup_distance(L, 1000));
                const auto rep = effective_gaps(L.instance(), L.B);
                const auto classical = L.classical_gaps();
                for (std::size_t j = 0; j < rep.gaps.size(); ++j)
                    gap_err = std::max(gap_err, std::fabs(rep.gaps[j].gap - classical[j]));
                if (mal && eps == 0.05 && p.size() == 2)
                    for (const auto& arm : L.lifted_arms)
                        marginal_ok = marginal_ok && verify_marginals(arm, 100000, rng, 1e-3).passed();
            }
        }
    }
    return make("lifting-identity", sup <= 1e-12 && gap_err <= 1e-12 && marginal_ok, sup, 1e-12,
                "gap error " + fmt(gap_err) + (marginal_ok ? ", marginals ok" : ", marginal FAILED"));
}

SuiteResult kl(std::uint64_t, unsigned) {
    const double v = kl_sber(0.5, 0.25);
    const double expect = 0.5 * (0.5 * std::log(2.0) + 0.5 * std::log(0.5 / 0.75));
    bool ok = std::fabs(v - expect) <= 1e-12 && std::fabs(v - 0.0719205) <= 1e-6;
    double most_negative = 0.0;
    for (int i = 1; i <= 100; ++i)
        for (int j = 1; j <= 100; ++j) {
            const double p = i / 101.0, q = j / 101.0;
            const double k = kl_sber(p, q);
            most_negative = std::min(most_negative, k);
            if (i == j && k != 0.0) ok = false;
            if (std::fabs(k - kl_sber(1.0 - p, 1.0 - q)) > 1e-12) ok = false;
        }
    return make("kl", ok && most_negative >= 0.0, v, 0.0719205,
                "min over grid " + fmt(most_negative));
}

SuiteResult coverage_median(std::uint64_t seed, unsigned par) {
    const double delta = 0.1, eps = 0.1, E = 0.05;
    const std::size_t reps = 200;
    FamilyParams fam{0.4, 4.0, 0.25, 2.0};
    double worst = 0.0;
    std::size_t idx = 0;
    for (const auto& [strategy, model] : uniform_attacks()) {
        const ContaminatedArm arm = make_arm(Distribution::uniform(0.0, 1.0), strategy, eps, model);
        const EstimationParams params{eps, fam, model};
        const auto n = sample_size_median(E, delta, params);
        const double U = bias_U(eps, fam.B, 0.25, model);
        const auto fails = replicate(reps, derive_seed(seed, 100 + idx++), par,
                                     [&](std::size_t, RandomStream& rng) {
                                         const auto xs = draw_batch(arm, n, rng);
                                         return std::fabs(empirical_median(xs) - 0.5) > U + E ? 1
                                                                                              : 0;
                                     });
        const double freq = static_cast<double>(std::count(fails.begin(), fails.end(), 1)) /
                            static_cast<double>(reps);
        worst = std::max(worst, freq);
    }
    const double bound = delta + 3.0 * binomial_sigma(delta, reps);
    return make("coverage-median", worst <= bound, worst, bound, "worst failure frequency");
}

SuiteResult coverage_mad(std::uint64_t seed, unsigned par) {
    const double delta = 0.1, eps = 0.05, E = 0.2;
    const std::size_t reps = 100;
    const FamilyParams fam{0.4, 4.0, 0.25, 2.0};
    const EstimationParams params{eps, fam, AdversaryModel::Oblivious};
    const ContaminatedArm arm = make_arm(Distribution::uniform(0.0, 1.0),
                                         FixedContamination{Distribution::dirac(1e6)}, eps,
                                         AdversaryModel::Oblivious);
    const auto n = sample_size_mad(E, delta, params);
    const double U = bias_U(eps, fam.B, 0.25, AdversaryModel::Oblivious);
    const auto fails = replicate(reps, derive_seed(seed, 16), par,
                                 [&](std::size_t, RandomStream& rng) {
                                     const auto xs = draw_batch(arm, n, rng);
                                     const double err = std::fabs(empirical_mad(xs) - 0.25);
                                     return err > (1.0 + 2.0 * fam.kappa) * U + E ? 1 : 0;
                                 });
    const double freq = static_cast<double>(std::count(fails.begin(), fails.end(), 1)) /
                        static_cast<double>(reps);
    const double bound = delta + 3.0 * binomial_sigma(delta, reps);
    return make("coverage-mad", freq <= bound, freq, bound, "failure frequency, n = " +
                                                                std::to_string(n));
}

SuiteResult malicious_tightness(std::uint64_t seed, unsigned par) {
    const double eps = 0.1, delta = 0.1;
    const std::size_t reps = 500;
    const auto f = Distribution::uniform(-1.0, 1.0);
    const ContaminatedArm arm = malicious_coupling_lemma6(f, eps);
    const auto n = static_cast<std::size_t>(std::ceil(0.5 / (eps * eps) * std::log(1.0 / delta)));
    const double Bm2 = 4.0 * unique_mad(f);
    const double r = Bm2 * (eps - std::sqrt(std::log(1.0 / delta) / (2.0 * static_cast<double>(n))));
    const auto hits = replicate(reps, derive_seed(seed, 17), par,
                                [&](std::size_t, RandomStream& rng) {
                                    return std::fabs(empirical_median(draw_batch(arm, n, rng))) >= r
                                               ? 1
                                               : 0;
                                });
    const double freq = static_cast<double>(std::count(hits.begin(), hits.end(), 1)) /
                        static_cast<double>(reps);
    const double bound = 1.0 - delta - 3.0 * binomial_sigma(1.0 - delta, reps);
    return make("malicious-tightness", freq >= bound, freq, bound, "frequency of a large deviation");
}

// Three Uniform arms with medians 0.5 / 0.8 / 1.1; the best one pushed down,
// the others pushed up.
BanditInstance three_uniform_arms(double eps) {
    std::vector<ContaminatedArm> arms;
    for (double lo : {0.0, 0.3, 0.6})
        arms.push_back(make_arm(Distribution::uniform(lo, lo + 1.0),
                                UniformTailShift{lo == 0.6 ? -1 : 1}, eps,
                                AdversaryModel::Oblivious));
    return make_instance(std::move(arms));
}

SuiteResult pac_simple(std::uint64_t seed, unsigned par) {
    const std::size_t reps = 100;
    AlgoConfig cfg;
    cfg.alpha = 0.1;
    cfg.delta = 0.1;
    cfg.family = {0.4, 4.0, 0.25, 2.0};
    cfg.eps0 = 0.1;
    const BanditInstance inst = three_uniform_arms(0.1);
    const auto gaps = effective_gaps(inst, cfg.family);
    const auto expected_total = 3 * simple_pulls_per_arm(3, cfg, inst.model);
    const auto runs = replicate(reps, derive_seed(seed, 18), par,
                                [&](std::size_t, RandomStream& rng) {
                                    return run_simple(inst, cfg, rng);
                                });
    std::size_t good = 0;
    bool pulls_exact = true;
    for (const auto& r : runs) {
        double g = 0.0;
        for (const auto& a : gaps.gaps)
            if (a.arm == r.chosen_arm) g = a.gap;
        if (g <= cfg.alpha) ++good;
        pulls_exact = pulls_exact && r.total_pulls == expected_total;
    }
    const double freq = static_cast<double>(good) / static_cast<double>(reps);
    const double bound = 1.0 - cfg.delta - 3.0 * binomial_sigma(1.0 - cfg.delta, reps);
    return make("pac-simple", freq >= bound && pulls_exact, freq, bound,
                std::string("total pulls ") + (pulls_exact ? "exact" : "MISMATCH"));
}

SuiteResult pac_succelim(std::uint64_t seed, unsigned par) {
    const std::size_t reps = 50;
    AlgoConfig cfg;
    cfg.delta = 0.1;
    cfg.family = {0.4, 4.0, 0.25, 2.0};
    cfg.eps0 = 0.05;
    const BanditInstance inst = make_instance(
        {make_arm(Distribution::uniform(0.0, 1.0), UniformTailShift{1}, 0.05,
                  AdversaryModel::Oblivious),
         make_arm(Distribution::uniform(0.5, 1.5), UniformTailShift{-1}, 0.05,
                  AdversaryModel::Oblivious)});
    const auto runs = replicate(reps, derive_seed(seed, 19), par,
                                [&](std::size_t, RandomStream& rng) {
                                    return run_succ_elim_cbai(inst, cfg, rng);
                                });
    std::size_t good = 0;
    for (const auto& r : runs)
        if (r.chosen_arm == 1 && r.terminated_by == Termination::SingleSurvivor) ++good;
    const double freq = static_cast<double>(good) / static_cast<double>(reps);
    const double bound = 1.0 - cfg.delta - 3.0 * binomial_sigma(1.0 - cfg.delta, reps);
    return make("pac-succelim", freq >= bound, freq, bound, "success frequency");
}

SuiteResult quality(std::uint64_t seed, unsigned par) {
    const std::size_t reps = 100;
    AlgoConfig cfg;
    cfg.alpha = 0.1;
    cfg.delta = 0.1;
    cfg.family = {0.4, 4.0, 0.25, 2.0};
    cfg.eps0 = 0.1;
    const BanditInstance inst = three_uniform_arms(0.1);
    const std::vector<double> ts = {0.0, 0.05, 0.1};
    const auto hits = replicate(reps, derive_seed(seed, 20), par,
                                [&](std::size_t, RandomStream& rng) {
                                    const auto run = run_simple(inst, cfg, rng);
                                    std::vector<int> h;
                                    for (double t : ts) {
                                        const auto q = guarantee_after_simple(run, cfg, inst.model, t);
                                        const double y = sample(inst.arms[run.chosen_arm].clean, rng);
                                        h.push_back(y >= q.threshold ? 1 : 0);
                                    }
                                    return h;
                                });
    double worst_margin = 1e300;
    bool ok = true;
    for (std::size_t j = 0; j < ts.size(); ++j) {
        std::size_t c = 0;
        for (const auto& h : hits) c += static_cast<std::size_t>(h[j]);
        const double freq = static_cast<double>(c) / static_cast<double>(reps);
        const double floor = 0.5 + ts[j] - 3.0 * cfg.delta / 3.0;
        const double bound = floor - 3.0 * binomial_sigma(std::clamp(floor, 0.0, 1.0), reps);
        worst_margin = std::min(worst_margin, freq - bound);
        ok = ok && freq >= bound;
    }
    return make("quality", ok, worst_margin, 0.0, "smallest frequency minus floor");
}

SuiteResult delta_budget(std::uint64_t, unsigned) {
    const double delta = 0.1;
    const std::size_t k = 5;
    const std::uint64_t R = 1'000'000;
    double s = 0.0;
    // Smallest terms first.
    for (std::uint64_t r = R; r >= 1; --r) s += static_cast<double>(k) * delta_schedule(delta, k, r);
    const double tail = 6.0 * delta / (std::numbers::pi * std::numbers::pi * static_cast<double>(R));
    const double err = std::fabs(s - delta);
    return make("delta-budget", err <= 1e-6 * delta + tail, err, 1e-6 * delta + tail,
                "partial sum over 1e6 rounds");
}

const std::map<std::string, Suite>& registry() {
    static const std::map<std::string, Suite> r = {
        {"quantile-galois", quantile_galois},
        {"moment-oracle", moment_oracle},
        {"sandwich", sandwich},
        {"lipschitz", lipschitz},
        {"m4-bound", m4_bound},
        {"family-closure", family_closure},
        {"lifting-identity", lifting_identity},
        {"kl", kl},
        {"coverage-median", coverage_median},
        {"coverage-mad", coverage_mad},
        {"malicious-tightness", malicious_tightness},
        {"pac-simple", pac_simple},
        {"pac-succelim", pac_succelim},
        {"quality", quality},
        {"delta-budget", delta_budget},
    };
    return r;
}

} // namespace

std::vector<Distribution> builtin_distributions() {
    return {
        Distribution::uniform(0.0, 1.0),
        Distribution::uniform(-2.0, 3.0),
        Distribution::gaussian(0.0, 1.0),
        Distribution::gaussian(1.5, 0.3),
        Distribution::cauchy(0.0, 1.0),
        Distribution::cauchy(2.0, 0.5),
        Distribution::smoothed_bernoulli(0.4),
        Distribution::smoothed_bernoulli(0.6),
        Distribution::mixture({0.7, 0.3}, {Distribution::gaussian(0.0, 1.0),
                                           Distribution::uniform(-1.0, 1.0)}),
        Distribution::affine(Distribution::gaussian(0.0, 1.0), -2.0, 1.0),
        Distribution::affine(Distribution::cauchy(0.0, 1.0), 0.5, -1.0),
    };
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "quantile-galois", "moment-oracle",   "sandwich",         "lipschitz",
        "m4-bound",        "family-closure",  "lifting-identity", "kl",
        "coverage-median", "coverage-mad",    "malicious-tightness",
        "pac-simple",      "pac-succelim",    "quality",          "delta-budget"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, unsigned parallelism) {
    const auto it = registry().find(name);
    if (it == registry().end())
        throw Error(ErrorCode::InvalidArgument, "unknown verify suite '" + name + "'");
    return it->second(seed, parallelism);
}

std::vector<SuiteResult> verify_suite(const std::vector<std::string>& selection,
                                      std::uint64_t seed, unsigned parallelism) {
    const auto& names = selection.empty() ? suite_names() : selection;
    std::vector<SuiteResult> out;
    for (const auto& n : names) out.push_back(run_suite(n, seed, parallelism));
    return out;
}

} // namespace robandit
