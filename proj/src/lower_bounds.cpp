#include "robandit/lower_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "robandit/error.hpp"
#include "robandit/parallel.hpp"

namespace robandit {

namespace {

[[noreturn]] void out_of_range(const std::string& what) {
    throw Error(ErrorCode::ParameterOutOfRange, what);
}

void check_lifting_inputs(const std::vector<double>& p, double eps) {
    if (p.empty()) out_of_range("need at least one arm");
    for (double v : p)
        if (!(v >= 1.0 / 3.0 && v <= 2.0 / 3.0))
            out_of_range("p = " + std::to_string(v) + " outside [1/3, 2/3]");
    if (!(eps >= 0.0 && eps < 1.0 / 15.0))
        out_of_range("eps = " + std::to_string(eps) + " outside [0, 1/15)");
}

LiftedInstance sorted_shell(const std::vector<double>& p, double eps, AdversaryModel model) {
    check_lifting_inputs(p, eps);
    LiftedInstance out;
    out.k = p.size();
    out.eps = eps;
    out.model = model;
    out.order.resize(p.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
    for (auto i : out.order) {
        out.p.push_back(p[i]);
        out.observable_law.push_back(Distribution::smoothed_bernoulli(p[i]));
    }
    return out;
}

} // namespace

double kl_sber(double p, double q) {
    if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0))
        throw Error(ErrorCode::InvalidArgument, "kl_sber needs p, q in (0, 1)");
    return 0.5 * (p * std::log(p / q) + (1.0 - p) * std::log((1.0 - p) / (1.0 - q)));
}

double lower_bound_samples(const std::vector<double>& gaps, double alpha, double delta,
                           double C_eta) {
    if (!(delta > 0.0 && delta < 0.15))
        out_of_range("delta = " + std::to_string(delta) + " outside (0, 3/20)");
    if (!(alpha >= 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be >= 0");
    if (!(C_eta > 0.0)) throw Error(ErrorCode::InvalidArgument, "C_eta must be positive");
    double s = 0.0;
    for (double g : gaps) {
        if (!(g > 0.0)) throw Error(ErrorCode::InvalidArgument, "gaps must be positive");
        const double m = std::max(g, alpha);
        s += 1.0 / (m * m);
    }
    return C_eta / 4.0 * s * std::log(1.0 / (2.4 * delta));
}

BanditInstance LiftedInstance::instance() const { return make_instance(lifted_arms); }

std::vector<double> LiftedInstance::classical_gaps() const {
    std::vector<double> g;
    for (std::size_t j = 1; j < p.size(); ++j) g.push_back(p.front() - p[j]);
    return g;
}

LiftedInstance build_lifting_oblivious(const std::vector<double>& p, double eps) {
    LiftedInstance out = sorted_shell(p, eps, AdversaryModel::Oblivious);
    const double w = (1.0 - 2.0 * eps) / (2.0 * (1.0 - eps));
    const auto unif = Distribution::uniform(0.0, 1.0);
    for (std::size_t j = 0; j < out.k; ++j) {
        const bool best = j == 0;
        const double r = best ? out.p[j] / (1.0 - 2.0 * eps)
                              : (out.p[j] - 2.0 * eps) / (1.0 - 2.0 * eps);
        auto f = Distribution::mixture({w, 1.0 - w}, {Distribution::bernoulli(r), unif});
        const double expect = best ? out.p[j] + eps : out.p[j] - eps;
        const RobustMoments m = robust_moments(f);
        if (!m.m1_unique || std::fabs(m.m1 - expect) > 1e-9)
            throw Error(ErrorCode::InvalidArgument, "lifted median misses its target");
        out.B.push_back(2.0 * (1.0 - eps) / m.m2);
        out.lifted_arms.push_back(make_arm(std::move(f),
                                           FixedContamination{Distribution::dirac(best ? 0.0 : 1.0)},
                                           eps, AdversaryModel::Oblivious));
    }
    return out;
}

LiftedInstance build_lifting_malicious(const std::vector<double>& p, double eps) {
    LiftedInstance out = sorted_shell(p, eps, AdversaryModel::Malicious);
    for (std::size_t j = 0; j < out.k; ++j) {
        const bool best = j == 0;
        const double pj = out.p[j];
        auto f = Distribution::smoothed_bernoulli(best ? pj + 2.0 * eps : pj - 2.0 * eps);
        // Flip only on the atom the contamination removes mass from.
        const double atom_mass = best ? pj / 2.0 + eps : (1.0 - pj) / 2.0 + eps;
        const AtomCoupling coupling{best ? 1.0 : 0.0, eps / atom_mass, best ? 0.0 : 1.0};
        const RobustMoments m = robust_moments(f);
        const double expect = best ? pj + 2.0 * eps : pj - 2.0 * eps;
        if (!m.m1_unique || std::fabs(m.m1 - expect) > 1e-9)
            throw Error(ErrorCode::InvalidArgument, "lifted median misses its target");
        out.B.push_back(2.0 / m.m2);
        out.lifted_arms.push_back(make_arm(std::move(f), coupling, eps, AdversaryModel::Malicious));
    }
    return out;
}

double lifting_sup_distance(const LiftedInstance& lifted, int grid) {
    double worst = 0.0;
    for (std::size_t j = 0; j < lifted.k; ++j) {
        for (int g = 0; g < grid; ++g) {
            const double x = -0.5 + 2.0 * g / (grid - 1);
            const double c = *contaminated_cdf(lifted.lifted_arms[j], x);
            worst = std::max(worst, std::fabs(c - cdf(lifted.observable_law[j], x)));
        }
    }
    return worst;
}

HardnessReport hardness_probe(const LiftedInstance& lifted, const AlgoConfig& config,
                              std::size_t replications, std::uint64_t seed,
                              unsigned parallelism, double C_eta) {
    if (replications == 0) throw Error(ErrorCode::InvalidArgument, "replications must be >= 1");
    const BanditInstance inst = lifted.instance();
    const auto runs = replicate(replications, seed, parallelism,
                                [&](std::size_t, RandomStream& rng) {
                                    return run_succ_elim_cbai(inst, config, rng);
                                });
    HardnessReport rep;
    rep.replications = replications;
    double pulls = 0.0, rounds = 0.0, wins = 0.0;
    for (const auto& r : runs) {
        pulls += static_cast<double>(r.total_pulls);
        rounds += static_cast<double>(r.rounds);
        if (r.chosen_arm == 0) wins += 1.0;
        if (r.hit_round_cap()) ++rep.round_cap_hits;
    }
    const double n = static_cast<double>(replications);
    rep.mean_pulls = pulls / n;
    rep.mean_rounds = rounds / n;
    rep.success_rate = wins / n;
    if (lifted.k >= 2) {
        rep.lower_bound = lower_bound_samples(lifted.classical_gaps(), config.alpha,
                                              config.delta, C_eta);
        rep.ratio = rep.mean_pulls / rep.lower_bound;
    }
    return rep;
}

} // namespace robandit
