#include "robandit/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "robandit/error.hpp"
#include "robandit/lower_bounds.hpp"
#include "robandit/parallel.hpp"
#include "robandit/quality.hpp"
#include "robandit/stats.hpp"
#include "robandit/verify.hpp"

namespace robandit {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

using Row = std::vector<std::string>;

std::string num(double x) { return format_number(x); }
std::string num(std::uint64_t x) { return std::to_string(x); }

class Writer {
public:
    Writer(const ExperimentConfig& c, ExperimentOutcome& out) : config_(c), out_(out) {
        std::filesystem::create_directories(c.out_dir);
    }

    void csv(const std::string& name, const Row& header, const std::vector<Row>& rows) {
        std::ostringstream os;
        write_row(os, header);
        for (const auto& r : rows) write_row(os, r);
        file(name, os.str());
    }

    void summary(const std::string& text) {
        out_.summary = text;
        file("summary.txt", text);
    }

private:
    static void write_row(std::ostream& os, const Row& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << '\n';
    }

    void file(const std::string& name, const std::string& text) {
        const auto path = std::filesystem::path(config_.out_dir) / (config_.prefix + name);
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
        f << text;
        out_.files.push_back(path.string());
    }

    const ExperimentConfig& config_;
    ExperimentOutcome& out_;
};

std::string kv(const std::string& key, const std::string& value) { return key + " = " + value + "\n"; }

std::string header_block(const ExperimentConfig& c) {
    return kv("kind", to_string(c.kind)) + kv("seed", num(c.seed)) +
           kv("replications", num(static_cast<std::uint64_t>(c.replications))) +
           kv("model", to_string(c.model)) + kv("eps", num(c.eps));
}

std::string rate_block(std::size_t successes, std::size_t n, const std::string& what) {
    const auto [lo, hi] = wilson_interval(successes, n);
    return kv(what, num(static_cast<double>(successes) / static_cast<double>(n))) +
           kv(what + "_wilson95_low", num(lo)) + kv(what + "_wilson95_high", num(hi));
}

ExperimentOutcome run_estimate(const ExperimentConfig& c, unsigned par) {
    const bool mad = c.kind == ExperimentKind::EstimateMad;
    const EstimationParams est = c.algo.estimation(c.model);
    const auto arms = c.contaminated_arms();
    const std::uint64_t n = c.samples ? c.samples
                            : mad     ? sample_size_mad(c.error, c.algo.delta, est)
                                      : sample_size_median(c.error, c.algo.delta, est);
    std::vector<double> truth;
    for (const auto& a : arms) {
        const RobustMoments m = robust_moments(a.clean);
        truth.push_back(mad ? m.m2 : m.m1);
    }
    const double m2_used = c.algo.family.m2_bar;

    const auto reps = replicate(c.replications, c.seed, par, [&](std::size_t, RandomStream& rng) {
        std::vector<RobustEstimateReport> out;
        for (const auto& a : arms) {
            const auto xs = draw_batch(a, n, rng);
            out.push_back(mad ? estimate_mad_ci(xs, c.algo.delta, est, m2_used)
                              : estimate_median_ci(xs, c.algo.delta, est, m2_used));
        }
        return out;
    });

    ExperimentOutcome outcome;
    Writer w(c, outcome);
    std::vector<Row> rows;
    std::size_t covered = 0, total = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t a = 0; a < reps[i].size(); ++a) {
            const auto& r = reps[i][a];
            const bool cov = r.covers(truth[a]);
            covered += cov;
            ++total;
            rows.push_back({num(static_cast<std::uint64_t>(i)), num(derive_seed(c.seed, i)),
                            num(static_cast<std::uint64_t>(a)), to_string(r.statistic),
                            num(r.estimate), num(r.bias_U), num(r.half_width_E), num(r.n),
                            to_string(r.model), num(truth[a]), cov ? "1" : "0"});
        }
    }
    w.csv("replications.csv",
          {"replication", "seed", "arm", "statistic", "estimate", "bias_U", "half_width_E", "n",
           "model", "truth", "covered"},
          rows);
    w.summary(header_block(c) + kv("samples_per_arm", num(n)) +
              rate_block(covered, total, "coverage_rate") +
              kv("target_coverage", num(1.0 - c.algo.delta)));
    return outcome;
}

ExperimentOutcome run_bai(const ExperimentConfig& c, unsigned par) {
    const bool simple = c.kind == ExperimentKind::BaiSimple;
    const BanditInstance inst = c.instance();
    const std::size_t k = inst.k();
    std::vector<double> m1;
    for (const auto& a : inst.arms) m1.push_back(robust_moments(a.clean).m1);
    const double best = *std::max_element(m1.begin(), m1.end());
    const double slack = simple || c.algo.early_stop ? c.algo.alpha : 0.0;

    struct Rep {
        BanditRunResult run;
        std::vector<QualityGuarantee> quality;
    };
    const auto reps = replicate(c.replications, c.seed, par, [&](std::size_t, RandomStream& rng) {
        Rep r;
        r.run = simple ? run_simple(inst, c.algo, rng) : run_succ_elim_cbai(inst, c.algo, rng);
        if (simple)
            for (double t : c.quality_t)
                r.quality.push_back(guarantee_after_simple(r.run, c.algo, inst.model, t));
        return r;
    });

    ExperimentOutcome outcome;
    Writer w(c, outcome);
    Row header = {"replication", "seed", "chosen_arm", "correct", "total_pulls", "rounds",
                  "terminated_by"};
    for (std::size_t a = 0; a < k; ++a) header.push_back("pulls_" + std::to_string(a));
    std::vector<Row> rows, qrows;
    std::vector<double> pulls;
    std::size_t wins = 0, capped = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& r = reps[i].run;
        const bool ok = best - m1[r.chosen_arm] <= slack;
        wins += ok;
        capped += r.hit_round_cap();
        pulls.push_back(static_cast<double>(r.total_pulls));
        Row row = {num(static_cast<std::uint64_t>(i)), num(derive_seed(c.seed, i)),
                   num(static_cast<std::uint64_t>(r.chosen_arm)), ok ? "1" : "0",
                   num(r.total_pulls), num(r.rounds), to_string(r.terminated_by)};
        for (auto p : r.pulls_per_arm) row.push_back(num(p));
        rows.push_back(std::move(row));
        for (const auto& q : reps[i].quality)
            qrows.push_back({num(static_cast<std::uint64_t>(i)),
                             num(static_cast<std::uint64_t>(r.chosen_arm)), num(q.t),
                             num(q.threshold), num(q.probability_floor), q.vacuous ? "1" : "0"});
    }
    w.csv("replications.csv", header, rows);
    if (simple && !c.quality_t.empty())
        w.csv("quality.csv",
              {"replication", "chosen_arm", "t", "threshold", "probability_floor", "vacuous"},
              qrows);
    double mean = 0.0;
    for (double p : pulls) mean += p;
    mean /= static_cast<double>(pulls.size());
    w.summary(header_block(c) + kv("arms", num(static_cast<std::uint64_t>(k))) +
              rate_block(wins, reps.size(), "success_rate") + kv("mean_total_pulls", num(mean)) +
              kv("median_total_pulls", num(empirical_median(pulls))) +
              kv("round_cap_hits", num(static_cast<std::uint64_t>(capped))));
    return outcome;
}

ExperimentOutcome run_gaps(const ExperimentConfig& c) {
    const BanditInstance inst = c.instance();
    const EffectiveGapReport rep = effective_gaps(inst, c.algo.family);
    ExperimentOutcome outcome;
    Writer w(c, outcome);
    std::vector<Row> rows;
    for (std::size_t a = 0; a < inst.k(); ++a) {
        double gap = 0.0;
        for (const auto& g : rep.gaps)
            if (g.arm == a) gap = g.gap;
        const bool is_best = a == rep.best_arm;
        rows.push_back({num(static_cast<std::uint64_t>(a)), is_best ? "1" : "0", num(rep.m1[a]),
                        num(rep.U[a]), num(gap), is_best || gap > 0.0 ? "1" : "0"});
    }
    w.csv("gaps.csv", {"arm", "is_best", "m1", "U", "gap", "positive"}, rows);
    w.summary(header_block(c) + kv("best_arm", num(static_cast<std::uint64_t>(rep.best_arm))) +
              kv("feasible", rep.feasible() ? "true" : "false") +
              kv("min_gap", num(rep.gaps.empty() ? 0.0 : rep.min_gap())));
    outcome.exit_code = 0;
    return outcome;
}

ExperimentOutcome run_lower_bound(const ExperimentConfig& c, unsigned par) {
    const LiftedInstance L = c.model == AdversaryModel::Malicious
                                 ? build_lifting_malicious(c.p, c.eps)
                                 : build_lifting_oblivious(c.p, c.eps);
    const auto gaps = L.classical_gaps();
    const HardnessReport rep = hardness_probe(L, c.algo, c.replications, c.seed, par, c.c_eta);
    const double min_gap = *std::min_element(gaps.begin(), gaps.end());

    ExperimentOutcome outcome;
    Writer w(c, outcome);
    w.csv("lb.csv", {"k", "gap", "delta", "lb_value", "mean_pulls", "ratio", "success_rate"},
          {{num(static_cast<std::uint64_t>(L.k)), num(min_gap), num(c.algo.delta),
            num(rep.lower_bound), num(rep.mean_pulls), num(rep.ratio), num(rep.success_rate)}});
    w.summary(header_block(c) + kv("lifting_sup_distance", num(lifting_sup_distance(L))) +
              kv("lb_value", num(rep.lower_bound)) + kv("mean_total_pulls", num(rep.mean_pulls)) +
              kv("mean_rounds", num(rep.mean_rounds)) + kv("ratio", num(rep.ratio)) +
              rate_block(static_cast<std::size_t>(std::lround(rep.success_rate *
                                                              static_cast<double>(c.replications))),
                         c.replications, "success_rate") +
              kv("round_cap_hits", num(static_cast<std::uint64_t>(rep.round_cap_hits))));
    return outcome;
}

ExperimentOutcome run_verify(const ExperimentConfig& c, unsigned par) {
    const auto results = verify_suite(c.suites, c.seed, par);
    ExperimentOutcome outcome;
    Writer w(c, outcome);
    std::vector<Row> rows;
    std::size_t passed = 0;
    std::string lines;
    for (const auto& r : results) {
        passed += r.passed;
        std::string detail = r.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        rows.push_back({r.name, r.passed ? "1" : "0", num(r.statistic), num(r.bound), detail});
        lines += kv(r.name, std::string(r.passed ? "PASS" : "FAIL") + " (" + num(r.statistic) +
                                " vs " + num(r.bound) + ") " + r.detail);
    }
    w.csv("verify.csv", {"suite", "passed", "statistic", "bound", "detail"}, rows);
    w.summary(kv("kind", "verify") + kv("seed", num(c.seed)) + lines +
              kv("passed", num(static_cast<std::uint64_t>(passed)) + "/" +
                               num(static_cast<std::uint64_t>(results.size()))));
    outcome.exit_code = passed == results.size() ? 0 : 1;
    return outcome;
}

} // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& config, unsigned parallelism) {
    switch (config.kind) {
    case ExperimentKind::EstimateMedian:
    case ExperimentKind::EstimateMad:
        return run_estimate(config, parallelism);
    case ExperimentKind::BaiSimple:
    case ExperimentKind::BaiSuccElim:
        return run_bai(config, parallelism);
    case ExperimentKind::Gaps:
        return run_gaps(config);
    case ExperimentKind::LowerBound:
        return run_lower_bound(config, parallelism);
    case ExperimentKind::Verify:
        return run_verify(config, parallelism);
    }
    throw Error(ErrorCode::InvalidArgument, "unhandled experiment kind");
}

} // namespace robandit
