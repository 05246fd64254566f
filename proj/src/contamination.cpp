#include "robandit/contamination.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "robandit/error.hpp"

namespace robandit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void incompatible(const std::string& what) {
    throw Error(ErrorCode::IncompatibleStrategy, what);
}

Distribution tail_shift_law(const Uniform& u, int direction, double eps) {
    const double width = u.hi - u.lo;
    const double stretched = width / (1.0 - eps);
    if (direction > 0) return Distribution::uniform(u.hi, u.lo + stretched);
    return Distribution::uniform(u.hi - stretched, u.lo);
}

// Contamination law for strategies whose Z does not depend on the batch.
std::optional<Distribution> independent_law(const ContaminatedArm& arm) {
    return std::visit(
        Overloaded{
            [&](const FixedContamination& f) -> std::optional<Distribution> { return f.g; },
            [&](const ShiftMedianUp& s) -> std::optional<Distribution> {
                return Distribution::dirac(s.magnitude);
            },
            [&](const ShiftMedianDown& s) -> std::optional<Distribution> {
                return Distribution::dirac(-s.magnitude);
            },
            [&](const UniformTailShift& t) -> std::optional<Distribution> {
                return tail_shift_law(*arm.clean.as<Uniform>(), t.direction, arm.eps);
            },
            [&](const auto&) -> std::optional<Distribution> { return std::nullopt; },
        },
        arm.strategy);
}

double empirical_left_quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
    idx = std::clamp<std::size_t>(idx, 1, n);
    return v[idx - 1];
}

} // namespace

std::string describe(const ContaminationStrategy& s) {
    std::ostringstream os;
    os.precision(17);
    std::visit(Overloaded{
                   [&](const FixedContamination& f) { os << "Fixed(" << f.g.describe() << ")"; },
                   [&](const ShiftMedianUp& s) { os << "ShiftMedianUp(" << s.magnitude << ")"; },
                   [&](const ShiftMedianDown& s) {
                       os << "ShiftMedianDown(" << s.magnitude << ")";
                   },
                   [&](const UniformTailShift& t) {
                       os << "UniformTailShift(" << t.direction << ")";
                   },
                   [&](const MaliciousCouplingLemma6& c) {
                       os << "MaliciousCoupling(median=" << c.median << ", p=" << c.flip_prob
                          << ", z=" << c.target << ")";
                   },
                   [&](const PrescientOrderAware& p) {
                       os << "PrescientOrderAware(" << p.target_quantile << ")";
                   },
                   [&](const AtomCoupling& c) {
                       os << "AtomCoupling(at=" << c.atom_at << ", p=" << c.flip_prob
                          << ", z=" << c.target << ")";
                   },
               },
               s);
    return os.str();
}

void validate_arm(const ContaminatedArm& arm) {
    if (!(arm.eps >= 0.0 && arm.eps < 0.5))
        throw Error(ErrorCode::InvalidArgument, "contamination level must lie in [0, 1/2)");
    std::visit(
        Overloaded{
            [&](const FixedContamination&) {},
            [&](const ShiftMedianUp& s) {
                if (!std::isfinite(s.magnitude)) incompatible("shift magnitude must be finite");
            },
            [&](const ShiftMedianDown& s) {
                if (!std::isfinite(s.magnitude)) incompatible("shift magnitude must be finite");
            },
            [&](const UniformTailShift& t) {
                if (t.direction != 1 && t.direction != -1)
                    incompatible("uniform tail shift direction must be +1 or -1");
                if (!arm.clean.as<Uniform>())
                    incompatible("uniform tail shift requires a Uniform arm");
            },
            [&](const MaliciousCouplingLemma6& c) {
                if (arm.model != AdversaryModel::Malicious)
                    incompatible("coupled contamination requires the malicious model");
                if (!(c.flip_prob >= 0.0 && c.flip_prob <= 1.0))
                    incompatible("coupling probability must lie in [0, 1]");
            },
            [&](const PrescientOrderAware& p) {
                if (arm.model == AdversaryModel::Oblivious)
                    incompatible("order-aware contamination requires a prescient or malicious model");
                if (!(p.target_quantile > 0.0 && p.target_quantile <= 1.0))
                    incompatible("target quantile must lie in (0, 1]");
            },
            [&](const AtomCoupling& c) {
                if (arm.model != AdversaryModel::Malicious)
                    incompatible("coupled contamination requires the malicious model");
                if (!(c.flip_prob >= 0.0 && c.flip_prob <= 1.0))
                    incompatible("coupling probability must lie in [0, 1]");
            },
        },
        arm.strategy);
}

ContaminatedArm make_arm(Distribution clean, ContaminationStrategy strategy, double eps,
                         AdversaryModel model) {
    ContaminatedArm arm{std::move(clean), std::move(strategy), eps, model};
    validate_arm(arm);
    return arm;
}

std::size_t DebugBatch::contaminated() const {
    return static_cast<std::size_t>(std::count(d.begin(), d.end(), char{1}));
}

double flip_probability(const ContaminatedArm& arm, double y) {
    return std::visit(Overloaded{
                          [&](const MaliciousCouplingLemma6& c) {
                              return y <= c.median ? c.flip_prob : 0.0;
                          },
                          [&](const AtomCoupling& c) { return y == c.atom_at ? c.flip_prob : 0.0; },
                          [&](const auto&) { return arm.eps; },
                      },
                      arm.strategy);
}

DebugBatch draw_batch_debug(const ContaminatedArm& arm, std::size_t n, RandomStream& rng) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "batch size must be >= 1");
    DebugBatch b;
    b.y.resize(n);
    b.d.assign(n, 0);
    b.z.assign(n, 0.0);
    b.x.resize(n);

    if (arm.eps == 0.0) {
        for (std::size_t i = 0; i < n; ++i) b.y[i] = sample(arm.clean, rng);
        b.x = b.y;
        return b;
    }

    for (std::size_t i = 0; i < n; ++i) {
        b.y[i] = sample(arm.clean, rng);
        b.d[i] = rng.bernoulli(flip_probability(arm, b.y[i])) ? 1 : 0;
    }

    std::visit(Overloaded{
                   [&](const MaliciousCouplingLemma6& c) {
                       for (std::size_t i = 0; i < n; ++i)
                           if (b.d[i]) b.z[i] = c.target;
                   },
                   [&](const AtomCoupling& c) {
                       for (std::size_t i = 0; i < n; ++i)
                           if (b.d[i]) b.z[i] = c.target;
                   },
                   [&](const PrescientOrderAware& p) {
                       const double z = empirical_left_quantile(b.y, p.target_quantile);
                       for (std::size_t i = 0; i < n; ++i)
                           if (b.d[i]) b.z[i] = z;
                   },
                   [&](const auto&) {
                       const Distribution g = *independent_law(arm);
                       for (std::size_t i = 0; i < n; ++i)
                           if (b.d[i]) b.z[i] = sample(g, rng);
                   },
               },
               arm.strategy);

    for (std::size_t i = 0; i < n; ++i) b.x[i] = b.d[i] ? b.z[i] : b.y[i];
    return b;
}

std::vector<double> draw_batch(const ContaminatedArm& arm, std::size_t n, RandomStream& rng) {
    return std::move(draw_batch_debug(arm, n, rng).x);
}

ContaminatedArm malicious_coupling_lemma6(const Distribution& f, double eps) {
    if (!(eps >= 0.0 && eps < 0.5))
        throw Error(ErrorCode::InvalidArgument, "eps must lie in [0, 1/2)");
    const double m = unique_median(f);
    if (atom(f, m) > 0.0 || std::fabs(cdf(f, m) - 0.5) > 1e-12)
        throw Error(ErrorCode::InvalidArgument,
                    "coupling needs P(Y <= m) = 1/2 exactly; " + f.describe() + " violates it");
    const double target = quantile_right(f, 0.5 + eps);
    return make_arm(f, MaliciousCouplingLemma6{m, 2.0 * eps, target}, eps,
                    AdversaryModel::Malicious);
}

std::optional<double> contaminated_cdf(const ContaminatedArm& arm, double x) {
    const double eps = arm.eps;
    const double f = cdf(arm.clean, x);
    return std::visit(
        Overloaded{
            [&](const MaliciousCouplingLemma6& c) -> std::optional<double> {
                // P(D = 1, Y <= x) = p F(min(x, m)).
                const double flipped_below = c.flip_prob * cdf(arm.clean, std::min(x, c.median));
                const double flipped_total = c.flip_prob * cdf(arm.clean, c.median);
                return f - flipped_below + (c.target <= x ? flipped_total : 0.0);
            },
            [&](const AtomCoupling& c) -> std::optional<double> {
                const double mass = c.flip_prob * atom(arm.clean, c.atom_at);
                const double flipped_below = c.atom_at <= x ? mass : 0.0;
                return f - flipped_below + (c.target <= x ? mass : 0.0);
            },
            [&](const PrescientOrderAware&) -> std::optional<double> { return std::nullopt; },
            [&](const auto&) -> std::optional<double> {
                if (eps == 0.0) return f;
                const Distribution g = *independent_law(arm);
                return (1.0 - eps) * f + eps * cdf(g, x);
            },
        },
        arm.strategy);
}

double ks_distance(std::vector<double> xs, const Distribution& d) {
    if (xs.empty()) throw Error(ErrorCode::EmptyInput, "ks_distance of an empty sample");
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double worst = 0.0;
    std::size_t i = 0;
    while (i < xs.size()) {
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i]) ++j;
        const double below = static_cast<double>(i) / n;
        const double upto = static_cast<double>(j) / n;
        worst = std::max(worst, std::fabs(cdf(d, xs[i]) - upto));
        worst = std::max(worst, std::fabs(cdf_left(d, xs[i]) - below));
        i = j;
    }
    return worst;
}

MarginalReport verify_marginals(const ContaminatedArm& arm, std::size_t n, RandomStream& rng,
                                double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
    MarginalReport r;
    r.n = n;
    r.d_band = std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(n)));
    r.y_ks_band = r.d_band;
    r.precondition_ok = arm.eps == 0.0 || r.d_band < arm.eps / 2.0;

    const DebugBatch b = draw_batch_debug(arm, n, rng);
    r.d_frequency = static_cast<double>(b.contaminated()) / static_cast<double>(n);
    r.d_ok = std::fabs(r.d_frequency - arm.eps) <= r.d_band;
    r.y_ks_distance = ks_distance(b.y, arm.clean);
    r.y_ok = r.y_ks_distance <= r.y_ks_band;
    return r;
}

} // namespace robandit
