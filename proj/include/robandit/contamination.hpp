// contamination.hpp
//
// Contaminated arms: X_i = (1 - D_i) Y_i + D_i Z_i with Y ~ F, D ~ Ber(eps),
// under oblivious, prescient or malicious adversaries.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "robandit/distributions.hpp"
#include "robandit/rng.hpp"

namespace robandit {

constexpr double kDefaultShiftMagnitude = 1e6;

// Z ~ G, independent of everything else.
struct FixedContamination {
    Distribution g;
};

// Dirac at +magnitude: finite stand-in for the point mass at +infinity.
struct ShiftMedianUp {
    double magnitude = kDefaultShiftMagnitude;
};

// Dirac at -magnitude.
struct ShiftMedianDown {
    double magnitude = kDefaultShiftMagnitude;
};

// For F = Uniform(lo, hi) of width a: G = Uniform(hi, lo + a/(1-eps)) when
// direction = +1, G = Uniform(hi - a/(1-eps), lo) when direction = -1. The
// contaminated law is then uniform on the stretched interval.
struct UniformTailShift {
    int direction = 1;
};

// D | Y ~ Ber(flip_prob * 1{Y <= median}), Z = target. Built by
// malicious_coupling_lemma6.
struct MaliciousCouplingLemma6 {
    double median = 0.0;
    double flip_prob = 0.0;
    double target = 0.0;
};

// Every contaminated sample is placed at the empirical target quantile of the
// batch's realized clean values. Heuristic stressor.
struct PrescientOrderAware {
    double target_quantile = 0.75;
};

// D | Y ~ Ber(flip_prob * 1{Y == atom_at}), Z = target. Used by the malicious
// lower-bound liftings, where Y has a point mass at atom_at.
struct AtomCoupling {
    double atom_at = 0.0;
    double flip_prob = 0.0;
    double target = 0.0;
};

using ContaminationStrategy =
    std::variant<FixedContamination, ShiftMedianUp, ShiftMedianDown, UniformTailShift,
                 MaliciousCouplingLemma6, PrescientOrderAware, AtomCoupling>;

std::string describe(const ContaminationStrategy& s);

struct ContaminatedArm {
    Distribution clean;
    ContaminationStrategy strategy;
    double eps = 0.0;
    AdversaryModel model = AdversaryModel::Oblivious;
};

// Validates eps and the strategy/model pairing; throws IncompatibleStrategy or
// InvalidArgument.
ContaminatedArm make_arm(Distribution clean, ContaminationStrategy strategy, double eps,
                         AdversaryModel model);
void validate_arm(const ContaminatedArm& arm);

// Full (Y, D, Z, X) record of one batch. Z is meaningful only where D = 1.
struct DebugBatch {
    std::vector<double> y;
    std::vector<char> d;
    std::vector<double> z;
    std::vector<double> x;

    std::size_t contaminated() const;
};

// Draws n observations. All Y_i (and D_i) are drawn first, then every Z_i, so
// prescient strategies see the whole realized batch. With eps = 0 no D or Z is
// drawn and the output equals n successive sample() calls on the same stream.
std::vector<double> draw_batch(const ContaminatedArm& arm, std::size_t n, RandomStream& rng);
DebugBatch draw_batch_debug(const ContaminatedArm& arm, std::size_t n, RandomStream& rng);

// Coupling D | Y ~ Ber(2 eps 1{Y <= m}), Z = Q_R(1/2 + eps), m the unique
// median of F. Requires F(m) = 1/2 with no atom at m. eps = 0 gives a clean arm.
ContaminatedArm malicious_coupling_lemma6(const Distribution& f, double eps);

// P(D = 1 | Y = y) for the arm's strategy.
double flip_probability(const ContaminatedArm& arm, double y);

// Law of the contaminated observation when the strategy does not depend on
// the realized batch. nullopt for PrescientOrderAware.
std::optional<double> contaminated_cdf(const ContaminatedArm& arm, double x);

struct MarginalReport {
    std::size_t n = 0;
    double d_frequency = 0.0;
    double d_band = 0.0;       // sqrt(log(2/delta) / (2n))
    double y_ks_distance = 0.0;
    double y_ks_band = 0.0;    // DKW band, same expression
    bool precondition_ok = true;
    bool d_ok = false;
    bool y_ok = false;
    bool passed() const { return precondition_ok && d_ok && y_ok; }
};

// Draws n pulls exposing (Y, D) and checks the marginals D ~ Ber(eps), Y ~ F.
MarginalReport verify_marginals(const ContaminatedArm& arm, std::size_t n, RandomStream& rng,
                                double delta);

// sup_x |F_n(x) - F(x)| including left limits at atoms. xs need not be sorted.
double ks_distance(std::vector<double> xs, const Distribution& d);

} // namespace robandit
