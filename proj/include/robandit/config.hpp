// config.hpp
//
// Experiment configuration: a flat sectioned key-value format.
//
//   # comment
//   [experiment]
//   kind = "bai-simple"
//   replications = 200
//   seed = 7
//
//   [instance]
//   eps = 0.1
//   model = "oblivious"
//   arms = [{kind: "uniform", lo: 0.0, hi: 1.0},
//           {kind: "uniform", lo: 0.3, hi: 1.3}]
//   strategies = [{kind: "uniform_tail_shift", direction: -1},
//                 {kind: "uniform_tail_shift", direction: 1}]
//
//   [algorithm]
//   alpha = 0.1
//   delta = 0.1
//
//   [output]
//   dir = "out"
//
// Values are numbers, double-quoted strings, true/false, lists [a, b] and
// maps {key: value}. A value may continue over several lines while brackets
// are open. Keys are lowercase snake case.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "robandit/bandit.hpp"

namespace robandit {

// Parsed but unvalidated document: section -> key -> value, plus the line of
// every key for error messages.
struct ConfigDocument {
    nlohmann::json sections = nlohmann::json::object();
    std::map<std::string, int> lines;  // "section.key" -> 1-based line

    int line_of(const std::string& section, const std::string& key) const;
};

// Throws Error(ParseError) naming the line.
ConfigDocument parse_document(const std::string& text);

enum class ExperimentKind {
    EstimateMedian,
    EstimateMad,
    BaiSimple,
    BaiSuccElim,
    Gaps,
    LowerBound,
    Verify
};

const char* to_string(ExperimentKind k);
ExperimentKind experiment_kind_from_string(const std::string& s);

// CLI command ("estimate", "bai", ...) that runs this kind.
const char* command_for(ExperimentKind k);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Verify;
    std::size_t replications = 1;
    std::uint64_t seed = 0;

    // [instance]
    double eps = 0.0;
    AdversaryModel model = AdversaryModel::Oblivious;
    std::vector<Distribution> arms;
    std::vector<ContaminationStrategy> strategies;  // one per arm
    std::vector<double> p;                          // lower-bound instances

    // [algorithm]
    AlgoConfig algo;
    double error = 0.1;         // target half-width E for estimation
    std::uint64_t samples = 0;  // 0: use the sample-size formula
    double c_eta = 1.0;
    std::vector<double> quality_t;
    std::vector<std::string> suites;

    // [output]
    std::string out_dir = ".";
    std::string prefix;

    std::vector<ContaminatedArm> contaminated_arms() const;
    BanditInstance instance() const;
};

// Parses and validates. Throws Error with code UnknownKey, TypeMismatch,
// FeasibilityViolation or ParseError; messages name the key and line.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Literal decoders, exposed for tests.
Distribution distribution_from_json(const nlohmann::json& j);
ContaminationStrategy strategy_from_json(const nlohmann::json& j, const Distribution& arm,
                                         double eps);

} // namespace robandit
