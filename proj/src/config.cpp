#include "robandit/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "robandit/error.hpp"

namespace robandit {

using nlohmann::json;

namespace {

// ---- value grammar --------------------------------------------------------

class ValueParser {
public:
    ValueParser(const std::string& text, int first_line) : s_(text), line_(first_line) {}

    json parse_all() {
        json v = value();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing characters");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    json value() {
        skip_ws();
        if (pos_ >= s_.size()) fail("missing value");
        const char c = s_[pos_];
        if (c == '"') return string_value();
        if (c == '[') return list();
        if (c == '{') return map();
        if (c == '-' || c == '+' || c == '.' || std::isdigit(static_cast<unsigned char>(c)))
            return number();
        const std::string w = word();
        if (w == "true") return true;
        if (w == "false") return false;
        fail("unrecognized value '" + w + "'");
    }

    std::string word() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    json string_value() {
        ++pos_;
        std::string out;
        while (pos_ < s_.size() && s_[pos_] != '"') {
            if (s_[pos_] == '\n') fail("unterminated string");
            if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
            out += s_[pos_++];
        }
        if (pos_ >= s_.size()) fail("unterminated string");
        ++pos_;
        return out;
    }

    json number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '.' || s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        std::string tok = s_.substr(start, pos_ - start);
        if (!tok.empty() && tok.front() == '+') tok.erase(0, 1);
        const char* b = tok.data();
        const char* e = b + tok.size();
        const bool integral = tok.find_first_of(".eE") == std::string::npos;
        if (integral) {
            if (tok.front() == '-') {
                std::int64_t v = 0;
                auto [p, ec] = std::from_chars(b, e, v);
                if (ec == std::errc() && p == e) return v;
            } else {
                std::uint64_t v = 0;
                auto [p, ec] = std::from_chars(b, e, v);
                if (ec == std::errc() && p == e) return v;
            }
        }
        double d = 0.0;
        auto [p, ec] = std::from_chars(b, e, d);
        if (ec != std::errc() || p != e) fail("malformed number '" + tok + "'");
        return d;
    }

    json list() {
        ++pos_;
        json out = json::array();
        if (eat(']')) return out;
        for (;;) {
            out.push_back(value());
            if (eat(']')) return out;
            if (!eat(',')) fail("expected ',' or ']' in list");
            if (eat(']')) return out;
        }
    }

    json map() {
        ++pos_;
        json out = json::object();
        if (eat('}')) return out;
        for (;;) {
            skip_ws();
            std::string key;
            if (pos_ < s_.size() && s_[pos_] == '"')
                key = string_value().get<std::string>();
            else
                key = word();
            if (key.empty()) fail("expected a key in map");
            if (!eat(':')) fail("expected ':' after map key '" + key + "'");
            if (out.contains(key)) fail("duplicate map key '" + key + "'");
            out[key] = value();
            if (eat('}')) return out;
            if (!eat(',')) fail("expected ',' or '}' in map");
            if (eat('}')) return out;
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
};

int bracket_balance(const std::string& s) {
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (in_string) {
            if (c == '\\') ++i;
            else if (c == '"') in_string = false;
        } else if (c == '"') {
            in_string = true;
        } else if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
        } else if (c == '[' || c == '{') {
            ++depth;
        } else if (c == ']' || c == '}') {
            --depth;
        }
    }
    return depth;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// ---- schema ---------------------------------------------------------------

const std::map<std::string, std::set<std::string>>& schema() {
    static const std::map<std::string, std::set<std::string>> s = {
        {"experiment", {"kind", "replications", "seed"}},
        {"instance", {"eps", "model", "arms", "strategies", "p"}},
        {"algorithm",
         {"alpha", "delta", "t_bar", "b", "m2_bar", "kappa", "eps0", "max_rounds", "early_stop",
          "radius", "error", "samples", "c_eta", "quality_t", "suites"}},
        {"output", {"dir", "prefix"}},
    };
    return s;
}

class Reader {
public:
    explicit Reader(const ConfigDocument& doc) : doc_(doc) {}

    bool has(const std::string& sec, const std::string& key) const {
        return doc_.sections.contains(sec) && doc_.sections[sec].contains(key);
    }

    const json& raw(const std::string& sec, const std::string& key) const {
        return doc_.sections.at(sec).at(key);
    }

    std::string where(const std::string& sec, const std::string& key) const {
        return "line " + std::to_string(doc_.line_of(sec, key)) + ": [" + sec + "] " + key;
    }

    [[noreturn]] void mismatch(const std::string& sec, const std::string& key,
                               const std::string& expected) const {
        throw Error(ErrorCode::TypeMismatch, where(sec, key) + " must be " + expected);
    }

    [[noreturn]] void infeasible(const std::string& sec, const std::string& key,
                                 const std::string& why) const {
        throw Error(ErrorCode::FeasibilityViolation, where(sec, key) + ": " + why);
    }

    double number(const std::string& sec, const std::string& key, double fallback) const {
        if (!has(sec, key)) return fallback;
        const json& v = raw(sec, key);
        if (!v.is_number()) mismatch(sec, key, "a number");
        return v.get<double>();
    }

    std::uint64_t count(const std::string& sec, const std::string& key,
                        std::uint64_t fallback) const {
        if (!has(sec, key)) return fallback;
        const json& v = raw(sec, key);
        if (v.is_number_unsigned()) return v.get<std::uint64_t>();
        if (v.is_number_integer()) infeasible(sec, key, "must be nonnegative");
        if (v.is_number_float()) {
            const double d = v.get<double>();
            if (d >= 0.0 && d <= 9e15 && d == static_cast<double>(static_cast<std::uint64_t>(d)))
                return static_cast<std::uint64_t>(d);
        }
        mismatch(sec, key, "a nonnegative integer");
    }

    std::string text(const std::string& sec, const std::string& key,
                     const std::string& fallback) const {
        if (!has(sec, key)) return fallback;
        const json& v = raw(sec, key);
        if (!v.is_string()) mismatch(sec, key, "a string");
        return v.get<std::string>();
    }

    bool flag(const std::string& sec, const std::string& key, bool fallback) const {
        if (!has(sec, key)) return fallback;
        const json& v = raw(sec, key);
        if (!v.is_boolean()) mismatch(sec, key, "true or false");
        return v.get<bool>();
    }

    std::vector<double> numbers(const std::string& sec, const std::string& key) const {
        std::vector<double> out;
        if (!has(sec, key)) return out;
        const json& v = raw(sec, key);
        if (!v.is_array()) mismatch(sec, key, "a list of numbers");
        for (const auto& x : v) {
            if (!x.is_number()) mismatch(sec, key, "a list of numbers");
            out.push_back(x.get<double>());
        }
        return out;
    }

    std::vector<std::string> strings(const std::string& sec, const std::string& key) const {
        std::vector<std::string> out;
        if (!has(sec, key)) return out;
        const json& v = raw(sec, key);
        if (!v.is_array()) mismatch(sec, key, "a list of strings");
        for (const auto& x : v) {
            if (!x.is_string()) mismatch(sec, key, "a list of strings");
            out.push_back(x.get<std::string>());
        }
        return out;
    }

private:
    const ConfigDocument& doc_;
};

double field(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::TypeMismatch, std::string("missing field '") + key + "'");
    if (!j[key].is_number())
        throw Error(ErrorCode::TypeMismatch, std::string("field '") + key + "' must be a number");
    return j[key].get<double>();
}

double field_or(const json& j, const char* key, double fallback) {
    return j.contains(key) ? field(j, key) : fallback;
}

void only_fields(const json& j, std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : j.items()) {
        if (k == "kind") continue;
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
            throw Error(ErrorCode::UnknownKey, "unknown field '" + k + "' in " +
                                                   j["kind"].get<std::string>() + " literal");
    }
}

std::string kind_of(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw Error(ErrorCode::TypeMismatch, "literal must be a map with a string 'kind'");
    return j["kind"].get<std::string>();
}

} // namespace

int ConfigDocument::line_of(const std::string& section, const std::string& key) const {
    const auto it = lines.find(section + "." + key);
    return it == lines.end() ? 0 : it->second;
}

ConfigDocument parse_document(const std::string& text) {
    ConfigDocument doc;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (t.front() == '[' && t.find('=') == std::string::npos) {
            if (t.back() != ']')
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(lineno) + ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            if (!schema().count(section))
                throw Error(ErrorCode::UnknownKey, "line " + std::to_string(lineno) +
                                                       ": unknown section [" + section + "]");
            if (!doc.sections.contains(section)) doc.sections[section] = json::object();
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(lineno) + ": key outside of any section");
        const std::string key = trim(t.substr(0, eq));
        if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) {
                return std::islower(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c)) || c == '_';
            }))
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) +
                                                   ": keys are lowercase snake case, got '" +
                                                   key + "'");
        if (!schema().at(section).count(key))
            throw Error(ErrorCode::UnknownKey, "line " + std::to_string(lineno) +
                                                   ": unknown key '" + key + "' in [" + section +
                                                   "]");
        if (doc.sections[section].contains(key))
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        std::string value = t.substr(eq + 1);
        const int first = lineno;
        while (bracket_balance(value) > 0 && std::getline(in, line)) {
            ++lineno;
            value += "\n" + line;
        }
        doc.sections[section][key] = ValueParser(value, first).parse_all();
        doc.lines[section + "." + key] = first;
    }
    return doc;
}

const char* to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::EstimateMedian: return "estimate-median";
        case ExperimentKind::EstimateMad: return "estimate-mad";
        case ExperimentKind::BaiSimple: return "bai-simple";
        case ExperimentKind::BaiSuccElim: return "bai-succelim";
        case ExperimentKind::Gaps: return "gaps";
        case ExperimentKind::LowerBound: return "lower-bound";
        case ExperimentKind::Verify: return "verify";
    }
    return "unknown";
}

ExperimentKind experiment_kind_from_string(const std::string& s) {
    for (auto k : {ExperimentKind::EstimateMedian, ExperimentKind::EstimateMad,
                   ExperimentKind::BaiSimple, ExperimentKind::BaiSuccElim, ExperimentKind::Gaps,
                   ExperimentKind::LowerBound, ExperimentKind::Verify})
        if (s == to_string(k)) return k;
    throw Error(ErrorCode::TypeMismatch, "unknown experiment kind '" + s + "'");
}

const char* command_for(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::EstimateMedian:
        case ExperimentKind::EstimateMad: return "estimate";
        case ExperimentKind::BaiSimple:
        case ExperimentKind::BaiSuccElim: return "bai";
        case ExperimentKind::Gaps: return "gaps";
        case ExperimentKind::LowerBound: return "lb";
        case ExperimentKind::Verify: return "verify";
    }
    return "";
}

Distribution distribution_from_json(const json& j) {
    const std::string kind = kind_of(j);
    if (kind == "uniform") {
        only_fields(j, {"lo", "hi"});
        return Distribution::uniform(field(j, "lo"), field(j, "hi"));
    }
    if (kind == "gaussian") {
        only_fields(j, {"mu", "sigma"});
        return Distribution::gaussian(field(j, "mu"), field(j, "sigma"));
    }
    if (kind == "cauchy") {
        only_fields(j, {"x0", "scale"});
        return Distribution::cauchy(field(j, "x0"), field(j, "scale"));
    }
    if (kind == "bernoulli") {
        only_fields(j, {"p"});
        return Distribution::bernoulli(field(j, "p"));
    }
    if (kind == "smoothed_bernoulli") {
        only_fields(j, {"p"});
        return Distribution::smoothed_bernoulli(field(j, "p"));
    }
    if (kind == "dirac") {
        only_fields(j, {"x"});
        return Distribution::dirac(field(j, "x"));
    }
    if (kind == "mixture") {
        only_fields(j, {"weights", "components"});
        if (!j.contains("weights") || !j["weights"].is_array() || !j.contains("components") ||
            !j["components"].is_array())
            throw Error(ErrorCode::TypeMismatch, "mixture needs lists 'weights' and 'components'");
        std::vector<double> w;
        for (const auto& x : j["weights"]) {
            if (!x.is_number()) throw Error(ErrorCode::TypeMismatch, "mixture weights must be numbers");
            w.push_back(x.get<double>());
        }
        std::vector<Distribution> comps;
        for (const auto& c : j["components"]) comps.push_back(distribution_from_json(c));
        return Distribution::mixture(std::move(w), std::move(comps));
    }
    if (kind == "affine") {
        only_fields(j, {"base", "scale", "shift"});
        if (!j.contains("base")) throw Error(ErrorCode::TypeMismatch, "affine needs a 'base'");
        return Distribution::affine(distribution_from_json(j["base"]), field(j, "scale"),
                                    field_or(j, "shift", 0.0));
    }
    throw Error(ErrorCode::TypeMismatch, "unknown distribution kind '" + kind + "'");
}

ContaminationStrategy strategy_from_json(const json& j, const Distribution& arm, double eps) {
    const std::string kind = kind_of(j);
    if (kind == "fixed") {
        only_fields(j, {"g"});
        if (!j.contains("g")) throw Error(ErrorCode::TypeMismatch, "fixed needs a 'g'");
        return FixedContamination{distribution_from_json(j["g"])};
    }
    if (kind == "shift_median_up") {
        only_fields(j, {"magnitude"});
        return ShiftMedianUp{field_or(j, "magnitude", kDefaultShiftMagnitude)};
    }
    if (kind == "shift_median_down") {
        only_fields(j, {"magnitude"});
        return ShiftMedianDown{field_or(j, "magnitude", kDefaultShiftMagnitude)};
    }
    if (kind == "uniform_tail_shift") {
        only_fields(j, {"direction"});
        return UniformTailShift{static_cast<int>(field_or(j, "direction", 1.0))};
    }
    if (kind == "malicious_coupling") {
        only_fields(j, {});
        return malicious_coupling_lemma6(arm, eps).strategy;
    }
    if (kind == "prescient_order_aware") {
        only_fields(j, {"target_quantile"});
        return PrescientOrderAware{field_or(j, "target_quantile", 0.75)};
    }
    throw Error(ErrorCode::TypeMismatch, "unknown strategy kind '" + kind + "'");
}

std::vector<ContaminatedArm> ExperimentConfig::contaminated_arms() const {
    std::vector<ContaminatedArm> out;
    for (std::size_t i = 0; i < arms.size(); ++i)
        out.push_back(make_arm(arms[i], strategies.at(i), eps, model));
    return out;
}

BanditInstance ExperimentConfig::instance() const { return make_instance(contaminated_arms()); }

ExperimentConfig parse_config(const std::string& text) {
    const ConfigDocument doc = parse_document(text);
    const Reader rd(doc);
    ExperimentConfig c;

    if (!rd.has("experiment", "kind"))
        throw Error(ErrorCode::TypeMismatch, "[experiment] kind is required");
    try {
        c.kind = experiment_kind_from_string(rd.text("experiment", "kind", ""));
    } catch (const Error& e) {
        throw Error(ErrorCode::TypeMismatch,
                    rd.where("experiment", "kind") + ": " + std::string(e.what()));
    }
    c.replications = rd.count("experiment", "replications", 1);
    if (c.replications == 0) rd.infeasible("experiment", "replications", "must be >= 1");
    c.seed = rd.count("experiment", "seed", 0);

    c.eps = rd.number("instance", "eps", 0.0);
    if (!(c.eps >= 0.0 && c.eps < 0.5)) rd.infeasible("instance", "eps", "must lie in [0, 1/2)");
    try {
        c.model = adversary_model_from_string(rd.text("instance", "model", "oblivious"));
    } catch (const Error&) {
        rd.mismatch("instance", "model", "one of \"oblivious\", \"prescient\", \"malicious\"");
    }
    c.p = rd.numbers("instance", "p");

    if (rd.has("instance", "arms")) {
        const json& arms = rd.raw("instance", "arms");
        if (!arms.is_array() || arms.empty()) rd.mismatch("instance", "arms", "a nonempty list");
        for (const auto& a : arms) {
            try {
                c.arms.push_back(distribution_from_json(a));
            } catch (const Error& e) {
                throw Error(e.code(), rd.where("instance", "arms") + ": " + e.what());
            }
        }
    }
    if (rd.has("instance", "strategies")) {
        const json& st = rd.raw("instance", "strategies");
        if (!st.is_array()) rd.mismatch("instance", "strategies", "a list");
        if (st.size() != c.arms.size())
            rd.infeasible("instance", "strategies", "need exactly one strategy per arm");
        for (std::size_t i = 0; i < st.size(); ++i) {
            try {
                c.strategies.push_back(strategy_from_json(st[i], c.arms[i], c.eps));
            } catch (const Error& e) {
                throw Error(e.code(), rd.where("instance", "strategies") + ": " + e.what());
            }
        }
    } else if (!c.arms.empty()) {
        if (c.eps > 0.0)
            rd.infeasible("instance", "eps", "contaminated arms need [instance] strategies");
        c.strategies.assign(c.arms.size(), FixedContamination{Distribution::dirac(0.0)});
    }

    AlgoConfig& a = c.algo;
    a.alpha = rd.number("algorithm", "alpha", a.alpha);
    a.delta = rd.number("algorithm", "delta", a.delta);
    a.family.t_bar = rd.number("algorithm", "t_bar", a.family.t_bar);
    a.family.B = rd.number("algorithm", "b", a.family.B);
    a.family.m2_bar = rd.number("algorithm", "m2_bar", a.family.m2_bar);
    a.family.kappa = rd.number("algorithm", "kappa", a.family.kappa);
    a.eps0 = rd.number("algorithm", "eps0", c.eps);
    a.max_rounds = rd.count("algorithm", "max_rounds", a.max_rounds);
    a.early_stop = rd.flag("algorithm", "early_stop", a.early_stop);
    const std::string radius = rd.text("algorithm", "radius", "proof");
    if (radius == "proof") a.radius = RadiusForm::Proof;
    else if (radius == "caption") a.radius = RadiusForm::Caption;
    else rd.mismatch("algorithm", "radius", "\"proof\" or \"caption\"");
    c.error = rd.number("algorithm", "error", c.error);
    c.samples = rd.count("algorithm", "samples", 0);
    c.c_eta = rd.number("algorithm", "c_eta", c.c_eta);
    c.quality_t = rd.numbers("algorithm", "quality_t");
    c.suites = rd.strings("algorithm", "suites");

    c.out_dir = rd.text("output", "dir", c.out_dir);
    c.prefix = rd.text("output", "prefix", c.prefix);

    // Feasibility, reported against the key most likely at fault.
    if (c.kind == ExperimentKind::Verify) return c;
    auto family_key = [&](const char* key, bool ok, const std::string& why) {
        if (!ok) rd.infeasible("algorithm", key, why);
    };
    family_key("t_bar", a.family.t_bar > 0.0 && a.family.t_bar < 0.5, "must lie in (0, 1/2)");
    family_key("b", a.family.B > 0.0, "must be positive");
    family_key("m2_bar", a.family.m2_bar > 0.0, "must be positive");
    family_key("kappa", a.family.kappa >= 0.0, "must be nonnegative");
    family_key("delta", a.delta > 0.0 && a.delta < 1.0, "must lie in (0, 1)");
    family_key("alpha", a.alpha >= 0.0, "must be nonnegative");
    family_key("eps0", a.eps0 >= c.eps, "must be an upper bound on [instance] eps");
    family_key("c_eta", c.c_eta > 0.0, "must be positive");
    for (double t : c.quality_t)
        family_key("quality_t", t >= 0.0 && t <= a.family.t_bar, "entries must lie in [0, t_bar]");

    const EstimationParams est = a.estimation(c.model);
    const bool mal = c.model == AdversaryModel::Malicious;
    const std::string regime = mal ? "eps0 must be below t_bar under a malicious adversary"
                                   : "eps0 must be below 2 t_bar / (1 + 2 t_bar)";
    try {
        check_median_regime(est);
    } catch (const Error&) {
        rd.infeasible("algorithm", "eps0",
                      regime + " (eps0 = " + std::to_string(a.eps0) +
                          ", t_bar = " + std::to_string(a.family.t_bar) + ")");
    }
    const bool needs_mad = c.kind == ExperimentKind::EstimateMad ||
                           (c.kind == ExperimentKind::BaiSimple && !c.quality_t.empty());
    if (needs_mad) {
        try {
            check_mad_regime(est);
        } catch (const Error&) {
            rd.infeasible("algorithm", "eps0", "MAD estimation needs eps0 below 1/B as well");
        }
    }

    if (c.kind == ExperimentKind::LowerBound) {
        if (c.p.size() < 2) rd.infeasible("instance", "p", "need at least two arm parameters");
        family_key("delta", a.delta < 0.15, "lower bound needs delta < 3/20");
        if (!(c.eps < 1.0 / 15.0)) rd.infeasible("instance", "eps", "liftings need eps < 1/15");
        for (double v : c.p)
            if (!(v >= 1.0 / 3.0 && v <= 2.0 / 3.0))
                rd.infeasible("instance", "p", "entries must lie in [1/3, 2/3]");
        return c;
    }

    if (c.arms.empty()) rd.infeasible("instance", "arms", "at least one arm is required");
    try {
        (void)c.instance();
    } catch (const Error& e) {
        throw Error(ErrorCode::FeasibilityViolation,
                    rd.where("instance", "strategies") + ": " + e.what());
    }
    if ((c.kind == ExperimentKind::BaiSimple) && !(a.alpha > 0.0))
        rd.infeasible("algorithm", "alpha", "uniform exploration needs alpha > 0");
    if ((c.kind == ExperimentKind::EstimateMedian || c.kind == ExperimentKind::EstimateMad) &&
        c.samples == 0 && !(c.error > 0.0))
        rd.infeasible("algorithm", "error", "must be positive");
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace robandit
