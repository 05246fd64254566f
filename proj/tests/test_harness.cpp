#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "robandit/error.hpp"
#include "robandit/experiment.hpp"
#include "robandit/rng.hpp"
#include "robandit/verify.hpp"

using namespace robandit;
namespace fs = std::filesystem;

namespace {

ErrorCode parse_code(const std::string& text, std::string* message = nullptr) {
    try {
        parse_config(text);
    } catch (const Error& e) {
        if (message) *message = e.what();
        return e.code();
    }
    FAIL("expected a config error");
    return ErrorCode::ParseError;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("robandit_test_" + name);
    fs::remove_all(p);
    return p;
}

const char* kBaiSimple = R"(
[experiment]
kind = "bai-simple"
replications = 12
seed = 5

[instance]
eps = 0.1
arms = [{kind: "uniform", lo: 0.0, hi: 1.0},
        {kind: "uniform", lo: 0.3, hi: 1.3},
        {kind: "uniform", lo: 0.6, hi: 1.6},
        {kind: "uniform", lo: 0.9, hi: 1.9}]
strategies = [{kind: "uniform_tail_shift", direction: 1},
              {kind: "uniform_tail_shift", direction: 1},
              {kind: "uniform_tail_shift", direction: 1},
              {kind: "uniform_tail_shift", direction: -1}]

[algorithm]
alpha = 0.1
delta = 0.1
b = 4
m2_bar = 0.25
quality_t = [0.0, 0.1]
)";

} // namespace

TEST_CASE("seed derivation") {
    // SplitMix64 finalizer of seed + (i + 1) * golden gamma.
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    for (std::uint64_t s : {0ULL, 1ULL, 0xFFFFFFFFFFFFFFFFULL})
        for (std::uint64_t i = 0; i < 4; ++i)
            CHECK(derive_seed(s, i) == mix(s + (i + 1) * 0x9E3779B97F4A7C15ULL));
    // First output of the reference SplitMix64 generator seeded with 0.
    CHECK(derive_seed(0, 0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("minimal config parses") {
    const auto c = parse_config(R"(
# one clean arm
[experiment]
kind = "gaps"
[instance]
arms = [{kind: "uniform", lo: 0, hi: 1}]
)");
    CHECK(c.kind == ExperimentKind::Gaps);
    CHECK(c.arms.size() == 1);
    CHECK(c.replications == 1);
    CHECK(c.algo.eps0 == 0.0);
}

TEST_CASE("config errors") {
    std::string msg;
    CHECK(parse_code(R"(
[experiment]
kind = "bai-succelim"
[instance]
eps = 0.1
model = "malicious"
arms = [{kind: "uniform", lo: 0, hi: 1}]
strategies = [{kind: "malicious_coupling"}]
[algorithm]
eps0 = 0.4
t_bar = 0.3
)",
                     &msg) == ErrorCode::FeasibilityViolation);
    CHECK(msg.find("eps0") != std::string::npos);
    CHECK(msg.find("line 10") != std::string::npos);

    CHECK(parse_code("[experiment]\nkind = \"gaps\"\nreplications = 0\n") ==
          ErrorCode::FeasibilityViolation);
    CHECK(parse_code("[experiment]\nkind = \"gaps\"\ncolour = 1\n", &msg) == ErrorCode::UnknownKey);
    CHECK(msg.find("colour") != std::string::npos);
    CHECK(parse_code("[experiment]\nkind = \"gaps\"\nreplications = \"many\"\n") ==
          ErrorCode::TypeMismatch);
    CHECK(parse_code("[experiment]\nkind = \"gaps\"\nseed = [1, 2\n") == ErrorCode::ParseError);
    CHECK(parse_code("[nowhere]\nx = 1\n") == ErrorCode::UnknownKey);
    CHECK(parse_code(R"(
[experiment]
kind = "gaps"
[instance]
eps = 0.1
arms = [{kind: "uniform", lo: 0, hi: 1}]
[algorithm]
eps0 = 0.05
)") == ErrorCode::FeasibilityViolation);
}

TEST_CASE("bai-simple output") {
    auto c = parse_config(kBaiSimple);
    const auto dir = scratch("bai");
    c.out_dir = dir.string();
    const auto out = run_experiment(c, 1);
    CHECK(out.exit_code == 0);
    std::istringstream csv(slurp(dir / "replications.csv"));
    std::string line;
    std::getline(csv, line);
    CHECK(line.rfind("replication,seed,chosen_arm,correct,total_pulls", 0) == 0);
    std::size_t rows = 0;
    std::string pulls;
    while (std::getline(csv, line)) {
        ++rows;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        if (pulls.empty()) pulls = cells[4];
        CHECK(cells[4] == pulls);
    }
    CHECK(rows == 12);
    CHECK(fs::exists(dir / "quality.csv"));
    CHECK(slurp(dir / "summary.txt").find("success_rate_wilson95_low") != std::string::npos);
}

TEST_CASE("determinism across runs and parallelism") {
    auto c = parse_config(kBaiSimple);
    const auto a = scratch("det_a"), b = scratch("det_b");
    c.out_dir = a.string();
    run_experiment(c, 1);
    c.out_dir = b.string();
    run_experiment(c, 8);
    for (const char* f : {"replications.csv", "quality.csv", "summary.txt"})
        CHECK(slurp(a / f) == slurp(b / f));
}

TEST_CASE("other experiment kinds write their files") {
    const auto dir = scratch("kinds");
    auto est = parse_config(R"(
[experiment]
kind = "estimate-median"
replications = 4
[instance]
eps = 0.1
arms = [{kind: "uniform", lo: 0, hi: 1}, {kind: "gaussian", mu: 1, sigma: 0.2}]
strategies = [{kind: "shift_median_up"}, {kind: "fixed", g: {kind: "dirac", x: -5}}]
[algorithm]
b = 4
m2_bar = 0.25
error = 0.1
[output]
prefix = "est_"
)");
    est.out_dir = dir.string();
    CHECK(run_experiment(est).exit_code == 0);
    CHECK(slurp(dir / "est_replications.csv").find("median") != std::string::npos);

    auto lb = parse_config(R"(
[experiment]
kind = "lower-bound"
replications = 3
[instance]
eps = 0.05
model = "malicious"
p = [0.6, 0.4]
[algorithm]
alpha = 0
b = 10
m2_bar = 0.5
[output]
prefix = "lb_"
)");
    lb.out_dir = dir.string();
    CHECK(run_experiment(lb).exit_code == 0);
    CHECK(slurp(dir / "lb_lb.csv").rfind("k,gap,delta,lb_value,mean_pulls,ratio,success_rate\n", 0) == 0);

    auto v = parse_config("[experiment]\nkind = \"verify\"\n[algorithm]\nsuites = [\"kl\", \"m4-bound\"]\n");
    v.out_dir = dir.string();
    const auto vo = run_experiment(v);
    CHECK(vo.exit_code == 0);
    CHECK(slurp(dir / "verify.csv").find("m4-bound,1") != std::string::npos);
}

TEST_CASE("verify suites") {
    for (const char* name : {"m4-bound", "lifting-identity", "delta-budget", "kl"})
        CHECK(run_suite(name, 0).passed);
    CHECK_THROWS_AS(run_suite("nope", 0), Error);
    CHECK(suite_names().size() == 15);
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(3.0) == "3");
}
