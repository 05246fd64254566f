// robandit: run a contaminated-bandit experiment from a config file.
//
//   robandit <estimate|bai|gaps|lb|verify> --config PATH [--seed N]
//            [--parallelism P] [--out DIR]
//
// Seed precedence: --seed, then ROBANDIT_SEED, then [experiment] seed.
// Exit codes: 0 success, 1 experiment failure, 2 usage or config error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "robandit/error.hpp"
#include "robandit/experiment.hpp"

namespace {

std::optional<std::uint64_t> seed_from_env() {
    const char* s = std::getenv("ROBANDIT_SEED");
    if (!s || !*s) return std::nullopt;
    try {
        std::size_t used = 0;
        const std::string text(s);
        const auto v = std::stoull(text, &used, 0);
        if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw robandit::Error(robandit::ErrorCode::InvalidArgument,
                              "ROBANDIT_SEED is not an unsigned 64-bit integer: '" +
                                  std::string(s) + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contaminated best-arm identification experiments"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::optional<std::uint64_t> seed;
    unsigned parallelism = 1;

    const char* commands[][2] = {
        {"estimate", "median or MAD estimation with confidence intervals"},
        {"bai", "best-arm identification (uniform exploration or successive elimination)"},
        {"gaps", "effective gaps of a contaminated instance"},
        {"lb", "lower-bound liftings and hardness probe"},
        {"verify", "property suites"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        auto* cfg = sub->add_option("--config", config_path, "experiment config file");
        if (std::string(name) != "verify") cfg->required();
        sub->add_option("--seed", seed, "master seed, overrides ROBANDIT_SEED and the config");
        sub->add_option("--parallelism", parallelism, "worker threads")
            ->check(CLI::Range(1u, 1024u));
        sub->add_option("--out", out_dir, "output directory");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    robandit::ExperimentConfig config;
    try {
        if (!config_path.empty()) config = robandit::load_config(config_path);
        if (robandit::command_for(config.kind) != command) {
            std::cerr << "error: config kind '" << robandit::to_string(config.kind)
                      << "' runs with 'robandit " << robandit::command_for(config.kind)
                      << "', not '" << command << "'\n";
            return 2;
        }
        if (seed) config.seed = *seed;
        else if (auto env = seed_from_env()) config.seed = *env;
        if (!out_dir.empty()) config.out_dir = out_dir;
    } catch (const robandit::Error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    try {
        const auto outcome = robandit::run_experiment(config, parallelism);
        std::cout << outcome.summary;
        for (const auto& f : outcome.files) std::cout << "wrote " << f << '\n';
        return outcome.exit_code;
    } catch (const robandit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
