#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "effbayes/errors.hpp"
#include "effbayes/experiments.hpp"

using namespace effbayes;

namespace {

int finish(const RunReport& report, const ExperimentConfig& config, const std::string& name) {
    report.write(config.out_dir, name);
    size_t ok = 0;
    for (const auto& row : report.rows) ok += row.holds;
    std::cout << name << ": " << ok << "/" << report.rows.size() << " checks hold; report in "
              << (config.out_dir / (name + "_report.csv")).string() << "\n";
    if (!report.all_hold()) {
        for (const auto& row : report.rows)
            if (!row.holds) std::cout << "  FAIL " << row.name << " [" << row.params << "]\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic Bayesian consistency experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::int64_t seed = -1;
    int precision = -1;
    bool inject_fault = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--seed", seed, "override the config seed");
        cmd->add_option("--precision", precision, "override the config precision (bits)");
    };

    CLI::App* run = app.add_subcommand("run", "run an experiment from a JSON config");
    run->add_option("config", config_path, "path to the config JSON")->required();
    add_common(run);

    CLI::App* suite = app.add_subcommand("suite", "run the full verification suite");
    add_common(suite);
    suite->add_flag("--inject-fault", inject_fault, "perturb one bound to demonstrate failure detection");

    CLI::App* list = app.add_subcommand("list-models", "print the built-in model descriptions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            Json all = Json::array();
            for (const auto& m : builtin_models()) all.push_back(model_to_json(m));
            std::cout << all.dump(2) << "\n";
            return 0;
        }

        ExperimentConfig config;
        if (run->parsed()) {
            config = ExperimentConfig::from_file(config_path);
        } else {
            config.experiment = "suite";
            config.payload = Json{{"experiment", "suite"}};
        }
        if (!out_dir.empty()) config.out_dir = out_dir;
        if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
        if (precision >= 0) {
            if (precision < 4) throw ConfigError("precision must be >= 4");
            config.precision = static_cast<unsigned>(precision);
        }
        if (inject_fault) config.inject_fault = true;

        RunReport report = run_experiment(config);
        return finish(report, config, config.experiment);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
