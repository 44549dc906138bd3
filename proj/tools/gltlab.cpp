//
// Project     : gltlab
// Module      : gltlab (CLI)
// Description : declarative experiment runner for structured matrix
//               sequences: run / validate / schema
//

#include "gltlab/config.hpp"
#include "gltlab/parallel.hpp"
#include "gltlab/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

int jobs_from_env() {
    const char* env = std::getenv("GLT_LAB_JOBS");
    if (!env) return 0;
    const int jobs = std::atoi(env);
    return jobs > 0 ? jobs : 0;
}

void print_errors(const std::string& message, bool as_json) {
    if (as_json) {
        gltlab::Json j{{"errors", gltlab::Json::array({message})}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for structured matrix sequences"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    int         jobs    = 0;
    std::uint64_t seed  = 0;
    bool        strict  = false;
    bool        err_json = false;

    auto* run = app.add_subcommand("run", "execute an experiment config");
    run->add_option("config", config_path, "experiment config (JSON)")->required();
    run->add_option("--out-dir", out_dir, "output directory (default .)");
    run->add_option("--jobs", jobs, "worker threads (default GLT_LAB_JOBS or hardware)");
    run->add_option("--seed", seed, "seed recorded in metadata; seeds randomized fixtures");
    run->add_flag("--strict", strict, "escalate inconclusive labels and absent cells to failures");
    run->add_flag("--error-json", err_json, "emit errors as JSON on stdout");

    auto* validate = app.add_subcommand("validate", "parse and validate a config");
    validate->add_option("config", config_path, "experiment config (JSON)")->required();
    validate->add_flag("--json", err_json, "emit errors as JSON on stdout");

    auto* schema = app.add_subcommand("schema", "print the config JSON schema");

    CLI11_PARSE(app, argc, argv);

    if (schema->parsed()) {
        std::cout << gltlab::config_schema().dump(2) << "\n";
        return 0;
    }

    if (validate->parsed()) {
        try {
            gltlab::load_config(config_path);
        } catch (const std::exception& e) {
            print_errors(e.what(), err_json);
            return 2;
        }
        if (err_json)
            std::cout << gltlab::Json{{"errors", gltlab::Json::array()}}.dump(2) << "\n";
        else
            std::cout << "OK\n";
        return 0;
    }

    // run
    gltlab::ExperimentConfig cfg;
    try {
        cfg = gltlab::load_config(config_path);
    } catch (const std::exception& e) {
        print_errors(e.what(), err_json);
        return 2;
    }

    gltlab::RunOptions options;
    options.out_dir = out_dir;
    options.jobs    = jobs > 0 ? jobs : jobs_from_env();
    options.seed    = seed;
    options.strict  = strict;

    gltlab::RunSummary summary;
    try {
        summary = gltlab::run_experiment(cfg, options);
    } catch (const std::exception& e) {
        print_errors(e.what(), err_json);
        return 2;
    }

    for (const auto& t : summary.tasks) {
        if (!t.ok) {
            std::cerr << "[task " << t.name << "] error: " << t.error << "\n";
            continue;
        }
        for (const auto& e : t.expects) {
            std::cout << "[task " << t.name << "] " << (e.pass ? "pass" : "FAIL") << " " << e.what;
            if (!e.detail.empty()) std::cout << " (" << e.detail << ")";
            std::cout << "\n";
        }
    }
    return gltlab::exit_code(summary);
}
