#pragma once
//
// Project     : gltlab
// Module      : runner
// Description : executes experiment configs task by task and evaluates the
//               declared expectations
//

#include "gltlab/config.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace gltlab {

struct ExpectResult {
    std::string what;
    bool        pass = false;
    std::string detail;
};

struct TaskResult {
    std::string name;
    std::string kind;
    bool        ok = false;  // ran to completion
    std::string error;
    std::vector<std::string>  outputs;
    std::vector<ExpectResult> expects;
};

struct RunOptions {
    std::filesystem::path out_dir = ".";
    int           jobs   = 0;  // 0 = library default
    std::uint64_t seed   = 0;  // recorded in metadata; seeds randomized fixtures
    bool          strict = false;
};

struct RunSummary {
    std::vector<TaskResult> tasks;

    bool any_error() const;
    bool all_expects_pass() const;
};

// Tasks run sequentially in declaration order; a numeric failure is recorded
// on its task and the batch continues. Writes one CSV/JSON pair per task plus
// run_summary.json under out_dir.
RunSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& options);

// 0 when every expectation passed and no task errored; under strict mode
// inconclusive labels and absent estimator cells also fail the run.
int exit_code(const RunSummary& summary);

Json summary_to_json(const RunSummary& summary, const RunOptions& options);

}  // namespace gltlab
