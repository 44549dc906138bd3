#pragma once
//
// Project     : gltlab
// Module      : config
// Description : declarative experiment configs: parsing, validation and the
//               published JSON schema
//

#include "gltlab/distribution.hpp"
#include "gltlab/json_io.hpp"
#include "gltlab/sequences.hpp"
#include "gltlab/symbol.hpp"
#include "gltlab/types.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gltlab {

struct GeneratorSpec {
    std::string name;
    ScalarFunc  a;
    TrigPoly    f;
};

struct TaskConfig {
    std::string kind;    // pa dacs qw qwp cluster distribution isometry precond korovkin
    std::string output;  // output file stem

    std::string seq_x, seq_y, symbol_name;
    std::vector<Index>  dims;
    std::vector<double> deltas;
    std::vector<double> eps;
    double p    = kInf;
    int    grid = 512;
    std::vector<TestFunc> funcs;

    // precond
    ScalarFunc lt_a;
    TrigPoly   lt_f;
    bool       sqrt_schedule = true;
    Index      fixed_m       = 0;

    // korovkin
    std::vector<GeneratorSpec> generators;
    std::vector<std::pair<std::string, std::string>> element_words;  // name -> expression
    std::string unitary = "fourier";
    Index       unitary_m = 1;
    std::optional<double> norm_bound;
    bool include_gram = true;

    Json expect;  // optional assertions, evaluated after the task runs
};

struct ExperimentConfig {
    std::map<std::string, MatrixSeq>  sequences;
    std::map<std::string, SymbolExpr> symbols;
    std::vector<TaskConfig>           tasks;
};

// Parses and validates; errors carry the config path and a JSON-pointer-like
// context. Matrix files resolve relative to the config's directory.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const Json& j, const std::filesystem::path& base_dir);

// Explicit matrices: one header line "n=<dim>" then n rows of n re,im pairs
// (2n comma-separated numbers per row).
CMatrix load_matrix_csv(const std::filesystem::path& path);

/// The config JSON schema served by the `schema` subcommand.
Json config_schema();

}  // namespace gltlab
