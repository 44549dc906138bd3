#include "gltlab/config.hpp"

#include "gltlab/acs.hpp"
#include "gltlab/expr.hpp"

#include <fstream>
#include <sstream>

namespace gltlab {

namespace {

const std::vector<Index>  kDefaultDims{64, 128, 256, 512, 1024};
const std::vector<double> kDefaultDeltas{0.1, 0.05, 0.02, 0.01};
const std::vector<double> kDefaultEps{0.5, 0.2, 0.1, 0.05};

[[noreturn]] void fail(const std::string& context, const std::string& msg) {
    throw Error(context + ": " + msg);
}

std::string require_string(const Json& j, const std::string& key, const std::string& context) {
    if (!j.contains(key) || !j[key].is_string()) fail(context, "missing string field \"" + key + "\"");
    return j[key].get<std::string>();
}

std::vector<Index> read_dims(const Json& j, const std::string& context) {
    if (!j.contains("dims")) return kDefaultDims;
    if (!j["dims"].is_array()) fail(context + ".dims", "expected an array of integers");
    std::vector<Index> dims;
    for (const auto& v : j["dims"]) {
        if (!v.is_number_integer()) fail(context + ".dims", "expected an array of integers");
        dims.push_back(v.get<Index>());
    }
    try {
        check_dims_increasing(dims);
    } catch (const Error& e) {
        fail(context + ".dims", e.what());
    }
    return dims;
}

std::vector<double> read_doubles(const Json& j, const char* key, std::vector<double> fallback,
                                 const std::string& context) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_array()) fail(context + "." + key, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) fail(context + "." + key, "expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

ScalarFunc read_scalar_func(const Json& j, const char* key, const std::string& context) {
    const std::string text = require_string(j, key, context);
    try {
        return ScalarFunc::parse(text);
    } catch (const Error& e) {
        fail(context + "." + key, e.what());
    }
}

double read_p(const Json& j, const std::string& context) {
    if (!j.contains("p")) fail(context, "missing field \"p\"");
    if (j["p"].is_string()) {
        if (j["p"].get<std::string>() == "inf") return kInf;
        fail(context + ".p", "expected a number >= 1 or \"inf\"");
    }
    if (!j["p"].is_number()) fail(context + ".p", "expected a number >= 1 or \"inf\"");
    const double p = j["p"].get<double>();
    if (!(p >= 1.0)) fail(context + ".p", "expected a number >= 1 or \"inf\"");
    return p;
}

TestFunc read_test_func(const Json& j, const std::string& context) {
    const std::string kind = require_string(j, "kind", context);
    auto num = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_number())
            fail(context, std::string("missing numeric field \"") + key + "\"");
        return j[key].get<double>();
    };
    try {
        if (kind == "hat") return TestFunc::hat(num("center"), num("width"));
        if (kind == "gaussian") return TestFunc::gaussian(num("center"), num("scale"));
        if (kind == "poly_cutoff") return TestFunc::poly_cutoff(num("degree"), num("radius"));
    } catch (const Error& e) {
        fail(context, e.what());
    }
    fail(context, "unknown test function kind '" + kind + "'");
}

MatrixSeq read_sequence(const std::string& name, const Json& j,
                        const std::map<std::string, MatrixSeq>& defined,
                        const std::filesystem::path& base_dir) {
    const std::string context = "sequences." + name;
    if (!j.is_object()) fail(context, "expected an object");
    const std::string kind = require_string(j, "kind", context);

    if (kind == "toeplitz") {
        if (!j.contains("f")) fail(context, "toeplitz needs \"f\"");
        return toeplitz_seq(trig_poly_from_json(j["f"], context + ".f"), name);
    }
    if (kind == "diag") return diag_seq(read_scalar_func(j, "a", context), name);
    if (kind == "lt") {
        if (!j.contains("f")) fail(context, "lt needs \"f\"");
        if (!j.contains("m") || !j["m"].is_number_integer() || j["m"].get<Index>() < 1)
            fail(context, "lt needs a positive integer \"m\"");
        return lt_seq({read_scalar_func(j, "a", context),
                       trig_poly_from_json(j["f"], context + ".f"), j["m"].get<Index>()},
                      name);
    }
    if (kind == "glt") {
        if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
            fail(context, "glt needs a nonempty \"terms\" array");
        std::vector<GltTerm> terms;
        for (std::size_t i = 0; i < j["terms"].size(); ++i) {
            const Json& t  = j["terms"][i];
            const std::string tc = context + ".terms[" + std::to_string(i) + "]";
            if (!t.contains("f")) fail(tc, "term needs \"f\"");
            terms.push_back({read_scalar_func(t, "a", tc), trig_poly_from_json(t["f"], tc + ".f")});
        }
        return glt_seq(std::move(terms), name);
    }
    if (kind == "identity") {
        MatrixSeq s = identity_seq();
        s.label     = name;
        return s;
    }
    if (kind == "zero") {
        MatrixSeq s = zero_seq();
        s.label     = name;
        return s;
    }
    if (kind == "leading_ones") {
        if (!j.contains("m") || !j["m"].is_number_integer() || j["m"].get<Index>() < 1)
            fail(context, "leading_ones needs a positive integer \"m\"");
        MatrixSeq s = leading_ones_seq(j["m"].get<Index>());
        s.label     = name;
        return s;
    }
    if (kind == "expr") {
        const std::string text = require_string(j, "expr", context);
        try {
            MatrixSeq s = bind_sequence_expr(*parse_algebra(text), defined, context);
            s.label     = name;
            return s;
        } catch (const Error& e) {
            fail(context, e.what());
        }
    }
    if (kind == "file") {
        const std::string rel = require_string(j, "path", context);
        const auto path = base_dir / rel;
        try {
            return fixed_matrix_seq(load_matrix_csv(path), name);
        } catch (const Error& e) {
            fail(context, e.what());
        }
    }
    fail(context, "unknown sequence kind '" + kind + "'");
}

void require_sequence(const std::map<std::string, MatrixSeq>& sequences, const std::string& name,
                      const std::string& context) {
    if (!sequences.count(name)) fail(context, "unknown sequence name '" + name + "'");
}

void check_expect_keys(const Json& expect, const std::string& kind, const std::string& context) {
    static const std::map<std::string, std::vector<std::string>> allowed{
        {"pa", {"headline", "per_n"}},
        {"dacs", {"headline", "per_n"}},
        {"qw", {"headline", "per_n"}},
        {"qwp", {"headline", "per_n"}},
        {"cluster", {"label", "label_at_least"}},
        {"precond", {"label", "label_at_least"}},
        {"distribution", {"verdicts_all", "max_final_residual"}},
        {"isometry", {"headline", "rel_gap_max"}},
        {"korovkin", {"pass", "elements"}},
    };
    const auto it = allowed.find(kind);
    if (it == allowed.end()) return;
    for (const auto& [key, value] : expect.items()) {
        bool known = false;
        for (const auto& k : it->second) known = known || k == key;
        if (!known)
            fail(context + ".expect", "unknown expectation \"" + key + "\" for task kind '" + kind +
                                          "'");
    }
}

TaskConfig read_task(const Json& j, std::size_t index, const ExperimentConfig& cfg) {
    const std::string context = "tasks[" + std::to_string(index) + "]";
    if (!j.is_object()) fail(context, "expected an object");

    TaskConfig t;
    t.kind   = require_string(j, "task", context);
    t.output = j.value("output", "task" + std::to_string(index) + "_" + t.kind);
    t.dims   = read_dims(j, context);
    t.expect = j.value("expect", Json::object());
    if (!t.expect.is_object()) fail(context + ".expect", "expected an object");
    check_expect_keys(t.expect, t.kind, context);
    if (j.contains("grid")) {
        if (!j["grid"].is_number_integer() || j["grid"].get<int>() < 64)
            fail(context + ".grid", "expected an integer >= 64");
        t.grid = j["grid"].get<int>();
    }

    auto read_seq_field = [&](const char* key, std::string& into, bool required) {
        if (!j.contains(key)) {
            if (required) fail(context, std::string("missing field \"") + key + "\"");
            return;
        }
        into = require_string(j, key, context);
        require_sequence(cfg.sequences, into, context + "." + key);
    };

    if (t.kind == "pa") {
        read_seq_field("sequence", t.seq_x, true);
        if (t.dims.size() < 3) fail(context + ".dims", "pa needs at least 3 dims");
    } else if (t.kind == "dacs") {
        read_seq_field("x", t.seq_x, true);
        read_seq_field("y", t.seq_y, true);
        if (t.dims.size() < 3) fail(context + ".dims", "dacs needs at least 3 dims");
    } else if (t.kind == "qw" || t.kind == "qwp") {
        read_seq_field("sequence", t.seq_x, true);
        t.deltas = read_doubles(j, "deltas", kDefaultDeltas, context);
        try {
            check_deltas(t.deltas);
        } catch (const Error& e) {
            fail(context + ".deltas", e.what());
        }
        if (t.kind == "qwp") {
            t.p = read_p(j, context);
            if (t.p == kInf) fail(context + ".p", "qwp needs a finite p");
        }
    } else if (t.kind == "cluster") {
        read_seq_field("x", t.seq_x, true);
        t.seq_y = "";
        read_seq_field("y", t.seq_y, false);
        t.eps = read_doubles(j, "eps", kDefaultEps, context);
        for (double e : t.eps)
            if (!(e > 0.0)) fail(context + ".eps", "eps values must be positive");
        if (t.dims.size() < 4) fail(context + ".dims", "cluster needs at least 4 dims");
    } else if (t.kind == "distribution" || t.kind == "isometry") {
        read_seq_field("sequence", t.seq_x, true);
        t.symbol_name = require_string(j, "symbol", context);
        if (!cfg.symbols.count(t.symbol_name))
            fail(context + ".symbol", "unknown symbol name '" + t.symbol_name + "'");
        if (t.kind == "distribution") {
            if (!j.contains("test_functions") || !j["test_functions"].is_array() ||
                j["test_functions"].size() < 3)
                fail(context, "distribution needs a \"test_functions\" array of at least 3 entries");
            for (std::size_t q = 0; q < j["test_functions"].size(); ++q)
                t.funcs.push_back(read_test_func(
                    j["test_functions"][q], context + ".test_functions[" + std::to_string(q) + "]"));
            if (t.dims.size() < 4) fail(context + ".dims", "distribution needs at least 4 dims");
        } else {
            t.p      = read_p(j, context);
            t.deltas = read_doubles(j, "deltas", kDefaultDeltas, context);
            try {
                check_deltas(t.deltas);
            } catch (const Error& e) {
                fail(context + ".deltas", e.what());
            }
        }
    } else if (t.kind == "precond") {
        t.lt_a = read_scalar_func(j, "a", context);
        if (!j.contains("f")) fail(context, "precond needs \"f\"");
        t.lt_f = trig_poly_from_json(j["f"], context + ".f");
        t.eps  = read_doubles(j, "eps", kDefaultEps, context);
        for (double e : t.eps)
            if (!(e > 0.0)) fail(context + ".eps", "eps values must be positive");
        if (j.contains("schedule")) {
            const Json& s = j["schedule"];
            if (s.is_string() && s.get<std::string>() == "sqrt") {
                t.sqrt_schedule = true;
            } else if (s.is_number_integer() && s.get<Index>() >= 1) {
                t.sqrt_schedule = false;
                t.fixed_m       = s.get<Index>();
            } else {
                fail(context + ".schedule", "expected \"sqrt\" or a positive integer block count");
            }
        }
        if (t.dims.size() < 4) fail(context + ".dims", "precond needs at least 4 dims");
    } else if (t.kind == "korovkin") {
        if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
            fail(context, "korovkin needs a nonempty \"generators\" array");
        for (std::size_t g = 0; g < j["generators"].size(); ++g) {
            const Json& gj = j["generators"][g];
            const std::string gc = context + ".generators[" + std::to_string(g) + "]";
            GeneratorSpec spec;
            spec.name = require_string(gj, "name", gc);
            spec.a    = gj.contains("a") ? read_scalar_func(gj, "a", gc) : ScalarFunc::constant(1.0);
            if (!gj.contains("f")) fail(gc, "generator needs \"f\"");
            spec.f = trig_poly_from_json(gj["f"], gc + ".f");
            for (const auto& existing : t.generators)
                if (existing.name == spec.name) fail(gc, "duplicate generator name '" + spec.name + "'");
            t.generators.push_back(std::move(spec));
        }
        if (j.contains("elements")) {
            if (!j["elements"].is_array()) fail(context + ".elements", "expected an array");
            std::map<std::string, std::size_t> slots;
            for (std::size_t g = 0; g < t.generators.size(); ++g) slots[t.generators[g].name] = g;
            for (std::size_t e = 0; e < j["elements"].size(); ++e) {
                const Json& ej = j["elements"][e];
                const std::string ec = context + ".elements[" + std::to_string(e) + "]";
                const std::string name = require_string(ej, "name", ec);
                const std::string word = require_string(ej, "word", ec);
                try {
                    bind_word(*parse_algebra(word), slots, ec);  // validate now
                } catch (const Error& err) {
                    fail(ec, err.what());
                }
                t.element_words.emplace_back(name, word);
            }
        }
        t.eps = read_doubles(j, "eps", kDefaultEps, context);
        if (j.contains("unitary")) {
            const Json& u = j["unitary"];
            if (u.is_string() && u.get<std::string>() == "fourier") {
                t.unitary = "fourier";
            } else if (u.is_object() && u.contains("block_fourier") &&
                       u["block_fourier"].is_number_integer() &&
                       u["block_fourier"].get<Index>() >= 1) {
                t.unitary   = "block_fourier";
                t.unitary_m = u["block_fourier"].get<Index>();
            } else {
                fail(context + ".unitary", "expected \"fourier\" or {\"block_fourier\": m}");
            }
        }
        if (j.contains("norm_bound")) {
            if (!j["norm_bound"].is_number() || !(j["norm_bound"].get<double>() > 0.0))
                fail(context + ".norm_bound", "expected a positive number");
            t.norm_bound = j["norm_bound"].get<double>();
        }
        if (j.contains("include_gram")) {
            if (!j["include_gram"].is_boolean()) fail(context + ".include_gram", "expected a boolean");
            t.include_gram = j["include_gram"].get<bool>();
        }
        if (t.dims.size() < 4) fail(context + ".dims", "korovkin needs at least 4 dims");
    } else {
        fail(context, "unknown task kind '" + t.kind + "'");
    }
    return t;
}

}  // namespace

CMatrix load_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open matrix file " + path.string());

    std::string header;
    if (!std::getline(in, header) || header.rfind("n=", 0) != 0)
        throw Error("matrix file " + path.string() + ": first line must be \"n=<dim>\"");
    Index n = 0;
    try {
        n = std::stol(header.substr(2));
    } catch (const std::exception&) {
        throw Error("matrix file " + path.string() + ": malformed dimension header \"" + header + "\"");
    }
    if (n < 1) throw Error("matrix file " + path.string() + ": dimension must be >= 1");

    CMatrix a(n, n);
    for (Index row = 0; row < n; ++row) {
        std::string line;
        if (!std::getline(in, line))
            throw Error("matrix file " + path.string() + ": missing row " + std::to_string(row + 1) +
                        " (line " + std::to_string(row + 2) + ")");
        std::istringstream ls(line);
        std::string        cell;
        for (Index col = 0; col < 2 * n; ++col) {
            if (!std::getline(ls, cell, ','))
                throw Error("matrix file " + path.string() + ": line " + std::to_string(row + 2) +
                            " has fewer than " + std::to_string(2 * n) + " values (shape mismatch)");
            try {
                const double v = std::stod(cell);
                if (col % 2 == 0)
                    a(row, col / 2).real(v);
                else
                    a(row, col / 2).imag(v);
            } catch (const std::exception&) {
                throw Error("matrix file " + path.string() + ": line " + std::to_string(row + 2) +
                            ": malformed number \"" + cell + "\"");
            }
        }
        if (std::getline(ls, cell, ','))
            throw Error("matrix file " + path.string() + ": line " + std::to_string(row + 2) +
                        " has more than " + std::to_string(2 * n) + " values (shape mismatch)");
    }
    ensure_finite(a, "matrix file " + path.string());
    return a;
}

ExperimentConfig parse_config(const Json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw Error("config root must be an object");

    ExperimentConfig cfg;
    if (j.contains("sequences")) {
        if (!j["sequences"].is_object()) throw Error("sequences: expected an object");
        for (const auto& [name, spec] : j["sequences"].items())
            cfg.sequences.emplace(name, read_sequence(name, spec, cfg.sequences, base_dir));
    }
    if (j.contains("symbols")) {
        if (!j["symbols"].is_object()) throw Error("symbols: expected an object");
        for (const auto& [name, spec] : j["symbols"].items())
            cfg.symbols.emplace(name, symbol_from_json(spec, "symbols." + name));
    }
    if (!j.contains("tasks") || !j["tasks"].is_array()) throw Error("config needs a \"tasks\" array");
    for (std::size_t i = 0; i < j["tasks"].size(); ++i)
        cfg.tasks.push_back(read_task(j["tasks"][i], i, cfg));
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("config " + path.string() + ": " + e.what());
    }
    try {
        return parse_config(j, path.parent_path());
    } catch (const Error& e) {
        throw Error("config " + path.string() + ": " + e.what());
    }
}

Json config_schema() {
    // hand-maintained draft-07 style schema for `gltlab schema`
    static const char* schema_text = R"JSON({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "gltlab experiment config",
  "type": "object",
  "required": ["tasks"],
  "properties": {
    "sequences": {
      "type": "object",
      "description": "named matrix sequences",
      "additionalProperties": {
        "type": "object",
        "required": ["kind"],
        "properties": {
          "kind": {"enum": ["toeplitz", "diag", "lt", "glt", "identity", "zero", "leading_ones", "expr", "file"]},
          "f": {"$ref": "#/definitions/trigpoly"},
          "a": {"type": "string", "description": "expression in x (constants, + - * / ^, sqrt, abs, sin, cos, exp, i, pi)"},
          "m": {"type": "integer", "minimum": 1},
          "terms": {"type": "array", "items": {"type": "object", "properties": {"a": {"type": "string"}, "f": {"$ref": "#/definitions/trigpoly"}}}},
          "expr": {"type": "string", "description": "algebra over previously defined names: + - * adj(.) ^k, complex scalars"},
          "path": {"type": "string", "description": "matrix CSV: header 'n=<dim>' then n rows of n re,im pairs"}
        }
      }
    },
    "symbols": {
      "type": "object",
      "additionalProperties": {"$ref": "#/definitions/symbol"}
    },
    "tasks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["task"],
        "properties": {
          "task": {"enum": ["pa", "dacs", "qw", "qwp", "cluster", "distribution", "isometry", "precond", "korovkin"]},
          "output": {"type": "string", "description": "output file stem (default task<index>_<kind>)"},
          "sequence": {"type": "string"},
          "x": {"type": "string"},
          "y": {"type": "string", "description": "cluster: defaults to the zero sequence"},
          "symbol": {"type": "string"},
          "dims": {"type": "array", "items": {"type": "integer", "minimum": 1}, "description": "strictly increasing; default [64,128,256,512,1024]"},
          "deltas": {"type": "array", "items": {"type": "number", "minimum": 0, "maximum": 0.5}, "description": "default [0.1,0.05,0.02,0.01]"},
          "eps": {"type": "array", "items": {"type": "number", "exclusiveMinimum": 0}, "description": "default [0.5,0.2,0.1,0.05]"},
          "p": {"description": "number >= 1, or \"inf\" (isometry only)"},
          "grid": {"type": "integer", "minimum": 64, "description": "quadrature resolution per axis, default 512"},
          "test_functions": {"type": "array", "minItems": 3, "items": {"$ref": "#/definitions/testfunc"}},
          "a": {"type": "string", "description": "precond: the [0,1] factor"},
          "f": {"$ref": "#/definitions/trigpoly"},
          "schedule": {"description": "precond: \"sqrt\" (m = floor(sqrt(n)), default) or a fixed integer block count"},
          "generators": {"type": "array", "items": {"type": "object", "required": ["name", "f"], "properties": {"name": {"type": "string"}, "a": {"type": "string"}, "f": {"$ref": "#/definitions/trigpoly"}}}},
          "elements": {"type": "array", "items": {"type": "object", "required": ["name", "word"], "properties": {"name": {"type": "string"}, "word": {"type": "string", "description": "algebra over generator names"}}}},
          "unitary": {"description": "\"fourier\" (default) or {\"block_fourier\": m}"},
          "norm_bound": {"type": "number", "exclusiveMinimum": 0},
          "include_gram": {"type": "boolean", "description": "include sum_i g_i adj(g_i) in the hypothesis set (default true)"},
          "expect": {"$ref": "#/definitions/expect"}
        }
      }
    }
  },
  "definitions": {
    "trigpoly": {
      "type": "object",
      "required": ["coeffs"],
      "properties": {"coeffs": {"type": "object", "additionalProperties": {"$ref": "#/definitions/complex"}, "description": "keys are integer Fourier indices"}}
    },
    "complex": {"oneOf": [{"type": "number"}, {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "number"}}]},
    "symbol": {
      "oneOf": [
        {"type": "object", "required": ["a", "f"], "properties": {"a": {"type": "string"}, "f": {"$ref": "#/definitions/trigpoly"}}},
        {"type": "object", "required": ["op", "args"], "properties": {"op": {"enum": ["add", "mul"]}, "args": {"type": "array", "minItems": 2, "items": {"$ref": "#/definitions/symbol"}}}},
        {"type": "object", "required": ["op", "arg"], "properties": {"op": {"const": "conj"}, "arg": {"$ref": "#/definitions/symbol"}}},
        {"type": "object", "required": ["op", "factor", "arg"], "properties": {"op": {"const": "scale"}, "factor": {"$ref": "#/definitions/complex"}, "arg": {"$ref": "#/definitions/symbol"}}}
      ]
    },
    "testfunc": {
      "type": "object",
      "required": ["kind"],
      "properties": {
        "kind": {"enum": ["hat", "gaussian", "poly_cutoff"]},
        "center": {"type": "number"}, "width": {"type": "number", "exclusiveMinimum": 0},
        "scale": {"type": "number", "exclusiveMinimum": 0},
        "degree": {"type": "number", "exclusiveMinimum": 0}, "radius": {"type": "number", "exclusiveMinimum": 0}
      }
    },
    "expect": {
      "type": "object",
      "description": "per-task assertions; the run exits nonzero when any fails",
      "properties": {
        "headline": {"type": "object", "properties": {"min": {"type": "number"}, "max": {"type": "number"}}},
        "per_n": {"type": "array", "items": {"type": "object", "required": ["n"], "properties": {"n": {"type": "integer"}, "delta": {"type": "number"}, "min": {"type": "number"}, "max": {"type": "number"}}}},
        "label": {"enum": ["strong", "weak", "none", "inconclusive"]},
        "label_at_least": {"enum": ["weak", "strong"]},
        "rel_gap_max": {"type": "number"},
        "verdicts_all": {"type": "boolean"},
        "max_final_residual": {"type": "number"},
        "pass": {"type": "boolean"},
        "elements": {"type": "object", "additionalProperties": {"enum": ["weak", "strong"]}}
      }
    }
  }
})JSON";
    return Json::parse(schema_text);
}

}  // namespace gltlab
