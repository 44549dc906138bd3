#include "gltlab/config.hpp"

#include "gltlab/expr.hpp"
#include "gltlab/report_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace gltlab;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "gltlab_config_test";
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
}

}  // namespace

TEST_SUITE_BEGIN("config");

TEST_CASE("algebra expression parser") {
    const auto ast = parse_algebra("2*T + adj(T)*T - 1.5i*S");
    CHECK(ast->kind == AlgebraAst::Kind::add);

    std::map<std::string, MatrixSeq> seqs;
    seqs.emplace("T", toeplitz_seq(TrigPoly::harmonic(1)));
    const MatrixSeq bound = bind_sequence_expr(*parse_algebra("T*adj(T) + 2"), seqs, "test");
    const CMatrix l = toeplitz(TrigPoly::harmonic(1), 4);
    const CMatrix expect = l * l.adjoint() + 2.0 * CMatrix::Identity(4, 4);
    CHECK((bound.at(4) - expect).cwiseAbs().maxCoeff() <= 1e-14);

    // ^ expands to repeated products
    seqs.emplace("S", seqs.at("T"));
    const MatrixSeq pow = bind_sequence_expr(*parse_algebra("(T + adj(T))^2"), seqs, "test");
    const CMatrix h = l + l.adjoint();
    CHECK((pow.at(4) - h * h).cwiseAbs().maxCoeff() <= 1e-14);

    CHECK_THROWS_AS(parse_algebra("T +"), Error);
    CHECK_THROWS_AS(parse_algebra("T ^ 0"), Error);
    CHECK_THROWS_AS(bind_sequence_expr(*parse_algebra("missing"), seqs, "test"), Error);
}

TEST_CASE("symbol json round trip") {
    TrigPoly f = TrigPoly::constant(2.0);
    f.set(1, Complex(0.5, -0.25));
    const SymbolExpr s = SymbolExpr::scale(
        Complex(0.0, 1.0),
        SymbolExpr::mul(SymbolExpr::atom(ScalarFunc::parse("x^2"), f),
                        SymbolExpr::conj(SymbolExpr::constant(3.0))));
    const Json j = symbol_to_json(s);
    const SymbolExpr back = symbol_from_json(j, "round");
    for (double x : {0.1, 0.6}) {
        for (double theta : {-1.0, 2.0}) {
            CHECK(std::abs(back.eval(x, theta) - s.eval(x, theta)) <= 1e-14);
        }
    }

    CHECK_THROWS_AS(symbol_from_json(Json{{"op", "spin"}}, "bad"), Error);
    CHECK_THROWS_AS(symbol_from_json(Json{{"a", "x +"}, {"f", Json{{"coeffs", Json::object()}}}}, "bad"),
                    Error);
    CHECK_THROWS_AS(trig_poly_from_json(Json{{"coeffs", Json{{"half", 1.0}}}}, "bad"), Error);
}

TEST_CASE("matrix csv loader") {
    const fs::path dir = temp_dir();
    const fs::path good = dir / "good.csv";
    write_file(good, "n=2\n1,0,0,-1\n0,1,2,0\n");
    const CMatrix a = load_matrix_csv(good);
    CHECK(a(0, 0) == Complex(1, 0));
    CHECK(a(0, 1) == Complex(0, -1));
    CHECK(a(1, 0) == Complex(0, 1));
    CHECK(a(1, 1) == Complex(2, 0));

    const fs::path short_row = dir / "short.csv";
    write_file(short_row, "n=2\n1,0,0\n0,1,2,0\n");
    CHECK_THROWS_WITH_AS(load_matrix_csv(short_row), doctest::Contains("shape mismatch"), Error);

    const fs::path bad_header = dir / "header.csv";
    write_file(bad_header, "dim 2\n1,0,0,0\n");
    CHECK_THROWS_AS(load_matrix_csv(bad_header), Error);

    CHECK_THROWS_WITH_AS(load_matrix_csv(dir / "missing.csv"), doctest::Contains("missing.csv"),
                         Error);
}

TEST_CASE("config validation rejects the documented error classes") {
    auto parse = [](const std::string& body) {
        return parse_config(Json::parse(body), fs::path("."));
    };

    // unknown sequence name
    CHECK_THROWS_WITH_AS(
        parse(R"({"tasks": [{"task": "pa", "sequence": "nope", "dims": [4, 8, 16]}]})"),
        doctest::Contains("unknown sequence name"), Error);

    // dims not strictly increasing
    CHECK_THROWS_WITH_AS(
        parse(R"({"sequences": {"I": {"kind": "identity"}},
                  "tasks": [{"task": "pa", "sequence": "I", "dims": [8, 8, 16]}]})"),
        doctest::Contains("strictly increasing"), Error);

    // unknown symbol
    CHECK_THROWS_WITH_AS(
        parse(R"({"sequences": {"I": {"kind": "identity"}},
                  "tasks": [{"task": "isometry", "sequence": "I", "symbol": "s", "p": 1}]})"),
        doctest::Contains("unknown symbol name"), Error);

    // deltas out of range
    CHECK_THROWS_WITH_AS(
        parse(R"({"sequences": {"I": {"kind": "identity"}},
                  "tasks": [{"task": "qw", "sequence": "I", "deltas": [0.7]}]})"),
        doctest::Contains("deltas"), Error);

    // korovkin element referencing an undefined generator
    CHECK_THROWS_WITH_AS(
        parse(R"({"tasks": [{"task": "korovkin",
                             "generators": [{"name": "g", "f": {"coeffs": {"1": 1}}}],
                             "elements": [{"name": "bad", "word": "g*h"}]}]})"),
        doctest::Contains("unknown generator name"), Error);

    // context names the failing task
    try {
        parse(R"({"tasks": [{"task": "qw"}]})");
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("tasks[0]") != std::string::npos);
    }

    // typos in expect blocks are caught at validation time
    CHECK_THROWS_WITH_AS(
        parse(R"({"sequences": {"I": {"kind": "identity"}},
                  "tasks": [{"task": "qw", "sequence": "I",
                             "expect": {"healine": {"min": 1}}}]})"),
        doctest::Contains("unknown expectation"), Error);
}

TEST_CASE("file-backed sequences resolve against the config directory") {
    const fs::path dir = temp_dir();
    write_file(dir / "m.csv", "n=2\n1,0,0,0\n0,0,1,0\n");
    write_file(dir / "cfg.json", R"({
        "sequences": {"M": {"kind": "file", "path": "m.csv"}},
        "tasks": [{"task": "qw", "sequence": "M", "dims": [2], "deltas": [0.0]}]
    })");
    const ExperimentConfig cfg = load_config(dir / "cfg.json");
    CHECK(cfg.sequences.at("M").at(2)(0, 0) == Complex(1, 0));
    // shape mismatch surfaces when a task asks for another dimension
    CHECK_THROWS_WITH_AS(cfg.sequences.at("M").at(5), doctest::Contains("defined only at"), Error);
}

TEST_CASE("schema is well formed") {
    const Json schema = config_schema();
    CHECK(schema.contains("properties"));
    CHECK(schema["properties"].contains("tasks"));
    CHECK(schema.contains("definitions"));
    CHECK(schema["definitions"].contains("symbol"));
}

TEST_CASE("float formatting is stable and locale free") {
    CHECK(format_float(1.0) == "1");
    CHECK(format_float(0.1) == "0.10000000000000001");
    CHECK(format_float(-2.5e-17) == "-2.4999999999999999e-17");
    CHECK(format_float(1.0 / 3.0) == "0.33333333333333331");
}

TEST_SUITE_END();
