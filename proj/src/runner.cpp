#include "gltlab/runner.hpp"

#include "gltlab/expr.hpp"
#include "gltlab/parallel.hpp"
#include "gltlab/report_io.hpp"

#include <fstream>
#include <sstream>

namespace gltlab {

namespace {

int label_rank(ClusterLabel l) {
    switch (l) {
        case ClusterLabel::none: return 0;
        case ClusterLabel::weak: return 1;
        case ClusterLabel::strong: return 2;
        case ClusterLabel::inconclusive: return -1;
    }
    return -1;
}

ClusterLabel label_from_string(const std::string& s) {
    if (s == "strong") return ClusterLabel::strong;
    if (s == "weak") return ClusterLabel::weak;
    if (s == "none") return ClusterLabel::none;
    if (s == "inconclusive") return ClusterLabel::inconclusive;
    throw Error("unknown label '" + s + "'");
}

class TaskRunner {
public:
    TaskRunner(const ExperimentConfig& cfg, const TaskConfig& task, const RunOptions& options,
               TaskResult& result)
        : cfg_(cfg), task_(task), options_(options), result_(result) {}

    void run() {
        if (task_.kind == "pa") {
            run_pa();
        } else if (task_.kind == "dacs") {
            run_dacs();
        } else if (task_.kind == "qw" || task_.kind == "qwp") {
            run_qw_like();
        } else if (task_.kind == "cluster") {
            run_cluster();
        } else if (task_.kind == "distribution") {
            run_distribution();
        } else if (task_.kind == "isometry") {
            run_isometry();
        } else if (task_.kind == "precond") {
            run_precond();
        } else if (task_.kind == "korovkin") {
            run_korovkin();
        } else {
            throw Error("unknown task kind '" + task_.kind + "'");
        }
    }

private:
    const MatrixSeq& sequence(const std::string& name) const {
        auto it = cfg_.sequences.find(name);
        if (it == cfg_.sequences.end()) throw Error("unknown sequence name '" + name + "'");
        return it->second;
    }

    void write_text(const std::string& suffix, const std::string& body) {
        const auto path = options_.out_dir / (task_.output + suffix);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write " + path.string());
        out << body;
        result_.outputs.push_back(path.string());
    }

    template <class Report>
    void emit(const Report& report) {
        std::ostringstream csv;
        write_csv(report, csv);
        write_text(".csv", csv.str());
        write_text(".json", to_json(report).dump(2) + "\n");
    }

    void expect_fail(const std::string& what, const std::string& detail) {
        result_.expects.push_back({what, false, detail});
    }
    void expect_pass(const std::string& what, const std::string& detail = "") {
        result_.expects.push_back({what, true, detail});
    }

    void check_range(const std::string& what, double value, const Json& range) {
        if (range.contains("min") && value < range["min"].get<double>()) {
            expect_fail(what, format_float(value) + " < min " + format_float(range["min"].get<double>()));
            return;
        }
        if (range.contains("max") && value > range["max"].get<double>()) {
            expect_fail(what, format_float(value) + " > max " + format_float(range["max"].get<double>()));
            return;
        }
        expect_pass(what, format_float(value));
    }

    void eval_seminorm_expects(const SeminormEstimate& e) {
        const Json& ex = task_.expect;
        if (ex.contains("headline")) check_range("headline", e.headline, ex["headline"]);
        if (ex.contains("per_n")) {
            for (const auto& cell : ex["per_n"]) {
                const Index n = cell["n"].get<Index>();
                double delta  = cell.value("delta", e.deltas.front());
                std::size_t i = e.dims.size(), jdx = e.deltas.size();
                for (std::size_t k = 0; k < e.dims.size(); ++k)
                    if (e.dims[k] == n) i = k;
                for (std::size_t k = 0; k < e.deltas.size(); ++k)
                    if (e.deltas[k] == delta) jdx = k;
                const std::string what = "per_n(n=" + std::to_string(n) + ")";
                if (i == e.dims.size() || jdx == e.deltas.size() || !e.table[i][jdx]) {
                    expect_fail(what, "cell absent");
                    continue;
                }
                check_range(what, *e.table[i][jdx], cell);
            }
        }
    }

    void eval_label_expects(ClusterLabel aggregate) {
        const Json& ex = task_.expect;
        if (ex.contains("label")) {
            const ClusterLabel want = label_from_string(ex["label"].get<std::string>());
            if (aggregate == want)
                expect_pass("label", to_string(aggregate));
            else
                expect_fail("label", std::string("got ") + to_string(aggregate) + ", want " +
                                         to_string(want));
        }
        if (ex.contains("label_at_least")) {
            const ClusterLabel want = label_from_string(ex["label_at_least"].get<std::string>());
            if (label_rank(aggregate) >= label_rank(want))
                expect_pass("label_at_least", to_string(aggregate));
            else
                expect_fail("label_at_least", std::string("got ") + to_string(aggregate) +
                                                  ", want at least " + to_string(want));
        }
        if (options_.strict && aggregate == ClusterLabel::inconclusive)
            expect_fail("strict.label", "classification is inconclusive");
    }

    void run_pa() {
        const SeminormEstimate e = dacs_estimate(sequence(task_.seq_x), zero_seq(), task_.dims);
        emit(e);
        eval_seminorm_expects(e);
    }

    void run_dacs() {
        const SeminormEstimate e =
            dacs_estimate(sequence(task_.seq_x), sequence(task_.seq_y), task_.dims);
        emit(e);
        eval_seminorm_expects(e);
    }

    void run_qw_like() {
        const SeminormEstimate e =
            task_.kind == "qw"
                ? qw_estimate(sequence(task_.seq_x), task_.dims, task_.deltas)
                : qwp_estimate(sequence(task_.seq_x), task_.dims, task_.deltas, task_.p);
        emit(e);
        eval_seminorm_expects(e);
        if (options_.strict) {
            for (const auto& row : e.table)
                for (const auto& cell : row)
                    if (!cell) expect_fail("strict.cells", "estimator cell absent");
        }
    }

    ClusterReport cluster_report_of(const MatrixSeq& delta) {
        ClusterReport r = outlier_counts(delta, task_.dims, task_.eps);
        classify(r);
        return r;
    }

    void emit_cluster(const ClusterReport& r, FrobeniusEvidence frob, ClusterLabel aggregate) {
        std::ostringstream csv;
        write_csv(r, csv);
        write_text(".csv", csv.str());
        Json j             = to_json(r);
        j["frobenius"]     = Json{{"evidence", to_string(frob)}, {"per_n", j["frobenius"]}};
        j["label"]         = to_string(aggregate);
        write_text(".json", j.dump(2) + "\n");
    }

    void run_cluster() {
        const MatrixSeq& x = sequence(task_.seq_x);
        MatrixSeq delta =
            task_.seq_y.empty() ? x : seq_add(x, seq_scale(Complex(-1.0, 0.0), sequence(task_.seq_y)));
        ClusterReport r = cluster_report_of(delta);
        const FrobeniusEvidence frob = frobenius_criterion(r);
        const ClusterLabel aggregate = aggregate_label(r.classification);
        emit_cluster(r, frob, aggregate);
        eval_label_expects(aggregate);
    }

    void run_distribution() {
        const DistributionReport r = distribution_check(
            sequence(task_.seq_x), cfg_.symbols.at(task_.symbol_name), task_.funcs, task_.dims,
            task_.grid);
        emit(r);
        const Json& ex = task_.expect;
        if (ex.contains("verdicts_all") && ex["verdicts_all"].get<bool>()) {
            bool all = true;
            for (bool v : r.verdict) all = all && v;
            if (all)
                expect_pass("verdicts_all");
            else
                expect_fail("verdicts_all", "a residual trend is not non-increasing");
        }
        if (ex.contains("max_final_residual")) {
            const double cap = ex["max_final_residual"].get<double>();
            double worst = 0.0;
            for (double v : r.residual.back()) worst = std::max(worst, v);
            if (worst <= cap)
                expect_pass("max_final_residual", format_float(worst));
            else
                expect_fail("max_final_residual",
                            format_float(worst) + " > " + format_float(cap));
        }
    }

    void run_isometry() {
        const IsometryRecord rec =
            isometry_check(sequence(task_.seq_x), cfg_.symbols.at(task_.symbol_name), task_.p,
                           task_.dims, task_.deltas, task_.grid);
        std::ostringstream csv;
        write_csv(rec.estimate, csv);
        write_text(".csv", csv.str());
        write_text(".json", to_json(rec).dump(2) + "\n");
        const Json& ex = task_.expect;
        if (ex.contains("headline")) check_range("headline", rec.headline, ex["headline"]);
        if (ex.contains("rel_gap_max")) {
            const double cap = ex["rel_gap_max"].get<double>();
            if (rec.rel_gap <= cap)
                expect_pass("rel_gap_max", format_float(rec.rel_gap));
            else
                expect_fail("rel_gap_max", format_float(rec.rel_gap) + " > " + format_float(cap));
        }
    }

    void run_precond() {
        std::function<Index(Index)> schedule;
        if (task_.sqrt_schedule)
            schedule = sqrt_block_schedule;
        else
            schedule = [m = task_.fixed_m](Index) { return m; };
        auto seqs = lt_precondition_seq(task_.lt_a, task_.lt_f, schedule);
        ClusterReport r = cluster_report_of(seqs.delta);
        const FrobeniusEvidence frob = frobenius_criterion(r);
        const ClusterLabel aggregate = aggregate_label(r.classification);
        emit_cluster(r, frob, aggregate);
        eval_label_expects(aggregate);
    }

    void run_korovkin() {
        std::vector<Generator> gens;
        std::map<std::string, std::size_t> slots;
        for (std::size_t g = 0; g < task_.generators.size(); ++g) {
            const auto& spec = task_.generators[g];
            MatrixSeq seq = glt_seq({{spec.a, spec.f}}, spec.name);
            gens.push_back({spec.name, SymbolExpr::atom(spec.a, spec.f), std::move(seq)});
            slots[spec.name] = g;
        }
        std::vector<std::pair<std::string, Word>> elements;
        for (const auto& [name, text] : task_.element_words)
            elements.emplace_back(name, bind_word(*parse_algebra(text), slots, "element " + name));

        KorovkinOptions opt;
        opt.dims.assign(task_.dims.begin(), task_.dims.end());
        opt.eps_grid               = task_.eps;
        opt.norm_bound             = task_.norm_bound;
        opt.include_generator_gram = task_.include_gram;

        const UnitaryFamily family = task_.unitary == "fourier"
                                         ? UnitaryFamily::fourier_family()
                                         : UnitaryFamily::block_fourier_family(task_.unitary_m);
        const PrecondReport rep = korovkin_run(gens, elements, family, opt);

        write_text(".json", to_json(rep).dump(2) + "\n");
        for (std::size_t i = 0; i < rep.hypotheses.size(); ++i) {
            std::ostringstream csv;
            write_csv(rep.hypotheses[i].report, csv);
            write_text("_hyp" + std::to_string(i) + ".csv", csv.str());
        }
        for (std::size_t i = 0; i < rep.elements.size(); ++i) {
            std::ostringstream csv;
            write_csv(rep.elements[i].report, csv);
            write_text("_elem" + std::to_string(i) + ".csv", csv.str());
        }

        const Json& ex = task_.expect;
        if (ex.contains("pass")) {
            if (rep.hypotheses_pass == ex["pass"].get<bool>())
                expect_pass("pass", rep.hypotheses_pass ? "true" : "false");
            else
                expect_fail("pass", rep.hypotheses_pass ? "hypotheses pass" : "hypotheses fail");
        }
        if (ex.contains("elements")) {
            for (const auto& [name, want_str] : ex["elements"].items()) {
                const ClusterLabel want = label_from_string(want_str.get<std::string>());
                bool found = false;
                for (const auto& e : rep.elements) {
                    if (e.name != name) continue;
                    found = true;
                    if (label_rank(e.label) >= label_rank(want))
                        expect_pass("element " + name, to_string(e.label));
                    else
                        expect_fail("element " + name, std::string("got ") + to_string(e.label) +
                                                           ", want at least " + to_string(want));
                }
                if (!found) expect_fail("element " + name, "no such element in the report");
            }
        }
    }

    const ExperimentConfig& cfg_;
    const TaskConfig&       task_;
    const RunOptions&       options_;
    TaskResult&             result_;
};

}  // namespace

bool RunSummary::any_error() const {
    for (const auto& t : tasks)
        if (!t.ok) return true;
    return false;
}

bool RunSummary::all_expects_pass() const {
    for (const auto& t : tasks)
        for (const auto& e : t.expects)
            if (!e.pass) return false;
    return true;
}

RunSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
    if (options.jobs > 0) set_parallel_jobs(options.jobs);
    std::filesystem::create_directories(options.out_dir);

    RunSummary summary;
    for (const auto& task : cfg.tasks) {
        TaskResult result;
        result.name = task.output;
        result.kind = task.kind;
        try {
            TaskRunner(cfg, task, options, result).run();
            result.ok = true;
        } catch (const std::exception& e) {
            result.ok    = false;
            result.error = e.what();
        }
        summary.tasks.push_back(std::move(result));
    }

    const auto summary_path = options.out_dir / "run_summary.json";
    std::ofstream out(summary_path, std::ios::binary);
    if (out) out << summary_to_json(summary, options).dump(2) << "\n";
    return summary;
}

int exit_code(const RunSummary& summary) {
    if (summary.any_error()) return 1;
    if (!summary.all_expects_pass()) return 1;
    return 0;
}

Json summary_to_json(const RunSummary& summary, const RunOptions& options) {
    Json tasks = Json::array();
    for (const auto& t : summary.tasks) {
        Json expects = Json::array();
        for (const auto& e : t.expects)
            expects.push_back(Json{{"what", e.what}, {"pass", e.pass}, {"detail", e.detail}});
        Json tj{{"name", t.name}, {"kind", t.kind}, {"ok", t.ok}};
        if (!t.ok) tj["error"] = t.error;
        tj["outputs"] = t.outputs;
        tj["expects"] = expects;
        tasks.push_back(tj);
    }
    const ClusterReport defaults;
    return Json{{"seed", options.seed},
                {"jobs", options.jobs == 0 ? parallel_jobs() : options.jobs},
                {"strict", options.strict},
                {"thresholds",
                 Json{{"weak_tol", defaults.weak_tol}, {"strong_cap", defaults.strong_cap}}},
                {"tasks", tasks}};
}

}  // namespace gltlab
