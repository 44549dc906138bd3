#include "gltlab/json_io.hpp"

#include "gltlab/report_io.hpp"

namespace gltlab {

Complex complex_from_json(const Json& j, const std::string& context) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw Error(context + ": expected a number or [re, im] pair");
}

Json complex_to_json(Complex c) {
    if (c.imag() == 0.0) return Json(c.real());
    return Json::array({c.real(), c.imag()});
}

Json trig_poly_to_json(const TrigPoly& f) {
    Json coeffs = Json::object();
    for (const auto& [k, c] : f.coeffs()) coeffs[std::to_string(k)] = complex_to_json(c);
    return Json{{"coeffs", coeffs}};
}

TrigPoly trig_poly_from_json(const Json& j, const std::string& context) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
        throw Error(context + ": expected {\"coeffs\": {...}}");
    TrigPoly f;
    for (const auto& [key, value] : j["coeffs"].items()) {
        std::size_t used = 0;
        int         k    = 0;
        try {
            k = std::stoi(key, &used);
        } catch (const std::exception&) {
            throw Error(context + ": coefficient key '" + key + "' is not an integer");
        }
        if (used != key.size())
            throw Error(context + ": coefficient key '" + key + "' is not an integer");
        f.set(k, complex_from_json(value, context + ".coeffs[" + key + "]"));
    }
    return f;
}

namespace {

Json symbol_node_to_json(const SymbolExpr::Node& n) {
    using Kind = SymbolExpr::Node::Kind;
    switch (n.kind) {
        case Kind::atom: return Json{{"a", n.a.text()}, {"f", trig_poly_to_json(n.f)}};
        case Kind::add:
            return Json{{"op", "add"},
                        {"args", Json::array({symbol_node_to_json(*n.lhs), symbol_node_to_json(*n.rhs)})}};
        case Kind::mul:
            return Json{{"op", "mul"},
                        {"args", Json::array({symbol_node_to_json(*n.lhs), symbol_node_to_json(*n.rhs)})}};
        case Kind::conj: return Json{{"op", "conj"}, {"arg", symbol_node_to_json(*n.lhs)}};
        case Kind::scale:
            return Json{{"op", "scale"},
                        {"factor", complex_to_json(n.factor)},
                        {"arg", symbol_node_to_json(*n.lhs)}};
    }
    throw Error("symbol_to_json: unreachable node kind");
}

}  // namespace

Json symbol_to_json(const SymbolExpr& s) { return symbol_node_to_json(*s.root()); }

SymbolExpr symbol_from_json(const Json& j, const std::string& context) {
    if (!j.is_object()) throw Error(context + ": expected a symbol object");
    if (j.contains("op")) {
        const std::string op = j["op"].get<std::string>();
        if (op == "add" || op == "mul") {
            if (!j.contains("args") || !j["args"].is_array() || j["args"].size() < 2)
                throw Error(context + ": '" + op + "' needs an \"args\" array of at least two nodes");
            SymbolExpr acc = symbol_from_json(j["args"][0], context + ".args[0]");
            for (std::size_t i = 1; i < j["args"].size(); ++i) {
                SymbolExpr next = symbol_from_json(j["args"][i], context + ".args[" + std::to_string(i) + "]");
                acc = (op == "add") ? SymbolExpr::add(acc, next) : SymbolExpr::mul(acc, next);
            }
            return acc;
        }
        if (op == "conj") {
            if (!j.contains("arg")) throw Error(context + ": 'conj' needs an \"arg\" node");
            return SymbolExpr::conj(symbol_from_json(j["arg"], context + ".arg"));
        }
        if (op == "scale") {
            if (!j.contains("factor") || !j.contains("arg"))
                throw Error(context + ": 'scale' needs \"factor\" and \"arg\"");
            return SymbolExpr::scale(complex_from_json(j["factor"], context + ".factor"),
                                     symbol_from_json(j["arg"], context + ".arg"));
        }
        throw Error(context + ": unknown symbol op '" + op + "'");
    }
    if (!j.contains("a") || !j.contains("f"))
        throw Error(context + ": atom needs \"a\" (expression string) and \"f\" (trig polynomial)");
    if (!j["a"].is_string()) throw Error(context + ".a: expected an expression string");
    ScalarFunc a;
    try {
        a = ScalarFunc::parse(j["a"].get<std::string>());
    } catch (const Error& e) {
        throw Error(context + ".a: " + e.what());
    }
    return SymbolExpr::atom(std::move(a), trig_poly_from_json(j["f"], context + ".f"));
}

Json to_json(const SeminormEstimate& e) {
    Json table = Json::array();
    for (std::size_t i = 0; i < e.dims.size(); ++i) {
        for (std::size_t j = 0; j < e.deltas.size(); ++j) {
            Json cell{{"n", e.dims[i]}, {"delta", e.deltas[j]}};
            if (e.table[i][j])
                cell["value"] = *e.table[i][j];
            else
                cell["value"] = nullptr;
            table.push_back(cell);
        }
    }
    Json out{{"kind", e.kind},
             {"dims", e.dims},
             {"deltas", e.deltas},
             {"table", table},
             {"headline", e.headline},
             {"trend", e.trend}};
    if (e.kind == "qwp") out["p"] = e.p;
    return out;
}

Json to_json(const ClusterReport& r) {
    Json counts = Json::array();
    for (std::size_t i = 0; i < r.dims.size(); ++i) {
        for (std::size_t j = 0; j < r.eps_grid.size(); ++j) {
            counts.push_back(Json{{"n", r.dims[i]},
                                  {"eps", r.eps_grid[j]},
                                  {"count", r.counts[i][j]},
                                  {"count_over_n", static_cast<double>(r.counts[i][j]) /
                                                       static_cast<double>(r.dims[i])}});
        }
    }
    Json frob = Json::array();
    for (std::size_t i = 0; i < r.dims.size(); ++i)
        frob.push_back(
            Json{{"n", r.dims[i]}, {"frob2", r.frob2[i]}, {"frob2_over_n", r.frob2_over_n[i]}});

    Json labels = Json::object();
    for (std::size_t j = 0; j < r.classification.size(); ++j)
        labels[format_float(r.eps_grid[j])] = to_string(r.classification[j]);

    Json slopes = Json::object();
    for (std::size_t j = 0; j < r.fit_slope.size(); ++j)
        slopes[format_float(r.eps_grid[j])] = r.fit_slope[j];

    return Json{{"dims", r.dims},
                {"eps_grid", r.eps_grid},
                {"counts", counts},
                {"frobenius", frob},
                {"classification", labels},
                {"fit_slope_log_count_vs_log_n", slopes},
                {"thresholds", Json{{"weak_tol", r.weak_tol}, {"strong_cap", r.strong_cap}}}};
}

Json to_json(const DistributionReport& r) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.dims.size(); ++i)
        for (std::size_t q = 0; q < r.funcs.size(); ++q)
            rows.push_back(Json{{"n", r.dims[i]},
                                {"F", r.funcs[q].id()},
                                {"lhs", r.lhs[i][q]},
                                {"rhs", r.rhs[q]},
                                {"residual", r.residual[i][q]}});
    Json verdicts = Json::object();
    for (std::size_t q = 0; q < r.funcs.size(); ++q)
        verdicts[r.funcs[q].id()] = static_cast<bool>(r.verdict[q]);
    return Json{{"dims", r.dims}, {"grid", r.grid}, {"rows", rows}, {"verdicts", verdicts}};
}

Json to_json(const IsometryRecord& rec) {
    return Json{{"p", rec.p == kInf ? Json("inf") : Json(rec.p)},
                {"headline", rec.headline},
                {"symbol_side", rec.symbol_side},
                {"rel_gap", rec.rel_gap},
                {"estimate", to_json(rec.estimate)}};
}

Json to_json(const KorovkinEntry& entry) {
    return Json{{"name", entry.name},
                {"label", to_string(entry.label)},
                {"frobenius", to_string(entry.frobenius)},
                {"report", to_json(entry.report)}};
}

Json to_json(const PrecondReport& rep) {
    Json hyp = Json::array();
    for (const auto& h : rep.hypotheses) hyp.push_back(to_json(h));
    Json elems = Json::array();
    for (const auto& e : rep.elements) elems.push_back(to_json(e));
    return Json{{"family", rep.family},
                {"dims", rep.dims},
                {"eps_grid", rep.eps_grid},
                {"norm_bound", rep.norm_bound},
                {"generator_norms", rep.generator_norms},
                {"hypotheses", hyp},
                {"elements", elems},
                {"hypotheses_pass", rep.hypotheses_pass}};
}

}  // namespace gltlab
