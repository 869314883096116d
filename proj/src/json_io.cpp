#include "immaculate/json_io.hpp"

#include <algorithm>
#include <limits>

namespace imm {

Json coeff_json(const Int& c) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (c >= lo && c <= hi) return static_cast<long long>(c);
    return c.str();
}

Json to_json(const Composition& c) { return Json(c.parts()); }

Composition composition_from_json(const Json& j) {
    return Composition(j.get<std::vector<int>>());
}

Json to_json(const SkewShape& s) {
    Json j;
    j["outer"] = to_json(s.outer());
    j["inner"] = to_json(s.inner());
    return j;
}

SkewShape skew_shape_from_json(const Json& j) {
    Composition inner;
    if (j.contains("inner")) inner = composition_from_json(j.at("inner"));
    return SkewShape(composition_from_json(j.at("outer")), inner);
}

Json to_json(const Tableau& t) {
    Json j = to_json(t.shape());
    j["rows"] = t.rows();
    return j;
}

Tableau tableau_from_json(const Json& j) {
    return Tableau(skew_shape_from_json(j), j.at("rows").get<std::vector<std::vector<int>>>());
}

Json to_json(const GeneratorWord& w) {
    std::vector<int> application(w.indices.rbegin(), w.indices.rend());
    return Json(application);
}

GeneratorWord generator_word_from_json(const Json& j) {
    auto application = j.get<std::vector<int>>();
    return GeneratorWord{std::vector<int>(application.rbegin(), application.rend())};
}

Json to_json(const QSymF& f) {
    Json terms = Json::array();
    for (const auto& [comp, c] : f.coeffs()) {
        Json term;
        term["comp"] = to_json(comp);
        term["coeff"] = coeff_json(c);
        terms.push_back(std::move(term));
    }
    Json j;
    j["degree"] = f.degree();
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const TruncatedPoly& p) {
    Json terms = Json::array();
    for (const auto& [exp, c] : p.terms()) {
        Json term;
        term["exp"] = exp;
        term["coeff"] = coeff_json(c);
        terms.push_back(std::move(term));
    }
    Json j;
    j["vars"] = p.vars();
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const HeckePoset& p) {
    Json nodes = Json::array();
    for (const Tableau& t : p.nodes()) nodes.push_back(to_json(t));
    Json covers = Json::array();
    for (const Cover& c : p.covers()) covers.push_back(Json::array({c.from, c.to, c.gen}));
    Json j;
    j["nodes"] = std::move(nodes);
    j["covers"] = std::move(covers);
    j["ranks"] = p.ranks();
    return j;
}

Json to_json(const BranchReport& r) {
    Json blocks = Json::array();
    for (const auto& [beta, size] : r.block_sizes) {
        Json b;
        b["beta"] = to_json(beta);
        b["size"] = size;
        blocks.push_back(std::move(b));
    }
    Json j;
    j["alpha"] = to_json(r.alpha);
    j["m"] = r.m;
    j["kind"] = to_string(r.kind);
    j["basis"] = r.over_set ? "set" : "sit";
    j["blocks"] = std::move(blocks);
    j["partition_ok"] = r.partition_ok;
    j["dimension_ok"] = r.dimension_ok;
    j["intertwiner_ok"] = r.intertwiner_ok;
    j["ok"] = r.ok();
    j["flags"] = r.flags;
    return j;
}

Json to_json(const ClosureReport& r) {
    Json j;
    j["set_closed_rdi"] = r.set_closed_rowstrict;
    j["set_closed_astar"] = r.set_closed_astar;
    j["nset_closed_di"] = r.nset_closed_dual;
    j["nset_closed_abarstar"] = r.nset_closed_abarstar;
    j["ok"] = r.all();
    return j;
}

Json to_json(const SitCountReport& r) {
    Json j;
    j["by_generation"] = r.by_generation;
    j["formula_value"] = r.formula_value;
    if (r.multinomial_value) j["multinomial_value"] = *r.multinomial_value;
    j["formula_agrees"] = r.formula_agrees;
    j["notes"] = r.notes;
    return j;
}

}  // namespace imm
