#include "immaculate/cli.hpp"

#include <fstream>
#include <set>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "immaculate/json_io.hpp"

namespace imm::cli {

namespace {

Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw std::invalid_argument("malformed composition list: " + text);
        size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size())
            throw std::invalid_argument("malformed composition list: " + text);
        parts.push_back(value);
    }
    return Composition(std::move(parts));
}

std::vector<std::vector<int>> parse_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::string segment;
    std::istringstream in(text);
    while (std::getline(in, segment, '/')) {
        if (segment.empty()) {
            rows.push_back({});
            continue;
        }
        rows.push_back(parse_composition(segment).parts());
    }
    if (text.empty()) rows.clear();
    if (!text.empty() && text.back() == '/') rows.push_back({});
    return rows;
}

SkewShape make_shape(const std::string& outer, const std::string& inner) {
    return SkewShape(parse_composition(outer),
                     inner.empty() ? Composition() : parse_composition(inner));
}

std::vector<DescentKind> parse_kinds(const std::string& kind) {
    if (kind.empty())
        return {kAllDescentKinds.begin(), kAllDescentKinds.end()};
    auto k = descent_kind_from_string(kind);
    if (!k) throw std::invalid_argument("unknown kind: " + kind);
    return {*k};
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ----- verification suites ------------------------------------------------

bool relations_ok(const SkewShape& shape) {
    for (DescentKind kind : kAllDescentKinds)
        if (!check_relations(kind, shape)) return false;
    return true;
}

bool poset_structure_ok(const SkewShape& shape, std::string& detail) {
    const HeckePoset poset = build_poset(shape);
    const auto minimal = minimal_elements(poset);
    const auto maximal = maximal_elements(poset);
    if (minimal.size() != 1 || !(minimal.front() == s0(shape))) {
        detail = "minimum is not s0";
        return false;
    }
    if (maximal.size() != 1 || !(maximal.front() == srow(shape))) {
        detail = "maximum is not srow";
        return false;
    }
    if (!is_graded(poset)) {
        detail = "not graded";
        return false;
    }
    const long long span = rank_formula(shape.outer(), shape.inner());
    const long long measured = inversions(srow(shape).reading_word()) -
                               inversions(s0(shape).reading_word());
    if (span != measured) {
        detail = "rank formula disagrees with inversion counts";
        return false;
    }
    if (!poset.nodes().empty()) {
        const int top = *std::max_element(poset.ranks().begin(), poset.ranks().end());
        if (top != measured) {
            detail = "poset rank disagrees with formula";
            return false;
        }
    }
    const auto rdi = action_covers(shape, DescentKind::RowStrict);
    if (action_covers(shape, DescentKind::AStar) != rdi) {
        detail = "A* digraph differs from row-strict digraph";
        return false;
    }
    std::vector<Cover> reversed;
    reversed.reserve(rdi.size());
    for (const Cover& c : rdi) reversed.push_back({c.to, c.from, c.gen});
    std::sort(reversed.begin(), reversed.end());
    const auto di = action_covers(shape, DescentKind::DualImmaculate);
    if (di != reversed) {
        detail = "dual immaculate digraph is not the reversal";
        return false;
    }
    if (action_covers(shape, DescentKind::ABarStar) != di) {
        detail = "Abar* digraph differs from dual immaculate digraph";
        return false;
    }
    return true;
}

bool qsym_identities_ok(const SkewShape& shape, std::string& detail, int min_vars) {
    const int v = std::max(shape.cell_count(), min_vars);
    for (DescentKind kind : kAllDescentKinds)
        for (bool extended : {false, true}) {
            const TruncatedPoly lhs = to_poly(char_tableaux(shape, kind, extended), v);
            const TruncatedPoly rhs = gf_fillings(shape, family_for(kind, extended), v);
            if (!(lhs == rhs)) {
                detail = "descent expansion differs from filling expansion for kind " +
                         to_string(kind) + (extended ? " over set" : " over sit");
                return false;
            }
        }
    for (bool extended : {false, true}) {
        if (!(psi(char_tableaux(shape, DescentKind::DualImmaculate, extended)) ==
              char_tableaux(shape, DescentKind::RowStrict, extended)) ||
            !(psi(char_tableaux(shape, DescentKind::AStar, extended)) ==
              char_tableaux(shape, DescentKind::ABarStar, extended))) {
            detail = "psi does not exchange the paired characteristics";
            return false;
        }
    }
    return true;
}

bool schur_ok(int max_n, std::string& detail) {
    for (int n = 1; n <= max_n; ++n)
        for (const Composition& lambda : compositions_of(n)) {
            if (!lambda.is_partition()) continue;
            for (const Composition& mu : contained_compositions(lambda)) {
                if (!mu.is_partition() || !contains(mu, lambda)) continue;
                const SkewShape shape(lambda, mu);
                const int v = shape.cell_count();
                const TruncatedPoly extended =
                    gf_fillings(shape, {ColumnRule::AllColsStrict, RowRule::Weak}, v);
                if (!(extended == skew_schur_poly(lambda, mu, v))) {
                    detail = "extended generating function differs from the Schur polynomial";
                    return false;
                }
                const TruncatedPoly row_strict =
                    gf_fillings(shape, {ColumnRule::AllColsWeak, RowRule::Strict}, v);
                Composition lt = transpose(lambda);
                Composition mt = mu.empty() ? Composition() : transpose(mu);
                if (!(row_strict == skew_schur_poly(lt, mt, v))) {
                    detail = "row-strict extended differs from the transposed Schur polynomial";
                    return false;
                }
            }
        }
    return true;
}

bool hooked_ok(int max_n, std::string& detail) {
    for (int n = 1; n <= max_n; ++n)
        for (const Composition& alpha : compositions_of(n))
            for (const Composition& beta : contained_compositions(alpha)) {
                if (beta.length() != alpha.length()) continue;
                const SkewShape shape(alpha, beta);
                const int v = shape.cell_count();
                const TruncatedPoly h = hooked_product(shape, 'h', v);
                const TruncatedPoly e = hooked_product(shape, 'e', v);
                if (!(gf_fillings(shape, family_for(DescentKind::DualImmaculate, false), v) == h) ||
                    !(gf_fillings(shape, family_for(DescentKind::AStar, false), v) == h)) {
                    detail = "h-product identity fails";
                    return false;
                }
                if (!(gf_fillings(shape, family_for(DescentKind::RowStrict, false), v) == e) ||
                    !(gf_fillings(shape, family_for(DescentKind::ABarStar, false), v) == e)) {
                    detail = "e-product identity fails";
                    return false;
                }
            }
    return true;
}

bool two_alphabet_ok(int max_n, std::string& detail) {
    for (int n = 1; n <= max_n; ++n)
        for (const Composition& alpha : compositions_of(n))
            for (DescentKind kind : {DescentKind::DualImmaculate, DescentKind::RowStrict})
                if (!two_alphabet_check(alpha, kind, n, n)) {
                    detail = "two-alphabet expansion fails for kind " + to_string(kind);
                    return false;
                }
    return true;
}

bool modules_ok(const SkewShape& shape, std::string& detail) {
    for (DescentKind kind : kAllDescentKinds) {
        if (!composition_series_check(shape, kind).ok) {
            detail = "composition series fails for kind " + to_string(kind);
            return false;
        }
        if (!cyclicity_check(shape, kind)) {
            detail = "cyclicity fails for kind " + to_string(kind);
            return false;
        }
    }
    if (!closure_check(shape).all()) {
        detail = "closure fails";
        return false;
    }
    return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of skew standard immaculate tableaux: "
                 "0-Hecke actions, Hecke posets, and quasisymmetric functions."};
    app.require_subcommand(1);

    std::string outer, inner, out_path, format, kind, rows_text, direction;
    std::string col_rule_name, row_rule_name, suite;
    bool set_flag = false, nset_flag = false, all_flag = false;
    int vars = 0, threshold = -1, max_n = 6;

    auto add_shape_options = [&](CLI::App* cmd, bool required_outer = true) {
        auto* opt = cmd->add_option("--outer", outer, "Outer composition, e.g. 4,2,4");
        if (required_outer) opt->required();
        cmd->add_option("--inner", inner, "Inner composition (omit for the straight shape)");
    };

    auto* enumerate = app.add_subcommand("enumerate", "List standard immaculate tableaux");
    add_shape_options(enumerate);
    enumerate->add_flag("--set", set_flag, "Only extended tableaux");
    enumerate->add_flag("--nset", nset_flag, "Only non-extended tableaux");
    enumerate->add_option("--format", format, "json or text")->default_val("json");
    enumerate->add_option("--out", out_path, "Write output to a file");

    auto* poset = app.add_subcommand("poset", "Export the skew immaculate Hecke poset");
    add_shape_options(poset);
    poset->add_flag("--set", set_flag, "Highlight extended tableaux");
    poset->add_option("--format", format, "dot or json")->default_val("dot");
    poset->add_option("--out", out_path, "Write output to a file");

    auto* chr = app.add_subcommand("char", "Quasisymmetric characteristic in the fundamental basis");
    add_shape_options(chr);
    chr->add_option("--kind", kind, "di, rdi, astar or abarstar")->required();
    chr->add_flag("--set", set_flag, "Sum over extended tableaux");
    chr->add_option("--format", format, "json or text")->default_val("json");
    chr->add_option("--out", out_path, "Write output to a file");

    auto* gf = app.add_subcommand("gf", "Generating function of a filling family");
    add_shape_options(gf);
    gf->add_option("--col-rule", col_rule_name,
                   "first-strict, first-weak, all-strict or all-weak")->required();
    gf->add_option("--row-rule", row_rule_name, "strict or weak")->required();
    gf->add_option("--vars", vars, "Number of variables")->required();
    gf->add_option("--format", format, "json or text")->default_val("json");
    gf->add_option("--out", out_path, "Write output to a file");

    auto* straighten = app.add_subcommand(
        "straighten", "Generator word connecting a tableau to s0 or srow under the "
                      "row-strict action.  The word is printed in application order: "
                      "the first listed generator is applied first.");
    add_shape_options(straighten);
    straighten->add_option("--rows", rows_text,
                           "Tableau rows, bottom first, '/'-separated, e.g. 2,6/1,8/5,10/3/4,7,9")
        ->required();
    straighten->add_option("--direction", direction, "bottom (to s0) or top (to srow)")
        ->default_val("bottom");
    straighten->add_option("--out", out_path, "Write output to a file");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    add_shape_options(verify, /*required_outer=*/false);
    verify->add_option("--suite", suite,
                       "relations, poset, qsym, schur, hooked, two-alphabet, branching, "
                       "modules or enumeration");
    verify->add_option("--m", threshold, "Restriction threshold for the branching suite");
    verify->add_option("--kind", kind, "Restrict to one action kind");
    verify->add_option("--maxn", max_n, "Exhaustive bound on |outer|")->default_val(6);
    verify->add_option("--vars", vars,
                       "Check polynomial identities in at least this many variables "
                       "(default: the skew cell count, which is already faithful)");
    verify->add_flag("--all", all_flag, "Run every exhaustive suite up to --maxn");
    verify->add_option("--out", out_path, "Write output to a file");

    std::vector<const char*> argv;
    argv.push_back("immaculate");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (enumerate->parsed()) {
            const SkewShape shape = make_shape(outer, inner);
            std::vector<Tableau> tableaux =
                set_flag ? generate_set(shape) : generate_sit(shape);
            if (nset_flag) {
                std::vector<Tableau> rest;
                for (const Tableau& t : generate_sit(shape))
                    if (!is_set(t)) rest.push_back(t);
                tableaux = std::move(rest);
            }
            if (format == "json") {
                Json j;
                j["shape"] = to_json(shape);
                j["count"] = tableaux.size();
                Json list = Json::array();
                for (const Tableau& t : tableaux) list.push_back(to_json(t));
                j["tableaux"] = std::move(list);
                emit(dump(j), out_path, out);
            } else {
                std::ostringstream text;
                for (const Tableau& t : tableaux) {
                    for (size_t i = 0; i < t.rows().size(); ++i) {
                        if (i) text << " / ";
                        // Inner cells render as dots.
                        for (int c = 0; c < shape.inner().part(static_cast<int>(i) + 1); ++c) {
                            if (c) text << ",";
                            text << "·";
                        }
                        for (size_t c = 0; c < t.rows()[i].size(); ++c) {
                            if (c || shape.inner().part(static_cast<int>(i) + 1)) text << ",";
                            text << t.rows()[i][c];
                        }
                    }
                    text << "\n";
                }
                text << "count: " << tableaux.size() << "\n";
                emit(text.str(), out_path, out);
            }
            return 0;
        }

        if (poset->parsed()) {
            const SkewShape shape = make_shape(outer, inner);
            const HeckePoset p = build_poset(shape);
            if (format == "dot")
                emit(export_dot(p, set_flag), out_path, out);
            else
                emit(dump(to_json(p)), out_path, out);
            return 0;
        }

        if (chr->parsed()) {
            const SkewShape shape = make_shape(outer, inner);
            const auto kinds = parse_kinds(kind);
            const QSymF f = char_tableaux(shape, kinds.front(), set_flag);
            if (format == "json") {
                emit(dump(to_json(f)), out_path, out);
            } else {
                std::ostringstream text;
                for (const auto& [comp, c] : f.coeffs()) {
                    text << "F(";
                    for (int i = 1; i <= comp.length(); ++i) {
                        if (i > 1) text << ",";
                        text << comp.part(i);
                    }
                    text << ") " << c << "\n";
                }
                emit(text.str(), out_path, out);
            }
            return 0;
        }

        if (gf->parsed()) {
            const SkewShape shape = make_shape(outer, inner);
            static const std::map<std::string, ColumnRule> col_rules = {
                {"first-strict", ColumnRule::FirstColStrict},
                {"first-weak", ColumnRule::FirstColWeak},
                {"all-strict", ColumnRule::AllColsStrict},
                {"all-weak", ColumnRule::AllColsWeak}};
            static const std::map<std::string, RowRule> row_rules = {
                {"strict", RowRule::Strict}, {"weak", RowRule::Weak}};
            if (!col_rules.count(col_rule_name) || !row_rules.count(row_rule_name))
                throw std::invalid_argument("unknown filling rule");
            const FillingFamily family{col_rules.at(col_rule_name), row_rules.at(row_rule_name)};
            const TruncatedPoly p = gf_fillings(shape, family, vars);
            if (format == "json") {
                emit(dump(to_json(p)), out_path, out);
            } else {
                std::ostringstream text;
                for (const auto& [exp, c] : p.terms()) {
                    for (size_t k = 0; k < exp.size(); ++k) {
                        if (k) text << " ";
                        text << exp[k];
                    }
                    text << " : " << c << "\n";
                }
                emit(text.str(), out_path, out);
            }
            return 0;
        }

        if (straighten->parsed()) {
            const SkewShape shape = make_shape(outer, inner);
            const Tableau t(shape, parse_rows(rows_text));
            if (!is_sit(t)) throw std::invalid_argument("tableau is not standard immaculate");
            GeneratorWord word;
            if (direction == "bottom")
                word = straighten_from_bottom(t);
            else if (direction == "top")
                word = straighten_to_top(t);
            else
                throw std::invalid_argument("direction must be bottom or top");
            Json j;
            j["shape"] = to_json(shape);
            j["direction"] = direction;
            j["word"] = to_json(word);
            emit(dump(j), out_path, out);
            return 0;
        }

        if (verify->parsed()) {
            if (!all_flag && suite.empty())
                throw std::invalid_argument("verify needs --suite or --all");
            std::vector<std::string> suites;
            if (all_flag)
                suites = {"relations", "poset",       "qsym",    "schur",      "hooked",
                          "two-alphabet", "branching", "modules", "enumeration"};
            else
                suites = {suite};

            const bool single_shape = !outer.empty();
            Json results = Json::array();
            bool all_ok = true;

            auto shapes_for = [&](int cap) {
                std::vector<SkewShape> shapes;
                if (single_shape)
                    shapes.push_back(make_shape(outer, inner));
                else
                    shapes = all_skew_shapes(cap);
                return shapes;
            };

            for (const std::string& name : suites) {
                Json entry;
                entry["suite"] = name;
                bool ok = true;
                std::string detail;
                if (name == "relations") {
                    for (const SkewShape& shape : shapes_for(max_n))
                        if (!relations_ok(shape)) {
                            ok = false;
                            detail = "relations fail";
                            entry["witness"] = to_json(shape);
                            break;
                        }
                } else if (name == "poset") {
                    for (const SkewShape& shape : shapes_for(max_n))
                        if (!poset_structure_ok(shape, detail)) {
                            ok = false;
                            entry["witness"] = to_json(shape);
                            break;
                        }
                } else if (name == "qsym") {
                    for (const SkewShape& shape : shapes_for(max_n))
                        if (!qsym_identities_ok(shape, detail, vars)) {
                            ok = false;
                            entry["witness"] = to_json(shape);
                            break;
                        }
                } else if (name == "schur") {
                    ok = schur_ok(max_n, detail);
                } else if (name == "hooked") {
                    ok = hooked_ok(max_n, detail);
                } else if (name == "two-alphabet") {
                    ok = two_alphabet_ok(max_n, detail);
                } else if (name == "branching") {
                    Json reports = Json::array();
                    std::vector<Composition> alphas;
                    if (single_shape)
                        alphas.push_back(parse_composition(outer));
                    else
                        for (int n = 1; n <= max_n; ++n)
                            for (const Composition& a : compositions_of(n)) alphas.push_back(a);
                    for (const Composition& alpha : alphas) {
                        std::vector<int> ms;
                        if (threshold > 0)
                            ms.push_back(threshold);
                        else
                            for (int m = 1; m <= alpha.size(); ++m) ms.push_back(m);
                        for (int m : ms)
                            for (DescentKind k : parse_kinds(kind))
                                for (bool over_set : {false, true}) {
                                    const BranchReport r =
                                        over_set ? branching_check_set(alpha, m, k)
                                                 : branching_check(alpha, m, k);
                                    if (!r.ok()) {
                                        ok = false;
                                        reports.push_back(to_json(r));
                                    }
                                }
                    }
                    if (!ok) {
                        detail = "branching reports failed";
                        entry["failures"] = std::move(reports);
                    }
                } else if (name == "modules") {
                    for (const SkewShape& shape : shapes_for(max_n))
                        if (!modules_ok(shape, detail)) {
                            ok = false;
                            entry["witness"] = to_json(shape);
                            break;
                        }
                } else if (name == "enumeration") {
                    std::set<std::string> notes;
                    for (const SkewShape& shape : shapes_for(max_n)) {
                        const SitCountReport r = sit_count(shape);
                        if (!r.formula_agrees ||
                            (r.multinomial_value && *r.multinomial_value != r.by_generation)) {
                            ok = false;
                            detail = "enumeration formula disagrees with generation";
                            entry["witness"] = to_json(shape);
                            entry["report"] = to_json(r);
                            break;
                        }
                        notes.insert(r.notes.begin(), r.notes.end());
                    }
                    entry["notes"] = notes;
                } else {
                    throw std::invalid_argument("unknown suite: " + name);
                }
                entry["ok"] = ok;
                if (!detail.empty()) entry["detail"] = detail;
                results.push_back(std::move(entry));
                all_ok = all_ok && ok;
            }

            Json j;
            j["ok"] = all_ok;
            j["suites"] = std::move(results);
            emit(dump(j), out_path, out);
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace imm::cli
