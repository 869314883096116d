#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "immaculate/json_io.hpp"

namespace py = pybind11;
using namespace imm;

namespace {

Composition comp(const std::vector<int>& parts) { return Composition(parts); }

SkewShape shape_of(const std::vector<int>& outer, const std::vector<int>& inner) {
    return SkewShape(comp(outer), comp(inner));
}

DescentKind kind_of(const std::string& name) {
    auto k = descent_kind_from_string(name);
    if (!k) throw std::invalid_argument("unknown kind: " + name);
    return *k;
}

FillingFamily family_of(const std::string& col_rule, const std::string& row_rule) {
    FillingFamily family{};
    if (col_rule == "first-strict") family.col_rule = ColumnRule::FirstColStrict;
    else if (col_rule == "first-weak") family.col_rule = ColumnRule::FirstColWeak;
    else if (col_rule == "all-strict") family.col_rule = ColumnRule::AllColsStrict;
    else if (col_rule == "all-weak") family.col_rule = ColumnRule::AllColsWeak;
    else throw std::invalid_argument("unknown column rule: " + col_rule);
    if (row_rule == "strict") family.row_rule = RowRule::Strict;
    else if (row_rule == "weak") family.row_rule = RowRule::Weak;
    else throw std::invalid_argument("unknown row rule: " + row_rule);
    return family;
}

py::int_ exact_int(const Int& value) {
    const std::string digits = value.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::dict qsym_dict(const QSymF& f) {
    py::dict out;
    for (const auto& [c, coeff] : f.coeffs())
        out[py::tuple(py::cast(c.parts()))] = exact_int(coeff);
    return out;
}

py::dict poly_dict(const TruncatedPoly& p) {
    py::dict out;
    for (const auto& [exp, coeff] : p.terms())
        out[py::tuple(py::cast(exp))] = exact_int(coeff);
    return out;
}

py::object hecke_pair(const HeckeResult& r) {
    const char* tag = r.tag == HeckeTag::Fixed ? "fixed"
                      : r.tag == HeckeTag::Swapped ? "swapped"
                                                   : "zero";
    if (r.tableau) return py::make_tuple(tag, *r.tableau);
    return py::make_tuple(tag, py::none());
}

std::vector<int> application_order(const GeneratorWord& w) {
    return {w.indices.rbegin(), w.indices.rend()};
}

GeneratorWord word_from_application_order(const std::vector<int>& applied) {
    return GeneratorWord{{applied.rbegin(), applied.rend()}};
}

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::object: {
            py::dict d;
            for (auto it = j.begin(); it != j.end(); ++it)
                d[py::str(it.key())] = json_to_py(it.value());
            return d;
        }
        case Json::value_t::array: {
            py::list l;
            for (const auto& item : j) l.append(json_to_py(item));
            return l;
        }
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        default: return py::none();
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Skew standard immaculate tableaux, 0-Hecke actions, Hecke posets, "
              "and quasisymmetric functions with exact integer arithmetic.";

    py::class_<Tableau>(m, "Tableau")
        .def(py::init([](const std::vector<int>& outer, const std::vector<int>& inner,
                         const std::vector<std::vector<int>>& rows) {
                 return Tableau(shape_of(outer, inner), rows);
             }),
             py::arg("outer"), py::arg("inner"), py::arg("rows"))
        .def_property_readonly(
            "outer", [](const Tableau& t) { return t.shape().outer().parts(); })
        .def_property_readonly(
            "inner", [](const Tableau& t) { return t.shape().inner().parts(); })
        .def_property_readonly("rows", [](const Tableau& t) { return t.rows(); })
        .def("reading_word", &Tableau::reading_word)
        .def("is_standard", &Tableau::is_standard)
        .def("__eq__", [](const Tableau& a, const Tableau& b) { return a == b; })
        .def("__hash__",
             [](const Tableau& t) {
                 size_t h = 0;
                 for (int v : t.reading_word()) h = h * 1000003 + static_cast<size_t>(v);
                 for (int p : t.shape().outer().parts()) h = h * 1000003 + p;
                 for (int p : t.shape().inner().parts()) h = h * 1000003 + 7919 * p;
                 return h;
             })
        .def("__repr__", [](const Tableau& t) {
            std::string s = "Tableau(rows=";
            s += py::repr(py::cast(t.rows())).cast<std::string>();
            s += ")";
            return s;
        });

    py::class_<HeckePoset>(m, "HeckePoset")
        .def_property_readonly("nodes", [](const HeckePoset& p) { return p.nodes(); })
        .def_property_readonly("covers",
                               [](const HeckePoset& p) {
                                   std::vector<std::tuple<int, int, int>> out;
                                   for (const Cover& c : p.covers())
                                       out.emplace_back(c.from, c.to, c.gen);
                                   return out;
                               })
        .def_property_readonly("ranks", [](const HeckePoset& p) { return p.ranks(); })
        .def("minimal", [](const HeckePoset& p) { return minimal_elements(p); })
        .def("maximal", [](const HeckePoset& p) { return maximal_elements(p); })
        .def("is_graded", [](const HeckePoset& p) { return is_graded(p); })
        .def("set_subposet", [](const HeckePoset& p) { return set_subposet(p); })
        .def("to_dot", [](const HeckePoset& p, bool highlight_set) {
                 return export_dot(p, highlight_set);
             },
             py::arg("highlight_set") = false);

    // Compositions and shapes.
    m.def("set_of", [](const std::vector<int>& a) { return set_of(comp(a)); }, py::arg("alpha"));
    m.def("comp_of", [](const std::vector<int>& s, int n) { return comp_of(s, n).parts(); },
          py::arg("subset"), py::arg("n"));
    m.def("complement", [](const std::vector<int>& a) { return complement(comp(a)).parts(); },
          py::arg("alpha"));
    m.def("contains",
          [](const std::vector<int>& inner, const std::vector<int>& outer) {
              return contains(comp(inner), comp(outer));
          },
          py::arg("inner"), py::arg("outer"));
    m.def("cells",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              std::vector<std::pair<int, int>> out;
              for (Cell c : cells(shape_of(outer, inner))) out.emplace_back(c.row, c.col);
              return out;
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});
    m.def("leftmost_column_cells",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              std::vector<std::pair<int, int>> out;
              for (Cell c : leftmost_column_cells(shape_of(outer, inner)))
                  out.emplace_back(c.row, c.col);
              return out;
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});

    // Tableaux.
    m.def("generate_sit",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return generate_sit(shape_of(outer, inner));
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});
    m.def("generate_set",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return generate_set(shape_of(outer, inner));
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});
    m.def("generate_fillings",
          [](const std::vector<int>& outer, const std::vector<int>& inner,
             const std::string& col_rule, const std::string& row_rule, int max_entry) {
              return generate_fillings(shape_of(outer, inner), family_of(col_rule, row_rule),
                                       max_entry);
          },
          py::arg("outer"), py::arg("inner"), py::arg("col_rule"), py::arg("row_rule"),
          py::arg("max_entry"));
    m.def("is_sit", &is_sit, py::arg("tableau"));
    m.def("is_set", &is_set, py::arg("tableau"));
    m.def("descent_set",
          [](const Tableau& t, const std::string& kind) { return descent_set(t, kind_of(kind)); },
          py::arg("tableau"), py::arg("kind"));
    m.def("inversions", &inversions, py::arg("word"));
    m.def("s0",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return s0(shape_of(outer, inner));
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});
    m.def("srow",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return srow(shape_of(outer, inner));
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});
    m.def("scol",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return scol(shape_of(outer, inner));
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});
    m.def("phi",
          [](const Tableau& t, const py::object& u) {
              if (u.is_none()) return phi(t);
              return phi(t, u.cast<Tableau>());
          },
          py::arg("tableau"), py::arg("filler") = py::none());
    m.def("inv_alpha_beta",
          [](const std::vector<int>& alpha, const std::vector<int>& beta) {
              return inv_alpha_beta(comp(alpha), comp(beta));
          },
          py::arg("alpha"), py::arg("beta"));

    // 0-Hecke actions.  Words are given and returned in application order:
    // the first listed generator acts first.
    m.def("hecke_apply",
          [](const std::string& kind, int i, const Tableau& t) {
              return hecke_pair(apply(kind_of(kind), i, t));
          },
          py::arg("kind"), py::arg("i"), py::arg("tableau"));
    m.def("hecke_apply_word",
          [](const std::string& kind, const std::vector<int>& word, const Tableau& t) {
              return hecke_pair(apply_word(kind_of(kind), word_from_application_order(word), t));
          },
          py::arg("kind"), py::arg("word"), py::arg("tableau"));
    m.def("straighten_from_bottom",
          [](const Tableau& t) { return application_order(straighten_from_bottom(t)); },
          py::arg("tableau"));
    m.def("straighten_to_top",
          [](const Tableau& t) { return application_order(straighten_to_top(t)); },
          py::arg("tableau"));
    m.def("check_relations",
          [](const std::string& kind, const std::vector<int>& outer,
             const std::vector<int>& inner) {
              return check_relations(kind_of(kind), shape_of(outer, inner));
          },
          py::arg("kind"), py::arg("outer"), py::arg("inner") = std::vector<int>{});

    // Posets.
    m.def("build_poset",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return build_poset(shape_of(outer, inner));
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});
    m.def("rank_formula",
          [](const std::vector<int>& alpha, const std::vector<int>& beta) {
              return rank_formula(comp(alpha), comp(beta));
          },
          py::arg("alpha"), py::arg("beta"));

    // Quasisymmetric functions; fundamental-basis elements are dicts mapping
    // composition tuples to exact integers, polynomials map exponent tuples
    // to exact integers.
    m.def("fundamental_poly",
          [](const std::vector<int>& alpha, int vars) {
              return poly_dict(fundamental_poly(comp(alpha), vars));
          },
          py::arg("alpha"), py::arg("vars"));
    m.def("char_tableaux",
          [](const std::vector<int>& outer, const std::vector<int>& inner,
             const std::string& kind, bool extended) {
              return qsym_dict(char_tableaux(shape_of(outer, inner), kind_of(kind), extended));
          },
          py::arg("outer"), py::arg("inner"), py::arg("kind"), py::arg("extended") = false);
    m.def("psi",
          [](const py::dict& terms, int degree) {
              QSymF f(degree);
              for (auto item : terms)
                  f.add(Composition(item.first.cast<std::vector<int>>()),
                        Int(py::str(item.second).cast<std::string>()));
              return qsym_dict(psi(f));
          },
          py::arg("terms"), py::arg("degree"));
    m.def("gf_fillings",
          [](const std::vector<int>& outer, const std::vector<int>& inner,
             const std::string& col_rule, const std::string& row_rule, int vars) {
              return poly_dict(
                  gf_fillings(shape_of(outer, inner), family_of(col_rule, row_rule), vars));
          },
          py::arg("outer"), py::arg("inner"), py::arg("col_rule"), py::arg("row_rule"),
          py::arg("vars"));
    m.def("to_poly",
          [](const std::vector<int>& outer, const std::vector<int>& inner,
             const std::string& kind, bool extended, int vars) {
              return poly_dict(
                  to_poly(char_tableaux(shape_of(outer, inner), kind_of(kind), extended), vars));
          },
          py::arg("outer"), py::arg("inner"), py::arg("kind"), py::arg("extended"),
          py::arg("vars"), "Polynomial expansion of a tableau characteristic.");
    m.def("skew_schur_poly",
          [](const std::vector<int>& lambda, const std::vector<int>& mu, int vars) {
              return poly_dict(skew_schur_poly(comp(lambda), comp(mu), vars));
          },
          py::arg("lam"), py::arg("mu"), py::arg("vars"));
    m.def("transpose",
          [](const std::vector<int>& lambda) { return transpose(comp(lambda)).parts(); },
          py::arg("lam"));
    m.def("hooked_product",
          [](const std::vector<int>& outer, const std::vector<int>& inner,
             const std::string& kind, int vars) {
              if (kind != "h" && kind != "e")
                  throw std::invalid_argument("kind must be 'h' or 'e'");
              return poly_dict(hooked_product(shape_of(outer, inner), kind[0], vars));
          },
          py::arg("outer"), py::arg("inner"), py::arg("kind"), py::arg("vars"));
    m.def("two_alphabet_check",
          [](const std::vector<int>& alpha, const std::string& kind, int xvars, int yvars) {
              return two_alphabet_check(comp(alpha), kind_of(kind), xvars, yvars);
          },
          py::arg("alpha"), py::arg("kind"), py::arg("xvars"), py::arg("yvars"));

    // Verification.
    m.def("split",
          [](const Tableau& t, int m) -> py::object {
              auto sp = split(t, m);
              if (!sp) return py::none();
              return py::make_tuple(sp->low, sp->high);
          },
          py::arg("tableau"), py::arg("m"));
    m.def("branching_check",
          [](const std::vector<int>& alpha, int m, const std::string& kind, bool over_set) {
              const BranchReport r = over_set ? branching_check_set(comp(alpha), m, kind_of(kind))
                                              : branching_check(comp(alpha), m, kind_of(kind));
              return json_to_py(to_json(r));
          },
          py::arg("alpha"), py::arg("m"), py::arg("kind"), py::arg("over_set") = false);
    m.def("composition_series_check",
          [](const std::vector<int>& outer, const std::vector<int>& inner,
             const std::string& kind) {
              const SeriesResult r =
                  composition_series_check(shape_of(outer, inner), kind_of(kind));
              return py::make_tuple(r.ok, qsym_dict(r.characteristic));
          },
          py::arg("outer"), py::arg("inner"), py::arg("kind"));
    m.def("cyclicity_check",
          [](const std::vector<int>& outer, const std::vector<int>& inner,
             const std::string& kind) {
              return cyclicity_check(shape_of(outer, inner), kind_of(kind));
          },
          py::arg("outer"), py::arg("inner"), py::arg("kind"));
    m.def("set_cyclicity_check",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return set_cyclicity_check(shape_of(outer, inner));
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});
    m.def("closure_check",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return json_to_py(to_json(closure_check(shape_of(outer, inner))));
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});
    m.def("sit_count",
          [](const std::vector<int>& outer, const std::vector<int>& inner) {
              return json_to_py(to_json(sit_count(shape_of(outer, inner))));
          },
          py::arg("outer"), py::arg("inner") = std::vector<int>{});

    m.attr("KINDS") = py::make_tuple("di", "rdi", "astar", "abarstar");
#ifdef VERSION_INFO
#define IMM_STR2(x) #x
#define IMM_STR(x) IMM_STR2(x)
    m.attr("__version__") = IMM_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
