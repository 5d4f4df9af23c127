#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rowmotion/checks.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/group.hpp"
#include "rowmotion/orbit.hpp"
#include "rowmotion/poset_io.hpp"
#include "rowmotion/state_io.hpp"

namespace py = pybind11;
using namespace rowmotion;

// Posets are immutable and shared as shared_ptr<const Poset>; Python holds
// them as shared_ptr<Poset> and no binding mutates one.
namespace pybind11::detail {
template <>
struct type_caster<PosetPtr> {
  PYBIND11_TYPE_CASTER(PosetPtr, const_name("Poset"));
  bool load(handle src, bool convert) {
    copyable_holder_caster<Poset, std::shared_ptr<Poset>> inner;
    if (!inner.load(src, convert)) return false;
    value = static_cast<std::shared_ptr<Poset>&>(inner);
    return true;
  }
  static handle cast(const PosetPtr& src, return_value_policy policy, handle parent) {
    return type_caster<std::shared_ptr<Poset>>::cast(std::const_pointer_cast<Poset>(src), policy, parent);
  }
};
}  // namespace pybind11::detail

namespace {

SubsetKind kind_from(const std::string& k) {
  if (k == "antichain") return SubsetKind::Antichain;
  if (k == "ideal") return SubsetKind::OrderIdeal;
  if (k == "filter") return SubsetKind::OrderFilter;
  throw py::value_error("kind must be 'antichain', 'ideal' or 'filter'");
}

LabelSpace space_from(const std::string& s) {
  if (s == "chainpolytope") return LabelSpace::ChainPolytope;
  if (s == "or") return LabelSpace::OrderReversing;
  if (s == "op") return LabelSpace::OrderPreserving;
  if (s == "unconstrained") return LabelSpace::Unconstrained;
  throw py::value_error("space must be 'chainpolytope', 'or', 'op' or 'unconstrained'");
}

ToggleSpace toggle_space_from(const std::string& s) {
  if (s == "ideal") return ToggleSpace::Ideal;
  if (s == "antichain") return ToggleSpace::Antichain;
  throw py::value_error("toggle space must be 'ideal' or 'antichain'");
}

std::vector<Rational> rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

std::vector<std::string> strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Element elem(const PosetPtr& p, const std::string& id) { return p->index(id); }

SubsetState toggle_subset(const SubsetState& s, const std::string& id) {
  Element e = elem(s.poset(), id);
  switch (s.kind()) {
    case SubsetKind::OrderIdeal: return toggle_t(s, e);
    case SubsetKind::Antichain: return toggle_tau(s, e);
    default: throw KindError("filters have no toggles");
  }
}

RationalLabeling toggle_labeling(const RationalLabeling& f, const std::string& id) {
  Element e = elem(f.poset(), id);
  return f.space() == LabelSpace::ChainPolytope ? pl_toggle_tau(f, e) : pl_toggle_t(f, e);
}

template <class State>
py::dict orbit_dict(const Orbit<State>& o) {
  py::dict d;
  d["states"] = o.states;
  d["period"] = o.period ? py::cast(*o.period) : py::none();
  d["truncated"] = o.truncated;
  return d;
}

py::dict report_dict(const HomomesyReport& r) {
  py::dict d;
  d["orbit_sizes"] = r.orbit_sizes;
  py::list avgs;
  for (const auto& row : r.averages) avgs.append(strings(row));
  d["averages"] = avgs;
  py::list verdicts;
  for (std::size_t i = 0; i < r.statistics.size(); ++i) {
    const auto& v = r.verdicts[i];
    py::dict e;
    e["statistic"] = r.statistics[i];
    e["homomesic"] = v.homomesic;
    e["average"] = v.average ? py::cast(to_string(*v.average)) : py::none();
    e["detail"] = v.describe();
    verdicts.append(e);
  }
  d["statistics"] = verdicts;
  d["all_homomesic"] = r.all_homomesic();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rowmotion, toggles and homomesy on finite posets";

  static py::exception<Error> base(m, "RowmotionError", PyExc_ValueError);
  static py::exception<ParseError> parse_err(m, "ParseError", base.ptr());
  py::register_exception_translator([](std::exception_ptr ep) {
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_err.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  py::class_<Poset, std::shared_ptr<Poset>>(m, "Poset")
      .def_static("from_covers", &Poset::from_covers, py::arg("elements"), py::arg("covers"))
      .def_static("parse", &parse_poset, py::arg("text"))
      .def_static("load", &load_poset, py::arg("source"))
      .def("__len__", &Poset::size)
      .def_property_readonly("ids", &Poset::ids)
      .def_property_readonly("covers",
                             [](const Poset& p) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (auto [x, y] : p.cover_pairs()) out.emplace_back(p.id(x), p.id(y));
                               return out;
                             })
      .def("leq", [](const Poset& p, const std::string& x, const std::string& y) { return p.is_leq(x, y); })
      .def_property_readonly("is_graded", &Poset::is_graded)
      .def_property_readonly("is_connected", &Poset::is_connected)
      .def_property_readonly("height", &Poset::height)
      .def("rank", [](const Poset& p, const std::string& x) { return p.rank(p.index(x)); })
      .def("linear_extensions",
           [](const Poset& p) {
             std::vector<std::vector<std::string>> out;
             for (const auto& e : all_linear_extensions(p)) out.push_back(ids_of(p, e));
             return out;
           })
      .def("format", [](const Poset& p) { return format_poset(p); })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__", [](const Poset& p) { return "<Poset with " + std::to_string(p.size()) + " elements>"; });

  m.def("zigzag", &zigzag, py::arg("n"));
  m.def("chain_product", &chain_product, py::arg("a"), py::arg("b"));
  m.def("root_poset_A", &root_poset_A, py::arg("n"));
  m.def("chain", &chain, py::arg("n"));
  m.def("antichain", &antichain, py::arg("n"));

  py::class_<SubsetState>(m, "Subset")
      .def(py::init([](const PosetPtr& p, const std::string& kind, const std::vector<std::string>& ids) {
             return SubsetState::from_ids(p, kind_from(kind), ids);
           }),
           py::arg("poset"), py::arg("kind"), py::arg("elements"))
      .def_static("parse", [](const PosetPtr& p, const std::string& kind,
                              const std::string& text) { return parse_subset(p, kind_from(kind), text); })
      .def_property_readonly("poset", &SubsetState::poset)
      .def_property_readonly("kind", [](const SubsetState& s) { return to_string(s.kind()); })
      .def_property_readonly("elements", &SubsetState::element_ids)
      .def("__len__", &SubsetState::cardinality)
      .def("__contains__", [](const SubsetState& s, const std::string& id) { return s.contains(s.poset()->index(id)); })
      .def("__str__", &SubsetState::to_string)
      .def("__repr__", [](const SubsetState& s) { return "<" + to_string(s.kind()) + " " + s.to_string() + ">"; })
      .def("__eq__", [](const SubsetState& a, const SubsetState& b) { return a == b; })
      .def("__hash__", [](const SubsetState& s) { return std::hash<SubsetState>()(s); });

  m.def("states", [](const PosetPtr& p, const std::string& kind) { return enumerate_states(p, kind_from(kind)); },
        py::arg("poset"), py::arg("kind"));
  m.def("row_A", &row_A);
  m.def("row_J", &row_J);
  m.def("row_F", &row_F);
  m.def("rowmotion", py::overload_cast<const SubsetState&>(&rowmotion::rowmotion));
  m.def("ideal_of", &ideal_of);
  m.def("filter_of", &filter_of);
  m.def("max_elements", &max_elements);
  m.def("toggle", &toggle_subset, py::arg("state"), py::arg("element"));
  m.def("t_star", [](const SubsetState& a, const std::string& id) { return t_star(a, elem(a.poset(), id)); });
  m.def("tau_star", [](const SubsetState& i, const std::string& id) { return tau_star(i, elem(i.poset(), id)); });
  m.def("gyration", py::overload_cast<const SubsetState&>(&gyration));

  py::class_<ToggleWord>(m, "Word")
      .def_static("parse",
                  [](const PosetPtr& p, const std::string& text, const std::string& space) {
                    return parse_word(p, text, toggle_space_from(space));
                  },
                  py::arg("poset"), py::arg("text"), py::arg("space") = "ideal")
      .def_static("rowmotion",
                  [](const PosetPtr& p, const std::string& space) { return rowmotion_word(p, toggle_space_from(space)); })
      .def_static("gyration",
                  [](const PosetPtr& p, const std::string& space) { return gyration_word(p, toggle_space_from(space)); })
      .def_static("coxeter",
                  [](const PosetPtr& p, const std::vector<std::string>& order, const std::string& space) {
                    std::vector<Element> o;
                    for (const auto& id : order) o.push_back(p->index(id));
                    return coxeter_word(p, o, toggle_space_from(space));
                  },
                  py::arg("poset"), py::arg("order"), py::arg("space") = "antichain")
      .def_property_readonly("space", [](const ToggleWord& w) { return to_string(w.space()); })
      .def("inverse", &ToggleWord::inverse)
      .def("__mul__", &ToggleWord::operator*)
      .def("__len__", &ToggleWord::size)
      .def("__eq__", &ToggleWord::operator==)
      .def("__str__", &ToggleWord::to_string)
      .def("__repr__", [](const ToggleWord& w) { return "<Word " + w.to_string() + ">"; })
      .def("__call__", [](const ToggleWord& w, const SubsetState& s) { return apply_word(w, s); })
      .def("__call__", [](const ToggleWord& w, const RationalLabeling& f) { return apply_word(w, f); });

  py::class_<RationalLabeling>(m, "_Labeling")
      .def(py::init([](const PosetPtr& p, const std::string& space, const std::vector<std::string>& values) {
        return RationalLabeling(p, space_from(space), rationals(values));
      }))
      .def_static("parse", [](const PosetPtr& p, const std::string& space,
                              const std::string& text) { return parse_labeling(p, space_from(space), text); })
      .def_static("load", [](const PosetPtr& p, const std::string& space,
                             const std::string& path) { return load_labeling(p, space_from(space), path); })
      .def_property_readonly("poset", &RationalLabeling::poset)
      .def_property_readonly("space", [](const RationalLabeling& f) { return to_string(f.space()); })
      .def_property_readonly("raw_values", [](const RationalLabeling& f) { return strings(f.values()); })
      .def("to_string", &RationalLabeling::to_string, py::arg("decimal_ok") = false)
      .def("__str__", [](const RationalLabeling& f) { return f.to_string(); })
      .def("__eq__", [](const RationalLabeling& a, const RationalLabeling& b) { return a == b; });

  m.def("row_C", &row_C);
  m.def("row_OR", &row_OR);
  m.def("row_OP", &row_OP);
  m.def("or_transfer", &or_transfer);
  m.def("op_transfer", &op_transfer);
  m.def("or_inverse", &or_inverse);
  m.def("op_inverse", &op_inverse);
  m.def("pl_toggle", &toggle_labeling, py::arg("labeling"), py::arg("element"));
  m.def("pl_t_star", [](const RationalLabeling& g, const std::string& id) { return pl_t_star(g, elem(g.poset(), id)); });
  m.def("pl_tau_star",
        [](const RationalLabeling& f, const std::string& id) { return pl_tau_star(f, elem(f.poset(), id)); });
  m.def("chain_sums_through", [](const RationalLabeling& g, const std::string& id) {
    return strings(chain_sums_through(g, elem(g.poset(), id)));
  });
  m.def("indicator", &indicator);
  m.def("as_subset", &as_subset);

  m.def("orbit",
        [](const std::function<SubsetState(const SubsetState&)>& act, const SubsetState& s, std::size_t cap) {
          return orbit_dict(orbit<SubsetState>(act, s, cap));
        },
        py::arg("action"), py::arg("start"), py::arg("cap") = kDefaultOrbitCap);
  m.def("orbit",
        [](const std::function<RationalLabeling(const RationalLabeling&)>& act, const RationalLabeling& s,
           std::size_t cap) { return orbit_dict(orbit<RationalLabeling>(act, s, cap)); },
        py::arg("action"), py::arg("start"), py::arg("cap") = kDefaultOrbitCap);
  m.def("word_orbit",
        [](const ToggleWord& w, const SubsetState& s, std::size_t cap) {
          return orbit_dict(orbit<SubsetState>([&w](const SubsetState& x) { return apply_word(w, x); }, s, cap));
        },
        py::arg("word"), py::arg("start"), py::arg("cap") = kDefaultOrbitCap);
  m.def("word_orbit",
        [](const ToggleWord& w, const RationalLabeling& s, std::size_t cap) {
          return orbit_dict(
              orbit<RationalLabeling>([&w](const RationalLabeling& x) { return apply_word(w, x); }, s, cap));
        },
        py::arg("word"), py::arg("start"), py::arg("cap") = kDefaultOrbitCap);

  m.def("homomesy",
        [](const ToggleWord& w, const std::string& kind, const std::string& stats) {
          auto parsed = parse_statistics(*w.poset(), stats);
          return report_dict(homomesy_check([&w](const SubsetState& x) { return apply_word(w, x); }, w.poset(),
                                            kind_from(kind), parsed, w.to_string()));
        },
        py::arg("word"), py::arg("kind"), py::arg("stats"));
  m.def("orbit_averages",
        [](const ToggleWord& w, const std::vector<RationalLabeling>& starts, const std::string& stats, std::size_t cap) {
          if (starts.empty()) throw py::value_error("need at least one start");
          auto parsed = parse_statistics(*w.poset(), stats);
          std::vector<Orbit<RationalLabeling>> orbits;
          for (const auto& s : starts) {
            auto o = orbit<RationalLabeling>([&w](const RationalLabeling& x) { return apply_word(w, x); }, s, cap);
            if (o.truncated) throw TruncatedOrbitError("orbit exceeds cap");
            orbits.push_back(std::move(o));
          }
          return report_dict(homomesy_report(orbits, parsed, w.to_string()));
        },
        py::arg("word"), py::arg("starts"), py::arg("stats"), py::arg("cap") = kDefaultOrbitCap);
  m.def("cesaro_average",
        [](const ToggleWord& w, const RationalLabeling& start, const std::string& stat, std::size_t n) {
          auto s = parse_statistic(*w.poset(), stat);
          return to_string(cesaro_average<RationalLabeling>(
              [&w](const RationalLabeling& x) { return apply_word(w, x); }, start, s, n));
        },
        py::arg("word"), py::arg("start"), py::arg("statistic"), py::arg("n"));

  m.def("check_names", &check_names);
  m.def("verify",
        [](const std::string& name, const PosetPtr& p, std::size_t samples, std::uint64_t seed) {
          auto r = run_check(name, p, CheckOptions{samples, seed});
          py::dict d;
          d["check"] = r.name;
          d["passed"] = r.passed;
          d["skipped"] = r.skipped;
          d["cases"] = r.cases;
          d["detail"] = r.detail;
          return d;
        },
        py::arg("check"), py::arg("poset"), py::arg("samples") = 200, py::arg("seed") = 1);
  m.def("classify",
        [](const PosetPtr& p, const std::string& space) {
          auto c = classify(p, toggle_space_from(space));
          py::dict d;
          d["group"] = to_string(c.group);
          d["states"] = c.states;
          d["order"] = c.order ? py::cast(*c.order) : py::none();
          d["connected"] = c.connected;
          return d;
        },
        py::arg("poset"), py::arg("space"));
}
