// rowmo: command-line driver for the rowmotion library.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rowmotion/checks.hpp"
#include "rowmotion/combinatorial.hpp"
#include "rowmotion/group.hpp"
#include "rowmotion/orbit.hpp"
#include "rowmotion/polytope.hpp"
#include "rowmotion/poset_io.hpp"
#include "rowmotion/state_io.hpp"

using namespace rowmotion;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Kind { Antichain, Ideal, Filter, ChainPolytope, OrderReversing, OrderPreserving };

const std::map<std::string, Kind> kKinds{{"antichain", Kind::Antichain},
                                         {"ideal", Kind::Ideal},
                                         {"filter", Kind::Filter},
                                         {"chainpolytope", Kind::ChainPolytope},
                                         {"or", Kind::OrderReversing},
                                         {"op", Kind::OrderPreserving}};

const std::vector<std::string> kMaps{"rowmotion", "gyration", "toggle", "t-star", "tau-star",
                                     "rank",      "word",     "coxeter"};

bool is_labeling(Kind k) { return k == Kind::ChainPolytope || k == Kind::OrderReversing || k == Kind::OrderPreserving; }

SubsetKind subset_kind(Kind k) {
  switch (k) {
    case Kind::Antichain:
    case Kind::ChainPolytope: return SubsetKind::Antichain;
    case Kind::Ideal:
    case Kind::OrderReversing: return SubsetKind::OrderIdeal;
    default: return SubsetKind::OrderFilter;
  }
}

LabelSpace label_space(Kind k) {
  switch (k) {
    case Kind::Antichain:
    case Kind::ChainPolytope: return LabelSpace::ChainPolytope;
    case Kind::Ideal:
    case Kind::OrderReversing: return LabelSpace::OrderReversing;
    default: return LabelSpace::OrderPreserving;
  }
}

std::optional<ToggleSpace> toggle_space(Kind k) {
  switch (subset_kind(k)) {
    case SubsetKind::Antichain: return ToggleSpace::Antichain;
    case SubsetKind::OrderIdeal: return ToggleSpace::Ideal;
    default: return std::nullopt;
  }
}

/// The map flags shared by step, orbit and homomesy.
struct MapOptions {
  std::string map = "rowmotion";
  std::string kind = "antichain";
  std::string element;
  int rank = -1;
  std::string flavor;
  std::string word;
  std::string order;

  void attach(CLI::App* app) {
    app->add_option("--map", map, "rowmotion, gyration, toggle, t-star, tau-star, rank, word, or coxeter")
        ->check(CLI::IsMember(kMaps))
        ->capture_default_str();
    app->add_option("--kind", kind, "antichain, ideal, filter, chainpolytope, or, op")
        ->check(CLI::IsMember(std::vector<std::string>{"antichain", "ideal", "filter", "chainpolytope", "or", "op"}))
        ->capture_default_str();
    app->add_option("--element", element, "element for toggle, t-star and tau-star");
    app->add_option("--rank", rank, "rank for --map rank");
    app->add_option("--flavor", flavor, "rank toggle flavor: t, tau, tstar, taustar");
    app->add_option("--word", word, "toggle word such as 'tau(a1) tau(a2)', applied right to left");
    app->add_option("--order", order, "comma-separated toggle order for coxeter (first acts first)");
  }

  Kind state_kind() const { return kKinds.at(kind); }

  std::string describe() const {
    std::string d = map;
    if (!element.empty()) d += " element=" + element;
    if (rank >= 0) d += " rank=" + std::to_string(rank);
    if (!flavor.empty()) d += " flavor=" + flavor;
    if (!word.empty()) d += " word=" + word;
    if (!order.empty()) d += " order=" + order;
    return d;
  }
};

Element element_of(const PosetPtr& p, const MapOptions& m) {
  if (m.element.empty()) throw UsageError("--map " + m.map + " needs --element");
  auto x = p->find(m.element);
  if (!x) throw UsageError("unknown element '" + m.element + "'");
  return *x;
}

RankFlavor flavor_of(const MapOptions& m, ToggleSpace space) {
  if (m.flavor.empty()) return space == ToggleSpace::Ideal ? RankFlavor::T : RankFlavor::Tau;
  static const std::map<std::string, RankFlavor> flavors{
      {"t", RankFlavor::T}, {"tau", RankFlavor::Tau}, {"tstar", RankFlavor::TStar}, {"taustar", RankFlavor::TauStar}};
  auto it = flavors.find(m.flavor);
  if (it == flavors.end()) throw UsageError("unknown --flavor '" + m.flavor + "'");
  if (space_of(it->second) != space) {
    throw UsageError("flavor " + m.flavor + " acts on " + to_string(space_of(it->second)) + "s, not on --kind " + m.kind);
  }
  return it->second;
}

/// Every map except rowmotion is a toggle word in the space of the kind.
ToggleWord word_of(const PosetPtr& p, const MapOptions& m) {
  auto space = toggle_space(m.state_kind());
  if (!space) throw UsageError("--kind " + m.kind + " supports only --map rowmotion");
  const bool anti = *space == ToggleSpace::Antichain;
  if (m.map == "toggle") return ToggleWord(p, *space, {element_of(p, m)});
  if (m.map == "t-star") {
    if (!anti) throw UsageError("t-star acts on antichains and chain-polytope labelings");
    return t_star_word(p, element_of(p, m));
  }
  if (m.map == "tau-star") {
    if (anti) throw UsageError("tau-star acts on ideals and order-reversing labelings");
    return tau_star_word(p, element_of(p, m));
  }
  if (m.map == "rank") {
    if (m.rank < 0) throw UsageError("--map rank needs --rank");
    return rank_word(p, m.rank, flavor_of(m, *space));
  }
  if (m.map == "gyration") return gyration_word(p, *space);
  if (m.map == "word") {
    if (m.word.empty()) throw UsageError("--map word needs --word");
    auto w = parse_word(p, m.word, *space);
    if (w.space() != *space) throw UsageError("word acts on " + to_string(w.space()) + "s, not on --kind " + m.kind);
    return w;
  }
  if (m.map == "coxeter") {
    std::vector<Element> order;
    if (m.order.empty()) {
      for (Element x = 0; x < p->size(); ++x) order.push_back(x);
    } else {
      for (const auto& id : split_top_level(m.order)) {
        auto x = p->find(id);
        if (!x) throw UsageError("unknown element '" + id + "' in --order");
        order.push_back(*x);
      }
    }
    return coxeter_word(p, order, *space);
  }
  throw UsageError("unknown map '" + m.map + "'");
}

Action<SubsetState> subset_action(const PosetPtr& p, const MapOptions& m) {
  if (m.map == "rowmotion") return [](const SubsetState& s) { return rowmotion::rowmotion(s); };
  auto w = word_of(p, m);
  return [w](const SubsetState& s) { return apply_word(w, s); };
}

Action<RationalLabeling> label_action(const PosetPtr& p, const MapOptions& m) {
  if (m.map == "rowmotion") {
    switch (m.state_kind()) {
      case Kind::ChainPolytope: return [](const RationalLabeling& f) { return row_C(f); };
      case Kind::OrderReversing: return [](const RationalLabeling& f) { return row_OR(f); };
      default: return [](const RationalLabeling& f) { return row_OP(f); };
    }
  }
  auto w = word_of(p, m);
  return [w](const RationalLabeling& f) { return apply_word(w, f); };
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SubsetState subset_start(const PosetPtr& p, Kind k, const std::string& text, const std::string& file) {
  if (!file.empty()) return parse_subset(p, subset_kind(k), read_file(file));
  return parse_subset(p, subset_kind(k), text);
}

RationalLabeling label_start(const PosetPtr& p, Kind k, const std::string& text, const std::string& file) {
  if (!file.empty()) return load_labeling(p, label_space(k), file);
  return parse_labeling(p, label_space(k), text);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string value_string(const Rational& q, bool decimal_ok) {
  if (decimal_ok) {
    if (auto d = to_decimal(q)) return *d;
  }
  return to_string(q);
}

std::string state_string(const SubsetState& s, bool) { return s.to_string(); }
std::string state_string(const RationalLabeling& f, bool decimal_ok) { return f.to_string(decimal_ok); }

std::vector<std::string> cells(const SubsetState& s, bool) {
  std::vector<std::string> out;
  for (bool b : s.members()) out.push_back(b ? "1" : "0");
  return out;
}

std::vector<std::string> cells(const RationalLabeling& f, bool decimal_ok) {
  std::vector<std::string> out;
  for (const auto& q : f.values()) out.push_back(value_string(q, decimal_ok));
  return out;
}

Rational cell_value(const SubsetState& s, Element x) { return s.contains(x) ? 1 : 0; }
Rational cell_value(const RationalLabeling& f, Element x) { return f[x]; }

// ---------------------------------------------------------------- poset

struct PosetCmd {
  std::string poset;
  std::string format = "table";
  bool print = false;

  int run() const {
    auto p = load_poset(poset);
    json j;
    j["source"] = poset;
    j["elements"] = p->ids();
    json covers = json::array();
    for (auto [x, y] : p->cover_pairs()) covers.push_back({p->id(x), p->id(y)});
    j["covers"] = covers;
    j["size"] = p->size();
    j["connected"] = p->is_connected();
    j["graded"] = p->is_graded();
    if (p->is_graded() && !p->empty()) {
      j["height"] = p->height();
      json ranks = json::array();
      for (int i = 0; i <= p->height(); ++i) ranks.push_back(ids_of(*p, p->rank_level(i)));
      j["ranks"] = ranks;
    }
    j["minimal"] = ids_of(*p, p->minimal_elements());
    j["maximal"] = ids_of(*p, p->maximal_elements());
    if (p->size() <= kEnumerationCap) {
      j["antichains"] = enumerate_states(p, SubsetKind::Antichain).size();
      j["ideals"] = enumerate_states(p, SubsetKind::OrderIdeal).size();
    }
    if (p->size() <= kLinearExtensionCap) j["linear_extensions"] = all_linear_extensions(*p).size();

    if (format == "json") {
      std::cout << j.dump(2) << "\n";
    } else if (print) {
      std::cout << format_poset(*p);
    } else {
      auto join = [](const std::vector<std::string>& v, const char* sep) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
        return s;
      };
      std::cout << "elements: " << p->size() << " (" << join(p->ids(), " ") << ")\n";
      std::cout << "covers: " << p->cover_pairs().size() << "\n";
      std::cout << "connected: " << (p->is_connected() ? "yes" : "no") << "\n";
      if (p->is_graded() && !p->empty()) {
        std::cout << "graded: yes, height " << p->height() << "\n";
        for (int i = 0; i <= p->height(); ++i) {
          std::cout << "  rank " << i << ": " << join(ids_of(*p, p->rank_level(i)), " ") << "\n";
        }
      } else {
        std::cout << "graded: " << (p->empty() ? "yes (empty)" : "no") << "\n";
      }
      std::cout << "minimal: " << join(j["minimal"].get<std::vector<std::string>>(), " ") << "\n";
      std::cout << "maximal: " << join(j["maximal"].get<std::vector<std::string>>(), " ") << "\n";
      if (j.contains("antichains")) {
        std::cout << "antichains: " << j["antichains"].get<std::size_t>() << "\n";
        std::cout << "ideals: " << j["ideals"].get<std::size_t>() << "\n";
      } else {
        std::cout << "antichains: not enumerated (more than " << kEnumerationCap << " elements)\n";
      }
      if (j.contains("linear_extensions")) {
        std::cout << "linear extensions: " << j["linear_extensions"].get<std::size_t>() << "\n";
      } else {
        std::cout << "linear extensions: not counted (more than " << kLinearExtensionCap << " elements)\n";
      }
    }
    return kOk;
  }
};

// ---------------------------------------------------------------- step

struct StepCmd {
  std::string poset;
  MapOptions map;
  std::string start, start_file;
  std::size_t times = 1;
  bool decimal_ok = false;
  std::string format = "text";

  template <class State>
  int emit(const State& s0, const Action<State>& act) const {
    State s = s0;
    for (std::size_t i = 0; i < times; ++i) s = act(s);
    if (format == "json") {
      json j;
      j["poset"] = poset;
      j["kind"] = map.kind;
      j["map"] = map.describe();
      j["times"] = times;
      j["start"] = state_string(s0, decimal_ok);
      j["state"] = state_string(s, decimal_ok);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << state_string(s, decimal_ok) << "\n";
    }
    return kOk;
  }

  int run() const {
    auto p = load_poset(poset);
    Kind k = map.state_kind();
    if (start.empty() == start_file.empty()) throw UsageError("give exactly one of --start and --start-file");
    if (is_labeling(k)) return emit(label_start(p, k, start, start_file), label_action(p, map));
    return emit(subset_start(p, k, start, start_file), subset_action(p, map));
  }
};

// ---------------------------------------------------------------- orbit

struct OrbitCmd {
  std::string poset;
  MapOptions map;
  std::string start, start_file;
  std::size_t cap = kDefaultOrbitCap;
  bool decimal_ok = false;
  std::string format = "csv";

  template <class State>
  int emit(const PosetPtr& p, const State& s0, const Action<State>& act) const {
    auto o = orbit(act, s0, cap);
    std::vector<Rational> totals(p->size());
    if (!o.truncated) {
      for (const auto& s : o.states)
        for (Element x = 0; x < p->size(); ++x) totals[x] += cell_value(s, x);
    }
    if (format == "json") {
      json j;
      j["poset"] = poset;
      j["kind"] = map.kind;
      j["map"] = map.describe();
      j["elements"] = p->ids();
      j["period"] = o.period ? json(*o.period) : json(nullptr);
      j["truncated"] = o.truncated;
      json states = json::array();
      for (const auto& s : o.states) states.push_back(state_string(s, decimal_ok));
      j["states"] = states;
      if (!o.truncated) {
        json t = json::object();
        for (Element x = 0; x < p->size(); ++x) t[p->id(x)] = value_string(totals[x], decimal_ok);
        j["totals"] = t;
      }
      std::cout << j.dump(2) << "\n";
      return kOk;
    }
    std::vector<std::string> header{"step"};
    for (const auto& id : p->ids()) header.push_back(id);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < o.states.size(); ++i) {
      auto c = cells(o.states[i], decimal_ok);
      c.insert(c.begin(), std::to_string(i));
      rows.push_back(std::move(c));
    }
    if (!o.truncated) {
      std::vector<std::string> t{"total"};
      for (const auto& q : totals) t.push_back(value_string(q, decimal_ok));
      rows.push_back(std::move(t));
    }
    std::string note = o.truncated ? "# truncated=" + std::to_string(o.size()) : "# period=" + std::to_string(*o.period);
    std::cout << note << "\n";
    if (format == "table") {
      std::vector<std::size_t> width(header.size());
      for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
      }
      auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
          s += (c ? "  " : "") + std::string(width[c] - r[c].size(), ' ') + r[c];
        }
        std::cout << s << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
      return kOk;
    }
    auto line = [](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t c = 0; c < r.size(); ++c) s += (c ? "," : "") + csv_field(r[c]);
      std::cout << s << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return kOk;
  }

  int run() const {
    auto p = load_poset(poset);
    Kind k = map.state_kind();
    if (cap == 0) throw UsageError("--cap must be positive");
    if (start.empty() == start_file.empty()) throw UsageError("give exactly one of --start and --start-file");
    if (is_labeling(k)) return emit(p, label_start(p, k, start, start_file), label_action(p, map));
    return emit(p, subset_start(p, k, start, start_file), subset_action(p, map));
  }
};

// ---------------------------------------------------------------- homomesy

struct HomomesyCmd {
  std::string poset;
  MapOptions map;
  std::string stats;
  std::vector<std::string> starts;
  std::size_t cap = kDefaultOrbitCap;
  std::string format = "csv";

  template <class State>
  std::vector<Orbit<State>> orbits_from(const std::vector<State>& from, const Action<State>& act) const {
    std::vector<Orbit<State>> out;
    for (const auto& s : from) {
      bool known = false;
      for (const auto& o : out) known = known || std::find(o.states.begin(), o.states.end(), s) != o.states.end();
      if (known) continue;
      auto o = orbit(act, s, cap);
      if (o.truncated) throw UsageError("orbit exceeds --cap " + std::to_string(cap) + "; no average available");
      out.push_back(std::move(o));
    }
    return out;
  }

  int emit(const HomomesyReport& r, const std::vector<std::optional<Rational>>& refs) const {
    if (format == "json") {
      json j;
      j["poset"] = poset;
      j["kind"] = map.kind;
      j["map"] = map.describe();
      json orbits = json::array();
      for (std::size_t i = 0; i < r.orbit_sizes.size(); ++i) {
        json a = json::object();
        for (std::size_t s = 0; s < r.statistics.size(); ++s) a[r.statistics[s]] = to_string(r.averages[i][s]);
        orbits.push_back({{"orbit", i}, {"size", r.orbit_sizes[i]}, {"averages", a}});
      }
      j["orbits"] = orbits;
      json verdicts = json::array();
      for (std::size_t s = 0; s < r.statistics.size(); ++s) {
        const auto& v = r.verdicts[s];
        json e;
        e["statistic"] = r.statistics[s];
        e["homomesic"] = v.homomesic;
        e["average"] = v.average ? json(to_string(*v.average)) : json(nullptr);
        e["reference"] = refs[s] ? json(to_string(*refs[s])) : json(nullptr);
        if (!v.homomesic) {
          json c;
          c["orbit"] = v.orbit_b;
          c["average"] = to_string(v.against_claim ? v.average_a : v.average_b);
          if (v.against_claim) {
            c["expected"] = to_string(v.average_b);
          } else {
            c["other_orbit"] = v.orbit_a;
            c["other_average"] = to_string(v.average_a);
          }
          e["counterexample"] = c;
        }
        e["verdict"] = v.describe();
        verdicts.push_back(e);
      }
      j["statistics"] = verdicts;
      j["all_homomesic"] = r.all_homomesic();
      std::cout << j.dump(2) << "\n";
    } else {
      std::string head = "orbit,size";
      for (const auto& s : r.statistics) head += "," + csv_field(s);
      std::cout << head << "\n";
      for (std::size_t i = 0; i < r.orbit_sizes.size(); ++i) {
        std::string row = std::to_string(i) + "," + std::to_string(r.orbit_sizes[i]);
        for (const auto& a : r.averages[i]) row += "," + to_string(a);
        std::cout << row << "\n";
      }
      for (std::size_t s = 0; s < r.statistics.size(); ++s) {
        std::cout << "# " << r.statistics[s] << ": " << r.verdicts[s].describe() << "\n";
      }
    }
    return r.all_homomesic() ? kOk : kFailed;
  }

  int run() const {
    auto p = load_poset(poset);
    Kind k = map.state_kind();
    auto parsed = parse_statistics(*p, stats);
    auto sub_act = subset_action(p, map);
    // Without an explicit claim, a sampled run is judged against the common
    // average over all combinatorial orbits of the same map, when one exists.
    std::vector<std::optional<Rational>> refs(parsed.size());
    bool sampled = is_labeling(k) || !starts.empty();
    if (sampled) {
      bool missing = false;
      for (const auto& s : parsed) missing = missing || !s.claim();
      if (missing && p->size() <= kEnumerationCap) {
        auto full = homomesy_check(sub_act, p, subset_kind(k), parsed);
        for (std::size_t i = 0; i < parsed.size(); ++i) {
          if (!parsed[i].claim() && full.verdicts[i].homomesic && full.verdicts[i].average) {
            refs[i] = *full.verdicts[i].average;
            parsed[i] = parsed[i].with_claim(*refs[i]);
          }
        }
      }
    }
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      if (parsed[i].claim() && !refs[i]) refs[i] = *parsed[i].claim();
    }
    if (is_labeling(k)) {
      if (starts.empty()) throw UsageError("labeling kinds need at least one --start");
      std::vector<RationalLabeling> from;
      for (const auto& s : starts) from.push_back(parse_labeling(p, label_space(k), s));
      return emit(homomesy_report(orbits_from(from, label_action(p, map)), parsed, map.describe()), refs);
    }
    if (!starts.empty()) {
      std::vector<SubsetState> from;
      for (const auto& s : starts) from.push_back(parse_subset(p, subset_kind(k), s));
      return emit(homomesy_report(orbits_from(from, sub_act), parsed, map.describe()), refs);
    }
    return emit(homomesy_check(sub_act, p, subset_kind(k), parsed, map.describe()), refs);
  }
};

// ---------------------------------------------------------------- verify

struct VerifyCmd {
  std::string poset;
  std::string check = "all";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::string format = "table";

  int run() const {
    auto p = load_poset(poset);
    CheckOptions opts{samples, seed};
    std::vector<CheckResult> results;
    if (check == "all") {
      results = run_all_checks(p, opts);
    } else {
      const auto& names = check_names();
      if (std::find(names.begin(), names.end(), check) == names.end()) {
        std::string known;
        for (const auto& n : names) known += " " + n;
        throw UsageError("unknown check '" + check + "'; known:" + known);
      }
      results.push_back(run_check(check, p, opts));
    }
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (format == "json") {
      json j;
      j["poset"] = poset;
      j["samples"] = samples;
      j["seed"] = seed;
      json arr = json::array();
      for (const auto& r : results) {
        arr.push_back({{"check", r.name},
                       {"status", r.skipped ? "skipped" : (r.passed ? "pass" : "fail")},
                       {"cases", r.cases},
                       {"detail", r.detail}});
      }
      j["checks"] = arr;
      j["passed"] = ok;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& r : results) {
        const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
        std::cout << status << " " << r.name << " (" << r.cases << " cases)";
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
      }
    }
    return ok ? kOk : kFailed;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rowmo: rowmotion, toggles and homomesy on finite posets"};
  app.set_version_flag("--version", "rowmo 0.1.0");
  app.require_subcommand(1);

  const std::string poset_help = "poset file or builtin:zigzag:N, builtin:chainproduct:AxB, builtin:rootA:N, ...";

  PosetCmd poset_cmd;
  auto* sp = app.add_subcommand("poset", "validate a poset and print its basic data");
  sp->add_option("--poset", poset_cmd.poset, poset_help)->required();
  sp->add_option("--format", poset_cmd.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  sp->add_flag("--print", poset_cmd.print, "print the poset in file format");

  StepCmd step_cmd;
  auto* ss = app.add_subcommand("step", "apply a map to one state");
  ss->add_option("--poset", step_cmd.poset, poset_help)->required();
  step_cmd.map.attach(ss);
  ss->add_option("--start", step_cmd.start, "state: {a,e} for subsets, a=0.1,b=0,... or (0.1,0,...) for labelings");
  ss->add_option("--start-file", step_cmd.start_file, "file holding the state");
  ss->add_option("--times", step_cmd.times, "number of applications")->capture_default_str();
  ss->add_flag("--decimal-ok", step_cmd.decimal_ok, "print terminating values as decimals");
  ss->add_option("--format", step_cmd.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  OrbitCmd orbit_cmd;
  auto* so = app.add_subcommand("orbit", "print the orbit of one state as a table");
  so->add_option("--poset", orbit_cmd.poset, poset_help)->required();
  orbit_cmd.map.attach(so);
  so->add_option("--start", orbit_cmd.start, "starting state");
  so->add_option("--start-file", orbit_cmd.start_file, "file holding the starting state");
  so->add_option("--cap", orbit_cmd.cap, "maximum number of states listed")->capture_default_str();
  so->add_flag("--decimal-ok", orbit_cmd.decimal_ok, "print terminating values as decimals");
  so->add_option("--format", orbit_cmd.format)->check(CLI::IsMember({"csv", "table", "json"}))->capture_default_str();

  HomomesyCmd homo_cmd;
  auto* sh = app.add_subcommand("homomesy", "orbit averages of statistics and homomesy verdicts");
  sh->add_option("--poset", homo_cmd.poset, poset_help)->required();
  homo_cmd.map.attach(sh);
  sh->add_option("--stats", homo_cmd.stats, "comma-separated statistics, e.g. 'I1-I6,2I1+I2' or 'h(a3)-h(a6)=0'")
      ->required();
  sh->add_option("--start", homo_cmd.starts, "orbit representative (repeatable); all orbits when omitted for subsets");
  sh->add_option("--cap", homo_cmd.cap, "maximum orbit length")->capture_default_str();
  sh->add_option("--format", homo_cmd.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  VerifyCmd verify_cmd;
  auto* sv = app.add_subcommand("verify", "run named verification checks");
  sv->add_option("--poset", verify_cmd.poset, poset_help)->required();
  sv->add_option("--check", verify_cmd.check, "check name or 'all'")->capture_default_str();
  sv->add_option("--samples", verify_cmd.samples, "random points per sampled check")->capture_default_str();
  sv->add_option("--seed", verify_cmd.seed, "random seed")->capture_default_str();
  sv->add_option("--format", verify_cmd.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (sp->parsed()) return poset_cmd.run();
    if (ss->parsed()) return step_cmd.run();
    if (so->parsed()) return orbit_cmd.run();
    if (sh->parsed()) return homo_cmd.run();
    if (sv->parsed()) return verify_cmd.run();
  } catch (const UsageError& e) {
    std::cerr << "rowmo: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "rowmo: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
