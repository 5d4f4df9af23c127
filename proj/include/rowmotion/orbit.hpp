#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/polytope.hpp"
#include "rowmotion/rational.hpp"

namespace rowmotion {

template <class State>
using Action = std::function<State(const State&)>;

/// A trajectory from `states[0]`. When not truncated, the action maps the
/// last state back to the first and `period == states.size()`.
template <class State>
struct Orbit {
  std::vector<State> states;
  std::optional<std::size_t> period;
  bool truncated = false;

  std::size_t size() const noexcept { return states.size(); }
};

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

std::size_t fingerprint(const SubsetState& s);
/// Hash of the canonical `p/q` serialization of every value.
std::size_t fingerprint(const RationalLabeling& f);

bool same_space(const SubsetState& a, const SubsetState& b);
bool same_space(const RationalLabeling& a, const RationalLabeling& b);

struct FingerprintHash {
  template <class State>
  std::size_t operator()(const State& s) const {
    return fingerprint(s);
  }
};

/// Iterates `act` from `start` until it returns to `start` or `cap` states
/// have been listed. Throws SpaceMismatchError if the action leaves the
/// start's space, and Error if some state other than the start recurs (the
/// action is then not a bijection).
template <class State>
Orbit<State> orbit(const Action<State>& act, const State& start, std::size_t cap = kDefaultOrbitCap) {
  if (cap == 0) throw Error("orbit cap must be positive");
  Orbit<State> o;
  o.states.push_back(start);
  std::unordered_multimap<std::size_t, std::size_t> seen;
  seen.emplace(fingerprint(start), 0);
  while (true) {
    State next = act(o.states.back());
    if (!same_space(next, start)) throw SpaceMismatchError("action left the state space of its start");
    std::size_t h = fingerprint(next);
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (o.states[it->second] == next) {
        if (it->second != 0) {
          throw Error("state " + std::to_string(it->second) + " recurs before the start; action is not injective");
        }
        o.period = o.states.size();
        return o;
      }
    }
    if (o.states.size() == cap) {
      o.truncated = true;
      return o;
    }
    seen.emplace(h, o.states.size());
    o.states.push_back(std::move(next));
  }
}

/// Partitions `states` into orbits, each starting at its least state (in
/// the input order), sorted by size and then by that least state.
template <class State>
std::vector<Orbit<State>> orbit_decomposition(const Action<State>& act, const std::vector<State>& states) {
  std::unordered_map<State, std::size_t, FingerprintHash> position;
  for (std::size_t i = 0; i < states.size(); ++i) position.emplace(states[i], i);
  std::vector<bool> done(states.size(), false);
  std::vector<std::pair<std::size_t, Orbit<State>>> found;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (done[i]) continue;
    Orbit<State> o = orbit(act, states[i], states.size());
    if (o.truncated) throw Error("orbit left the enumerated state space");
    for (const auto& s : o.states) {
      auto it = position.find(s);
      if (it == position.end()) throw Error("orbit left the enumerated state space");
      done[it->second] = true;
    }
    found.emplace_back(i, std::move(o));
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.second.size() != b.second.size() ? a.second.size() < b.second.size() : a.first < b.first;
  });
  std::vector<Orbit<State>> out;
  out.reserve(found.size());
  for (auto& [i, o] : found) out.push_back(std::move(o));
  return out;
}

/// One summand of a statistic: coeff * (element value), coeff * |S| (sum of
/// labels for labelings), or a constant.
struct StatTerm {
  enum class Kind { Element, Cardinality, Constant };
  Kind kind = Kind::Constant;
  Rational coeff = 1;
  Element element = 0;
};

/// Rational linear combination of element indicators (or element values on
/// labelings), cardinality, and constants. May carry a claimed average.
class Statistic {
 public:
  Statistic() = default;
  Statistic(std::string name, std::vector<StatTerm> terms, std::optional<Rational> claim = std::nullopt);

  static Statistic element(const Poset& p, Element x);
  static Statistic cardinality();
  static Statistic constant(const Rational& c);

  const std::string& name() const noexcept { return name_; }
  const std::vector<StatTerm>& terms() const noexcept { return terms_; }
  const std::optional<Rational>& claim() const noexcept { return claim_; }
  Statistic with_claim(const Rational& c) const;
  Statistic renamed(std::string name) const;

  Rational operator()(const SubsetState& s) const;
  Rational operator()(const RationalLabeling& f) const;

  Statistic operator+(const Statistic& o) const;
  Statistic operator-(const Statistic& o) const;
  friend Statistic operator*(const Rational& c, const Statistic& s);

 private:
  std::string name_;
  std::vector<StatTerm> terms_;
  std::optional<Rational> claim_;
};

/// Parses `2I1+I2`, `I3-I6`, `h(a3)-h(a6)`, `1/2*h(x)`, `card`, `1`, with
/// an optional trailing `=c` claim. `Ij` is the j-th element (1-based) in
/// canonical order; `h(id)` and `g(id)` name an element. Throws ParseError.
Statistic parse_statistic(const Poset& p, std::string_view text);
/// Comma-separated list of statistics.
std::vector<Statistic> parse_statistics(const Poset& p, std::string_view text);

template <class State>
Rational orbit_total(const Orbit<State>& o, const Statistic& s) {
  Rational t = 0;
  for (const auto& x : o.states) t += s(x);
  return t;
}

template <class State>
Rational orbit_average(const Orbit<State>& o, const Statistic& s) {
  if (o.truncated) throw TruncatedOrbitError("orbit average of a truncated orbit");
  if (o.states.empty()) throw Error("empty orbit");
  return Rational(orbit_total(o, s) / static_cast<long>(o.states.size()));
}

struct Verdict {
  bool homomesic = true;
  /// The common average when homomesic.
  std::optional<Rational> average;
  /// Counterexample: two orbits with different averages, or (when
  /// against_claim) one orbit whose average differs from the claim.
  std::size_t orbit_a = 0;
  std::size_t orbit_b = 0;
  Rational average_a;
  Rational average_b;
  bool against_claim = false;

  std::string describe() const;
};

struct HomomesyReport {
  std::string action;
  std::vector<std::string> statistics;
  std::vector<std::size_t> orbit_sizes;
  /// averages[orbit][statistic]
  std::vector<std::vector<Rational>> averages;
  std::vector<Verdict> verdicts;

  bool all_homomesic() const;
};

template <class State>
HomomesyReport homomesy_report(const std::vector<Orbit<State>>& orbits, const std::vector<Statistic>& stats,
                               std::string action = "") {
  HomomesyReport r;
  r.action = std::move(action);
  for (const auto& s : stats) r.statistics.push_back(s.name());
  for (const auto& o : orbits) {
    r.orbit_sizes.push_back(o.size());
    std::vector<Rational> row;
    for (const auto& s : stats) row.push_back(orbit_average(o, s));
    r.averages.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < stats.size(); ++j) {
    Verdict v;
    const auto& claim = stats[j].claim();
    for (std::size_t i = 0; i < orbits.size() && v.homomesic; ++i) {
      const Rational& a = r.averages[i][j];
      if (claim && a != *claim) {
        v.homomesic = false;
        v.against_claim = true;
        v.orbit_a = v.orbit_b = i;
        v.average_a = a;
        v.average_b = *claim;
      } else if (!claim && a != r.averages[0][j]) {
        v.homomesic = false;
        v.orbit_a = 0;
        v.orbit_b = i;
        v.average_a = r.averages[0][j];
        v.average_b = a;
      }
    }
    if (v.homomesic) {
      if (claim) v.average = *claim;
      else if (!orbits.empty()) v.average = r.averages[0][j];
    }
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

/// Decomposes the full state space of `kind` under `act` and checks every
/// statistic. Throws SizeCapError via enumerate_states.
HomomesyReport homomesy_check(const Action<SubsetState>& act, const PosetPtr& p, SubsetKind kind,
                              const std::vector<Statistic>& stats, std::string action = "");

/// (1/N) * sum_{i<N} s(act^i(start)), exact.
template <class State>
Rational cesaro_average(const Action<State>& act, const State& start, const Statistic& s, std::size_t n) {
  if (n == 0) throw Error("Cesaro average needs N > 0");
  Rational total = 0;
  State cur = start;
  for (std::size_t i = 0; i < n; ++i) {
    total += s(cur);
    if (i + 1 < n) cur = act(cur);
  }
  return Rational(total / static_cast<long>(n));
}

}  // namespace rowmotion
