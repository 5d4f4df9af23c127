#include "rowmotion/polytope.hpp"

#include <algorithm>
#include <cassert>

namespace rowmotion {

std::string to_string(LabelSpace s) {
  switch (s) {
    case LabelSpace::ChainPolytope: return "chainpolytope";
    case LabelSpace::OrderReversing: return "or";
    case LabelSpace::OrderPreserving: return "op";
    case LabelSpace::Unconstrained: return "unconstrained";
  }
  return "?";
}

namespace {

// Largest chain sum ending at each element, with argmax links.
std::vector<Rational> max_sum_below(const Poset& p, std::span<const Rational> v, std::vector<long>& link) {
  std::vector<Rational> best(p.size());
  link.assign(p.size(), -1);
  for (Element x : p.canonical_linear_extension()) {
    Rational m = 0;
    for (Element y : p.lower_covers(x)) {
      if (link[x] < 0 || best[y] > m) {
        m = best[y];
        link[x] = static_cast<long>(y);
      }
    }
    best[x] = v[x] + m;
  }
  return best;
}

}  // namespace

MembershipResult membership(const Poset& p, std::span<const Rational> v, LabelSpace space) {
  MembershipResult r;
  if (v.size() != p.size()) {
    r.member = false;
    r.reason = "labeling has " + std::to_string(v.size()) + " values for " + std::to_string(p.size()) +
               " elements";
    return r;
  }
  if (space == LabelSpace::Unconstrained) return r;
  for (Element x = 0; x < p.size(); ++x) {
    if (v[x] < 0 || v[x] > 1) {
      r.member = false;
      r.reason = "value " + to_string(v[x]) + " at " + p.id(x) + " is outside [0,1]";
      r.witness = {x};
      return r;
    }
  }
  switch (space) {
    case LabelSpace::ChainPolytope: {
      std::vector<long> link;
      auto best = max_sum_below(p, v, link);
      for (Element x = 0; x < p.size(); ++x) {
        if (best[x] > 1) {
          std::vector<Element> chain;
          for (long y = static_cast<long>(x); y >= 0; y = link[static_cast<Element>(y)]) {
            chain.push_back(static_cast<Element>(y));
          }
          std::reverse(chain.begin(), chain.end());
          std::string ids;
          for (Element c : chain) ids += (ids.empty() ? "" : ",") + p.id(c);
          r.member = false;
          r.reason = "chain (" + ids + ") sums to " + to_string(best[x]) + " > 1";
          r.witness = std::move(chain);
          return r;
        }
      }
      break;
    }
    case LabelSpace::OrderReversing:
    case LabelSpace::OrderPreserving:
      for (const auto& [x, y] : p.cover_pairs()) {
        bool bad = space == LabelSpace::OrderReversing ? v[x] < v[y] : v[x] > v[y];
        if (bad) {
          r.member = false;
          r.reason = std::string("not order-") +
                     (space == LabelSpace::OrderReversing ? "reversing" : "preserving") + " on " + p.id(x) +
                     " < " + p.id(y) + " (" + to_string(v[x]) + ", " + to_string(v[y]) + ")";
          r.witness = {x, y};
          return r;
        }
      }
      break;
    case LabelSpace::Unconstrained: break;
  }
  return r;
}

RationalLabeling::RationalLabeling(PosetPtr p, LabelSpace space, std::vector<Rational> values)
    : poset_(std::move(p)), space_(space), values_(std::move(values)) {
  if (!poset_) throw Error("null poset");
  for (auto& q : values_) q.canonicalize();
  auto r = membership(*poset_, values_, space_);
  if (!r.member) throw MembershipError("not in " + rowmotion::to_string(space_) + ": " + r.reason);
}

RationalLabeling::RationalLabeling(Trusted, PosetPtr p, LabelSpace space, std::vector<Rational> values)
    : poset_(std::move(p)), space_(space), values_(std::move(values)) {}

RationalLabeling RationalLabeling::trusted(PosetPtr p, LabelSpace space, std::vector<Rational> values) {
  return RationalLabeling(Trusted{}, std::move(p), space, std::move(values));
}

RationalLabeling RationalLabeling::zero(PosetPtr p, LabelSpace space) {
  std::size_t n = p->size();
  return RationalLabeling(std::move(p), space, std::vector<Rational>(n, Rational(0)));
}

RationalLabeling RationalLabeling::retag(LabelSpace space) const {
  return RationalLabeling(poset_, space, values_);
}

MembershipResult RationalLabeling::check(LabelSpace space) const {
  return membership(*poset_, values_, space);
}

std::string RationalLabeling::to_string(bool decimal_ok) const {
  std::string s;
  for (Element x = 0; x < values_.size(); ++x) {
    if (x > 0) s += ", ";
    std::string v = rowmotion::to_string(values_[x]);
    if (decimal_ok) {
      if (auto d = to_decimal(values_[x])) v = *d;
    }
    s += poset_->id(x) + "=" + v;
  }
  return s;
}

bool RationalLabeling::operator==(const RationalLabeling& o) const {
  return space_ == o.space_ && values_ == o.values_ && same_poset(poset_, o.poset_);
}

namespace {

void require_space(const RationalLabeling& f, LabelSpace space, const char* op) {
  if (f.space() == space) return;
  auto r = f.check(space);
  if (!r.member) {
    throw MembershipError(std::string(op) + " requires a point of " + to_string(space) + ": " + r.reason);
  }
  if (f.space() != LabelSpace::Unconstrained) {
    throw MembershipError(std::string(op) + " requires a point of " + to_string(space) + ", got a " +
                          to_string(f.space()) + " labeling");
  }
}

void require_element(const Poset& p, Element e) {
  if (e >= p.size()) throw UnknownElementError("element index " + std::to_string(e) + " out of range");
}

Rational max_upper(const Poset& p, const std::vector<Rational>& v, Element x) {
  Rational m = 0;
  bool first = true;
  for (Element y : p.upper_covers(x)) {
    if (first || v[y] > m) m = v[y];
    first = false;
  }
  return m;
}

Rational max_lower(const Poset& p, const std::vector<Rational>& v, Element x) {
  Rational m = 0;
  bool first = true;
  for (Element y : p.lower_covers(x)) {
    if (first || v[y] > m) m = v[y];
    first = false;
  }
  return m;
}

Rational min_lower(const Poset& p, const std::vector<Rational>& v, Element x) {
  Rational m = 1;
  bool first = true;
  for (Element y : p.lower_covers(x)) {
    if (first || v[y] < m) m = v[y];
    first = false;
  }
  return m;
}

std::vector<Rational> or_values(const Poset& p, const std::vector<Rational>& g) {
  std::vector<Rational> f(p.size());
  const auto& ext = p.canonical_linear_extension();
  for (auto it = ext.rbegin(); it != ext.rend(); ++it) f[*it] = g[*it] + max_upper(p, f, *it);
  return f;
}

std::vector<Rational> op_values(const Poset& p, const std::vector<Rational>& g) {
  std::vector<Rational> f(p.size());
  for (Element x : p.canonical_linear_extension()) f[x] = g[x] + max_lower(p, f, x);
  return f;
}

void pl_t_inplace(const Poset& p, std::vector<Rational>& f, Element e) {
  f[e] = max_upper(p, f, e) + min_lower(p, f, e) - f[e];
}

Rational tau_value_by_chains(const Poset& p, const std::vector<Rational>& g, Element e) {
  Rational best = 0;
  bool first = true;
  for (const auto& c : p.maximal_chains_through(e)) {
    Rational s = 0;
    for (Element y : c) s += g[y];
    if (first || s > best) best = s;
    first = false;
  }
  return 1 - best;
}

// Alternative form: best chain sums strictly below and strictly above e.
Rational tau_value(const Poset& p, const std::vector<Rational>& g, Element e) {
  std::vector<Rational> below(p.size()), above(p.size());
  for (Element x : p.canonical_linear_extension()) {
    if (p.less(x, e)) below[x] = g[x] + max_lower(p, below, x);
  }
  const auto& ext = p.canonical_linear_extension();
  for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
    if (p.less(e, *it)) above[*it] = g[*it] + max_upper(p, above, *it);
  }
  return 1 - max_lower(p, below, e) - g[e] - max_upper(p, above, e);
}

void pl_tau_inplace(const Poset& p, std::vector<Rational>& g, Element e) {
  Rational v = tau_value(p, g, e);
#ifndef NDEBUG
  assert(v == tau_value_by_chains(p, g, e));
#endif
  g[e] = v;
}

}  // namespace

RationalLabeling indicator(const SubsetState& s) {
  std::vector<Rational> v(s.poset()->size());
  for (Element x = 0; x < v.size(); ++x) v[x] = s.contains(x) ? 1 : 0;
  LabelSpace space = LabelSpace::ChainPolytope;
  if (s.kind() == SubsetKind::OrderIdeal) space = LabelSpace::OrderReversing;
  if (s.kind() == SubsetKind::OrderFilter) space = LabelSpace::OrderPreserving;
  return RationalLabeling::trusted(s.poset(), space, std::move(v));
}

SubsetState as_subset(const RationalLabeling& f) {
  std::vector<bool> m(f.values().size());
  for (Element x = 0; x < m.size(); ++x) {
    if (f[x] != 0 && f[x] != 1) {
      throw MembershipError("value " + to_string(f[x]) + " at " + f.poset()->id(x) + " is not 0 or 1");
    }
    m[x] = f[x] == 1;
  }
  SubsetKind kind;
  switch (f.space()) {
    case LabelSpace::ChainPolytope: kind = SubsetKind::Antichain; break;
    case LabelSpace::OrderReversing: kind = SubsetKind::OrderIdeal; break;
    case LabelSpace::OrderPreserving: kind = SubsetKind::OrderFilter; break;
    default: throw MembershipError("unconstrained labelings have no subset kind");
  }
  return SubsetState(f.poset(), kind, std::move(m));
}

RationalLabeling or_transfer(const RationalLabeling& g) {
  require_space(g, LabelSpace::ChainPolytope, "OR");
  return RationalLabeling::trusted(g.poset(), LabelSpace::OrderReversing, or_values(*g.poset(), g.values()));
}

RationalLabeling or_transfer_by_chains(const RationalLabeling& g) {
  require_space(g, LabelSpace::ChainPolytope, "OR");
  const Poset& p = *g.poset();
  std::vector<Rational> f(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    bool first = true;
    for (const auto& c : p.maximal_chains_through(x)) {
      Rational s = 0;
      auto pos = std::find(c.begin(), c.end(), x);
      for (auto it = pos; it != c.end(); ++it) s += g[*it];
      if (first || s > f[x]) f[x] = s;
      first = false;
    }
  }
  return RationalLabeling::trusted(g.poset(), LabelSpace::OrderReversing, std::move(f));
}

RationalLabeling op_transfer(const RationalLabeling& g) {
  require_space(g, LabelSpace::ChainPolytope, "OP");
  return RationalLabeling::trusted(g.poset(), LabelSpace::OrderPreserving, op_values(*g.poset(), g.values()));
}

RationalLabeling or_inverse(const RationalLabeling& f) {
  require_space(f, LabelSpace::OrderReversing, "OR^-1");
  const Poset& p = *f.poset();
  std::vector<Rational> g(p.size());
  for (Element x = 0; x < p.size(); ++x) g[x] = f[x] - max_upper(p, f.values(), x);
  return RationalLabeling::trusted(f.poset(), LabelSpace::ChainPolytope, std::move(g));
}

RationalLabeling op_inverse(const RationalLabeling& f) {
  require_space(f, LabelSpace::OrderPreserving, "OP^-1");
  const Poset& p = *f.poset();
  std::vector<Rational> g(p.size());
  for (Element x = 0; x < p.size(); ++x) g[x] = f[x] - max_lower(p, f.values(), x);
  return RationalLabeling::trusted(f.poset(), LabelSpace::ChainPolytope, std::move(g));
}

RationalLabeling comp_labeling(const RationalLabeling& f) {
  std::vector<Rational> v(f.values().size());
  for (Element x = 0; x < v.size(); ++x) v[x] = 1 - f[x];
  LabelSpace space = LabelSpace::Unconstrained;
  if (f.space() == LabelSpace::OrderReversing) space = LabelSpace::OrderPreserving;
  if (f.space() == LabelSpace::OrderPreserving) space = LabelSpace::OrderReversing;
  return RationalLabeling::trusted(f.poset(), space, std::move(v));
}

RationalLabeling row_C(const RationalLabeling& g) { return op_inverse(comp_labeling(or_transfer(g))); }

RationalLabeling row_OR(const RationalLabeling& f) { return or_transfer(op_inverse(comp_labeling(f))); }

RationalLabeling row_OP(const RationalLabeling& f) { return op_transfer(or_inverse(comp_labeling(f))); }

RationalLabeling pl_toggle_t(const RationalLabeling& f, Element e) {
  require_space(f, LabelSpace::OrderReversing, "t");
  require_element(*f.poset(), e);
  auto v = f.values();
  pl_t_inplace(*f.poset(), v, e);
  return RationalLabeling::trusted(f.poset(), LabelSpace::OrderReversing, std::move(v));
}

RationalLabeling pl_toggle_tau(const RationalLabeling& g, Element e) {
  require_space(g, LabelSpace::ChainPolytope, "tau");
  require_element(*g.poset(), e);
  auto v = g.values();
  pl_tau_inplace(*g.poset(), v, e);
  return RationalLabeling::trusted(g.poset(), LabelSpace::ChainPolytope, std::move(v));
}

RationalLabeling pl_toggle_tau_by_chains(const RationalLabeling& g, Element e) {
  require_space(g, LabelSpace::ChainPolytope, "tau");
  require_element(*g.poset(), e);
  auto v = g.values();
  v[e] = tau_value_by_chains(*g.poset(), v, e);
  return RationalLabeling::trusted(g.poset(), LabelSpace::ChainPolytope, std::move(v));
}

std::vector<Rational> chain_sums_through(const RationalLabeling& g, Element e) {
  require_element(*g.poset(), e);
  std::vector<Rational> out;
  for (const auto& c : g.poset()->maximal_chains_through(e)) {
    Rational s = 0;
    for (Element y : c) s += g[y];
    out.push_back(s);
  }
  return out;
}

RationalLabeling pl_t_star(const RationalLabeling& g, Element e) {
  return apply_word(t_star_word(g.poset(), e), g);
}

RationalLabeling pl_tau_star(const RationalLabeling& f, Element e) {
  return apply_word(tau_star_word(f.poset(), e), f);
}

RationalLabeling pl_rank_toggle(const RationalLabeling& f, int rank, RankFlavor flavor) {
  return apply_word(rank_word(f.poset(), rank, flavor), f);
}

LabelSpace label_space_of(ToggleSpace s) {
  return s == ToggleSpace::Ideal ? LabelSpace::OrderReversing : LabelSpace::ChainPolytope;
}

RationalLabeling apply_word(const ToggleWord& w, const RationalLabeling& f) {
  if (!same_poset(w.poset(), f.poset())) throw SpaceMismatchError("word and labeling use different posets");
  LabelSpace space = label_space_of(w.space());
  require_space(f, space, w.space() == ToggleSpace::Ideal ? "t" : "tau");
  const Poset& p = *f.poset();
  auto v = f.values();
  const auto& steps = w.steps();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (w.space() == ToggleSpace::Ideal) pl_t_inplace(p, v, *it);
    else pl_tau_inplace(p, v, *it);
  }
  return RationalLabeling::trusted(f.poset(), space, std::move(v));
}

}  // namespace rowmotion
