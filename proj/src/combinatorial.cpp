#include "rowmotion/combinatorial.hpp"

#include <algorithm>

namespace rowmotion {

std::string to_string(SubsetKind k) {
  switch (k) {
    case SubsetKind::Antichain: return "antichain";
    case SubsetKind::OrderIdeal: return "ideal";
    case SubsetKind::OrderFilter: return "filter";
  }
  return "?";
}

bool is_valid_subset(const Poset& p, SubsetKind kind, const std::vector<bool>& m) {
  if (m.size() != p.size()) return false;
  for (Element x = 0; x < p.size(); ++x) {
    if (!m[x]) continue;
    switch (kind) {
      case SubsetKind::Antichain:
        for (Element y = x + 1; y < p.size(); ++y) {
          if (m[y] && p.comparable(x, y)) return false;
        }
        break;
      case SubsetKind::OrderIdeal:
        for (Element y : p.lower_covers(x)) {
          if (!m[y]) return false;
        }
        break;
      case SubsetKind::OrderFilter:
        for (Element y : p.upper_covers(x)) {
          if (!m[y]) return false;
        }
        break;
    }
  }
  return true;
}

bool same_poset(const PosetPtr& a, const PosetPtr& b) {
  return a == b || (a && b && *a == *b);
}

SubsetState::SubsetState(PosetPtr p, SubsetKind kind, std::vector<bool> members)
    : poset_(std::move(p)), kind_(kind), members_(std::move(members)) {
  if (!poset_) throw Error("null poset");
  if (members_.size() != poset_->size()) throw KindError("member vector has the wrong length");
  if (!is_valid_subset(*poset_, kind_, members_)) {
    throw KindError("{" + [&] {
      std::string s;
      for (Element x = 0; x < members_.size(); ++x) {
        if (!members_[x]) continue;
        if (!s.empty()) s += ",";
        s += poset_->id(x);
      }
      return s;
    }() + "} is not " + (kind_ == SubsetKind::Antichain ? "an antichain" : "an order " + std::string(kind_ == SubsetKind::OrderIdeal ? "ideal" : "filter")));
  }
}

SubsetState::SubsetState(Trusted, PosetPtr p, SubsetKind kind, std::vector<bool> members)
    : poset_(std::move(p)), kind_(kind), members_(std::move(members)) {}

SubsetState SubsetState::trusted(PosetPtr p, SubsetKind kind, std::vector<bool> members) {
  return SubsetState(Trusted{}, std::move(p), kind, std::move(members));
}

SubsetState SubsetState::from_elements(PosetPtr p, SubsetKind kind, std::span<const Element> xs) {
  std::vector<bool> m(p->size(), false);
  for (Element x : xs) {
    if (x >= m.size()) throw UnknownElementError("element index out of range");
    m[x] = true;
  }
  return SubsetState(std::move(p), kind, std::move(m));
}

SubsetState SubsetState::from_ids(PosetPtr p, SubsetKind kind, std::span<const ElementId> ids) {
  auto xs = indices_of(*p, ids);
  return from_elements(std::move(p), kind, xs);
}

SubsetState SubsetState::empty(PosetPtr p, SubsetKind kind) {
  std::size_t n = p->size();
  return SubsetState(Trusted{}, std::move(p), kind, std::vector<bool>(n, false));
}

std::vector<Element> SubsetState::elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < members_.size(); ++x) {
    if (members_[x]) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> SubsetState::element_ids() const { return ids_of(*poset_, elements()); }

std::size_t SubsetState::cardinality() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::string SubsetState::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Element x = 0; x < members_.size(); ++x) {
    if (!members_[x]) continue;
    if (!first) s += ",";
    s += poset_->id(x);
    first = false;
  }
  return s + "}";
}

bool SubsetState::operator==(const SubsetState& o) const {
  return kind_ == o.kind_ && members_ == o.members_ && same_poset(poset_, o.poset_);
}

bool SubsetState::operator<(const SubsetState& o) const {
  if (members_.size() != o.members_.size()) return members_.size() < o.members_.size();
  for (std::size_t i = members_.size(); i-- > 0;) {
    if (members_[i] != o.members_[i]) return o.members_[i];
  }
  return kind_ < o.kind_;
}

namespace {

void require_kind(const SubsetState& s, SubsetKind k, const char* op) {
  if (s.kind() != k) {
    throw KindError(std::string(op) + " expects " + to_string(k) + ", got " + to_string(s.kind()));
  }
}

void require_element(const Poset& p, Element e) {
  if (e >= p.size()) throw UnknownElementError("element index " + std::to_string(e) + " out of range");
}

std::vector<bool> down_closure(const Poset& p, const std::vector<bool>& m) {
  std::vector<bool> out(p.size(), false);
  for (Element y = 0; y < p.size(); ++y) {
    if (!m[y]) continue;
    for (Element x = 0; x < p.size(); ++x) {
      if (p.leq(x, y)) out[x] = true;
    }
  }
  return out;
}

std::vector<bool> up_closure(const Poset& p, const std::vector<bool>& m) {
  std::vector<bool> out(p.size(), false);
  for (Element y = 0; y < p.size(); ++y) {
    if (!m[y]) continue;
    for (Element x = 0; x < p.size(); ++x) {
      if (p.leq(y, x)) out[x] = true;
    }
  }
  return out;
}

std::vector<bool> maxima(const Poset& p, const std::vector<bool>& m) {
  std::vector<bool> out = m;
  for (Element x = 0; x < p.size(); ++x) {
    if (!m[x]) continue;
    for (Element y = 0; y < p.size(); ++y) {
      if (m[y] && p.less(x, y)) {
        out[x] = false;
        break;
      }
    }
  }
  return out;
}

std::vector<bool> minima(const Poset& p, const std::vector<bool>& m) {
  std::vector<bool> out = m;
  for (Element x = 0; x < p.size(); ++x) {
    if (!m[x]) continue;
    for (Element y = 0; y < p.size(); ++y) {
      if (m[y] && p.less(y, x)) {
        out[x] = false;
        break;
      }
    }
  }
  return out;
}

std::vector<bool> flipped(std::vector<bool> m) {
  m.flip();
  return m;
}

}  // namespace

SubsetState ideal_of(const SubsetState& a) {
  require_kind(a, SubsetKind::Antichain, "I");
  return SubsetState::trusted(a.poset(), SubsetKind::OrderIdeal, down_closure(*a.poset(), a.members()));
}

SubsetState filter_of(const SubsetState& a) {
  require_kind(a, SubsetKind::Antichain, "F");
  return SubsetState::trusted(a.poset(), SubsetKind::OrderFilter, up_closure(*a.poset(), a.members()));
}

SubsetState max_elements(const SubsetState& s) {
  return SubsetState::trusted(s.poset(), SubsetKind::Antichain, maxima(*s.poset(), s.members()));
}

SubsetState min_elements(const SubsetState& s) {
  return SubsetState::trusted(s.poset(), SubsetKind::Antichain, minima(*s.poset(), s.members()));
}

SubsetState complement(const SubsetState& s) {
  switch (s.kind()) {
    case SubsetKind::OrderIdeal:
      return SubsetState::trusted(s.poset(), SubsetKind::OrderFilter, flipped(s.members()));
    case SubsetKind::OrderFilter:
      return SubsetState::trusted(s.poset(), SubsetKind::OrderIdeal, flipped(s.members()));
    case SubsetKind::Antichain:
      break;
  }
  throw KindError("complement is defined for ideals and filters, not antichains");
}

SubsetState row_A(const SubsetState& a) {
  require_kind(a, SubsetKind::Antichain, "row_A");
  return min_elements(complement(ideal_of(a)));
}

SubsetState row_J(const SubsetState& i) {
  require_kind(i, SubsetKind::OrderIdeal, "row_J");
  return ideal_of(min_elements(complement(i)));
}

SubsetState row_F(const SubsetState& f) {
  require_kind(f, SubsetKind::OrderFilter, "row_F");
  return filter_of(max_elements(complement(f)));
}

SubsetState rowmotion(const SubsetState& s) {
  switch (s.kind()) {
    case SubsetKind::Antichain: return row_A(s);
    case SubsetKind::OrderIdeal: return row_J(s);
    case SubsetKind::OrderFilter: return row_F(s);
  }
  throw KindError("unknown kind");
}

void toggle_t_inplace(const Poset& p, std::vector<bool>& m, Element e) {
  if (m[e]) {
    for (Element y : p.upper_covers(e)) {
      if (m[y]) return;
    }
    m[e] = false;
  } else {
    for (Element y : p.lower_covers(e)) {
      if (!m[y]) return;
    }
    m[e] = true;
  }
}

void toggle_tau_inplace(const Poset& p, std::vector<bool>& m, Element e) {
  if (m[e]) {
    m[e] = false;
    return;
  }
  for (Element y = 0; y < p.size(); ++y) {
    if (m[y] && p.comparable(y, e)) return;
  }
  m[e] = true;
}

SubsetState toggle_t(const SubsetState& ideal, Element e) {
  require_kind(ideal, SubsetKind::OrderIdeal, "t");
  require_element(*ideal.poset(), e);
  auto m = ideal.members();
  toggle_t_inplace(*ideal.poset(), m, e);
  return SubsetState::trusted(ideal.poset(), SubsetKind::OrderIdeal, std::move(m));
}

SubsetState toggle_tau(const SubsetState& a, Element e) {
  require_kind(a, SubsetKind::Antichain, "tau");
  require_element(*a.poset(), e);
  auto m = a.members();
  toggle_tau_inplace(*a.poset(), m, e);
  return SubsetState::trusted(a.poset(), SubsetKind::Antichain, std::move(m));
}

SubsetState t_star(const SubsetState& a, Element e) {
  require_element(*a.poset(), e);
  return apply_word(t_star_word(a.poset(), e), a);
}

SubsetState tau_star(const SubsetState& i, Element e) {
  require_element(*i.poset(), e);
  return apply_word(tau_star_word(i.poset(), e), i);
}

std::string to_string(ToggleSpace s) { return s == ToggleSpace::Ideal ? "ideal" : "antichain"; }

SubsetKind kind_of(ToggleSpace s) {
  return s == ToggleSpace::Ideal ? SubsetKind::OrderIdeal : SubsetKind::Antichain;
}

ToggleWord::ToggleWord(PosetPtr p, ToggleSpace space, std::vector<Element> steps)
    : poset_(std::move(p)), space_(space), steps_(std::move(steps)) {
  if (!poset_) throw Error("null poset");
  for (Element x : steps_) require_element(*poset_, x);
}

ToggleWord ToggleWord::from_steps(PosetPtr p,
                                  const std::vector<std::pair<ToggleSpace, ElementId>>& steps,
                                  ToggleSpace fallback) {
  ToggleSpace space = steps.empty() ? fallback : steps.front().first;
  std::vector<Element> xs;
  for (const auto& [s, id] : steps) {
    if (s != space) throw KindError("toggle word mixes ideal and antichain toggles");
    xs.push_back(p->index(id));
  }
  return ToggleWord(std::move(p), space, std::move(xs));
}

ToggleWord ToggleWord::from_ids(PosetPtr p, ToggleSpace space, std::span<const ElementId> ids) {
  auto xs = indices_of(*p, ids);
  return ToggleWord(std::move(p), space, std::move(xs));
}

ToggleWord ToggleWord::inverse() const {
  return ToggleWord(poset_, space_, std::vector<Element>(steps_.rbegin(), steps_.rend()));
}

ToggleWord ToggleWord::operator*(const ToggleWord& v) const {
  if (!same_poset(poset_, v.poset_)) throw SpaceMismatchError("toggle words over different posets");
  if (space_ != v.space_) throw KindError("toggle word mixes ideal and antichain toggles");
  std::vector<Element> s = steps_;
  s.insert(s.end(), v.steps_.begin(), v.steps_.end());
  return ToggleWord(poset_, space_, std::move(s));
}

bool ToggleWord::operator==(const ToggleWord& o) const {
  return space_ == o.space_ && steps_ == o.steps_ && same_poset(poset_, o.poset_);
}

std::string ToggleWord::to_string() const {
  if (steps_.empty()) return "id";
  std::string s;
  const char* name = space_ == ToggleSpace::Ideal ? "t(" : "tau(";
  for (Element x : steps_) {
    if (!s.empty()) s += " ";
    s += name + poset_->id(x) + ")";
  }
  return s;
}

ToggleWord eta_word(const PosetPtr& p, std::span<const Element> s) {
  for (Element x : s) require_element(*p, x);
  auto down = p->strict_down_set(s);
  return ToggleWord(p, ToggleSpace::Ideal, p->linear_extension_of(down));
}

ToggleWord t_star_word(const PosetPtr& p, Element e) {
  require_element(*p, e);
  const auto& below = p->lower_covers(e);
  std::vector<Element> steps(below.begin(), below.end());
  steps.push_back(e);
  steps.insert(steps.end(), below.begin(), below.end());
  return ToggleWord(p, ToggleSpace::Antichain, std::move(steps));
}

ToggleWord tau_star_word(const PosetPtr& p, Element e) {
  require_element(*p, e);
  Element s[] = {e};
  ToggleWord eta = eta_word(p, s);
  return eta * ToggleWord(p, ToggleSpace::Ideal, {e}) * eta.inverse();
}

ToggleWord rowmotion_word(const PosetPtr& p, ToggleSpace space,
                          std::optional<std::span<const Element>> extension) {
  std::vector<Element> ext;
  if (extension) {
    if (!is_linear_extension(*p, *extension)) throw Error("not a linear extension");
    ext.assign(extension->begin(), extension->end());
  } else {
    ext = p->canonical_linear_extension();
  }
  if (space == ToggleSpace::Antichain) std::reverse(ext.begin(), ext.end());
  return ToggleWord(p, space, std::move(ext));
}

std::string to_string(RankFlavor f) {
  switch (f) {
    case RankFlavor::T: return "t";
    case RankFlavor::Tau: return "tau";
    case RankFlavor::TStar: return "t-star";
    case RankFlavor::TauStar: return "tau-star";
  }
  return "?";
}

ToggleSpace space_of(RankFlavor f) {
  return (f == RankFlavor::T || f == RankFlavor::TauStar) ? ToggleSpace::Ideal : ToggleSpace::Antichain;
}

ToggleWord rank_word(const PosetPtr& p, int rank, RankFlavor flavor) {
  auto level = p->rank_level(rank);
  ToggleSpace space = space_of(flavor);
  ToggleWord w(p, space);
  for (Element x : level) {
    switch (flavor) {
      case RankFlavor::T:
      case RankFlavor::Tau: w = w * ToggleWord(p, space, {x}); break;
      case RankFlavor::TStar: w = w * t_star_word(p, x); break;
      case RankFlavor::TauStar: w = w * tau_star_word(p, x); break;
    }
  }
  return w;
}

ToggleWord gyration_word(const PosetPtr& p, ToggleSpace space) {
  int r = p->height();
  RankFlavor f = space == ToggleSpace::Ideal ? RankFlavor::T : RankFlavor::Tau;
  ToggleWord w(p, space);
  if (space == ToggleSpace::Ideal) {
    // Written: odd ranks, then even ranks; the even ranks act first.
    for (int i = 1; i <= r; i += 2) w = w * rank_word(p, i, f);
    for (int i = 0; i <= r; i += 2) w = w * rank_word(p, i, f);
  } else {
    // Written: τ0 τ2 τ4 ... then ... τ5 τ3 τ1.
    for (int i = 0; i <= r; i += 2) w = w * rank_word(p, i, f);
    int top_odd = (r % 2 == 1) ? r : r - 1;
    for (int i = top_odd; i >= 1; i -= 2) w = w * rank_word(p, i, f);
  }
  return w;
}

ToggleWord coxeter_word(const PosetPtr& p, std::span<const Element> order, ToggleSpace space) {
  std::vector<bool> seen(p->size(), false);
  for (Element x : order) {
    require_element(*p, x);
    if (seen[x]) throw Error("Coxeter order repeats '" + p->id(x) + "'");
    seen[x] = true;
  }
  if (order.size() != p->size()) throw Error("Coxeter order must list every element once");
  return ToggleWord(p, space, std::vector<Element>(order.rbegin(), order.rend()));
}

SubsetState apply_word(const ToggleWord& w, const SubsetState& s) {
  if (s.kind() != kind_of(w.space())) {
    throw KindError(to_string(w.space()) + " toggles cannot act on " + to_string(s.kind()) + " states");
  }
  if (!same_poset(w.poset(), s.poset())) throw SpaceMismatchError("word and state use different posets");
  const Poset& p = *s.poset();
  auto m = s.members();
  const auto& steps = w.steps();
  if (w.space() == ToggleSpace::Ideal) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) toggle_t_inplace(p, m, *it);
  } else {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) toggle_tau_inplace(p, m, *it);
  }
  return SubsetState::trusted(s.poset(), s.kind(), std::move(m));
}

SubsetState rank_toggle(const SubsetState& s, int rank, RankFlavor flavor) {
  return apply_word(rank_word(s.poset(), rank, flavor), s);
}

SubsetState gyration(const SubsetState& s) {
  switch (s.kind()) {
    case SubsetKind::OrderIdeal: return apply_word(gyration_word(s.poset(), ToggleSpace::Ideal), s);
    case SubsetKind::Antichain: return apply_word(gyration_word(s.poset(), ToggleSpace::Antichain), s);
    case SubsetKind::OrderFilter: break;
  }
  throw KindError("gyration is defined on ideals and antichains");
}

std::vector<SubsetState> enumerate_states(const PosetPtr& p, SubsetKind kind, std::size_t cap) {
  const std::size_t n = p->size();
  if (n > cap) {
    throw SizeCapError("state enumeration limited to " + std::to_string(cap) + " elements (poset has " +
                       std::to_string(n) + ")");
  }
  std::vector<std::vector<bool>> antichains;
  std::vector<bool> cur(n, false);
  // Backtrack over elements in index order; x may join if incomparable to all chosen.
  std::function<void(Element)> rec = [&](Element x) {
    if (x == n) {
      antichains.push_back(cur);
      return;
    }
    rec(x + 1);
    for (Element y = 0; y < x; ++y) {
      if (cur[y] && p->comparable(x, y)) return;
    }
    cur[x] = true;
    rec(x + 1);
    cur[x] = false;
  };
  rec(0);

  std::vector<SubsetState> out;
  out.reserve(antichains.size());
  for (auto& a : antichains) {
    switch (kind) {
      case SubsetKind::Antichain: out.push_back(SubsetState::trusted(p, kind, std::move(a))); break;
      case SubsetKind::OrderIdeal: out.push_back(SubsetState::trusted(p, kind, down_closure(*p, a))); break;
      case SubsetKind::OrderFilter: out.push_back(SubsetState::trusted(p, kind, up_closure(*p, a))); break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rowmotion
