#include "rowmotion/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace rowmotion {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || hit[v]) throw Error("image array is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.image_ = std::move(im);
  return p;
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (q.size() != size()) throw Error("composing permutations of different degree");
  Permutation r;
  r.image_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) r.image_[i] = image_[q.image_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) r.image_[image_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int Permutation::sign() const {
  std::size_t even_cycles = 0;
  for (auto len : cycle_type()) {
    if (len % 2 == 0) ++even_cycles;
  }
  return even_cycles % 2 == 0 ? 1 : -1;
}

StateSpace::StateSpace(PosetPtr p, SubsetKind kind, std::size_t cap)
    : poset_(std::move(p)), kind_(kind), states_(enumerate_states(poset_, kind, cap)) {
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i].members(), i);
}

std::size_t StateSpace::index_of(const SubsetState& s) const {
  if (s.kind() != kind_) throw KindError("state kind does not match the space");
  auto it = index_.find(s.members());
  if (it == index_.end()) throw Error("state " + s.to_string() + " is not in the space");
  return it->second;
}

Permutation realize(const std::function<SubsetState(const SubsetState&)>& map, const StateSpace& space) {
  std::vector<std::uint32_t> im(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    im[i] = static_cast<std::uint32_t>(space.index_of(map(space.states()[i])));
  }
  return Permutation(std::move(im));
}

Permutation realize(const ToggleWord& w, const StateSpace& space) {
  return realize([&](const SubsetState& s) { return apply_word(w, s); }, space);
}

Permutation realize(const ToggleWord& w) {
  StateSpace space(w.poset(), kind_of(w.space()));
  return realize(w, space);
}

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

std::optional<std::uint64_t> group_order(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) return 1;
  std::size_t n = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != n) throw Error("generators act on different degrees");
  }
  std::unordered_set<std::vector<std::uint32_t>, ImageHash> seen;
  std::deque<Permutation> frontier;
  Permutation id = Permutation::identity(n);
  seen.insert(id.image());
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = g * cur;
      if (seen.insert(next.image()).second) {
        if (seen.size() > cap) return std::nullopt;
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::string to_string(GroupClass c) {
  switch (c) {
    case GroupClass::Symmetric: return "symmetric";
    case GroupClass::Alternating: return "alternating";
    case GroupClass::Neither: return "neither";
    case GroupClass::CapExceeded: return "cap-exceeded";
  }
  return "?";
}

Classification classify(const PosetPtr& p, ToggleSpace space, std::size_t max_states, std::size_t order_cap) {
  Classification c;
  c.connected = p->is_connected();
  StateSpace states(p, kind_of(space));
  c.states = states.size();
  if (c.states > max_states) return c;
  std::vector<Permutation> gens;
  for (Element x = 0; x < p->size(); ++x) gens.push_back(realize(ToggleWord(p, space, {x}), states));
  c.order = group_order(gens, order_cap);
  if (!c.order) return c;
  std::uint64_t full = 1;
  for (std::size_t k = 2; k <= c.states; ++k) full *= k;
  if (*c.order == full) c.group = GroupClass::Symmetric;
  else if (c.states >= 2 && *c.order * 2 == full) c.group = GroupClass::Alternating;
  else c.group = GroupClass::Neither;
  return c;
}

std::string IdentityResult::describe() const {
  if (holds) return "holds";
  std::string s = "fails at " + (witness ? witness->to_string() : std::string("?"));
  if (lhs_image && rhs_image) s += ": " + lhs_image->to_string() + " vs " + rhs_image->to_string();
  return s;
}

IdentityResult verify_identity(const ToggleWord& lhs, const ToggleWord& rhs) {
  if (lhs.space() != rhs.space()) throw KindError("identity between words of different spaces");
  if (!same_poset(lhs.poset(), rhs.poset())) throw SpaceMismatchError("identity between words on different posets");
  IdentityResult r;
  for (const auto& s : enumerate_states(lhs.poset(), kind_of(lhs.space()))) {
    auto a = apply_word(lhs, s);
    auto b = apply_word(rhs, s);
    if (!(a == b)) {
      r.holds = false;
      r.witness = s;
      r.lhs_image = a;
      r.rhs_image = b;
      return r;
    }
  }
  return r;
}

IdentityResult verify_diagram(const StateMap& top, const StateMap& bottom, const StateMap& bijection,
                              const std::vector<SubsetState>& domain) {
  IdentityResult r;
  for (const auto& s : domain) {
    auto a = bijection(top(s));
    auto b = bottom(bijection(s));
    if (!(a == b)) {
      r.holds = false;
      r.witness = s;
      r.lhs_image = a;
      r.rhs_image = b;
      return r;
    }
  }
  return r;
}

}  // namespace rowmotion
