#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rowmotion/poset.hpp"

namespace rowmotion {

enum class SubsetKind { Antichain, OrderIdeal, OrderFilter };

std::string to_string(SubsetKind k);

/// A subset of P tagged with its kind. The kind is validated on
/// construction (KindError) and participates in equality: the empty ideal
/// and the empty antichain are different states.
class SubsetState {
 public:
  SubsetState(PosetPtr p, SubsetKind kind, std::vector<bool> members);

  static SubsetState from_elements(PosetPtr p, SubsetKind kind, std::span<const Element> xs);
  static SubsetState from_ids(PosetPtr p, SubsetKind kind, std::span<const ElementId> ids);
  static SubsetState empty(PosetPtr p, SubsetKind kind);
  /// Skips validation. For callers that construct states known to be valid.
  static SubsetState trusted(PosetPtr p, SubsetKind kind, std::vector<bool> members);

  const PosetPtr& poset() const noexcept { return poset_; }
  SubsetKind kind() const noexcept { return kind_; }
  const std::vector<bool>& members() const noexcept { return members_; }
  bool contains(Element x) const { return members_.at(x); }
  std::vector<Element> elements() const;
  std::vector<ElementId> element_ids() const;
  std::size_t cardinality() const;

  /// `{a,b,d}` with members in canonical order.
  std::string to_string() const;

  bool operator==(const SubsetState& o) const;
  /// Binary-counter order: element 0 is the least significant bit.
  bool operator<(const SubsetState& o) const;

 private:
  struct Trusted {};
  SubsetState(Trusted, PosetPtr p, SubsetKind kind, std::vector<bool> members);

  PosetPtr poset_;
  SubsetKind kind_;
  std::vector<bool> members_;
};

/// Raw validity test behind the SubsetState constructor.
bool is_valid_subset(const Poset& p, SubsetKind kind, const std::vector<bool>& members);

bool same_poset(const PosetPtr& a, const PosetPtr& b);

SubsetState ideal_of(const SubsetState& a);
SubsetState filter_of(const SubsetState& a);
/// Maximal elements of an ideal (or of any subset), as an antichain.
SubsetState max_elements(const SubsetState& s);
SubsetState min_elements(const SubsetState& s);
/// Set complement; swaps ideals and filters. Antichains raise KindError.
SubsetState complement(const SubsetState& s);

SubsetState row_A(const SubsetState& a);
SubsetState row_J(const SubsetState& i);
SubsetState row_F(const SubsetState& f);
/// Dispatches on the kind.
SubsetState rowmotion(const SubsetState& s);

SubsetState toggle_t(const SubsetState& ideal, Element e);
SubsetState toggle_tau(const SubsetState& antichain, Element e);
SubsetState t_star(const SubsetState& antichain, Element e);
SubsetState tau_star(const SubsetState& ideal, Element e);

enum class ToggleSpace { Ideal, Antichain };

std::string to_string(ToggleSpace s);
/// Ideal toggles act on order ideals, antichain toggles on antichains.
SubsetKind kind_of(ToggleSpace s);

/// A product of toggles of one space, stored in written order and applied
/// right to left: steps {x, y} means t_x t_y, so y acts first.
class ToggleWord {
 public:
  ToggleWord(PosetPtr p, ToggleSpace space, std::vector<Element> steps = {});

  /// Builds a word from (space, id) steps; mixed spaces raise KindError.
  /// `fallback` is the space of an empty word.
  static ToggleWord from_steps(PosetPtr p,
                               const std::vector<std::pair<ToggleSpace, ElementId>>& steps,
                               ToggleSpace fallback = ToggleSpace::Ideal);
  static ToggleWord from_ids(PosetPtr p, ToggleSpace space, std::span<const ElementId> ids);

  const PosetPtr& poset() const noexcept { return poset_; }
  ToggleSpace space() const noexcept { return space_; }
  const std::vector<Element>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  /// Toggles are involutions, so the inverse is the reversed word.
  ToggleWord inverse() const;
  /// Written concatenation: (u * v) applies v first, then u.
  ToggleWord operator*(const ToggleWord& v) const;
  bool operator==(const ToggleWord& o) const;

  /// `t(a) t(b)` or `tau(a) tau(b)`; `id` when empty.
  std::string to_string() const;

 private:
  PosetPtr poset_;
  ToggleSpace space_;
  std::vector<Element> steps_;
};

/// η_S: ideal toggles over the canonical linear extension of the strict
/// down-set of S, written t_{x1} ... t_{xk}.
ToggleWord eta_word(const PosetPtr& p, std::span<const Element> s);
/// τ_{e1} ... τ_{ek} τ_e τ_{e1} ... τ_{ek} over the elements covered by e.
ToggleWord t_star_word(const PosetPtr& p, Element e);
/// η_e t_e η_e^{-1}.
ToggleWord tau_star_word(const PosetPtr& p, Element e);

/// Row_J = t_{x1} ... t_{xn} or Row_A = τ_{xn} ... τ_{x1} for the given
/// linear extension (canonical if omitted). Throws Error if `extension` is
/// not a linear extension.
ToggleWord rowmotion_word(const PosetPtr& p, ToggleSpace space,
                          std::optional<std::span<const Element>> extension = std::nullopt);

enum class RankFlavor { T, Tau, TStar, TauStar };

std::string to_string(RankFlavor f);
ToggleSpace space_of(RankFlavor f);

/// Product of the flavor's toggles over rank i, composed in canonical
/// element order. Throws NotGradedError or RankRangeError.
ToggleWord rank_word(const PosetPtr& p, int rank, RankFlavor flavor);

/// Gyr_J (ideal space): even ranks act first, then odd ranks.
/// Gyr_A (antichain space): odd ranks ascending, then even ranks descending.
ToggleWord gyration_word(const PosetPtr& p, ToggleSpace space);

/// Coxeter element applying toggles in `order` (order[0] acts first).
/// `order` must list every element exactly once.
ToggleWord coxeter_word(const PosetPtr& p, std::span<const Element> order, ToggleSpace space);

/// Applies w right to left. The word space must match the state kind.
SubsetState apply_word(const ToggleWord& w, const SubsetState& s);

SubsetState rank_toggle(const SubsetState& s, int rank, RankFlavor flavor);
/// Gyr_J on ideals, Gyr_A on antichains.
SubsetState gyration(const SubsetState& s);

/// Upper bound on #P for state-space enumeration.
inline constexpr std::size_t kEnumerationCap = 20;

/// All antichains, ideals, or filters of p in binary-counter order.
std::vector<SubsetState> enumerate_states(const PosetPtr& p, SubsetKind kind,
                                          std::size_t cap = kEnumerationCap);

/// Raw toggles on member bitsets; no validation.
void toggle_t_inplace(const Poset& p, std::vector<bool>& ideal, Element e);
void toggle_tau_inplace(const Poset& p, std::vector<bool>& antichain, Element e);

}  // namespace rowmotion

template <>
struct std::hash<rowmotion::SubsetState> {
  std::size_t operator()(const rowmotion::SubsetState& s) const noexcept {
    return std::hash<std::vector<bool>>()(s.members()) ^ (static_cast<std::size_t>(s.kind()) << 1);
  }
};
