#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rowmotion/combinatorial.hpp"

namespace rowmotion {

/// Bijection of {0, ..., n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error unless `image` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::uint32_t operator()(std::size_t i) const { return image_.at(i); }
  const std::vector<std::uint32_t>& image() const noexcept { return image_; }

  /// (p * q)(i) = p(q(i)): q acts first, matching written toggle words.
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Cycle lengths in decreasing order, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  /// +1 for even, -1 for odd.
  int sign() const;

  bool operator==(const Permutation& o) const { return image_ == o.image_; }

 private:
  std::vector<std::uint32_t> image_;
};

/// The enumerated states of one kind together with a reverse index.
class StateSpace {
 public:
  StateSpace(PosetPtr p, SubsetKind kind, std::size_t cap = kEnumerationCap);

  const PosetPtr& poset() const noexcept { return poset_; }
  SubsetKind kind() const noexcept { return kind_; }
  const std::vector<SubsetState>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::size_t index_of(const SubsetState& s) const;

 private:
  PosetPtr poset_;
  SubsetKind kind_;
  std::vector<SubsetState> states_;
  std::unordered_map<std::vector<bool>, std::size_t> index_;
};

/// The permutation a map induces on an enumerated space.
Permutation realize(const std::function<SubsetState(const SubsetState&)>& map, const StateSpace& space);
/// The permutation a toggle word induces on the states of its own space.
Permutation realize(const ToggleWord& w, const StateSpace& space);
Permutation realize(const ToggleWord& w);

inline constexpr std::size_t kGroupOrderCap = 50'000;

/// Order of the group generated by `gens` by breadth-first closure, or
/// nullopt if it exceeds `cap`.
std::optional<std::uint64_t> group_order(const std::vector<Permutation>& gens, std::size_t cap = kGroupOrderCap);

enum class GroupClass { Symmetric, Alternating, Neither, CapExceeded };

std::string to_string(GroupClass c);

struct Classification {
  GroupClass group = GroupClass::CapExceeded;
  std::size_t states = 0;
  std::optional<std::uint64_t> order;
  bool connected = true;
};

/// Compares the order of the toggle group acting on the states of `space`
/// with n! and n!/2. Spaces with more than `max_states` states, or groups
/// larger than `order_cap`, report CapExceeded.
Classification classify(const PosetPtr& p, ToggleSpace space, std::size_t max_states = 8,
                        std::size_t order_cap = 40'320);

struct IdentityResult {
  bool holds = true;
  std::optional<SubsetState> witness;
  std::optional<SubsetState> lhs_image;
  std::optional<SubsetState> rhs_image;

  std::string describe() const;
};

/// Extensional equality of two words of one space on all states.
IdentityResult verify_identity(const ToggleWord& lhs, const ToggleWord& rhs);

using StateMap = std::function<SubsetState(const SubsetState&)>;

/// Checks bijection(top(s)) == bottom(bijection(s)) for every s in `domain`.
/// The witness is the first failing domain state.
IdentityResult verify_diagram(const StateMap& top, const StateMap& bottom, const StateMap& bijection,
                              const std::vector<SubsetState>& domain);

}  // namespace rowmotion
