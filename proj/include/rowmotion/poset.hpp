#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rowmotion/errors.hpp"

namespace rowmotion {

using ElementId = std::string;
/// Position of an element in the poset's canonical element order.
using Element = std::size_t;
using Chain = std::vector<Element>;

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

/// Total order on element ids used for every tie-break: ids are split into
/// digit and non-digit runs, digit runs compare numerically (a2 < a10).
bool natural_less(std::string_view a, std::string_view b);

/// Upper bound on #P for exhaustive linear-extension enumeration.
inline constexpr std::size_t kLinearExtensionCap = 10;

/// A finite poset given by its Hasse diagram. Immutable after construction;
/// safe to share between threads.
///
/// Elements are stored in canonical order (sorted by natural_less) and
/// addressed by index. The transitive closure is cached, and the rank
/// function is stored exactly when the poset is graded.
///
/// The virtual elements m̂ (below everything) and M̂ (above everything) are
/// never materialized. Callers that take a max/min over the covers of a
/// maximal/minimal element substitute the hat label themselves.
class Poset {
 public:
  /// Builds a poset from its cover relations (x, y) meaning x ⋖ y.
  /// Throws UnknownElementError, CycleError, NotReducedError, or Error on
  /// duplicate ids.
  static PosetPtr from_covers(std::vector<ElementId> elements,
                              const std::vector<std::pair<ElementId, ElementId>>& covers);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  const std::vector<ElementId>& ids() const noexcept { return ids_; }
  const ElementId& id(Element x) const { return ids_.at(x); }
  std::optional<Element> find(std::string_view id) const;
  /// Throws UnknownElementError.
  Element index(std::string_view id) const;

  bool leq(Element x, Element y) const { return leq_[x][y]; }
  bool less(Element x, Element y) const { return x != y && leq_[x][y]; }
  bool comparable(Element x, Element y) const { return leq_[x][y] || leq_[y][x]; }
  bool is_leq(std::string_view x, std::string_view y) const { return leq(index(x), index(y)); }

  /// Elements covering x (x ⋖ y).
  const std::vector<Element>& upper_covers(Element x) const { return up_[x]; }
  /// Elements covered by x (y ⋖ x).
  const std::vector<Element>& lower_covers(Element x) const { return down_[x]; }
  /// True iff x ⋖ y.
  bool covers(Element x, Element y) const;
  const std::vector<std::pair<Element, Element>>& cover_pairs() const noexcept { return cover_pairs_; }

  /// Up-covers of x by id.
  std::vector<ElementId> covers_of(std::string_view x) const;
  /// Down-covers of x by id.
  std::vector<ElementId> covered_by(std::string_view x) const;

  bool is_minimal(Element x) const { return down_[x].empty(); }
  bool is_maximal(Element x) const { return up_[x].empty(); }
  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

  bool is_graded() const noexcept { return rank_.has_value(); }
  /// Throws NotGradedError.
  int rank(Element x) const;
  /// The rank r of the poset (-1 for the empty poset). Throws NotGradedError.
  int height() const;
  /// Elements of rank i in canonical order. Throws NotGradedError or
  /// RankRangeError when i is outside [0, r].
  std::vector<Element> rank_level(int i) const;

  /// Topological order; ties broken by canonical element order.
  const std::vector<Element>& canonical_linear_extension() const noexcept { return canonical_extension_; }
  /// Canonical linear extension of the subposet induced on `subset`.
  std::vector<Element> linear_extension_of(std::span<const Element> subset) const;
  /// Elements strictly below some element of `s`, in canonical order.
  std::vector<Element> strict_down_set(std::span<const Element> s) const;

  /// True iff the undirected Hasse diagram is connected (empty poset: true).
  bool is_connected() const;

  /// All maximal chains of P containing e, bottom to top. Memoized; safe
  /// for concurrent callers.
  const std::vector<Chain>& maximal_chains_through(Element e) const;

  /// Structural equality: same ids and same covers.
  bool operator==(const Poset& other) const;

  Poset(const Poset&) = delete;
  Poset& operator=(const Poset&) = delete;

 private:
  Poset() = default;

  std::vector<ElementId> ids_;
  std::unordered_map<std::string, Element> index_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<std::pair<Element, Element>> cover_pairs_;
  std::vector<std::vector<bool>> leq_;
  std::optional<std::vector<int>> rank_;
  int height_ = -1;
  std::vector<Element> canonical_extension_;

  mutable std::mutex chain_mutex_;
  mutable std::vector<std::unique_ptr<std::vector<Chain>>> chain_cache_;
};

/// Calls `visit` on every linear extension of p, in lexicographic order of
/// element indices. `visit` returns false to stop early. Throws SizeCapError
/// if #P exceeds `cap`.
void for_each_linear_extension(const Poset& p,
                               const std::function<bool(std::span<const Element>)>& visit,
                               std::size_t cap = kLinearExtensionCap);

std::vector<std::vector<Element>> all_linear_extensions(const Poset& p,
                                                        std::size_t cap = kLinearExtensionCap);

/// True iff `order` lists every element once and x_i < x_j implies i < j.
bool is_linear_extension(const Poset& p, std::span<const Element> order);

std::vector<ElementId> ids_of(const Poset& p, std::span<const Element> xs);
std::vector<Element> indices_of(const Poset& p, std::span<const ElementId> ids);

}  // namespace rowmotion
