#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/rational.hpp"

namespace rowmotion {

/// Where a labeling lives. Hat convention: order-reversing labelings have
/// f(m̂) = 1 and f(M̂) = 0; order-preserving ones have f(m̂) = 0, f(M̂) = 1.
enum class LabelSpace { ChainPolytope, OrderReversing, OrderPreserving, Unconstrained };

std::string to_string(LabelSpace s);

struct MembershipResult {
  bool member = true;
  std::string reason;
  /// Offending element, cover pair (x below y), or chain bottom to top.
  std::vector<Element> witness;
};

MembershipResult membership(const Poset& p, std::span<const Rational> values, LabelSpace space);

/// Exact labeling of the elements of P, validated against its space on
/// construction (MembershipError). Unconstrained labelings accept any
/// rationals.
class RationalLabeling {
 public:
  RationalLabeling(PosetPtr p, LabelSpace space, std::vector<Rational> values);

  static RationalLabeling zero(PosetPtr p, LabelSpace space);
  /// Skips validation. For callers producing values known to be in range.
  static RationalLabeling trusted(PosetPtr p, LabelSpace space, std::vector<Rational> values);

  const PosetPtr& poset() const noexcept { return poset_; }
  LabelSpace space() const noexcept { return space_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](Element x) const { return values_.at(x); }
  const Rational& at(std::string_view id) const { return values_.at(poset_->index(id)); }

  /// Same values, different space; validated.
  RationalLabeling retag(LabelSpace space) const;
  MembershipResult check(LabelSpace space) const;

  /// `a=0, b=1/10, ...` in canonical element order.
  std::string to_string(bool decimal_ok = false) const;

  bool operator==(const RationalLabeling& o) const;

 private:
  struct Trusted {};
  RationalLabeling(Trusted, PosetPtr p, LabelSpace space, std::vector<Rational> values);

  PosetPtr poset_;
  LabelSpace space_;
  std::vector<Rational> values_;
};

/// 0/1 indicator: antichains land in C(P), ideals in OR(P), filters in OP(P).
RationalLabeling indicator(const SubsetState& s);
/// Inverse of indicator; throws MembershipError for non-0/1 labelings.
SubsetState as_subset(const RationalLabeling& f);

/// OR(g)(x) = g(x) + max over upper covers of OR(g); 0 at M̂.
RationalLabeling or_transfer(const RationalLabeling& g);
/// Same map evaluated as the largest chain sum from x upward.
RationalLabeling or_transfer_by_chains(const RationalLabeling& g);
/// OP(g)(x) = g(x) + max over lower covers of OP(g); 0 at m̂.
RationalLabeling op_transfer(const RationalLabeling& g);
RationalLabeling or_inverse(const RationalLabeling& f);
RationalLabeling op_inverse(const RationalLabeling& f);
/// 1 - f pointwise; swaps OR and OP, anything else becomes Unconstrained.
RationalLabeling comp_labeling(const RationalLabeling& f);

RationalLabeling row_C(const RationalLabeling& g);
RationalLabeling row_OR(const RationalLabeling& f);
RationalLabeling row_OP(const RationalLabeling& f);

/// f(e) -> L + R - f(e), L = max over upper covers (0 at M̂),
/// R = min over lower covers (1 at m̂).
RationalLabeling pl_toggle_t(const RationalLabeling& f, Element e);
/// g(e) -> 1 - max OP(g) below - g(e) - max OR(g) above.
RationalLabeling pl_toggle_tau(const RationalLabeling& g, Element e);
/// g(e) -> 1 - max over maximal chains through e of the chain sum.
RationalLabeling pl_toggle_tau_by_chains(const RationalLabeling& g, Element e);
RationalLabeling pl_t_star(const RationalLabeling& g, Element e);
RationalLabeling pl_tau_star(const RationalLabeling& f, Element e);
RationalLabeling pl_rank_toggle(const RationalLabeling& f, int rank, RankFlavor flavor);

/// Chain sums over MC_e, in maximal_chains_through order.
std::vector<Rational> chain_sums_through(const RationalLabeling& g, Element e);

/// Ideal words act on OR(P), antichain words on C(P).
RationalLabeling apply_word(const ToggleWord& w, const RationalLabeling& f);
LabelSpace label_space_of(ToggleSpace s);

}  // namespace rowmotion
