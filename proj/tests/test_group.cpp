#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/group.hpp"

using namespace rowmotion;

namespace {

std::vector<std::vector<std::size_t>> as_lists(const std::vector<Permutation>& gens) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : gens) out.emplace_back(g.image().begin(), g.image().end());
  return out;
}

std::vector<Permutation> toggles(const PosetPtr& p, ToggleSpace space, const StateSpace& states) {
  std::vector<Permutation> gens;
  for (Element x = 0; x < p->size(); ++x) gens.push_back(realize(ToggleWord(p, space, {x}), states));
  return gens;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("permutations") {
    Permutation p({1, 2, 0, 3});
    Permutation q({1, 0, 2, 3});
    CHECK((p * q).image() == std::vector<std::uint32_t>{2, 1, 0, 3});
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.cycle_type() == std::vector<std::size_t>{3, 1});
    CHECK(p.sign() == 1);
    CHECK(q.sign() == -1);
    CHECK_THROWS_AS(Permutation({0, 0}), Error);
    CHECK_THROWS_AS(Permutation({2, 0}), Error);
    CHECK_THROWS_AS(p * Permutation::identity(3), Error);
  }

  TEST_CASE("toggle group orders") {
    struct Case {
      PosetPtr p;
      std::uint64_t order;
    };
    std::vector<Case> cases{{zigzag(1), 2},     {zigzag(2), 6},     {zigzag(3), 120}, {zigzag(4), 40320},
                            {chain(2), 6},      {chain_product(2, 2), 720}};
    for (const auto& c : cases) {
      for (auto space : {ToggleSpace::Ideal, ToggleSpace::Antichain}) {
        StateSpace states(c.p, kind_of(space));
        auto gens = toggles(c.p, space, states);
        CAPTURE(c.p->size());
        CHECK(group_order(gens) == std::optional<std::uint64_t>(c.order));
        if (c.order <= 720) CHECK(oracle::group_order(as_lists(gens)) == c.order);
      }
    }
    StateSpace big(zigzag(4), SubsetKind::Antichain);
    CHECK_FALSE(group_order(toggles(zigzag(4), ToggleSpace::Antichain, big), 1000));
    CHECK(group_order({}) == std::optional<std::uint64_t>(1));
  }

  TEST_CASE("classification") {
    for (const auto& p : {zigzag(1), zigzag(2), zigzag(3), zigzag(4), chain(2), chain(5), root_poset_A(2),
                          chain_product(2, 2)}) {
      for (auto space : {ToggleSpace::Ideal, ToggleSpace::Antichain}) {
        auto c = classify(p, space);
        CAPTURE(p->size());
        CHECK(c.connected);
        CHECK(c.group == GroupClass::Symmetric);
      }
    }
    auto big = classify(root_poset_A(3), ToggleSpace::Ideal);
    CHECK(big.states == 14);
    CHECK(big.group == GroupClass::CapExceeded);
    auto split = classify(antichain(2), ToggleSpace::Ideal);
    CHECK_FALSE(split.connected);
    CHECK(split.states == 4);
    // Two commuting transpositions.
    CHECK(split.order == std::optional<std::uint64_t>(4));
    CHECK(split.group == GroupClass::Neither);
    CHECK(to_string(GroupClass::Alternating) == "alternating");
  }

  TEST_CASE("identities and diagrams") {
    auto p = root_poset_A(3);
    auto lhs = rowmotion_word(p, ToggleSpace::Ideal);
    auto exts = all_linear_extensions(*p);
    auto rhs = rowmotion_word(p, ToggleSpace::Ideal, std::span<const Element>(exts.back()));
    CHECK(verify_identity(lhs, rhs).holds);
    auto bad = verify_identity(lhs, ToggleWord(p, ToggleSpace::Ideal));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness);
    CHECK(bad.describe().rfind("fails at {", 0) == 0);
    CHECK_THROWS_AS(verify_identity(lhs, ToggleWord(p, ToggleSpace::Antichain)), KindError);
    auto top = [](const SubsetState& s) { return row_A(s); };
    auto bottom = [](const SubsetState& s) { return row_J(s); };
    auto bij = [](const SubsetState& s) { return ideal_of(s); };
    CHECK(verify_diagram(top, bottom, bij, enumerate_states(p, SubsetKind::Antichain)).holds);
    auto wrong = verify_diagram(top, [](const SubsetState& s) { return s; }, bij,
                                enumerate_states(p, SubsetKind::Antichain));
    CHECK_FALSE(wrong.holds);
  }

  TEST_CASE("realized rowmotion has the known cycle type") {
    auto p = root_poset_A(3);
    auto perm = realize(rowmotion_word(p, ToggleSpace::Ideal));
    CHECK(perm.cycle_type() == std::vector<std::size_t>{8, 4, 2});
  }
}
