#include "doctest.h"
#include "helpers.hpp"
#include "rowmotion/checks.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/orbit.hpp"
#include "rowmotion/state_io.hpp"

using namespace rowmotion;
using testing::q;

namespace {

Action<SubsetState> word_action(const ToggleWord& w) {
  return [w](const SubsetState& s) { return apply_word(w, s); };
}

Action<RationalLabeling> pl_action(const ToggleWord& w) {
  return [w](const RationalLabeling& f) { return apply_word(w, f); };
}

std::vector<Element> identity_order(const Poset& p) {
  std::vector<Element> o(p.size());
  for (Element x = 0; x < p.size(); ++x) o[x] = x;
  return o;
}

}  // namespace

TEST_SUITE("orbit") {
  TEST_CASE("zigzag 6 orbits under the left-to-right Coxeter element") {
    auto z = zigzag(6);
    auto w = coxeter_word(z, identity_order(*z), ToggleSpace::Antichain);
    CHECK(w.to_string() == "tau(a6) tau(a5) tau(a4) tau(a3) tau(a2) tau(a1)");
    auto orbits = orbit_decomposition(word_action(w), enumerate_states(z, SubsetKind::Antichain));
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0].size() == 3);
    CHECK(orbits[1].size() == 7);
    CHECK(orbits[2].size() == 11);
    std::vector<std::vector<int>> totals{{1, 1, 1, 1, 1, 1}, {3, 1, 2, 2, 1, 3}, {4, 3, 3, 3, 3, 4}};
    for (std::size_t k = 0; k < 3; ++k)
      for (Element j = 0; j < 6; ++j) {
        CAPTURE(k);
        CAPTURE(j);
        CHECK(orbit_total(orbits[k], Statistic::element(*z, j)) == totals[k][j]);
      }
    // Orbit B starts at the empty antichain.
    auto b = orbit(word_action(w), SubsetState::empty(z, SubsetKind::Antichain));
    CHECK(b.period == std::optional<std::size_t>(7));
    CHECK(b.states[1].to_string() == "{a1,a3,a5}");
  }

  TEST_CASE("homomesy on zigzag 6") {
    auto z = zigzag(6);
    auto w = coxeter_word(z, identity_order(*z), ToggleSpace::Antichain);
    auto stats = parse_statistics(*z, "I1-I6,I2-I5,2I1+I2,I1");
    auto r = homomesy_check(word_action(w), z, SubsetKind::Antichain, stats, "phi");
    CHECK(r.orbit_sizes == std::vector<std::size_t>{3, 7, 11});
    REQUIRE(r.verdicts.size() == 4);
    CHECK(r.verdicts[0].homomesic);
    CHECK(*r.verdicts[0].average == 0);
    CHECK(r.verdicts[1].homomesic);
    CHECK(*r.verdicts[2].average == 1);
    CHECK_FALSE(r.verdicts[3].homomesic);
    CHECK(r.verdicts[3].describe() == "counterexample: orbit 0 has average 1/3, orbit 1 has average 3/7");
    CHECK_FALSE(r.all_homomesic());
    auto claimed = homomesy_check(word_action(w), z, SubsetKind::Antichain, parse_statistics(*z, "2I1+I2=2"));
    CHECK_FALSE(claimed.verdicts[0].homomesic);
    CHECK(claimed.verdicts[0].against_claim);
  }

  TEST_CASE("zigzag 8 polytope counterexample") {
    auto z = zigzag(8);
    auto w = coxeter_word(z, identity_order(*z), ToggleSpace::Antichain);
    auto start = parse_labeling(z, LabelSpace::ChainPolytope, "(0,0,0,0,1/2,0,0,1)");
    auto o = orbit(pl_action(w), start);
    REQUIRE_FALSE(o.truncated);
    CHECK(o.period == std::optional<std::size_t>(20));
    std::vector<Rational> totals{8, 4, q("13/2"), 5, q("11/2"), 6, 4, 8};
    for (Element j = 0; j < 8; ++j) CHECK(orbit_total(o, Statistic::element(*z, j)) == totals[j]);
    CHECK(orbit_average(o, parse_statistic(*z, "2h(a1)+h(a2)")) == 1);
    CHECK(orbit_average(o, parse_statistic(*z, "h(a3)-h(a6)")) == q("1/40"));
    auto r = homomesy_report(std::vector{o}, parse_statistics(*z, "h(a3)-h(a6)=0,2h(a1)+h(a2)=1"));
    CHECK_FALSE(r.verdicts[0].homomesic);
    CHECK(r.verdicts[0].describe() == "counterexample: orbit 0 has average 1/40, expected 0");
    CHECK(r.verdicts[1].homomesic);
    auto cut = orbit(pl_action(w), start, 5);
    CHECK(cut.truncated);
    CHECK(cut.size() == 5);
    CHECK_FALSE(cut.period);
    CHECK_THROWS_AS(orbit_average(cut, Statistic::cardinality()), TruncatedOrbitError);
  }

  TEST_CASE("orbit edge cases") {
    auto p = chain(1);
    auto s = SubsetState::empty(p, SubsetKind::OrderIdeal);
    auto fix = orbit<SubsetState>([](const SubsetState& x) { return x; }, s);
    CHECK(fix.period == std::optional<std::size_t>(1));
    CHECK_THROWS_AS(orbit<SubsetState>([](const SubsetState& x) { return x; }, s, 0), Error);
    auto c2 = chain(2);
    auto e = SubsetState::empty(c2, SubsetKind::OrderIdeal);
    // Sends everything to the full ideal: not injective.
    auto collapse = [c2](const SubsetState&) { return SubsetState::from_ids(c2, SubsetKind::OrderIdeal, testing::strs({"x1", "x2"})); };
    CHECK_THROWS_AS(orbit<SubsetState>(collapse, e), Error);
    auto leave = [](const SubsetState& x) { return ideal_of(max_elements(x)).kind() == x.kind() ? max_elements(x) : x; };
    CHECK_THROWS_AS(orbit<SubsetState>(leave, e), SpaceMismatchError);
  }

  TEST_CASE("statistic parsing") {
    auto z = zigzag(6);
    auto s = parse_statistic(*z, " 2I1 + I2 ");
    CHECK(s.name() == "2I1 + I2");
    CHECK(s(testing::antichain(z, {"a1"})) == 2);
    CHECK(parse_statistic(*z, "1/2*h(a3) - g(a4)")(parse_labeling(z, LabelSpace::ChainPolytope, "(0,0,1/2,1/4,0,0)")) ==
          0);
    CHECK(parse_statistic(*z, "card")(testing::antichain(z, {"a1", "a3"})) == 2);
    CHECK(parse_statistic(*z, "card-1")(testing::antichain(z, {"a1", "a3"})) == 1);
    CHECK(parse_statistic(*z, "0.5I1=1/2").claim() == std::optional<Rational>(q("1/2")));
    CHECK(parse_statistics(*z, "I1,I2").size() == 2);
    auto cp = chain_product(2, 2);
    CHECK(parse_statistics(*cp, "h((1,2))-h((2,1)),I1").size() == 2);
    for (const char* bad : {"", "I0", "I7", "h(zz)", "I1 I2", "I1+", "x", "I1=", "h(a1"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_statistic(*z, bad), ParseError);
    }
    auto combo = Statistic::element(*z, 0) - Statistic::element(*z, 5);
    CHECK(combo(testing::antichain(z, {"a1"})) == 1);
    CHECK((q("2") * Statistic::cardinality())(testing::antichain(z, {"a1"})) == 2);
  }

  TEST_CASE("Cesaro averages on zigzag polytopes") {
    Rng rng(5);
    for (std::size_t n = 2; n <= 6; ++n) {
      auto z = zigzag(n);
      auto w = coxeter_word(z, identity_order(*z), ToggleSpace::Antichain);
      auto stat = parse_statistic(*z, "2g(a1)+g(a2)");
      for (int k = 0; k < 5; ++k) {
        auto start = random_chain_point(z, rng);
        auto avg = cesaro_average(pl_action(w), start, stat, 200);
        Rational gap = abs(Rational(avg - 1));
        CHECK(gap <= Rational(2, 200));
      }
    }
    CHECK_THROWS_AS(cesaro_average(pl_action(ToggleWord(chain(1), ToggleSpace::Antichain)),
                                   RationalLabeling::zero(chain(1), LabelSpace::ChainPolytope),
                                   Statistic::cardinality(), 0),
                    Error);
  }

  TEST_CASE("fingerprints separate kinds and values") {
    auto p = chain(2);
    CHECK(fingerprint(SubsetState::empty(p, SubsetKind::Antichain)) !=
          fingerprint(SubsetState::empty(p, SubsetKind::OrderIdeal)));
    CHECK(fingerprint(parse_labeling(p, LabelSpace::ChainPolytope, "(1/2,0)")) ==
          fingerprint(parse_labeling(p, LabelSpace::ChainPolytope, "(0.5,0)")));
  }
}
