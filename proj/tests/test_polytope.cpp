#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rowmotion/checks.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/state_io.hpp"

using namespace rowmotion;
using testing::labeling;
using testing::q;

namespace {

constexpr auto C = LabelSpace::ChainPolytope;
constexpr auto OR = LabelSpace::OrderReversing;
constexpr auto OP = LabelSpace::OrderPreserving;

std::vector<PosetPtr> zoo() {
  return {root_poset_A(3), chain_product(3, 2), chain_product(3, 3), zigzag(5), chain(3),
          antichain(2),    testing::load("eleven.poset")};
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("A3 piecewise-linear rowmotion example") {
    auto p = root_poset_A(3);
    auto g = labeling(p, C, {"0.1", "0", "0.3", "0.7", "0", "0.2"});
    auto rc = row_C(g);
    CHECK(rc == labeling(p, C, {"0", "1/10", "1/2", "0", "3/10", "0"}));
    CHECK(rc.to_string() == "a=0, b=1/10, c=1/2, d=0, e=3/10, f=0");
    auto f = labeling(p, OR, {"1", "0.9", "0.5", "0.9", "0.2", "0.2"});
    CHECK(or_transfer(g) == f);
    CHECK(row_OR(f) == labeling(p, OR, {"0", "2/5", "4/5", "0", "3/10", "0"}));
    CHECK(row_OR(f) == or_transfer(rc));
  }

  TEST_CASE("3x3 toggles") {
    auto g = testing::load("grid3x3.poset");
    auto f = labeling(g, OR, {".9", ".5", ".7", ".5", ".4", ".7", ".1", ".1", "0"});
    CHECK(pl_toggle_t(f, g->index("E")).at("E") == q("1/5"));
    CHECK(pl_toggle_t(f, g->index("A")).at("A") == q("4/5"));
    auto te = pl_toggle_t(f, g->index("E"));
    for (Element x = 0; x < g->size(); ++x)
      if (x != g->index("E")) CHECK(te[x] == f[x]);
  }

  TEST_CASE("toggle through six maximal chains") {
    auto p = testing::load("eleven.poset");
    auto gl = load_labeling(p, C, testing::data_path("eleven.labels"));
    Element F = p->index("F");
    auto sums = chain_sums_through(gl, F);
    std::sort(sums.begin(), sums.end());
    std::vector<Rational> expected{q("1/2"), q("1/2"), q("3/5"), q("3/5"), q("3/5"), q("7/10")};
    CHECK(sums == expected);
    CHECK(pl_toggle_tau(gl, F).at("F") == q("3/10"));
    CHECK(pl_toggle_tau_by_chains(gl, F) == pl_toggle_tau(gl, F));
  }

  TEST_CASE("conjugated toggle example on the grid") {
    auto p = testing::load("grid3x3.poset");
    auto gl = labeling(p, C, {".2", "0", "0", ".4", ".3", ".6", ".1", ".1", "0"});
    Element G = p->index("G");
    auto out = pl_t_star(gl, G);
    CHECK(out == labeling(p, C, {".2", "0", "0", ".2", ".1", ".6", ".3", ".1", "0"}));
    CHECK(t_star_word(p, G).to_string() == "tau(D) tau(E) tau(G) tau(D) tau(E)");
    CHECK(or_transfer(out) == pl_toggle_t(or_transfer(gl), G));
  }

  TEST_CASE("membership") {
    auto p = root_poset_A(3);
    std::vector<Rational> over{q(".5"), 0, 0, q(".3"), 0, q(".3")};
    auto m = membership(*p, over, C);
    CHECK_FALSE(m.member);
    CHECK(ids_of(*p, m.witness) == testing::strs({"a", "d", "f"}));
    std::vector<Rational> big{q("1.2"), 0, 0, 0, 0, 0};
    auto b = membership(*p, big, C);
    CHECK_FALSE(b.member);
    CHECK(ids_of(*p, b.witness) == testing::strs({"a"}));
    std::vector<Rational> rising{0, 0, 0, q(".5"), 0, 0};
    auto r = membership(*p, rising, OR);
    CHECK_FALSE(r.member);
    CHECK(ids_of(*p, r.witness) == testing::strs({"a", "d"}));
    CHECK(membership(*p, rising, OP).member == false);
    CHECK_THROWS_AS(RationalLabeling(p, C, over), MembershipError);
    CHECK_NOTHROW(RationalLabeling(p, LabelSpace::Unconstrained, big));
    CHECK_THROWS_AS(RationalLabeling(p, C, std::vector<Rational>(5)), Error);
  }

  TEST_CASE("indicators restrict to the combinatorial maps") {
    for (const auto& p : zoo()) {
      for (const auto& a : enumerate_states(p, SubsetKind::Antichain)) {
        auto g = indicator(a);
        CHECK(g.space() == C);
        CHECK(as_subset(g) == a);
        CHECK(as_subset(row_C(g)) == row_A(a));
        CHECK(as_subset(or_transfer(g)) == ideal_of(a));
        for (Element e = 0; e < p->size(); ++e) CHECK(as_subset(pl_toggle_tau(g, e)) == toggle_tau(a, e));
      }
      for (const auto& i : enumerate_states(p, SubsetKind::OrderIdeal)) {
        auto f = indicator(i);
        CHECK(f.space() == OR);
        CHECK(as_subset(row_OR(f)) == row_J(i));
        for (Element e = 0; e < p->size(); ++e) CHECK(as_subset(pl_toggle_t(f, e)) == toggle_t(i, e));
      }
      for (const auto& fi : enumerate_states(p, SubsetKind::OrderFilter))
        CHECK(as_subset(row_OP(indicator(fi))) == row_F(fi));
    }
  }

  TEST_CASE("random points: transfers, inverses and involutions") {
    Rng rng(11);
    for (const auto& p : zoo()) {
      for (int k = 0; k < 40; ++k) {
        auto g = random_chain_point(p, rng);
        REQUIRE(g.check(C).member);
        auto f = or_transfer(g);
        CHECK(f.space() == OR);
        CHECK(f == or_transfer_by_chains(g));
        CHECK(or_inverse(f) == g);
        CHECK(op_inverse(op_transfer(g)) == g);
        CHECK(comp_labeling(comp_labeling(f)) == f);
        CHECK(row_OR(or_transfer(g)) == or_transfer(row_C(g)));
        CHECK(row_OP(comp_labeling(f)).space() == OP);
        for (Element e = 0; e < p->size(); ++e) {
          CHECK(pl_toggle_tau(pl_toggle_tau(g, e), e) == g);
          CHECK(pl_toggle_tau(g, e) == pl_toggle_tau_by_chains(g, e));
          CHECK(pl_toggle_t(pl_toggle_t(f, e), e) == f);
          CHECK(or_transfer(pl_t_star(g, e)) == pl_toggle_t(f, e));
          CHECK(pl_tau_star(f, e) == or_transfer(pl_toggle_tau(g, e)));
        }
        auto cw = rowmotion_word(p, ToggleSpace::Antichain);
        CHECK(apply_word(cw, g) == row_C(g));
        CHECK(apply_word(rowmotion_word(p, ToggleSpace::Ideal), f) == row_OR(f));
      }
    }
  }

  TEST_CASE("retagging and formatting") {
    auto p = chain(2);
    auto f = labeling(p, OR, {"3/4", "1/4"});
    CHECK(f.to_string() == "x1=3/4, x2=1/4");
    CHECK(f.to_string(true) == "x1=0.75, x2=0.25");
    CHECK(labeling(p, OR, {"1/3", "0"}).to_string(true) == "x1=1/3, x2=0");
    CHECK_THROWS_AS(f.retag(OP), MembershipError);
    CHECK(f.retag(C).space() == C);
    CHECK(comp_labeling(f).space() == OP);
    CHECK(comp_labeling(f.retag(C)).space() == LabelSpace::Unconstrained);
    CHECK(RationalLabeling::zero(p, C).to_string() == "x1=0, x2=0");
  }
}

TEST_SUITE("state-io") {
  TEST_CASE("subsets") {
    auto p = root_poset_A(3);
    CHECK(parse_subset(p, SubsetKind::Antichain, "{a,e}") == testing::antichain(p, {"a", "e"}));
    CHECK(parse_subset(p, SubsetKind::Antichain, " { e , a } ").to_string() == "{a,e}");
    CHECK(parse_subset(p, SubsetKind::OrderIdeal, "{}").cardinality() == 0);
    CHECK(parse_subset(p, SubsetKind::OrderIdeal, "a,b,d").to_string() == "{a,b,d}");
    CHECK_THROWS_AS(parse_subset(p, SubsetKind::Antichain, "{a,q}"), ParseError);
    CHECK_THROWS_AS(parse_subset(p, SubsetKind::Antichain, "{a,a}"), ParseError);
    CHECK_THROWS_AS(parse_subset(p, SubsetKind::Antichain, "{a,"), ParseError);
    CHECK_THROWS_AS(parse_subset(p, SubsetKind::Antichain, "{a,d}"), KindError);
    auto cp = chain_product(3, 2);
    CHECK(parse_subset(cp, SubsetKind::Antichain, "{(3,1),(1,2)}").cardinality() == 2);
    for (const auto& s : enumerate_states(cp, SubsetKind::OrderIdeal))
      CHECK(parse_subset(cp, SubsetKind::OrderIdeal, s.to_string()) == s);
  }

  TEST_CASE("labelings") {
    auto p = root_poset_A(3);
    auto named = parse_labeling(p, C, "a=0.1,b=0,c=0.3,d=0.7,e=0,f=0.2");
    CHECK(named == parse_labeling(p, C, "(0.1,0,0.3 | 0.7,0 | 0.2)"));
    CHECK(named == parse_labeling(p, C, named.to_string()));
    CHECK(named == parse_labeling(p, C, named.to_string(true)));
    CHECK_THROWS_AS(parse_labeling(p, C, "a=0.1,b=0"), ParseError);
    CHECK_THROWS_AS(parse_labeling(p, C, "a=0.1,a=0.1,b=0,c=0,d=0,e=0"), ParseError);
    CHECK_THROWS_AS(parse_labeling(p, C, "(0,0,0)"), ParseError);
    CHECK_THROWS_AS(parse_labeling(p, C, "(x,0,0,0,0,0)"), ParseError);
    CHECK_THROWS_AS(parse_labeling(p, C, "(1,0,0,1,0,0)"), MembershipError);
    auto cp = chain_product(2, 1);
    CHECK(parse_labeling(cp, OR, "(1,1)=1/2,(2,1)=1/4").at("(2,1)") == q("1/4"));
  }

  TEST_CASE("toggle words") {
    auto p = chain_product(3, 2);
    auto w = parse_word(p, "t((1,1)) t( (2,2) )t((1,2))");
    CHECK(w.to_string() == "t((1,1)) t((2,2)) t((1,2))");
    CHECK(parse_word(p, w.to_string()) == w);
    CHECK(parse_word(p, "id", ToggleSpace::Antichain) == ToggleWord(p, ToggleSpace::Antichain));
    CHECK(parse_word(p, "tau((3,1))").space() == ToggleSpace::Antichain);
    CHECK_THROWS_AS(parse_word(p, "t((1,1)) tau((1,2))"), KindError);
    CHECK_THROWS_AS(parse_word(p, "t((9,9))"), ParseError);
    CHECK_THROWS_AS(parse_word(p, "t((1,1)"), ParseError);
    CHECK_THROWS_AS(parse_word(p, "x((1,1))"), ParseError);
  }

  TEST_CASE("labeling files") {
    auto p = chain(2);
    CHECK(parse_labeling_file(p, C, "# start\nx1 1/2\n\nx2 .25 # tail\n").at("x2") == q("1/4"));
    try {
      parse_labeling_file(p, C, "x1 1/2\nx2 1/2 extra\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_labeling_file(p, C, "x1 1/2\n"), ParseError);
    CHECK_THROWS_AS(parse_labeling_file(p, C, "x1 1/2\nx9 0\n"), ParseError);
    CHECK_THROWS_AS(load_labeling(p, C, "/no/such/labels"), ParseError);
  }
}
