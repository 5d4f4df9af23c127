#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "rowmotion/families.hpp"
#include "rowmotion/poset_io.hpp"

using namespace rowmotion;
using testing::strs;

namespace {

std::vector<std::string> ext_ids(const Poset& p, const std::vector<Element>& xs) { return ids_of(p, xs); }

PosetPtr a3() { return testing::load("a3.poset"); }

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("A3 from its Hasse diagram") {
    auto p = a3();
    REQUIRE(p->size() == 6);
    CHECK(p->is_graded());
    CHECK(p->height() == 2);
    for (const char* x : {"a", "b", "c"}) CHECK(p->rank(p->index(x)) == 0);
    for (const char* x : {"d", "e"}) CHECK(p->rank(p->index(x)) == 1);
    CHECK(p->rank(p->index("f")) == 2);
    CHECK(p->is_leq("a", "f"));
    CHECK_FALSE(p->is_leq("a", "c"));
    CHECK(p->is_leq("c", "c"));
    CHECK(p->covers_of("b") == strs({"d", "e"}));
    CHECK(p->covered_by("f") == strs({"d", "e"}));
    CHECK(p->covers_of("f").empty());
    CHECK(ext_ids(*p, p->canonical_linear_extension()) == strs({"a", "b", "c", "d", "e", "f"}));
    CHECK(p->is_connected());
    CHECK_THROWS_AS(p->is_leq("a", "z"), UnknownElementError);
    CHECK_THROWS_AS(p->covers_of("z"), UnknownElementError);
  }

  TEST_CASE("A3 linear extensions match the permutation filter") {
    auto p = a3();
    auto exts = all_linear_extensions(*p);
    CHECK(exts.size() == oracle::count_linear_extensions(oracle::closure(*p)));
    CHECK(exts.size() == 16);
    for (const auto& e : exts) CHECK(is_linear_extension(*p, e));
  }

  TEST_CASE("small cases") {
    auto single = Poset::from_covers({"x"}, {});
    CHECK(single->rank(0) == 0);
    CHECK(single->covers_of("x").empty());
    CHECK(all_linear_extensions(*single).size() == 1);

    auto empty = Poset::from_covers({}, {});
    CHECK(empty->empty());
    CHECK(empty->is_graded());
    CHECK(empty->height() == -1);
    CHECK(empty->is_connected());
    CHECK(all_linear_extensions(*empty).size() == 1);

    auto two = antichain(2);
    auto exts = all_linear_extensions(*two);
    REQUIRE(exts.size() == 2);
    CHECK(ext_ids(*two, exts[0]) == strs({"x1", "x2"}));
    CHECK(ext_ids(*two, exts[1]) == strs({"x2", "x1"}));
    CHECK(ext_ids(*two, two->canonical_linear_extension()) == strs({"x1", "x2"}));
    CHECK_FALSE(two->is_connected());

    auto c3 = chain(3);
    CHECK(all_linear_extensions(*c3).size() == 1);
    CHECK(ext_ids(*c3, c3->canonical_linear_extension()) == strs({"x1", "x2", "x3"}));
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(Poset::from_covers({"a"}, {{"a", "a"}}), CycleError);
    CHECK_THROWS_AS(Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}), NotReducedError);
    CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"a", "b"}}), NotReducedError);
    CHECK_THROWS_AS(Poset::from_covers({"a"}, {{"a", "q"}}), UnknownElementError);
    CHECK_THROWS_AS(Poset::from_covers({"a", "a"}, {}), Error);
    // Unknown ids are reported before cycles.
    CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}, {"a", "q"}}), UnknownElementError);
  }

  TEST_CASE("grading") {
    // y sits at rank 0 but is covered by the rank-2 element.
    auto p = Poset::from_covers({"x1", "x2", "x3", "y"}, {{"x1", "x2"}, {"x2", "x3"}, {"y", "x3"}});
    CHECK_FALSE(p->is_graded());
    CHECK_THROWS_AS(p->rank(0), NotGradedError);
    CHECK_THROWS_AS(p->rank_level(0), NotGradedError);
    // Maximal elements at different ranks.
    auto q = Poset::from_covers({"x1", "x2", "y"}, {{"x1", "x2"}});
    CHECK_FALSE(q->is_graded());
    auto a = a3();
    CHECK_THROWS_AS(a->rank_level(3), RankRangeError);
    CHECK_THROWS_AS(a->rank_level(-1), RankRangeError);
    CHECK(ext_ids(*a, a->rank_level(1)) == strs({"d", "e"}));
  }

  TEST_CASE("natural id order") {
    CHECK(natural_less("a2", "a10"));
    CHECK_FALSE(natural_less("a10", "a2"));
    CHECK(natural_less("(1,2)", "(2,1)"));
    CHECK(natural_less("(2,9)", "(2,10)"));
    CHECK(natural_less("a", "a1"));
    CHECK(natural_less("a", "b"));
    CHECK(natural_less("a01", "a1") != natural_less("a1", "a01"));
    CHECK_FALSE(natural_less("a1", "a1"));
    auto z = zigzag(12);
    CHECK(z->id(9) == "a10");
  }

  TEST_CASE("random posets against brute force") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t n = 1 + trial % 9;
      auto [ids, covers] = oracle::random_poset(n, rng);
      auto p = Poset::from_covers(ids, covers);
      // Oracle indices follow the library's canonical order.
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (auto& [x, y] : covers) pairs.emplace_back(p->index(x), p->index(y));
      auto le = oracle::closure(n, pairs);
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) REQUIRE(p->leq(x, y) == le[x][y]);
      CHECK(is_linear_extension(*p, p->canonical_linear_extension()));
      if (p->is_graded()) {
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y)
            if (x != y && p->rank(x) == p->rank(y)) CHECK_FALSE(p->comparable(x, y));
      }
      if (n <= 7) {
        auto exts = all_linear_extensions(*p);
        CHECK(exts.size() == oracle::count_linear_extensions(le));
        for (const auto& e : exts) CHECK(is_linear_extension(*p, e));
      }
      for (Element e = 0; e < n; ++e) {
        auto chains = p->maximal_chains_through(e);
        auto expected = oracle::maximal_chains_through(le, e);
        REQUIRE(chains.size() == expected.size());
        std::vector<oracle::Mask> got;
        for (const auto& c : chains) {
          oracle::Mask m = 0;
          for (Element y : c) m |= oracle::Mask(1) << y;
          got.push_back(m);
          for (std::size_t i = 0; i + 1 < c.size(); ++i) CHECK(p->covers(c[i], c[i + 1]));
        }
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        CHECK(got == expected);
      }
    }
  }

  TEST_CASE("linear extension cap") {
    CHECK_THROWS_AS(all_linear_extensions(*zigzag(11)), SizeCapError);
    CHECK(all_linear_extensions(*zigzag(11), 11).size() == 353792);
  }

  TEST_CASE("maximal chains") {
    auto p = a3();
    auto mc = p->maximal_chains_through(p->index("a"));
    REQUIRE(mc.size() == 1);
    CHECK(ext_ids(*p, mc[0]) == strs({"a", "d", "f"}));
    auto eleven = testing::load("eleven.poset");
    CHECK(eleven->maximal_chains_through(eleven->index("F")).size() == 6);
    auto single = chain(1);
    CHECK(single->maximal_chains_through(0) == std::vector<Chain>{{0}});
  }

  TEST_CASE("strict down-sets and induced extensions") {
    auto p = chain_product(3, 2);
    Element e = p->index("(2,2)");
    Element s[] = {e};
    auto down = p->strict_down_set(s);
    CHECK(ext_ids(*p, p->linear_extension_of(down)) == strs({"(1,1)", "(1,2)", "(2,1)"}));
    auto mins = p->minimal_elements();
    CHECK(p->strict_down_set(mins).empty());
  }
}

TEST_SUITE("families") {
  TEST_CASE("zigzag") {
    auto z6 = zigzag(6);
    std::vector<std::pair<Element, Element>> expected;
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"a1", "a2"}, {"a3", "a2"}, {"a3", "a4"}, {"a5", "a4"}, {"a5", "a6"}})
      expected.emplace_back(z6->index(x), z6->index(y));
    std::sort(expected.begin(), expected.end());
    CHECK(z6->cover_pairs() == expected);
    for (Element x = 0; x < 6; ++x) CHECK(z6->rank(x) == (x % 2 == 0 ? 0 : 1));
    CHECK(zigzag(1)->size() == 1);
    CHECK(zigzag(2)->cover_pairs().size() == 1);
    CHECK(zigzag(2)->is_leq("a1", "a2"));
    CHECK(zigzag(7)->is_connected());
    CHECK_THROWS_AS(zigzag(0), Error);
  }

  TEST_CASE("chain products") {
    auto p = chain_product(3, 2);
    CHECK(p->size() == 6);
    CHECK(p->covered_by("(2,2)") == strs({"(1,2)", "(2,1)"}));
    CHECK(p->covers_of("(1,1)") == strs({"(1,2)", "(2,1)"}));
    CHECK(p->rank(p->index("(3,2)")) == 3);
    CHECK(chain_product(1, 1)->size() == 1);
    auto diamond = chain_product(2, 2);
    CHECK(diamond->cover_pairs().size() == 4);
    CHECK(diamond->minimal_elements().size() == 1);
    CHECK(diamond->maximal_elements().size() == 1);
  }

  TEST_CASE("root posets") {
    CHECK(*root_poset_A(3) == *testing::load("a3.poset"));
    CHECK(root_poset_A(1)->size() == 1);
    auto v = root_poset_A(2);
    CHECK(v->size() == 3);
    CHECK(v->covered_by("c") == strs({"a", "b"}));
    CHECK(root_poset_A(4)->size() == 10);
    CHECK(root_poset_A(7)->size() == 28);
    CHECK(letter_name(0) == "a");
    CHECK(letter_name(25) == "z");
    CHECK(letter_name(26) == "aa");
  }
}

TEST_SUITE("poset-io") {
  TEST_CASE("parse and format round trip") {
    auto p = parse_poset("# c\nelements a b c d e f\ncover a d # x\ncover b d\ncover b e\ncover c e\ncover d f\ncover e f\n");
    CHECK(*p == *root_poset_A(3));
    auto again = parse_poset(format_poset(*p));
    CHECK(*again == *p);
  }

  TEST_CASE("parse errors carry line numbers") {
    try {
      parse_poset("elements a b\n\ncover a\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_poset("cover a b\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("elements a\nelements b\n"), ParseError);
    CHECK_THROWS_AS(testing::load("bad_directive.poset"), ParseError);
    CHECK_THROWS_AS(testing::load("cycle.poset"), CycleError);
  }

  TEST_CASE("builtins") {
    CHECK(*load_poset("builtin:zigzag:6") == *zigzag(6));
    CHECK(*load_poset("builtin:chainproduct:3x2") == *chain_product(3, 2));
    CHECK(*load_poset("builtin:rootA:3") == *root_poset_A(3));
    CHECK(load_poset("builtin:chain:4")->size() == 4);
    CHECK(load_poset("builtin:antichain:2")->size() == 2);
    for (const char* bad : {"builtin:zigzag", "builtin:zigzag:0", "builtin:zigzag:x", "builtin:cube:3",
                            "builtin:chainproduct:3", "/no/such/file"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(load_poset(bad), ParseError);
    }
  }
}
