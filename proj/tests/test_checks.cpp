#include "doctest.h"
#include "helpers.hpp"
#include "rowmotion/checks.hpp"
#include "rowmotion/families.hpp"

using namespace rowmotion;

TEST_SUITE("checks") {
  TEST_CASE("every check passes on the small families") {
    std::vector<PosetPtr> posets{root_poset_A(3), chain_product(3, 2), chain_product(2, 2), zigzag(5),
                                 zigzag(6),       chain(3),            antichain(2),        chain(1),
                                 testing::load("grid3x3.poset"), testing::load("eleven.poset")};
    CheckOptions opts{20, 3};
    for (const auto& p : posets) {
      for (const auto& r : run_all_checks(p, opts)) {
        CAPTURE(format_poset(*p));
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.passed);
        if (!r.skipped) CHECK(r.cases > 0);
      }
    }
  }

  TEST_CASE("grading-dependent checks skip ungraded posets") {
    auto p = testing::load("eleven.poset");
    for (const char* name : {"row-rank", "antichain-gyration", "rank-conjugation", "toad-village"}) {
      auto r = run_check(name, p);
      CHECK(r.skipped);
      CHECK(r.passed);
    }
    CHECK_FALSE(run_check("t-star", p).skipped);
  }

  TEST_CASE("registry") {
    CHECK(check_names().size() == 20);
    CHECK(check_names().front() == "row-toggles");
    CHECK_THROWS_AS(run_check("no-such-check", chain(2)), Error);
  }

  TEST_CASE("seeded runs are reproducible") {
    auto p = chain_product(3, 3);
    CheckOptions opts{25, 9};
    auto a = run_check("iso-cpl", p, opts);
    auto b = run_check("iso-cpl", p, opts);
    CHECK(a.passed);
    CHECK(a.cases == b.cases);
    Rng x(42), y(42);
    for (int i = 0; i < 20; ++i) CHECK(random_chain_point(p, x) == random_chain_point(p, y));
    Rng z(1);
    for (int i = 0; i < 1000; ++i) CHECK(z.below(7) < 7);
    CHECK_THROWS_AS(z.below(0), Error);
  }

  TEST_CASE("random chain points stay in the polytope and hit its boundary") {
    Rng rng(2);
    auto p = root_poset_A(3);
    int tight = 0;
    for (int i = 0; i < 200; ++i) {
      auto g = random_chain_point(p, rng);
      CHECK(g.check(LabelSpace::ChainPolytope).member);
      if (or_transfer(g)[0] == 1 || or_transfer(g)[1] == 1 || or_transfer(g)[2] == 1) ++tight;
    }
    CHECK(tight > 0);
  }
}
