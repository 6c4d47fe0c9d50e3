#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "monoidlab/catalog.hpp"

using namespace monoidlab;

TEST_CASE("named monoids") {
  auto const t = named("trivial");
  CHECK(t.order() == 1);

  auto const u1 = named("u1");
  CHECK(u1.identity() == 0);
  CHECK(u1(1, 0) == 1);
  CHECK(u1(1, 1) == 1);
  CHECK_FALSE(is_group(u1));
  CHECK(is_regular(u1).regular);

  auto const z5 = named("zn:5");
  CHECK(z5(3, 4) == 2);
  CHECK(is_group(z5));

  // x^4 = x^2: elements 1, x, x², x³ with x⁴ -> x².
  auto const m = named("monogenic:2,2");
  CHECK(m.order() == 4);
  CHECK(m(2, 2) == 2);
  CHECK(m(3, 3) == 2);
  CHECK(m(1, 3) == 2);
  CHECK_FALSE(is_regular(m).regular);
  CHECK(is_regular(named("monogenic:1,3")).regular);

  auto const t2 = named("t2");
  CHECK(t2.order() == 4);
  CHECK_FALSE(is_commutative(t2));
  CHECK(is_regular(t2).regular);
  CHECK(idempotents(t2).size() == 3);

  auto const s3 = named("sym:3");
  CHECK(s3.order() == 6);
  CHECK(is_group(s3));
  CHECK_FALSE(is_commutative(s3));
  CHECK(named("sym:5").order() == 120);

  auto const c = named("c2-0111");
  CHECK(c.same_table(u1));
}

TEST_CASE("bad specs") {
  CHECK_THROWS_AS(named("nope"), UnknownSpec);
  CHECK_THROWS_AS(named("zn:0"), BadParameter);
  CHECK_THROWS_AS(named("zn:x"), UnknownSpec);
  CHECK_THROWS_AS(named("sym:6"), BadParameter);
  CHECK_THROWS_AS(named("monogenic:0,2"), BadParameter);
  CHECK_THROWS_AS(named("c2-011"), BadParameter);
  CHECK_THROWS_AS(named("c2-0112"), TableError);
}

TEST_CASE("monoids up to isomorphism: 1, 2, 7, 35") {
  std::array<std::size_t, 4> const expected{1, 2, 7, 35};
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(enumerate_monoids(n, true).size() == expected[n - 1]);
  }
}

TEST_CASE("labeled enumeration matches the unpruned reference, classes match") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto const ref = oracle::all_monoids_identity_zero(n);
    auto const got = enumerate_monoids(static_cast<std::size_t>(n), false);
    REQUIRE(got.size() == ref.size());
    std::set<oracle::Table> ref_set(ref.begin(), ref.end());
    for (auto const& m : got) {
      CHECK(ref_set.contains(testing::to_table(m)));
    }
    auto const classes = oracle::iso_classes(ref);
    auto const reps    = enumerate_monoids(static_cast<std::size_t>(n), true);
    CHECK(classes.size() == reps.size());
    // Every representative lands in a distinct reference class.
    std::set<std::size_t> hit;
    for (auto const& r : reps) {
      auto const tr = testing::to_table(r);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (oracle::isomorphic(tr, ref[classes[c].front()])) {
          hit.insert(c);
        }
      }
    }
    CHECK(hit.size() == classes.size());
  }
}

TEST_CASE("orbit sizes of the representatives sum to the labeled count") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t total = 0;
    for (auto const& r : enumerate_monoids(n, true)) {
      std::set<std::vector<index_t>> orbit;
      std::vector<index_t>           pi(n);
      std::iota(pi.begin(), pi.end(), 0);
      do {
        std::vector<index_t> t(n * n);
        for (index_t x = 0; x < n; ++x) {
          for (index_t y = 0; y < n; ++y) {
            t[pi[x] * n + pi[y]] = pi[r(x, y)];
          }
        }
        orbit.insert(t);
      } while (std::next_permutation(pi.begin() + 1, pi.end()));
      total += orbit.size();
    }
    CHECK(total == enumerate_monoids(n, false).size());
  }
}

TEST_CASE("order 2 classes are Z2 and U1") {
  auto const reps = enumerate_monoids(2, true);
  REQUIRE(reps.size() == 2);
  bool z = false, u = false;
  for (auto const& r : reps) {
    z = z || isomorphic(r, named("zn:2"));
    u = u || isomorphic(r, named("u1"));
  }
  CHECK(z);
  CHECK(u);
}

TEST_CASE("property: canonical form is a class invariant") {
  std::mt19937_64 rng(11);
  std::vector<FiniteMonoid> ms;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& m : enumerate_monoids(n, true)) {
      ms.push_back(m);
    }
  }
  ms.push_back(named("sym:3"));
  ms.push_back(named("monogenic:3,4"));
  for (auto const& m : ms) {
    for (int rep = 0; rep < 5; ++rep) {
      auto const s = testing::shuffled(m, rng);
      CHECK(canonical_form(s) == canonical_form(m));
      CHECK(isomorphic(s, m));
    }
  }
  CHECK_FALSE(isomorphic(named("zn:4"), named("monogenic:1,3")));
  CHECK_FALSE(isomorphic(named("zn:2"), named("zn:3")));
  CHECK_THROWS_AS(canonical_form(named("zn:10")), BadOrder);
}

TEST_CASE("catalog entries") {
  auto const cat = catalog_up_to(4);
  CHECK(cat.size() == 45);
  std::set<std::string> names;
  for (auto const& e : cat) {
    names.insert(e.name);
    CHECK(e.regular == is_regular(e.monoid).regular);
    CHECK(e.idempotent_count == idempotents(e.monoid).size());
    CHECK_NOTHROW(named(e.name));
    CHECK(isomorphic(named(e.name), e.monoid));
  }
  CHECK(names.size() == cat.size());
  for (auto const* s : {"trivial", "zn:2", "u1", "zn:3", "monogenic:2,1", "monogenic:1,2", "t2", "zn:4"}) {
    CHECK_MESSAGE(names.contains(s), s);
  }
  auto const fixed = named_catalog();
  REQUIRE(fixed.size() == 7);
  CHECK(fixed.back().name == "sym:3");
  CHECK(table_code(named("u1").table(), 2) == "c2-0111");
}
