#include "doctest.h"

#include "helpers.hpp"
#include "monoidlab/catalog.hpp"
#include "monoidlab/products.hpp"

using namespace monoidlab;

namespace {

  // θ_g = inversion on Z3, θ_e = id.
  EndoAction z3_inversion() {
    return validate_action(named("zn:3"), named("zn:2"), {{0, 1, 2}, {0, 2, 1}});
  }

  std::vector<FnFin> all_fns(FiniteMonoid const& A, FiniteMonoid const& B) {
    FnSpace const      s(A.order(), B.order());
    std::vector<FnFin> out;
    for (std::uint64_t c = 0; c < s.count(); ++c) {
      out.push_back(s.decode(c));
    }
    return out;
  }

  std::vector<FiniteMonoid> order_le_3() {
    std::vector<FiniteMonoid> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& m : enumerate_monoids(n, true)) {
        out.push_back(m);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("direct product") {
  auto const u1 = named("u1");
  auto const z3 = named("zn:3");
  CHECK(direct_product(u1, z3).monoid.order() == 6);

  auto const z2 = named("zn:2");
  auto const p  = direct_product(z2, z2);
  auto const x  = encode_pair(1, 0, 2);
  auto const y  = encode_pair(1, 1, 2);
  CHECK(decode_pair(p.monoid(x, y), 2) == std::pair<index_t, index_t>{0, 1});
  CHECK(p.monoid.identity() == encode_pair(0, 0, 2));

  auto const t = direct_product(named("trivial"), z3);
  CHECK(t.monoid.same_table(z3));

  for (index_t i = 0; i < 6; ++i) {
    auto const [a, b] = decode_pair(i, 3);
    CHECK(encode_pair(a, b, 3) == i);
    CHECK(direct_product(u1, z3).decoding[i][0] == a);
    CHECK(direct_product(u1, z3).decoding[i][1] == b);
  }
  CHECK_THROWS_AS(direct_product(named("zn:101"), named("zn:101")), CapExceeded);
}

TEST_CASE("validate_action") {
  auto const z3 = named("zn:3");
  auto const z2 = named("zn:2");
  CHECK_NOTHROW(trivial_action(z3, z2));
  CHECK_NOTHROW(z3_inversion());
  try {
    validate_action(z3, z2, {{0, 1, 2}, {0, 1, 1}});
    FAIL("expected NotEndomorphism");
  } catch (NotEndomorphism const& e) {
    CHECK(e.b == 1);
    CHECK(e.x == 1);
    CHECK(e.y == 1);
  }
  CHECK_THROWS_AS(validate_action(z3, z2, {{0, 2, 1}, {0, 2, 1}}), IdentityActionBroken);
  // θ_g = id on an automorphism-free check: θ_x for Z3 acting on itself by
  // inversion at every non-identity element breaks the composition law.
  CHECK_THROWS_AS(validate_action(z3, z3, {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}}), CompositionLawBroken);
  CHECK_THROWS_AS(validate_action(z3, z2, {{0, 1, 2}}), BadParameter);
  CHECK_THROWS_AS(validate_action(z3, z2, {{0, 1, 2}, {0, 1, 3}}), EntryOutOfRange);
}

TEST_CASE("semidirect product") {
  auto const z3 = named("zn:3");
  auto const z2 = named("zn:2");
  auto const s  = semidirect_product(z3, z2, z3_inversion());
  CHECK(s.monoid.order() == 6);
  CHECK_FALSE(is_commutative(s.monoid));
  // (x,e)·(x,g) = (x², g) and (x,g)·(x,e) = (x·θ_g(x), g) = (1, g).
  CHECK(decode_pair(s.monoid(encode_pair(1, 0, 2), encode_pair(1, 1, 2)), 2)
        == std::pair<index_t, index_t>{2, 1});
  CHECK(decode_pair(s.monoid(encode_pair(1, 1, 2), encode_pair(1, 0, 2)), 2)
        == std::pair<index_t, index_t>{0, 1});
  for (index_t x = 0; x < 6; ++x) {
    CHECK(s.monoid(s.monoid.identity(), x) == x);
  }
  CHECK(s.monoid.identity() == encode_pair(0, 0, 2));
}

TEST_CASE("property: trivial action gives the direct product table") {
  auto const ms = order_le_3();
  for (auto const& A : ms) {
    for (auto const& B : ms) {
      CHECK(semidirect_product(A, B, trivial_action(A, B)).monoid.same_table(direct_product(A, B).monoid));
    }
  }
}

TEST_CASE("fn_shift") {
  auto const z2 = named("zn:2");
  auto const z3 = named("zn:3");
  FnFin const g{{1, 2}};
  CHECK(fn_shift(z2, g, 0) == g);
  CHECK(fn_shift(z2, g, 1) == FnFin{{2, 1}});
  FnFin const c{{2, 2, 2}};
  for (index_t b = 0; b < 3; ++b) {
    CHECK(fn_shift(z3, c, b) == c);
  }
}

TEST_CASE("function space coding is a bijection in tuple order") {
  FnSpace const s(3, 2);
  CHECK(s.count() == 9);
  CHECK(s.decode(0) == FnFin{{0, 0}});
  CHECK(s.decode(1) == FnFin{{0, 1}});
  CHECK(s.decode(3) == FnFin{{1, 0}});
  for (std::uint64_t c = 0; c < 9; ++c) {
    CHECK(s.encode(s.decode(c)) == c);
    for (std::size_t x = 0; x < 2; ++x) {
      CHECK(s.value(c, x) == s.decode(c).values[x]);
    }
  }
}

TEST_CASE("property: shift composition and multiplicativity, all |A|,|B| <= 3") {
  auto const  ms       = order_le_3();
  std::size_t failures = 0;
  for (auto const& A : ms) {
    for (auto const& B : ms) {
      auto const fns = all_fns(A, B);
      for (auto const& g : fns) {
        for (index_t b1 = 0; b1 < B.order(); ++b1) {
          for (index_t b2 = 0; b2 < B.order(); ++b2) {
            failures += fn_shift(B, fn_shift(B, g, b2), b1) != fn_shift(B, g, B(b1, b2));
          }
        }
        for (auto const& f : fns) {
          for (index_t b = 0; b < B.order(); ++b) {
            failures += fn_shift(B, fn_product(A, f, g), b)
                        != fn_product(A, fn_shift(B, f, b), fn_shift(B, g, b));
          }
        }
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("wreath product") {
  auto const z2 = named("zn:2");
  auto const w  = wreath_product(z2, z2);
  CHECK(w.monoid.order() == 8);
  CHECK(is_group(w.monoid));
  CHECK(is_regular(w.monoid).regular);
  FnSpace const s(2, 2);
  CHECK(w.monoid.identity() == s.encode(one_fn(z2, z2)) * 2 + 0);

  auto const t = wreath_product(named("trivial"), named("trivial"));
  CHECK(t.monoid.order() == 1);
  CHECK_THROWS_AS(wreath_product(named("zn:4"), named("zn:7")), CapExceeded);
}

TEST_CASE("wreath product matches the reference formula") {
  auto const ms = order_le_3();
  for (auto const& A : ms) {
    for (auto const& B : ms) {
      auto const    w  = wreath_product(A, B);
      auto const    ta = testing::to_table(A);
      auto const    tb = testing::to_table(B);
      FnSpace const s(A.order(), B.order());
      std::size_t const nb = B.order();
      for (index_t x = 0; x < w.monoid.order(); ++x) {
        for (index_t y = 0; y < w.monoid.order(); ++y) {
          auto const f  = s.decode(x / nb).values;
          auto const g  = s.decode(y / nb).values;
          auto const b  = static_cast<int>(x % nb);
          auto const h  = oracle::pointwise(ta, std::vector<int>(f.begin(), f.end()),
                                            oracle::shift(tb, std::vector<int>(g.begin(), g.end()), b));
          auto const xy = w.monoid(x, y);
          auto const fh = s.decode(xy / nb).values;
          REQUIRE(std::vector<int>(fh.begin(), fh.end()) == h);
          REQUIRE(static_cast<int>(xy % nb) == tb[b][y % nb]);
        }
      }
    }
  }
}

TEST_CASE("property: the direct power of a regular monoid is regular") {
  for (auto const& A : order_le_3()) {
    for (auto const& B : order_le_3()) {
      if (sat_pow(A.order(), B.order()) > 64) {
        continue;
      }
      auto const p = function_power(A, B);
      CHECK(p.monoid.order() == sat_pow(A.order(), B.order()));
      if (is_regular(A).regular) {
        CHECK(is_regular(p.monoid).regular);
      } else {
        CHECK_FALSE(is_regular(p.monoid).regular);
      }
    }
  }
}
