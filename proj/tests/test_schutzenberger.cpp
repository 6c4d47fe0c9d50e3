#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "monoidlab/catalog.hpp"
#include "monoidlab/oracle.hpp"
#include "monoidlab/schutzenberger.hpp"

using namespace monoidlab;

namespace {

  PairSet pairs(std::size_t na, std::size_t nb, std::vector<std::pair<index_t, index_t>> const& xs) {
    PairSet P(na, nb);
    for (auto [a, b] : xs) {
      P.insert(a, b);
    }
    return P;
  }

  // Code of a reference triple in the shared b-major order.
  std::uint64_t ref_code(oracle::Triple const& t, int na, int nb) {
    std::uint64_t p = 0;
    for (auto [c, d] : t.P) {
      p |= std::uint64_t{1} << (c * nb + d);
    }
    return ((static_cast<std::uint64_t>(t.b) * na + t.a) << (na * nb)) | p;
  }

  std::uint64_t fn_code(oracle::Fn const& f, int na) {
    std::uint64_t c = 0;
    for (int v : f) {
      c = c * na + v;
    }
    return c;
  }

  std::uint64_t ref_code(oracle::VTriple const& t, int na, int nb) {
    std::uint64_t nf = 1;
    for (int i = 0; i < nb; ++i) {
      nf *= na;
    }
    std::uint64_t p = 0;
    for (auto const& [f, d] : t.P) {
      p |= std::uint64_t{1} << (fn_code(f, na) * nb + d);
    }
    return ((t.b * nf + fn_code(t.f, na)) << (nf * nb)) | p;
  }

  std::vector<std::pair<char const*, char const*>> small_pairs() {
    return {{"trivial", "trivial"}, {"zn:2", "zn:2"}, {"u1", "u1"}, {"zn:2", "u1"},
            {"u1", "zn:2"},         {"zn:3", "trivial"}, {"trivial", "zn:3"}, {"monogenic:2,1", "trivial"}};
  }

}  // namespace

TEST_CASE("pairset_shift and pairset_scale") {
  auto const u1 = named("u1");
  auto const z2 = named("zn:2");
  PairSet const empty(2, 2);
  CHECK(pairset_shift(u1, empty, 1).empty());
  auto const P = pairs(2, 2, {{0, 0}, {1, 1}});
  CHECK(pairset_shift(u1, P, u1.identity()) == P);
  CHECK(pairset_shift(u1, pairs(2, 2, {{0, 0}}), 1) == pairs(2, 2, {{0, 1}}));

  CHECK(pairset_scale(z2, 0, P) == P);
  CHECK(pairset_scale(z2, 1, empty).empty());
  CHECK(pairset_scale(z2, 1, pairs(2, 2, {{1, 1}})) == pairs(2, 2, {{0, 1}}));

  // Collapsing images deduplicate.
  CHECK(pairset_shift(u1, pairs(2, 2, {{0, 0}, {0, 1}}), 1) == pairs(2, 2, {{0, 1}}));
  CHECK(pairset_shift(u1, P, 1).size() <= P.size());
}

TEST_CASE("varpairset_shift") {
  auto const u1 = named("u1");
  VarPairSet empty(4, 2);
  CHECK(varpairset_shift(u1, empty, 1).empty());
  VarPairSet P(4, 2);
  P.insert(0, 0);  // (1̄, id) with A = Z2
  CHECK(varpairset_shift(u1, P, 0) == P);
  VarPairSet Q(4, 2);
  Q.insert(0, 1);
  CHECK(varpairset_shift(u1, P, 1) == Q);
}

TEST_CASE("property: set actions compose and commute") {
  std::mt19937_64 rng(17);
  auto const      A = named("monogenic:2,1");
  auto const      B = named("t2");
  for (int rep = 0; rep < 300; ++rep) {
    PairSet P(3, 4, BitSet::from_code(rng() & 0xFFF, 12));
    index_t const b = rng() % 4, b2 = rng() % 4, a = rng() % 3, a2 = rng() % 3;
    CHECK(pairset_shift(B, pairset_shift(B, P, b), b2) == pairset_shift(B, P, B(b, b2)));
    CHECK(pairset_scale(A, a, pairset_scale(A, a2, P)) == pairset_scale(A, A(a, a2), P));
    CHECK(pairset_scale(A, a, pairset_shift(B, P, b)) == pairset_shift(B, pairset_scale(A, a, P), b));
  }
}

TEST_CASE("schutz_mul examples") {
  auto const    z2 = named("zn:2");
  SchutzProduct S(z2, z2);
  SchutzElem const x{1, pairs(2, 2, {{0, 0}}), 0};
  SchutzElem const y{0, pairs(2, 2, {{1, 1}}), 1};
  CHECK(schutz_mul(S, x, y) == SchutzElem{1, pairs(2, 2, {{0, 1}}), 1});
  CHECK(schutz_mul(S, x, S.one()) == x);
  CHECK(schutz_mul(S, S.one(), x) == x);
  SchutzElem const e1{1, PairSet(2, 2), 1};
  SchutzElem const e2{1, PairSet(2, 2), 0};
  CHECK(schutz_mul(S, e1, e2) == SchutzElem{0, PairSet(2, 2), 1});

  SchutzProduct other(named("u1"), z2);
  CHECK_THROWS_AS(schutz_mul(S, x, SchutzElem{0, PairSet(3, 2), 0}), MixedParents);
  (void) other;
}

TEST_CASE("carrier sizes and caps") {
  auto const z2 = named("zn:2");
  auto const t  = named("trivial");
  CHECK(schutz_monoid(z2, z2).monoid.order() == 64);
  auto const tt = schutz_monoid(t, t).monoid;
  CHECK(tt.order() == 2);
  CHECK(is_commutative(tt));
  CHECK(idempotents(tt).size() == 2);  // the two-element semilattice
  try {
    schutz_monoid(named("zn:4"), named("zn:4"));
    FAIL("expected CapExceeded");
  } catch (CapExceeded const& e) {
    CHECK(e.required == 4ull * 65536 * 4);
  }
  CHECK(variant_monoid(z2, z2).monoid.order() == 2048);
  CHECK(variant_monoid(t, t).monoid.order() == 2);
  try {
    variant_monoid(z2, named("zn:3"));
    FAIL("expected CapExceeded");
  } catch (CapExceeded const& e) {
    CHECK(e.required == 8ull * (1ull << 24) * 3);
  }
  CHECK_FALSE(SchutzProduct(named("zn:8"), named("zn:8")).addressable());
}

TEST_CASE("lazy A<>B matches the reference product on every pair of elements") {
  for (auto [sa, sb] : small_pairs()) {
    auto const    A = named(sa);
    auto const    B = named(sb);
    SchutzProduct S(A, B);
    auto const    ta = testing::to_table(A);
    auto const    tb = testing::to_table(B);
    auto const    carrier = oracle::schutz_carrier(ta, tb);
    int const     na = static_cast<int>(A.order()), nb = static_cast<int>(B.order());
    REQUIRE(carrier.size() == S.order());
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      REQUIRE(ref_code(carrier[i], na, nb) == i);
    }
    std::size_t mismatches = 0;
    for (std::size_t x = 0; x < carrier.size(); ++x) {
      for (std::size_t y = 0; y < carrier.size(); ++y) {
        auto const ref = ref_code(oracle::schutz_mul(ta, tb, carrier[x], carrier[y]), na, nb);
        mismatches += S.mul(x, y) != ref;
      }
    }
    CHECK_MESSAGE(mismatches == 0, sa, " <> ", sb);
  }
}

TEST_CASE("lazy A<>vB matches the reference product") {
  std::vector<std::pair<char const*, char const*>> const exhaustive{
      {"trivial", "trivial"}, {"trivial", "zn:2"}, {"zn:2", "trivial"}, {"trivial", "u1"},
      {"u1", "trivial"},      {"zn:3", "trivial"}};
  for (auto [sa, sb] : exhaustive) {
    auto const     A = named(sa);
    auto const     B = named(sb);
    VariantProduct V(A, B);
    auto const     ta = testing::to_table(A);
    auto const     tb = testing::to_table(B);
    auto const     carrier = oracle::variant_carrier(ta, tb);
    int const      na = static_cast<int>(A.order()), nb = static_cast<int>(B.order());
    REQUIRE(carrier.size() == V.order());
    for (std::size_t x = 0; x < carrier.size(); ++x) {
      REQUIRE(ref_code(carrier[x], na, nb) == x);
      for (std::size_t y = 0; y < carrier.size(); ++y) {
        REQUIRE(V.mul(x, y) == ref_code(oracle::variant_mul(ta, tb, carrier[x], carrier[y]), na, nb));
      }
    }
  }
  // Larger carriers: sampled pairs.
  std::mt19937_64 rng(23);
  for (auto [sa, sb] : std::vector<std::pair<char const*, char const*>>{{"zn:2", "zn:2"}, {"zn:2", "u1"}}) {
    auto const     A = named(sa);
    auto const     B = named(sb);
    VariantProduct V(A, B);
    auto const     ta = testing::to_table(A);
    auto const     tb = testing::to_table(B);
    auto const     carrier = oracle::variant_carrier(ta, tb);
    for (int rep = 0; rep < 20000; ++rep) {
      std::size_t const x = rng() % carrier.size();
      std::size_t const y = rng() % carrier.size();
      REQUIRE(V.mul(x, y) == ref_code(oracle::variant_mul(ta, tb, carrier[x], carrier[y]), 2, 2));
    }
  }
}

TEST_CASE("variant_mul on elements") {
  auto const     z2 = named("zn:2");
  VariantProduct V(z2, z2);
  VariantElem const x{FnFin{{0, 1}}, VarPairSet(4, 2), 1};
  VariantElem const y{FnFin{{1, 0}}, VarPairSet(4, 2), 0};
  // f·(^g h) with h = [1, 0] shifted by g giving [0, 1]; pointwise [0,1]·[0,1] = [0,0].
  auto const xy = variant_mul(V, x, y);
  CHECK(xy.f == fn_product(z2, x.f, fn_shift(z2, y.f, 1)));
  CHECK(xy.f == FnFin{{0, 0}});
  CHECK(xy.b == 1);
  CHECK(variant_mul(V, x, V.one()) == x);
  CHECK(variant_mul(V, V.one(), x) == x);

  VarPairSet P1(4, 2), P2(4, 2);
  P1.insert(1, 0);
  P2.insert(3, 1);
  VarPairSet U = P1;
  U |= P2;
  CHECK(variant_mul(V, VariantElem{one_fn(z2, z2), P1, 0}, VariantElem{one_fn(z2, z2), P2, 0})
        == VariantElem{one_fn(z2, z2), U, 0});
}

TEST_CASE("property: identities, associativity and middle-component monotonicity") {
  for (auto [sa, sb] : small_pairs()) {
    SchutzProduct S(named(sa), named(sb));
    auto const    laws = check_laws(S, 99);
    CHECK(laws.identity_ok);
    CHECK(laws.associative);
    for (std::uint64_t x = 0; x < S.order(); ++x) {
      for (std::uint64_t y = 0; y < S.order(); y += 3) {
        auto const ex  = S.decode(x);
        auto const ey  = S.decode(y);
        auto const exy = S.decode(S.mul(x, y));
        CHECK(pairset_shift(S.right(), ex.P, ey.b).bits().is_subset_of(exy.P.bits()));
      }
    }
  }
  auto const     z2 = named("zn:2");
  VariantProduct V(z2, named("u1"));
  auto const     laws = check_laws(V, 99);
  CHECK_FALSE(laws.exhaustive);
  CHECK(laws.triples == 100000);
  CHECK(laws.associative);
  CHECK(laws.identity_ok);
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 2000; ++rep) {
    std::uint64_t const x = rng() % V.order(), y = rng() % V.order();
    CHECK(V.decode(y).P.bits().is_subset_of(V.decode(V.mul(x, y)).P.bits()));
  }
}

TEST_CASE("decode and encode are inverse over the whole carrier") {
  SchutzProduct  S(named("u1"), named("zn:2"));
  VariantProduct V(named("zn:2"), named("zn:2"));
  for (std::uint64_t x = 0; x < S.order(); ++x) {
    REQUIRE(S.encode(S.decode(x)) == x);
  }
  for (std::uint64_t x = 0; x < V.order(); ++x) {
    REQUIRE(V.encode(V.decode(x)) == x);
  }
  CHECK(S.decode(S.identity()) == S.one());
  CHECK(V.decode(V.identity()) == V.one());
  CHECK_THROWS_AS(S.decode(S.order()), ForeignElement);
}

TEST_CASE("materialized tables equal the lazy products and pass validation") {
  SchutzProduct S(named("zn:2"), named("u1"));
  auto const    m = S.materialize();
  CHECK(m.monoid.identity() == S.identity());
  CHECK(m.decoding.arity() == 3);
  for (std::uint64_t x = 0; x < S.order(); ++x) {
    auto const parts = S.split(x);
    CHECK(m.decoding[x][0] == parts.a);
    CHECK(m.decoding[x][1] == parts.p);
    CHECK(m.decoding[x][2] == parts.b);
    for (std::uint64_t y = 0; y < S.order(); ++y) {
      REQUIRE(m.monoid(x, y) == S.mul(x, y));
    }
  }
}

TEST_CASE("oracle: pruned search, full scan and table regularity agree") {
  std::vector<std::pair<char const*, char const*>> const cases{
      {"trivial", "trivial"}, {"zn:2", "zn:2"}, {"u1", "u1"}, {"zn:2", "u1"}, {"u1", "zn:2"},
      {"monogenic:2,1", "trivial"}, {"trivial", "monogenic:2,1"}, {"zn:3", "trivial"}};
  for (auto [sa, sb] : cases) {
    SchutzProduct S(named(sa), named(sb));
    auto const    pruned = brute_force_regularity(S);
    auto const    full   = brute_force_regularity(S, OracleOptions{false, false});
    auto const    table  = is_regular(S.materialize().monoid);
    CHECK_MESSAGE(pruned.regular == full.regular, sa, " <> ", sb);
    CHECK(pruned.witness == full.witness);
    CHECK(table.regular == full.regular);
    if (table.witness) {
      CHECK(*full.witness == *table.witness);
    }
    auto const ta  = testing::to_table(named(sa));
    auto const tb  = testing::to_table(named(sb));
    auto const car = oracle::schutz_carrier(ta, tb);
    auto const ref = oracle::first_non_regular(
        car, [&](auto const& x, auto const& y) { return oracle::schutz_mul(ta, tb, x, y); });
    CHECK(full.regular == !ref.has_value());
    if (ref) {
      CHECK(*full.witness == *ref);
    }
  }
}

TEST_CASE("oracle: variant products with small carriers against the reference") {
  for (auto [sa, sb] : std::vector<std::pair<char const*, char const*>>{
           {"trivial", "zn:2"}, {"trivial", "u1"}, {"u1", "trivial"}, {"monogenic:2,1", "trivial"}}) {
    VariantProduct V(named(sa), named(sb));
    auto const     pruned = brute_force_regularity(V);
    auto const     full   = brute_force_regularity(V, OracleOptions{false, false});
    auto const     ta     = testing::to_table(named(sa));
    auto const     tb     = testing::to_table(named(sb));
    auto const     car    = oracle::variant_carrier(ta, tb);
    auto const     ref    = oracle::first_non_regular(
        car, [&](auto const& x, auto const& y) { return oracle::variant_mul(ta, tb, x, y); });
    CHECK(pruned.regular == full.regular);
    CHECK(pruned.witness == full.witness);
    CHECK(full.regular == !ref.has_value());
    if (ref) {
      CHECK(*full.witness == *ref);
    }
  }
}
