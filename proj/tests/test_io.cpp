#include "doctest.h"

#include <filesystem>
#include <random>

#include <fmt/format.h>

#include "helpers.hpp"
#include "monoidlab/catalog.hpp"
#include "monoidlab/io.hpp"
#include "monoidlab/products.hpp"

using namespace monoidlab;
namespace fs = std::filesystem;

TEST_CASE("parse a .mon file") {
  auto const m = parse_monoid("2\n0 1\n1 1\n# label: u\n", "x");
  CHECK(m.same_table(named("u1")));
  CHECK(m.label() == "u");
  CHECK(parse_monoid("  3\n0 1 2\n1 2 0\n2 0 1\n\n# note\n", "z").label() == "z");
}

TEST_CASE("out-of-range entries report line and column") {
  try {
    parse_monoid("2\n0 1\n1  2\n", "x");
    FAIL("expected EntryOutOfRange");
  } catch (EntryOutOfRange const& e) {
    CHECK(e.row == 1);
    CHECK(e.col == 1);
    CHECK(e.value == 2);
    CHECK(e.line == 3);
    CHECK(e.column == 4);
  }
}

TEST_CASE("syntax errors") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_monoid(text, "x");
    } catch (SyntaxError const& e) {
      return e.line;
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("two\n") == 1);
  CHECK(line_of("0\n") == 1);
  CHECK(line_of("2\n0 1\n") == 3);
  CHECK(line_of("2\n0 1\n1 1 1\n") == 3);
  CHECK(line_of("2\n0 x\n1 1\n") == 2);
  CHECK(line_of("2\n0 1\n1 1\n0 0\n") == 4);
  CHECK_THROWS_AS(parse_monoid("2\n1 1\n1 1\n", "x"), NoIdentity);
}

TEST_CASE("property: format/parse round trip") {
  std::mt19937_64 rng(5);
  std::vector<FiniteMonoid> ms = testing::small_monoids();
  ms.push_back(named("sym:3"));
  ms.push_back(named("t2"));
  for (auto const& m : ms) {
    auto const s = testing::shuffled(m, rng);
    auto const r = parse_monoid(format_monoid(s), "other");
    CHECK(r.same_table(s));
    CHECK(r.label() == s.label());
  }
}

TEST_CASE("actions") {
  auto const raw = parse_action("3 2\n0 1 2\n0 2 1\n");
  CHECK(raw.left_order == 3);
  CHECK(raw.right_order == 2);
  auto const theta = validate_action(named("zn:3"), named("zn:2"), raw.maps);
  CHECK(parse_action(format_action(theta)).maps == raw.maps);
  try {
    parse_action("3 2\n0 1 2\n0 5 1\n");
    FAIL("expected EntryOutOfRange");
  } catch (EntryOutOfRange const& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 3);
  }
  CHECK_THROWS_AS(parse_action("3\n0 1 2\n"), SyntaxError);
}

TEST_CASE("decoding sidecar") {
  auto const p = direct_product(named("u1"), named("zn:2"));
  CHECK(format_decoding(p.decoding) == "0 0\n0 1\n1 0\n1 1\n");
}

TEST_CASE("files: atomic write, read back, resolve") {
  auto const dir = fs::temp_directory_path() / fmt::format("monoidlab_io_{}", std::random_device{}());
  fs::create_directories(dir);
  auto const path = dir / "z3.mon";
  write_file_atomic(path, format_monoid(named("zn:3")));
  write_file_atomic(path, format_monoid(named("zn:3")));
  CHECK(read_monoid_file(path).same_table(named("zn:3")));
  CHECK(resolve_monoid(path.string()).same_table(named("zn:3")));
  CHECK(resolve_monoid("u1").same_table(named("u1")));
  std::size_t files = 0;
  for ([[maybe_unused]] auto const& e : fs::directory_iterator(dir)) {
    ++files;
  }
  CHECK(files == 1);
  CHECK_THROWS_AS(read_text_file(dir / "missing.mon"), Error);
  fs::remove_all(dir);
}
