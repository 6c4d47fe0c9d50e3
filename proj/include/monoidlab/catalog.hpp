#pragma once

// Named small monoids and exhaustive enumeration of all monoids of order at
// most 4. Spec strings:
//   trivial          the one-element monoid
//   zn:k             cyclic group of order k
//   u1               {1, 0} with 0 absorbing (identity 0, zero 1)
//   monogenic:k,m    <x | x^(k+m) = x^k>, element i is x^i
//   t2               all self-maps of {0, 1}, identity first, x·y = "x then y"
//   sym:k            permutations of {0..k-1} in lexicographic order, k <= 5
//   cN-DIGITS        an N×N table given row-major, one digit per entry
//                    (the names enumerated monoids are exported under)

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoidlab/monoid.hpp"

namespace monoidlab {

  FiniteMonoid named(std::string_view spec);

  struct CatalogEntry {
    std::string  name;
    FiniteMonoid monoid;
    bool         regular          = false;
    bool         group            = false;
    bool         commutative      = false;
    std::size_t  idempotent_count = 0;
  };

  CatalogEntry make_entry(std::string name, FiniteMonoid m);

  // Least flattened table over all relabelings that send the identity to 0.
  std::vector<index_t> canonical_form(FiniteMonoid const& m);
  bool                 isomorphic(FiniteMonoid const& x, FiniteMonoid const& y);

  // "cN-DIGITS"; needs N <= 10 so every entry is one digit.
  std::string table_code(std::span<index_t const> table, std::size_t n);

  // All monoids on {0..n-1} with identity 0; with up_to_iso, one canonical
  // representative per class, sorted by table code. 1 <= n <= 4.
  std::vector<FiniteMonoid> enumerate_monoids(std::size_t n, bool up_to_iso);

  // Representatives of every class of order 1..max_order, named after the
  // matching named() spec where one exists (trivial, zn:2, u1, ...).
  std::vector<CatalogEntry> catalog_up_to(std::size_t max_order);

  // The fixed named list: trivial, zn:2, zn:3, u1, monogenic:2,1, t2, sym:3.
  std::vector<CatalogEntry> named_catalog();

}  // namespace monoidlab
