#pragma once

// Cayley-table inner loops, in a scalar reference flavour and an AVX2 flavour
// chosen at runtime. Every kernel takes a row-major n×n table of indices in
// [0, n) and must return exactly what the scalar version returns.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "monoidlab/common.hpp"

namespace monoidlab::simd {

  enum class Isa { scalar, avx2 };

  struct Kernels {
    Isa         isa;
    char const* name;

    // Least k with table[table[i][j]][k] != table[i][table[j][k]], or n.
    std::size_t (*assoc_row_mismatch)(index_t const* table,
                                      std::size_t    n,
                                      index_t        i,
                                      index_t        j);

    // flags[b] = 1 iff a·b·a == a and b·a·b == b; returns the number of such b.
    std::size_t (*inverse_scan)(index_t const* table,
                                std::size_t    n,
                                index_t        a,
                                std::uint8_t*  flags);

    // flags[x] = 1 iff x·x == x; returns the count.
    std::size_t (*idempotent_scan)(index_t const* table, std::size_t n, std::uint8_t* flags);
  };

  Kernels const& scalar_kernels() noexcept;

  // nullptr when the build has no AVX2 flavour or the CPU lacks AVX2.
  Kernels const* avx2_kernels() noexcept;

  // The kernels used by the library. Defaults to the best supported ISA;
  // the environment variable MONOIDLAB_SIMD=scalar|avx2 overrides it.
  Kernels const& active_kernels() noexcept;

  // Process-wide override, mainly for tests and benchmarks.
  void force_isa(Isa isa);
  void reset_isa() noexcept;

  std::string_view isa_name(Isa isa) noexcept;

  namespace detail {
    // Defined only in the AVX2 translation unit.
    Kernels const& avx2_table() noexcept;
  }  // namespace detail

}  // namespace monoidlab::simd
