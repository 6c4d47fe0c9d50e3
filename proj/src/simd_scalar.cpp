#include "monoidlab/simd.hpp"

namespace monoidlab::simd {

  namespace {

    std::size_t assoc_row_mismatch(index_t const* table,
                                   std::size_t    n,
                                   index_t        i,
                                   index_t        j) {
      index_t const* lhs   = table + std::size_t{table[i * n + j]} * n;
      index_t const* row_i = table + std::size_t{i} * n;
      index_t const* row_j = table + std::size_t{j} * n;
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs[k] != row_i[row_j[k]]) {
          return k;
        }
      }
      return n;
    }

    std::size_t inverse_scan(index_t const* table,
                             std::size_t    n,
                             index_t        a,
                             std::uint8_t*  flags) {
      index_t const* row_a = table + std::size_t{a} * n;
      std::size_t    count = 0;
      for (std::size_t b = 0; b < n; ++b) {
        index_t const aba = table[std::size_t{row_a[b]} * n + a];
        index_t const bab = table[std::size_t{table[b * n + a]} * n + b];
        bool const    ok  = aba == a && bab == b;
        flags[b]          = ok ? 1 : 0;
        count += ok;
      }
      return count;
    }

    std::size_t idempotent_scan(index_t const* table, std::size_t n, std::uint8_t* flags) {
      std::size_t count = 0;
      for (std::size_t x = 0; x < n; ++x) {
        bool const ok = table[x * n + x] == x;
        flags[x]      = ok ? 1 : 0;
        count += ok;
      }
      return count;
    }

    constexpr Kernels kScalar{Isa::scalar,
                              "scalar",
                              &assoc_row_mismatch,
                              &inverse_scan,
                              &idempotent_scan};

  }  // namespace

  Kernels const& scalar_kernels() noexcept {
    return kScalar;
  }

}  // namespace monoidlab::simd
