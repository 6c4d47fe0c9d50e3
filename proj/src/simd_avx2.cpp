// Compiled with -mavx2. Nothing here may run before the dispatcher has
// confirmed AVX2 support on the host CPU.

#include <immintrin.h>

#include "monoidlab/simd.hpp"

namespace monoidlab::simd {

  namespace {

    constexpr std::size_t kLanes = 8;

    // Largest n for which every flat offset row*n + col fits an int32 lane.
    constexpr std::size_t kMaxGatherOrder = 46'340;

    inline unsigned eq_mask(__m256i x, __m256i y) {
      return static_cast<unsigned>(
          _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, y))));
    }

    std::size_t assoc_row_mismatch(index_t const* table,
                                   std::size_t    n,
                                   index_t        i,
                                   index_t        j) {
      index_t const* lhs   = table + std::size_t{table[i * n + j]} * n;
      index_t const* row_i = table + std::size_t{i} * n;
      index_t const* row_j = table + std::size_t{j} * n;
      auto const*    base  = reinterpret_cast<int const*>(row_i);

      std::size_t k = 0;
      for (; k + kLanes <= n; k += kLanes) {
        __m256i const idx = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(row_j + k));
        __m256i const rhs = _mm256_i32gather_epi32(base, idx, 4);
        __m256i const l   = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(lhs + k));
        unsigned const m  = eq_mask(l, rhs);
        if (m != 0xFFu) {
          return k + static_cast<std::size_t>(__builtin_ctz(~m));
        }
      }
      for (; k < n; ++k) {
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
      if (n > kMaxGatherOrder) {
        return scalar_kernels().inverse_scan(table, n, a, flags);
      }
      index_t const* row_a = table + std::size_t{a} * n;
      auto const*    base  = reinterpret_cast<int const*>(table);
      __m256i const  vn    = _mm256_set1_epi32(static_cast<int>(n));
      __m256i const  va    = _mm256_set1_epi32(static_cast<int>(a));
      __m256i const  step  = _mm256_set1_epi32(static_cast<int>(kLanes));
      __m256i        vb    = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

      std::size_t count = 0;
      std::size_t b     = 0;
      for (; b + kLanes <= n; b += kLanes) {
        __m256i const ab  = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(row_a + b));
        __m256i const aba = _mm256_i32gather_epi32(
            base, _mm256_add_epi32(_mm256_mullo_epi32(ab, vn), va), 4);
        __m256i const ba = _mm256_i32gather_epi32(
            base, _mm256_add_epi32(_mm256_mullo_epi32(vb, vn), va), 4);
        __m256i const bab = _mm256_i32gather_epi32(
            base, _mm256_add_epi32(_mm256_mullo_epi32(ba, vn), vb), 4);
        unsigned const m = eq_mask(aba, va) & eq_mask(bab, vb);
        for (std::size_t l = 0; l < kLanes; ++l) {
          flags[b + l] = static_cast<std::uint8_t>((m >> l) & 1u);
        }
        count += static_cast<std::size_t>(__builtin_popcount(m));
        vb = _mm256_add_epi32(vb, step);
      }
      for (; b < n; ++b) {
        index_t const aba = table[std::size_t{row_a[b]} * n + a];
        index_t const bab = table[std::size_t{table[b * n + a]} * n + b];
        bool const    ok  = aba == a && bab == b;
        flags[b]          = ok ? 1 : 0;
        count += ok;
      }
      return count;
    }

    std::size_t idempotent_scan(index_t const* table, std::size_t n, std::uint8_t* flags) {
      if (n > kMaxGatherOrder) {
        return scalar_kernels().idempotent_scan(table, n, flags);
      }
      auto const*   base   = reinterpret_cast<int const*>(table);
      __m256i const stride = _mm256_set1_epi32(static_cast<int>(n + 1));
      __m256i const step   = _mm256_set1_epi32(static_cast<int>(kLanes));
      __m256i       vx     = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

      std::size_t count = 0;
      std::size_t x     = 0;
      for (; x + kLanes <= n; x += kLanes) {
        __m256i const diag = _mm256_i32gather_epi32(base, _mm256_mullo_epi32(vx, stride), 4);
        unsigned const m   = eq_mask(diag, vx);
        for (std::size_t l = 0; l < kLanes; ++l) {
          flags[x + l] = static_cast<std::uint8_t>((m >> l) & 1u);
        }
        count += static_cast<std::size_t>(__builtin_popcount(m));
        vx = _mm256_add_epi32(vx, step);
      }
      for (; x < n; ++x) {
        bool const ok = table[x * n + x] == x;
        flags[x]      = ok ? 1 : 0;
        count += ok;
      }
      return count;
    }

    constexpr Kernels kAvx2{Isa::avx2,
                            "avx2",
                            &assoc_row_mismatch,
                            &inverse_scan,
                            &idempotent_scan};

  }  // namespace

  namespace detail {
    Kernels const& avx2_table() noexcept {
      return kAvx2;
    }
  }  // namespace detail

}  // namespace monoidlab::simd
