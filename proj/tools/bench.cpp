// Times the table kernels in each available flavour on random tables and on
// the materialized Z2<>vZ2 table.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "monoidlab/catalog.hpp"
#include "monoidlab/schutzenberger.hpp"
#include "monoidlab/simd.hpp"

using namespace monoidlab;

namespace {

  template <typename F>
  double time_ms(F&& f) {
    auto const t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }

  void bench(simd::Kernels const& k, std::vector<index_t> const& t, std::size_t n, char const* what) {
    std::vector<std::uint8_t> flags(n);
    std::size_t               sink = 0;
    double const assoc = time_ms([&] {
      for (index_t i = 0; i < n; ++i) {
        for (index_t j = 0; j < n; ++j) {
          sink += k.assoc_row_mismatch(t.data(), n, i, j);
        }
      }
    });
    double const inv = time_ms([&] {
      for (index_t a = 0; a < n; ++a) {
        sink += k.inverse_scan(t.data(), n, a, flags.data());
      }
    });
    std::printf("%-8s %-14s n=%-5zu assoc %9.2f ms  inverses %8.2f ms  (%zu)\n", k.name, what, n, assoc,
                inv, sink);
  }

}  // namespace

int main() {
  std::mt19937_64 rng(7);
  std::size_t const    n = 512;
  std::vector<index_t> rand_table(n * n);
  for (auto& v : rand_table) {
    v = static_cast<index_t>(rng() % n);
  }
  auto const z2 = named("zn:2");
  auto const v  = VariantProduct(z2, z2).materialize();
  std::vector<index_t> const vt(v.monoid.table().begin(), v.monoid.table().end());

  std::vector<simd::Kernels const*> flavours{&simd::scalar_kernels()};
  if (auto const* a = simd::avx2_kernels()) {
    flavours.push_back(a);
  }
  for (auto const* k : flavours) {
    bench(*k, rand_table, n, "random");
    bench(*k, vt, v.monoid.order(), "Z2<>vZ2");
  }
}
