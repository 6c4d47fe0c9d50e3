#include <atomic>
#include <cstdlib>
#include <string>

#include "monoidlab/simd.hpp"

namespace monoidlab::simd {

  namespace {

    bool cpu_has_avx2() noexcept {
#if defined(MONOIDLAB_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    }

    Kernels const* detect() noexcept {
      char const* env = std::getenv("MONOIDLAB_SIMD");
      if (env != nullptr && std::string(env) == "scalar") {
        return &scalar_kernels();
      }
      if (auto const* k = avx2_kernels()) {
        return k;
      }
      return &scalar_kernels();
    }

    std::atomic<Kernels const*> forced{nullptr};

  }  // namespace

  Kernels const* avx2_kernels() noexcept {
#if defined(MONOIDLAB_HAVE_AVX2)
    static bool const supported = cpu_has_avx2();
    return supported ? &detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
  }

  Kernels const& active_kernels() noexcept {
    if (auto const* k = forced.load(std::memory_order_acquire)) {
      return *k;
    }
    static Kernels const* const best = detect();
    return *best;
  }

  void force_isa(Isa isa) {
    if (isa == Isa::scalar) {
      forced.store(&scalar_kernels(), std::memory_order_release);
      return;
    }
    auto const* k = avx2_kernels();
    if (k == nullptr) {
      throw Error("AVX2 kernels are not available on this host");
    }
    forced.store(k, std::memory_order_release);
  }

  void reset_isa() noexcept {
    forced.store(nullptr, std::memory_order_release);
  }

  std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
      case Isa::scalar:
        return "scalar";
      case Isa::avx2:
        return "avx2";
    }
    return "unknown";
  }

}  // namespace monoidlab::simd
