#pragma once

// Brute-force regularity over any monoid given by an element product on
// 64-bit codes. Products may expose two optional hooks:
//   for_each_inverse_candidate(x, f)  cheap guesses tried first
//   for_each_in_search_space(x, f)    a superset of all inverses of x
// Without them the search is a full scan of the carrier. Either way the
// witness is the least non-regular code.

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>

#include "monoidlab/monoid.hpp"

namespace monoidlab {

  template <typename M>
  concept LazyMonoid = requires(M const& m, std::uint64_t x) {
    { m.order() } -> std::convertible_to<std::uint64_t>;
    { m.identity() } -> std::convertible_to<std::uint64_t>;
    { m.mul(x, x) } -> std::convertible_to<std::uint64_t>;
  };

  // A FiniteMonoid seen through the lazy interface.
  class TableMonoid {
   public:
    explicit TableMonoid(FiniteMonoid const& m) : _m(&m) {}
    std::uint64_t order() const noexcept {
      return _m->order();
    }
    std::uint64_t identity() const noexcept {
      return _m->identity();
    }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const noexcept {
      return (*_m)(static_cast<index_t>(x), static_cast<index_t>(y));
    }

   private:
    FiniteMonoid const* _m;
  };

  template <LazyMonoid M>
  bool is_inverse_pair(M const& m, std::uint64_t x, std::uint64_t y) {
    return m.mul(m.mul(x, y), x) == x && m.mul(m.mul(y, x), y) == y;
  }

  struct OracleOptions {
    bool use_candidates   = true;
    bool use_search_space = true;
  };

  struct OracleResult {
    bool                         regular = true;
    std::optional<std::uint64_t> witness;
    std::uint64_t                elements_checked = 0;
    std::uint64_t                candidate_hits   = 0;  // resolved by the first guess
  };

  template <LazyMonoid M>
  std::optional<std::uint64_t> find_inverse(M const&      m,
                                            std::uint64_t x,
                                            OracleOptions opts,
                                            bool*         by_candidate = nullptr) {
    std::optional<std::uint64_t> found;
    auto                         try_y = [&](std::uint64_t y) {
      if (is_inverse_pair(m, x, y)) {
        found = y;
        return true;
      }
      return false;
    };
    if constexpr (requires { m.for_each_inverse_candidate(x, try_y); }) {
      if (opts.use_candidates && m.for_each_inverse_candidate(x, try_y)) {
        if (by_candidate != nullptr) {
          *by_candidate = true;
        }
        return found;
      }
    }
    if constexpr (requires { m.for_each_in_search_space(x, try_y); }) {
      if (opts.use_search_space) {
        m.for_each_in_search_space(x, try_y);
        return found;
      }
    }
    for (std::uint64_t y = 0; y < m.order(); ++y) {
      if (try_y(y)) {
        break;
      }
    }
    return found;
  }

  // Scans the carrier in code order and stops at the first element with an
  // empty inverse set.
  template <LazyMonoid M>
  OracleResult brute_force_regularity(M const& m, OracleOptions opts = {}) {
    OracleResult r;
    for (std::uint64_t x = 0; x < m.order(); ++x) {
      bool by_candidate = false;
      ++r.elements_checked;
      if (!find_inverse(m, x, opts, &by_candidate)) {
        r.regular = false;
        r.witness = x;
        return r;
      }
      r.candidate_hits += by_candidate;
    }
    return r;
  }

  struct LawCheck {
    bool                                        exhaustive    = true;
    std::uint64_t                               triples       = 0;
    bool                                        associative   = true;
    bool                                        identity_ok   = true;
    std::optional<std::array<std::uint64_t, 3>> failure;
  };

  // Associativity (exhaustive up to exhaustive_limit elements, otherwise
  // `samples` seeded random triples) and a full two-sided identity check.
  template <LazyMonoid M>
  LawCheck check_laws(M const&      m,
                      std::uint64_t seed,
                      std::uint64_t exhaustive_limit = 200,
                      std::uint64_t samples          = 100'000) {
    LawCheck            out;
    std::uint64_t const n = m.order();
    std::uint64_t const e = m.identity();
    for (std::uint64_t x = 0; x < n && out.identity_ok; ++x) {
      out.identity_ok = m.mul(e, x) == x && m.mul(x, e) == x;
    }
    auto check = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
      ++out.triples;
      if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z))) {
        out.associative = false;
        out.failure     = {x, y, z};
        return false;
      }
      return true;
    };
    if (n <= exhaustive_limit) {
      for (std::uint64_t x = 0; x < n; ++x) {
        for (std::uint64_t y = 0; y < n; ++y) {
          for (std::uint64_t z = 0; z < n; ++z) {
            if (!check(x, y, z)) {
              return out;
            }
          }
        }
      }
      return out;
    }
    out.exhaustive = false;
    std::mt19937_64                              rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::uint64_t const x = pick(rng);
      std::uint64_t const y = pick(rng);
      std::uint64_t const z = pick(rng);
      if (!check(x, y, z)) {
        return out;
      }
    }
    return out;
  }

}  // namespace monoidlab
