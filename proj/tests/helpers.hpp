#pragma once

#include <random>
#include <string>
#include <vector>

#include "monoidlab/catalog.hpp"
#include "monoidlab/monoid.hpp"
#include "oracles.hpp"

namespace testing {

  inline oracle::Table to_table(monoidlab::FiniteMonoid const& m) {
    oracle::Table t(m.order(), std::vector<int>(m.order()));
    for (monoidlab::index_t i = 0; i < m.order(); ++i) {
      for (monoidlab::index_t j = 0; j < m.order(); ++j) {
        t[i][j] = static_cast<int>(m(i, j));
      }
    }
    return t;
  }

  inline monoidlab::FiniteMonoid from_table(oracle::Table const& t, std::string label = "t") {
    std::vector<std::vector<long long>> rows;
    for (auto const& r : t) {
      rows.emplace_back(r.begin(), r.end());
    }
    return monoidlab::validate_table(rows, std::move(label));
  }

  // A copy of m under a random relabeling of its carrier.
  inline monoidlab::FiniteMonoid shuffled(monoidlab::FiniteMonoid const& m, std::mt19937_64& rng) {
    std::size_t const                   n = m.order();
    std::vector<monoidlab::index_t>     pi(n);
    for (std::size_t i = 0; i < n; ++i) {
      pi[i] = static_cast<monoidlab::index_t>(i);
    }
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<monoidlab::index_t> t(n * n);
    for (monoidlab::index_t x = 0; x < n; ++x) {
      for (monoidlab::index_t y = 0; y < n; ++y) {
        t[pi[x] * n + pi[y]] = pi[m(x, y)];
      }
    }
    return monoidlab::validate_table(std::move(t), n, m.label() + "'");
  }

  // Small monoids used across the property tests.
  inline std::vector<monoidlab::FiniteMonoid> small_monoids() {
    std::vector<monoidlab::FiniteMonoid> out;
    for (char const* s : {"trivial", "zn:2", "u1", "zn:3", "monogenic:2,1", "monogenic:1,2"}) {
      out.push_back(monoidlab::named(s));
    }
    return out;
  }

}  // namespace testing
