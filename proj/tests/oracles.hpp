#pragma once

// Independent reference implementations used as test oracles. These work
// straight from the defining formulas on plain tables and std::set, sharing
// no code with the library beyond the element order convention: triples are
// ordered by b, then the left component, then the set code, where pair
// (l, r) of a set occupies bit l·|B| + r and function codes read the tuple
// (f(0), ..., f(|B|-1)) as a base-|A| number.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

  using Table = std::vector<std::vector<int>>;

  inline int order(Table const& t) {
    return static_cast<int>(t.size());
  }

  inline std::optional<int> identity(Table const& t) {
    int const n = order(t);
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        ok = t[e][x] == x && t[x][e] == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  inline bool associative(Table const& t) {
    int const n = order(t);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (t[t[i][j]][k] != t[i][t[j][k]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline std::vector<int> inverses(Table const& t, int a) {
    std::vector<int> out;
    for (int b = 0; b < order(t); ++b) {
      if (t[t[a][b]][a] == a && t[t[b][a]][b] == b) {
        out.push_back(b);
      }
    }
    return out;
  }

  inline std::optional<int> first_non_regular(Table const& t) {
    for (int a = 0; a < order(t); ++a) {
      if (inverses(t, a).empty()) {
        return a;
      }
    }
    return std::nullopt;
  }

  inline Table cyclic(int k) {
    Table t(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        t[i][j] = (i + j) % k;
      }
    }
    return t;
  }

  inline Table semilattice() {
    return {{0, 1}, {1, 1}};
  }

  inline Table trivial() {
    return {{0}};
  }

  //////////////////////////////////////////////////////////////////////
  // A◇B on explicit triples
  //////////////////////////////////////////////////////////////////////

  using Pairs = std::set<std::pair<int, int>>;

  struct Triple {
    int   a;
    Pairs P;
    int   b;
    bool  operator==(Triple const&) const = default;
  };

  inline Triple schutz_mul(Table const& A, Table const& B, Triple const& x, Triple const& y) {
    Pairs P;
    for (auto [c, d] : x.P) {
      P.insert({c, B[d][y.b]});
    }
    for (auto [c, d] : y.P) {
      P.insert({A[x.a][c], d});
    }
    return {A[x.a][y.a], P, B[x.b][y.b]};
  }

  inline std::vector<Triple> schutz_carrier(Table const& A, Table const& B) {
    int const           na = order(A), nb = order(B), m = na * nb;
    std::vector<Triple> out;
    for (int b = 0; b < nb; ++b) {
      for (int a = 0; a < na; ++a) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
          Pairs P;
          for (int bit = 0; bit < m; ++bit) {
            if ((code >> bit) & 1u) {
              P.insert({bit / nb, bit % nb});
            }
          }
          out.push_back({a, P, b});
        }
      }
    }
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // A◇ᵥB on explicit triples
  //////////////////////////////////////////////////////////////////////

  using Fn     = std::vector<int>;
  using FnPair = std::set<std::pair<Fn, int>>;

  struct VTriple {
    Fn     f;
    FnPair P;
    int    b;
    bool   operator==(VTriple const&) const = default;
  };

  inline std::vector<Fn> all_functions(int na, int nb) {
    std::vector<Fn> out;
    Fn              f(nb, 0);
    while (true) {
      out.push_back(f);
      int pos = nb - 1;
      while (pos >= 0 && f[pos] == na - 1) {
        f[pos] = 0;
        --pos;
      }
      if (pos < 0) {
        return out;
      }
      ++f[pos];
    }
  }

  // (x)^b g = (xb)g, then pointwise f·(^b g).
  inline Fn shift(Table const& B, Fn const& g, int b) {
    Fn h(g.size());
    for (int x = 0; x < order(B); ++x) {
      h[x] = g[B[x][b]];
    }
    return h;
  }

  inline Fn pointwise(Table const& A, Fn const& f, Fn const& g) {
    Fn h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      h[x] = A[f[x]][g[x]];
    }
    return h;
  }

  inline VTriple variant_mul(Table const& A, Table const& B, VTriple const& x, VTriple const& y) {
    FnPair P = y.P;
    for (auto const& [f, d] : x.P) {
      P.insert({f, B[d][y.b]});
    }
    return {pointwise(A, x.f, shift(B, y.f, x.b)), P, B[x.b][y.b]};
  }

  inline std::vector<VTriple> variant_carrier(Table const& A, Table const& B) {
    int const            nb  = order(B);
    auto const           fns = all_functions(order(A), nb);
    int const            m   = static_cast<int>(fns.size()) * nb;
    std::vector<VTriple> out;
    for (int b = 0; b < nb; ++b) {
      for (auto const& f : fns) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
          FnPair P;
          for (int bit = 0; bit < m; ++bit) {
            if ((code >> bit) & 1u) {
              P.insert({fns[bit / nb], bit % nb});
            }
          }
          out.push_back({f, P, b});
        }
      }
    }
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // Regularity over an explicit carrier
  //////////////////////////////////////////////////////////////////////

  template <typename T, typename Mul>
  bool has_inverse(std::vector<T> const& carrier, T const& x, Mul mul) {
    for (auto const& y : carrier) {
      if (mul(mul(x, y), x) == x && mul(mul(y, x), y) == y) {
        return true;
      }
    }
    return false;
  }

  // Index of the first element without an inverse.
  template <typename T, typename Mul>
  std::optional<std::size_t> first_non_regular(std::vector<T> const& carrier, Mul mul) {
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (!has_inverse(carrier, carrier[i], mul)) {
        return i;
      }
    }
    return std::nullopt;
  }

  //////////////////////////////////////////////////////////////////////
  // Monoid enumeration without pruning, and isomorphism by relabeling
  //////////////////////////////////////////////////////////////////////

  // Every n×n table with identity 0 that is associative.
  inline std::vector<Table> all_monoids_identity_zero(int n) {
    int const          free_cells = (n - 1) * (n - 1);
    std::uint64_t      total      = 1;
    for (int i = 0; i < free_cells; ++i) {
      total *= static_cast<std::uint64_t>(n);
    }
    std::vector<Table> out;
    for (std::uint64_t code = 0; code < total; ++code) {
      Table         t(n, std::vector<int>(n));
      std::uint64_t rest = code;
      for (int x = 0; x < n; ++x) {
        t[0][x] = x;
        t[x][0] = x;
      }
      for (int c = free_cells - 1; c >= 0; --c) {
        t[c / (n - 1) + 1][c % (n - 1) + 1] = static_cast<int>(rest % n);
        rest /= n;
      }
      if (associative(t)) {
        out.push_back(t);
      }
    }
    return out;
  }

  inline bool isomorphic(Table const& x, Table const& y) {
    int const n = order(x);
    if (n != order(y)) {
      return false;
    }
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        for (int j = 0; j < n && ok; ++j) {
          ok = pi[x[i][j]] == y[pi[i]][pi[j]];
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
  }

  // Classes as lists of indices into `tables`.
  inline std::vector<std::vector<std::size_t>> iso_classes(std::vector<Table> const& tables) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      bool placed = false;
      for (auto& cls : classes) {
        if (isomorphic(tables[cls.front()], tables[i])) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) {
        classes.push_back({i});
      }
    }
    return classes;
  }

}  // namespace oracle
