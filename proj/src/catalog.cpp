#include "monoidlab/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>

#include <fmt/format.h>

namespace monoidlab {

  namespace {

    std::size_t parse_param(std::string_view spec, std::string_view s) {
      std::size_t v   = 0;
      auto const  res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw UnknownSpec(std::string(spec));
      }
      return v;
    }

    FiniteMonoid cyclic(std::size_t k) {
      std::vector<index_t> t(k * k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          t[i * k + j] = static_cast<index_t>((i + j) % k);
        }
      }
      return validate_table(std::move(t), k, fmt::format("zn:{}", k));
    }

    FiniteMonoid monogenic(std::size_t k, std::size_t m) {
      std::size_t const    n = k + m;
      std::vector<index_t> t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t s = i + j;
          if (s >= n) {
            s = k + (s - k) % m;
          }
          t[i * n + j] = static_cast<index_t>(s);
        }
      }
      return validate_table(std::move(t), n, fmt::format("monogenic:{},{}", k, m));
    }

    // Transformations as image tuples under right-action composition.
    FiniteMonoid transformations(std::vector<std::vector<index_t>> maps, std::string label) {
      std::size_t const    n = maps.size();
      std::vector<index_t> t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<index_t> comp(maps[i].size());
          for (std::size_t p = 0; p < comp.size(); ++p) {
            comp[p] = maps[j][maps[i][p]];
          }
          auto const it = std::find(maps.begin(), maps.end(), comp);
          t[i * n + j]  = static_cast<index_t>(it - maps.begin());
        }
      }
      return validate_table(std::move(t), n, std::move(label));
    }

    FiniteMonoid from_code(std::string_view spec) {
      auto const dash = spec.find('-');
      if (dash == std::string_view::npos) {
        throw UnknownSpec(std::string(spec));
      }
      std::size_t const n      = parse_param(spec, spec.substr(1, dash - 1));
      std::string_view  digits = spec.substr(dash + 1);
      if (n == 0 || n > 10 || digits.size() != n * n) {
        throw BadParameter(fmt::format("'{}' needs exactly {} table digits", spec, n * n));
      }
      std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
      for (std::size_t i = 0; i < n * n; ++i) {
        if (digits[i] < '0' || digits[i] > '9') {
          throw UnknownSpec(std::string(spec));
        }
        rows[i / n][i % n] = digits[i] - '0';
      }
      return validate_table(rows, std::string(spec));
    }

    // Cells (i, j) with i, j >= 1, filled row-major with identity 0 fixed.
    class Enumerator {
     public:
      explicit Enumerator(std::size_t n) : _n(n), _t(n * n, kUnset) {
        for (std::size_t x = 0; x < n; ++x) {
          _t[x]     = static_cast<int>(x);
          _t[x * n] = static_cast<int>(x);
        }
      }

      template <typename F>
      void run(F&& emit) {
        fill(0, emit);
      }

     private:
      static constexpr int kUnset = -1;

      int at(int x, int y) const {
        return _t[static_cast<std::size_t>(x) * _n + static_cast<std::size_t>(y)];
      }

      // Every triple whose two parses are both determined must agree.
      bool consistent() const {
        int const n = static_cast<int>(_n);
        for (int x = 1; x < n; ++x) {
          for (int y = 1; y < n; ++y) {
            int const xy = at(x, y);
            if (xy == kUnset) {
              continue;
            }
            for (int z = 1; z < n; ++z) {
              int const yz = at(y, z);
              if (yz == kUnset) {
                continue;
              }
              int const l = at(xy, z);
              int const r = at(x, yz);
              if (l != kUnset && r != kUnset && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename F>
      void fill(std::size_t cell, F& emit) {
        std::size_t const m = _n - 1;
        if (cell == m * m) {
          std::vector<index_t> flat(_t.begin(), _t.end());
          emit(std::move(flat));
          return;
        }
        std::size_t const pos = (cell / m + 1) * _n + (cell % m + 1);
        for (std::size_t v = 0; v < _n; ++v) {
          _t[pos] = static_cast<int>(v);
          if (consistent()) {
            fill(cell + 1, emit);
          }
        }
        _t[pos] = kUnset;
      }

      std::size_t      _n;
      std::vector<int> _t;
    };

    std::vector<std::string> friendly_names(std::size_t n) {
      switch (n) {
        case 1:
          return {"trivial"};
        case 2:
          return {"zn:2", "u1"};
        case 3:
          return {"zn:3", "monogenic:2,1", "monogenic:1,2"};
        case 4:
          return {"zn:4", "t2", "monogenic:3,1", "monogenic:2,2", "monogenic:1,3"};
        default:
          return {};
      }
    }

  }  // namespace

  FiniteMonoid named(std::string_view spec) {
    auto const  colon = spec.find(':');
    auto const  head  = spec.substr(0, colon);
    auto const  args  = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    bool const  bare  = colon == std::string_view::npos;

    if (head == "trivial" && bare) {
      return validate_table(std::vector<index_t>{0}, 1, "trivial");
    }
    if (head == "u1" && bare) {
      return validate_table(std::vector<index_t>{0, 1, 1, 1}, 2, "u1");
    }
    if (head == "t2" && bare) {
      return transformations({{0, 1}, {0, 0}, {1, 0}, {1, 1}}, "t2");
    }
    if (head == "zn" && !bare) {
      std::size_t const k = parse_param(spec, args);
      if (k < 1 || k > 256) {
        throw BadParameter(fmt::format("zn:k needs 1 <= k <= 256, got {}", k));
      }
      return cyclic(k);
    }
    if (head == "monogenic" && !bare) {
      auto const comma = args.find(',');
      if (comma == std::string_view::npos) {
        throw UnknownSpec(std::string(spec));
      }
      std::size_t const k = parse_param(spec, args.substr(0, comma));
      std::size_t const m = parse_param(spec, args.substr(comma + 1));
      if (k < 1 || m < 1 || k + m > 256) {
        throw BadParameter(fmt::format("monogenic:k,m needs k, m >= 1 and k+m <= 256"));
      }
      return monogenic(k, m);
    }
    if (head == "sym" && !bare) {
      std::size_t const k = parse_param(spec, args);
      if (k < 1 || k > 5) {
        throw BadParameter(fmt::format("sym:k needs 1 <= k <= 5, got {}", k));
      }
      std::vector<index_t> p(k);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::vector<index_t>> maps;
      do {
        maps.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return transformations(std::move(maps), fmt::format("sym:{}", k));
    }
    if (bare && spec.size() > 1 && spec[0] == 'c') {
      return from_code(spec);
    }
    throw UnknownSpec(std::string(spec));
  }

  CatalogEntry make_entry(std::string name, FiniteMonoid m) {
    CatalogEntry e{std::move(name), m};
    e.regular          = is_regular(m).regular;
    e.group            = is_group(m);
    e.commutative      = is_commutative(m);
    e.idempotent_count = idempotents(m).size();
    return e;
  }

  std::vector<index_t> canonical_form(FiniteMonoid const& m) {
    std::size_t const n = m.order();
    if (n > 9) {
      throw BadOrder(n);
    }
    std::vector<index_t> rest;  // non-identity elements
    for (index_t x = 0; x < n; ++x) {
      if (x != m.identity()) {
        rest.push_back(x);
      }
    }
    std::vector<index_t> target(rest.size());
    std::iota(target.begin(), target.end(), 1);
    std::vector<index_t> pi(n), best, cur(n * n);
    do {
      pi[m.identity()] = 0;
      for (std::size_t k = 0; k < rest.size(); ++k) {
        pi[rest[k]] = target[k];
      }
      for (index_t x = 0; x < n; ++x) {
        for (index_t y = 0; y < n; ++y) {
          cur[pi[x] * n + pi[y]] = pi[m(x, y)];
        }
      }
      if (best.empty() || cur < best) {
        best = cur;
      }
    } while (std::next_permutation(target.begin(), target.end()));
    return best;
  }

  bool isomorphic(FiniteMonoid const& x, FiniteMonoid const& y) {
    return x.order() == y.order() && canonical_form(x) == canonical_form(y);
  }

  std::string table_code(std::span<index_t const> table, std::size_t n) {
    if (n > 10) {
      throw BadOrder(n);
    }
    std::string out = fmt::format("c{}-", n);
    for (index_t v : table) {
      out.push_back(static_cast<char>('0' + v));
    }
    return out;
  }

  std::vector<FiniteMonoid> enumerate_monoids(std::size_t n, bool up_to_iso) {
    if (n < 1 || n > 4) {
      throw BadOrder(n);
    }
    std::vector<std::vector<index_t>> tables;
    std::set<std::vector<index_t>>    classes;
    Enumerator(n).run([&](std::vector<index_t> t) {
      if (!up_to_iso) {
        tables.push_back(std::move(t));
        return;
      }
      classes.insert(canonical_form(validate_table(std::move(t), n, "")));
    });
    if (up_to_iso) {
      tables.assign(classes.begin(), classes.end());
    }
    std::vector<FiniteMonoid> out;
    for (auto& t : tables) {
      std::string label = table_code(t, n);
      out.push_back(validate_table(std::move(t), n, std::move(label)));
    }
    return out;
  }

  std::vector<CatalogEntry> catalog_up_to(std::size_t max_order) {
    std::vector<CatalogEntry> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      std::vector<std::pair<std::vector<index_t>, std::string>> known;
      for (auto const& name : friendly_names(n)) {
        known.emplace_back(canonical_form(named(name)), name);
      }
      for (auto const& m : enumerate_monoids(n, true)) {
        std::string name = m.label();
        for (auto const& [form, alias] : known) {
          if (std::ranges::equal(form, m.table())) {
            name = alias;
            break;
          }
        }
        out.push_back(make_entry(name, m.relabelled(name)));
      }
    }
    return out;
  }

  std::vector<CatalogEntry> named_catalog() {
    std::vector<CatalogEntry> out;
    for (std::string_view s : {"trivial", "zn:2", "zn:3", "u1", "monogenic:2,1", "t2", "sym:3"}) {
      out.push_back(make_entry(std::string(s), named(s)));
    }
    return out;
  }

}  // namespace monoidlab
