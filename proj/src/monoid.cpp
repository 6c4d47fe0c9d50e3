#include "monoidlab/monoid.hpp"

#include <array>

#include "monoidlab/simd.hpp"

namespace monoidlab {

  Elem FiniteMonoid::elem(index_t x) const {
    if (x >= order()) {
      throw ForeignElement();
    }
    return Elem{x, _data.get()};
  }

  bool FiniteMonoid::same_table(FiniteMonoid const& other) const noexcept {
    return order() == other.order() && identity() == other.identity()
           && _data->table == other._data->table;
  }

  FiniteMonoid FiniteMonoid::relabelled(std::string label) const {
    auto d   = std::make_shared<detail::MonoidData>(*_data);
    d->label = std::move(label);
    return FiniteMonoid(std::move(d));
  }

  std::optional<std::array<std::size_t, 3>>
  first_nonassociative(std::span<index_t const> table, std::size_t n) {
    auto const& k = simd::active_kernels();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t const bad = k.assoc_row_mismatch(
            table.data(), n, static_cast<index_t>(i), static_cast<index_t>(j));
        if (bad != n) {
          return std::array<std::size_t, 3>{i, j, bad};
        }
      }
    }
    return std::nullopt;
  }

  FiniteMonoid validate_table(std::vector<index_t> flat, std::size_t n, std::string label) {
    if (n == 0) {
      throw BadParameter("a monoid table needs at least one element");
    }
    if (flat.size() != n * n) {
      throw BadParameter("table size does not match its order");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (flat[i * n + j] >= n) {
          throw EntryOutOfRange(i, j, static_cast<long long>(flat[i * n + j]));
        }
      }
    }
    if (auto bad = first_nonassociative(flat, n)) {
      throw NonAssociative((*bad)[0], (*bad)[1], (*bad)[2]);
    }
    std::optional<index_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = flat[e * n + x] == x && flat[x * n + e] == x;
      }
      if (ok) {
        identity = static_cast<index_t>(e);
      }
    }
    if (!identity) {
      throw NoIdentity();
    }
    auto d = std::make_shared<detail::MonoidData>(
        detail::MonoidData{n, std::move(flat), *identity, std::move(label)});
    return FiniteMonoid(std::move(d));
  }

  FiniteMonoid validate_table(std::vector<std::vector<long long>> const& table,
                              std::string                               label) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw BadParameter("a monoid table needs at least one element");
    }
    std::vector<index_t> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw BadParameter("table is not square");
      }
      for (std::size_t j = 0; j < n; ++j) {
        long long const v = table[i][j];
        if (v < 0 || static_cast<unsigned long long>(v) >= n) {
          throw EntryOutOfRange(i, j, v);
        }
        flat.push_back(static_cast<index_t>(v));
      }
    }
    return validate_table(std::move(flat), n, std::move(label));
  }

  Elem mul(FiniteMonoid const& m, Elem x, Elem y) {
    if (!m.owns(x) || !m.owns(y)) {
      throw ForeignElement();
    }
    return Elem{m(x.index, y.index), x.owner};
  }

  std::vector<Elem> idempotents(FiniteMonoid const& m) {
    std::vector<std::uint8_t> flags(m.order());
    simd::active_kernels().idempotent_scan(m.table().data(), m.order(), flags.data());
    std::vector<Elem> out;
    for (std::size_t x = 0; x < m.order(); ++x) {
      if (flags[x] != 0) {
        out.push_back(m.elem(static_cast<index_t>(x)));
      }
    }
    return out;
  }

  std::vector<index_t> inverses_of(FiniteMonoid const& m, index_t a) {
    std::vector<std::uint8_t> flags(m.order());
    simd::active_kernels().inverse_scan(m.table().data(), m.order(), a, flags.data());
    std::vector<index_t> out;
    for (std::size_t b = 0; b < m.order(); ++b) {
      if (flags[b] != 0) {
        out.push_back(static_cast<index_t>(b));
      }
    }
    return out;
  }

  InverseSet inverse_set(FiniteMonoid const& m, Elem a) {
    if (!m.owns(a)) {
      throw ForeignElement();
    }
    InverseSet result{a, {}};
    for (index_t b : inverses_of(m, a.index)) {
      result.inverses.push_back(m.elem(b));
    }
    return result;
  }

  RegularityVerdict is_regular(FiniteMonoid const& m) {
    auto const&               k = simd::active_kernels();
    std::vector<std::uint8_t> flags(m.order());
    for (std::size_t a = 0; a < m.order(); ++a) {
      if (k.inverse_scan(m.table().data(), m.order(), static_cast<index_t>(a), flags.data())
          == 0) {
        return {false, static_cast<index_t>(a)};
      }
    }
    return {true, std::nullopt};
  }

  bool is_group(FiniteMonoid const& m) {
    std::size_t const  n = m.order();
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        seen[m(static_cast<index_t>(i), static_cast<index_t>(j))] = 1;
      }
      if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        return false;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        seen[m(static_cast<index_t>(j), static_cast<index_t>(i))] = 1;
      }
      if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        return false;
      }
    }
    return true;
  }

  bool is_commutative(FiniteMonoid const& m) {
    std::size_t const n = m.order();
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = i + 1; j < n; ++j) {
        if (m(i, j) != m(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace monoidlab
