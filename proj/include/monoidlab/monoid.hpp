#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoidlab/common.hpp"

namespace monoidlab {

  class FiniteMonoid;

  namespace detail {
    struct MonoidData {
      std::size_t          order;
      std::vector<index_t> table;  // row-major, order × order
      index_t              identity;
      std::string          label;
    };
  }  // namespace detail

  // An element index bound to the monoid it came from. Does not keep the
  // monoid alive; the owning FiniteMonoid (or a copy of it) must outlive it.
  struct Elem {
    index_t                   index = 0;
    detail::MonoidData const* owner = nullptr;

    friend bool operator==(Elem const& x, Elem const& y) noexcept {
      return x.index == y.index && x.owner == y.owner;
    }
    friend auto operator<=>(Elem const& x, Elem const& y) noexcept {
      return x.index <=> y.index;
    }
  };

  // A validated finite monoid given by its Cayley table. Immutable; copies
  // share the table.
  class FiniteMonoid {
   public:
    std::size_t order() const noexcept {
      return _data->order;
    }
    index_t identity() const noexcept {
      return _data->identity;
    }
    std::string const& label() const noexcept {
      return _data->label;
    }

    index_t operator()(index_t x, index_t y) const noexcept {
      return _data->table[std::size_t{x} * _data->order + y];
    }

    std::span<index_t const> table() const noexcept {
      return _data->table;
    }
    std::span<index_t const> row(index_t x) const noexcept {
      return {_data->table.data() + std::size_t{x} * _data->order, _data->order};
    }

    Elem elem(index_t x) const;
    Elem one() const noexcept {
      return Elem{_data->identity, _data.get()};
    }
    bool owns(Elem const& x) const noexcept {
      return x.owner == _data.get();
    }

    // Same underlying object (not structural equality).
    bool same_as(FiniteMonoid const& other) const noexcept {
      return _data == other._data;
    }
    // Structural equality: same order, identity and table.
    bool same_table(FiniteMonoid const& other) const noexcept;

    FiniteMonoid relabelled(std::string label) const;

   private:
    friend FiniteMonoid validate_table(std::vector<index_t>, std::size_t, std::string);
    explicit FiniteMonoid(std::shared_ptr<detail::MonoidData const> d) : _data(std::move(d)) {}

    std::shared_ptr<detail::MonoidData const> _data;
  };

  // Validates a flat row-major n×n table. Checks, in order: entry range,
  // associativity (first violating triple in lexicographic order), and a
  // two-sided identity, which is located automatically.
  FiniteMonoid validate_table(std::vector<index_t> flat, std::size_t n, std::string label);

  FiniteMonoid validate_table(std::vector<std::vector<long long>> const& table,
                              std::string                               label);

  // First (i, j, k) with (ij)k != i(jk), if any. Runs the active SIMD kernel.
  std::optional<std::array<std::size_t, 3>>
  first_nonassociative(std::span<index_t const> table, std::size_t n);

  Elem mul(FiniteMonoid const& m, Elem x, Elem y);

  std::vector<Elem> idempotents(FiniteMonoid const& m);

  struct InverseSet {
    Elem              element;
    std::vector<Elem> inverses;  // ascending by index
  };

  InverseSet inverse_set(FiniteMonoid const& m, Elem a);

  // Raw-index variant used by the product and theorem layers.
  std::vector<index_t> inverses_of(FiniteMonoid const& m, index_t a);

  struct RegularityVerdict {
    bool                   regular = true;
    std::optional<index_t> witness;  // least element with no inverse
  };

  RegularityVerdict is_regular(FiniteMonoid const& m);

  bool is_group(FiniteMonoid const& m);
  bool is_commutative(FiniteMonoid const& m);

}  // namespace monoidlab
