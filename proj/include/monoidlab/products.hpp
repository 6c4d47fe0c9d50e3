#pragma once

// Direct, semidirect and restricted wreath products of finite monoids, and
// the function space A^{⊕B} (all maps B → A; finite support is automatic
// because B is finite).
//
// Flat encodings are fixed so that reports are comparable across runs:
//   pairs (a, b)        -> a·|B| + b
//   functions f: B -> A -> mixed radix over |A|, position 0 most significant,
//                          i.e. codes order the tuples (f(0), ..., f(|B|-1))
//                          lexicographically.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "monoidlab/common.hpp"
#include "monoidlab/monoid.hpp"

namespace monoidlab {

  // Per-element components of a materialized product carrier, e.g. (a, b)
  // or (a, P-code, b), stored flat with a fixed arity.
  class DecodedCarrier {
   public:
    DecodedCarrier() = default;
    DecodedCarrier(std::size_t arity, std::vector<std::uint64_t> components)
        : _arity(arity), _components(std::move(components)) {}

    std::size_t arity() const noexcept {
      return _arity;
    }
    std::size_t size() const noexcept {
      return _arity == 0 ? 0 : _components.size() / _arity;
    }
    std::span<std::uint64_t const> operator[](std::size_t i) const noexcept {
      return {_components.data() + i * _arity, _arity};
    }

   private:
    std::size_t                _arity = 0;
    std::vector<std::uint64_t> _components;
  };

  struct MaterializedProduct {
    FiniteMonoid   monoid;
    DecodedCarrier decoding;
  };

  ////////////////////////////////////////////////////////////////////////
  // Direct product
  ////////////////////////////////////////////////////////////////////////

  inline index_t encode_pair(index_t a, index_t b, std::size_t nb) noexcept {
    return static_cast<index_t>(std::size_t{a} * nb + b);
  }
  inline std::pair<index_t, index_t> decode_pair(index_t x, std::size_t nb) noexcept {
    return {static_cast<index_t>(x / nb), static_cast<index_t>(x % nb)};
  }

  MaterializedProduct direct_product(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     std::uint64_t       cap = kMaxOracleOrder);

  ////////////////////////////////////////////////////////////////////////
  // Endomorphism actions and the semidirect product
  ////////////////////////////////////////////////////////////////////////

  // θ: B -> End(A) with θ_{b1 b2} = θ_{b1} ∘ θ_{b2}; maps()[b][a] = θ_b(a).
  class EndoAction {
   public:
    index_t apply(index_t b, index_t a) const noexcept {
      return _maps[b][a];
    }
    std::vector<std::vector<index_t>> const& maps() const noexcept {
      return _maps;
    }
    std::size_t left_order() const noexcept {
      return _na;
    }
    std::size_t right_order() const noexcept {
      return _maps.size();
    }

   private:
    friend EndoAction validate_action(FiniteMonoid const&,
                                      FiniteMonoid const&,
                                      std::vector<std::vector<index_t>>);
    EndoAction(std::size_t na, std::vector<std::vector<index_t>> maps)
        : _na(na), _maps(std::move(maps)) {}

    std::size_t                       _na;
    std::vector<std::vector<index_t>> _maps;
  };

  // Checks, reporting the first violation of each kind in this order:
  // every θ_b is an endomorphism of A, θ_{1_B} = id, and the composition law.
  EndoAction validate_action(FiniteMonoid const&               A,
                             FiniteMonoid const&               B,
                             std::vector<std::vector<index_t>> maps);

  EndoAction trivial_action(FiniteMonoid const& A, FiniteMonoid const& B);

  MaterializedProduct semidirect_product(FiniteMonoid const& A,
                                         FiniteMonoid const& B,
                                         EndoAction const&   theta,
                                         std::uint64_t       cap = kMaxOracleOrder);

  ////////////////////////////////////////////////////////////////////////
  // Functions B -> A
  ////////////////////////////////////////////////////////////////////////

  // An element of A^{⊕B}: values[x] = (x)f for every x in B.
  struct FnFin {
    std::vector<index_t> values;

    friend bool operator==(FnFin const&, FnFin const&) = default;
  };

  // Mixed-radix coding of A^{⊕B}.
  class FnSpace {
   public:
    FnSpace(std::size_t na, std::size_t nb);

    std::size_t left_order() const noexcept {
      return _na;
    }
    std::size_t right_order() const noexcept {
      return _nb;
    }
    // |A|^|B|, saturated at kSaturated.
    std::uint64_t count() const noexcept {
      return _count;
    }

    std::uint64_t encode(FnFin const& f) const;
    FnFin         decode(std::uint64_t code) const;
    index_t       value(std::uint64_t code, std::size_t x) const noexcept {
      return static_cast<index_t>((code / _weight[x]) % _na);
    }

   private:
    std::size_t                _na;
    std::size_t                _nb;
    std::uint64_t              _count;
    std::vector<std::uint64_t> _weight;  // weight of position x
  };

  FnFin one_fn(FiniteMonoid const& A, FiniteMonoid const& B);

  // (x)h = (x·b)g for every x in B.
  FnFin fn_shift(FiniteMonoid const& B, FnFin const& g, index_t b);

  // Pointwise product in A.
  FnFin fn_product(FiniteMonoid const& A, FnFin const& f, FnFin const& g);

  // The direct power A^{⊕B} as a monoid on function codes.
  MaterializedProduct function_power(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     std::uint64_t       cap = kMaxOracleOrder);

  ////////////////////////////////////////////////////////////////////////
  // Restricted wreath product A^{⊕B} × B
  ////////////////////////////////////////////////////////////////////////

  // Carrier (f, b) encoded as fcode·|B| + b; decoding rows are (fcode, b).
  MaterializedProduct wreath_product(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     std::uint64_t       cap = kMaxOracleOrder);

}  // namespace monoidlab
