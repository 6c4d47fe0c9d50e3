#pragma once

// The Schützenberger product A◇B on A × P(A×B) × B,
//   (a1, P1, b1)(a2, P2, b2) = (a1 a2, P1 b2 ∪ a1 P2, b1 b2),
// and the variant A◇ᵥB on A^{⊕B} × P(A^{⊕B}×B) × B,
//   (f, P1, b1)(g, P2, b2) = (f·ᵇ¹g, P1 b2 ∪ P2, b1 b2).
//
// Sets of pairs are membership vectors over the lexicographic enumeration of
// L×B (bit l·|B| + r). Element codes order the carrier b-major, then the
// left component (a, or the function code), then the set code:
//   code = ((b·|L| + l) << m) | Pcode,  m = |L|·|B|.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "monoidlab/bitset.hpp"
#include "monoidlab/common.hpp"
#include "monoidlab/monoid.hpp"
#include "monoidlab/products.hpp"

namespace monoidlab {

  template <typename Tag>
  class BasicPairSet {
   public:
    BasicPairSet() = default;
    BasicPairSet(std::uint64_t left_size, std::size_t right_size)
        : _left(left_size), _right(right_size), _bits(left_size * right_size) {}
    BasicPairSet(std::uint64_t left_size, std::size_t right_size, BitSet bits)
        : _left(left_size), _right(right_size), _bits(std::move(bits)) {
      if (_bits.size() != left_size * right_size) {
        throw BadParameter("membership vector has the wrong width");
      }
    }

    std::uint64_t left_size() const noexcept {
      return _left;
    }
    std::size_t right_size() const noexcept {
      return _right;
    }
    std::size_t width() const noexcept {
      return _bits.size();
    }

    bool contains(std::uint64_t l, index_t r) const noexcept {
      return _bits.test(l * _right + r);
    }
    void insert(std::uint64_t l, index_t r) {
      if (l >= _left || r >= _right) {
        throw ForeignElement();
      }
      _bits.set(l * _right + r);
    }
    bool empty() const noexcept {
      return _bits.none();
    }
    std::size_t size() const noexcept {
      return _bits.count();
    }

    // Members in canonical (left, right) order.
    std::vector<std::pair<std::uint64_t, index_t>> members() const {
      std::vector<std::pair<std::uint64_t, index_t>> out;
      _bits.for_each([&](std::size_t i) {
        out.emplace_back(i / _right, static_cast<index_t>(i % _right));
      });
      return out;
    }

    BitSet const& bits() const noexcept {
      return _bits;
    }

    BasicPairSet& operator|=(BasicPairSet const& other) {
      if (other._left != _left || other._right != _right) {
        throw MixedParents();
      }
      _bits |= other._bits;
      return *this;
    }

    friend bool operator==(BasicPairSet const&, BasicPairSet const&) = default;
    friend auto operator<=>(BasicPairSet const& x, BasicPairSet const& y) noexcept {
      return x._bits <=> y._bits;
    }

   private:
    std::uint64_t _left  = 0;
    std::size_t   _right = 0;
    BitSet        _bits;
  };

  struct ElemPairsTag {};
  struct FnPairsTag {};

  // A subset of A × B.
  using PairSet = BasicPairSet<ElemPairsTag>;
  // A subset of A^{⊕B} × B, left components given by function codes.
  using VarPairSet = BasicPairSet<FnPairsTag>;

  // Pb = {(c, d·b) : (c, d) ∈ P}.
  PairSet pairset_shift(FiniteMonoid const& B, PairSet const& P, index_t b);
  // aP = {(a·c, d) : (c, d) ∈ P}.
  PairSet pairset_scale(FiniteMonoid const& A, index_t a, PairSet const& P);
  // Pb = {(f, d·b) : (f, d) ∈ P}.
  VarPairSet varpairset_shift(FiniteMonoid const& B, VarPairSet const& P, index_t b);

  struct SchutzElem {
    index_t a = 0;
    PairSet P;
    index_t b = 0;

    friend bool operator==(SchutzElem const&, SchutzElem const&) = default;
  };

  struct VariantElem {
    FnFin      f;
    VarPairSet P;
    index_t    b = 0;

    friend bool operator==(VariantElem const&, VariantElem const&) = default;
  };

  namespace detail {
    // Byte-indexed lookup tables for a bit permutation-with-collisions
    // i -> target[i] on codes of at most 64 bits.
    class BitMap {
     public:
      BitMap() = default;
      explicit BitMap(std::vector<std::size_t> const& target);
      std::uint64_t operator()(std::uint64_t code) const noexcept {
        std::uint64_t out = 0;
        for (std::size_t c = 0; c < _lut.size(); ++c) {
          out |= _lut[c][(code >> (8 * c)) & 0xFFu];
        }
        return out;
      }

     private:
      std::vector<std::array<std::uint64_t, 256>> _lut;
    };
  }  // namespace detail

  // Lazy A◇B: element-level arithmetic, plus flat codes when the carrier is
  // addressable in 64 bits.
  class SchutzProduct {
   public:
    SchutzProduct(FiniteMonoid A, FiniteMonoid B);

    FiniteMonoid const& left() const noexcept {
      return _A;
    }
    FiniteMonoid const& right() const noexcept {
      return _B;
    }
    // Number of pairs in A×B, i.e. the width of every P.
    std::size_t pair_count() const noexcept {
      return _m;
    }

    // |A|·2^(|A||B|)·|B|, saturated.
    static std::uint64_t carrier_size(std::size_t na, std::size_t nb) noexcept;
    std::uint64_t        order() const noexcept {
      return _order;
    }
    bool addressable() const noexcept {
      return _addressable;
    }
    // Throws CapExceeded unless the carrier fits the cap and 64-bit codes.
    void require_addressable(std::uint64_t cap = kSaturated - 1) const;

    SchutzElem one() const;
    SchutzElem mul(SchutzElem const& x, SchutzElem const& y) const;

    // Code-level interface (requires addressable()).
    std::uint64_t identity() const noexcept {
      return _identity;
    }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const noexcept;
    std::uint64_t encode(SchutzElem const& x) const;
    SchutzElem    decode(std::uint64_t code) const;

    struct Parts {
      index_t       a;
      std::uint64_t p;
      index_t       b;
    };
    Parts split(std::uint64_t code) const noexcept {
      std::uint64_t const hi = code >> _m;
      return {static_cast<index_t>(hi % _A.order()),
              code & _mask,
              static_cast<index_t>(hi / _A.order())};
    }
    std::uint64_t join(index_t a, std::uint64_t p, index_t b) const noexcept {
      return ((std::uint64_t{b} * _A.order() + a) << _m) | p;
    }

    // Proof-guided inverse candidates (c, c·P·d, d) for c ∈ a⁻¹, d ∈ b⁻¹.
    template <typename F>
    bool for_each_inverse_candidate(std::uint64_t x, F&& f) const {
      auto [a, p, b] = split(x);
      for (index_t c : _inv_A[a]) {
        for (index_t d : _inv_B[b]) {
          if (f(join(c, _shift[d](_scale[c](p)), d))) {
            return true;
          }
        }
      }
      return false;
    }

    // Every y whose outer components can satisfy aca = a, cac = c and
    // bdb = b, dbd = d; any inverse of x lies in this set.
    template <typename F>
    bool for_each_in_search_space(std::uint64_t x, F&& f) const {
      auto [a, p, b] = split(x);
      (void) p;
      std::uint64_t const sets = std::uint64_t{1} << _m;
      for (index_t d : _inv_B[b]) {
        for (index_t c : _inv_A[a]) {
          for (std::uint64_t q = 0; q < sets; ++q) {
            if (f(join(c, q, d))) {
              return true;
            }
          }
        }
      }
      return false;
    }

    MaterializedProduct materialize(std::uint64_t cap = kMaxOracleOrder) const;

   private:
    FiniteMonoid                      _A;
    FiniteMonoid                      _B;
    std::size_t                       _m;
    std::uint64_t                     _order;
    bool                              _addressable;
    std::uint64_t                     _mask     = 0;
    std::uint64_t                     _identity = 0;
    std::vector<detail::BitMap>       _shift;  // per b
    std::vector<detail::BitMap>       _scale;  // per a
    std::vector<std::vector<index_t>> _inv_A;
    std::vector<std::vector<index_t>> _inv_B;
  };

  // Lazy A◇ᵥB.
  class VariantProduct {
   public:
    VariantProduct(FiniteMonoid A, FiniteMonoid B);

    FiniteMonoid const& left() const noexcept {
      return _A;
    }
    FiniteMonoid const& right() const noexcept {
      return _B;
    }
    FnSpace const& functions() const noexcept {
      return _space;
    }
    // |A^{⊕B}|·|B|, the width of every P (saturated).
    std::uint64_t pair_count() const noexcept {
      return _m;
    }

    // |A|^|B|·2^(|A|^|B|·|B|)·|B|, saturated.
    static std::uint64_t carrier_size(std::size_t na, std::size_t nb) noexcept;
    std::uint64_t        order() const noexcept {
      return _order;
    }
    bool addressable() const noexcept {
      return _addressable;
    }
    void require_addressable(std::uint64_t cap = kSaturated - 1) const;

    VariantElem one() const;
    VariantElem mul(VariantElem const& x, VariantElem const& y) const;

    std::uint64_t identity() const noexcept {
      return _identity;
    }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const noexcept;
    std::uint64_t encode(VariantElem const& x) const;
    VariantElem   decode(std::uint64_t code) const;

    struct Parts {
      std::uint64_t f;
      std::uint64_t p;
      index_t       b;
    };
    Parts split(std::uint64_t code) const noexcept {
      std::uint64_t const hi = code >> _m;
      return {hi % _nf, code & _mask, static_cast<index_t>(hi / _nf)};
    }
    std::uint64_t join(std::uint64_t f, std::uint64_t p, index_t b) const noexcept {
      return ((std::uint64_t{b} * _nf + f) << _m) | p;
    }

    // Proof-guided candidate (ᵈv, P·d, d) for d ∈ b⁻¹, where v is a
    // pointwise inverse of f (least inverse at every point).
    template <typename F>
    bool for_each_inverse_candidate(std::uint64_t x, F&& f) const {
      auto [fc, p, b] = split(x);
      std::uint64_t const v = _pointwise_inverse[fc];
      if (v == kNoInverse) {
        return false;
      }
      for (index_t d : _inv_B[b]) {
        if (f(join(_fshift[d * _nf + v], _shift[d](p), d))) {
          return true;
        }
      }
      return false;
    }

    template <typename F>
    bool for_each_in_search_space(std::uint64_t x, F&& f) const {
      index_t const       b    = split(x).b;
      std::uint64_t const sets = std::uint64_t{1} << _m;
      for (index_t d : _inv_B[b]) {
        for (std::uint64_t g = 0; g < _nf; ++g) {
          for (std::uint64_t q = 0; q < sets; ++q) {
            if (f(join(g, q, d))) {
              return true;
            }
          }
        }
      }
      return false;
    }

    MaterializedProduct materialize(std::uint64_t cap = kMaxOracleOrder) const;

   private:
    static constexpr std::uint64_t kNoInverse = kSaturated;

    FiniteMonoid                      _A;
    FiniteMonoid                      _B;
    FnSpace                           _space;
    std::uint64_t                     _nf;
    std::uint64_t                     _m;
    std::uint64_t                     _order;
    bool                              _addressable;
    std::uint64_t                     _mask     = 0;
    std::uint64_t                     _identity = 0;
    std::vector<detail::BitMap>       _shift;              // per b, on P codes
    std::vector<std::uint64_t>        _fshift;             // [b·nf + g] -> code of ᵇg
    std::vector<std::uint64_t>        _fmul;               // [f·nf + g] -> code of f·g
    std::vector<std::uint64_t>        _pointwise_inverse;  // per f
    std::vector<std::vector<index_t>> _inv_B;
  };

  // Free-function spellings of the element products.
  inline SchutzElem schutz_mul(SchutzProduct const& S, SchutzElem const& x, SchutzElem const& y) {
    return S.mul(x, y);
  }
  inline VariantElem variant_mul(VariantProduct const& V,
                                 VariantElem const&    x,
                                 VariantElem const&    y) {
    return V.mul(x, y);
  }

  MaterializedProduct schutz_monoid(FiniteMonoid const& A,
                                    FiniteMonoid const& B,
                                    std::uint64_t       cap = kMaxOracleOrder);
  MaterializedProduct variant_monoid(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     std::uint64_t       cap = kMaxOracleOrder);

}  // namespace monoidlab
