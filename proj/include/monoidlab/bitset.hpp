#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "monoidlab/common.hpp"

namespace monoidlab {

  // Fixed-width dynamic bitset. Bit i of the code is element i, so for widths
  // up to 64 the set is identified with the integer returned by code().
  class BitSet {
   public:
    BitSet() = default;
    explicit BitSet(std::size_t nbits) : _nbits(nbits), _words((nbits + 63) / 64, 0) {}

    static BitSet from_code(std::uint64_t code, std::size_t nbits) {
      BitSet s(nbits);
      if (nbits < 64) {
        code &= (std::uint64_t{1} << nbits) - 1;
      }
      if (!s._words.empty()) {
        s._words[0] = code;
      }
      return s;
    }

    std::size_t size() const noexcept {
      return _nbits;
    }

    bool test(std::size_t i) const noexcept {
      return (_words[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) noexcept {
      _words[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) noexcept {
      _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void set_all() noexcept {
      for (auto& w : _words) {
        w = ~std::uint64_t{0};
      }
      trim();
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }
    bool none() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }
    bool all() const noexcept {
      return count() == _nbits;
    }

    bool is_subset_of(BitSet const& other) const noexcept {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        if ((_words[w] & ~other._words[w]) != 0) {
          return false;
        }
      }
      return true;
    }
    bool intersects(BitSet const& other) const noexcept {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        if ((_words[w] & other._words[w]) != 0) {
          return true;
        }
      }
      return false;
    }

    BitSet& operator|=(BitSet const& other) noexcept {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        _words[w] |= other._words[w];
      }
      return *this;
    }
    BitSet& operator&=(BitSet const& other) noexcept {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        _words[w] &= other._words[w];
      }
      return *this;
    }
    friend BitSet operator|(BitSet x, BitSet const& y) {
      x |= y;
      return x;
    }
    friend BitSet operator&(BitSet x, BitSet const& y) {
      x &= y;
      return x;
    }
    BitSet operator~() const {
      BitSet r(*this);
      for (auto& w : r._words) {
        w = ~w;
      }
      r.trim();
      return r;
    }

    // Highest set bit, or size() when empty.
    std::size_t highest() const noexcept {
      for (std::size_t w = _words.size(); w-- > 0;) {
        if (_words[w] != 0) {
          return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(_words[w]));
        }
      }
      return _nbits;
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        std::uint64_t word = _words[w];
        while (word != 0) {
          f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
          word &= word - 1;
        }
      }
    }

    // Valid only for size() <= 64.
    std::uint64_t code() const noexcept {
      return _words.empty() ? 0 : _words[0];
    }

    std::vector<std::uint64_t> const& words() const noexcept {
      return _words;
    }

    friend bool operator==(BitSet const&, BitSet const&) = default;

    // Orders sets by their integer code (most significant word first).
    friend std::strong_ordering operator<=>(BitSet const& x, BitSet const& y) noexcept {
      if (x._nbits != y._nbits) {
        return x._nbits <=> y._nbits;
      }
      for (std::size_t w = x._words.size(); w-- > 0;) {
        if (x._words[w] != y._words[w]) {
          return x._words[w] <=> y._words[w];
        }
      }
      return std::strong_ordering::equal;
    }

   private:
    void trim() noexcept {
      if (_nbits % 64 != 0 && !_words.empty()) {
        _words.back() &= (std::uint64_t{1} << (_nbits % 64)) - 1;
      }
    }

    std::size_t                _nbits = 0;
    std::vector<std::uint64_t> _words;
  };

}  // namespace monoidlab
