#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace monoidlab {

  using index_t = std::uint32_t;

  // Largest carrier the brute-force oracle will touch unless overridden.
  inline constexpr std::uint64_t kMaxOracleOrder = 10'000;

  inline constexpr std::uint64_t kSaturated
      = std::numeric_limits<std::uint64_t>::max();

  // Saturating arithmetic for carrier sizes such as |A|·2^(|A||B|)·|B|.
  constexpr std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) noexcept {
    if (x == 0 || y == 0) {
      return 0;
    }
    if (x > kSaturated / y) {
      return kSaturated;
    }
    return x * y;
  }

  constexpr std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      r = sat_mul(r, base);
      if (r == kSaturated) {
        break;
      }
    }
    return r;
  }

  constexpr std::uint64_t sat_pow2(std::uint64_t exp) noexcept {
    return exp >= 64 ? kSaturated : (std::uint64_t{1} << exp);
  }

  std::string size_to_string(std::uint64_t size);

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Errors raised while validating a Cayley table.
  class TableError : public Error {
   public:
    using Error::Error;
  };

  class EntryOutOfRange : public TableError {
   public:
    EntryOutOfRange(std::size_t row, std::size_t col, long long value);
    EntryOutOfRange(std::size_t row,
                    std::size_t col,
                    long long   value,
                    std::size_t line,
                    std::size_t column);

    std::size_t                row;
    std::size_t                col;
    long long                  value;
    std::optional<std::size_t> line;
    std::optional<std::size_t> column;
  };

  class NonAssociative : public TableError {
   public:
    NonAssociative(std::size_t i, std::size_t j, std::size_t k);
    std::size_t i, j, k;
  };

  class NoIdentity : public TableError {
   public:
    NoIdentity();
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(std::string const& what, std::size_t line, std::size_t column = 0);
    std::size_t line;
    std::size_t column;
  };

  class ForeignElement : public Error {
   public:
    ForeignElement();
  };

  class MixedParents : public Error {
   public:
    MixedParents();
  };

  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::uint64_t required, std::uint64_t cap);
    std::uint64_t required;  // kSaturated when it overflows 64 bits
    std::uint64_t cap;
  };

  class NotEndomorphism : public Error {
   public:
    // unit == true means θ_b(1_A) ≠ 1_A (then x = y = 1_A).
    NotEndomorphism(std::size_t b, std::size_t x, std::size_t y, bool unit);
    std::size_t b, x, y;
    bool        unit;
  };

  class IdentityActionBroken : public Error {
   public:
    explicit IdentityActionBroken(std::size_t a);
    std::size_t a;
  };

  class CompositionLawBroken : public Error {
   public:
    CompositionLawBroken(std::size_t b1, std::size_t b2, std::size_t a);
    std::size_t b1, b2, a;
  };

  class UndefinedAction : public Error {
   public:
    UndefinedAction(std::string y, std::string x);
    std::string y, x;
  };

  class UnknownSpec : public Error {
   public:
    explicit UnknownSpec(std::string const& spec);
  };

  class BadParameter : public Error {
   public:
    using Error::Error;
  };

  class BadOrder : public Error {
   public:
    explicit BadOrder(std::size_t n);
  };

}  // namespace monoidlab
