#include "monoidlab/common.hpp"

#include <fmt/format.h>

namespace monoidlab {

  std::string size_to_string(std::uint64_t size) {
    if (size == kSaturated) {
      return ">= 2^64";
    }
    return std::to_string(size);
  }

  EntryOutOfRange::EntryOutOfRange(std::size_t row, std::size_t col, long long value)
      : TableError(fmt::format(
          "EntryOutOfRange: entry ({}, {}) = {} is not a valid index", row, col, value)),
        row(row),
        col(col),
        value(value) {}

  EntryOutOfRange::EntryOutOfRange(std::size_t row,
                                   std::size_t col,
                                   long long   value,
                                   std::size_t line,
                                   std::size_t column)
      : TableError(fmt::format("EntryOutOfRange: entry ({}, {}) = {} is not a valid "
                               "index (line {}, column {})",
                               row,
                               col,
                               value,
                               line,
                               column)),
        row(row),
        col(col),
        value(value),
        line(line),
        column(column) {}

  NonAssociative::NonAssociative(std::size_t i, std::size_t j, std::size_t k)
      : TableError(fmt::format("NonAssociative({}, {}, {})", i, j, k)),
        i(i),
        j(j),
        k(k) {}

  NoIdentity::NoIdentity() : TableError("NoIdentity: no two-sided identity") {}

  SyntaxError::SyntaxError(std::string const& what, std::size_t line, std::size_t column)
      : Error(fmt::format("Syntax error at line {}{}: {}",
                          line,
                          column == 0 ? std::string() : fmt::format(", column {}", column),
                          what)),
        line(line),
        column(column) {}

  ForeignElement::ForeignElement()
      : Error("ForeignElement: element does not belong to this monoid") {}

  MixedParents::MixedParents()
      : Error("MixedParents: operands come from different products") {}

  CapExceeded::CapExceeded(std::string const& what, std::uint64_t required, std::uint64_t cap)
      : Error(fmt::format("CapExceeded: {} requires {} elements, cap is {}",
                          what,
                          size_to_string(required),
                          cap)),
        required(required),
        cap(cap) {}

  NotEndomorphism::NotEndomorphism(std::size_t b, std::size_t x, std::size_t y, bool unit)
      : Error(unit ? fmt::format("NotEndomorphism: theta_{} does not fix the identity", b)
                   : fmt::format("NotEndomorphism({}, {}, {})", b, x, y)),
        b(b),
        x(x),
        y(y),
        unit(unit) {}

  IdentityActionBroken::IdentityActionBroken(std::size_t a)
      : Error(fmt::format("IdentityActionBroken: theta of the identity moves {}", a)),
        a(a) {}

  CompositionLawBroken::CompositionLawBroken(std::size_t b1, std::size_t b2, std::size_t a)
      : Error(fmt::format("CompositionLawBroken({}, {}, {})", b1, b2, a)),
        b1(b1),
        b2(b2),
        a(a) {}

  UndefinedAction::UndefinedAction(std::string y, std::string x)
      : Error(fmt::format("UndefinedAction: no image for ({}, {})", y, x)),
        y(std::move(y)),
        x(std::move(x)) {}

  UnknownSpec::UnknownSpec(std::string const& spec)
      : Error(fmt::format("UnknownSpec: '{}'", spec)) {}

  BadOrder::BadOrder(std::size_t n)
      : Error(fmt::format("BadOrder: {} is outside 1..4", n)) {}

}  // namespace monoidlab
