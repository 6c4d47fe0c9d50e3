#include "monoidlab/products.hpp"

#include <fmt/format.h>

namespace monoidlab {

  namespace {

    void check_cap(std::string const& what, std::uint64_t required, std::uint64_t cap) {
      if (required > cap) {
        throw CapExceeded(what, required, cap);
      }
    }

    std::string product_label(char const* op, FiniteMonoid const& A, FiniteMonoid const& B) {
      return fmt::format("({} {} {})", A.label(), op, B.label());
    }

  }  // namespace

  MaterializedProduct direct_product(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     std::uint64_t       cap) {
    std::size_t const na = A.order();
    std::size_t const nb = B.order();
    check_cap("direct product", sat_mul(na, nb), cap);
    std::size_t const    n = na * nb;
    std::vector<index_t> table(n * n);
    std::vector<std::uint64_t> dec;
    dec.reserve(2 * n);
    for (index_t x = 0; x < n; ++x) {
      auto [a1, b1] = decode_pair(x, nb);
      dec.push_back(a1);
      dec.push_back(b1);
      for (index_t y = 0; y < n; ++y) {
        auto [a2, b2]    = decode_pair(y, nb);
        table[x * n + y] = encode_pair(A(a1, a2), B(b1, b2), nb);
      }
    }
    return {validate_table(std::move(table), n, product_label("x", A, B)),
            DecodedCarrier(2, std::move(dec))};
  }

  EndoAction validate_action(FiniteMonoid const&               A,
                             FiniteMonoid const&               B,
                             std::vector<std::vector<index_t>> maps) {
    std::size_t const na = A.order();
    std::size_t const nb = B.order();
    if (maps.size() != nb) {
      throw BadParameter(
          fmt::format("action needs one map per element of B ({}), got {}", nb, maps.size()));
    }
    for (std::size_t b = 0; b < nb; ++b) {
      if (maps[b].size() != na) {
        throw BadParameter(fmt::format("map theta_{} has {} entries, expected {}",
                                       b,
                                       maps[b].size(),
                                       na));
      }
      for (std::size_t a = 0; a < na; ++a) {
        if (maps[b][a] >= na) {
          throw EntryOutOfRange(b, a, static_cast<long long>(maps[b][a]));
        }
      }
    }
    index_t const one = A.identity();
    for (std::size_t b = 0; b < nb; ++b) {
      auto const& th = maps[b];
      if (th[one] != one) {
        throw NotEndomorphism(b, one, one, true);
      }
      for (index_t x = 0; x < na; ++x) {
        for (index_t y = 0; y < na; ++y) {
          if (th[A(x, y)] != A(th[x], th[y])) {
            throw NotEndomorphism(b, x, y, false);
          }
        }
      }
    }
    for (index_t a = 0; a < na; ++a) {
      if (maps[B.identity()][a] != a) {
        throw IdentityActionBroken(a);
      }
    }
    for (index_t b1 = 0; b1 < nb; ++b1) {
      for (index_t b2 = 0; b2 < nb; ++b2) {
        auto const& composite = maps[B(b1, b2)];
        for (index_t a = 0; a < na; ++a) {
          if (composite[a] != maps[b1][maps[b2][a]]) {
            throw CompositionLawBroken(b1, b2, a);
          }
        }
      }
    }
    return EndoAction(na, std::move(maps));
  }

  EndoAction trivial_action(FiniteMonoid const& A, FiniteMonoid const& B) {
    std::vector<index_t> id(A.order());
    for (index_t a = 0; a < A.order(); ++a) {
      id[a] = a;
    }
    return validate_action(A, B, std::vector<std::vector<index_t>>(B.order(), id));
  }

  MaterializedProduct semidirect_product(FiniteMonoid const& A,
                                         FiniteMonoid const& B,
                                         EndoAction const&   theta,
                                         std::uint64_t       cap) {
    std::size_t const na = A.order();
    std::size_t const nb = B.order();
    if (theta.left_order() != na || theta.right_order() != nb) {
      throw MixedParents();
    }
    check_cap("semidirect product", sat_mul(na, nb), cap);
    std::size_t const          n = na * nb;
    std::vector<index_t>       table(n * n);
    std::vector<std::uint64_t> dec;
    dec.reserve(2 * n);
    for (index_t x = 0; x < n; ++x) {
      auto [a1, b1] = decode_pair(x, nb);
      dec.push_back(a1);
      dec.push_back(b1);
      for (index_t y = 0; y < n; ++y) {
        auto [a2, b2]    = decode_pair(y, nb);
        table[x * n + y] = encode_pair(A(a1, theta.apply(b1, a2)), B(b1, b2), nb);
      }
    }
    return {validate_table(std::move(table), n, product_label("x|", A, B)),
            DecodedCarrier(2, std::move(dec))};
  }

  FnSpace::FnSpace(std::size_t na, std::size_t nb)
      : _na(na), _nb(nb), _count(sat_pow(na, nb)), _weight(nb) {
    std::uint64_t w = 1;
    for (std::size_t x = nb; x-- > 0;) {
      _weight[x] = w;
      w          = sat_mul(w, na);
    }
  }

  std::uint64_t FnSpace::encode(FnFin const& f) const {
    if (f.values.size() != _nb) {
      throw BadParameter("function has the wrong length");
    }
    if (_count == kSaturated) {
      throw CapExceeded("function coding", _count, kSaturated - 1);
    }
    std::uint64_t code = 0;
    for (std::size_t x = 0; x < _nb; ++x) {
      if (f.values[x] >= _na) {
        throw ForeignElement();
      }
      code = code * _na + f.values[x];
    }
    return code;
  }

  FnFin FnSpace::decode(std::uint64_t code) const {
    FnFin f{std::vector<index_t>(_nb)};
    for (std::size_t x = _nb; x-- > 0;) {
      f.values[x] = static_cast<index_t>(code % _na);
      code /= _na;
    }
    return f;
  }

  FnFin one_fn(FiniteMonoid const& A, FiniteMonoid const& B) {
    return FnFin{std::vector<index_t>(B.order(), A.identity())};
  }

  FnFin fn_shift(FiniteMonoid const& B, FnFin const& g, index_t b) {
    if (g.values.size() != B.order() || b >= B.order()) {
      throw ForeignElement();
    }
    FnFin h{std::vector<index_t>(B.order())};
    for (index_t x = 0; x < B.order(); ++x) {
      h.values[x] = g.values[B(x, b)];
    }
    return h;
  }

  FnFin fn_product(FiniteMonoid const& A, FnFin const& f, FnFin const& g) {
    if (f.values.size() != g.values.size()) {
      throw MixedParents();
    }
    FnFin h{std::vector<index_t>(f.values.size())};
    for (std::size_t x = 0; x < f.values.size(); ++x) {
      if (f.values[x] >= A.order() || g.values[x] >= A.order()) {
        throw ForeignElement();
      }
      h.values[x] = A(f.values[x], g.values[x]);
    }
    return h;
  }

  MaterializedProduct function_power(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     std::uint64_t       cap) {
    FnSpace const space(A.order(), B.order());
    check_cap("function power", space.count(), cap);
    std::size_t const          n = space.count();
    std::vector<FnFin>         fns;
    std::vector<std::uint64_t> dec(n);
    fns.reserve(n);
    for (std::uint64_t c = 0; c < n; ++c) {
      fns.push_back(space.decode(c));
      dec[c] = c;
    }
    std::vector<index_t> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[x * n + y] = static_cast<index_t>(space.encode(fn_product(A, fns[x], fns[y])));
      }
    }
    return {validate_table(std::move(table), n, fmt::format("{}^{}", A.label(), B.label())),
            DecodedCarrier(1, std::move(dec))};
  }

  MaterializedProduct wreath_product(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     std::uint64_t       cap) {
    FnSpace const     space(A.order(), B.order());
    std::size_t const nb = B.order();
    check_cap("wreath product", sat_mul(space.count(), nb), cap);
    std::size_t const  nf = space.count();
    std::size_t const  n  = nf * nb;
    std::vector<FnFin> fns;
    fns.reserve(nf);
    for (std::uint64_t c = 0; c < nf; ++c) {
      fns.push_back(space.decode(c));
    }
    std::vector<index_t>       table(n * n);
    std::vector<std::uint64_t> dec;
    dec.reserve(2 * n);
    for (index_t x = 0; x < n; ++x) {
      auto [f, b1] = decode_pair(x, nb);
      dec.push_back(f);
      dec.push_back(b1);
      for (index_t y = 0; y < n; ++y) {
        auto [g, b2]      = decode_pair(y, nb);
        auto const h      = fn_product(A, fns[f], fn_shift(B, fns[g], b1));
        table[x * n + y]  = encode_pair(static_cast<index_t>(space.encode(h)), B(b1, b2), nb);
      }
    }
    return {validate_table(std::move(table), n, product_label("wr", A, B)),
            DecodedCarrier(2, std::move(dec))};
  }

}  // namespace monoidlab
