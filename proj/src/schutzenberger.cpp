#include "monoidlab/schutzenberger.hpp"

#include <fmt/format.h>

namespace monoidlab {

  namespace detail {

    BitMap::BitMap(std::vector<std::size_t> const& target) : _lut((target.size() + 7) / 8) {
      for (std::size_t c = 0; c < _lut.size(); ++c) {
        for (std::size_t byte = 0; byte < 256; ++byte) {
          std::uint64_t out = 0;
          for (std::size_t bit = 0; bit < 8; ++bit) {
            std::size_t const i = 8 * c + bit;
            if (i < target.size() && ((byte >> bit) & 1u)) {
              out |= std::uint64_t{1} << target[i];
            }
          }
          _lut[c][byte] = out;
        }
      }
    }

  }  // namespace detail

  namespace {

    template <typename Set, typename F>
    Set map_pairs(Set const& P, F&& f) {
      Set out(P.left_size(), P.right_size());
      P.bits().for_each([&](std::size_t i) {
        auto [l, r] = f(i / P.right_size(), static_cast<index_t>(i % P.right_size()));
        out.insert(l, r);
      });
      return out;
    }

    std::vector<std::vector<index_t>> all_inverses(FiniteMonoid const& M) {
      std::vector<std::vector<index_t>> out(M.order());
      for (index_t a = 0; a < M.order(); ++a) {
        out[a] = inverses_of(M, a);
      }
      return out;
    }

  }  // namespace

  PairSet pairset_shift(FiniteMonoid const& B, PairSet const& P, index_t b) {
    if (P.right_size() != B.order() || b >= B.order()) {
      throw ForeignElement();
    }
    return map_pairs(P, [&](std::uint64_t c, index_t d) {
      return std::pair{c, B(d, b)};
    });
  }

  PairSet pairset_scale(FiniteMonoid const& A, index_t a, PairSet const& P) {
    if (P.left_size() != A.order() || a >= A.order()) {
      throw ForeignElement();
    }
    return map_pairs(P, [&](std::uint64_t c, index_t d) {
      return std::pair{std::uint64_t{A(a, static_cast<index_t>(c))}, d};
    });
  }

  VarPairSet varpairset_shift(FiniteMonoid const& B, VarPairSet const& P, index_t b) {
    if (P.right_size() != B.order() || b >= B.order()) {
      throw ForeignElement();
    }
    return map_pairs(P, [&](std::uint64_t f, index_t d) {
      return std::pair{f, B(d, b)};
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // SchutzProduct
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t SchutzProduct::carrier_size(std::size_t na, std::size_t nb) noexcept {
    return sat_mul(sat_mul(na, sat_pow2(sat_mul(na, nb))), nb);
  }

  SchutzProduct::SchutzProduct(FiniteMonoid A, FiniteMonoid B)
      : _A(std::move(A)),
        _B(std::move(B)),
        _m(_A.order() * _B.order()),
        _order(carrier_size(_A.order(), _B.order())),
        _addressable(_order != kSaturated && _m < 64),
        _inv_A(all_inverses(_A)),
        _inv_B(all_inverses(_B)) {
    if (!_addressable) {
      return;
    }
    std::size_t const na = _A.order();
    std::size_t const nb = _B.order();
    _mask                = (std::uint64_t{1} << _m) - 1;
    _identity            = join(_A.identity(), 0, _B.identity());
    std::vector<std::size_t> target(_m);
    for (index_t b = 0; b < nb; ++b) {
      for (std::size_t i = 0; i < _m; ++i) {
        target[i] = (i / nb) * nb + _B(static_cast<index_t>(i % nb), b);
      }
      _shift.emplace_back(target);
    }
    for (index_t a = 0; a < na; ++a) {
      for (std::size_t i = 0; i < _m; ++i) {
        target[i] = _A(a, static_cast<index_t>(i / nb)) * nb + i % nb;
      }
      _scale.emplace_back(target);
    }
  }

  void SchutzProduct::require_addressable(std::uint64_t cap) const {
    if (!_addressable || _order > cap) {
      throw CapExceeded(fmt::format("{} <> {}", _A.label(), _B.label()), _order, cap);
    }
  }

  SchutzElem SchutzProduct::one() const {
    return {_A.identity(), PairSet(_A.order(), _B.order()), _B.identity()};
  }

  SchutzElem SchutzProduct::mul(SchutzElem const& x, SchutzElem const& y) const {
    for (auto const* e : {&x, &y}) {
      if (e->a >= _A.order() || e->b >= _B.order() || e->P.left_size() != _A.order()
          || e->P.right_size() != _B.order()) {
        throw MixedParents();
      }
    }
    PairSet P = pairset_shift(_B, x.P, y.b);
    P |= pairset_scale(_A, x.a, y.P);
    return {_A(x.a, y.a), std::move(P), _B(x.b, y.b)};
  }

  std::uint64_t SchutzProduct::mul(std::uint64_t x, std::uint64_t y) const noexcept {
    auto const [a1, p1, b1] = split(x);
    auto const [a2, p2, b2] = split(y);
    return join(_A(a1, a2), _shift[b2](p1) | _scale[a1](p2), _B(b1, b2));
  }

  std::uint64_t SchutzProduct::encode(SchutzElem const& x) const {
    require_addressable();
    if (x.a >= _A.order() || x.b >= _B.order() || x.P.left_size() != _A.order()
        || x.P.right_size() != _B.order()) {
      throw MixedParents();
    }
    return join(x.a, x.P.bits().code(), x.b);
  }

  SchutzElem SchutzProduct::decode(std::uint64_t code) const {
    require_addressable();
    if (code >= _order) {
      throw ForeignElement();
    }
    auto const [a, p, b] = split(code);
    return {a, PairSet(_A.order(), _B.order(), BitSet::from_code(p, _m)), b};
  }

  MaterializedProduct SchutzProduct::materialize(std::uint64_t cap) const {
    require_addressable(cap);
    std::size_t const          n = _order;
    std::vector<index_t>       table(n * n);
    std::vector<std::uint64_t> dec;
    dec.reserve(3 * n);
    for (std::uint64_t x = 0; x < n; ++x) {
      auto const [a, p, b] = split(x);
      dec.insert(dec.end(), {a, p, b});
      for (std::uint64_t y = 0; y < n; ++y) {
        table[x * n + y] = static_cast<index_t>(mul(x, y));
      }
    }
    return {validate_table(std::move(table), n, fmt::format("({} <> {})", _A.label(), _B.label())),
            DecodedCarrier(3, std::move(dec))};
  }

  ////////////////////////////////////////////////////////////////////////
  // VariantProduct
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t VariantProduct::carrier_size(std::size_t na, std::size_t nb) noexcept {
    std::uint64_t const nf = sat_pow(na, nb);
    return sat_mul(sat_mul(nf, sat_pow2(sat_mul(nf, nb))), nb);
  }

  VariantProduct::VariantProduct(FiniteMonoid A, FiniteMonoid B)
      : _A(std::move(A)),
        _B(std::move(B)),
        _space(_A.order(), _B.order()),
        _nf(_space.count()),
        _m(sat_mul(_nf, _B.order())),
        _order(carrier_size(_A.order(), _B.order())),
        _addressable(_order != kSaturated && _m < 64) {
    for (index_t b = 0; b < _B.order(); ++b) {
      _inv_B.push_back(inverses_of(_B, b));
    }
    if (!_addressable) {
      return;
    }
    std::size_t const nb = _B.order();
    _mask                = (std::uint64_t{1} << _m) - 1;

    std::vector<FnFin> fns;
    for (std::uint64_t c = 0; c < _nf; ++c) {
      fns.push_back(_space.decode(c));
    }
    _fshift.resize(nb * _nf);
    _fmul.resize(_nf * _nf);
    for (index_t b = 0; b < nb; ++b) {
      for (std::uint64_t g = 0; g < _nf; ++g) {
        _fshift[b * _nf + g] = _space.encode(fn_shift(_B, fns[g], b));
      }
    }
    for (std::uint64_t f = 0; f < _nf; ++f) {
      for (std::uint64_t g = 0; g < _nf; ++g) {
        _fmul[f * _nf + g] = _space.encode(fn_product(_A, fns[f], fns[g]));
      }
    }
    std::vector<std::vector<index_t>> inv_A;
    for (index_t a = 0; a < _A.order(); ++a) {
      inv_A.push_back(inverses_of(_A, a));
    }
    for (std::uint64_t f = 0; f < _nf; ++f) {
      FnFin v{std::vector<index_t>(nb)};
      bool  ok = true;
      for (std::size_t x = 0; x < nb && ok; ++x) {
        auto const& inv = inv_A[fns[f].values[x]];
        ok              = !inv.empty();
        if (ok) {
          v.values[x] = inv.front();
        }
      }
      _pointwise_inverse.push_back(ok ? _space.encode(v) : kNoInverse);
    }

    std::vector<std::size_t> target(_m);
    for (index_t b = 0; b < nb; ++b) {
      for (std::size_t i = 0; i < _m; ++i) {
        target[i] = (i / nb) * nb + _B(static_cast<index_t>(i % nb), b);
      }
      _shift.emplace_back(target);
    }
    _identity = join(_space.encode(one_fn(_A, _B)), 0, _B.identity());
  }

  void VariantProduct::require_addressable(std::uint64_t cap) const {
    if (!_addressable || _order > cap) {
      throw CapExceeded(fmt::format("{} <>v {}", _A.label(), _B.label()), _order, cap);
    }
  }

  VariantElem VariantProduct::one() const {
    return {one_fn(_A, _B), VarPairSet(_nf, _B.order()), _B.identity()};
  }

  VariantElem VariantProduct::mul(VariantElem const& x, VariantElem const& y) const {
    for (auto const* e : {&x, &y}) {
      if (e->f.values.size() != _B.order() || e->b >= _B.order()
          || e->P.left_size() != _nf || e->P.right_size() != _B.order()) {
        throw MixedParents();
      }
    }
    VarPairSet P = varpairset_shift(_B, x.P, y.b);
    P |= y.P;
    return {fn_product(_A, x.f, fn_shift(_B, y.f, x.b)), std::move(P), _B(x.b, y.b)};
  }

  std::uint64_t VariantProduct::mul(std::uint64_t x, std::uint64_t y) const noexcept {
    auto const [f, p1, b1] = split(x);
    auto const [g, p2, b2] = split(y);
    return join(_fmul[f * _nf + _fshift[b1 * _nf + g]], _shift[b2](p1) | p2, _B(b1, b2));
  }

  std::uint64_t VariantProduct::encode(VariantElem const& x) const {
    require_addressable();
    if (x.b >= _B.order() || x.P.left_size() != _nf || x.P.right_size() != _B.order()) {
      throw MixedParents();
    }
    return join(_space.encode(x.f), x.P.bits().code(), x.b);
  }

  VariantElem VariantProduct::decode(std::uint64_t code) const {
    require_addressable();
    if (code >= _order) {
      throw ForeignElement();
    }
    auto const [f, p, b] = split(code);
    return {_space.decode(f), VarPairSet(_nf, _B.order(), BitSet::from_code(p, _m)), b};
  }

  MaterializedProduct VariantProduct::materialize(std::uint64_t cap) const {
    require_addressable(cap);
    std::size_t const          n = _order;
    std::vector<index_t>       table(n * n);
    std::vector<std::uint64_t> dec;
    dec.reserve(3 * n);
    for (std::uint64_t x = 0; x < n; ++x) {
      auto const [f, p, b] = split(x);
      dec.insert(dec.end(), {f, p, b});
      for (std::uint64_t y = 0; y < n; ++y) {
        table[x * n + y] = static_cast<index_t>(mul(x, y));
      }
    }
    return {validate_table(std::move(table), n, fmt::format("({} <>v {})", _A.label(), _B.label())),
            DecodedCarrier(3, std::move(dec))};
  }

  MaterializedProduct schutz_monoid(FiniteMonoid const& A,
                                    FiniteMonoid const& B,
                                    std::uint64_t       cap) {
    return SchutzProduct(A, B).materialize(cap);
  }

  MaterializedProduct variant_monoid(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     std::uint64_t       cap) {
    return VariantProduct(A, B).materialize(cap);
  }

}  // namespace monoidlab
