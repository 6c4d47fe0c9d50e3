#include "monoidlab/theorems.hpp"

#include <algorithm>
#include <chrono>

#include <fmt/format.h>

namespace monoidlab {

  namespace {

    using Clock = std::chrono::steady_clock;

    double ms_since(Clock::time_point t0) {
      return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }

    // {(p, q) : p ∈ left, q ∈ right} as a membership vector over L×R.
    BitSet product_mask(BitSet const& left, BitSet const& right) {
      std::size_t const nr = right.size();
      BitSet            out(left.size() * nr);
      left.for_each([&](std::size_t p) {
        right.for_each([&](std::size_t q) { out.set(p * nr + q); });
      });
      return out;
    }

    bool pairs_within(PairSet const& P, BitSet const& left, BitSet const& right) {
      bool ok = true;
      P.bits().for_each([&](std::size_t i) {
        ok = ok && left.test(i / P.right_size()) && right.test(i % P.right_size());
      });
      return ok;
    }

    // The allowed masks for T1.ii at (a, b): aA × Bb, then caA × Bbd for
    // c ∈ a⁻¹, d ∈ b⁻¹ in canonical order.
    std::vector<BitSet> thm1_masks(FiniteMonoid const&                      A,
                                   FiniteMonoid const&                      B,
                                   index_t                                  a,
                                   index_t                                  b,
                                   std::vector<std::vector<index_t>> const& inv_A,
                                   std::vector<std::vector<index_t>> const& inv_B) {
      std::vector<BitSet> masks;
      masks.push_back(product_mask(right_multiples(A, a), left_multiples(B, b)));
      for (index_t c : inv_A[a]) {
        for (index_t d : inv_B[b]) {
          masks.push_back(
              product_mask(right_multiples(A, A(c, a)), left_multiples(B, B(b, d))));
        }
      }
      return masks;
    }

    // Allowed second-coordinate sets for T2.iii at b: Bb, then Bbd.
    std::vector<BitSet> thm2_masks(FiniteMonoid const&         B,
                                   index_t                     b,
                                   std::vector<index_t> const& inv_b) {
      std::vector<BitSet> masks{left_multiples(B, b)};
      for (index_t d : inv_b) {
        masks.push_back(left_multiples(B, B(b, d)));
      }
      return masks;
    }

    std::vector<std::vector<index_t>> all_inverses(FiniteMonoid const& M) {
      std::vector<std::vector<index_t>> out(M.order());
      for (index_t a = 0; a < M.order(); ++a) {
        out[a] = inverses_of(M, a);
      }
      return out;
    }

    ConditionResult regular_factors(ConditionId id, FiniteMonoid const& A, FiniteMonoid const& B) {
      ConditionResult r;
      r.id = id;
      if (auto v = is_regular(A); !v.regular) {
        r.holds   = false;
        r.witness = FactorWitness{'A', *v.witness};
      } else if (auto w = is_regular(B); !w.regular) {
        r.holds   = false;
        r.witness = FactorWitness{'B', *w.witness};
      }
      return r;
    }

    std::vector<index_t> idempotent_indices(FiniteMonoid const& M) {
      std::vector<index_t> out;
      for (auto e : idempotents(M)) {
        out.push_back(e.index);
      }
      return out;
    }

  }  // namespace

  BitSet right_multiples(FiniteMonoid const& A, index_t a) {
    BitSet out(A.order());
    for (index_t x : A.row(a)) {
      out.set(x);
    }
    return out;
  }

  BitSet left_multiples(FiniteMonoid const& B, index_t b) {
    BitSet out(B.order());
    for (index_t x = 0; x < B.order(); ++x) {
      out.set(B(x, b));
    }
    return out;
  }

  bool exists_form_aP1b(FiniteMonoid const& A,
                        FiniteMonoid const& B,
                        PairSet const&      P,
                        index_t             a,
                        index_t             b) {
    if (P.left_size() != A.order() || P.right_size() != B.order()) {
      throw MixedParents();
    }
    return pairs_within(P, right_multiples(A, a), left_multiples(B, b));
  }

  std::optional<PairSet> solve_form_aP1b(FiniteMonoid const& A,
                                         FiniteMonoid const& B,
                                         PairSet const&      P,
                                         index_t             a,
                                         index_t             b) {
    if (!exists_form_aP1b(A, B, P, a, b)) {
      return std::nullopt;
    }
    PairSet P1(A.order(), B.order());
    for (auto [p, q] : P.members()) {
      index_t a1 = 0;
      while (A(a, a1) != p) {
        ++a1;
      }
      index_t b1 = 0;
      while (B(b1, b) != q) {
        ++b1;
      }
      P1.insert(a1, b1);
    }
    return P1;
  }

  bool exists_form_caP1bd(FiniteMonoid const& A,
                          FiniteMonoid const& B,
                          PairSet const&      P,
                          index_t             a,
                          index_t             b,
                          index_t             c,
                          index_t             d) {
    return exists_form_aP1b(A, B, P, A(c, a), B(b, d));
  }

  bool thm1_form_holds(FiniteMonoid const& A,
                       FiniteMonoid const& B,
                       PairSet const&      P,
                       index_t             a,
                       index_t             b) {
    if (exists_form_aP1b(A, B, P, a, b)) {
      return true;
    }
    for (index_t c : inverses_of(A, a)) {
      for (index_t d : inverses_of(B, b)) {
        if (exists_form_caP1bd(A, B, P, a, b, c, d)) {
          return true;
        }
      }
    }
    return false;
  }

  bool thm2_form_holds(FiniteMonoid const& B, VarPairSet const& P, index_t b) {
    if (P.right_size() != B.order()) {
      throw MixedParents();
    }
    BitSet seconds(B.order());
    for (auto [f, y] : P.members()) {
      seconds.set(y);
    }
    for (auto const& allowed : thm2_masks(B, b, inverses_of(B, b))) {
      if (seconds.is_subset_of(allowed)) {
        return true;
      }
    }
    return false;
  }

  std::optional<BitSet> least_hitting_set(std::vector<BitSet> const& avoid, std::size_t nbits) {
    for (auto const& s : avoid) {
      if (s.none()) {
        return std::nullopt;
      }
    }
    BitSet                     out(nbits);
    std::vector<BitSet const*> open;
    for (auto const& s : avoid) {
      open.push_back(&s);
    }
    // The least code must contain h = max over open sets of their lowest
    // member; the remaining open sets all have lower members, so recurse.
    while (!open.empty()) {
      std::size_t h = 0;
      for (auto const* s : open) {
        std::size_t low = nbits;
        s->for_each([&](std::size_t i) { low = std::min(low, i); });
        h = std::max(h, low);
      }
      out.set(h);
      std::erase_if(open, [&](BitSet const* s) { return s->test(h); });
    }
    return out;
  }

  std::string_view to_string(ConditionId id) noexcept {
    switch (id) {
      case ConditionId::T1_i:
        return "T1.i";
      case ConditionId::T1_ii:
        return "T1.ii";
      case ConditionId::T2_i:
        return "T2.i";
      case ConditionId::T2_ii:
        return "T2.ii";
      case ConditionId::T2_iii:
        return "T2.iii";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Theorem 1
  ////////////////////////////////////////////////////////////////////////

  ConditionResult thm1_condition_i(FiniteMonoid const& A, FiniteMonoid const& B) {
    return regular_factors(ConditionId::T1_i, A, B);
  }

  ConditionResult thm1_condition_ii_exact(FiniteMonoid const& A, FiniteMonoid const& B) {
    std::size_t const m = A.order() * B.order();
    if (m > 63) {
      throw CapExceeded("subset sweep for T1.ii", sat_pow2(m), sat_pow2(63));
    }
    auto const          inv_A = all_inverses(A);
    auto const          inv_B = all_inverses(B);
    std::uint64_t const sets  = std::uint64_t{1} << m;
    ConditionResult     r;
    r.id = ConditionId::T1_ii;
    for (index_t b = 0; b < B.order(); ++b) {
      for (index_t a = 0; a < A.order(); ++a) {
        std::vector<std::uint64_t> allowed;
        for (auto const& mask : thm1_masks(A, B, a, b, inv_A, inv_B)) {
          allowed.push_back(mask.code());
        }
        for (std::uint64_t p = 0; p < sets; ++p) {
          bool const ok = std::any_of(allowed.begin(), allowed.end(), [&](std::uint64_t m) {
            return (p & ~m) == 0;
          });
          if (!ok) {
            r.holds = false;
            r.witness
                = TripleWitness{a, PairSet(A.order(), B.order(), BitSet::from_code(p, m)), b};
            return r;
          }
        }
      }
    }
    return r;
  }

  ConditionResult thm1_condition_ii_reduced(FiniteMonoid const& A, FiniteMonoid const& B) {
    std::size_t const m     = A.order() * B.order();
    auto const        inv_A = all_inverses(A);
    auto const        inv_B = all_inverses(B);
    ConditionResult   r;
    r.id = ConditionId::T1_ii;
    r.reduced_mode = true;
    for (index_t b = 0; b < B.order(); ++b) {
      for (index_t a = 0; a < A.order(); ++a) {
        std::vector<BitSet> outside;
        for (auto const& mask : thm1_masks(A, B, a, b, inv_A, inv_B)) {
          outside.push_back(~mask);
        }
        if (auto p = least_hitting_set(outside, m)) {
          r.holds   = false;
          r.witness = TripleWitness{a, PairSet(A.order(), B.order(), std::move(*p)), b};
          return r;
        }
      }
    }
    return r;
  }

  ConditionResult thm1_condition_ii(FiniteMonoid const& A,
                                    FiniteMonoid const& B,
                                    SweepCaps const&    caps) {
    if (A.order() * B.order() <= caps.thm1_exact_bits) {
      return thm1_condition_ii_exact(A, B);
    }
    return thm1_condition_ii_reduced(A, B);
  }

  TheoremVerdict thm1_verdict(FiniteMonoid const& A, FiniteMonoid const& B, SweepCaps const& caps) {
    TheoremVerdict v;
    v.theorem = 1;
    v.conditions.push_back(thm1_condition_i(A, B));
    v.conditions.push_back(thm1_condition_ii(A, B, caps));
    for (auto const& c : v.conditions) {
      v.verdict      = v.verdict && c.holds;
      v.reduced_mode = v.reduced_mode || c.reduced_mode;
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Theorem 2
  ////////////////////////////////////////////////////////////////////////

  ConditionResult thm2_condition_i(FiniteMonoid const& A, FiniteMonoid const& B) {
    return regular_factors(ConditionId::T2_i, A, B);
  }

  ConditionResult pointwise_divisibility(FiniteMonoid const&         A,
                                         FiniteMonoid const&         B,
                                         std::vector<index_t> const& idempotent_set,
                                         bool                        reduced) {
    FnSpace const       space(A.order(), B.order());
    std::vector<BitSet> ideal;  // ideal[z] = A·z
    for (index_t z = 0; z < A.order(); ++z) {
      ideal.push_back(left_multiples(A, z));
    }
    ConditionResult r;
    r.id = ConditionId::T2_ii;
    r.reduced_mode = reduced;

    if (!reduced) {
      if (space.count() == kSaturated) {
        throw CapExceeded("function sweep for T2.ii", space.count(), kSaturated - 1);
      }
      for (index_t x = 0; x < B.order(); ++x) {
        for (std::uint64_t f = 0; f < space.count(); ++f) {
          index_t const fx = space.value(f, x);
          bool const    ok = std::any_of(
              idempotent_set.begin(), idempotent_set.end(), [&](index_t e) {
                return ideal[space.value(f, B(x, e))].test(fx);
              });
          if (!ok) {
            r.holds   = false;
            r.witness = PointWitness{x, space.decode(f)};
            return r;
          }
        }
      }
      return r;
    }

    // Only the values at x and at the points x·e matter; other positions
    // stay at digit 0, which keeps the enumeration in function-code order.
    for (index_t x = 0; x < B.order(); ++x) {
      std::vector<index_t> points{x};
      for (index_t e : idempotent_set) {
        points.push_back(B(x, e));
      }
      std::sort(points.begin(), points.end());
      points.erase(std::unique(points.begin(), points.end()), points.end());
      std::uint64_t const combos = sat_pow(A.order(), points.size());
      if (combos > (std::uint64_t{1} << 24)) {
        throw CapExceeded("reduced sweep for T2.ii", combos, std::uint64_t{1} << 24);
      }
      FnFin f{std::vector<index_t>(B.order(), 0)};
      for (std::uint64_t c = 0; c < combos; ++c) {
        std::uint64_t rest = c;
        for (std::size_t k = points.size(); k-- > 0;) {
          f.values[points[k]] = static_cast<index_t>(rest % A.order());
          rest /= A.order();
        }
        index_t const fx = f.values[x];
        bool const    ok = std::any_of(
            idempotent_set.begin(), idempotent_set.end(), [&](index_t e) {
              return ideal[f.values[B(x, e)]].test(fx);
            });
        if (!ok) {
          r.holds   = false;
          r.witness = PointWitness{x, f};
          return r;
        }
      }
    }
    return r;
  }

  ConditionResult thm2_condition_ii(FiniteMonoid const& A,
                                    FiniteMonoid const& B,
                                    SweepCaps const&    caps) {
    bool const reduced = sat_pow(A.order(), B.order()) > caps.thm2_ii_exact_fns;
    auto const idem    = idempotent_indices(B);
    auto       r       = pointwise_divisibility(A, B, idem, reduced);

    std::vector<index_t> proper;
    for (index_t e : idem) {
      if (e != B.identity()) {
        proper.push_back(e);
      }
    }
    auto               restricted = pointwise_divisibility(A, B, proper, reduced);
    ExploratoryResult  ex;
    ex.label = "exploratory: e restricted to non-identity idempotents";
    ex.holds = restricted.holds;
    if (restricted.witness) {
      ex.witness = std::get<PointWitness>(*restricted.witness);
    }
    r.exploratory = std::move(ex);
    return r;
  }

  ConditionResult thm2_condition_iii_exact(FiniteMonoid const& A, FiniteMonoid const& B) {
    VariantProduct const V(A, B);
    std::uint64_t const  m = V.pair_count();
    if (m > 63) {
      throw CapExceeded("subset sweep for T2.iii", sat_pow2(m), sat_pow2(63));
    }
    std::size_t const   nb   = B.order();
    std::uint64_t const sets = std::uint64_t{1} << m;
    ConditionResult     r;
    r.id = ConditionId::T2_iii;
    for (index_t b = 0; b < nb; ++b) {
      std::vector<std::uint64_t> allowed;
      for (auto const& ys : thm2_masks(B, b, inverses_of(B, b))) {
        BitSet all_f(V.functions().count());
        all_f.set_all();
        allowed.push_back(product_mask(all_f, ys).code());
      }
      for (std::uint64_t p = 0; p < sets; ++p) {
        bool const ok = std::any_of(allowed.begin(), allowed.end(), [&](std::uint64_t mk) {
          return (p & ~mk) == 0;
        });
        if (!ok) {
          r.holds = false;
          ShiftWitness w{b, {}};
          for (std::uint64_t i = 0; i < m; ++i) {
            if ((p >> i) & 1u) {
              w.P.emplace_back(i / nb, static_cast<index_t>(i % nb));
            }
          }
          r.witness = std::move(w);
          return r;
        }
      }
    }
    return r;
  }

  ConditionResult thm2_condition_iii_reduced(FiniteMonoid const& A, FiniteMonoid const& B) {
    (void) A;
    ConditionResult r;
    r.id = ConditionId::T2_iii;
    r.reduced_mode = true;
    // Membership in every allowed set depends on the second coordinate
    // only, so the least violating P lives on pairs (function code 0, y).
    for (index_t b = 0; b < B.order(); ++b) {
      std::vector<BitSet> outside;
      for (auto const& ys : thm2_masks(B, b, inverses_of(B, b))) {
        outside.push_back(~ys);
      }
      if (auto s = least_hitting_set(outside, B.order())) {
        r.holds = false;
        ShiftWitness w{b, {}};
        s->for_each([&](std::size_t y) { w.P.emplace_back(0, static_cast<index_t>(y)); });
        r.witness = std::move(w);
        return r;
      }
    }
    return r;
  }

  ConditionResult thm2_condition_iii(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     SweepCaps const&    caps) {
    std::uint64_t const m = sat_mul(sat_pow(A.order(), B.order()), B.order());
    if (m <= caps.thm2_exact_bits) {
      return thm2_condition_iii_exact(A, B);
    }
    return thm2_condition_iii_reduced(A, B);
  }

  TheoremVerdict thm2_verdict(FiniteMonoid const& A, FiniteMonoid const& B, SweepCaps const& caps) {
    TheoremVerdict v;
    v.theorem = 2;
    v.conditions.push_back(thm2_condition_i(A, B));
    v.conditions.push_back(thm2_condition_ii(A, B, caps));
    v.conditions.push_back(thm2_condition_iii(A, B, caps));
    for (auto const& c : v.conditions) {
      v.verdict      = v.verdict && c.holds;
      v.reduced_mode = v.reduced_mode || c.reduced_mode;
    }
    return v;
  }

  ConditionResult const& TheoremVerdict::condition(ConditionId id) const {
    for (auto const& c : conditions) {
      if (c.id == id) {
        return c;
      }
    }
    throw BadParameter(fmt::format("no condition {} in this verdict", to_string(id)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracle comparison
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(ProductKind kind) noexcept {
    return kind == ProductKind::schutz ? "schutz" : "variant";
  }

  ProductKind parse_product_kind(std::string_view s) {
    if (s == "schutz") {
      return ProductKind::schutz;
    }
    if (s == "variant") {
      return ProductKind::variant;
    }
    throw BadParameter(fmt::format("unknown product kind '{}'", s));
  }

  namespace {

    template <typename Product>
    void run_brute(Product const&          S,
                   CompareOptions const&   opts,
                   RegularityReport&       report) {
      if (!S.addressable() || S.order() > opts.cap) {
        report.brute.skipped     = true;
        report.brute.skip_reason = fmt::format(
            "CapExceeded: carrier {} > cap {}", size_to_string(S.order()), opts.cap);
        return;
      }
      if (opts.law_check) {
        report.law_check = check_laws(S, opts.seed);
      }
      auto const res               = brute_force_regularity(S, opts.oracle);
      report.brute.regular          = res.regular;
      report.brute.elements_checked = res.elements_checked;
      report.brute.candidate_hits   = res.candidate_hits;
      if (res.witness) {
        report.brute.witness_code = *res.witness;
        report.brute.witness      = ProductElem{S.decode(*res.witness)};
      }
    }

    // An element of the product realising a failed condition, if any.
    std::optional<std::uint64_t> element_for(SchutzProduct const&    S,
                                             ConditionResult const& c) {
      if (!c.witness) {
        return std::nullopt;
      }
      if (auto const* t = std::get_if<TripleWitness>(&*c.witness)) {
        return S.encode(SchutzElem{t->a, t->P, t->b});
      }
      if (auto const* f = std::get_if<FactorWitness>(&*c.witness)) {
        index_t const a = f->factor == 'A' ? f->element : S.left().identity();
        index_t const b = f->factor == 'B' ? f->element : S.right().identity();
        return S.join(a, 0, b);
      }
      return std::nullopt;
    }

    std::optional<std::uint64_t> element_for(VariantProduct const&  V,
                                             ConditionResult const& c) {
      if (!c.witness) {
        return std::nullopt;
      }
      std::uint64_t const one = V.functions().encode(one_fn(V.left(), V.right()));
      if (auto const* s = std::get_if<ShiftWitness>(&*c.witness)) {
        std::uint64_t p = 0;
        for (auto [f, y] : s->P) {
          p |= std::uint64_t{1} << (f * V.right().order() + y);
        }
        return V.join(one, p, s->b);
      }
      if (auto const* f = std::get_if<FactorWitness>(&*c.witness)) {
        if (f->factor == 'B') {
          return V.join(one, 0, f->element);
        }
        FnFin g = one_fn(V.left(), V.right());
        g.values[0] = f->element;
        return V.join(V.functions().encode(g), 0, V.right().identity());
      }
      return std::nullopt;
    }

    template <typename Product>
    void build_counterexample(Product const& S, RegularityReport& report) {
      Counterexample cx;
      if (!report.brute.regular) {
        cx.type    = "non_regular_element";
        cx.element = report.brute.witness;
        report.counterexample = std::move(cx);
        return;
      }
      cx.type = "regular_despite_condition";
      for (auto const& c : report.theorem.conditions) {
        if (c.holds) {
          continue;
        }
        cx.condition         = c.id;
        cx.condition_witness = c.witness;
        if (auto x = element_for(S, c)) {
          cx.element = ProductElem{S.decode(*x)};
          if (auto y = find_inverse(S, *x, OracleOptions{})) {
            cx.inverse = ProductElem{S.decode(*y)};
          }
        }
        break;
      }
      report.counterexample = std::move(cx);
    }

    template <typename Product>
    RegularityReport compare_with(Product const&        S,
                                  TheoremVerdict        theorem,
                                  double                theorem_ms,
                                  CompareOptions const& opts,
                                  RegularityReport      report) {
      report.order        = S.order();
      report.theorem      = std::move(theorem);
      report.theorem_ms   = theorem_ms;
      report.reduced_mode = report.theorem.reduced_mode;
      auto const t0       = Clock::now();
      run_brute(S, opts, report);
      report.brute_ms = ms_since(t0);
      if (!report.brute.skipped) {
        report.agree = report.brute.regular == report.theorem.verdict;
        if (!*report.agree) {
          build_counterexample(S, report);
        }
      }
      return report;
    }

  }  // namespace

  RegularityReport compare_regularity(FiniteMonoid const&   A,
                                      FiniteMonoid const&   B,
                                      ProductKind           kind,
                                      CompareOptions const& opts) {
    RegularityReport report;
    report.left_label  = A.label();
    report.right_label = B.label();
    report.left_order  = A.order();
    report.right_order = B.order();
    report.instance    = fmt::format("A={} B={}", A.label(), B.label());
    report.kind        = kind;
    report.seed        = opts.seed;

    auto const t0 = Clock::now();
    if (kind == ProductKind::schutz) {
      auto       theorem = thm1_verdict(A, B, opts.caps);
      double const tms   = ms_since(t0);
      return compare_with(SchutzProduct(A, B), std::move(theorem), tms, opts, std::move(report));
    }
    auto         theorem = thm2_verdict(A, B, opts.caps);
    double const tms     = ms_since(t0);
    return compare_with(VariantProduct(A, B), std::move(theorem), tms, opts, std::move(report));
  }

}  // namespace monoidlab
