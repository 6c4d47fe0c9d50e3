#pragma once

// Decision procedures for the structural conditions that characterise
// regularity of A◇B and A◇ᵥB, and a harness that compares them with the
// brute-force oracle.
//
//   T1.i   A and B are regular.
//   T1.ii  every P ⊆ A×B, with a ∈ A, b ∈ B, has the form a P1 b, or
//          c a P1 b d for some c ∈ a⁻¹, d ∈ b⁻¹ (c, d chosen per P).
//   T2.i   A and B are regular.
//   T2.ii  for every x ∈ B and f: B → A there is an idempotent e of B with
//          (x)f ∈ A·(xe)f.
//   T2.iii every P ⊆ A^{⊕B}×B, with b ∈ B, has the form P1 b or P1 b d for
//          some d ∈ b⁻¹.
//
// "P = a P1 b for some P1" holds iff every (p, q) ∈ P has p ∈ aA and
// q ∈ Bb; the form checks use that membership reduction. Witnesses are the
// first violations in canonical order: b, then a (or x), then the set code.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monoidlab/bitset.hpp"
#include "monoidlab/monoid.hpp"
#include "monoidlab/oracle.hpp"
#include "monoidlab/products.hpp"
#include "monoidlab/schutzenberger.hpp"

namespace monoidlab {

  ////////////////////////////////////////////////////////////////////////
  // Form tests
  ////////////////////////////////////////////////////////////////////////

  // Left ideal generated on the right: {a·x : x ∈ A} as a bitset over A.
  BitSet right_multiples(FiniteMonoid const& A, index_t a);
  // {x·b : x ∈ B} as a bitset over B.
  BitSet left_multiples(FiniteMonoid const& B, index_t b);

  // True iff P = a P1 b for some P1 ⊆ A×B.
  bool exists_form_aP1b(FiniteMonoid const& A,
                        FiniteMonoid const& B,
                        PairSet const&      P,
                        index_t             a,
                        index_t             b);

  // A P1 with a P1 b = P, assembled from least per-pair preimages.
  std::optional<PairSet> solve_form_aP1b(FiniteMonoid const& A,
                                         FiniteMonoid const& B,
                                         PairSet const&      P,
                                         index_t             a,
                                         index_t             b);

  // True iff P = c a P1 b d for some P1.
  bool exists_form_caP1bd(FiniteMonoid const& A,
                          FiniteMonoid const& B,
                          PairSet const&      P,
                          index_t             a,
                          index_t             b,
                          index_t             c,
                          index_t             d);

  // Per-element T1.ii predicate for (a, P, b).
  bool thm1_form_holds(FiniteMonoid const& A,
                       FiniteMonoid const& B,
                       PairSet const&      P,
                       index_t             a,
                       index_t             b);

  // Per-element T2.iii predicate for (·, P, b).
  bool thm2_form_holds(FiniteMonoid const& B, VarPairSet const& P, index_t b);

  // Least-code set meeting every one of `avoid`; nullopt if some member of
  // `avoid` is empty. Used to find the least P contained in none of a
  // family of allowed sets (avoid = their complements).
  std::optional<BitSet> least_hitting_set(std::vector<BitSet> const& avoid, std::size_t nbits);

  ////////////////////////////////////////////////////////////////////////
  // Conditions
  ////////////////////////////////////////////////////////////////////////

  enum class ConditionId { T1_i, T1_ii, T2_i, T2_ii, T2_iii };
  std::string_view to_string(ConditionId id) noexcept;

  struct FactorWitness {
    char    factor;   // 'A' or 'B'
    index_t element;  // least element with empty inverse set
  };
  struct TripleWitness {
    index_t a;
    PairSet P;
    index_t b;
  };
  struct PointWitness {
    index_t x;
    FnFin   f;
  };
  // Members of P as (function code, d); kept as a list because A^{⊕B}×B
  // can be far too wide for a membership vector in reduced mode.
  struct ShiftWitness {
    index_t                                        b;
    std::vector<std::pair<std::uint64_t, index_t>> P;
  };
  using ConditionWitness = std::variant<FactorWitness, TripleWitness, PointWitness, ShiftWitness>;

  struct ExploratoryResult {
    std::string                 label;
    bool                        holds = true;
    std::optional<PointWitness> witness;
  };

  struct ConditionResult {
    ConditionId                      id = ConditionId::T1_i;
    bool                             holds = true;
    std::optional<ConditionWitness>  witness;
    bool                             reduced_mode = false;
    std::optional<ExploratoryResult> exploratory;
  };

  struct SweepCaps {
    std::size_t   thm1_exact_bits      = 16;  // |A||B| for subset enumeration
    std::size_t   thm2_exact_bits      = 16;  // |A|^|B|·|B|
    std::uint64_t thm2_ii_exact_fns    = std::uint64_t{1} << 20;
    std::uint64_t thm2_ii_reduced_max  = std::uint64_t{1} << 24;
  };

  ConditionResult thm1_condition_i(FiniteMonoid const& A, FiniteMonoid const& B);
  ConditionResult thm1_condition_ii(FiniteMonoid const& A,
                                    FiniteMonoid const& B,
                                    SweepCaps const&    caps = {});

  ConditionResult thm2_condition_i(FiniteMonoid const& A, FiniteMonoid const& B);
  ConditionResult thm2_condition_ii(FiniteMonoid const& A,
                                    FiniteMonoid const& B,
                                    SweepCaps const&    caps = {});
  ConditionResult thm2_condition_iii(FiniteMonoid const& A,
                                     FiniteMonoid const& B,
                                     SweepCaps const&    caps = {});

  // Forced-mode variants, used to cross-check exact and reduced sweeps.
  ConditionResult thm1_condition_ii_exact(FiniteMonoid const& A, FiniteMonoid const& B);
  ConditionResult thm1_condition_ii_reduced(FiniteMonoid const& A, FiniteMonoid const& B);
  ConditionResult thm2_condition_iii_exact(FiniteMonoid const& A, FiniteMonoid const& B);
  ConditionResult thm2_condition_iii_reduced(FiniteMonoid const& A, FiniteMonoid const& B);

  // (x)f ∈ A·(xe)f for some e in `idempotent_set`; literal sweep over all f.
  ConditionResult pointwise_divisibility(FiniteMonoid const&         A,
                                         FiniteMonoid const&         B,
                                         std::vector<index_t> const& idempotent_set,
                                         bool                        reduced);

  struct TheoremVerdict {
    int                          theorem = 1;
    bool                         verdict = true;
    std::vector<ConditionResult> conditions;
    bool                         reduced_mode = false;

    ConditionResult const& condition(ConditionId id) const;
  };

  TheoremVerdict thm1_verdict(FiniteMonoid const& A, FiniteMonoid const& B, SweepCaps const& caps = {});
  TheoremVerdict thm2_verdict(FiniteMonoid const& A, FiniteMonoid const& B, SweepCaps const& caps = {});

  ////////////////////////////////////////////////////////////////////////
  // Oracle comparison
  ////////////////////////////////////////////////////////////////////////

  enum class ProductKind { schutz, variant };
  std::string_view to_string(ProductKind kind) noexcept;
  ProductKind      parse_product_kind(std::string_view s);

  using ProductElem = std::variant<SchutzElem, VariantElem>;

  struct BruteResult {
    bool                         skipped = false;
    std::string                  skip_reason;
    bool                         regular = false;
    std::optional<std::uint64_t> witness_code;
    std::optional<ProductElem>   witness;
    std::uint64_t                elements_checked = 0;
    std::uint64_t                candidate_hits   = 0;
  };

  // Emitted when oracle and theorem disagree.
  struct Counterexample {
    std::string                     type;  // "non_regular_element" | "regular_despite_condition"
    std::optional<ConditionId>      condition;
    std::optional<ConditionWitness> condition_witness;
    std::optional<ProductElem>      element;
    std::optional<ProductElem>      inverse;
  };

  struct RegularityReport {
    std::string                   instance;
    std::string                   left_label;
    std::string                   right_label;
    std::size_t                   left_order  = 0;
    std::size_t                   right_order = 0;
    ProductKind                   kind = ProductKind::schutz;
    std::uint64_t                 order = 0;  // kSaturated if not representable
    BruteResult                   brute;
    TheoremVerdict                theorem;
    std::optional<bool>           agree;
    bool                          reduced_mode = false;
    std::uint64_t                 seed         = 0;
    std::optional<LawCheck>       law_check;
    std::optional<Counterexample> counterexample;
    double                        theorem_ms = 0;
    double                        brute_ms   = 0;
  };

  struct CompareOptions {
    std::uint64_t cap  = kMaxOracleOrder;
    std::uint64_t seed = 0;
    SweepCaps     caps;
    OracleOptions oracle;
    bool          law_check = true;
  };

  RegularityReport compare_regularity(FiniteMonoid const&   A,
                                      FiniteMonoid const&   B,
                                      ProductKind           kind,
                                      CompareOptions const& opts = {});

}  // namespace monoidlab
