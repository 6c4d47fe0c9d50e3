#pragma once

// JSON and text renderings of regularity reports and theorem verdicts.
// Field order is fixed, so two runs on the same inputs and seed produce
// identical documents apart from "elapsed_ms".

#include <string>

#include "json.hpp"

#include "monoidlab/schutzenberger.hpp"
#include "monoidlab/theorems.hpp"

namespace monoidlab {

  using Json = nlohmann::ordered_json;

  // (a, {(p,q), ...}, b) with raw indices.
  std::string format_elem(SchutzElem const& x);
  // ([f0 f1 ...], {([..], y), ...}, b); na is |A|, used to decode P.
  std::string format_elem(VariantElem const& x, std::size_t na);
  std::string format_elem(ProductElem const& x, std::size_t na);
  std::string format_witness(ConditionWitness const& w, std::size_t na, std::size_t nb);

  Json to_json(ProductElem const& x, std::size_t na);
  Json to_json(ConditionWitness const& w, std::size_t na, std::size_t nb);
  Json to_json(ConditionResult const& c, std::size_t na, std::size_t nb);
  Json to_json(TheoremVerdict const& v, std::size_t na, std::size_t nb);
  Json to_json(RegularityReport const& r);

  std::string report_document(RegularityReport const& r);

  // "A,B,kind,order,brute,verdict,agree"; fields holding commas are quoted.
  std::string summary_header();
  std::string summary_line(RegularityReport const& r);

}  // namespace monoidlab
