#include "monoidlab/report.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace monoidlab {

  namespace {

    std::string fn_string(FnFin const& f) {
      return fmt::format("[{}]", fmt::join(f.values, " "));
    }

    Json fn_json(FnSpace const& space, std::uint64_t code) {
      return Json{{"f", space.decode(code).values}, {"code", code}};
    }

    Json pairs_json(PairSet const& P) {
      Json out = Json::array();
      for (auto [p, q] : P.members()) {
        out.push_back(Json::array({p, q}));
      }
      return out;
    }

    Json varpairs_json(std::vector<std::pair<std::uint64_t, index_t>> const& members,
                       FnSpace const&                                        space) {
      Json out = Json::array();
      for (auto [f, y] : members) {
        Json entry = fn_json(space, f);
        entry["y"] = y;
        out.push_back(std::move(entry));
      }
      return out;
    }

    std::string varpairs_string(std::vector<std::pair<std::uint64_t, index_t>> const& members,
                                FnSpace const&                                        space) {
      std::vector<std::string> parts;
      for (auto [f, y] : members) {
        parts.push_back(fmt::format("({},{})", fn_string(space.decode(f)), y));
      }
      return fmt::format("{{{}}}", fmt::join(parts, ","));
    }

    Json order_json(std::uint64_t order) {
      return order == kSaturated ? Json(size_to_string(order)) : Json(order);
    }

    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      }
      return out + "\"";
    }

  }  // namespace

  std::string format_elem(SchutzElem const& x) {
    std::vector<std::string> parts;
    for (auto [p, q] : x.P.members()) {
      parts.push_back(fmt::format("({},{})", p, q));
    }
    return fmt::format("({},{{{}}},{})", x.a, fmt::join(parts, ","), x.b);
  }

  std::string format_elem(VariantElem const& x, std::size_t na) {
    FnSpace const space(na, x.f.values.size());
    return fmt::format("({},{},{})", fn_string(x.f), varpairs_string(x.P.members(), space), x.b);
  }

  std::string format_elem(ProductElem const& x, std::size_t na) {
    if (auto const* s = std::get_if<SchutzElem>(&x)) {
      return format_elem(*s);
    }
    return format_elem(std::get<VariantElem>(x), na);
  }

  std::string format_witness(ConditionWitness const& w, std::size_t na, std::size_t nb) {
    return std::visit(
        [&](auto const& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FactorWitness>) {
            return fmt::format("{} has no inverse for element {}", v.factor, v.element);
          } else if constexpr (std::is_same_v<T, TripleWitness>) {
            return format_elem(SchutzElem{v.a, v.P, v.b});
          } else if constexpr (std::is_same_v<T, PointWitness>) {
            return fmt::format("x={} f={}", v.x, fn_string(v.f));
          } else {
            return fmt::format("b={} P={}", v.b, varpairs_string(v.P, FnSpace(na, nb)));
          }
        },
        w);
  }

  Json to_json(ProductElem const& x, std::size_t na) {
    if (auto const* s = std::get_if<SchutzElem>(&x)) {
      return Json{{"a", s->a}, {"P", pairs_json(s->P)}, {"b", s->b}, {"text", format_elem(*s)}};
    }
    auto const&   v = std::get<VariantElem>(x);
    FnSpace const space(na, v.f.values.size());
    return Json{{"f", v.f.values},
                {"P", varpairs_json(v.P.members(), space)},
                {"b", v.b},
                {"text", format_elem(v, na)}};
  }

  Json to_json(ConditionWitness const& w, std::size_t na, std::size_t nb) {
    Json out = std::visit(
        [&](auto const& v) -> Json {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FactorWitness>) {
            return Json{{"factor", std::string(1, v.factor)}, {"element", v.element}};
          } else if constexpr (std::is_same_v<T, TripleWitness>) {
            return Json{{"a", v.a}, {"P", pairs_json(v.P)}, {"b", v.b}};
          } else if constexpr (std::is_same_v<T, PointWitness>) {
            return Json{{"x", v.x}, {"f", v.f.values}};
          } else {
            return Json{{"b", v.b}, {"P", varpairs_json(v.P, FnSpace(na, nb))}};
          }
        },
        w);
    out["text"] = format_witness(w, na, nb);
    return out;
  }

  Json to_json(ConditionResult const& c, std::size_t na, std::size_t nb) {
    Json out{{"id", to_string(c.id)},
             {"holds", c.holds},
             {"witness", c.witness ? to_json(*c.witness, na, nb) : Json(nullptr)}};
    if (c.reduced_mode) {
      out["reduced_mode"] = true;
    }
    if (c.id == ConditionId::T1_ii) {
      out["quantifier"] = "c, d chosen per P";
    }
    if (c.exploratory) {
      out["exploratory"] = Json{
          {"label", c.exploratory->label},
          {"holds", c.exploratory->holds},
          {"witness",
           c.exploratory->witness ? to_json(ConditionWitness{*c.exploratory->witness}, na, nb)
                                  : Json(nullptr)}};
    }
    return out;
  }

  Json to_json(TheoremVerdict const& v, std::size_t na, std::size_t nb) {
    Json conditions = Json::array();
    for (auto const& c : v.conditions) {
      conditions.push_back(to_json(c, na, nb));
    }
    return Json{{"theorem", v.theorem},
                {"verdict", v.verdict},
                {"reduced_mode", v.reduced_mode},
                {"conditions", std::move(conditions)}};
  }

  Json to_json(RegularityReport const& r) {
    std::size_t const na = r.left_order;
    std::size_t const nb = r.right_order;

    Json brute{{"verdict", r.brute.skipped ? Json(nullptr)
                                           : Json(r.brute.regular ? "regular" : "non_regular")},
               {"witness", r.brute.witness ? to_json(*r.brute.witness, na) : Json(nullptr)},
               {"skipped", r.brute.skipped}};
    if (r.brute.skipped) {
      brute["skip_reason"] = r.brute.skip_reason;
    } else {
      brute["elements_checked"] = r.brute.elements_checked;
      brute["candidate_hits"]   = r.brute.candidate_hits;
    }

    Json conditions = Json::array();
    for (auto const& c : r.theorem.conditions) {
      conditions.push_back(to_json(c, na, nb));
    }

    Json out{{"instance", r.instance},
             {"kind", to_string(r.kind)},
             {"order", order_json(r.order)},
             {"brute", std::move(brute)},
             {"conditions", std::move(conditions)},
             {"verdict", r.theorem.verdict},
             {"agree", r.agree ? Json(*r.agree) : Json(nullptr)},
             {"reduced_mode", r.reduced_mode},
             {"seed", r.seed}};

    if (r.law_check) {
      auto const& l = *r.law_check;
      out["law_check"] = Json{{"exhaustive", l.exhaustive},
                              {"triples", l.triples},
                              {"associative", l.associative},
                              {"identity", l.identity_ok},
                              {"failure", l.failure ? Json(*l.failure) : Json(nullptr)}};
    }
    if (r.counterexample) {
      auto const& cx = *r.counterexample;
      Json        j{{"type", cx.type}};
      j["condition"] = cx.condition ? Json(to_string(*cx.condition)) : Json(nullptr);
      j["condition_witness"]
          = cx.condition_witness ? to_json(*cx.condition_witness, na, nb) : Json(nullptr);
      j["element"] = cx.element ? to_json(*cx.element, na) : Json(nullptr);
      j["inverse"] = cx.inverse ? to_json(*cx.inverse, na) : Json(nullptr);
      out["counterexample"] = std::move(j);
    }
    out["elapsed_ms"] = Json{{"theorem", r.theorem_ms}, {"brute", r.brute_ms}};
    return out;
  }

  std::string report_document(RegularityReport const& r) {
    return to_json(r).dump(2) + "\n";
  }

  std::string summary_header() {
    return "A,B,kind,order,brute,verdict,agree";
  }

  std::string summary_line(RegularityReport const& r) {
    std::string const brute
        = r.brute.skipped ? "skipped" : (r.brute.regular ? "regular" : "non_regular");
    std::string const agree = r.agree ? (*r.agree ? "true" : "false") : "n/a";
    return fmt::format("{},{},{},{},{},{},{}",
                       csv_field(r.left_label),
                       csv_field(r.right_label),
                       to_string(r.kind),
                       size_to_string(r.order),
                       brute,
                       r.theorem.verdict ? "true" : "false",
                       agree);
  }

}  // namespace monoidlab
