#include "cli.hpp"

#include <atomic>
#include <filesystem>
#include <map>
#include <optional>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"

#include "monoidlab/catalog.hpp"
#include "monoidlab/io.hpp"
#include "monoidlab/monoid.hpp"
#include "monoidlab/oracle.hpp"
#include "monoidlab/products.hpp"
#include "monoidlab/report.hpp"
#include "monoidlab/schutzenberger.hpp"
#include "monoidlab/simd.hpp"
#include "monoidlab/theorems.hpp"

namespace monoidlab::cli {

  namespace fs = std::filesystem;

  namespace {

    // Operands are "A=spec", "B=spec" or a bare spec.
    struct Operands {
      std::map<char, std::string> named;
      std::vector<std::string>    bare;

      explicit Operands(std::vector<std::string> const& raw) {
        for (auto const& s : raw) {
          if (s.size() > 2 && (s[0] == 'A' || s[0] == 'B') && s[1] == '=') {
            named[s[0]] = s.substr(2);
          } else {
            bare.push_back(s);
          }
        }
      }

      FiniteMonoid get(char which) const {
        if (auto it = named.find(which); it != named.end()) {
          return resolve_monoid(it->second);
        }
        std::size_t const k = which == 'A' ? 0 : 1;
        if (k < bare.size()) {
          return resolve_monoid(bare[k]);
        }
        throw BadParameter(fmt::format("missing monoid operand {}", which));
      }

      FiniteMonoid single() const {
        if (named.empty() && bare.size() == 1) {
          return resolve_monoid(bare[0]);
        }
        if (bare.empty() && named.size() == 1) {
          return resolve_monoid(named.begin()->second);
        }
        throw BadParameter("expected exactly one monoid operand");
      }
    };

    std::string file_safe(std::string const& s) {
      std::string out;
      for (char ch : s) {
        bool const ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9')
                        || ch == '-' || ch == '.';
        out.push_back(ok ? ch : '_');
      }
      return out;
    }

    void write_or_print(std::optional<std::string> const& path,
                        std::string const&                content,
                        std::ostream&                     out) {
      if (path) {
        write_file_atomic(*path, content);
      } else {
        out << content;
      }
    }

    struct Globals {
      std::uint64_t cap    = kMaxOracleOrder;
      std::uint64_t seed   = 0;
      std::string   format = "text";
      std::string   isa    = "auto";
    };

    //////////////////////////////////////////////////////////////////////
    // Verbs
    //////////////////////////////////////////////////////////////////////

    int do_validate(Operands const& ops, std::ostream& out, std::ostream& err) {
      try {
        auto const m = ops.single();
        fmt::print(out, "ok: {} order={} identity={}\n", m.label(), m.order(), m.identity());
        return kOk;
      } catch (TableError const& e) {
        fmt::print(err, "invalid: {}\n", e.what());
        return kViolation;
      }
    }

    int do_info(Operands const& ops, Globals const& g, std::ostream& out) {
      auto const m   = ops.single();
      auto const reg = is_regular(m);
      std::vector<index_t> idem;
      for (auto e : idempotents(m)) {
        idem.push_back(e.index);
      }
      std::vector<std::vector<index_t>> inv;
      for (index_t a = 0; a < m.order(); ++a) {
        inv.push_back(inverses_of(m, a));
      }
      if (g.format == "json") {
        Json j{{"label", m.label()},
               {"order", m.order()},
               {"identity", m.identity()},
               {"idempotents", idem},
               {"regular", reg.regular},
               {"witness", reg.witness ? Json(*reg.witness) : Json(nullptr)},
               {"group", is_group(m)},
               {"commutative", is_commutative(m)},
               {"inverses", inv}};
        out << j.dump(2) << "\n";
        return kOk;
      }
      fmt::print(out, "label: {}\norder: {}\nidentity: {}\n", m.label(), m.order(), m.identity());
      fmt::print(out, "idempotents: {{{}}}\n", fmt::join(idem, ","));
      fmt::print(out, "regular: {}", reg.regular ? "yes" : "no");
      if (reg.witness) {
        fmt::print(out, " (witness {})", *reg.witness);
      }
      fmt::print(out, "\ngroup: {}\ncommutative: {}\n", is_group(m) ? "yes" : "no",
                 is_commutative(m) ? "yes" : "no");
      for (index_t a = 0; a < m.order(); ++a) {
        fmt::print(out, "inverses({}): {{{}}}\n", a, fmt::join(inv[a], ","));
      }
      return kOk;
    }

    MaterializedProduct build_product(std::string const&                kind,
                                      Operands const&                   ops,
                                      std::optional<std::string> const& action_file,
                                      std::uint64_t                     cap) {
      auto const A = ops.get('A');
      auto const B = ops.get('B');
      if (kind == "direct") {
        return direct_product(A, B, cap);
      }
      if (kind == "semidirect") {
        if (!action_file) {
          return semidirect_product(A, B, trivial_action(A, B), cap);
        }
        auto raw = read_action_file(*action_file);
        if (raw.left_order != A.order() || raw.right_order != B.order()) {
          throw BadParameter(fmt::format("action file is for {}x{}, operands are {}x{}",
                                         raw.left_order, raw.right_order, A.order(), B.order()));
        }
        return semidirect_product(A, B, validate_action(A, B, std::move(raw.maps)), cap);
      }
      if (kind == "wreath") {
        return wreath_product(A, B, cap);
      }
      if (kind == "power") {
        return function_power(A, B, cap);
      }
      if (kind == "schutz") {
        return schutz_monoid(A, B, cap);
      }
      if (kind == "variant") {
        return variant_monoid(A, B, cap);
      }
      throw BadParameter(fmt::format("unknown product kind '{}'", kind));
    }

    int do_product(std::string const&                kind,
                   Operands const&                   ops,
                   std::optional<std::string> const& action_file,
                   std::optional<std::string> const& out_path,
                   Globals const&                    g,
                   std::ostream&                     out) {
      auto const prod = build_product(kind, ops, action_file, g.cap);
      if (!out_path) {
        out << format_monoid(prod.monoid);
        return kOk;
      }
      fs::path const mon(*out_path);
      fs::path       dec = mon;
      dec.replace_extension(".dec");
      write_file_atomic(mon, format_monoid(prod.monoid));
      write_file_atomic(dec, format_decoding(prod.decoding));
      fmt::print(out, "wrote {} (order {}) and {}\n", mon.string(), prod.monoid.order(), dec.string());
      return kOk;
    }

    int do_regular(std::optional<std::string> const& product,
                   Operands const&                   ops,
                   Globals const&                    g,
                   std::ostream&                     out) {
      Json j;
      if (!product) {
        auto const m = ops.single();
        auto const r = is_regular(m);
        j            = Json{{"instance", m.label()},
                            {"order", m.order()},
                            {"verdict", r.regular ? "regular" : "non_regular"},
                            {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}};
      } else if (*product == "schutz" || *product == "variant") {
        auto const A    = ops.get('A');
        auto const B    = ops.get('B');
        auto       run  = [&](auto const& S) {
          S.require_addressable(g.cap);
          auto const res = brute_force_regularity(S);
          j              = Json{{"instance", fmt::format("A={} B={}", A.label(), B.label())},
                                {"kind", *product},
                                {"order", S.order()},
                                {"verdict", res.regular ? "regular" : "non_regular"},
                                {"witness", res.witness ? to_json(ProductElem{S.decode(*res.witness)},
                                                                  A.order())
                                                        : Json(nullptr)}};
        };
        if (*product == "schutz") {
          run(SchutzProduct(A, B));
        } else {
          run(VariantProduct(A, B));
        }
      } else {
        auto const prod = build_product(*product, ops, std::nullopt, g.cap);
        auto const r    = is_regular(prod.monoid);
        Json       w    = nullptr;
        if (r.witness) {
          auto const comps = prod.decoding[*r.witness];
          w = Json{{"index", *r.witness}, {"components", std::vector<std::uint64_t>(comps.begin(), comps.end())}};
        }
        j = Json{{"instance", prod.monoid.label()},
                 {"kind", *product},
                 {"order", prod.monoid.order()},
                 {"verdict", r.regular ? "regular" : "non_regular"},
                 {"witness", w}};
      }
      if (g.format == "json") {
        out << j.dump(2) << "\n";
      } else {
        fmt::print(out, "{}: {}", j["instance"].get<std::string>(), j["verdict"].get<std::string>());
        if (!j["witness"].is_null()) {
          auto const& w = j["witness"];
          fmt::print(out, " witness {}", w.is_object() && w.contains("text") ? w["text"].get<std::string>() : w.dump());
        }
        fmt::print(out, "\n");
      }
      return kOk;
    }

    void print_verdict(TheoremVerdict const& v, std::size_t na, std::size_t nb, std::ostream& out) {
      fmt::print(out, "theorem {}: verdict {}{}\n", v.theorem, v.verdict ? "true" : "false",
                 v.reduced_mode ? " (reduced mode)" : "");
      for (auto const& c : v.conditions) {
        fmt::print(out, "  {}: {}", to_string(c.id), c.holds ? "holds" : "fails");
        if (c.witness) {
          fmt::print(out, "  witness {}", format_witness(*c.witness, na, nb));
        }
        fmt::print(out, "\n");
        if (c.exploratory) {
          fmt::print(out, "    {}: {}\n", c.exploratory->label, c.exploratory->holds ? "holds" : "fails");
        }
      }
    }

    int do_theorem(int                               which,
                   bool                              compare,
                   Operands const&                   ops,
                   std::optional<std::string> const& out_path,
                   Globals const&                    g,
                   std::ostream&                     out) {
      auto const A = ops.get('A');
      auto const B = ops.get('B');
      if (!compare) {
        auto const v = which == 1 ? thm1_verdict(A, B) : thm2_verdict(A, B);
        if (g.format == "json" || out_path) {
          Json j{{"instance", fmt::format("A={} B={}", A.label(), B.label())}};
          j.update(to_json(v, A.order(), B.order()));
          write_or_print(out_path, j.dump(2) + "\n", out);
        }
        if (g.format != "json") {
          print_verdict(v, A.order(), B.order(), out);
        }
        return kOk;
      }
      CompareOptions opts;
      opts.cap     = g.cap;
      opts.seed    = g.seed;
      auto const r = compare_regularity(A, B, which == 1 ? ProductKind::schutz : ProductKind::variant, opts);
      if (g.format == "json" || out_path) {
        write_or_print(out_path, report_document(r), out);
      }
      if (g.format != "json") {
        print_verdict(r.theorem, A.order(), B.order(), out);
        fmt::print(out, "brute force: {}", r.brute.skipped ? "skipped" : (r.brute.regular ? "regular" : "non_regular"));
        if (r.brute.witness) {
          fmt::print(out, " witness {}", format_elem(*r.brute.witness, A.order()));
        }
        fmt::print(out, "\nagree: {}\n", r.agree ? (*r.agree ? "true" : "false") : "n/a");
      }
      return r.agree.value_or(true) ? kOk : kViolation;
    }

    int do_sweep(std::size_t                       max_order,
                 std::string const&                kind,
                 std::optional<std::string> const& out_dir,
                 unsigned                          workers,
                 Globals const&                    g,
                 std::ostream&                     out) {
      if (max_order < 1 || max_order > 4) {
        throw BadOrder(max_order);
      }
      std::vector<ProductKind> kinds;
      if (kind == "schutz" || kind == "both") {
        kinds.push_back(ProductKind::schutz);
      }
      if (kind == "variant" || kind == "both") {
        kinds.push_back(ProductKind::variant);
      }
      if (kinds.empty()) {
        throw BadParameter(fmt::format("unknown --kind '{}'", kind));
      }
      auto const entries = catalog_up_to(max_order);

      struct Job {
        std::size_t a, b;
        ProductKind kind;
      };
      std::vector<Job> jobs;
      for (auto k : kinds) {
        for (std::size_t a = 0; a < entries.size(); ++a) {
          for (std::size_t b = 0; b < entries.size(); ++b) {
            jobs.push_back({a, b, k});
          }
        }
      }

      CompareOptions opts;
      opts.cap  = g.cap;
      opts.seed = g.seed;
      std::vector<RegularityReport> reports(jobs.size());
      std::vector<std::string>      failures(jobs.size());
      std::atomic<std::size_t>      next{0};
      auto                          work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
          auto const& job = jobs[i];
          try {
            reports[i] = compare_regularity(entries[job.a].monoid, entries[job.b].monoid, job.kind, opts);
          } catch (std::exception const& e) {
            failures[i] = e.what();
          }
        }
      };
      unsigned const         n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(work);
      }
      work();
      for (auto& t : pool) {
        t.join();
      }
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!failures[i].empty()) {
          throw Error(fmt::format("{} x {}: {}", entries[jobs[i].a].name, entries[jobs[i].b].name, failures[i]));
        }
      }

      std::string summary = summary_header() + "\n";
      std::size_t agreed  = 0;
      std::size_t decided = 0;
      for (auto const& r : reports) {
        summary += summary_line(r) + "\n";
        if (r.agree) {
          ++decided;
          agreed += *r.agree;
        }
      }
      if (out_dir) {
        fs::path const dir(*out_dir);
        fs::create_directories(dir / "reports");
        for (auto const& r : reports) {
          auto const name = fmt::format("{}__{}__{}.json", file_safe(r.left_label), file_safe(r.right_label),
                                        to_string(r.kind));
          write_file_atomic(dir / "reports" / name, report_document(r));
        }
        write_file_atomic(dir / "summary.csv", summary);
      }
      out << summary;
      fmt::print(out, "instances: {}  agree: {}/{}\n", reports.size(), agreed, decided);
      return agreed == decided ? kOk : kViolation;
    }

    int do_catalog(std::optional<std::size_t> order,
                   bool                       labeled,
                   bool                       count_only,
                   std::optional<std::string> out_dir,
                   std::ostream&              out) {
      std::vector<CatalogEntry> entries;
      if (!order) {
        entries = named_catalog();
      } else if (labeled) {
        for (auto const& m : enumerate_monoids(*order, false)) {
          entries.push_back(make_entry(m.label(), m));
        }
      } else {
        entries = catalog_up_to(*order);
        std::erase_if(entries, [&](CatalogEntry const& e) { return e.monoid.order() != *order; });
      }
      if (count_only) {
        fmt::print(out, "{}\n", entries.size());
        return kOk;
      }
      std::string index;
      for (auto const& e : entries) {
        index += fmt::format("{} {} {}\n", e.name, e.monoid.order(), e.regular ? "regular" : "non_regular");
      }
      if (out_dir) {
        fs::path const dir(*out_dir);
        fs::create_directories(dir);
        for (auto const& e : entries) {
          write_file_atomic(dir / (file_safe(e.name) + ".mon"), format_monoid(e.monoid));
        }
        write_file_atomic(dir / "index.txt", index);
      }
      for (auto const& e : entries) {
        fmt::print(out, "{:<16} order={} regular={} group={} commutative={} idempotents={}\n", e.name,
                   e.monoid.order(), e.regular ? "yes" : "no", e.group ? "yes" : "no",
                   e.commutative ? "yes" : "no", e.idempotent_count);
      }
      return kOk;
    }

  }  // namespace

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite monoid workbench: products, regularity, theorem checks"};
    app.name("monoidlab");
    app.require_subcommand(1);

    Globals g;
    app.add_option("--cap", g.cap, "Largest carrier the brute-force phase will scan")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for sampled associativity checks")->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--isa", g.isa, "Kernel flavour")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    std::vector<std::string> operands;

    auto* validate = app.add_subcommand("validate", "Parse and validate a monoid");
    validate->add_option("monoid", operands)->required();

    auto* info = app.add_subcommand("info", "Order, identity, idempotents and inverse sets");
    info->add_option("monoid", operands)->required();

    std::string                kind = "direct";
    std::optional<std::string> action_file;
    std::optional<std::string> out_path;
    auto* product = app.add_subcommand("product", "Build a product monoid and write it out");
    product->add_option("--kind", kind)->check(
        CLI::IsMember({"direct", "semidirect", "wreath", "power", "schutz", "variant"}));
    product->add_option("--action", action_file, ".act file for a semidirect product");
    product->add_option("--out", out_path, "Output .mon path; a .dec sidecar is written beside it");
    product->add_option("operands", operands, "A=spec B=spec")->required();

    std::optional<std::string> reg_product;
    auto* regular = app.add_subcommand("regular", "Brute-force regularity of a monoid or a product");
    regular->add_option("--product", reg_product)
        ->check(CLI::IsMember({"direct", "wreath", "power", "schutz", "variant"}));
    regular->add_option("operands", operands)->required();

    int  which   = 1;
    bool compare = false;
    auto* theorem = app.add_subcommand("theorem", "Check the regularity conditions for A<>B or A<>vB");
    theorem->add_option("--which", which)->check(CLI::IsMember({1, 2}));
    theorem->add_flag("--compare", compare, "Also run the brute-force oracle and compare");
    theorem->add_option("--out", out_path, "Write the JSON document here");
    theorem->add_option("operands", operands, "A=spec B=spec")->required();

    std::size_t                max_order = 2;
    std::string                sweep_kind = "both";
    unsigned                   workers    = 1;
    auto* sweep = app.add_subcommand("sweep", "Compare oracle and theorems over all catalog pairs");
    sweep->add_option("--max-order", max_order)->capture_default_str();
    sweep->add_option("--kind", sweep_kind)->check(CLI::IsMember({"schutz", "variant", "both"}));
    sweep->add_option("--out", out_path, "Directory for reports and summary.csv");
    sweep->add_option("--workers", workers)->capture_default_str();

    std::optional<std::size_t> cat_order;
    bool                       labeled    = false;
    bool                       count_only = false;
    auto* catalog = app.add_subcommand("catalog", "List or export named and enumerated monoids");
    catalog->add_option("--order", cat_order, "Enumerate monoids of this order (1..4)");
    catalog->add_flag("--labeled", labeled, "All labeled tables instead of one per class");
    catalog->add_flag("--count", count_only, "Print only the number of entries");
    catalog->add_option("--out", out_path, "Export .mon files and index.txt here");

    std::vector<char const*> argv{"monoidlab"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kOk : kBadInput;
    }

    struct IsaReset {
      ~IsaReset() {
        simd::reset_isa();
      }
    } const isa_reset;
    try {
      if (g.isa == "scalar") {
        simd::force_isa(simd::Isa::scalar);
      } else if (g.isa == "avx2") {
        simd::force_isa(simd::Isa::avx2);
      }
      Operands const ops(operands);
      if (*validate) {
        return do_validate(ops, out, err);
      }
      if (*info) {
        return do_info(ops, g, out);
      }
      if (*product) {
        return do_product(kind, ops, action_file, out_path, g, out);
      }
      if (*regular) {
        return do_regular(reg_product, ops, g, out);
      }
      if (*theorem) {
        return do_theorem(which, compare, ops, out_path, g, out);
      }
      if (*sweep) {
        return do_sweep(max_order, sweep_kind, out_path, workers, g, out);
      }
      if (*catalog) {
        return do_catalog(cat_order, labeled, count_only, out_path, out);
      }
    } catch (std::exception const& e) {
      fmt::print(err, "error: {}\n", e.what());
      return kBadInput;
    }
    return kBadInput;
  }

}  // namespace monoidlab::cli
