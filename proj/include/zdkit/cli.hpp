// Command-line front end. run_cli() is the whole program; main() only forwards.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zdkit/zdkit.hpp"
#include "zdkit/reproduce.hpp"

#ifndef ZDKIT_FIXTURE_DIR
#define ZDKIT_FIXTURE_DIR "fixtures"
#endif

namespace zdkit {

namespace cli {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Json set_json(const std::set<std::uint64_t>& s) { return Json(std::vector<std::uint64_t>(s.begin(), s.end())); }

/// "3^2,5" or "3:2,5" -> [(3,2),(5,1)]
inline std::vector<PrimePower> parse_factors(const std::string& text) {
  std::vector<PrimePower> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto sep = item.find_first_of("^:");
    try {
      std::size_t used = 0;
      PrimePower pp;
      pp.p = std::stoull(item.substr(0, sep), &used);
      if (used != (sep == std::string::npos ? item.size() : sep)) throw std::invalid_argument(item);
      if (sep != std::string::npos) {
        const std::string r = item.substr(sep + 1);
        pp.r = static_cast<std::uint32_t>(std::stoul(r, &used));
        if (used != r.size()) throw std::invalid_argument(item);
      }
      out.push_back(pp);
    } catch (const std::logic_error&) {
      throw UsageError("invalid factor \"" + item + "\" (expected p or p^r)");
    }
  }
  if (out.empty()) throw UsageError("--factors needs at least one prime power");
  return out;
}

inline Json classification_json(const Classification& c) {
  Json j{{"zdb", c.is_zdb}};
  j["type_a"] = c.type_a ? Json(*c.type_a) : Json(nullptr);
  j["type_b"] = c.type_b ? Json(*c.type_b) : Json(nullptr);
  j["almost_balanced"] = c.is_ab;
  return j;
}

inline Json spectrum_json(const FunctionTable& f, const ZDSpectrum& sp, const PreimageStats& st, bool full) {
  Json j{{"n", f.n()},
         {"m", f.m()},
         {"S", set_json(sp.S)},
         {"lambda", sp.lambda_max},
         {"mu", sp.lambda_min},
         {"lambda_bar", to_fraction_string(sp.lambda_bar)},
         {"preimage_sizes", st.multiset()},
         {"b0", st.b0}};
  j["classification"] = classification_json(classify(f, sp, st));
  if (full) j["lambda_by_difference"] = std::vector<std::uint64_t>(sp.lambda.begin() + 1, sp.lambda.end());
  return j;
}

inline Json identities_json(const IdentityReport& r) {
  return Json{{"sum_r_r_minus_1", r.sum_r_r_minus_1.str()},
              {"sum_lambda", r.sum_lambda.str()},
              {"counting_identity", r.counting_identity},
              {"sum_r_squared", r.sum_r_squared.str()},
              {"square_identity", r.square_identity},
              {"C", to_fraction_string(r.C)},
              {"max_bound", r.max_bound.str()},
              {"max_bound_holds", r.max_bound_holds},
              {"mean_bound_holds", r.mean_bound_holds},
              {"mean_bound_tight", r.mean_bound_tight},
              {"tightness_matches_ab", r.tightness_matches_ab},
              {"delta_extremes", r.delta_extremes.str()},
              {"delta_mean", to_fraction_string(r.delta_mean)},
              {"preimage_range_extremes", r.preimage_range_extremes},
              {"preimage_range_mean", r.preimage_range_mean},
              {"all_ok", r.all_ok()}};
}

inline Json bound_json(const BoundCertificate& b) {
  return Json{{"bound", b.bound ? Json(to_fraction_string(*b.bound)) : Json("inapplicable")}, {"optimal", b.optimal}};
}

inline Json code_report(const Code& c, const std::optional<FunctionTable>& source) {
  Json j = code_metrics_json(c);
  if (c.constant_weight) j["cwc"] = bound_json(cwc_certify(c.n, c.d, c.weight(), c.q, c.size()));
  if (c.constant_composition) j["ccc"] = bound_json(ccc_bound(c.n, c.d, c.compositions.front(), c.size()));
  if (source) {
    const auto sp = zd_spectrum(*source);
    const auto st = preimage_stats(*source);
    j["d_equals_n_minus_lambda"] = c.d == c.n - sp.lambda_max;
    j["zd_optimality"] = zd_cwc_optimality(c.n, c.q, sp.lambda_max, st.r[c.zero_label]);
  }
  return j;
}

inline Json dss_report(const DSS& d, std::optional<DssCertificate> cert) {
  Json j{{"group", ring_to_json(d.group)}, {"n", d.n},       {"q", d.q},
         {"w", d.w},                   {"tau", d.tau},   {"rho", d.rho},
         {"perfect", d.perfect}};
  if (d.q >= 2) {
    const auto bound = dss_bound(d.n, d.q, d.rho);
    j["bound"] = bound;
    j["optimal"] = d.tau == bound;
  }
  if (cert) {
    Json c{{"side_condition_n_ge_m_lambda", cert->side_condition},
           {"optimal_iff", cert->optimal_iff},
           {"bound_agrees", cert->bound_agrees}};
    c["sufficient_improved"] = cert->sufficient_improved ? Json(*cert->sufficient_improved) : Json(nullptr);
    j["certificate"] = c;
  }
  return j;
}

inline Json fhs_report(const FHS& s) {
  Json j = fhs_to_json(s)["certificate"];
  if (s.alpha) j["alpha"] = s.alpha->index;
  return j;
}

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
    return "[" + out + "]";
  }
  return v.dump();
}

inline void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << it.key() << ":\n";
      for (const auto& row : v) {
        std::string line;
        for (auto r = row.begin(); r != row.end(); ++r) line += (line.empty() ? "" : "  ") + scalar_text(r.value());
        out << indent << "  " << line << "\n";
      }
    } else {
      out << indent << it.key() << ": " << scalar_text(v) << "\n";
    }
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + path);
  f << text;
}

inline std::uint64_t max_order_from_env() {
  const char* v = std::getenv("ZDKIT_MAX_ORDER");
  if (!v || !*v) return kDefaultMaxOrder;
  try {
    std::size_t used = 0;
    const auto x = std::stoull(v, &used);
    if (used != std::string(v).size() || x == 0) throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    throw UsageError(std::string("ZDKIT_MAX_ORDER must be a positive integer, got \"") + v + "\"");
  }
}

inline FunctionTable load_table(const std::string& path, std::uint64_t max_order) {
  return table_from_json(read_json_file(path), max_order);
}

inline bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

/// Accepts arbitrary labels when "m" is absent; a present "m" means strict.
inline FunctionTable import_table(const Json& doc, std::uint64_t max_order) {
  if (doc.is_object() && doc.contains("m")) return table_from_json(doc, max_order);
  Ring ring = Ring::make(ring_from_json(detail::field(doc, "group")), max_order);
  auto raw = detail::uint_array(detail::field(doc, "values"), "values");
  if (raw.size() != ring.order()) {
    throw DomainError("table has " + std::to_string(raw.size()) + " values but " + ring.name() + " has order " +
                      std::to_string(ring.order()));
  }
  return FunctionTable::from_labels(std::move(ring), raw);
}

}  // namespace cli

/// Runs one command; returns 0 on success, 1 on domain errors, 2 on usage errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zdkit: zero-difference functions and the codes, DSSs and sequences built from them", "zdkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  std::string format = "json";
  std::string fixtures = ZDKIT_FIXTURE_DIR;
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--fixtures", fixtures, "fixture directory");

  // construct
  auto* construct = app.add_subcommand("construct", "coset ZDB function from a parameter family");
  std::string family;
  std::uint64_t n = 0, e = 0;
  std::string factors, out_path;
  bool print_table = false;
  construct->add_option("--family", family, "zn or product-fields")
      ->required()
      ->check(CLI::IsMember({"zn", "product-fields"}));
  construct->add_option("--n", n, "ring order (zn, or product-fields from its factorization)");
  construct->add_option("--factors", factors, "field orders, e.g. 3^2,5");
  construct->add_option("--e", e, "subgroup order")->required();
  construct->add_option("--out", out_path, "write the table JSON here");
  construct->add_flag("--print-table", print_table, "embed the table in the report");

  // change-point
  auto* change = app.add_subcommand("change-point", "redefine a Type-A ZDB function at its singleton point");
  std::string in_path;
  std::optional<std::uint32_t> a0_opt, a_opt;
  bool prefer_empty_d = false;
  change->add_option("--in", in_path, "table JSON")->required();
  change->add_option("--a0", a0_opt, "singleton point (default: the smallest singleton)");
  change->add_option("--a", a_opt, "target point (default: 1 when a0 = 0, else the smallest outside a0's class)");
  change->add_flag("--prefer-empty-d", prefer_empty_d, "default a: the first class with empty D");
  change->add_option("--out", out_path, "write the new table JSON here");
  change->add_flag("--print-table", print_table, "embed the table in the report");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "zero-difference spectrum, classification and identities");
  bool full = false;
  spectrum->add_option("--in", in_path, "table JSON")->required();
  spectrum->add_flag("--full", full, "list lambda for every nonzero difference");

  // code
  auto* code = app.add_subcommand("code", "cyclic-shift code of a table");
  std::optional<std::uint32_t> zero_label;
  bool emit = false;
  code->add_option("--in", in_path, "table JSON")->required();
  code->add_option("--zero-label", zero_label, "symbol that does not count toward weight (default 0)");
  code->add_flag("--emit", emit, "print the codewords instead of the report");
  code->add_option("--out", out_path, "with --emit, write the codewords here");

  // dss
  auto* dss = app.add_subcommand("dss", "difference system of sets from the preimages of a table");
  bool emit_blocks = false;
  dss->add_option("--in", in_path, "table JSON")->required();
  dss->add_flag("--emit", emit_blocks, "print the DSS document instead of the report");

  // fhs
  auto* fhs = app.add_subcommand("fhs", "frequency-hopping sequence along a cyclic generator");
  std::optional<std::uint32_t> alpha;
  fhs->add_option("--in", in_path, "table JSON")->required();
  fhs->add_option("--alpha", alpha, "generator index (default: smallest generator)");
  fhs->add_flag("--emit", emit, "print the sequence instead of the report");

  // verify
  auto* verify = app.add_subcommand("verify", "metrics of an external code, DSS or sequence");
  std::string kind;
  std::optional<std::uint32_t> q_opt;
  verify->add_option("--kind", kind, "code, dss or fhs")->required()->check(CLI::IsMember({"code", "dss", "fhs"}));
  verify->add_option("--in", in_path, "data file")->required();
  verify->add_option("--q", q_opt, "alphabet size for codes (default: largest symbol + 1)");
  verify->add_option("--zero-label", zero_label, "zero symbol for code weights (default 0)");

  // import / export
  auto* import = app.add_subcommand("import", "validate a table document, compacting labels if m is absent");
  import->add_option("--in", in_path, "document")->required();
  import->add_option("--out", out_path, "write the canonical table here");
  auto* exp = app.add_subcommand("export", "re-emit a table in canonical form");
  std::string as = "table";
  exp->add_option("--in", in_path, "table JSON")->required();
  exp->add_option("--out", out_path, "output file (default stdout)");
  exp->add_option("--as", as, "table or sequence")->check(CLI::IsMember({"table", "sequence"}));

  // reproduce
  auto* reproduce_cmd = app.add_subcommand("reproduce", "re-derive worked examples and table rows");
  std::string target = "examples";
  std::uint64_t n_limit = 64;
  reproduce_cmd->add_option("--target", target, "examples, table-cwc, table-dss, table-fhs or all")
      ->check(CLI::IsMember({"examples", "table-cwc", "table-dss", "table-fhs", "all"}));
  reproduce_cmd->add_option("--n-limit", n_limit, "largest instance order")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return cli::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return cli::kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return cli::kUsageError;
  }

  auto emit_report = [&](const Json& report) {
    if (format == "json") {
      out << report.dump(2) << "\n";
    } else {
      cli::render_text(report, out);
    }
  };

  try {
    const std::uint64_t max_order = cli::max_order_from_env();
    Json report;
    if (*construct) {
      std::optional<CosetZdb> z;
      if (family == "zn") {
        if (!n) throw cli::UsageError("--family zn needs --n");
        report = Json{{"command", "construct"}, {"family", "zn"}, {"n", n}, {"e", e}};
        z = family_zn(n, e, max_order);
      } else {
        std::vector<PrimePower> fs;
        if (!factors.empty()) {
          fs = cli::parse_factors(factors);
        } else if (n) {
          fs = prime_power_factors(n);
        } else {
          throw cli::UsageError("--family product-fields needs --factors or --n");
        }
        report = Json{{"command", "construct"}, {"family", "product-fields"}, {"e", e}};
        z = family_product_fields(fs, e, max_order);
      }
      const FunctionTable& f = z->table;
      const auto sp = zd_spectrum(f);
      const auto st = preimage_stats(f);
      check_identities(f, sp, st);
      report["ring"] = f.domain().name();
      std::vector<std::uint32_t> gens;
      for (Element x : z->group.elements) gens.push_back(x.index);
      report["subgroup"] = gens;
      report["minus_one_in_subgroup"] = contains_minus_one(f.domain(), z->group);
      report["parameters"] = "(" + std::to_string(f.n()) + "," + std::to_string(f.m()) + "," +
                             std::to_string(sp.lambda_max) + ")";
      report["spectrum"] = cli::spectrum_json(f, sp, st, false);
      if (!out_path.empty()) {
        cli::write_text_file(out_path, table_to_json(f).dump() + "\n");
        report["written"] = out_path;
      }
      if (print_table) report["table"] = table_to_json(f);
    } else if (*change) {
      const FunctionTable f = cli::load_table(in_path, max_order);
      const auto st = preimage_stats(f);
      Element a0;
      if (a0_opt) {
        a0 = f.domain().element(*a0_opt);
      } else {
        bool found = false;
        for (std::uint32_t x = 0; x < f.n() && !found; ++x) {
          if (st.r[f.values()[x]] == 1) {
            a0 = Element{x};
            found = true;
          }
        }
        if (!found) throw DomainError("table has no singleton preimage");
      }
      Element a;
      if (a_opt) {
        a = f.domain().element(*a_opt);
      } else if (prefer_empty_d) {
        auto pick = find_empty_d_point(f, a0);
        if (!pick) throw DomainError("no class with empty D");
        a = *pick;
      } else if (a0 == f.domain().zero() && f(f.domain().one()) != f(a0)) {
        a = f.domain().one();
      } else {
        std::uint32_t x = 0;
        while (x < f.n() && f.values()[x] == f(a0)) ++x;
        if (x == f.n()) throw DomainError("table is constant");
        a = Element{x};
      }
      const ChangePointResult r = change_point_general(f, a0, a);
      const auto st2 = preimage_stats(r.table);
      check_identities(r.table, r.spectrum, st2);
      std::vector<std::uint32_t> d_idx, e_idx;
      for (Element x : r.D) d_idx.push_back(x.index);
      report = Json{{"command", "change-point"},
                    {"ring", f.domain().name()},
                    {"a0", a0.index},
                    {"a", a.index},
                    {"k", r.k},
                    {"D", d_idx},
                    {"E_size", r.E.size()},
                    {"case", std::string(to_string(r.case_id))},
                    {"predicted_S", cli::set_json(r.predicted_S)},
                    {"parameters", "(" + std::to_string(r.table.n()) + "," + std::to_string(r.table.m()) + "," +
                                       repro::set_str(r.spectrum.S) + ")"}};
      report["spectrum"] = cli::spectrum_json(r.table, r.spectrum, st2, false);
      if (!out_path.empty()) {
        cli::write_text_file(out_path, table_to_json(r.table).dump() + "\n");
        report["written"] = out_path;
      }
      if (print_table) report["table"] = table_to_json(r.table);
    } else if (*spectrum) {
      const FunctionTable f = cli::load_table(in_path, max_order);
      const auto sp = zd_spectrum(f);
      const auto st = preimage_stats(f);
      report = Json{{"command", "spectrum"}, {"ring", f.domain().name()}};
      report["spectrum"] = cli::spectrum_json(f, sp, st, full);
      report["identities"] = cli::identities_json(check_identities(f, sp, st));
    } else if (*code) {
      const FunctionTable f = cli::load_table(in_path, max_order);
      const Code c = build_code(f, zero_label.value_or(0));
      if (emit) {
        const std::string text = format == "json" ? code_to_json(c).dump(2) + "\n" : code_to_text(c);
        if (out_path.empty()) {
          out << text;
        } else {
          cli::write_text_file(out_path, text);
        }
        return cli::kOk;
      }
      report = Json{{"command", "code"}, {"ring", f.domain().name()}};
      report["code"] = cli::code_report(c, f);
      report["parameters"] = repro::code_str(c);
    } else if (*dss) {
      const FunctionTable f = cli::load_table(in_path, max_order);
      const DSS d = build_dss(f);
      if (emit_blocks) {
        out << dss_to_json(d).dump(2) << "\n";
        return cli::kOk;
      }
      const auto sp = zd_spectrum(f);
      std::optional<DssCertificate> cert;
      if (f.m() >= 2) {
        cert = dss_certify(f.n(), f.m(), sp.lambda_max,
                           sp.S.size() == 1 ? std::optional<std::uint64_t>(sp.lambda_max + 1) : std::nullopt);
      }
      report = Json{{"command", "dss"}};
      report["dss"] = cli::dss_report(d, cert);
      report["coverage_matches_spectrum"] = [&] {
        for (std::uint32_t g = 1; g < f.n(); ++g) {
          if (d.coverage[g] != f.n() - sp.lambda[g]) return false;
        }
        return true;
      }();
    } else if (*fhs) {
      const FunctionTable f = cli::load_table(in_path, max_order);
      std::optional<Element> al;
      if (alpha) al = Element{*alpha};
      const FHS s = build_fhs(f, al);
      if (emit) {
        out << (format == "json" ? Json{{"values", s.values}}.dump() : sequence_to_text(s.values)) << "\n";
        return cli::kOk;
      }
      report = Json{{"command", "fhs"}, {"ring", f.domain().name()}};
      report["fhs"] = cli::fhs_report(s);
    } else if (*verify) {
      const std::string text = read_file(in_path);
      report = Json{{"command", "verify"}, {"kind", kind}};
      if (kind == "code") {
        std::vector<Word> words;
        std::optional<std::uint32_t> q = q_opt;
        if (cli::looks_like_json(text)) {
          const Json j = Json::parse(text);
          words = words_from_json(j);
          if (!q && j.contains("q")) q = j.at("q").get<std::uint32_t>();
        } else {
          words = words_from_text(text);
        }
        if (!q) {
          std::uint32_t top = 0;
          for (const auto& w : words) {
            for (auto s : w) top = std::max(top, s);
          }
          q = top + 1;
        }
        const Code c = verify_code(std::move(words), *q, zero_label.value_or(0));
        report["code"] = cli::code_report(c, std::nullopt);
        report["parameters"] = repro::code_str(c);
      } else if (kind == "dss") {
        const Json j = Json::parse(text);
        Ring group = Ring::make(ring_from_json(detail::field(j, "group")), max_order);
        report["dss"] = cli::dss_report(verify_dss(group, blocks_from_json(j)), std::nullopt);
      } else {
        std::vector<std::uint64_t> raw;
        if (cli::looks_like_json(text)) {
          raw = detail::uint_array(detail::field(Json::parse(text), "values"), "values");
        } else {
          raw = sequence_from_text(text);
        }
        report["fhs"] = cli::fhs_report(analyze_sequence(raw));
      }
    } else if (*import) {
      const FunctionTable f = cli::import_table(read_json_file(in_path), max_order);
      const std::string doc = table_to_json(f).dump() + "\n";
      if (out_path.empty()) {
        out << doc;
        return cli::kOk;
      }
      cli::write_text_file(out_path, doc);
      report = Json{{"command", "import"}, {"ring", f.domain().name()}, {"n", f.n()}, {"m", f.m()},
                    {"written", out_path}};
    } else if (*exp) {
      const FunctionTable f = cli::load_table(in_path, max_order);
      std::string doc;
      if (as == "table") {
        doc = table_to_json(f).dump() + "\n";
      } else {
        if (!f.domain().additive_generator()) throw DomainError("additive group is not cyclic");
        doc = sequence_to_text(build_fhs(f).values) + "\n";
      }
      if (out_path.empty()) {
        out << doc;
      } else {
        cli::write_text_file(out_path, doc);
      }
      return cli::kOk;
    } else if (*reproduce_cmd) {
      std::vector<std::string> targets;
      if (target == "all") {
        targets = reproduce_targets();
      } else {
        targets = {target};
      }
      report = Json{{"command", "reproduce"}, {"target", target}, {"n_limit", n_limit}};
      Json rows = Json::array();
      std::map<std::string, std::uint64_t> counts{{"PASS", 0}, {"FAIL", 0}, {"SKIP", 0}, {"DISCREPANCY", 0}};
      for (const auto& t : targets) {
        for (const auto& r : reproduce(t, n_limit, fixtures)) {
          rows.push_back(row_to_json(r));
          ++counts[r.status];
        }
      }
      report["rows"] = rows;
      report["summary"] = Json{{"PASS", counts["PASS"]},
                               {"FAIL", counts["FAIL"]},
                               {"SKIP", counts["SKIP"]},
                               {"DISCREPANCY", counts["DISCREPANCY"]}};
    }
    emit_report(report);
    return cli::kOk;
  } catch (const cli::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return cli::kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return cli::kDomainError;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return cli::kDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return cli::kDomainError;
  }
}

}  // namespace zdkit
