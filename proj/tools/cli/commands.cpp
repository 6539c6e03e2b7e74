#include "cli/commands.hpp"

#include <algorithm>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "cli/json_io.hpp"
#include "cli/verify.hpp"
#include "gw/error.hpp"
#include "gw/kontsevich.hpp"
#include "gw/quantum.hpp"
#include "gw/severi.hpp"

namespace gw::cli {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

namespace {

using Json = nlohmann::json;
using Row = std::vector<std::string>;

void write_rows(std::ostream& out, OutputFormat format, const Row& header,
                const std::vector<Row>& rows) {
  if (format == OutputFormat::Csv) {
    auto line = [&](const Row& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        out << (i ? "," : "") << r[i];
      }
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], r[i].size());
    }
  }
  auto line = [&](const Row& r) {
    std::string text;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) text += "  ";
      const std::string pad(width[i] - r[i].size(), ' ');
      text += i == 0 ? r[i] + pad : pad + r[i];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_ledger(std::ostream& out, OutputFormat format,
                  const severi::ComponentLedger& ledger) {
  if (format == OutputFormat::Json) {
    write_json(out, ledger);
    return;
  }
  std::vector<Row> rows;
  for (const auto& entry : ledger.entries()) {
    rows.push_back({entry.label, entry.value.str()});
  }
  rows.push_back({"total", ledger.total().str()});
  write_rows(out, format, {"component", "value"}, rows);
}

std::shared_ptr<const severi::AuxProvider> resolve_aux(
    const std::string& aux_file) {
  if (aux_file.empty()) return severi::paper_aux();
  auto table = std::make_shared<const severi::TableAuxProvider>(
      severi::load_aux_table(aux_file));
  return std::make_shared<const severi::LayeredAuxProvider>(
      std::move(table), severi::paper_aux());
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

int cmd_nd(int max_degree, bool show_split, OutputFormat format,
           std::ostream& out) {
  require(max_degree >= 1, "nd: --max must be >= 1");
  const NdTable table = kontsevich_table(max_degree);
  if (format == OutputFormat::Json) {
    Json rows = Json::array();
    for (int d = 1; d <= max_degree; ++d) {
      Json row = {{"d", d}, {"n", integer_json(table.at(d))}};
      if (show_split && d >= 2) {
        row["f"] = integer_json(f_sum(d, table));
        row["g"] = integer_json(g_sum(d, table));
      }
      rows.push_back(std::move(row));
    }
    write_json(out, rows);
    return kExitOk;
  }
  Row header = {"d", "n"};
  if (show_split) header.insert(header.end(), {"f", "g"});
  std::vector<Row> rows;
  for (int d = 1; d <= max_degree; ++d) {
    Row row = {std::to_string(d), table.at(d).str()};
    if (show_split) {
      row.push_back(d >= 2 ? f_sum(d, table).str() : "");
      row.push_back(d >= 2 ? g_sum(d, table).str() : "");
    }
    rows.push_back(std::move(row));
  }
  write_rows(out, format, header, rows);
  return kExitOk;
}

int cmd_roberts(int max_degree, OutputFormat format, std::ostream& out) {
  require(max_degree >= 3, "severi roberts: --max must be >= 3");
  if (format == OutputFormat::Json) {
    Json rows = Json::array();
    for (int d = 3; d <= max_degree; ++d) {
      rows.push_back(
          {{"d", d}, {"n", integer_json(severi::roberts_closed(d))}});
    }
    write_json(out, rows);
    return kExitOk;
  }
  std::vector<Row> rows;
  for (int d = 3; d <= max_degree; ++d) {
    rows.push_back({std::to_string(d), severi::roberts_closed(d).str()});
  }
  write_rows(out, format, {"d", "N_d_2"}, rows);
  return kExitOk;
}

int cmd_components(int d, OutputFormat format, std::ostream& out) {
  write_ledger(out, format, severi::delta2_components(d));
  return kExitOk;
}

Row term_row(const severi::SplitTerm& t) {
  return {t.pi.to_string(),      t.pi_free.to_string(),
          t.pi_fixed_top.to_string(), std::to_string(t.delta1),
          std::to_string(t.delta2),   t.m_outer.str(),
          t.m_comp.str(),             t.n_comp.str(),
          t.placement.str(),          t.aux.to_string(),
          t.aux_value.str(),          t.product.str()};
}

int cmd_formula5(int d, int delta, const std::string& aux_file, bool ledger,
                 OutputFormat format, std::ostream& out) {
  const auto aux = resolve_aux(aux_file);
  const auto eval = severi::evaluate_formula5(d, delta, *aux);
  if (format == OutputFormat::Json) {
    Json j = {{"d", d},
              {"delta", delta},
              {"total", integer_json(eval.total)}};
    if (ledger) {
      j["terms"] = eval.terms;
      j["dropped"] = eval.dropped;
      j["components"] = severi::group_components(eval.terms);
    }
    write_json(out, j);
    return kExitOk;
  }
  if (ledger) {
    std::vector<Row> rows;
    for (const auto& t : eval.terms) rows.push_back(term_row(t));
    write_rows(out, format,
               {"pi", "pi_free", "pi_fixed", "delta1", "delta2", "m_pi",
                "m_fixed", "n_fixed", "placement", "aux", "aux_value",
                "product"},
               rows);
    if (format == OutputFormat::Table) {
      out << '\n';
      std::vector<Row> dropped;
      for (const auto& c : eval.dropped) {
        dropped.push_back({c.pi.to_string(), c.pi_free.to_string(),
                           std::to_string(c.delta1), std::to_string(c.delta2),
                           severi::to_string(c.reason)});
      }
      write_rows(out, format,
                 {"dropped_pi", "pi_free", "delta1", "delta2", "reason"},
                 dropped);
      out << '\n';
      write_ledger(out, format, severi::group_components(eval.terms));
    }
    return kExitOk;
  }
  write_rows(out, format, {"d", "delta", "N"},
             {{std::to_string(d), std::to_string(delta), eval.total.str()}});
  return kExitOk;
}

int cmd_quartics(const std::string& aux_file, OutputFormat format,
                 std::ostream& out) {
  const auto aux = resolve_aux(aux_file);
  const auto ledger = severi::quartic_components(*aux);
  const Integer reducible = binomial(11, 2);
  const Integer irreducible = severi::irreducible_rational_quartics(*aux);
  if (format == OutputFormat::Json) {
    Json j = ledger;
    j["cubic_plus_line"] = integer_json(reducible);
    j["irreducible"] = integer_json(irreducible);
    write_json(out, j);
    return kExitOk;
  }
  std::vector<Row> rows;
  for (const auto& entry : ledger.entries()) {
    rows.push_back({entry.label, entry.value.str()});
  }
  rows.push_back({"total", ledger.total().str()});
  rows.push_back({"cubic_plus_line", reducible.str()});
  rows.push_back({"irreducible", irreducible.str()});
  write_rows(out, format, {"component", "value"}, rows);
  return kExitOk;
}

int cmd_fourpoint(int d, const std::string& pairs, std::optional<int> points,
                  bool no_degenerate, OutputFormat format, std::ostream& out) {
  const auto grouping = quantum::PairGrouping::parse(pairs);
  require(grouping.has_value(),
          "quantum fourpoint: --pairs must look like pp,ll or pl,pl");
  require(d >= 1, "quantum fourpoint: --d must be >= 1");
  const int n = points.value_or(3 * d - 4);
  require(n >= 0, "quantum fourpoint: point count must be >= 0");
  const NdTable table = kontsevich_table(d);
  const Integer value =
      quantum::four_point_sum(d, n, *grouping, table, !no_degenerate);
  if (format == OutputFormat::Json) {
    write_json(out, {{"d", d},
                     {"grouping", grouping->name()},
                     {"value", integer_json(value)}});
    return kExitOk;
  }
  write_rows(out, format, {"d", "grouping", "value"},
             {{std::to_string(d), grouping->name(), value.str()}});
  return kExitOk;
}

int cmd_wdvv(int max_degree, OutputFormat format, std::ostream& out) {
  require(max_degree >= 2, "quantum wdvv: --max must be >= 2");
  const NdTable table = kontsevich_table(max_degree);
  bool all_zero = true;
  Json json_rows = Json::array();
  std::vector<Row> rows;
  for (int d = 2; d <= max_degree; ++d) {
    const Integer r = quantum::wdvv_residual(d, table);
    all_zero = all_zero && r == 0;
    json_rows.push_back({{"d", d}, {"residual", integer_json(r)}});
    rows.push_back({std::to_string(d), r.str()});
  }
  if (format == OutputFormat::Json) {
    write_json(out, json_rows);
  } else {
    write_rows(out, format, {"d", "residual"}, rows);
  }
  return all_zero ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(int max_degree, const std::string& aux_file,
               OutputFormat format, std::ostream& out) {
  require(max_degree >= 4, "verify: --max must be >= 4");
  VerifyOptions options{max_degree, resolve_aux(aux_file)};
  const auto results = run_verification(options);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const auto& r) { return r.passed; });
  if (format == OutputFormat::Json) {
    Json j = Json::array();
    for (const auto& r : results) {
      j.push_back(
          {{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    write_json(out, j);
  } else if (format == OutputFormat::Csv) {
    std::vector<Row> rows;
    for (const auto& r : results) {
      rows.push_back({r.passed ? "PASS" : "FAIL", r.name, r.detail});
    }
    write_rows(out, format, {"status", "check", "detail"}, rows);
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) out << ": " << r.detail;
      out << '\n';
    }
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact plane-curve counts: Severi degrees and Gromov-Witten "
               "invariants of the plane",
               "gw"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::function<int(OutputFormat)> action;

  int nd_max = 0;
  bool nd_split = false;
  auto* nd = app.add_subcommand("nd", "Rational curve counts n_d");
  nd->add_option("--max", nd_max, "Largest degree")->required();
  nd->add_flag("--split", nd_split, "Also print f and g");
  nd->callback([&] {
    action = [&](OutputFormat f) { return cmd_nd(nd_max, nd_split, f, out); };
  });

  auto* sev = app.add_subcommand("severi", "Nodal curve counts N_{d,delta}");
  sev->require_subcommand(1);

  int roberts_max = 0;
  auto* roberts = sev->add_subcommand("roberts", "N_{d,2} for 3 <= d <= max");
  roberts->add_option("--max", roberts_max, "Largest degree")->required();
  roberts->callback([&] {
    action = [&](OutputFormat f) { return cmd_roberts(roberts_max, f, out); };
  });

  int comp_d = 0;
  auto* comps =
      sev->add_subcommand("components", "Limit components of N_{d,2}");
  comps->add_option("--d", comp_d, "Degree (>= 4)")->required();
  comps->callback([&] {
    action = [&](OutputFormat f) { return cmd_components(comp_d, f, out); };
  });

  int f5_d = 0;
  int f5_delta = 0;
  bool f5_ledger = false;
  std::string f5_aux;
  auto* f5 = sev->add_subcommand("formula5", "Evaluate the splitting formula");
  f5->add_option("--d", f5_d, "Degree")->required();
  f5->add_option("--delta", f5_delta, "Node count (< d)")->required();
  f5->add_option("--aux", f5_aux, "Aux table JSON, overlaid on built-ins");
  f5->add_flag("--ledger", f5_ledger, "Print every term and dropped candidate");
  f5->callback([&] {
    action = [&](OutputFormat f) {
      return cmd_formula5(f5_d, f5_delta, f5_aux, f5_ledger, f, out);
    };
  });

  std::string q_aux;
  auto* quartics =
      sev->add_subcommand("quartics", "N_{4,3} ledger and rational quartics");
  quartics->add_option("--aux", q_aux, "Aux table JSON, overlaid on built-ins");
  quartics->callback([&] {
    action = [&](OutputFormat f) { return cmd_quartics(q_aux, f, out); };
  });

  auto* qc = app.add_subcommand("quantum", "Four-point relation of the plane");
  qc->require_subcommand(1);

  int fp_d = 0;
  std::string fp_pairs;
  std::optional<int> fp_points;
  bool fp_no_degenerate = false;
  auto* fp = qc->add_subcommand("fourpoint", "Evaluate one grouping");
  fp->add_option("--d", fp_d, "Degree")->required();
  fp->add_option("--pairs", fp_pairs, "pp,ll or pl,pl")->required();
  fp->add_option("--points", fp_points, "Point insertions (default 3d-4)");
  fp->add_flag("--no-degenerate", fp_no_degenerate,
               "Skip splits with a degree-0 side");
  fp->callback([&] {
    action = [&](OutputFormat f) {
      return cmd_fourpoint(fp_d, fp_pairs, fp_points, fp_no_degenerate, f,
                           out);
    };
  });

  int wdvv_max = 0;
  auto* wdvv = qc->add_subcommand("wdvv", "Associativity residuals");
  wdvv->add_option("--max", wdvv_max, "Largest degree")->required();
  wdvv->callback([&] {
    action = [&](OutputFormat f) { return cmd_wdvv(wdvv_max, f, out); };
  });

  int verify_max = 8;
  std::string verify_aux;
  auto* verify = app.add_subcommand("verify", "Reproduce every known count");
  verify->add_option("--max", verify_max, "Degree range for cross checks");
  verify->add_option("--aux", verify_aux,
                     "Aux table JSON, overlaid on built-ins");
  verify->callback([&] {
    action = [&](OutputFormat f) {
      return cmd_verify(verify_max, verify_aux, f, out);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  const auto format = parse_format(format_name).value_or(OutputFormat::Table);
  try {
    return action(format);
  } catch (const severi::MissingAuxError& e) {
    err << "error: " << e.what() << '\n';
    err << Json(e.key()).dump() << '\n';
    return kExitMissingAux;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gw::cli
