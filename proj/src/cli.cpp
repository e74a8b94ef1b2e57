#include "skewsign/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <map>
#include <ostream>
#include <string>

#include "skewsign/cauchy.hpp"
#include "skewsign/dominoes.hpp"
#include "skewsign/errors.hpp"
#include "skewsign/identities.hpp"
#include "skewsign/report_json.hpp"
#include "skewsign/tableaux.hpp"

namespace skewsign {

namespace {

using nlohmann::json;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit(std::ostream& out, const std::string& format, const std::string& command,
          const json& inputs, const json& result, const CsvTable& csv,
          const std::vector<std::string>& plain) {
  if (format == "csv") {
    for (std::size_t i = 0; i < csv.header.size(); ++i)
      out << (i ? "," : "") << csv_escape(csv.header[i]);
    out << "\n";
    for (const auto& row : csv.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
      out << "\n";
    }
  } else if (format == "plain") {
    out << "command: " << command << "\n";
    for (const std::string& line : plain) out << line << "\n";
  } else {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["result"] = result;
    doc["version"] = std::string(kVersion);
    out << doc.dump(2) << "\n";
  }
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string cells_field(const StandardYoungTableau& t) {
  std::string out;
  const std::vector<Cell> cells = t.shape().cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(cells[i].row) + ":" + std::to_string(cells[i].col) + "=" +
           std::to_string(t.labels()[i]);
  }
  return out;
}

std::string dominoes_field(const std::vector<Domino>& dominoes) {
  std::string out;
  for (std::size_t i = 0; i < dominoes.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(dominoes[i].row) + ":" + std::to_string(dominoes[i].col) + ":" +
           (dominoes[i].orientation == Orientation::horizontal ? "h" : "v");
  }
  return out;
}

std::string exponents_field(const std::vector<int>& v) { return join_ints(v, " "); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact skew-shape sign-imbalance, domino-tableau, and Cauchy-kernel checks"};
  app.require_subcommand(1);

  int exit_code = 0;

  const auto add_format = [](CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "Output format: json, csv, or plain (default json)")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
  };

  // --- imbalance ---------------------------------------------------------
  auto* imb_cmd = app.add_subcommand("imbalance", "Sign-imbalance of a skew shape");
  std::string imb_shape, imb_format = "json";
  imb_cmd->add_option("--shape", imb_shape, "Shape OUTER/INNER, e.g. [3,2]/[1]")->required();
  add_format(imb_cmd, imb_format);
  imb_cmd->callback([&] {
    const SkewShape shape = SkewShape::parse(imb_shape);
    const long long value = imbalance(shape);
    emit(out, imb_format, "imbalance", json{{"shape", shape.to_string()}},
         json{{"shape", shape.to_string()}, {"imbalance", value}},
         CsvTable{{"shape", "imbalance"}, {{shape.to_string(), std::to_string(value)}}},
         {"shape: " + shape.to_string(), "imbalance: " + std::to_string(value)});
  });

  // --- syt ----------------------------------------------------------------
  auto* syt_cmd = app.add_subcommand("syt", "Enumerate standard Young tableaux of a skew shape");
  std::string syt_shape, syt_format = "json";
  syt_cmd->add_option("--shape", syt_shape, "Shape OUTER/INNER")->required();
  add_format(syt_cmd, syt_format);
  syt_cmd->callback([&] {
    const SkewShape shape = SkewShape::parse(syt_shape);
    json items = json::array();
    CsvTable csv{{"index", "word", "sign", "cells"}, {}};
    std::vector<std::string> plain{"shape: " + shape.to_string()};
    long long count = 0;
    for_each_syt(shape, [&](const StandardYoungTableau& t) {
      const int sign = permutation_sign(t.labels());
      json jt = to_json(t);
      jt["word"] = t.labels();
      jt["sign"] = sign;
      items.push_back(std::move(jt));
      csv.rows.push_back({std::to_string(count), join_ints(t.labels(), " "),
                          std::to_string(sign), cells_field(t)});
      plain.push_back("tableau " + std::to_string(count) + ": word=" +
                      join_ints(t.labels(), " ") + " sign=" + std::to_string(sign));
      ++count;
    });
    plain.insert(plain.begin() + 1, "count: " + std::to_string(count));
    emit(out, syt_format, "syt", json{{"shape", shape.to_string()}},
         json{{"shape", shape.to_string()}, {"count", count}, {"tableaux", items}}, csv, plain);
  });

  // --- dominoes -----------------------------------------------------------
  auto* dom_cmd =
      app.add_subcommand("dominoes", "Enumerate standard domino tableaux with their statistics");
  std::string dom_shape, dom_format = "json";
  dom_cmd->add_option("--shape", dom_shape, "Shape OUTER/INNER")->required();
  add_format(dom_cmd, dom_format);
  dom_cmd->callback([&] {
    const SkewShape shape = SkewShape::parse(dom_shape);
    json items = json::array();
    CsvTable csv{{"index", "sign", "vertical_count", "nv", "bv", "dominoes"}, {}};
    std::vector<std::string> plain{"shape: " + shape.to_string()};
    long long count = 0;
    GaussianInt total{0, 0};
    for_each_sdt(shape, [&](const StandardDominoTableau& d) {
      const int sign = sign_domino(d);
      const int verticals = vertical_count(d);
      const auto [nice, bad] = nice_and_bad_counts(d);
      total = total + GaussianInt::unit_power(verticals);
      json jd = to_json(d);
      jd["sign"] = sign;
      jd["vertical_count"] = verticals;
      jd["nv"] = nice;
      jd["bv"] = bad;
      items.push_back(std::move(jd));
      csv.rows.push_back({std::to_string(count), std::to_string(sign), std::to_string(verticals),
                          std::to_string(nice), std::to_string(bad),
                          dominoes_field(d.dominoes())});
      plain.push_back("tableau " + std::to_string(count) + ": dominoes=" +
                      dominoes_field(d.dominoes()) + " sign=" + std::to_string(sign) +
                      " vertical_count=" + std::to_string(verticals) + " nv=" +
                      std::to_string(nice) + " bv=" + std::to_string(bad));
      ++count;
    });
    plain.insert(plain.begin() + 1, "count: " + std::to_string(count));
    plain.push_back("spin_sum: " + std::to_string(total.re) + (total.im < 0 ? "" : "+") +
                    std::to_string(total.im) + "i");
    emit(out, dom_format, "dominoes", json{{"shape", shape.to_string()}},
         json{{"shape", shape.to_string()},
              {"count", count},
              {"spin_sum", to_json(total)},
              {"tableaux", items}},
         csv, plain);
  });

  // --- tilings ------------------------------------------------------------
  auto* til_cmd = app.add_subcommand("tilings", "Enumerate domino tilings of a skew shape");
  std::string til_shape, til_format = "json";
  bool til_flip_graph = false;
  til_cmd->add_option("--shape", til_shape, "Shape OUTER/INNER")->required();
  til_cmd->add_flag("--flip-graph", til_flip_graph, "Also analyze the flip graph");
  add_format(til_cmd, til_format);
  til_cmd->callback([&] {
    const SkewShape shape = SkewShape::parse(til_shape);
    json items = json::array();
    CsvTable csv{{"index", "dominoes", "nice_minus_bad"}, {}};
    std::vector<std::string> plain{"shape: " + shape.to_string()};
    long long count = 0;
    for_each_tiling(shape, [&](const DominoTiling& t) {
      json jt = to_json(t);
      jt["nice_minus_bad"] = nice_minus_bad(t);
      items.push_back(std::move(jt));
      csv.rows.push_back({std::to_string(count), dominoes_field(t.dominoes()),
                          std::to_string(nice_minus_bad(t))});
      plain.push_back("tiling " + std::to_string(count) + ": " + dominoes_field(t.dominoes()) +
                      " nv-bv=" + std::to_string(nice_minus_bad(t)));
      ++count;
    });
    plain.insert(plain.begin() + 1, "count: " + std::to_string(count));
    json result{{"shape", shape.to_string()}, {"count", count}, {"tilings", items}};
    if (til_flip_graph) {
      if (count == 0) {
        result["flip_graph"] = nullptr;
        plain.push_back("flip_graph: none (shape has no tiling)");
      } else {
        const FlipGraphSummary fg = flip_graph_summary(shape);
        result["flip_graph"] = json{{"nodes", fg.tiling_count},
                                    {"edges", fg.edge_count},
                                    {"components", fg.component_count},
                                    {"connected", fg.connected}};
        plain.push_back("flip_graph: nodes=" + std::to_string(fg.tiling_count) + " edges=" +
                        std::to_string(fg.edge_count) + " components=" +
                        std::to_string(fg.component_count) + " connected=" +
                        (fg.connected ? "true" : "false"));
      }
    }
    emit(out, til_format, "tilings",
         json{{"shape", shape.to_string()}, {"flip_graph", til_flip_graph}}, result, csv, plain);
  });

  // --- check-prop ---------------------------------------------------------
  auto* prop_cmd = app.add_subcommand(
      "check-prop", "Check the squared-imbalance identity for one even-size skew shape");
  std::string prop_shape, prop_format = "json";
  prop_cmd->add_option("--shape", prop_shape, "Shape OUTER/INNER with an even cell count")
      ->required();
  add_format(prop_cmd, prop_format);
  prop_cmd->callback([&] {
    const PropositionReport rep = check_proposition(SkewShape::parse(prop_shape));
    exit_code = rep.equal ? 0 : 1;
    CsvTable csv{{"shape", "imbalance", "imbalance_squared", "rhs_value", "equal", "sum_sign",
                  "sum_nv_sign", "spin_re", "spin_im", "v_outer", "v_inner", "v_prime",
                  "tileable"},
                 {{rep.shape.to_string(), std::to_string(rep.imbalance),
                   std::to_string(rep.imbalance_squared), std::to_string(rep.rhs_value),
                   rep.equal ? "true" : "false", std::to_string(rep.sum_sign),
                   std::to_string(rep.sum_nv_sign), std::to_string(rep.spin_sum.re),
                   std::to_string(rep.spin_sum.im), std::to_string(rep.v_outer),
                   std::to_string(rep.v_inner), std::to_string(rep.v_prime),
                   rep.tileable ? "true" : "false"}}};
    std::vector<std::string> plain{
        "shape: " + rep.shape.to_string(),
        "imbalance: " + std::to_string(rep.imbalance),
        "imbalance_squared: " + std::to_string(rep.imbalance_squared),
        "rhs_value: " + std::to_string(rep.rhs_value),
        "equal: " + std::string(rep.equal ? "true" : "false"),
        "sum_sign: " + std::to_string(rep.sum_sign),
        "sum_nv_sign: " + std::to_string(rep.sum_nv_sign),
        "spin_sum: " + std::to_string(rep.spin_sum.re) + (rep.spin_sum.im < 0 ? "" : "+") +
            std::to_string(rep.spin_sum.im) + "i",
        "v_outer: " + std::to_string(rep.v_outer),
        "v_inner: " + std::to_string(rep.v_inner),
        "v_prime: " + std::to_string(rep.v_prime),
        "tileable: " + std::string(rep.tileable ? "true" : "false")};
    emit(out, prop_format, "check-prop", json{{"shape", rep.shape.to_string()}}, to_json(rep),
         csv, plain);
  });

  // --- verify-theorem1 ----------------------------------------------------
  auto* thm_cmd = app.add_subcommand(
      "verify-theorem1", "Check the signed sum of squared imbalances over extensions of alpha");
  std::string thm_alpha, thm_format = "json";
  int thm_n = 0;
  thm_cmd->add_option("--alpha", thm_alpha, "Base partition, e.g. [2,1]")->required();
  thm_cmd->add_option("--n", thm_n, "Even number of cells added/removed")->required();
  add_format(thm_cmd, thm_format);
  thm_cmd->callback([&] {
    const Theorem1Report rep = verify_theorem1(Partition::parse(thm_alpha), thm_n);
    exit_code = rep.equal ? 0 : 1;
    CsvTable csv{{"alpha", "n", "side", "partition", "v", "imbalance_squared", "lhs", "rhs",
                  "equal"},
                 {}};
    std::vector<std::string> plain{"alpha: " + rep.alpha.to_string(),
                                   "n: " + std::to_string(rep.n),
                                   "lhs: " + std::to_string(rep.lhs),
                                   "rhs: " + std::to_string(rep.rhs),
                                   "equal: " + std::string(rep.equal ? "true" : "false")};
    const auto add_terms = [&](const char* side, const std::vector<Theorem1Term>& terms) {
      plain.push_back(std::string(side) + " terms:");
      for (const Theorem1Term& t : terms) {
        csv.rows.push_back({rep.alpha.to_string(), std::to_string(rep.n), side,
                            t.partition.to_string(), std::to_string(t.v),
                            std::to_string(t.imbalance_squared), std::to_string(rep.lhs),
                            std::to_string(rep.rhs), rep.equal ? "true" : "false"});
        plain.push_back("  " + t.partition.to_string() + " v=" + std::to_string(t.v) +
                        " I^2=" + std::to_string(t.imbalance_squared));
      }
    };
    add_terms("lhs", rep.lhs_terms);
    add_terms("rhs", rep.rhs_terms);
    emit(out, thm_format, "verify-theorem1",
         json{{"alpha", rep.alpha.to_string()}, {"n", rep.n}}, to_json(rep), csv, plain);
  });

  // --- verify-cauchy ------------------------------------------------------
  auto* cauchy_cmd = app.add_subcommand(
      "verify-cauchy", "Check the truncated domino Cauchy identity for two base partitions");
  std::string cau_alpha, cau_beta, cau_format = "json";
  int cau_xvars = 1, cau_yvars = 1, cau_max_dominoes = 1;
  cauchy_cmd->add_option("--alpha", cau_alpha, "First base partition")->required();
  cauchy_cmd->add_option("--beta", cau_beta, "Second base partition")->required();
  cauchy_cmd->add_option("--xvars", cau_xvars, "Number of x variables")->required();
  cauchy_cmd->add_option("--yvars", cau_yvars, "Number of y variables")->required();
  cauchy_cmd->add_option("--max-dominoes", cau_max_dominoes, "Degree cap on each axis")
      ->required();
  add_format(cauchy_cmd, cau_format);
  cauchy_cmd->callback([&] {
    const CauchyReport rep = verify_cauchy(Partition::parse(cau_alpha),
                                           Partition::parse(cau_beta), cau_xvars, cau_yvars,
                                           cau_max_dominoes);
    exit_code = rep.equal ? 0 : 1;
    CsvTable csv{{"x", "y", "s", "lhs_coeff", "rhs_coeff"}, {}};
    std::map<Monomial, std::pair<Coeff, Coeff>, MonomialOrder> merged;
    for (const auto& [m, c] : rep.lhs.terms()) merged[m].first = c;
    for (const auto& [m, c] : rep.rhs.terms()) merged[m].second = c;
    for (const auto& [m, cs] : merged)
      csv.rows.push_back({exponents_field(m.x), exponents_field(m.y), std::to_string(m.s),
                          cs.first.str(), cs.second.str()});
    std::vector<std::string> plain{
        "alpha: " + rep.alpha.to_string(),
        "beta: " + rep.beta.to_string(),
        "xvars: " + std::to_string(rep.num_x),
        "yvars: " + std::to_string(rep.num_y),
        "max_dominoes: " + std::to_string(rep.max_dominoes),
        "equal: " + std::string(rep.equal ? "true" : "false"),
        "lhs_terms: " + std::to_string(rep.lhs.terms().size()),
        "rhs_terms: " + std::to_string(rep.rhs.terms().size())};
    if (rep.first_difference)
      plain.push_back("first_difference: x=" + exponents_field(rep.first_difference->monomial.x) +
                      " y=" + exponents_field(rep.first_difference->monomial.y) +
                      " s=" + std::to_string(rep.first_difference->monomial.s) +
                      " lhs=" + rep.first_difference->lhs_coeff.str() +
                      " rhs=" + rep.first_difference->rhs_coeff.str());
    emit(out, cau_format, "verify-cauchy",
         json{{"alpha", rep.alpha.to_string()},
              {"beta", rep.beta.to_string()},
              {"xvars", rep.num_x},
              {"yvars", rep.num_y},
              {"max_dominoes", rep.max_dominoes}},
         to_json(rep), csv, plain);
  });

  // --- sweep ----------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Run every identity check over exhaustive families of partitions and shapes");
  int sweep_max_alpha = 0, sweep_max_cells = 0, sweep_jobs = 1;
  std::vector<int> sweep_n_list;
  std::string sweep_format = "json";
  sweep_cmd->add_option("--max-alpha", sweep_max_alpha, "Largest |alpha| for the partition sums")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--n-list", sweep_n_list, "Comma-separated even n values, e.g. 2,4")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--max-cells", sweep_max_cells,
                        "Largest outer-partition size for the per-shape checks")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--jobs", sweep_jobs, "Worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  add_format(sweep_cmd, sweep_format);
  sweep_cmd->callback([&] {
    for (int n : sweep_n_list)
      if (n < 0 || n % 2 != 0)
        throw OddN("n-list entries must be non-negative even integers, got " + std::to_string(n));
    SweepOptions options;
    options.max_alpha_size = sweep_max_alpha;
    options.n_values = sweep_n_list;
    options.max_cells = sweep_max_cells;
    options.jobs = sweep_jobs;
    const SweepReport rep = sweep(options);
    exit_code = rep.all_passed() ? 0 : 1;
    CsvTable csv{{"check", "checked", "passed"}, {}};
    std::vector<std::string> plain;
    const auto row = [&](const char* name, const CheckStats& s) {
      csv.rows.push_back({name, std::to_string(s.checked), std::to_string(s.passed)});
      plain.push_back(std::string(name) + ": " + std::to_string(s.passed) + "/" +
                      std::to_string(s.checked));
    };
    row("theorem1", rep.theorem1);
    row("imbalance_square", rep.imbalance_square);
    row("domino_sign_sum", rep.domino_sign_sum);
    row("nice_parity_sign", rep.nice_parity_sign);
    row("nv_bv_invariance", rep.nv_bv_invariance);
    row("v_prime_mod2", rep.v_prime_mod2);
    row("flip_connectivity", rep.flip_connectivity);
    plain.push_back("all_passed: " + std::string(rep.all_passed() ? "true" : "false"));
    for (const SweepFailure& f : rep.failures)
      plain.push_back("failure: " + f.check + " " + f.subject + " " + f.detail);
    emit(out, sweep_format, "sweep",
         json{{"max_alpha", sweep_max_alpha},
              {"n_list", sweep_n_list},
              {"max_cells", sweep_max_cells},
              {"jobs", sweep_jobs}},
         to_json(rep), csv, plain);
  });

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("skewsign");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace skewsign
