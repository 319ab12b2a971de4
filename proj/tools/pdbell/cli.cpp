#include "pdbell/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdbell/egf.hpp"
#include "pdbell/enumeration.hpp"
#include "pdbell/errors.hpp"
#include "pdbell/identity_suite.hpp"
#include "pdbell/polynomial_families.hpp"
#include "pdbell/render.hpp"
#include "pdbell/sequences.hpp"
#include "pdbell/tables.hpp"

namespace pdbell::cli {
namespace {

struct CommonFlags {
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App& sub, CommonFlags& flags) {
  sub.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub.add_option("--out", flags.out, "Write the report to PATH instead of standard output");
}

struct CheckFlags {
  std::vector<std::string> ids;
  SuiteConfig config;
  std::optional<int> max_m;
  std::string tol;
};

struct OracleFlags {
  int max_n = kDefaultOracleN;
  int cap = kDefaultOracleN;
  int threads = 1;
};

struct EgfFlags {
  std::string family;
  int order = 24;
  int r = 0;
  std::string y = "1";
};

inline constexpr int kEgfMaxOrder = 64;

Output cmd_table(const std::string& family, const TableArgs& args) {
  const Table table = build_table(family, args);
  nlohmann::json config{{"max_n", args.max_n}, {"max_r", args.max_r}};
  if (args.n) config["n"] = *args.n;
  if (args.r) config["r"] = *args.r;
  return render_table(family, config, table);
}

std::pair<Output, int> cmd_check(CheckFlags& flags) {
  SuiteConfig& c = flags.config;
  c.max_m = flags.max_m.value_or(c.max_r);
  if (!flags.tol.empty()) c.tolerance = parse_rational(flags.tol);
  SuiteReport report;
  if (flags.ids.size() == 1 && flags.ids.front() == "all") {
    report = run_all(c);
  } else {
    for (const auto& id : flags.ids)
      if (!is_registered(id)) throw InputError("unknown check id '" + id + "'");
    report = run_checks(flags.ids, c);
  }
  int code = exit_ok;
  if (report.any_failure())
    code = exit_failure;
  else if (report.any_inconclusive())
    code = exit_inconclusive;
  return {render_report(report), code};
}

std::pair<Output, int> cmd_oracle(const OracleFlags& flags) {
  if (flags.max_n < 0) throw InputError("--max-n must be nonnegative");
  const EnumerationOptions options{.cap = flags.cap, .threads = flags.threads};
  PartitionStream(flags.max_n, flags.cap);  // cap check with the cost estimate for the largest n
  Output out;
  out.json["command"] = "oracle";
  out.json["config"] = {{"max_n", flags.max_n}, {"oracle_cap", flags.cap}, {"threads", flags.threads}};
  out.json["results"] = nlohmann::json::array();
  out.csv_header = {"n", "r", "formula", "brute", "equal"};
  std::ostringstream text;
  bool all_equal = true;
  for (int n = 0; n <= flags.max_n; ++n) {
    const std::vector<BigInt> brute = brute_pdb_row(n, options);
    const std::vector<BigInt> formula = pdb_row(n);
    text << "n=" << n << ':';
    for (int r = 0; r <= n; ++r) {
      const auto i = static_cast<std::size_t>(r);
      const bool equal = brute[i] == formula[i];
      all_equal = all_equal && equal;
      const std::string f = to_string(formula[i]);
      const std::string b = to_string(brute[i]);
      out.json["results"].push_back({{"n", n}, {"r", r}, {"formula", f}, {"brute", b}, {"equal", equal}});
      out.csv_rows.push_back({std::to_string(n), std::to_string(r), f, b, equal ? "true" : "false"});
      text << ' ' << f;
      if (!equal) text << " (brute " << b << ')';
    }
    text << '\n';
  }
  out.json["overall"] = all_equal ? "pass" : "fail";
  text << "overall: " << (all_equal ? "all cells equal" : "MISMATCH") << '\n';
  out.text = text.str();
  return {out, all_equal ? exit_ok : exit_failure};
}

Output cmd_egf(const EgfFlags& flags) {
  if (flags.order < 0 || flags.r < 0) throw InputError("--order and --r must be nonnegative");
  if (flags.order > kEgfMaxOrder)
    throw ResourceLimitError("--order " + std::to_string(flags.order) + " exceeds the cap of " +
                             std::to_string(kEgfMaxOrder));
  const Rational y = parse_rational(flags.y);
  TruncatedSeries series(0);
  nlohmann::json config{{"family", flags.family}, {"order", flags.order}};
  if (flags.family == "pdb") {
    series = egf_pdb(flags.r, y, flags.order);
    config["r"] = flags.r;
    config["y"] = to_string(y);
  } else {
    const EgfFamily family = parse_egf_family(flags.family);
    const int parameter = egf_family_takes_parameter(family) ? flags.r : 0;
    if (egf_family_takes_parameter(family)) config["r"] = parameter;
    series = egf_family(family, parameter, flags.order);
  }

  Output out;
  out.json["command"] = "egf";
  out.json["config"] = config;
  out.json["results"] = nlohmann::json::array();
  out.csv_header = {"n", "coeff", "egf"};
  std::vector<std::array<std::string, 3>> cells;
  std::size_t width = 5;
  for (int n = 0; n <= flags.order; ++n) {
    cells.push_back({std::to_string(n), to_string(series.coeff(n)), to_string(series.egf_coeff(n))});
    width = std::max(width, cells.back()[1].size());
  }
  std::ostringstream text;
  text << "n  " << "c_n" << std::string(width - 1, ' ') << "n!*c_n\n";
  for (const auto& [n, raw, scaled] : cells) {
    out.json["results"].push_back({{"n", std::stoi(n)}, {"coeff", raw}, {"egf", scaled}});
    out.csv_rows.push_back({n, raw, scaled});
    text << n << std::string(n.size() < 3 ? 3 - n.size() : 1, ' ') << raw << std::string(width + 2 - raw.size(), ' ')
         << scaled << '\n';
  }
  out.text = text.str();
  return out;
}

int write(const Output& output, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(flags.format);
  if (flags.out.empty()) {
    emit(output, format, out);
    return exit_ok;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file) {
    err << "pdbell: cannot open '" << flags.out << "' for writing\n";
    return exit_usage;
  }
  emit(output, format, file);
  return file ? exit_ok : exit_usage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial deranged Bell numbers: tables, identity checks, oracles and generating functions", "pdbell"};
  app.require_subcommand(1);

  CommonFlags common;

  auto* table = app.add_subcommand("table", "Print a sequence, triangle or polynomial table");
  std::string family;
  TableArgs table_args;
  table->add_option("family", family, "Family name")->required()->check(CLI::IsMember(table_families()));
  table->add_option("--n", table_args.n, "Single value of the first index");
  table->add_option("--r", table_args.r, "Single value of the second index");
  table->add_option("--max-n", table_args.max_n, "Largest first index");
  table->add_option("--max-r", table_args.max_r, "Largest second index for rectangular families");
  add_common(*table, common);

  auto* check = app.add_subcommand("check", "Run identity checks");
  CheckFlags check_flags;
  SuiteConfig& cfg = check_flags.config;
  check->add_option("ids", check_flags.ids, "Check ids, or 'all'")->required();
  check->add_option("--min-n", cfg.min_n, "Smallest n on the grid");
  check->add_option("--max-n", cfg.max_n, "Largest n on the grid");
  check->add_option("--max-r", cfg.max_r, "Largest r (also m unless --max-m is given)");
  check->add_option("--max-m", check_flags.max_m, "Largest m");
  check->add_option("--oracle-cap", cfg.oracle_n, "Largest n for brute-force anchors");
  check->add_option("--series-order", cfg.series_order, "Generating-function order");
  check->add_option("--series-max-n", cfg.series_max_n, "Largest n for the infinite-series checks");
  check->add_option("--series-max-r", cfg.series_max_r, "Largest r for the infinite-series checks");
  check->add_option("--convolution-max-n", cfg.convolution_max_n, "Largest n for the Stirling-derangement convolution");
  check->add_option("--wilf-max-n", cfg.wilf_max_n, "Largest n scanned for nonvanishing complementary Bell numbers");
  check->add_option("--tol", check_flags.tol, "Tolerance for the infinite-series checks (decimal or p/q)");
  check->add_option("--threads", cfg.threads, "Worker threads");
  add_common(*check, common);

  auto* oracle = app.add_subcommand("oracle", "Compare the formula against exhaustive enumeration");
  OracleFlags oracle_flags;
  oracle->add_option("--max-n", oracle_flags.max_n, "Largest n to enumerate");
  oracle->add_option("--oracle-cap", oracle_flags.cap, "Enumeration cap (at most 10)");
  oracle->add_option("--threads", oracle_flags.threads, "Worker threads");
  add_common(*oracle, common);

  auto* egf = app.add_subcommand("egf", "List generating-function coefficients");
  EgfFlags egf_flags;
  std::vector<std::string> egf_names{"pdb"};
  for (EgfFamily f : all_egf_families()) egf_names.emplace_back(to_string(f));
  egf->add_option("family", egf_flags.family, "Family name, or 'pdb'")->required()->check(CLI::IsMember(egf_names));
  egf->add_option("--order", egf_flags.order, "Truncation order");
  egf->add_option("--r", egf_flags.r, "Family parameter");
  egf->add_option("--y", egf_flags.y, "Evaluation point for 'pdb' (decimal or p/q)");
  add_common(*egf, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    Output output;
    int code = exit_ok;
    if (table->parsed()) {
      output = cmd_table(family, table_args);
    } else if (check->parsed()) {
      std::tie(output, code) = cmd_check(check_flags);
    } else if (oracle->parsed()) {
      std::tie(output, code) = cmd_oracle(oracle_flags);
    } else {
      output = cmd_egf(egf_flags);
    }
    const int write_code = write(output, common, out, err);
    return write_code != exit_ok ? write_code : code;
  } catch (const ResourceLimitError& e) {
    err << "pdbell: resource limit: " << e.what() << '\n';
    return exit_resource;
  } catch (const InputError& e) {
    err << "pdbell: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "pdbell: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "pdbell: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace pdbell::cli
