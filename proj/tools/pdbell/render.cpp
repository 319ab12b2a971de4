#include "pdbell/render.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "pdbell/errors.hpp"

namespace pdbell::cli {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw InputError("unknown format '" + std::string(name) + "'");
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

void emit(const Output& output, Format format, std::ostream& os) {
  switch (format) {
    case Format::text:
      os << output.text;
      break;
    case Format::json:
      os << output.json.dump(2) << '\n';
      break;
    case Format::csv: {
      auto line = [&os](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
        os << '\n';
      };
      line(output.csv_header);
      for (const auto& row : output.csv_rows) line(row);
      break;
    }
  }
}

std::string join_params(const ParamList& params, std::string_view sep) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += sep;
    out += name + "=" + value;
  }
  return out;
}

nlohmann::json config_json(const SuiteConfig& c) {
  return {
      {"min_n", c.min_n},
      {"max_n", c.max_n},
      {"max_r", c.max_r},
      {"max_m", c.max_m},
      {"oracle_n", c.oracle_n},
      {"series_order", c.series_order},
      {"convolution_max_n", c.convolution_max_n},
      {"series_max_n", c.series_max_n},
      {"series_max_r", c.series_max_r},
      {"wilf_max_n", c.wilf_max_n},
      {"tolerance", to_string(c.tolerance)},
      {"e_error", to_string(c.e_error)},
      {"threads", c.threads},
  };
}

namespace {

nlohmann::json params_json(const ParamList& params) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, value] : params) out[name] = value;
  return out;
}

std::string overall_label(const SuiteReport& report) {
  if (report.any_failure()) return "fail";
  if (report.any_inconclusive()) return "inconclusive";
  return "pass";
}

}  // namespace

Output render_report(const SuiteReport& report) {
  Output out;
  out.json["command"] = "check";
  out.json["config"] = config_json(report.config);
  out.json["overall"] = overall_label(report);
  out.json["results"] = nlohmann::json::array();
  out.csv_header = {"id", "status", "bounds", "witness_params", "lhs", "rhs", "message", "ms"};

  std::size_t width = 0;
  for (const auto& r : report.results) width = std::max(width, r.id.size());
  std::ostringstream text;
  int known_failing = 0;

  for (const auto& r : report.results) {
    const std::string status(to_string(r.status));
    if (r.status == CheckStatus::known_failing_as_printed) ++known_failing;

    nlohmann::json entry{{"id", r.id}, {"status", status}, {"bounds", params_json(r.bounds)}, {"ms", r.ms}};
    if (r.witness)
      entry["witness"] = {{"params", params_json(r.witness->params)}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    if (!r.message.empty()) entry["message"] = r.message;
    out.json["results"].push_back(std::move(entry));

    const ParamList empty;
    const ParamList& wp = r.witness ? r.witness->params : empty;
    out.csv_rows.push_back({r.id, status, join_params(r.bounds, "; "), join_params(wp, "; "),
                            r.witness ? r.witness->lhs : "", r.witness ? r.witness->rhs : "", r.message,
                            std::to_string(r.ms)});

    text << r.id << std::string(width + 2 - r.id.size(), ' ') << status
         << std::string(status.size() < 26 ? 26 - status.size() : 1, ' ') << r.ms << " ms\n";
    if (r.witness)
      text << "    at " << join_params(r.witness->params, ", ") << ": lhs = " << r.witness->lhs
           << ", rhs = " << r.witness->rhs << '\n';
    if (!r.message.empty()) text << "    " << r.message << '\n';
  }
  text << "overall: " << overall_label(report) << " (" << report.results.size() << " checks, " << known_failing
       << " known-failing-as-printed)\n";
  out.text = text.str();
  return out;
}

Output render_table(std::string_view family, const nlohmann::json& config, const Table& table) {
  Output out;
  out.json["command"] = "table";
  out.json["config"] = config;
  out.json["config"]["family"] = std::string(family);
  out.json["results"] = nlohmann::json::array();
  out.csv_header = table.index_names;
  out.csv_header.push_back("value");

  std::ostringstream text;
  text << "# " << family << '\n';
  // Text groups rows sharing all but the last index onto one line.
  const std::size_t key_len = table.index_names.size() > 1 ? table.index_names.size() - 1 : 1;
  const std::vector<int>* open_key = nullptr;
  for (const auto& row : table.rows) {
    nlohmann::json entry{{"value", row.value}};
    std::vector<std::string> csv;
    for (std::size_t i = 0; i < row.index.size(); ++i) {
      entry[table.index_names[i]] = row.index[i];
      csv.push_back(std::to_string(row.index[i]));
    }
    csv.push_back(row.value);
    out.json["results"].push_back(std::move(entry));
    out.csv_rows.push_back(std::move(csv));

    const bool same_key =
        open_key && std::equal(row.index.begin(), row.index.begin() + static_cast<long>(key_len), open_key->begin());
    if (!same_key) {
      if (open_key) text << '\n';
      for (std::size_t i = 0; i < key_len; ++i)
        text << (i ? " " : "") << table.index_names[i] << '=' << row.index[i];
      text << ':';
    }
    text << ' ' << row.value;
    open_key = &row.index;
  }
  if (open_key) text << '\n';
  out.text = text.str();
  return out;
}

}  // namespace pdbell::cli
