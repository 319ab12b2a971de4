#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdbell/identity_suite.hpp"
#include "pdbell/tables.hpp"

namespace pdbell::cli {

enum class Format { text, json, csv };

Format parse_format(std::string_view name);

/// One command's result in every output format. JSON and CSV are built from
/// the same strings, so they carry identical numeric content.
struct Output {
  nlohmann::json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string text;
};

void emit(const Output& output, Format format, std::ostream& os);

/// RFC 4180 quoting where needed.
std::string csv_field(std::string_view field);

nlohmann::json config_json(const SuiteConfig& config);
Output render_report(const SuiteReport& report);
Output render_table(std::string_view family, const nlohmann::json& config, const Table& table);

/// "n=0..20; r=0..8"
std::string join_params(const ParamList& params, std::string_view sep);

}  // namespace pdbell::cli
