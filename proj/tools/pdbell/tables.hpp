#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdbell::cli {

struct TableRow {
  std::vector<int> index;
  std::string value;
};

struct Table {
  std::vector<std::string> index_names;
  std::vector<TableRow> rows;
};

struct TableArgs {
  std::optional<int> n;
  std::optional<int> r;
  int max_n = 10;
  int max_r = 5;
};

inline constexpr int kTableMaxN = 200;
inline constexpr int kTableMaxR = 60;

const std::vector<std::string>& table_families();

/// Throws InputError for an unknown family or negative bounds and
/// ResourceLimitError for bounds past the table caps.
Table build_table(std::string_view family, const TableArgs& args);

}  // namespace pdbell::cli
