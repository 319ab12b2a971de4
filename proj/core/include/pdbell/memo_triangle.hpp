#pragma once

#include <functional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "pdbell/numeric.hpp"

namespace pdbell {

/// Row-indexed table of exact values, grown on demand one row at a time.
///
/// Cells are pure functions of their indices: once a row is written it is
/// never modified. Readers take a shared lock and copy out; growth takes an
/// exclusive lock. Concurrent callers therefore observe exactly the values a
/// single-threaded evaluation would produce.
class MemoTriangle {
 public:
  /// Builds row `n` given row `n - 1` (empty for n == 0).
  using RowBuilder = std::function<std::vector<BigInt>(int n, const std::vector<BigInt>& previous)>;

  MemoTriangle(std::string family, RowBuilder builder);

  MemoTriangle(const MemoTriangle&) = delete;
  MemoTriangle& operator=(const MemoTriangle&) = delete;

  /// Cell (n, k). Columns beyond the stored width of row n read as zero.
  BigInt at(int n, int k) const;

  std::vector<BigInt> row(int n) const;

  /// Number of rows currently materialized.
  int filled_rows() const;

  const std::string& family() const noexcept { return family_; }

 private:
  void ensure_rows(int n) const;

  std::string family_;
  RowBuilder builder_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<BigInt>> rows_;
};

}  // namespace pdbell
