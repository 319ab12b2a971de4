#include "pdbell/memo_triangle.hpp"

#include <mutex>
#include <utility>

#include "pdbell/errors.hpp"

namespace pdbell {

MemoTriangle::MemoTriangle(std::string family, RowBuilder builder)
    : family_(std::move(family)), builder_(std::move(builder)) {}

void MemoTriangle::ensure_rows(int n) const {
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(rows_.size()) > n) return;
  }
  std::unique_lock lock(mutex_);
  static const std::vector<BigInt> kEmpty;
  while (static_cast<int>(rows_.size()) <= n) {
    const int next = static_cast<int>(rows_.size());
    rows_.push_back(builder_(next, next == 0 ? kEmpty : rows_.back()));
  }
}

BigInt MemoTriangle::at(int n, int k) const {
  require_nonnegative(family_.c_str(), n, k);
  ensure_rows(n);
  std::shared_lock lock(mutex_);
  const auto& r = rows_[static_cast<std::size_t>(n)];
  return k < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(k)] : BigInt(0);
}

std::vector<BigInt> MemoTriangle::row(int n) const {
  require_nonnegative(family_.c_str(), n);
  ensure_rows(n);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(n)];
}

int MemoTriangle::filled_rows() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(rows_.size());
}

}  // namespace pdbell
