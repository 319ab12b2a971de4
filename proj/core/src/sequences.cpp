#include "pdbell/sequences.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "pdbell/errors.hpp"
#include "pdbell/memo_triangle.hpp"

namespace pdbell {
namespace {

const MemoTriangle& stirling_table() {
  static const MemoTriangle table("stirling2", [](int n, const std::vector<BigInt>& prev) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    if (n == 0) {
      row[0] = 1;
      return row;
    }
    for (int k = 1; k <= n; ++k) {
      BigInt left = prev[static_cast<std::size_t>(k - 1)];
      BigInt up = k < n ? prev[static_cast<std::size_t>(k)] : BigInt(0);
      row[static_cast<std::size_t>(k)] = left + k * up;
    }
    return row;
  });
  return table;
}

// Row a holds {a+r brace b+r}_r for b = 0..a.
std::unique_ptr<MemoTriangle> make_r_stirling_table(int r) {
  return std::make_unique<MemoTriangle>(
      "r_stirling2", [r](int a, const std::vector<BigInt>& prev) {
        std::vector<BigInt> row(static_cast<std::size_t>(a) + 1);
        if (a == 0) {
          row[0] = 1;
          return row;
        }
        for (int b = 0; b <= a; ++b) {
          BigInt left = b > 0 ? prev[static_cast<std::size_t>(b - 1)] : BigInt(0);
          BigInt up = b < a ? prev[static_cast<std::size_t>(b)] : BigInt(0);
          row[static_cast<std::size_t>(b)] = left + (b + r) * up;
        }
        return row;
      });
}

const MemoTriangle& r_stirling_table(int r) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<MemoTriangle>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[r];
  if (!slot) slot = make_r_stirling_table(r);
  return *slot;
}

const MemoTriangle& derangement_table() {
  static const MemoTriangle table("derangement", [](int n, const std::vector<BigInt>& prev) {
    if (n == 0) return std::vector<BigInt>{1};
    return std::vector<BigInt>{n * prev[0] + sign_power(n)};
  });
  return table;
}

const MemoTriangle& factorial_table() {
  static const MemoTriangle table("factorial", [](int n, const std::vector<BigInt>& prev) {
    if (n == 0) return std::vector<BigInt>{1};
    return std::vector<BigInt>{n * prev[0]};
  });
  return table;
}

BigInt cached_factorial(int n) { return factorial_table().at(n, 0); }

const MemoTriangle& bell_table() {
  static const MemoTriangle table("bell", [](int n, const std::vector<BigInt>&) {
    BigInt sum = 0;
    for (const auto& s : stirling2_row(n)) sum += s;
    return std::vector<BigInt>{sum};
  });
  return table;
}

const MemoTriangle& complementary_bell_table() {
  static const MemoTriangle table("complementary_bell", [](int n, const std::vector<BigInt>&) {
    const auto row = stirling2_row(n);
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) {
      if (k % 2 == 0)
        sum += row[static_cast<std::size_t>(k)];
      else
        sum -= row[static_cast<std::size_t>(k)];
    }
    return std::vector<BigInt>{sum};
  });
  return table;
}

const MemoTriangle& ordered_bell_table() {
  static const MemoTriangle table("ordered_bell", [](int n, const std::vector<BigInt>&) {
    const auto row = stirling2_row(n);
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) sum += row[static_cast<std::size_t>(k)] * cached_factorial(k);
    return std::vector<BigInt>{sum};
  });
  return table;
}

const MemoTriangle& pdb_table() {
  static const MemoTriangle table("pdb", [](int n, const std::vector<BigInt>&) {
    const auto row = stirling2_row(n);
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
      BigInt sum = 0;
      for (int k = r; k <= n; ++k) sum += row[static_cast<std::size_t>(k)] * partial_derangement(k, r);
      out[static_cast<std::size_t>(r)] = sum;
    }
    return out;
  });
  return table;
}

}  // namespace

BigInt stirling2(int n, int k) {
  require_nonnegative("stirling2", n, k);
  if (k > n) return 0;
  return stirling_table().at(n, k);
}

std::vector<BigInt> stirling2_row(int n) {
  require_nonnegative("stirling2_row", n);
  return stirling_table().row(n);
}

BigInt r_stirling2(int n, int k, int r) {
  require_nonnegative("r_stirling2", n, k, r);
  if (n < r || k < r || k > n) return 0;
  return r_stirling_table(r).at(n - r, k - r);
}

BigInt derangement(int n) {
  require_nonnegative("derangement", n);
  return derangement_table().at(n, 0);
}

BigInt partial_derangement(int n, int r) {
  require_nonnegative("partial_derangement", n, r);
  if (r > n) return 0;
  return binomial(n, r) * derangement(n - r);
}

BigInt bell(int n) {
  require_nonnegative("bell", n);
  return bell_table().at(n, 0);
}

BigInt complementary_bell(int n) {
  require_nonnegative("complementary_bell", n);
  return complementary_bell_table().at(n, 0);
}

BigInt complementary_r_bell(int n, int r) {
  require_nonnegative("complementary_r_bell", n, r);
  BigInt sum = 0;
  BigInt r_power = 1;
  for (int k = 0; k <= n; ++k) {
    sum += binomial(n, k) * r_power * complementary_bell(n - k);
    r_power *= r;
  }
  return sum;
}

BigInt ordered_bell(int n) {
  require_nonnegative("ordered_bell", n);
  return ordered_bell_table().at(n, 0);
}

BigInt r_ordered_bell(int n, int r) {
  require_nonnegative("r_ordered_bell", n, r);
  const auto row = r_stirling_table(r).row(n);
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += row[static_cast<std::size_t>(k)] * cached_factorial(k);
  return sum;
}

BigInt truncated_ordered_bell(int n, int r) {
  require_nonnegative("truncated_ordered_bell", n, r);
  if (r > n) return 0;
  const auto row = stirling2_row(n);
  BigInt sum = 0;
  for (int k = r; k <= n; ++k) sum += row[static_cast<std::size_t>(k)] * cached_factorial(k);
  return sum;
}

BigInt deranged_bell(int n) {
  require_nonnegative("deranged_bell", n);
  const auto row = stirling2_row(n);
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += row[static_cast<std::size_t>(k)] * derangement(k);
  return sum;
}

BigInt pdb_number(int n, int r) {
  require_nonnegative("pdb_number", n, r);
  if (r > n) return 0;
  return pdb_table().at(n, r);
}

std::vector<BigInt> pdb_row(int n) {
  require_nonnegative("pdb_row", n);
  return pdb_table().row(n);
}

}  // namespace pdbell
