#include <algorithm>

#include "checks.hpp"
#include "pdbell/enumeration.hpp"
#include "pdbell/sequences.hpp"

namespace pdbell::detail {
namespace {

BigInt fixed_difference_rhs(int n, int r) {
  BigInt sum = 0;
  for (int k = r; k <= n; ++k) sum += binomial(n, k) * stirling2(k, r) * complementary_bell(n - k);
  return sum;
}

}  // namespace

CheckOutcome check_thm_2_3(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("r", 0, c.max_r);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    for (int r = 0; r <= c.max_r; ++r) {
      BigInt rhs = 0;
      for (int k = r; k <= n; ++k) rhs += binomial(n, k) * stirling2(k, r) * deranged_bell(n - k);
      if (!p.same(params({{"n", n}, {"r", r}}), pdb_number(n, r), rhs)) return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_thm_2_4(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    Rational rhs = 0;
    for (int r = 0; r <= n; ++r)
      rhs += make_rational(sign_power(r), factorial(r)) * Rational(truncated_ordered_bell(n, r));
    if (!p.same(params({{"n", n}}), Rational(deranged_bell(n)), rhs)) return p.take();
  }
  return p.take();
}

CheckOutcome check_thm_2_7(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("r", 0, c.max_r);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    for (int r = 0; r <= std::min(n, c.max_r); ++r) {
      BigInt lhs = pdb_number(n, r) - (r + 1) * pdb_number(n, r + 1);
      if (!p.same(params({{"n", n}, {"r", r}, {"form", "general r"}}), lhs, fixed_difference_rhs(n, r))) return p.take();
    }
    BigInt lhs10 = pdb_number(n, 0) - pdb_number(n, 1);
    if (!p.same(params({{"n", n}, {"form", "r = 0"}}), lhs10, complementary_bell(n))) return p.take();
  }
  return p.take();
}

CheckOutcome check_remark_2_8_printed(const SuiteConfig& c) {
  Probe p;
  const int lo = std::max(c.min_n, 1);
  p.bound("n", lo, c.max_n);
  for (int n = lo; n <= c.max_n; ++n) {
    BigInt lhs_a = pdb_number(n, 1) - 2 * pdb_number(n, 2);
    BigInt rhs_a = complementary_bell(n + 1) - complementary_bell(n);
    if (!p.same(params({{"n", n}, {"form", "w(n,1)-2w(n,2)"}}), lhs_a, rhs_a)) return p.take();
    BigInt lhs_b = pdb_number(n, 0) - 2 * pdb_number(n, 2);
    if (!p.same(params({{"n", n}, {"form", "w(n,0)-2w(n,2)"}}), lhs_b, complementary_bell(n + 1))) return p.take();
  }
  return p.take();
}

CheckOutcome check_remark_2_8_corrected(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  const int oracle_hi = std::min(c.oracle_n, c.max_n);
  p.bound("oracle_n", c.min_n, oracle_hi);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    BigInt rhs_a = -(complementary_bell(n + 1) + complementary_bell(n));
    BigInt rhs_b = -complementary_bell(n + 1);
    BigInt lhs_a = pdb_number(n, 1) - 2 * pdb_number(n, 2);
    BigInt lhs_b = pdb_number(n, 0) - 2 * pdb_number(n, 2);
    if (!p.same(params({{"n", n}, {"form", "w(n,1)-2w(n,2)"}}), lhs_a, rhs_a)) return p.take();
    if (!p.same(params({{"n", n}, {"form", "w(n,0)-2w(n,2)"}}), lhs_b, rhs_b)) return p.take();
    if (n <= oracle_hi) {
      const auto row = brute_pdb_row(n, {.cap = c.oracle_n});
      auto at = [&](int r) { return r < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(r)] : BigInt(0); };
      BigInt brute_a = at(1) - 2 * at(2);
      BigInt brute_b = at(0) - 2 * at(2);
      if (!p.same(params({{"n", n}, {"form", "oracle w(n,1)-2w(n,2)"}}), brute_a, rhs_a)) return p.take();
      if (!p.same(params({{"n", n}, {"form", "oracle w(n,0)-2w(n,2)"}}), brute_b, rhs_b)) return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_thm_2_9(const SuiteConfig& c) {
  Probe p;
  p.bound("n", std::max(c.min_n, 1), c.max_n);
  p.bound("r", 0, c.max_r);
  for (int r = 0; r <= c.max_r; ++r) {
    for (int n = std::max(c.min_n, r + 1); n <= c.max_n; ++n) {
      BigInt rhs = 0;
      for (int j = r; j <= n - 1; ++j)
        rhs += binomial(n, j) * ordered_bell(n - j) * (pdb_number(j, r) - (r + 1) * pdb_number(j, r + 1));
      BigInt lhs = (r + 1) * pdb_number(n, r + 1);
      if (!p.same(params({{"n", n}, {"r", r}}), lhs, rhs)) return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_oracle_all(const SuiteConfig& c) {
  Probe p;
  const EnumerationOptions options{.cap = c.oracle_n};
  p.bound("n", c.min_n, c.oracle_n);
  for (int n = c.min_n; n <= c.oracle_n; ++n) {
    const auto brute_row = brute_pdb_row(n, options);
    const auto formula_row = pdb_row(n);
    for (int r = 0; r <= n; ++r) {
      if (!p.same(params({{"n", n}, {"r", r}, {"quantity", "pdb"}}), brute_row[static_cast<std::size_t>(r)],
                  formula_row[static_cast<std::size_t>(r)]))
        return p.take();
    }
    for (int k = 0; k <= n; ++k) {
      if (!p.same(params({{"n", n}, {"k", k}, {"quantity", "stirling2"}}), brute_stirling2(n, k, options),
                  stirling2(n, k)))
        return p.take();
    }
    const BigInt brute_w = brute_ordered_bell(n, options);
    if (!p.same(params({{"n", n}, {"quantity", "ordered_bell"}}), brute_w, ordered_bell(n))) return p.take();
    BigInt row_sum = 0;
    for (const auto& v : brute_row) row_sum += v;
    if (!p.same(params({{"n", n}, {"quantity", "pdb row sum"}}), row_sum, brute_w)) return p.take();
  }
  const int k_hi = std::min(c.oracle_n, kMaxPermutationK);
  p.bound("k", c.min_n, k_hi);
  for (int k = c.min_n; k <= k_hi; ++k) {
    for (int r = 0; r <= k; ++r) {
      if (!p.same(params({{"k", k}, {"r", r}, {"quantity", "partial_derangement"}}), brute_partial_derangement(k, r),
                  partial_derangement(k, r)))
        return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_wilf_scan(const SuiteConfig& c) {
  Probe p;
  const int lo = std::max(c.min_n, 1);
  p.bound("n", lo, c.wilf_max_n);
  for (int n = lo; n <= c.wilf_max_n; ++n) {
    const BigInt value = complementary_bell(n);
    if (n == 2) {
      if (!p.same(params({{"n", n}}), value, BigInt(0))) return p.take();
    } else if (value == 0) {
      p.fail(params({{"n", n}}), "0", "nonzero");
      return p.take();
    }
  }
  return p.take();
}

}  // namespace pdbell::detail
