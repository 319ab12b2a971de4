#include <algorithm>
#include <vector>

#include "checks.hpp"
#include "pdbell/bernoulli.hpp"
#include "pdbell/enumeration.hpp"
#include "pdbell/polynomial_families.hpp"
#include "pdbell/sequences.hpp"

namespace pdbell::detail {
namespace {

// pdb_poly(n, r) for n <= max_n, r <= max_r, built once per check.
class PdbPolyTable {
 public:
  PdbPolyTable(int max_n, int max_r) : max_r_(max_r) {
    for (int n = 0; n <= max_n; ++n)
      for (int r = 0; r <= max_r; ++r) table_.push_back(pdb_poly(n, r));
  }
  const IntPolynomial& operator()(int n, int r) const {
    return table_[static_cast<std::size_t>(n) * static_cast<std::size_t>(max_r_ + 1) + static_cast<std::size_t>(r)];
  }

 private:
  int max_r_;
  std::vector<IntPolynomial> table_;
};

BigInt cor_3_5_rhs(int n, int r, int j) {
  return stirling2(n, j) * (partial_derangement(j, r - 1) - r * partial_derangement(j, r));
}

BigInt cor_3_5_b_lhs(int n, int r, int j) {
  BigInt sum = 0;
  for (int i = 0; i <= r - 1; ++i) sum += sign_power(i) * binomial(r - 1, i) * r_stirling2(n + i, j - (r - 1 - i), i);
  return sum;
}

CheckOutcome cor_3_5_b_impl(const SuiteConfig& c, bool with_factorial) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("r", 1, c.max_r);
  for (int r = 1; r <= c.max_r; ++r) {
    const BigInt scale = with_factorial ? factorial(r - 1) : BigInt(1);
    for (int n = c.min_n; n <= c.max_n; ++n) {
      for (int j = r - 1; j <= n; ++j) {
        BigInt rhs = sign_power(j) * scale * cor_3_5_rhs(n, r, j);
        if (!p.same(params({{"n", n}, {"r", r}, {"j", j}}), cor_3_5_b_lhs(n, r, j), rhs)) return p.take();
      }
    }
  }
  return p.take();
}

int prop_3_6_z_radius(int n) { return std::max(3, (n + 2) / 2); }

template <class Rhs>
CheckOutcome prop_3_6_impl(const SuiteConfig& c, Rhs rhs_at) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("z", "-K..K, K = max(3, ceil((n+1)/2))");
  for (int n = c.min_n; n <= c.max_n; ++n) {
    const int radius = prop_3_6_z_radius(n);
    for (int z = -radius; z <= radius; ++z) {
      IntPolynomial lhs;
      BigInt z_power = 1;
      for (int r = 0; r <= n; ++r) {
        lhs += pdb_poly(n, r) * z_power;
        z_power *= z;
      }
      if (!p.same(params({{"n", n}, {"z", z}}), lhs, rhs_at(n, z))) return p.take();
    }
  }
  return p.take();
}

}  // namespace

CheckOutcome check_thm_3_1(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("m", 0, c.max_m);
  p.bound("r", 0, c.max_r);
  const PdbPolyTable table(c.max_n, c.max_m + c.max_r);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    for (int m = 0; m <= c.max_m; ++m) {
      for (int r = 0; r <= c.max_r; ++r) {
        IntPolynomial sum;
        for (int k = 0; k <= n; ++k) {
          BigInt w = binomial(n, k) * stirling2(n - k, r);
          if (w != 0) sum += table(k, m) * w;
        }
        IntPolynomial lhs = table(n, m + r) * binomial(m + r, m);
        if (!p.same(params({{"n", n}, {"m", m}, {"r", r}}), lhs, sum.shifted(r))) return p.take();
      }
    }
  }
  return p.take();
}

CheckOutcome check_cor_3_2_printed(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.convolution_max_n);
  p.bound("m", 0, c.max_m);
  p.bound("r", 0, c.max_r);
  for (int n = c.min_n; n <= c.convolution_max_n; ++n) {
    for (int m = 0; m <= c.max_m; ++m) {
      for (int r = 0; r <= c.max_r; ++r) {
        for (int j = r; j <= n; ++j) {
          BigInt lhs = 0;
          for (int k = j - r; k <= n; ++k) lhs += binomial(n, k) * stirling2(n - k, m) * stirling2(k, j - r);
          const BigInt divisor = partial_derangement(j - r, r);
          const auto at = params({{"n", n}, {"m", m}, {"r", r}, {"j", j}});
          if (divisor == 0) {
            p.fail(at, show(lhs), "undefined (divisor d(j-r,r) = 0)");
            return p.take();
          }
          Rational rhs = make_rational(binomial(m + r, m) * stirling2(n, j) * partial_derangement(j, r + m), divisor);
          if (!p.same(at, Rational(lhs), rhs)) return p.take();
        }
      }
    }
  }
  return p.take();
}

CheckOutcome check_cor_3_2_corrected(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.convolution_max_n);
  p.bound("m", 0, c.max_m);
  p.bound("r", 0, c.max_r);
  const int oracle_hi = std::min(c.oracle_n, c.convolution_max_n);
  p.bound("oracle_n", c.min_n, oracle_hi);

  // Exhaustive Stirling and rencontres tables for the oracle-anchored pass.
  std::vector<std::vector<BigInt>> brute_s(static_cast<std::size_t>(std::max(oracle_hi, 0)) + 1);
  for (int n = 0; n <= oracle_hi; ++n) {
    brute_s[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
    PartitionStream stream(n, c.oracle_n);
    for (const auto& part : stream) ++brute_s[static_cast<std::size_t>(n)][static_cast<std::size_t>(part.blocks)];
  }
  auto bs = [&](int n, int k) {
    return (k < 0 || k > n) ? BigInt(0) : brute_s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };
  const int perm_hi = std::min(oracle_hi, kMaxPermutationK);
  std::vector<std::vector<BigInt>> brute_d(static_cast<std::size_t>(std::max(perm_hi, 0)) + 1);
  for (int k = 0; k <= perm_hi; ++k)
    for (int r = 0; r <= k; ++r) brute_d[static_cast<std::size_t>(k)].push_back(brute_partial_derangement(k, r));
  auto bd = [&](int k, int r) {
    return r > k ? BigInt(0) : brute_d[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
  };

  for (int n = c.min_n; n <= c.convolution_max_n; ++n) {
    for (int m = 0; m <= c.max_m; ++m) {
      for (int r = 0; r <= c.max_r; ++r) {
        for (int j = 0; j + r <= n; ++j) {
          const auto at = params({{"n", n}, {"m", m}, {"r", r}, {"j", j}});
          BigInt lhs = 0;
          for (int k = 0; k <= n; ++k) lhs += binomial(n, k) * stirling2(n - k, r) * stirling2(k, j);
          lhs *= partial_derangement(j, m);
          BigInt rhs = binomial(m + r, m) * stirling2(n, j + r) * partial_derangement(j + r, r + m);
          if (!p.same(at, lhs, rhs)) return p.take();
          if (n <= oracle_hi && j + r <= perm_hi) {
            BigInt olhs = 0;
            for (int k = 0; k <= n; ++k) olhs += binomial(n, k) * bs(n - k, r) * bs(k, j);
            olhs *= bd(j, m);
            BigInt orhs = binomial(m + r, m) * bs(n, j + r) * bd(j + r, r + m);
            if (!p.same(at, olhs, orhs)) return p.take();
          }
        }
      }
    }
  }
  return p.take();
}

CheckOutcome check_thm_3_3(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("r", 0, c.max_r);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    for (int r = 0; r <= c.max_r; ++r) {
      IntPolynomial lhs = pdb_poly(n, r) - pdb_poly(n, r + 1) * BigInt(r + 1);
      IntPolynomial sum;
      for (int k = r; k <= n; ++k)
        sum += exponential_poly(n - k).with_negated_argument() * BigInt(binomial(n, k) * stirling2(k, r));
      if (!p.same(params({{"n", n}, {"r", r}}), lhs, sum.shifted(r))) return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_cor_3_4(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("r", 0, c.max_r);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    for (int r = 0; r <= c.max_r; ++r) {
      IntPolynomial lhs = (pdb_poly(n, r) - pdb_poly(n, r + 1) * BigInt(r + 1)) * factorial(r);
      IntPolynomial sum;
      for (int i = 0; i <= r; ++i)
        sum += r_exponential_poly(n, i).with_negated_argument() * BigInt(sign_power(r - i) * binomial(r, i));
      if (!p.same(params({{"n", n}, {"r", r}}), lhs, sum.shifted(r))) return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_cor_3_5_a(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("r", 1, c.max_r);
  for (int r = 1; r <= c.max_r; ++r) {
    for (int n = c.min_n; n <= c.max_n; ++n) {
      for (int j = r - 1; j <= n; ++j) {
        BigInt lhs = 0;
        for (int k = j - r + 1; k <= n; ++k)
          lhs += binomial(n, k) * stirling2(n - k, r - 1) * stirling2(k, j - r + 1);
        BigInt rhs = sign_power(j - r + 1) * cor_3_5_rhs(n, r, j);
        if (!p.same(params({{"n", n}, {"r", r}, {"j", j}}), lhs, rhs)) return p.take();
      }
    }
  }
  return p.take();
}

CheckOutcome check_cor_3_5_b(const SuiteConfig& c) { return cor_3_5_b_impl(c, true); }

CheckOutcome check_cor_3_5_b_printed(const SuiteConfig& c) { return cor_3_5_b_impl(c, false); }

CheckOutcome check_prop_3_6_a(const SuiteConfig& c) {
  return prop_3_6_impl(c, [](int n, int z) {
    IntPolynomial rhs;
    for (int r = 0; r <= n; ++r)
      rhs += exponential_poly(r).with_scaled_argument(BigInt(z - 1)) * geometric_poly(n - r) * binomial(n, r);
    return rhs;
  });
}

CheckOutcome check_prop_3_6_b(const SuiteConfig& c) {
  return prop_3_6_impl(c, [](int n, int z) {
    IntPolynomial rhs;
    for (int r = 0; r <= n; ++r)
      rhs += exponential_poly(r).with_scaled_argument(BigInt(z)) * pdb_poly(n - r, 0) * binomial(n, r);
    return rhs;
  });
}

CheckOutcome check_cor_3_7(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    const IntPolynomial w = geometric_poly(n);
    IntPolynomial row_sum;
    IntPolynomial convolution;
    IntPolynomial z_zero;
    BigInt alternating = 0;
    for (int r = 0; r <= n; ++r) {
      row_sum += pdb_poly(n, r);
      convolution += exponential_poly(r) * pdb_poly(n - r, 0) * binomial(n, r);
      z_zero += exponential_poly(r).with_negated_argument() * geometric_poly(n - r) * binomial(n, r);
      alternating += sign_power(n - r) * binomial(n, r) * bell(r);
    }
    if (!p.same(params({{"n", n}, {"form", "row sum"}}), row_sum, w)) return p.take();
    if (!p.same(params({{"n", n}, {"form", "phi * deranged convolution"}}), convolution, w)) return p.take();
    if (!p.same(params({{"n", n}, {"form", "z = 0"}}), z_zero, pdb_poly(n, 0))) return p.take();
    if (!p.same(params({{"n", n}, {"form", "w(n;-1)"}}), w.evaluate(BigInt(-1)), BigInt(sign_power(n))))
      return p.take();
    if (!p.same(params({{"n", n}, {"form", "y = -1 alternating"}}), alternating, pdb_poly(n, 0).evaluate(BigInt(-1))))
      return p.take();
  }
  return p.take();
}

CheckOutcome check_cor_3_8(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    IntPolynomial sum;
    BigInt at_one = 0;
    BigInt at_minus_one = 0;
    for (int r = 0; r <= n; ++r) {
      const BigInt weight = sign_power(r) * derangement(r);
      const IntPolynomial poly = pdb_poly(n, r);
      sum += poly * weight;
      at_one += weight * pdb_number(n, r);
      at_minus_one += weight * poly.evaluate(BigInt(-1));
    }
    const IntPolynomial w = geometric_poly(n);
    if (!p.same(params({{"n", n}, {"form", "eq12 (times 2)"}}), sum * BigInt(2), w + w.with_negated_argument()))
      return p.take();
    const BigInt particular = ordered_bell(n) + sign_power(n);
    if (!p.same(params({{"n", n}, {"form", "y = 1 (times 2)"}}), BigInt(2 * at_one), particular)) return p.take();
    if (!p.same(params({{"n", n}, {"form", "y = -1 (times 2)"}}), BigInt(2 * at_minus_one), particular))
      return p.take();
  }
  p.bound("k", c.min_n, c.max_n);
  for (int k = c.min_n; k <= c.max_n; ++k) {
    BigInt conv = 0;
    for (int r = 0; r <= k; ++r) conv += sign_power(r) * binomial(k, r) * derangement(r) * derangement(k - r);
    const BigInt expected = (k % 2 == 1) ? BigInt(0) : factorial(k);
    if (!p.same(params({{"k", k}, {"form", "derangement convolution"}}), conv, expected)) return p.take();
  }
  return p.take();
}

CheckOutcome check_cor_3_9(const SuiteConfig& c) {
  Probe p;
  const int lo = std::max(c.min_n, 1);
  p.bound("n", lo, c.max_n);
  for (int n = lo; n <= c.max_n; ++n) {
    IntPolynomial sum;
    for (int r = 1; r <= n; ++r) sum += pdb_poly(n, r) * BigInt(r);
    if (!p.same(params({{"n", n}}), sum, geometric_poly(n))) return p.take();
  }
  return p.take();
}

CheckOutcome check_thm_3_10(const SuiteConfig& c) {
  Probe p;
  const int lo = std::max(c.min_n, 1);
  p.bound("n", lo, c.max_n);
  p.bound("m", 1, c.max_m);
  p.bound("r", 1, c.max_r);
  const PdbPolyTable table(c.max_n + c.max_r, c.max_m + c.max_r);
  for (int r = 1; r <= c.max_r; ++r) {
    for (int m = 1; m <= c.max_m; ++m) {
      for (int n = std::max(lo, m); n <= c.max_n; ++n) {
        RationalPolynomial lhs;
        for (int k = m; k <= n; ++k)
          lhs += to_rational(table(k + r, m + r)) * Rational(Rational(binomial(n + r, k + r)) * higher_bernoulli(n - k, r));
        lhs *= Rational(binomial(m + r, m));
        RationalPolynomial rhs = to_rational(table(n, m).shifted(r) * binomial(n + r, r));
        if (!p.same(params({{"n", n}, {"m", m}, {"r", r}}), lhs, rhs)) return p.take();
      }
    }
  }
  // r = 1 special case, stated with shifted indices.
  for (int m = 1; m <= c.max_m; ++m) {
    for (int n = std::max(lo, m); n <= c.max_n; ++n) {
      RationalPolynomial lhs;
      for (int k = m; k <= n; ++k)
        lhs += to_rational(table(k, m)) * Rational(Rational(binomial(n, k)) * bernoulli(n - k));
      lhs *= Rational(m);
      RationalPolynomial rhs = to_rational(table(n - 1, m - 1).shifted(1) * BigInt(n));
      if (!p.same(params({{"n", n}, {"m", m}, {"form", "r = 1"}}), lhs, rhs)) return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_cor_3_11(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("r", 0, c.max_r);
  for (int r = 0; r <= c.max_r; ++r) {
    for (int n = c.min_n; n <= c.max_n; ++n) {
      for (int j = 0; j <= n; ++j) {
        Rational sum = 0;
        for (int k = j; k <= n; ++k)
          sum += Rational(binomial(n + r, k + r) * stirling2(k + r, j + r)) * higher_bernoulli(n - k, r);
        Rational lhs = sum * Rational(binomial(j + r, r));
        Rational rhs(binomial(n + r, r) * stirling2(n, j));
        if (!p.same(params({{"n", n}, {"r", r}, {"j", j}}), lhs, rhs)) return p.take();
      }
    }
  }
  for (int n = c.min_n; n <= c.max_n; ++n) {
    for (int j = 0; j <= n; ++j) {
      Rational sum = 0;
      for (int k = j; k <= n; ++k) sum += Rational(binomial(n + 1, k + 1) * stirling2(k + 1, j + 1)) * bernoulli(n - k);
      Rational lhs = sum * (j + 1);
      Rational rhs((n + 1) * stirling2(n, j));
      if (!p.same(params({{"n", n}, {"j", j}, {"form", "r = 1"}}), lhs, rhs)) return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_exp_poly_binomial_corrected(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    IntPolynomial sum;
    BigInt at_minus_one = 0;
    for (int k = 0; k <= n; ++k) {
      sum += exponential_poly(k) * binomial(n, k);
      at_minus_one += binomial(n, k) * complementary_bell(k);
    }
    if (!p.same(params({{"n", n}, {"form", "polynomial"}}), sum.shifted(1), exponential_poly(n + 1))) return p.take();
    if (!p.same(params({{"n", n}, {"form", "x = -1"}}), at_minus_one, BigInt(-complementary_bell(n + 1))))
      return p.take();
  }
  return p.take();
}

CheckOutcome check_exp_poly_binomial_printed(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    BigInt lhs = 0;
    for (int k = 0; k <= n; ++k) lhs += binomial(n, k) * complementary_bell(k);
    if (!p.same(params({{"n", n}, {"x", -1}}), lhs, complementary_bell(n + 1))) return p.take();
  }
  return p.take();
}

CheckOutcome check_r_exp_poly_binomial(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("r", 0, c.max_r);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    for (int r = 0; r <= c.max_r; ++r) {
      const IntPolynomial by_definition = r_exponential_poly(n, r);
      if (!p.same(params({{"n", n}, {"r", r}, {"form", "polynomial"}}), by_definition,
                  r_exponential_poly_binomial(n, r)))
        return p.take();
      if (!p.same(params({{"n", n}, {"r", r}, {"form", "x = -1"}}), by_definition.evaluate(BigInt(-1)),
                  complementary_r_bell(n, r)))
        return p.take();
    }
  }
  return p.take();
}

}  // namespace pdbell::detail
