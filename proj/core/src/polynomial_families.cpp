#include "pdbell/polynomial_families.hpp"

#include <vector>

#include "pdbell/sequences.hpp"

namespace pdbell {

IntPolynomial exponential_poly(int n) {
  require_nonnegative("exponential_poly", n);
  return IntPolynomial(stirling2_row(n));
}

IntPolynomial r_exponential_poly(int n, int r) {
  require_nonnegative("r_exponential_poly", n, r);
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = r_stirling2(n + r, k + r, r);
  return IntPolynomial(std::move(c));
}

IntPolynomial r_exponential_poly_binomial(int n, int r) {
  require_nonnegative("r_exponential_poly_binomial", n, r);
  IntPolynomial sum;
  BigInt r_power = 1;
  for (int k = 0; k <= n; ++k) {
    sum += exponential_poly(n - k) * BigInt(r_power * binomial(n, k));
    r_power *= r;
  }
  return sum;
}

IntPolynomial geometric_poly(int n) {
  require_nonnegative("geometric_poly", n);
  std::vector<BigInt> c = stirling2_row(n);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] *= factorial(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial pdb_poly(int n, int r) {
  require_nonnegative("pdb_poly", n, r);
  std::vector<BigInt> c = stirling2_row(n);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] *= partial_derangement(k, r);
  return IntPolynomial(std::move(c));
}

}  // namespace pdbell
