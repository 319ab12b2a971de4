#pragma once

#include "pdbell/polynomial.hpp"

namespace pdbell {

/// Exponential (Touchard) polynomial phi_n(y) = sum_k {n brace k} y^k.
IntPolynomial exponential_poly(int n);

/// r-exponential polynomial phi_{n,r}(x) = sum_k {n+r brace k+r}_r x^k,
/// built from the r-Stirling triangle.
IntPolynomial r_exponential_poly(int n, int r);

/// Same polynomial through the binomial expansion
/// sum_k r^k C(n,k) phi_{n-k}(x); kept as an independent route.
IntPolynomial r_exponential_poly_binomial(int n, int r);

/// Geometric polynomial w_n(y) = sum_k {n brace k} k! y^k.
IntPolynomial geometric_poly(int n);

/// Partial deranged Bell polynomial sum_k {n brace k} d_{k,r} y^k.
/// pdb_poly(n, 0) is the deranged Bell polynomial.
IntPolynomial pdb_poly(int n, int r);

}  // namespace pdbell
