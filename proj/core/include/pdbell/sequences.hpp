#pragma once

#include <vector>

#include "pdbell/numeric.hpp"

// Exact integer sequence families built on memoized triangles.
//
// Conventions: any index past the support of a family (k > n for Stirling
// numbers, r > n for partial derangements, ...) yields 0. Negative indices
// throw DomainError. All functions are safe to call concurrently.

namespace pdbell {

/// Stirling number of the second kind {n brace k}.
BigInt stirling2(int n, int k);

/// Row {n brace 0}, ..., {n brace n}.
std::vector<BigInt> stirling2_row(int n);

/// r-Stirling number {n brace k}_r: partitions of an n-set into k blocks with
/// 1..r in distinct blocks. Takes the displayed indices, i.e.
/// {m+r brace j+r}_r is r_stirling2(m + r, j + r, r).
BigInt r_stirling2(int n, int k, int r);

/// Derangement number d_n.
BigInt derangement(int n);

/// Rencontres number d_{n,r} = C(n, r) d_{n-r}: permutations of an n-set with
/// exactly r fixed points.
BigInt partial_derangement(int n, int r);

/// Bell number: sum_k {n brace k}.
BigInt bell(int n);

/// Complementary Bell number sum_k (-1)^k {n brace k}; may be negative.
BigInt complementary_bell(int n);

/// Complementary r-Bell number phi_{n,r}(-1) = sum_k C(n,k) r^k phi~_{n-k}.
BigInt complementary_r_bell(int n, int r);

/// Ordered Bell (Fubini) number sum_k {n brace k} k!.
BigInt ordered_bell(int n);

/// r-ordered Bell number sum_k {n+r brace k+r}_r k!.
BigInt r_ordered_bell(int n, int r);

/// Truncated ordered Bell number sum_{k=r}^{n} {n brace k} k!.
BigInt truncated_ordered_bell(int n, int r);

/// Deranged Bell number sum_k {n brace k} d_k.
BigInt deranged_bell(int n);

/// Partial deranged Bell number: ordered partitions of [n] in which exactly r
/// blocks sit in their canonical position. Equals sum_k {n brace k} d_{k,r}.
BigInt pdb_number(int n, int r);

/// [pdb_number(n, 0), ..., pdb_number(n, n)].
std::vector<BigInt> pdb_row(int n);

}  // namespace pdbell
