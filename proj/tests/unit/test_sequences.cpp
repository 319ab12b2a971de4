#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "oracles.hpp"
#include "pdbell/errors.hpp"
#include "pdbell/sequences.hpp"

using namespace pdbell;

TEST(Sequences, Examples) {
  EXPECT_EQ(derangement(0), 1);
  EXPECT_EQ(derangement(3), 2);
  EXPECT_EQ(derangement(4), 9);
  EXPECT_EQ(partial_derangement(3, 0), 2);
  EXPECT_EQ(partial_derangement(3, 1), 3);
  EXPECT_EQ(partial_derangement(3, 2), 0);
  EXPECT_EQ(partial_derangement(3, 3), 1);
  EXPECT_EQ(partial_derangement(5, 2), 20);
  EXPECT_EQ(partial_derangement(3, 7), 0);
  EXPECT_EQ(bell(0), 1);
  EXPECT_EQ(bell(3), 5);
  EXPECT_EQ(complementary_bell(2), 0);
  EXPECT_EQ(complementary_bell(5), -2);
  EXPECT_EQ(complementary_r_bell(2, 1), -1);
  EXPECT_EQ(ordered_bell(3), 13);
  EXPECT_EQ(truncated_ordered_bell(3, 0), 13);
  EXPECT_EQ(truncated_ordered_bell(3, 1), 13);
  EXPECT_EQ(truncated_ordered_bell(3, 2), 12);
  EXPECT_EQ(truncated_ordered_bell(3, 3), 6);
  EXPECT_EQ(truncated_ordered_bell(3, 4), 0);
  EXPECT_EQ(deranged_bell(0), 1);
  EXPECT_EQ(deranged_bell(1), 0);
  EXPECT_EQ(deranged_bell(3), 5);
  EXPECT_EQ(deranged_bell(5), 199);
  EXPECT_EQ(pdb_number(0, 0), 1);
  EXPECT_EQ(pdb_row(0), std::vector<BigInt>{1});
  EXPECT_EQ(pdb_row(2), (std::vector<BigInt>{1, 1, 1}));
  EXPECT_EQ(pdb_row(3), (std::vector<BigInt>{5, 4, 3, 1}));
  EXPECT_EQ(pdb_number(3, 9), 0);
}

TEST(Sequences, ParameterFamilies) {
  for (int r = 0; r <= 10; ++r) {
    EXPECT_EQ(complementary_r_bell(1, r), r - 1);
    EXPECT_EQ(r_ordered_bell(1, r), r + 1);
  }
  for (int n = 0; n <= 20; ++n) {
    EXPECT_EQ(complementary_r_bell(n, 0), complementary_bell(n));
    EXPECT_EQ(r_ordered_bell(n, 0), ordered_bell(n));
    EXPECT_EQ(truncated_ordered_bell(n, 0), ordered_bell(n));
    for (int k = 0; k <= n; ++k) EXPECT_EQ(r_stirling2(n, k, 0), stirling2(n, k));
  }
  // Displayed indices: the r-Stirling numbers start at n = k = r.
  EXPECT_EQ(r_stirling2(3, 3, 3), 1);
  EXPECT_EQ(r_stirling2(3, 2, 2), 2);
  EXPECT_EQ(r_stirling2(2, 2, 3), 0);
}

TEST(Sequences, DomainErrors) {
  EXPECT_THROW(stirling2(-1, 0), DomainError);
  EXPECT_THROW(derangement(-1), DomainError);
  EXPECT_THROW(partial_derangement(2, -1), DomainError);
  EXPECT_THROW(bell(-2), DomainError);
  EXPECT_THROW(pdb_number(-1, 0), DomainError);
  EXPECT_THROW(pdb_row(-1), DomainError);
  EXPECT_THROW(r_ordered_bell(1, -1), DomainError);
  EXPECT_THROW(complementary_r_bell(1, -1), DomainError);
}

TEST(Sequences, StirlingMatchesExplicitFormula) {
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) ASSERT_EQ(stirling2(n, k), oracle::stirling_explicit(n, k)) << n << "," << k;
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) ASSERT_EQ(stirling2(n, k), oracle::stirling_surjections(n, k));
  EXPECT_EQ(stirling2(5, 9), 0);
}

TEST(Sequences, RowSumLaws) {
  for (int n = 0; n <= 30; ++n) {
    BigInt b = 0, cb = 0, ob = 0;
    for (int k = 0; k <= n; ++k) {
      b += stirling2(n, k);
      cb += sign_power(k) * stirling2(n, k);
      ob += stirling2(n, k) * factorial(k);
    }
    EXPECT_EQ(bell(n), b);
    EXPECT_EQ(complementary_bell(n), cb);
    EXPECT_EQ(ordered_bell(n), ob);
    EXPECT_EQ(ordered_bell(n), oracle::ordered_bell_recurrence(n));
    EXPECT_EQ(complementary_bell(n), oracle::complementary_bell_explicit(n));
  }
}

TEST(Sequences, DerangementLaws) {
  for (int n = 0; n <= 25; ++n) {
    BigInt sum = 0;
    for (int r = 0; r <= n; ++r) {
      sum += partial_derangement(n, r);
      EXPECT_EQ(partial_derangement(n, r), binomial(n, r) * derangement(n - r));
    }
    EXPECT_EQ(sum, factorial(n));
  }
  for (int k = 0; k <= 8; ++k)
    for (int r = 0; r <= k; ++r) EXPECT_EQ(partial_derangement(k, r), oracle::rencontres(k, r));
}

TEST(Sequences, PdbLaws) {
  for (int n = 0; n <= 25; ++n) {
    const auto row = pdb_row(n);
    ASSERT_EQ(row.size(), static_cast<std::size_t>(n) + 1);
    BigInt sum = 0;
    for (int r = 0; r <= n; ++r) {
      EXPECT_GE(row[static_cast<std::size_t>(r)], 0);
      EXPECT_EQ(row[static_cast<std::size_t>(r)], pdb_number(n, r));
      sum += row[static_cast<std::size_t>(r)];
    }
    EXPECT_EQ(sum, ordered_bell(n));
    EXPECT_EQ(pdb_number(n, 0), deranged_bell(n));
    if (n >= 1) {
      EXPECT_EQ(pdb_number(n, 0) - pdb_number(n, 1), complementary_bell(n));
    }
  }
}

TEST(Sequences, PdbMatchesRecursiveEnumeration) {
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(pdb_row(n), oracle::pdb_row_recursive(n)) << "n=" << n;
}

TEST(Sequences, RandomQueryOrderIsIrrelevant) {
  // Tables fill lazily; results must not depend on the order of queries.
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(oracle::uniform(0, 45));
    const int k = static_cast<int>(oracle::uniform(0, n));
    ASSERT_EQ(stirling2(n, k), oracle::stirling_explicit(n, k));
  }
}

TEST(Sequences, ConcurrentReadersAgree) {
  std::vector<BigInt> expected;
  for (int n = 0; n <= 60; ++n) expected.push_back(oracle::ordered_bell_recurrence(n));
  std::vector<std::thread> pool;
  std::vector<bool> ok(8, true);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      for (int rep = 0; rep < 3; ++rep)
        for (int n = (t * 7) % 61, c = 0; c <= 60; ++c, n = (n + 13) % 61) {
          BigInt sum = 0;
          for (const auto& v : pdb_row(n)) sum += v;
          if (sum != expected[static_cast<std::size_t>(n)] || ordered_bell(n) != expected[static_cast<std::size_t>(n)])
            ok[static_cast<std::size_t>(t)] = false;
          if (stirling2(n + 10, n / 2) != oracle::stirling_explicit(n + 10, n / 2)) ok[static_cast<std::size_t>(t)] = false;
        }
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) EXPECT_TRUE(ok[static_cast<std::size_t>(t)]) << "thread " << t;
}
