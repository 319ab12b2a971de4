// Acceptance criteria AC1-AC10: one PASS/FAIL line each, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pdbell/bernoulli.hpp"
#include "pdbell/enumeration.hpp"
#include "pdbell/identity_suite.hpp"
#include "pdbell/sequences.hpp"

using namespace pdbell;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0 for no time limit
  std::function<Outcome()> run;
};

std::string status_line(const CheckReport& r) {
  std::string s = r.id + " -> " + std::string(to_string(r.status));
  if (r.witness) s += " [lhs " + r.witness->lhs + ", rhs " + r.witness->rhs + "]";
  if (!r.message.empty()) s += " (" + r.message + ")";
  return s;
}

std::string param(const Witness& w, const std::string& name) {
  for (const auto& [k, v] : w.params)
    if (k == name) return v;
  return {};
}

Outcome ac1() {
  Outcome o;
  EnumerationOptions single;
  single.threads = 1;
  for (int n = 0; n <= 8; ++n) {
    const auto brute = brute_pdb_row(n, single);
    for (int r = 0; r <= n; ++r)
      o.require(brute[static_cast<std::size_t>(r)] == pdb_number(n, r),
                "brute_pdb(" + std::to_string(n) + "," + std::to_string(r) + ") = " +
                    to_string(brute[static_cast<std::size_t>(r)]) + " vs " + to_string(pdb_number(n, r)));
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto part = PartitionRGS::parse("00112");  // {1,2}|{3,4}|{5}
  o.require(part.block_list() == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}}, "unexpected block list");
  const auto counts = classify_block_permutations(part);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  o.require(total == 6, "expected 6 block permutations");
  o.require(counts == std::vector<std::uint64_t>{2, 3, 0, 1}, "classification differs from (2, 3, 0, 1)");
  return o;
}

Outcome ac3() {
  Outcome o;
  for (int n = 0; n <= 30; ++n) {
    BigInt sum = 0;
    for (int r = 0; r <= n; ++r) sum += pdb_number(n, r);
    o.require(sum == ordered_bell(n) && sum == oracle::ordered_bell_recurrence(n),
              "row sum mismatch at n=" + std::to_string(n));
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (int n = 0; n <= 30; ++n)
    o.require(pdb_number(n, 0) - pdb_number(n, 1) == complementary_bell(n) &&
                  complementary_bell(n) == oracle::complementary_bell_explicit(n),
              "mismatch at n=" + std::to_string(n));
  return o;
}

Outcome ac5() {
  Outcome o;
  const std::vector<std::string> ids{"thm_2_3", "thm_2_4",   "thm_2_7",   "thm_2_9",    "thm_3_1",    "thm_3_3",
                                     "cor_3_4", "cor_3_5_a", "cor_3_5_b", "prop_3_6_a", "prop_3_6_b", "cor_3_7",
                                     "cor_3_8", "cor_3_9",   "thm_3_10",  "cor_3_11"};
  SuiteConfig c;  // n <= 20; r, m <= 8
  c.max_n = 20;
  c.max_r = c.max_m = 8;
  const auto report = run_checks(ids, c);
  for (const auto& r : report.results) o.require(r.status == CheckStatus::pass, status_line(r));
  return o;
}

Outcome ac6() {
  Outcome o;
  SuiteConfig at3;
  at3.min_n = 3;
  at3.max_n = 3;
  const auto printed = check("remark_2_8_printed", at3);
  o.require(printed.status == CheckStatus::known_failing_as_printed, status_line(printed));
  if (printed.witness) {
    o.require(param(*printed.witness, "n") == "3", "witness is not at n = 3");
    o.require(printed.witness->lhs == "-2" && printed.witness->rhs == "0", "first form at n=3: " + status_line(printed));
  }
  const BigInt second = pdb_number(3, 0) - 2 * pdb_number(3, 2);
  o.require(second == -1 && complementary_bell(4) == 1, "second form at n=3 is not -1 vs 1");

  SuiteConfig c;
  c.max_n = 8;
  c.oracle_n = 8;
  const auto corrected = check("remark_2_8_corrected", c);
  o.require(corrected.status == CheckStatus::pass, status_line(corrected));
  bool anchored = false;
  for (const auto& [k, v] : corrected.bounds) anchored = anchored || (k == "oracle_n" && v == "0..8");
  o.require(anchored, "remark_2_8_corrected did not cover the oracle up to n = 8");

  SuiteConfig c32;
  c32.convolution_max_n = 12;
  const auto flagged = check("cor_3_2_printed", c32);
  o.require(flagged.status == CheckStatus::known_failing_as_printed, status_line(flagged));
  const auto fixed = check("cor_3_2_corrected", c32);
  o.require(fixed.status == CheckStatus::pass, status_line(fixed));
  return o;
}

Outcome ac7() {
  Outcome o;
  SuiteConfig c;
  c.series_order = 20;
  c.max_r = 3;
  const auto r = check("egf_all", c);
  o.require(r.status == CheckStatus::pass, status_line(r));
  return o;
}

Outcome ac8() {
  Outcome o;
  SuiteConfig c;
  c.series_max_n = 8;
  c.series_max_r = 3;
  c.tolerance = Rational(1) / Rational(BigInt("1000000000"));
  c.e_error = Rational(1) / Rational(BigInt("1000000000000000000000000000000"));
  for (const char* id : {"thm_2_10_a", "thm_2_10_b"}) {
    const auto r = check(id, c);
    o.require(r.status == CheckStatus::pass, status_line(r));
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  SuiteConfig c;
  c.wilf_max_n = 200;
  const auto r = check("wilf_scan", c);
  o.require(r.status == CheckStatus::pass, status_line(r));
  for (int n = 1; n <= 200; ++n)
    o.require((complementary_bell(n) == 0) == (n == 2), "unexpected value at n=" + std::to_string(n));
  return o;
}

Outcome ac10() {
  Outcome o;
  const auto reference = oracle::bernoulli_recurrence(30);
  for (int n = 0; n <= 30; ++n)
    o.require(higher_bernoulli(n, 1) == bernoulli(n) && bernoulli(n) == reference[static_cast<std::size_t>(n)],
              "B_" + std::to_string(n));
  for (int n = 1; n <= 30; ++n) {
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) sum += Rational(binomial(n + 1, k)) * bernoulli(k);
    o.require(sum == 0, "recurrence at n=" + std::to_string(n));
  }
  o.require(higher_bernoulli(2, 2) == make_rational(5, 6), "B_2^(2) != 5/6");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "brute-force oracle equals pdb_number for n <= 8", 30, ac1},
      {"AC2", "example partition {1,2}|{3,4}|{5} classifies as (2,3,0,1)", 0, ac2},
      {"AC3", "row sums equal ordered Bell numbers for n <= 30", 5, ac3},
      {"AC4", "pdb(n,0) - pdb(n,1) = complementary Bell for n <= 30", 0, ac4},
      {"AC5", "theorem grid passes on n <= 20, r,m <= 8", 120, ac5},
      {"AC6", "printed forms flagged with witnesses, corrected forms pass", 0, ac6},
      {"AC7", "generating-function coefficients agree for n <= 20", 10, ac7},
      {"AC8", "series identities certified within 1e-9 for n <= 8, r <= 3", 0, ac8},
      {"AC9", "complementary Bell numbers vanish only at n = 2 for n <= 200", 5, ac9},
      {"AC10", "Bernoulli kernel identities", 0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::printf("%-4s %s  %s (%s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, timing, o.ok ? "" : ": ",
                o.detail.c_str());
    failures += !o.ok;
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
