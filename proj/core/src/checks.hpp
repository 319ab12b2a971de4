#pragma once

// Internal plumbing shared by the check implementations.

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdbell/identity_suite.hpp"
#include "pdbell/polynomial.hpp"

namespace pdbell::detail {

struct CheckOutcome {
  ParamList bounds;
  std::optional<Witness> witness;
  std::optional<std::string> inconclusive;
};

using CheckFn = CheckOutcome (*)(const SuiteConfig&);

inline std::string show(const BigInt& v) { return to_string(v); }
inline std::string show(const Rational& v) { return to_string(v); }
template <class C>
std::string show(const Polynomial<C>& p) {
  return to_string(p);
}
inline std::string show(const std::string& s) { return s; }

struct Param {
  Param(std::string n, long long v) : name(std::move(n)), value(std::to_string(v)) {}
  Param(std::string n, std::string v) : name(std::move(n)), value(std::move(v)) {}
  Param(std::string n, const char* v) : name(std::move(n)), value(v) {}
  std::string name;
  std::string value;
};

inline ParamList params(std::initializer_list<Param> list) {
  ParamList out;
  for (const auto& p : list) out.emplace_back(p.name, p.value);
  return out;
}

/// Accumulates grid bounds and the first counterexample of one check.
class Probe {
 public:
  void bound(std::string name, int lo, int hi) {
    outcome_.bounds.emplace_back(std::move(name), std::to_string(lo) + ".." + std::to_string(hi));
  }
  void bound(std::string name, std::string text) { outcome_.bounds.emplace_back(std::move(name), std::move(text)); }

  /// Records a witness and returns false on the first mismatch.
  template <class L, class R>
  bool same(ParamList at, const L& lhs, const R& rhs) {
    if (lhs == rhs) return true;
    outcome_.witness = Witness{std::move(at), show(lhs), show(rhs)};
    return false;
  }

  void fail(ParamList at, std::string lhs, std::string rhs) {
    outcome_.witness = Witness{std::move(at), std::move(lhs), std::move(rhs)};
  }

  void inconclusive(std::string why) { outcome_.inconclusive = std::move(why); }

  CheckOutcome take() { return std::move(outcome_); }

 private:
  CheckOutcome outcome_;
};

/// Partial sum of an infinite series with a certified bound on the tail.
struct CertifiedSum {
  Rational partial;
  Rational tail_bound;
  int terms = 0;
  bool converged = false;
};

/// Sums term(0), term(1), ... and stops at the first J for which
///   - majorant(J) / (1 - ratio(J)) < tail_target with ratio(J) < 1, where
///     majorant(j) >= |term(j)| and ratio(j) >= majorant(j+1)/majorant(j) is
///     nonincreasing in j, and
///   - |term(J)| <= |term(J-1)| < last_term_target.
/// Gives up (converged = false) after max_terms terms.
CertifiedSum certified_sum(const std::function<Rational(int)>& term, const std::function<Rational(int)>& majorant,
                           const std::function<std::optional<Rational>(int)>& ratio, const Rational& tail_target,
                           const Rational& last_term_target, int max_terms = 2000);

// Sequence-level checks.
CheckOutcome check_thm_2_3(const SuiteConfig&);
CheckOutcome check_thm_2_4(const SuiteConfig&);
CheckOutcome check_thm_2_7(const SuiteConfig&);
CheckOutcome check_remark_2_8_printed(const SuiteConfig&);
CheckOutcome check_remark_2_8_corrected(const SuiteConfig&);
CheckOutcome check_thm_2_9(const SuiteConfig&);
CheckOutcome check_oracle_all(const SuiteConfig&);
CheckOutcome check_wilf_scan(const SuiteConfig&);

// Polynomial-level checks.
CheckOutcome check_thm_3_1(const SuiteConfig&);
CheckOutcome check_cor_3_2_printed(const SuiteConfig&);
CheckOutcome check_cor_3_2_corrected(const SuiteConfig&);
CheckOutcome check_thm_3_3(const SuiteConfig&);
CheckOutcome check_cor_3_4(const SuiteConfig&);
CheckOutcome check_cor_3_5_a(const SuiteConfig&);
CheckOutcome check_cor_3_5_b(const SuiteConfig&);
CheckOutcome check_cor_3_5_b_printed(const SuiteConfig&);
CheckOutcome check_prop_3_6_a(const SuiteConfig&);
CheckOutcome check_prop_3_6_b(const SuiteConfig&);
CheckOutcome check_cor_3_7(const SuiteConfig&);
CheckOutcome check_cor_3_8(const SuiteConfig&);
CheckOutcome check_cor_3_9(const SuiteConfig&);
CheckOutcome check_thm_3_10(const SuiteConfig&);
CheckOutcome check_cor_3_11(const SuiteConfig&);
CheckOutcome check_exp_poly_binomial_corrected(const SuiteConfig&);
CheckOutcome check_exp_poly_binomial_printed(const SuiteConfig&);
CheckOutcome check_r_exp_poly_binomial(const SuiteConfig&);

// Series-level checks.
CheckOutcome check_thm_2_10_a(const SuiteConfig&);
CheckOutcome check_thm_2_10_b(const SuiteConfig&);
CheckOutcome check_egf_all(const SuiteConfig&);
CheckOutcome check_r_ordered_bell_forms(const SuiteConfig&);

}  // namespace pdbell::detail
