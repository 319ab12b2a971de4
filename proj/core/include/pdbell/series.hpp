#pragma once

#include <vector>

#include "pdbell/numeric.hpp"

namespace pdbell {

/// Formal power series c_0 + c_1 t + ... + c_N t^N over exact rationals,
/// truncated at an inclusive order N.
///
/// Coefficients are the raw ones; for an exponential generating function the
/// counting value is n! * c_n (see egf_coeff). Binary operations produce a
/// result at the smaller of the two operand orders.
class TruncatedSeries {
 public:
  /// The zero series at the given order.
  explicit TruncatedSeries(int order);

  /// Coefficients past `order` are dropped; missing ones are zero.
  TruncatedSeries(int order, std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, int order);

  /// The series t.
  static TruncatedSeries variable(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// c_n. Throws TruncationError for n > order() and DomainError for n < 0.
  const Rational& coeff(int n) const;

  /// n! * c_n.
  Rational egf_coeff(int n) const;

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// The same series cut to a lower order.
  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

  /// Throws NonUnitDivisorError when b has a zero constant term.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// exp(a), via n b_n = sum_{k=1}^{n} k a_k b_{n-k}. Throws
/// NonZeroConstantError unless a has a zero constant term.
TruncatedSeries exp(const TruncatedSeries& a);

/// a^k by binary powering; a^0 is the unit series.
TruncatedSeries pow(const TruncatedSeries& a, unsigned k);

/// e^t - 1 to the given order.
TruncatedSeries expm1_series(int order);

/// a(e^t - 1) by Horner's scheme in u = e^t - 1.
TruncatedSeries compose_expm1(const TruncatedSeries& a);

/// a(e^t - 1) by Stirling transport: c_n = sum_k a_k k! {n brace k} / n!.
/// Independent of compose_expm1; both must agree.
TruncatedSeries compose_expm1_transport(const TruncatedSeries& a);

}  // namespace pdbell
