#include "pdbell/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pdbell/errors.hpp"
#include "pdbell/sequences.hpp"

namespace pdbell {
namespace {

void require_order(int order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

const Rational& TruncatedSeries::coeff(int n) const {
  if (n < 0) throw DomainError("negative series index");
  if (n > order())
    throw TruncationError("coefficient " + std::to_string(n) + " is beyond truncation order " +
                          std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(n)];
}

Rational TruncatedSeries::egf_coeff(int n) const { return coeff(n) * Rational(factorial(n)); }

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  require_order(new_order);
  if (new_order > order())
    throw TruncationError("cannot raise truncation order from " + std::to_string(order()) + " to " +
                          std::to_string(new_order));
  return TruncatedSeries(new_order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.coeffs_[0] == 0) throw NonUnitDivisorError("series division by a divisor with zero constant term");
  const int n = std::min(a.order(), b.order());
  TruncatedSeries q(n);
  const Rational inv = 1 / b.coeffs_[0];
  for (int i = 0; i <= n; ++i) {
    Rational acc = a.coeffs_[i];
    for (int k = 1; k <= i; ++k) acc -= b.coeffs_[k] * q.coeffs_[i - k];
    q.coeffs_[i] = acc * inv;
  }
  return q;
}

TruncatedSeries exp(const TruncatedSeries& a) {
  if (a.coeff(0) != 0) throw NonZeroConstantError("exp of a series with nonzero constant term");
  const int n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 1; k <= m; ++k) acc += k * a.coeff(k) * b[static_cast<std::size_t>(m - k)];
    b[static_cast<std::size_t>(m)] = acc / m;
  }
  return TruncatedSeries(n, std::move(b));
}

TruncatedSeries pow(const TruncatedSeries& a, unsigned k) {
  TruncatedSeries result = TruncatedSeries::constant(1, a.order());
  TruncatedSeries base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

TruncatedSeries expm1_series(int order) {
  require_order(order);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = make_rational(1, factorial(n));
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries compose_expm1(const TruncatedSeries& a) {
  const int n = a.order();
  const TruncatedSeries u = expm1_series(n);
  TruncatedSeries acc = TruncatedSeries::constant(a.coeff(n), n);
  for (int i = n - 1; i >= 0; --i) acc = acc * u + TruncatedSeries::constant(a.coeff(i), n);
  return acc;
}

TruncatedSeries compose_expm1_transport(const TruncatedSeries& a) {
  const int n = a.order();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 0; k <= m; ++k) acc += a.coeff(k) * Rational(factorial(k) * stirling2(m, k));
    c[static_cast<std::size_t>(m)] = acc / Rational(factorial(m));
  }
  return TruncatedSeries(n, std::move(c));
}

}  // namespace pdbell
