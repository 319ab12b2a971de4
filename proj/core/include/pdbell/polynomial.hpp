#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pdbell/numeric.hpp"

namespace pdbell {

/// Dense univariate polynomial c_0 + c_1 y + ... + c_d y^d.
///
/// Always stored in canonical form: the leading coefficient is nonzero, and
/// the zero polynomial has no coefficients (degree -1). Equality is therefore
/// plain coefficient-vector equality.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  static Polynomial monomial(Coeff c, int degree) {
    std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of y^k; zero beyond the degree.
  Coeff coeff(int k) const {
    if (k < 0 || k > degree()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Coeff& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// y^k * p(y).
  Polynomial shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Coeff> v(static_cast<std::size_t>(k), Coeff(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// p(c * y), coefficient k scaled by c^k.
  Polynomial with_scaled_argument(const Coeff& c) const {
    std::vector<Coeff> v = coeffs_;
    Coeff scale(1);
    for (auto& x : v) {
      x *= scale;
      scale *= c;
    }
    return Polynomial(std::move(v));
  }

  /// p(-y), by flipping the sign of odd-degree coefficients.
  Polynomial with_negated_argument() const {
    std::vector<Coeff> v = coeffs_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return Polynomial(std::move(v));
  }

  /// Horner evaluation at a point of any ring that accepts Coeff.
  template <class Point>
  Point evaluate(const Point& x) const {
    Point acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += Point(*it);
    }
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

/// Human-readable form, lowest degree first, e.g. "1 - y + 3y^2"; "0" for the zero polynomial.
template <class Coeff>
std::string to_string(const Polynomial<Coeff>& p, const std::string& var = "y") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    Coeff c = p.coeff(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = (c == 1);
    if (!unit || k == 0) out += to_string(c);
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const Polynomial<Coeff>& p) {
  return os << to_string(p);
}

}  // namespace pdbell
