#include "pdbell/numeric.hpp"

#include <cctype>
#include <string>

#include "pdbell/errors.hpp"

namespace pdbell {

BigInt factorial(int n) {
  require_nonnegative("factorial", n);
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt binomial(int n, int k) {
  require_nonnegative("binomial", n);
  if (k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational power(const Rational& base, unsigned exponent) {
  BigInt num = power(BigInt(base.get_num()), exponent);
  BigInt den = power(BigInt(base.get_den()), exponent);
  return make_rational(num, den);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw InputError("malformed number: '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    BigInt ev = parse_integer(text.substr(e + 1), text);
    if (!ev.fits_slong_p() || ev > 100000 || ev < -100000)
      throw InputError("exponent out of range in '" + std::string(text) + "'");
    exponent = ev.get_si();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw InputError("malformed number: '" + std::string(text) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa))
      throw InputError("malformed number: '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }

  BigInt num(digits, 10);
  if (negative) num = -num;
  BigInt scale = power(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? make_rational(num, scale) : Rational(num * scale);
}

void require_nonnegative(const char* what, int a) {
  if (a < 0) throw DomainError(std::string(what) + ": negative index");
}

void require_nonnegative(const char* what, int a, int b) {
  if (a < 0 || b < 0) throw DomainError(std::string(what) + ": negative index");
}

void require_nonnegative(const char* what, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError(std::string(what) + ": negative index");
}

}  // namespace pdbell

namespace pdbell {

std::string to_decimal(const Rational& value, int digits) {
  const bool negative = value < 0;
  BigInt num = abs(value.get_num());
  const BigInt den = value.get_den();
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = negative ? "-" : "";
  out += whole.get_str(10);
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      BigInt d = rem / den;
      rem = rem % den;
      out += static_cast<char>('0' + d.get_si());
    }
  }
  return out;
}

}  // namespace pdbell
