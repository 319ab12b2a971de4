#include "pdbell/egf.hpp"

#include <string>

#include "pdbell/errors.hpp"

namespace pdbell {

EgfFamily parse_egf_family(std::string_view tag) {
  for (EgfFamily f : all_egf_families())
    if (to_string(f) == tag) return f;
  throw InputError("unknown generating-function family '" + std::string(tag) + "'");
}

std::string_view to_string(EgfFamily family) {
  switch (family) {
    case EgfFamily::partial_derangement: return "partial_derangement";
    case EgfFamily::ordered_bell: return "ordered_bell";
    case EgfFamily::deranged_bell: return "deranged_bell";
    case EgfFamily::stirling_column: return "stirling_column";
    case EgfFamily::higher_bernoulli: return "higher_bernoulli";
  }
  return "?";
}

const std::vector<EgfFamily>& all_egf_families() {
  static const std::vector<EgfFamily> families{
      EgfFamily::partial_derangement, EgfFamily::ordered_bell, EgfFamily::deranged_bell,
      EgfFamily::stirling_column, EgfFamily::higher_bernoulli};
  return families;
}

bool egf_family_takes_parameter(EgfFamily family) {
  return family == EgfFamily::partial_derangement || family == EgfFamily::stirling_column ||
         family == EgfFamily::higher_bernoulli;
}

TruncatedSeries egf_family(EgfFamily family, int parameter, int order) {
  require_nonnegative("egf_family", parameter, order);
  const auto one = TruncatedSeries::constant(1, order);
  const auto t = TruncatedSeries::variable(order);
  const auto u = expm1_series(order);
  const auto p = static_cast<unsigned>(parameter);

  switch (family) {
    case EgfFamily::partial_derangement:
      return pow(t, p) * make_rational(1, factorial(parameter)) * exp(-t) / (one - t);
    case EgfFamily::ordered_bell:
      return one / (one - u);
    case EgfFamily::deranged_bell:
      return exp(-u) / (one - u);
    case EgfFamily::stirling_column:
      return pow(u, p) * make_rational(1, factorial(parameter));
    case EgfFamily::higher_bernoulli: {
      // (e^t - 1)/t = sum t^n/(n+1)!, raised to r first and then inverted.
      std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
      for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = make_rational(1, factorial(n + 1));
      return one / pow(TruncatedSeries(order, std::move(c)), p);
    }
  }
  throw InputError("unknown generating-function family");
}

TruncatedSeries egf_pdb(int r, const Rational& y, int order) {
  require_nonnegative("egf_pdb", r, order);
  const auto one = TruncatedSeries::constant(1, order);
  const auto yu = TruncatedSeries::variable(order) * y;
  const auto inner = pow(yu, static_cast<unsigned>(r)) * make_rational(1, factorial(r)) * exp(-yu) / (one - yu);
  return compose_expm1(inner);
}

}  // namespace pdbell
