#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "checks.hpp"
#include "pdbell/bernoulli.hpp"
#include "pdbell/egf.hpp"
#include "pdbell/polynomial_families.hpp"
#include "pdbell/sequences.hpp"

namespace pdbell::detail {
namespace {

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// ((a + 1)/a)^n / d, the ratio bound for majorants shaped like (a)^n / g(j).
Rational growth_ratio(int a, int n, const Rational& d) {
  return power(make_rational(a + 1, a), static_cast<unsigned>(n)) / d;
}

struct SeriesVerdict {
  bool decided = false;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

// Compares a certified partial sum against an approximate right-hand side.
SeriesVerdict judge(const CertifiedSum& s, const Rational& rhs, const Rational& rhs_error, const Rational& tol) {
  SeriesVerdict v;
  const Rational diff = abs_value(s.partial - rhs);
  const Rational slack = s.tail_bound + rhs_error;
  if (diff + slack < tol) {
    v.decided = v.pass = true;
  } else if (diff > tol + slack) {
    v.decided = true;
    v.lhs = to_decimal(s.partial, 15);
    v.rhs = to_decimal(rhs, 15);
  }
  return v;
}

// Records the verdict; returns false when the scan should stop.
bool record(Probe& p, ParamList at, const CertifiedSum& s, const SeriesVerdict& v) {
  if (!s.converged) {
    p.inconclusive("series did not certify within the term cap at " + at.front().first + "=" + at.front().second);
    return false;
  }
  if (!v.decided) {
    p.inconclusive("residual within the certified error band");
    return false;
  }
  if (!v.pass) {
    p.fail(std::move(at), v.lhs, v.rhs);
    return false;
  }
  return true;
}

}  // namespace

CheckOutcome check_thm_2_10_a(const SuiteConfig& c) {
  Probe p;
  const int lo = std::max(c.min_n, 1);
  p.bound("n", lo, c.series_max_n);
  p.bound("r", 0, c.series_max_r);
  p.bound("tolerance", to_string(c.tolerance));
  const Rational e = approx_e(c.e_error);
  for (int n = lo; n <= c.series_max_n; ++n) {
    const BigInt w_n = ordered_bell(n);
    for (int r = 0; r <= c.series_max_r; ++r) {
      auto term = [&](int j) {
        BigInt inner = 0;
        for (int i = 0; i <= r; ++i) inner += sign_power(r - i) * binomial(r, i) * r_ordered_bell(n, i + j);
        return make_rational(sign_power(j) * inner, factorial(j));
      };
      auto majorant = [&](int j) {
        return make_rational(power(BigInt(2), static_cast<unsigned>(r)) * w_n *
                                 power(BigInt(r + j + 1), static_cast<unsigned>(n)),
                             factorial(j));
      };
      auto ratio = [&](int j) -> std::optional<Rational> { return growth_ratio(r + j + 1, n, Rational(j + 1)); };
      const CertifiedSum s = certified_sum(term, majorant, ratio, c.tolerance / 10, c.tolerance / 100);
      const Rational scaled = Rational(factorial(r) * pdb_number(n, r));
      const Rational rhs = scaled / e;
      const SeriesVerdict v = judge(s, rhs, scaled * c.e_error, c.tolerance);
      if (!record(p, params({{"n", n}, {"r", r}, {"terms", s.terms}}), s, v)) return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_thm_2_10_b(const SuiteConfig& c) {
  Probe p;
  const int lo = std::max(c.min_n, 1);
  p.bound("n", lo, c.series_max_n);
  p.bound("r", 0, c.series_max_r);
  p.bound("tolerance", to_string(c.tolerance));
  for (int n = lo; n <= c.series_max_n; ++n) {
    BigInt bound = 0;
    for (int m = 0; m <= n; ++m) bound = std::max(bound, BigInt(abs(complementary_bell(m))));
    for (int r = 0; r <= c.series_max_r; ++r) {
      auto term = [&](int j) {
        BigInt inner = 0;
        for (int i = 0; i <= r; ++i) inner += sign_power(r - i) * binomial(r, i) * complementary_r_bell(n, j + i);
        return make_rational(inner, power(BigInt(2), static_cast<unsigned>(j + 1)));
      };
      auto majorant = [&](int j) {
        return make_rational(power(BigInt(2), static_cast<unsigned>(r)) * bound *
                                 power(BigInt(j + r + 1), static_cast<unsigned>(n)),
                             power(BigInt(2), static_cast<unsigned>(j + 1)));
      };
      auto ratio = [&](int j) -> std::optional<Rational> { return growth_ratio(j + r + 1, n, Rational(2)); };
      const CertifiedSum s = certified_sum(term, majorant, ratio, c.tolerance / 10, c.tolerance / 100);
      const Rational rhs(factorial(r) * pdb_number(n, r));
      const SeriesVerdict v = judge(s, rhs, Rational(0), c.tolerance);
      if (!record(p, params({{"n", n}, {"r", r}, {"terms", s.terms}}), s, v)) return p.take();
    }
  }
  return p.take();
}

CheckOutcome check_egf_all(const SuiteConfig& c) {
  Probe p;
  const int order = c.series_order;
  p.bound("order", 0, order);
  p.bound("parameter", 0, c.max_r);

  auto compare = [&](const std::string& family, int param, const TruncatedSeries& s, auto direct) {
    for (int n = 0; n <= order; ++n) {
      const Rational expected(direct(n));
      if (!p.same(params({{"family", family}, {"parameter", param}, {"n", n}}), s.egf_coeff(n), expected))
        return false;
    }
    return true;
  };

  for (int r = 0; r <= c.max_r; ++r) {
    if (!compare("partial_derangement", r, egf_family(EgfFamily::partial_derangement, r, order),
                 [r](int n) { return partial_derangement(n, r); }))
      return p.take();
    if (!compare("stirling_column", r, egf_family(EgfFamily::stirling_column, r, order),
                 [r](int n) { return stirling2(n, r); }))
      return p.take();
    if (!compare("higher_bernoulli", r, egf_family(EgfFamily::higher_bernoulli, r, order),
                 [r](int n) { return higher_bernoulli(n, r); }))
      return p.take();
  }
  if (!compare("ordered_bell", 0, egf_family(EgfFamily::ordered_bell, 0, order), ordered_bell)) return p.take();
  if (!compare("deranged_bell", 0, egf_family(EgfFamily::deranged_bell, 0, order), deranged_bell)) return p.take();

  // Classical Bernoulli numbers from sum_{k<=n} C(n+1,k) B_k = 0.
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  b[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(n)] = -acc / (n + 1);
  }
  if (!compare("higher_bernoulli (recurrence)", 1, egf_family(EgfFamily::higher_bernoulli, 1, order),
               [&b](int n) { return b[static_cast<std::size_t>(n)]; }))
    return p.take();

  const std::vector<Rational> points{Rational(1), Rational(-1), make_rational(1, 2)};
  for (int r = 0; r <= c.max_r; ++r) {
    for (const Rational& y : points) {
      const TruncatedSeries s = egf_pdb(r, y, order);
      for (int n = 0; n <= order; ++n) {
        const auto at = params({{"family", "pdb"}, {"r", r}, {"y", to_string(y)}, {"n", n}});
        if (!p.same(at, s.egf_coeff(n), pdb_poly(n, r).evaluate(y))) return p.take();
      }
    }
  }

  // The two composition routes on a dense test series.
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) a[static_cast<std::size_t>(k)] = make_rational(sign_power(k) * (k + 1), k * k + 1);
  const TruncatedSeries dense(order, a);
  const TruncatedSeries horner = compose_expm1(dense);
  const TruncatedSeries transport = compose_expm1_transport(dense);
  for (int n = 0; n <= order; ++n) {
    if (!p.same(params({{"form", "compose routes"}, {"n", n}}), horner.coeff(n), transport.coeff(n)))
      return p.take();
  }
  return p.take();
}

CheckOutcome check_r_ordered_bell_forms(const SuiteConfig& c) {
  Probe p;
  p.bound("n", c.min_n, c.max_n);
  p.bound("r", 0, c.max_r);
  for (int n = c.min_n; n <= c.max_n; ++n) {
    for (int r = 0; r <= c.max_r; ++r) {
      BigInt binomial_form = 0;
      for (int k = 0; k <= n; ++k)
        binomial_form += binomial(n, k) * power(BigInt(r), static_cast<unsigned>(n - k)) * ordered_bell(k);
      if (!p.same(params({{"n", n}, {"r", r}, {"form", "binomial"}}), r_ordered_bell(n, r), binomial_form))
        return p.take();
    }
  }
  // Geometric series sum_k (k+r)^n / 2^{k+1}, on the smaller grid used for series.
  p.bound("series_n", c.min_n, c.series_max_n);
  for (int n = c.min_n; n <= c.series_max_n; ++n) {
    for (int r = 0; r <= c.max_r; ++r) {
      auto term = [&](int k) {
        return make_rational(power(BigInt(k + r), static_cast<unsigned>(n)),
                             power(BigInt(2), static_cast<unsigned>(k + 1)));
      };
      auto ratio = [&](int k) -> std::optional<Rational> {
        if (k + r == 0) return std::nullopt;
        return growth_ratio(k + r, n, Rational(2));
      };
      const CertifiedSum s = certified_sum(term, term, ratio, c.tolerance / 10, c.tolerance / 100);
      const SeriesVerdict v = judge(s, Rational(r_ordered_bell(n, r)), Rational(0), c.tolerance);
      if (!record(p, params({{"n", n}, {"r", r}, {"form", "geometric series"}, {"terms", s.terms}}), s, v))
        return p.take();
    }
  }
  return p.take();
}

}  // namespace pdbell::detail
