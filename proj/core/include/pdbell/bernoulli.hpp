#pragma once

#include "pdbell/numeric.hpp"
#include "pdbell/series.hpp"

namespace pdbell {

/// Bernoulli number B_n with B_1 = -1/2, i.e. the coefficients of t/(e^t - 1).
Rational bernoulli(int n);

/// Higher-order Bernoulli number B_n^{(r)}: n! [t^n] (t/(e^t - 1))^r.
/// B_n^{(0)} is 1 for n = 0 and 0 otherwise.
Rational higher_bernoulli(int n, int r);

/// (t/(e^t - 1))^r as a truncated series, obtained by inverting
/// (e^t - 1)/t and raising the result to the r-th power.
TruncatedSeries bernoulli_series(int r, int order);

}  // namespace pdbell
