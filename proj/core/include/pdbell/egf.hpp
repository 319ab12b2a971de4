#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdbell/series.hpp"

namespace pdbell {

/// Named exponential generating functions.
enum class EgfFamily {
  partial_derangement,  // t^r/r! * e^{-t}/(1 - t); parameter r
  ordered_bell,         // 1/(2 - e^t)
  deranged_bell,        // e^{-(e^t - 1)}/(2 - e^t)
  stirling_column,      // (e^t - 1)^k/k!; parameter k
  higher_bernoulli,     // (t/(e^t - 1))^r; parameter r
};

/// Throws InputError for an unknown tag.
EgfFamily parse_egf_family(std::string_view tag);
std::string_view to_string(EgfFamily family);
const std::vector<EgfFamily>& all_egf_families();
bool egf_family_takes_parameter(EgfFamily family);

/// The family's EGF to the given order, assembled in the t-domain from
/// series arithmetic (no composition shortcut).
TruncatedSeries egf_family(EgfFamily family, int parameter, int order);

/// (y u)^r/r! * e^{-y u}/(1 - y u) with u = e^t - 1: the EGF of the partial
/// deranged Bell polynomials at the point y. Built in u, then composed.
TruncatedSeries egf_pdb(int r, const Rational& y, int order);

}  // namespace pdbell
