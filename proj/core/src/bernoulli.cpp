#include "pdbell/bernoulli.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace pdbell {
namespace {

TruncatedSeries reciprocal_expm1_over_t(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) c[static_cast<std::size_t>(n)] = make_rational(1, factorial(n + 1));
  return TruncatedSeries::constant(1, order) / TruncatedSeries(order, std::move(c));
}

// Per-r series cache; a request past the cached order recomputes at a
// doubled order so repeated growth stays amortized.
class BernoulliCache {
 public:
  Rational coefficient(int n, int r) {
    std::lock_guard lock(mutex_);
    auto it = series_.find(r);
    if (it == series_.end() || it->second.order() < n) {
      const int order = std::max({n, 2 * (it == series_.end() ? 0 : it->second.order()), 16});
      it = series_.insert_or_assign(r, bernoulli_series(r, order)).first;
    }
    return it->second.egf_coeff(n);
  }

 private:
  std::mutex mutex_;
  std::map<int, TruncatedSeries> series_;
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

}  // namespace

TruncatedSeries bernoulli_series(int r, int order) {
  require_nonnegative("bernoulli_series", r, order);
  return pow(reciprocal_expm1_over_t(order), static_cast<unsigned>(r));
}

Rational bernoulli(int n) {
  require_nonnegative("bernoulli", n);
  return cache().coefficient(n, 1);
}

Rational higher_bernoulli(int n, int r) {
  require_nonnegative("higher_bernoulli", n, r);
  return cache().coefficient(n, r);
}

}  // namespace pdbell
