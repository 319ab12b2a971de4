#include "pdbell/tables.hpp"

#include <algorithm>
#include <functional>

#include "pdbell/bernoulli.hpp"
#include "pdbell/errors.hpp"
#include "pdbell/polynomial_families.hpp"
#include "pdbell/sequences.hpp"

namespace pdbell::cli {
namespace {

enum class Shape { sequence, triangle, grid };

struct Family {
  std::string name;
  Shape shape;
  std::string second;  // name of the second index
  std::function<std::string(int, int)> value;
};

template <class F>
std::function<std::string(int, int)> text1(F f) {
  return [f](int n, int) { return to_string(f(n)); };
}
template <class F>
std::function<std::string(int, int)> text2(F f) {
  return [f](int n, int k) { return to_string(f(n, k)); };
}

const std::vector<Family>& families() {
  static const std::vector<Family> list{
      {"stirling2", Shape::triangle, "k", text2(stirling2)},
      {"r_stirling2", Shape::grid, "r", {}},
      {"derangement", Shape::sequence, "", text1(derangement)},
      {"partial_derangement", Shape::triangle, "r", text2(partial_derangement)},
      {"bell", Shape::sequence, "", text1(bell)},
      {"complementary_bell", Shape::sequence, "", text1(complementary_bell)},
      {"ordered_bell", Shape::sequence, "", text1(ordered_bell)},
      {"r_ordered_bell", Shape::grid, "r", text2(r_ordered_bell)},
      {"truncated_ordered_bell", Shape::triangle, "r", text2(truncated_ordered_bell)},
      {"deranged_bell", Shape::sequence, "", text1(deranged_bell)},
      {"pdb", Shape::triangle, "r", text2(pdb_number)},
      {"pdb_poly", Shape::triangle, "r", {}},
      {"bernoulli", Shape::sequence, "", text1(bernoulli)},
      {"higher_bernoulli", Shape::grid, "r", text2(higher_bernoulli)},
  };
  return list;
}

void check_bound(const char* flag, int value, int cap) {
  if (value < 0) throw InputError(std::string(flag) + " must be nonnegative");
  if (value > cap)
    throw ResourceLimitError(std::string(flag) + " " + std::to_string(value) + " exceeds the table cap of " +
                             std::to_string(cap));
}

}  // namespace

const std::vector<std::string>& table_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& f : families()) out.push_back(f.name);
    return out;
  }();
  return names;
}

Table build_table(std::string_view family, const TableArgs& args) {
  const auto it = std::find_if(families().begin(), families().end(), [&](const Family& f) { return f.name == family; });
  if (it == families().end()) throw InputError("unknown table family '" + std::string(family) + "'");

  check_bound("--max-n", args.max_n, kTableMaxN);
  check_bound("--max-r", args.max_r, kTableMaxR);
  if (args.n) check_bound("--n", *args.n, kTableMaxN);
  if (args.r) check_bound("--r", *args.r, kTableMaxR);

  const int n_lo = args.n.value_or(0);
  const int n_hi = args.n.value_or(args.max_n);
  auto second_range = [&](int n, int& lo, int& hi) {
    lo = 0;
    hi = it->shape == Shape::triangle ? n : args.max_r;
    if (args.r) lo = hi = *args.r;
  };

  Table table;
  if (it->name == "r_stirling2") {
    // Indexed (r, n, k) so that a text row is one n for a fixed r.
    table.index_names = {"r", "n", "k"};
    const int r_lo = args.r.value_or(0);
    const int r_hi = args.r.value_or(args.max_r);
    for (int r = r_lo; r <= r_hi; ++r)
      for (int n = std::max(n_lo, r); n <= n_hi; ++n)
        for (int k = r; k <= n; ++k) table.rows.push_back({{r, n, k}, to_string(r_stirling2(n, k, r))});
    return table;
  }
  if (it->name == "pdb_poly") {
    table.index_names = {"n", "r", "k"};
    for (int n = n_lo; n <= n_hi; ++n) {
      int lo = 0;
      int hi = 0;
      second_range(n, lo, hi);
      for (int r = lo; r <= hi; ++r) {
        const IntPolynomial p = pdb_poly(n, r);
        for (int k = 0; k <= n; ++k) table.rows.push_back({{n, r, k}, to_string(p.coeff(k))});
      }
    }
    return table;
  }
  if (it->shape == Shape::sequence) {
    table.index_names = {"n"};
    for (int n = n_lo; n <= n_hi; ++n) table.rows.push_back({{n}, it->value(n, 0)});
    return table;
  }
  table.index_names = {"n", it->second};
  for (int n = n_lo; n <= n_hi; ++n) {
    int lo = 0;
    int hi = 0;
    second_range(n, lo, hi);
    for (int k = lo; k <= hi; ++k) table.rows.push_back({{n, k}, it->value(n, k)});
  }
  return table;
}

}  // namespace pdbell::cli
