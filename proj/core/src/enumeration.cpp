#include "pdbell/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "pdbell/errors.hpp"
#include "pdbell/sequences.hpp"

namespace pdbell {
namespace {

void require_within_cap(int n, int cap) {
  if (n < 0) throw DomainError("enumeration size must be nonnegative");
  if (cap > kMaxEnumerationN)
    throw ResourceLimitError("enumeration cap " + std::to_string(cap) + " exceeds the hard limit " +
                             std::to_string(kMaxEnumerationN));
  if (n > cap)
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap) +
                             " (would visit " + to_string(ordered_bell(n)) + " block permutations)");
}

// Runs `work(partition, counts)` over the partition stream, sharded across
// workers with private counters, and returns the element-wise sum.
std::vector<std::uint64_t> sharded_count(
    int n, const EnumerationOptions& options, std::size_t width,
    const std::function<void(const PartitionRGS&, std::vector<std::uint64_t>&)>& work) {
  require_within_cap(n, options.cap);
  const int threads = std::max(1, options.threads);
  std::vector<std::vector<std::uint64_t>> local(static_cast<std::size_t>(threads),
                                                std::vector<std::uint64_t>(width, 0));
  auto run_shard = [&](int shard) {
    PartitionStream stream(n, options.cap);
    std::uint64_t index = 0;
    for (const auto& p : stream) {
      if (index++ % static_cast<std::uint64_t>(threads) == static_cast<std::uint64_t>(shard))
        work(p, local[static_cast<std::size_t>(shard)]);
    }
  };
  if (threads == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < threads; ++s) pool.emplace_back(run_shard, s);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> total(width, 0);
  for (const auto& shard : local)
    for (std::size_t i = 0; i < width; ++i) total[i] += shard[i];
  return total;
}

}  // namespace

std::vector<std::vector<int>> PartitionRGS::block_list() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks));
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(growth[static_cast<std::size_t>(i)])].push_back(i + 1);
  return out;
}

PartitionRGS PartitionRGS::parse(std::string_view digits) {
  PartitionRGS p;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InputError("restricted growth string must be decimal digits");
    p.growth.push_back(c - '0');
  }
  p.blocks = p.growth.empty() ? 0 : *std::max_element(p.growth.begin(), p.growth.end()) + 1;
  if (!p.is_valid()) throw InputError("not a restricted growth string: '" + std::string(digits) + "'");
  return p;
}

bool PartitionRGS::is_valid() const {
  int max_so_far = -1;
  for (int a : growth) {
    if (a < 0 || a > max_so_far + 1) return false;
    max_so_far = std::max(max_so_far, a);
  }
  return blocks == max_so_far + 1;
}

PartitionStream::PartitionStream(int n, int cap) {
  require_within_cap(n, cap);
  current_.growth.assign(static_cast<std::size_t>(n), 0);
  prefix_max_.assign(static_cast<std::size_t>(n), 0);
  current_.blocks = n == 0 ? 0 : 1;
}

void PartitionStream::advance() {
  auto& a = current_.growth;
  const int n = static_cast<int>(a.size());
  for (int i = n - 1; i >= 1; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (a[ui] <= prefix_max_[ui - 1]) {
      ++a[ui];
      prefix_max_[ui] = std::max(prefix_max_[ui - 1], a[ui]);
      for (auto j = ui + 1; j < a.size(); ++j) {
        a[j] = 0;
        prefix_max_[j] = prefix_max_[ui];
      }
      current_.blocks = prefix_max_.back() + 1;
      return;
    }
  }
  done_ = true;
}

std::vector<PartitionRGS> enumerate_partitions(int n, int cap) {
  std::vector<PartitionRGS> out;
  PartitionStream stream(n, cap);
  for (const auto& p : stream) out.push_back(p);
  return out;
}

int BlockPermutation::fixed_blocks() const {
  int fixed = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] == static_cast<int>(i)) ++fixed;
  return fixed;
}

std::vector<std::vector<int>> BlockPermutation::arrange(const PartitionRGS& partition) const {
  const auto blocks = partition.block_list();
  std::vector<std::vector<int>> out;
  out.reserve(images.size());
  for (int b : images) out.push_back(blocks.at(static_cast<std::size_t>(b)));
  return out;
}

void for_each_block_permutation(int k, const std::function<void(const BlockPermutation&)>& visit) {
  if (k < 0) throw DomainError("negative block count");
  BlockPermutation perm;
  perm.images.resize(static_cast<std::size_t>(k));
  std::iota(perm.images.begin(), perm.images.end(), 0);
  do {
    visit(perm);
  } while (std::next_permutation(perm.images.begin(), perm.images.end()));
}

std::vector<std::uint64_t> classify_block_permutations(const PartitionRGS& partition) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(partition.blocks) + 1, 0);
  for_each_block_permutation(partition.blocks, [&](const BlockPermutation& p) {
    ++counts[static_cast<std::size_t>(p.fixed_blocks())];
  });
  return counts;
}

std::vector<BigInt> brute_pdb_row(int n, const EnumerationOptions& options) {
  const auto width = static_cast<std::size_t>(std::max(n, 0)) + 1;
  const auto counts = sharded_count(n, options, width, [](const PartitionRGS& p, std::vector<std::uint64_t>& acc) {
    for_each_block_permutation(p.blocks, [&](const BlockPermutation& perm) {
      ++acc[static_cast<std::size_t>(perm.fixed_blocks())];
    });
  });
  std::vector<BigInt> out;
  out.reserve(counts.size());
  for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

BigInt brute_pdb(int n, int r, const EnumerationOptions& options) {
  require_nonnegative("brute_pdb", n, r);
  const auto row = brute_pdb_row(n, options);
  return r < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(r)] : BigInt(0);
}

BigInt brute_partial_derangement(int k, int r) {
  require_nonnegative("brute_partial_derangement", k, r);
  if (k > kMaxPermutationK)
    throw ResourceLimitError("k = " + std::to_string(k) + " exceeds the permutation cap " +
                             std::to_string(kMaxPermutationK) + " (would visit " + to_string(factorial(k)) +
                             " permutations)");
  std::uint64_t count = 0;
  for_each_block_permutation(k, [&](const BlockPermutation& p) {
    if (p.fixed_blocks() == r) ++count;
  });
  return BigInt(static_cast<unsigned long>(count));
}

BigInt brute_stirling2(int n, int k, const EnumerationOptions& options) {
  require_nonnegative("brute_stirling2", n, k);
  const auto counts = sharded_count(n, options, 1, [k](const PartitionRGS& p, std::vector<std::uint64_t>& acc) {
    if (p.blocks == k) ++acc[0];
  });
  return BigInt(static_cast<unsigned long>(counts[0]));
}

BigInt brute_ordered_bell(int n, const EnumerationOptions& options) {
  const auto counts = sharded_count(n, options, 1, [](const PartitionRGS& p, std::vector<std::uint64_t>& acc) {
    for_each_block_permutation(p.blocks, [&](const BlockPermutation&) { ++acc[0]; });
  });
  return BigInt(static_cast<unsigned long>(counts[0]));
}

}  // namespace pdbell
