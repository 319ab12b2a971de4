#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <string_view>
#include <vector>

#include "pdbell/numeric.hpp"

// Definition-level brute force over set partitions and permutations of
// their blocks. Nothing here calls into the formula side of the library
// except to word resource-limit messages.

namespace pdbell {

/// Hard cap on n for partition enumeration.
inline constexpr int kMaxEnumerationN = 10;
/// Default cap used by the identity suite and the oracle command.
inline constexpr int kDefaultOracleN = 8;
/// Hard cap on k for enumerating all of S_k in brute_partial_derangement.
inline constexpr int kMaxPermutationK = 9;

/// A set partition of [n] as a restricted growth string: growth[0] == 0 and
/// growth[i] <= 1 + max(growth[0..i-1]). Element i+1 lies in block growth[i];
/// blocks are numbered by increasing minimum.
struct PartitionRGS {
  std::vector<int> growth;
  int blocks = 0;

  int size() const noexcept { return static_cast<int>(growth.size()); }

  /// Blocks as sorted lists of 1-based elements, ordered by their minima.
  std::vector<std::vector<int>> block_list() const;

  /// Parses a digit string such as "00112". Throws InputError if invalid.
  static PartitionRGS parse(std::string_view digits);

  bool is_valid() const;

  friend bool operator==(const PartitionRGS&, const PartitionRGS&) = default;
};

/// Every partition of [n] exactly once, in lexicographic RGS order.
/// A single-pass input range; n = 0 yields one empty partition.
class PartitionStream {
 public:
  /// Throws ResourceLimitError if n > cap or cap > kMaxEnumerationN.
  explicit PartitionStream(int n, int cap = kMaxEnumerationN);

  class iterator {
   public:
    using value_type = PartitionRGS;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(PartitionStream* owner) : owner_(owner) {}

    const PartitionRGS& operator*() const { return owner_->current_; }
    const PartitionRGS* operator->() const { return &owner_->current_; }
    iterator& operator++() {
      owner_->advance();
      return *this;
    }
    void operator++(int) { owner_->advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.at_end(); }

   private:
    bool at_end() const { return owner_->done_; }
    PartitionStream* owner_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  void advance();

  PartitionRGS current_;
  std::vector<int> prefix_max_;
  bool done_ = false;
};

std::vector<PartitionRGS> enumerate_partitions(int n, int cap = kMaxEnumerationN);

/// A rearrangement of the canonical block list: position i of the new
/// arrangement holds block images[i]. A block is fixed when images[i] == i.
struct BlockPermutation {
  std::vector<int> images;

  int fixed_blocks() const;

  /// Applied to a partition's canonical block list.
  std::vector<std::vector<int>> arrange(const PartitionRGS& partition) const;
};

/// Visits all k! block permutations in lexicographic order.
void for_each_block_permutation(int k, const std::function<void(const BlockPermutation&)>& visit);

/// counts[r] = number of block permutations of this partition fixing exactly
/// r blocks, for r = 0..blocks.
std::vector<std::uint64_t> classify_block_permutations(const PartitionRGS& partition);

struct EnumerationOptions {
  int cap = kDefaultOracleN;
  /// Shards the partition stream round-robin; counts are merged exactly.
  int threads = 1;
};

/// Ordered partitions of [n] with exactly r fixed blocks, by exhaustion.
BigInt brute_pdb(int n, int r, const EnumerationOptions& options = {});

/// brute_pdb(n, r) for r = 0..n in one pass.
std::vector<BigInt> brute_pdb_row(int n, const EnumerationOptions& options = {});

/// Permutations of a k-set with exactly r fixed points, by exhausting S_k.
BigInt brute_partial_derangement(int k, int r);

/// Partitions of [n] into k blocks, by exhaustion.
BigInt brute_stirling2(int n, int k, const EnumerationOptions& options = {});

/// Ordered partitions of [n] (partition x block permutation pairs).
BigInt brute_ordered_bell(int n, const EnumerationOptions& options = {});

}  // namespace pdbell
