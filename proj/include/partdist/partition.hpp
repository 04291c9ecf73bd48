#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partdist {

/// Elements of the ground set are 1..n.
using ElementSet = std::vector<int>;

inline constexpr int kDefaultEnumerationLimit = 12;

constexpr long long choose2(long long x) noexcept { return x < 2 ? 0 : x * (x - 1) / 2; }

/// Block-cardinality histogram (c_1, ..., c_n) of a partition of an n-set.
class ClassVector {
 public:
  ClassVector() = default;
  /// counts[k-1] is the number of k-cardinal blocks. Throws RangeError on negatives.
  explicit ClassVector(std::vector<int> counts);

  static ClassVector from_block_sizes(std::span<const int> sizes);

  int ground_size() const noexcept;
  int num_blocks() const noexcept;
  long long size() const noexcept;
  int count(int k) const noexcept;
  const std::vector<int>& counts() const noexcept { return counts_; }
  /// Block cardinalities in non-increasing order.
  std::vector<int> block_sizes() const;
  /// Block sizes rendered as "{3,2,1}".
  std::string to_string() const;

  auto operator<=>(const ClassVector&) const = default;

 private:
  std::vector<int> counts_;
};

/// One bit per atom [ij], 1 <= i < j <= n, in lexicographic pair order
/// (1,2),(1,3),...,(1,n),(2,3),...
class PairIndicator {
 public:
  explicit PairIndicator(int n = 0);

  /// Zero-based bit position of pair (i,j): (i-1)(2n-i)/2 + (j-i-1).
  static std::size_t index(int n, int i, int j);

  int n() const noexcept { return n_; }
  std::size_t length() const noexcept;
  bool test(int i, int j) const;
  void set(int i, int j, bool value = true);
  bool bit(std::size_t position) const;

  std::size_t popcount() const noexcept;
  std::size_t hamming(const PairIndicator& other) const;
  PairIndicator operator&(const PairIndicator& other) const;
  PairIndicator operator|(const PairIndicator& other) const;
  /// Pointwise <=.
  bool is_below(const PairIndicator& other) const;
  bool transitively_closed() const;
  std::string to_bit_string() const;

  bool operator==(const PairIndicator&) const = default;

 private:
  void require_same_n(const PairIndicator& other) const;

  int n_;
  std::vector<std::uint64_t> words_;
};

/// A set partition of {1..n} in canonical form: blocks ordered by their
/// minimum element, elements ascending inside each block.
///
/// labels()[e-1] is the index of the block containing e. In canonical form the
/// label sequence is a restricted growth string, so ordering partitions by
/// their labels matches enumeration order.
class Partition {
 public:
  Partition() = default;

  /// Validates and canonicalizes. Throws ValidationError naming the offending
  /// element or block on overlap, gap, out-of-range element or empty block.
  static Partition from_blocks(int n, std::vector<ElementSet> blocks);
  /// Any integer labelling, one entry per element; equal labels share a block.
  static Partition from_block_labels(std::span<const int> labels);
  static Partition bottom(int n);
  static Partition top(int n);
  /// Accepts "12|34|567" (single digits) or "1 2|3 4|10 11".
  static Partition parse(std::string_view literal);

  int n() const noexcept { return n_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  const std::vector<ElementSet>& blocks() const noexcept { return blocks_; }
  std::span<const int> labels() const noexcept { return labels_; }
  std::size_t block_of(int element) const;
  bool same_block(int i, int j) const;

  /// Compressed form iff n <= 9.
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  static Partition from_canonical_labels(std::vector<int> labels);

  int n_ = 0;
  std::vector<ElementSet> blocks_;
  std::vector<int> labels_;
};

struct LabeledElement {
  std::string name;
  std::string label;
};

/// Element names are mapped to 1..n by ascending bytewise order.
Partition from_labels(std::span<const LabeledElement> labels);

Partition meet(const Partition& p, const Partition& q);
Partition join(const Partition& p, const Partition& q);
/// True iff every block of p lies inside a block of q (q is coarser).
bool finer_or_equal(const Partition& p, const Partition& q);
/// True iff p > q with a rank step of exactly one.
bool covers(const Partition& p, const Partition& q);

int rank(const Partition& p) noexcept;
ClassVector class_vector(const Partition& p);
long long size(const Partition& p) noexcept;
PairIndicator indicator(const Partition& p);

struct InducedPartition {
  Partition partition;
  /// elements[i-1] is the original element re-indexed as i.
  ElementSet elements;

  /// Re-indexed position of an original element, or 0 when it was dropped.
  int to_new(int original) const noexcept;
};

InducedPartition induce(const Partition& p, const ElementSet& subset);

/// The atom [ij], i.e. {i,j} plus singletons.
Partition atom(int n, int i, int j);
/// All C(n,2) atoms in lexicographic pair order. n = 2 yields {top}.
std::vector<Partition> atoms_of(int n);

bool is_modular(const Partition& p) noexcept;
/// {A} united with singletons elsewhere.
Partition modular_partition(int n, const ElementSet& a);

/// Lazily walks restricted growth strings in lexicographic order.
class PartitionStream {
 public:
  explicit PartitionStream(int n, int limit = kDefaultEnumerationLimit);

  /// Next partition, or nullopt once exhausted.
  std::optional<Partition> next();
  /// Advances without materializing a Partition; labels() is then current.
  bool advance();
  std::span<const int> labels() const noexcept { return labels_; }
  void restart();

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> labels_;
  std::vector<int> prefix_max_;
};

std::vector<Partition> enumerate_partitions(int n, int limit = kDefaultEnumerationLimit);
std::vector<Partition> enumerate_modular(int n, int limit = kDefaultEnumerationLimit);
std::vector<Partition> complements(const Partition& p, int limit = kDefaultEnumerationLimit);

void require_same_n(const Partition& p, const Partition& q);
void require_enumerable(int n, int limit);

}  // namespace partdist
