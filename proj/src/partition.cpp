#include "partdist/partition.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <utility>

#include "partdist/errors.hpp"

namespace partdist {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t count) : parent_(count) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// First-seen relabelling turns any labelling into a restricted growth string.
template <typename Key>
std::vector<int> canonical_labels_from(const std::vector<Key>& keys) {
  std::map<Key, int> seen;
  std::vector<int> out;
  out.reserve(keys.size());
  for (const Key& key : keys) {
    auto [it, inserted] = seen.emplace(key, static_cast<int>(seen.size()));
    out.push_back(it->second);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

// ---------------------------------------------------------------------------
// ClassVector

ClassVector::ClassVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] < 0) {
      throw RangeError("class vector entry c_" + std::to_string(k + 1) + " is negative");
    }
  }
}

ClassVector ClassVector::from_block_sizes(std::span<const int> sizes) {
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw RangeError("block sizes must be positive");
    n += s;
  }
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (int s : sizes) ++counts[static_cast<std::size_t>(s - 1)];
  return ClassVector(std::move(counts));
}

int ClassVector::ground_size() const noexcept {
  int n = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) n += static_cast<int>(k + 1) * counts_[k];
  return n;
}

int ClassVector::num_blocks() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

long long ClassVector::size() const noexcept {
  long long s = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) s += counts_[k] * choose2(static_cast<long long>(k + 1));
  return s;
}

int ClassVector::count(int k) const noexcept {
  if (k < 1 || static_cast<std::size_t>(k) > counts_.size()) return 0;
  return counts_[static_cast<std::size_t>(k - 1)];
}

std::vector<int> ClassVector::block_sizes() const {
  std::vector<int> sizes;
  for (std::size_t k = counts_.size(); k-- > 0;) {
    sizes.insert(sizes.end(), static_cast<std::size_t>(counts_[k]), static_cast<int>(k + 1));
  }
  return sizes;
}

std::string ClassVector::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int s : block_sizes()) {
    if (!first) out += ',';
    out += std::to_string(s);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// PairIndicator

PairIndicator::PairIndicator(int n) : n_(n) {
  if (n < 0) throw RangeError("negative ground set size");
  words_.assign((length() + 63) / 64, 0);
}

std::size_t PairIndicator::index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) {
    throw RangeError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1..n");
  }
  const auto ui = static_cast<std::size_t>(i);
  const auto un = static_cast<std::size_t>(n);
  return (ui - 1) * (2 * un - ui) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::size_t PairIndicator::length() const noexcept {
  return static_cast<std::size_t>(choose2(n_));
}

bool PairIndicator::bit(std::size_t position) const {
  return (words_[position / 64] >> (position % 64)) & 1U;
}

bool PairIndicator::test(int i, int j) const { return bit(index(n_, i, j)); }

void PairIndicator::set(int i, int j, bool value) {
  const std::size_t pos = index(n_, i, j);
  const std::uint64_t mask = std::uint64_t{1} << (pos % 64);
  if (value) {
    words_[pos / 64] |= mask;
  } else {
    words_[pos / 64] &= ~mask;
  }
}

std::size_t PairIndicator::popcount() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void PairIndicator::require_same_n(const PairIndicator& other) const {
  if (n_ != other.n_) throw MismatchError("pair indicators over different ground sets");
}

std::size_t PairIndicator::hamming(const PairIndicator& other) const {
  require_same_n(other);
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[w] ^ other.words_[w]));
  }
  return total;
}

PairIndicator PairIndicator::operator&(const PairIndicator& other) const {
  require_same_n(other);
  PairIndicator out(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
  return out;
}

PairIndicator PairIndicator::operator|(const PairIndicator& other) const {
  require_same_n(other);
  PairIndicator out(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] | other.words_[w];
  return out;
}

bool PairIndicator::is_below(const PairIndicator& other) const {
  require_same_n(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool PairIndicator::transitively_closed() const {
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (!test(i, j)) continue;
      for (int k = 1; k <= n_; ++k) {
        if (k == i || k == j) continue;
        if (test(j, k) && !test(i, k)) return false;
        if (test(i, k) && !test(j, k)) return false;
      }
    }
  }
  return true;
}

std::string PairIndicator::to_bit_string() const {
  std::string out;
  out.reserve(length());
  for (std::size_t pos = 0; pos < length(); ++pos) out += bit(pos) ? '1' : '0';
  return out;
}

// ---------------------------------------------------------------------------
// Partition

Partition Partition::from_canonical_labels(std::vector<int> labels) {
  Partition p;
  p.n_ = static_cast<int>(labels.size());
  const int blocks = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  p.blocks_.assign(static_cast<std::size_t>(blocks), {});
  for (std::size_t e = 0; e < labels.size(); ++e) {
    p.blocks_[static_cast<std::size_t>(labels[e])].push_back(static_cast<int>(e + 1));
  }
  p.labels_ = std::move(labels);
  return p;
}

Partition Partition::from_blocks(int n, std::vector<ElementSet> blocks) {
  if (n < 1) throw ValidationError("ground set size must be positive, got " + std::to_string(n));
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ValidationError("block " + std::to_string(b) + " is empty");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) {
        throw ValidationError("element " + std::to_string(e) + " in block " + std::to_string(b) +
                              " is outside 1.." + std::to_string(n));
      }
      int& slot = owner[static_cast<std::size_t>(e - 1)];
      if (slot >= 0) {
        throw ValidationError("element " + std::to_string(e) + " appears in blocks " +
                              std::to_string(slot) + " and " + std::to_string(b));
      }
      slot = static_cast<int>(b);
    }
  }
  for (int e = 1; e <= n; ++e) {
    if (owner[static_cast<std::size_t>(e - 1)] < 0) {
      throw ValidationError("element " + std::to_string(e) + " is not covered by any block");
    }
  }
  return from_canonical_labels(canonical_labels_from(owner));
}

Partition Partition::from_block_labels(std::span<const int> labels) {
  if (labels.empty()) throw ValidationError("a partition needs at least one element");
  return from_canonical_labels(canonical_labels_from(std::vector<int>(labels.begin(), labels.end())));
}

Partition Partition::bottom(int n) {
  if (n < 1) throw ValidationError("ground set size must be positive");
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  return from_canonical_labels(std::move(labels));
}

Partition Partition::top(int n) {
  if (n < 1) throw ValidationError("ground set size must be positive");
  return from_canonical_labels(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Partition Partition::parse(std::string_view literal) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= literal.size(); ++pos) {
    if (pos == literal.size() || literal[pos] == '|') {
      std::string_view token = trim(literal.substr(start, pos - start));
      if (token.empty()) {
        throw ValidationError("empty block at column " + std::to_string(start + 1) + " of '" +
                              std::string(literal) + "'");
      }
      tokens.push_back(token);
      start = pos + 1;
    }
  }

  const bool spaced = std::any_of(tokens.begin(), tokens.end(), has_space);
  const bool compressible =
      !spaced && std::all_of(tokens.begin(), tokens.end(), [](std::string_view t) {
        return std::all_of(t.begin(), t.end(), [](char c) { return c >= '1' && c <= '9'; });
      });

  std::vector<ElementSet> blocks;
  int n = 0;
  for (std::string_view token : tokens) {
    ElementSet block;
    if (compressible) {
      for (char c : token) block.push_back(c - '0');
    } else {
      std::size_t i = 0;
      while (i < token.size()) {
        while (i < token.size() && std::isspace(static_cast<unsigned char>(token[i]))) ++i;
        std::size_t j = i;
        while (j < token.size() && !std::isspace(static_cast<unsigned char>(token[j]))) ++j;
        if (j == i) break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data() + i, token.data() + j, value);
        if (ec != std::errc{} || ptr != token.data() + j) {
          const auto column = static_cast<std::size_t>(token.data() + i - literal.data()) + 1;
          throw ValidationError("invalid element '" + std::string(token.substr(i, j - i)) +
                                "' at column " + std::to_string(column));
        }
        block.push_back(value);
        i = j;
      }
    }
    n += static_cast<int>(block.size());
    blocks.push_back(std::move(block));
  }
  return from_blocks(n, std::move(blocks));
}

std::size_t Partition::block_of(int element) const {
  if (element < 1 || element > n_) {
    throw RangeError("element " + std::to_string(element) + " outside 1.." + std::to_string(n_));
  }
  return static_cast<std::size_t>(labels_[static_cast<std::size_t>(element - 1)]);
}

bool Partition::same_block(int i, int j) const { return block_of(i) == block_of(j); }

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += '|';
    for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
      if (n_ > 9 && k > 0) out += ' ';
      out += std::to_string(blocks_[b][k]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.labels_.begin(), a.labels_.end(),
                                                b.labels_.begin(), b.labels_.end());
}

Partition from_labels(std::span<const LabeledElement> labels) {
  if (labels.empty()) throw ValidationError("no labelled elements");
  std::vector<const LabeledElement*> order;
  order.reserve(labels.size());
  for (const auto& l : labels) order.push_back(&l);
  std::sort(order.begin(), order.end(),
            [](const LabeledElement* a, const LabeledElement* b) { return a->name < b->name; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i]->name == order[i - 1]->name) {
      throw ValidationError("duplicate element name '" + order[i]->name + "'");
    }
  }
  std::vector<std::string> cluster;
  cluster.reserve(order.size());
  for (const auto* l : order) cluster.push_back(l->label);
  std::vector<int> labels_out = canonical_labels_from(cluster);
  return Partition::from_block_labels(labels_out);
}

// ---------------------------------------------------------------------------
// Lattice operations

void require_same_n(const Partition& p, const Partition& q) {
  if (p.n() != q.n()) {
    throw MismatchError("partitions of different ground sets: n=" + std::to_string(p.n()) +
                        " vs n=" + std::to_string(q.n()));
  }
}

void require_enumerable(int n, int limit) {
  if (n < 1) throw RangeError("enumeration needs n >= 1, got " + std::to_string(n));
  if (n > limit) {
    throw CapacityError("n=" + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(limit));
  }
}

Partition meet(const Partition& p, const Partition& q) {
  require_same_n(p, q);
  std::vector<std::pair<int, int>> keys;
  keys.reserve(static_cast<std::size_t>(p.n()));
  for (std::size_t e = 0; e < static_cast<std::size_t>(p.n()); ++e) {
    keys.emplace_back(p.labels()[e], q.labels()[e]);
  }
  return Partition::from_block_labels(canonical_labels_from(keys));
}

Partition join(const Partition& p, const Partition& q) {
  require_same_n(p, q);
  DisjointSets sets(static_cast<std::size_t>(p.n()));
  for (const Partition* side : {&p, &q}) {
    for (const ElementSet& block : side->blocks()) {
      for (int e : block) sets.unite(static_cast<std::size_t>(block.front() - 1), static_cast<std::size_t>(e - 1));
    }
  }
  std::vector<std::size_t> roots;
  roots.reserve(static_cast<std::size_t>(p.n()));
  for (std::size_t e = 0; e < static_cast<std::size_t>(p.n()); ++e) roots.push_back(sets.find(e));
  return Partition::from_block_labels(canonical_labels_from(roots));
}

bool finer_or_equal(const Partition& p, const Partition& q) {
  require_same_n(p, q);
  for (const ElementSet& block : p.blocks()) {
    const std::size_t target = q.block_of(block.front());
    for (int e : block) {
      if (q.block_of(e) != target) return false;
    }
  }
  return true;
}

bool covers(const Partition& p, const Partition& q) {
  return finer_or_equal(q, p) && rank(p) == rank(q) + 1;
}

int rank(const Partition& p) noexcept { return p.n() - static_cast<int>(p.num_blocks()); }

ClassVector class_vector(const Partition& p) {
  std::vector<int> counts(static_cast<std::size_t>(p.n()), 0);
  for (const ElementSet& block : p.blocks()) ++counts[block.size() - 1];
  return ClassVector(std::move(counts));
}

long long size(const Partition& p) noexcept {
  long long s = 0;
  for (const ElementSet& block : p.blocks()) s += choose2(static_cast<long long>(block.size()));
  return s;
}

PairIndicator indicator(const Partition& p) {
  PairIndicator bits(p.n());
  for (const ElementSet& block : p.blocks()) {
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) bits.set(block[a], block[b]);
    }
  }
  return bits;
}

int InducedPartition::to_new(int original) const noexcept {
  auto it = std::lower_bound(elements.begin(), elements.end(), original);
  if (it == elements.end() || *it != original) return 0;
  return static_cast<int>(it - elements.begin()) + 1;
}

InducedPartition induce(const Partition& p, const ElementSet& subset) {
  if (subset.empty()) throw ValidationError("cannot induce a partition on the empty set");
  ElementSet elements = subset;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<int> labels;
  labels.reserve(elements.size());
  for (int e : elements) {
    if (e < 1 || e > p.n()) {
      throw ValidationError("element " + std::to_string(e) + " is outside 1.." + std::to_string(p.n()));
    }
    labels.push_back(p.labels()[static_cast<std::size_t>(e - 1)]);
  }
  return InducedPartition{Partition::from_block_labels(labels), std::move(elements)};
}

Partition atom(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) throw RangeError("atom needs 1 <= i < j <= n");
  return modular_partition(n, {i, j});
}

std::vector<Partition> atoms_of(int n) {
  if (n < 2) throw RangeError("atoms exist only for n >= 2");
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(choose2(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(atom(n, i, j));
  }
  return out;
}

bool is_modular(const Partition& p) noexcept {
  int big = 0;
  for (const ElementSet& block : p.blocks()) big += block.size() >= 2 ? 1 : 0;
  return big <= 1;
}

Partition modular_partition(int n, const ElementSet& a) {
  if (a.empty()) throw ValidationError("modular partition needs a non-empty block");
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  for (int e : a) {
    if (e < 1 || e > n) throw ValidationError("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    labels[static_cast<std::size_t>(e - 1)] = 0;
  }
  return Partition::from_block_labels(labels);
}

// ---------------------------------------------------------------------------
// Enumeration

PartitionStream::PartitionStream(int n, int limit) : n_(n) {
  require_enumerable(n, limit);
  labels_.assign(static_cast<std::size_t>(n), 0);
  prefix_max_.assign(static_cast<std::size_t>(n), 0);
}

void PartitionStream::restart() {
  started_ = false;
  done_ = false;
  std::fill(labels_.begin(), labels_.end(), 0);
  std::fill(prefix_max_.begin(), prefix_max_.end(), 0);
}

bool PartitionStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (std::size_t i = static_cast<std::size_t>(n_); i-- > 1;) {
    if (labels_[i] <= prefix_max_[i - 1]) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (std::size_t j = i + 1; j < static_cast<std::size_t>(n_); ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  done_ = true;
  return false;
}

std::optional<Partition> PartitionStream::next() {
  if (!advance()) return std::nullopt;
  return Partition::from_block_labels(labels_);
}

std::vector<Partition> enumerate_partitions(int n, int limit) {
  PartitionStream stream(n, limit);
  std::vector<Partition> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Partition> enumerate_modular(int n, int limit) {
  require_enumerable(n, limit);
  std::vector<Partition> out;
  out.push_back(Partition::bottom(n));
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    if (std::popcount(mask) < 2) continue;
    ElementSet a;
    for (int e = 1; e <= n; ++e) {
      if (mask >> (e - 1) & 1U) a.push_back(e);
    }
    out.push_back(modular_partition(n, a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> complements(const Partition& p, int limit) {
  const int n = p.n();
  PartitionStream stream(n, limit);
  std::vector<Partition> out;
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> seen(un * un);
  while (stream.advance()) {
    std::span<const int> q = stream.labels();
    // meet is the bottom iff no two elements share both labels.
    std::fill(seen.begin(), seen.end(), 0);
    bool meet_is_bottom = true;
    for (std::size_t e = 0; e < un && meet_is_bottom; ++e) {
      int& cell = seen[static_cast<std::size_t>(p.labels()[e]) * un + static_cast<std::size_t>(q[e])];
      meet_is_bottom = cell++ == 0;
    }
    if (!meet_is_bottom) continue;
    DisjointSets sets(2 * un);
    for (std::size_t e = 0; e < un; ++e) {
      sets.unite(static_cast<std::size_t>(p.labels()[e]), un + static_cast<std::size_t>(q[e]));
    }
    const std::size_t root = sets.find(static_cast<std::size_t>(p.labels()[0]));
    bool join_is_top = true;
    for (std::size_t e = 0; e < un && join_is_top; ++e) {
      join_is_top = sets.find(static_cast<std::size_t>(p.labels()[e])) == root;
    }
    if (join_is_top) out.push_back(Partition::from_block_labels(q));
  }
  return out;
}

}  // namespace partdist
