#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "partdist/classifiers.hpp"
#include "partdist/partition.hpp"

namespace partdist {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefinitionalLimit = 16;
/// Largest n accepted by verify_claims and the stratified pair scans.
inline constexpr int kVerifyLimit = 7;

/// Subsets of {1..n} as bitmasks: bit e-1 stands for element e.
using SubsetMask = std::uint32_t;

ElementSet mask_elements(SubsetMask mask);

/// True iff P and Q induce the same partition on the subset.
bool coincide_on(const Partition& p, const Partition& q, SubsetMask subset);

/// Minimum number of deleted elements after which the two restrictions agree,
/// found by trying subsets from the largest cardinality down.
long long d_by_definition(const Partition& p, const Partition& q, int limit = kDefinitionalLimit);

/// Every coincidence set of maximum cardinality, in increasing mask order.
std::vector<SubsetMask> maximum_coincidence_sets(const Partition& p, const Partition& q,
                                                 int limit = kDefinitionalLimit);

/// Unordered pairs (i <= j in enumeration order) with d_by_definition = k.
std::vector<PartitionPair> pairs_with_d(int n, int k, int limit = kVerifyLimit);

/// Sizes realized by some partition of an n-set, ascending.
std::vector<long long> available_sizes(int n, int limit = kDefaultEnumerationLimit);

/// Alternating-sum formula in exact arithmetic. Throws RangeError unless 0 < k <= n.
BigInt stirling2(int n, int k);
/// Throws RangeError for n < 1.
BigInt bell(int n);

/// |A Δ B|. Throws ValidationError on elements outside 1..n.
long long subset_hamming(const ElementSet& a, const ElementSet& b, int n);

/// Exact min and max of a value over a family of pairs, with the first
/// attaining pair of each.
struct Extremes {
  long long min = 0;
  long long max = 0;
  PartitionPair argmin;
  PartitionPair argmax;
  std::size_t count = 0;

  void add(long long value, const Partition& p, const Partition& q);
};

/// IH extremes for every D value k = 0..n-1, from the definitional D.
std::vector<Extremes> ih_extremes_by_d(int n, int limit = kVerifyLimit);

/// IH extremes over pairs with D = k >= 1, keyed by (class of the shared
/// restriction on a maximum coincidence set, k). A pair whose maximum
/// coincidence sets have several classes is counted under each of them.
std::map<std::pair<ClassVector, int>, Extremes> constrained_extremes(int n, int limit = kVerifyLimit);

/// Atoms finer than P but not finer than the restriction of P to A padded
/// with singletons, as (i, j) pairs.
std::vector<std::pair<int, int>> extra_atoms(const Partition& p, SubsetMask a);

/// Both covering conditions on the atoms outside a maximum coincidence set:
/// their endpoints cover the complement of A and touch A. Vacuous when A = N.
bool covering_conditions_hold(const Partition& p, const Partition& q, SubsetMask a);

/// Deterministic pseudo-random pairs: each element gets a label uniform in
/// [0, m) with m uniform in [1, n].
std::vector<PartitionPair> sample_pairs(int n, std::size_t count, std::uint64_t seed);

struct ClaimReport {
  std::string claim_id;
  int n = 0;
  bool verified = false;
  std::optional<PartitionPair> counterexample;
  /// Construction or extremal pair supporting a verified claim, if any.
  std::optional<PartitionPair> witness;
  std::string detail;
};

/// Ids, in report order: C1 ... C12, EQ5, SIZES, MODFORMS.
std::vector<ClaimReport> verify_claims(int n);

std::string render_text(const std::vector<ClaimReport>& reports);
std::string render_json(const std::vector<ClaimReport>& reports);

}  // namespace partdist
