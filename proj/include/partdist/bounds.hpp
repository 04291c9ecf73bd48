#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "partdist/partition.hpp"

namespace partdist {

/// Which regime of k produced the lower bound.
enum class BoundCase { ZERO, SMALL_K, MID_K, TOP_K };

std::string_view bound_case_name(BoundCase c) noexcept;

/// Extremes of the indicator-Hamming distance over pairs with partition-distance k.
struct BoundResult {
  int n = 0;
  int k = 0;
  long long min_ih = 0;
  long long max_ih = 0;
  BoundCase min_case = BoundCase::ZERO;
};

/// C(n,2) - C(n-k,2). Throws RangeError unless 0 <= k <= n-1.
long long max_ih_given_d(int n, int k);
long long min_ih_given_d(int n, int k);
BoundCase min_case(int n, int k);

/// Uniform-spreading lower bound for 2(n-k) < k < n-1. Throws RangeError
/// outside that window.
long long claim11_value(int n, int k);

/// Both partitions absorb the k outside elements into one of the two largest
/// blocks of the shared restriction. Throws RangeError with fewer than two blocks.
long long constrained_max(const ClassVector& base, int k);
/// k when k <= 2 c_1, otherwise the greedy objective.
long long constrained_min(const ClassVector& base, int k);

enum class Side { P, Q };

struct GreedyStep {
  int step = 0;  // 1-based
  Side side = Side::P;
  std::size_t block = 0;
  int element = 0;  // 1..k, an outside element
  long long weight = 0;
};

/// Bipartite state between the blocks of the shared restriction (ordered by
/// non-increasing size) and the k outside elements.
struct GreedyState {
  ClassVector base_class;
  int k = 0;
  std::vector<int> block_sizes;
  std::vector<int> degree_p;
  std::vector<int> degree_q;
  int step = 0;
  int covered = 0;

  long long objective() const noexcept;
};

enum class TieOrder {
  SMALLEST_FIRST,  ///< smallest block index, then smallest element
  LARGEST_FIRST,   ///< the reverse; used to check tie invariance
};

struct GreedyRun {
  GreedyState state;
  std::vector<GreedyStep> trace;
  long long objective = 0;
};

/// Alternates sides P, Q, P, ... adding the cheapest edge to an uncovered
/// element, where an edge into block B costs C(|B| + 1 + degree_side(B), 2).
GreedyRun run_greedy(const ClassVector& base, int k, TieOrder ties = TieOrder::SMALLEST_FIRST);

/// Rows k = 0..n-1. Throws RangeError for n < 2.
std::vector<BoundResult> bounds_table(int n);

}  // namespace partdist
