#include "partdist/bounds.hpp"

#include <algorithm>

#include "partdist/errors.hpp"

namespace partdist {

namespace {

void require_k(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw RangeError("k=" + std::to_string(k) + " outside 0.." + std::to_string(n - 1) + " for n=" +
                     std::to_string(n));
  }
}

long long floor_div(long long a, long long b) { return a / b; }
long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Cost of one outside-linked element of A absorbing m atoms, split as evenly
// as possible between the two partitions.
long long split_cost(long long m) { return choose2(m / 2 + 1) + choose2(ceil_div(m, 2) + 1); }

}  // namespace

std::string_view bound_case_name(BoundCase c) noexcept {
  switch (c) {
    case BoundCase::ZERO: return "ZERO";
    case BoundCase::SMALL_K: return "SMALL_K";
    case BoundCase::MID_K: return "MID_K";
    case BoundCase::TOP_K: return "TOP_K";
  }
  return "?";
}

long long max_ih_given_d(int n, int k) {
  require_k(n, k);
  return choose2(n) - choose2(n - k);
}

BoundCase min_case(int n, int k) {
  require_k(n, k);
  if (k == 0) return BoundCase::ZERO;
  // k = n-1 forces {top, bottom}; checked first since for n = 3 it also
  // satisfies k <= 2(n-k).
  if (k == n - 1) return BoundCase::TOP_K;
  if (k <= 2 * (n - k)) return BoundCase::SMALL_K;
  return BoundCase::MID_K;
}

long long min_ih_given_d(int n, int k) {
  switch (min_case(n, k)) {
    case BoundCase::ZERO: return 0;
    case BoundCase::SMALL_K: return k;
    case BoundCase::MID_K: return claim11_value(n, k);
    case BoundCase::TOP_K: return choose2(n);
  }
  return 0;
}

long long claim11_value(int n, int k) {
  if (!(2 * (n - k) < k && k < n - 1)) {
    throw RangeError("uniform-spreading bound needs 2(n-k) < k < n-1, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
  const long long inside = n - k;
  const long long a = floor_div(k, inside);
  const long long b = ceil_div(k, inside);
  const long long heavy = k - inside * a;
  const long long light = n - 2LL * k + inside * a;
  return heavy * split_cost(b) + light * split_cost(a);
}

long long constrained_max(const ClassVector& base, int k) {
  if (k < 0) throw RangeError("k must be non-negative");
  const std::vector<int> sizes = base.block_sizes();
  if (sizes.size() < 2) throw RangeError("constrained maximum needs at least two blocks in " + base.to_string());
  const long long b1 = sizes[0];
  const long long b2 = sizes[1];
  return choose2(b1 + k) - choose2(b1) + choose2(b2 + k) - choose2(b2);
}

long long constrained_min(const ClassVector& base, int k) {
  if (k < 1) throw RangeError("constrained minimum needs k >= 1");
  if (base.num_blocks() == 0) throw ValidationError("empty class vector");
  if (k <= 2 * base.count(1)) return k;
  return run_greedy(base, k).objective;
}

long long GreedyState::objective() const noexcept {
  long long total = 0;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    const long long s = block_sizes[b];
    total += choose2(s + degree_p[b]) + choose2(s + degree_q[b]) - 2 * choose2(s);
  }
  return total;
}

GreedyRun run_greedy(const ClassVector& base, int k, TieOrder ties) {
  if (k < 0) throw RangeError("k must be non-negative");
  if (base.num_blocks() == 0) throw ValidationError("empty class vector");
  GreedyRun run;
  GreedyState& st = run.state;
  st.base_class = base;
  st.k = k;
  st.block_sizes = base.block_sizes();
  st.degree_p.assign(st.block_sizes.size(), 0);
  st.degree_q.assign(st.block_sizes.size(), 0);

  std::vector<char> covered(static_cast<std::size_t>(k), 0);
  const std::size_t blocks = st.block_sizes.size();
  for (int m = 0; m < k; ++m) {
    const Side side = m % 2 == 0 ? Side::P : Side::Q;
    std::vector<int>& degree = side == Side::P ? st.degree_p : st.degree_q;

    // Edge weights do not depend on the element, so the element tie-break
    // simply picks the extreme uncovered one.
    int element = 0;
    for (int j = 0; j < k; ++j) {
      const int jj = ties == TieOrder::SMALLEST_FIRST ? j : k - 1 - j;
      if (!covered[static_cast<std::size_t>(jj)]) {
        element = jj + 1;
        break;
      }
    }
    std::size_t best = 0;
    long long best_weight = -1;
    for (std::size_t i = 0; i < blocks; ++i) {
      const std::size_t b = ties == TieOrder::SMALLEST_FIRST ? i : blocks - 1 - i;
      const long long w = choose2(static_cast<long long>(st.block_sizes[b]) + 1 + degree[b]);
      if (best_weight < 0 || w < best_weight) {
        best_weight = w;
        best = b;
      }
    }
    ++degree[best];
    covered[static_cast<std::size_t>(element - 1)] = 1;
    ++st.covered;
    st.step = m + 1;
    run.trace.push_back(GreedyStep{m + 1, side, best, element, best_weight});
  }
  run.objective = st.objective();
  return run;
}

std::vector<BoundResult> bounds_table(int n) {
  if (n < 2) throw RangeError("bounds table needs n >= 2");
  std::vector<BoundResult> rows;
  for (int k = 0; k < n; ++k) {
    rows.push_back(BoundResult{n, k, min_ih_given_d(n, k), max_ih_given_d(n, k), min_case(n, k)});
  }
  return rows;
}

}  // namespace partdist
