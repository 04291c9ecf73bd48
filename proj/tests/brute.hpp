#pragma once

// Slow reference implementations used only by the tests. Everything here works
// on raw label vectors and the "same block" relation, and shares no code with
// the library beyond the final conversion to Partition.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "partdist/partition.hpp"

namespace brute {

using Labels = std::vector<int>;  // labels[e-1] is the block of element e

inline bool same(const Labels& a, int i, int j) { return a[i - 1] == a[j - 1]; }

inline Labels canon(const Labels& a) {
  std::map<int, int> fresh;
  Labels out;
  for (int x : a) out.push_back(fresh.emplace(x, static_cast<int>(fresh.size())).first->second);
  return out;
}

// Each element either opens a new block or joins one of the existing ones.
inline void grow(int n, Labels& cur, int blocks, std::vector<Labels>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    grow(n, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

inline std::vector<Labels> all_partitions(int n) {
  std::vector<Labels> out;
  Labels cur;
  grow(n, cur, 0, out);
  return out;
}

inline int num_blocks(const Labels& a) { return static_cast<int>(std::set<int>(a.begin(), a.end()).size()); }

inline long long size(const Labels& a) {
  long long s = 0;
  const int n = static_cast<int>(a.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s += same(a, i, j);
  return s;
}

inline Labels meet(const Labels& a, const Labels& b) {
  std::map<std::pair<int, int>, int> cell;
  Labels out;
  for (std::size_t e = 0; e < a.size(); ++e) {
    out.push_back(cell.emplace(std::make_pair(a[e], b[e]), static_cast<int>(cell.size())).first->second);
  }
  return out;
}

// Transitive closure of the union of both relations, by relaxation.
inline Labels join(const Labels& a, const Labels& b) {
  const int n = static_cast<int>(a.size());
  Labels comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if ((same(a, i, j) || same(b, i, j)) && comp[i - 1] != comp[j - 1]) {
          const int lo = std::min(comp[i - 1], comp[j - 1]);
          comp[i - 1] = comp[j - 1] = lo;
          changed = true;
        }
      }
    }
  }
  return canon(comp);
}

// True iff every block of a lies inside a block of b.
inline bool finer(const Labels& a, const Labels& b) {
  const int n = static_cast<int>(a.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (same(a, i, j) && !same(b, i, j)) return false;
  return true;
}

inline long long ih(const Labels& a, const Labels& b) {
  long long d = 0;
  const int n = static_cast<int>(a.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d += same(a, i, j) != same(b, i, j);
  return d;
}

// n minus the largest subset on which both relations agree.
inline long long d_subsets(const Labels& a, const Labels& b) {
  const int n = static_cast<int>(a.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      if (!(mask >> (i - 1) & 1U)) continue;
      for (int j = i + 1; j <= n && ok; ++j) {
        if ((mask >> (j - 1) & 1U) && same(a, i, j) != same(b, i, j)) ok = false;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return n - best;
}

inline std::set<std::set<int>> block_sets(const Labels& a) {
  std::map<int, std::set<int>> blocks;
  for (std::size_t e = 0; e < a.size(); ++e) blocks[a[e]].insert(static_cast<int>(e + 1));
  std::set<std::set<int>> out;
  for (auto& [label, members] : blocks) out.insert(members);
  return out;
}

inline long long sd(const Labels& a, const Labels& b) {
  const auto x = block_sets(a);
  const auto y = block_sets(b);
  long long d = 0;
  for (const auto& s : x) d += !y.count(s);
  for (const auto& s : y) d += !x.count(s);
  return d;
}

// Maximum total overlap over all injective block assignments.
inline long long best_assignment(const std::vector<std::vector<long long>>& w) {
  const std::size_t rows = w.size();
  const std::size_t cols = rows ? w[0].size() : 0;
  const std::size_t m = std::max(rows, cols);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  long long best = 0;
  do {
    long long total = 0;
    for (std::size_t r = 0; r < rows; ++r)
      if (perm[r] < cols) total += w[r][perm[r]];
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline long long pd_assignment(const Labels& a, const Labels& b) {
  const int ra = num_blocks(a);
  const int rb = num_blocks(b);
  const Labels ca = canon(a);
  const Labels cb = canon(b);
  std::vector<std::vector<long long>> w(static_cast<std::size_t>(ra), std::vector<long long>(static_cast<std::size_t>(rb), 0));
  for (std::size_t e = 0; e < a.size(); ++e) ++w[static_cast<std::size_t>(ca[e])][static_cast<std::size_t>(cb[e])];
  return static_cast<long long>(a.size()) - best_assignment(w);
}

inline partdist::Partition to_partition(const Labels& a) { return partdist::Partition::from_block_labels(a); }

inline Labels from_partition(const partdist::Partition& p) { return Labels(p.labels().begin(), p.labels().end()); }

}  // namespace brute
