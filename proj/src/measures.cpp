#include "partdist/measures.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdio>
#include <limits>
#include <numeric>

#include "partdist/errors.hpp"

namespace partdist {

namespace {

// Everything the six measures need, computed from one pass over the elements.
struct Overlap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long long> cells;  // |B_r ∩ C_c|, row-major
  long long n = 0;
  long long meet_blocks = 0;
  long long meet_size = 0;
  long long join_blocks = 0;
  long long join_size = 0;
  long long common_blocks = 0;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

Overlap overlap(const Partition& p, const Partition& q) {
  require_same_n(p, q);
  Overlap o;
  o.n = p.n();
  o.rows = p.num_blocks();
  o.cols = q.num_blocks();
  o.cells.assign(o.rows * o.cols, 0);
  for (std::size_t e = 0; e < static_cast<std::size_t>(p.n()); ++e) {
    ++o.cells[static_cast<std::size_t>(p.labels()[e]) * o.cols + static_cast<std::size_t>(q.labels()[e])];
  }

  std::vector<std::size_t> parent(o.rows + o.cols);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t r = 0; r < o.rows; ++r) {
    const auto row_size = static_cast<long long>(p.blocks()[r].size());
    for (std::size_t c = 0; c < o.cols; ++c) {
      const long long cell = o.cells[r * o.cols + c];
      if (cell == 0) continue;
      ++o.meet_blocks;
      o.meet_size += choose2(cell);
      if (cell == row_size && cell == static_cast<long long>(q.blocks()[c].size())) ++o.common_blocks;
      const std::size_t a = find_root(parent, r);
      const std::size_t b = find_root(parent, o.rows + c);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::vector<long long> component(o.rows, 0);
  for (std::size_t r = 0; r < o.rows; ++r) {
    component[find_root(parent, r)] += static_cast<long long>(p.blocks()[r].size());
  }
  for (long long total : component) {
    if (total == 0) continue;
    ++o.join_blocks;
    o.join_size += choose2(total);
  }
  return o;
}

long long rank_of(const Partition& p) { return p.n() - static_cast<long long>(p.num_blocks()); }

long long pd_from(const Overlap& o) { return o.n - max_weight_matching(o.rows, o.cols, o.cells); }

long long sd_from(const Overlap& o) {
  return static_cast<long long>(o.rows + o.cols) - 2 * o.common_blocks;
}

long long rb_from(const Overlap& o) { return o.meet_blocks - o.join_blocks; }

long long rbp_from(const Partition& p, const Partition& q, const Overlap& o) {
  return rank_of(p) + rank_of(q) - 2 * (o.n - o.meet_blocks);
}

long long sb_from(const Overlap& o) { return o.join_size - o.meet_size; }

long long ih_from(const Partition& p, const Partition& q, const Overlap& o) {
  const long long value = size(p) + size(q) - 2 * o.meet_size;
#ifndef NDEBUG
  assert(value == static_cast<long long>(indicator(p).hamming(indicator(q))));
#endif
  return value;
}

}  // namespace

std::string_view measure_name(MeasureId id) noexcept {
  switch (id) {
    case MeasureId::PD: return "pd";
    case MeasureId::SD: return "sd";
    case MeasureId::RB: return "rb";
    case MeasureId::RBP: return "rbp";
    case MeasureId::SB: return "sb";
    case MeasureId::IH: return "ih";
  }
  return "?";
}

std::string_view measure_tag(MeasureId id) noexcept {
  switch (id) {
    case MeasureId::PD: return "PD";
    case MeasureId::SD: return "SD";
    case MeasureId::RB: return "RB";
    case MeasureId::RBP: return "RBP";
    case MeasureId::SB: return "SB";
    case MeasureId::IH: return "IH";
  }
  return "?";
}

MeasureId parse_measure(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (MeasureId id : kAllMeasures) {
    if (lowered == measure_name(id)) return id;
  }
  throw ValidationError("unknown measure '" + std::string(name) + "' (expected pd, sd, rb, rbp, sb or ih)");
}

std::string DistanceValue::normalized_string() const {
  char decimal[32];
  std::snprintf(decimal, sizeof decimal, "%.6f", normalized.to_double());
  if (normalized.num == 0) return std::string("0 (") + decimal + ")";
  return std::to_string(normalized.num) + "/" + std::to_string(normalized.den) + " (" + decimal + ")";
}

DistanceValue normalize(long long raw) {
  if (raw < 0) throw RangeError("distance values are non-negative");
  // gcd(raw, raw + 1) = 1, so the fraction is already reduced.
  return DistanceValue{raw, raw == 0 ? Rational{0, 1} : Rational{raw, raw + 1}};
}

long long max_weight_matching(std::size_t rows, std::size_t cols, const std::vector<long long>& weights) {
  if (weights.size() != rows * cols) throw ValidationError("weight table has the wrong shape");
  const std::size_t m = std::max(rows, cols);
  if (m == 0) return 0;
  const long long top = weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end());
  auto cost = [&](std::size_t i, std::size_t j) -> long long {
    const long long w = (i < rows && j < cols) ? weights[i * cols + j] : 0;
    return top - w;
  };

  // Hungarian method with potentials on the square padding, 1-based.
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(m + 1, 0), v(m + 1, 0), way_cost(m + 1);
  std::vector<std::size_t> match(m + 1, 0), way(m + 1, 0);
  std::vector<char> used(m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(way_cost.begin(), way_cost.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      long long delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const long long reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < way_cost[j]) {
          way_cost[j] = reduced;
          way[j] = j0;
        }
        if (way_cost[j] < delta) {
          delta = way_cost[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          way_cost[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  long long total = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t i = match[j] - 1;
    if (i < rows && j - 1 < cols) total += weights[i * cols + (j - 1)];
  }
  return total;
}

long long pd_distance(const Partition& p, const Partition& q) { return pd_from(overlap(p, q)); }
long long delta_sd(const Partition& p, const Partition& q) { return sd_from(overlap(p, q)); }
long long delta_rb(const Partition& p, const Partition& q) { return rb_from(overlap(p, q)); }
long long delta_rb_plus(const Partition& p, const Partition& q) { return rbp_from(p, q, overlap(p, q)); }
long long delta_sb(const Partition& p, const Partition& q) { return sb_from(overlap(p, q)); }
long long delta_ih(const Partition& p, const Partition& q) { return ih_from(p, q, overlap(p, q)); }

long long raw_distance(MeasureId id, const Partition& p, const Partition& q) {
  const Overlap o = overlap(p, q);
  switch (id) {
    case MeasureId::PD: return pd_from(o);
    case MeasureId::SD: return sd_from(o);
    case MeasureId::RB: return rb_from(o);
    case MeasureId::RBP: return rbp_from(p, q, o);
    case MeasureId::SB: return sb_from(o);
    case MeasureId::IH: return ih_from(p, q, o);
  }
  throw ValidationError("unknown measure id");
}

DistanceValue distance(MeasureId id, const Partition& p, const Partition& q) {
  return normalize(raw_distance(id, p, q));
}

std::array<long long, 6> evaluate_all(const Partition& p, const Partition& q) {
  const Overlap o = overlap(p, q);
  return {pd_from(o), sd_from(o), rb_from(o), rbp_from(p, q, o), sb_from(o), ih_from(p, q, o)};
}

}  // namespace partdist
