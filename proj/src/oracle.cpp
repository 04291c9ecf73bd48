#include "partdist/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "partdist/bounds.hpp"
#include "partdist/errors.hpp"
#include "partdist/measures.hpp"

namespace partdist {

namespace {

void require_definitional(int n, int limit) {
  if (n > limit || n > 31) {
    throw CapacityError("definitional D is limited to n <= " + std::to_string(std::min(limit, 31)) +
                        ", got n=" + std::to_string(n));
  }
}

// diff[e] has bit f set when exactly one of P, Q puts e and f together.
std::vector<SubsetMask> disagreement_masks(const Partition& p, const Partition& q) {
  const int n = p.n();
  std::vector<SubsetMask> diff(static_cast<std::size_t>(n), 0);
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      const auto ue = static_cast<std::size_t>(e);
      const auto uf = static_cast<std::size_t>(f);
      const bool in_p = p.labels()[ue] == p.labels()[uf];
      const bool in_q = q.labels()[ue] == q.labels()[uf];
      if (in_p != in_q) {
        diff[ue] |= SubsetMask{1} << f;
        diff[uf] |= SubsetMask{1} << e;
      }
    }
  }
  return diff;
}

bool independent(const std::vector<SubsetMask>& diff, SubsetMask mask) {
  for (SubsetMask rest = mask; rest != 0; rest &= rest - 1) {
    if (diff[static_cast<std::size_t>(std::countr_zero(rest))] & mask) return false;
  }
  return true;
}

// Next mask with the same popcount (Gosper's hack).
SubsetMask next_same_popcount(SubsetMask x) {
  const SubsetMask c = x & (~x + 1);
  const SubsetMask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

template <typename Visit>
void for_each_subset_of_size(int n, int size, Visit visit) {
  if (size == 0 || size > n) return;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask < end;
       mask = next_same_popcount(static_cast<SubsetMask>(mask))) {
    if (!visit(static_cast<SubsetMask>(mask))) return;
    if (mask == ((std::uint64_t{1} << size) - 1) << (n - size)) return;
  }
}

int max_coincidence_size(const std::vector<SubsetMask>& diff, int n) {
  for (int size = n; size >= 1; --size) {
    bool found = false;
    for_each_subset_of_size(n, size, [&](SubsetMask m) {
      found = independent(diff, m);
      return !found;
    });
    if (found) return size;
  }
  return 0;
}

SubsetMask full_mask(int n) { return n >= 32 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1; }

long long common_blocks(const Partition& p, const Partition& q) {
  long long common = 0;
  for (const ElementSet& b : p.blocks()) {
    if (std::find(q.blocks().begin(), q.blocks().end(), b) != q.blocks().end()) ++common;
  }
  return common;
}

std::string pair_string(const Partition& p, const Partition& q) {
  return "(" + p.to_string() + ", " + q.to_string() + ")";
}

// First failure recorder for a claim.
struct Tally {
  std::optional<PartitionPair> counterexample;
  std::size_t failures = 0;
  std::size_t checked = 0;

  void record(bool ok, const Partition& p, const Partition& q) {
    ++checked;
    if (ok) return;
    ++failures;
    if (!counterexample) counterexample = PartitionPair{p, q};
  }
};

ClaimReport from_tally(std::string id, int n, const Tally& t, std::string what) {
  ClaimReport r;
  r.claim_id = std::move(id);
  r.n = n;
  r.verified = t.failures == 0;
  r.counterexample = t.counterexample;
  r.detail = std::move(what) + ": " + std::to_string(t.checked) + " checked, " + std::to_string(t.failures) +
             " failing";
  if (t.counterexample) r.detail += "; first " + pair_string(t.counterexample->first, t.counterexample->second);
  return r;
}

void integer_partitions(int remaining, int largest, std::vector<int>& parts, std::set<long long>& sizes) {
  if (remaining == 0) {
    long long s = 0;
    for (int x : parts) s += choose2(x);
    sizes.insert(s);
    return;
  }
  for (int x = std::min(remaining, largest); x >= 1; --x) {
    parts.push_back(x);
    integer_partitions(remaining - x, x, parts, sizes);
    parts.pop_back();
  }
}

// Two constructions showing that D and SD miss their maximum on some pair of
// complements; searched over small odd n.
ClaimReport claim3_report() {
  ClaimReport r;
  r.claim_id = "C3";
  std::ostringstream detail;
  bool d_found = false;
  bool sd_found = false;
  for (int n : {5, 7, 9, 11}) {
    const int half = (n - 1) / 2;
    if (!d_found && half >= 2) {
      // P = {A, B, {i}}, Q = {i, j, j'} plus singletons, j in A, j' in B.
      ElementSet a, b;
      for (int e = 1; e <= half; ++e) a.push_back(e);
      for (int e = half + 1; e <= 2 * half; ++e) b.push_back(e);
      const Partition p = Partition::from_blocks(n, {a, b, {n}});
      const Partition q = modular_partition(n, {1, half + 1, n});
      const long long d = pd_distance(p, q);
      const bool complements = meet(p, q) == Partition::bottom(n) && join(p, q) == Partition::top(n);
      if (complements && d < n - 1) {
        d_found = true;
        r.witness = PartitionPair{p, q};
        r.n = n;
        detail << "D: n=" << n << " complements " << pair_string(p, q) << " D=" << d << " < " << n - 1;
      }
    }
    if (!sd_found && (n + 1) % 4 == 0) {
      // Only 2- and 1-blocks; A and B share exactly one element.
      const int pairs = (n + 1) / 4;
      std::vector<ElementSet> pb, qb;
      int next = 1;
      for (int t = 0; t < pairs; ++t, next += 2) pb.push_back({next, next + 1});
      const int shared = next - 1;
      qb.push_back({shared, next});
      ++next;
      for (int t = 1; t < pairs; ++t, next += 2) qb.push_back({next, next + 1});
      auto pad = [n](std::vector<ElementSet> blocks) {
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& bl : blocks) {
          for (int e : bl) used[static_cast<std::size_t>(e)] = 1;
        }
        for (int e = 1; e <= n; ++e) {
          if (!used[static_cast<std::size_t>(e)]) blocks.push_back({e});
        }
        return Partition::from_blocks(n, std::move(blocks));
      };
      if (next - 1 <= n) {
        const Partition p = pad(pb);
        const Partition q = pad(qb);
        const long long sd = delta_sd(p, q);
        const long long corner = delta_sd(Partition::top(n), Partition::bottom(n));
        if (sd > corner) {
          sd_found = true;
          if (d_found) detail << "; ";
          detail << "SD: n=" << n << ' ' << pair_string(p, q) << " SD=" << sd << " > " << corner;
        }
      }
    }
  }
  r.verified = d_found && sd_found;
  if (!r.verified) detail << (d_found ? "" : " no D construction found") << (sd_found ? "" : " no SD construction found");
  r.detail = detail.str();
  return r;
}

ClaimReport modular_forms_report(int n) {
  ClaimReport r;
  r.claim_id = "MODFORMS";
  r.n = n;
  std::map<std::string, std::size_t> failing;
  std::size_t checked = 0;
  auto expect = [&](const char* name, long long got, long long want, const Partition& p, const Partition& q) {
    ++checked;
    if (got == want) return;
    ++failing[name];
    if (!r.counterexample) {
      r.counterexample = PartitionPair{p, q};
      r.detail = std::string("first failure ") + name + " on " + pair_string(p, q) + ": got " +
                 std::to_string(got) + ", formula " + std::to_string(want) + "; ";
    }
  };

  if (n >= 2) {
    const Partition bot = Partition::bottom(n);
    const Partition top = Partition::top(n);
    const auto v = evaluate_all(top, bot);
    expect("D(top,bottom)", v[0], n - 1, top, bot);
    expect("SD(top,bottom)", v[1], n + 1, top, bot);
    expect("RB(top,bottom)", v[2], n - 1, top, bot);
    expect("SB(top,bottom)", v[4], choose2(n), top, bot);
    expect("IH(top,bottom)", v[5], choose2(n), top, bot);
  }
  const SubsetMask all = full_mask(n);
  std::vector<SubsetMask> proper;
  for (SubsetMask m = 1; m < all; ++m) {
    if (std::popcount(m) >= 2) proper.push_back(m);
  }
  const Partition bot = Partition::bottom(n);
  const Partition top = Partition::top(n);
  for (SubsetMask a : proper) {
    const long long sa = std::popcount(a);
    const Partition pa = modular_partition(n, mask_elements(a));
    auto v = evaluate_all(pa, bot);
    expect("D(A,bottom)", v[0], sa - 1, pa, bot);
    expect("SD(A,bottom)", v[1], sa + 1, pa, bot);
    expect("RB(A,bottom)", v[2], sa - 1, pa, bot);
    expect("SB(A,bottom)", v[4], choose2(sa), pa, bot);
    expect("IH(A,bottom)", v[5], choose2(sa), pa, bot);
    v = evaluate_all(pa, top);
    expect("D(A,top)", v[0], n - sa, pa, top);
    expect("SD(A,top)", v[1], n - sa + 2, pa, top);
    expect("RB(A,top)", v[2], n - sa, pa, top);
    expect("SB(A,top)", v[4], choose2(n) - choose2(sa), pa, top);
    expect("IH(A,top)", v[5], choose2(n) - choose2(sa), pa, top);
    const SubsetMask ac = all & ~a;
    if (std::popcount(ac) >= 2) {
      const Partition pc = modular_partition(n, mask_elements(ac));
      v = evaluate_all(pa, pc);
      expect("D(A,A^c)", v[0], n - 2, pa, pc);
      expect("SD(A,A^c)", v[1], n + 2, pa, pc);
      expect("RB(A,A^c)", v[2], n - 2, pa, pc);
      expect("SB(A,A^c)", v[4], choose2(sa) + choose2(n - sa), pa, pc);
      expect("IH(A,A^c)", v[5], choose2(sa) + choose2(n - sa), pa, pc);
    }
    for (SubsetMask b : proper) {
      if (b == a || b == ac) continue;
      const long long sb = std::popcount(b);
      const long long inter = std::popcount(a & b);
      const long long uni = std::popcount(a | b);
      const long long outside = n - uni;
      const Partition pb = modular_partition(n, mask_elements(b));
      v = evaluate_all(pa, pb);
      expect("D(A,B) general", v[0], n - inter - outside, pa, pb);
      expect("D(A,B)=d(A,B)", v[0], subset_hamming(mask_elements(a), mask_elements(b), n), pa, pb);
      expect("SD(A,B) general", v[1], 2 * (n + 1) - (sa + sb) - 2 * outside, pa, pb);
      expect("RB(A,B) general", v[2], inter == 0 ? sa + sb - 2 : uni - inter, pa, pb);
      expect("SB(A,B) general", v[4], inter == 0 ? choose2(sa) + choose2(sb) : choose2(uni) - choose2(inter), pa,
             pb);
      expect("IH(A,B) general", v[5], choose2(sa) + choose2(sb) - 2 * choose2(inter), pa, pb);
    }
  }
  r.verified = failing.empty();
  std::ostringstream detail;
  detail << r.detail << checked << " closed-form evaluations";
  for (const auto& [name, count] : failing) detail << "; " << name << " fails " << count << "x";
  r.detail = detail.str();
  return r;
}

}  // namespace

ElementSet mask_elements(SubsetMask mask) {
  ElementSet out;
  for (SubsetMask rest = mask; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

bool coincide_on(const Partition& p, const Partition& q, SubsetMask subset) {
  require_same_n(p, q);
  if (subset == 0) throw ValidationError("coincidence needs a non-empty subset");
  const ElementSet a = mask_elements(subset);
  if (a.back() > p.n()) throw ValidationError("subset reaches beyond n=" + std::to_string(p.n()));
  return induce(p, a).partition == induce(q, a).partition;
}

long long d_by_definition(const Partition& p, const Partition& q, int limit) {
  require_same_n(p, q);
  require_definitional(p.n(), limit);
  return p.n() - max_coincidence_size(disagreement_masks(p, q), p.n());
}

std::vector<SubsetMask> maximum_coincidence_sets(const Partition& p, const Partition& q, int limit) {
  require_same_n(p, q);
  require_definitional(p.n(), limit);
  const auto diff = disagreement_masks(p, q);
  const int size = max_coincidence_size(diff, p.n());
  std::vector<SubsetMask> out;
  for_each_subset_of_size(p.n(), size, [&](SubsetMask m) {
    if (independent(diff, m)) out.push_back(m);
    return true;
  });
  return out;
}

std::vector<PartitionPair> pairs_with_d(int n, int k, int limit) {
  require_enumerable(n, limit);
  if (k < 0 || k > n - 1) throw RangeError("k outside 0..n-1");
  const auto parts = enumerate_partitions(n, limit);
  std::vector<PartitionPair> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      if (d_by_definition(parts[i], parts[j]) == k) out.push_back({parts[i], parts[j]});
    }
  }
  return out;
}

std::vector<long long> available_sizes(int n, int limit) {
  PartitionStream stream(n, limit);
  std::set<long long> sizes;
  while (auto p = stream.next()) sizes.insert(size(*p));
  return {sizes.begin(), sizes.end()};
}

BigInt stirling2(int n, int k) {
  if (k < 1 || k > n) throw RangeError("stirling2 needs 0 < k <= n");
  BigInt sum = 0;
  BigInt binom = 1;  // C(k, m)
  for (int m = 0; m <= k; ++m) {
    if (m > 0) binom = binom * (k - m + 1) / m;
    BigInt term = binom * boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(n));
    if ((k - m) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BigInt factorial = 1;
  for (int m = 2; m <= k; ++m) factorial *= m;
  return sum / factorial;
}

BigInt bell(int n) {
  if (n < 1) throw RangeError("bell needs n >= 1");
  BigInt total = 0;
  for (int k = 1; k <= n; ++k) total += stirling2(n, k);
  return total;
}

long long subset_hamming(const ElementSet& a, const ElementSet& b, int n) {
  std::vector<int> mark(static_cast<std::size_t>(n) + 1, 0);
  for (const ElementSet* s : {&a, &b}) {
    for (int e : *s) {
      if (e < 1 || e > n) throw ValidationError("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    }
  }
  std::set<int> sa(a.begin(), a.end());
  std::set<int> sb(b.begin(), b.end());
  std::vector<int> sym;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(sym));
  return static_cast<long long>(sym.size());
}

void Extremes::add(long long value, const Partition& p, const Partition& q) {
  if (count == 0 || value < min) {
    min = value;
    argmin = {p, q};
  }
  if (count == 0 || value > max) {
    max = value;
    argmax = {p, q};
  }
  ++count;
}

std::vector<Extremes> ih_extremes_by_d(int n, int limit) {
  require_enumerable(n, limit);
  const auto parts = enumerate_partitions(n, limit);
  std::vector<Extremes> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      const long long d = d_by_definition(parts[i], parts[j]);
      out[static_cast<std::size_t>(d)].add(delta_ih(parts[i], parts[j]), parts[i], parts[j]);
    }
  }
  return out;
}

std::map<std::pair<ClassVector, int>, Extremes> constrained_extremes(int n, int limit) {
  require_enumerable(n, limit);
  const auto parts = enumerate_partitions(n, limit);
  std::map<std::pair<ClassVector, int>, Extremes> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      const Partition& p = parts[i];
      const Partition& q = parts[j];
      const auto sets = maximum_coincidence_sets(p, q);
      const int k = n - std::popcount(sets.front());
      if (k == 0) continue;
      std::set<ClassVector> classes;
      for (SubsetMask a : sets) classes.insert(class_vector(induce(p, mask_elements(a)).partition));
      const long long ih = delta_ih(p, q);
      for (const ClassVector& c : classes) out[{c, k}].add(ih, p, q);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> extra_atoms(const Partition& p, SubsetMask a) {
  std::vector<std::pair<int, int>> out;
  for (const ElementSet& block : p.blocks()) {
    for (std::size_t x = 0; x < block.size(); ++x) {
      for (std::size_t y = x + 1; y < block.size(); ++y) {
        const bool both_inside = (a >> (block[x] - 1) & 1U) && (a >> (block[y] - 1) & 1U);
        if (!both_inside) out.emplace_back(block[x], block[y]);
      }
    }
  }
  return out;
}

bool covering_conditions_hold(const Partition& p, const Partition& q, SubsetMask a) {
  require_same_n(p, q);
  const SubsetMask all = full_mask(p.n());
  if ((a & all) == all) return true;
  SubsetMask touched = 0;
  for (const Partition* side : {&p, &q}) {
    for (auto [i, j] : extra_atoms(*side, a)) touched |= (SubsetMask{1} << (i - 1)) | (SubsetMask{1} << (j - 1));
  }
  const SubsetMask outside = all & ~a;
  return (touched & outside) == outside && (touched & a) != 0;
}

std::vector<PartitionPair> sample_pairs(int n, std::size_t count, std::uint64_t seed) {
  if (n < 1) throw RangeError("sampling needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> blocks(1, n);
  auto draw = [&] {
    std::uniform_int_distribution<int> label(0, blocks(rng) - 1);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int& l : labels) l = label(rng);
    return Partition::from_block_labels(labels);
  };
  std::vector<PartitionPair> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    Partition p = draw();
    Partition q = draw();
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

std::vector<ClaimReport> verify_claims(int n) {
  if (n < 1) throw RangeError("verify needs n >= 1");
  if (n > kVerifyLimit) {
    throw CapacityError("claim verification is exhaustive and limited to n <= " + std::to_string(kVerifyLimit));
  }
  const auto parts = enumerate_partitions(n, kVerifyLimit);
  Tally c1, c2, c4, c5, c6, c7, c8, c9, eq5;
  std::vector<Extremes> by_d(static_cast<std::size_t>(n));

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Partition& p = parts[i];
    // Merging two blocks adds exactly |B| |B'| to the size.
    for (std::size_t a = 0; a < p.num_blocks(); ++a) {
      for (std::size_t b = a + 1; b < p.num_blocks(); ++b) {
        std::vector<ElementSet> blocks = p.blocks();
        blocks[a].insert(blocks[a].end(), blocks[b].begin(), blocks[b].end());
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
        const Partition merged = Partition::from_blocks(n, blocks);
        const long long gain = static_cast<long long>(p.blocks()[a].size() * p.blocks()[b].size());
        c6.record(size(merged) - size(p) == gain, merged, p);
      }
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const Partition& q = parts[j];
      if (finer_or_equal(q, p)) {
        // p is coarser than or equal to q.
        const long long p_only = static_cast<long long>(p.num_blocks()) - common_blocks(p, q);
        const long long q_only = static_cast<long long>(q.num_blocks()) - common_blocks(p, q);
        const long long rb = delta_rb(p, q);
        const long long sd = delta_sd(p, q);
        c4.record(rb == q_only - p_only, p, q);
        eq5.record(sd == rb + 2 * p_only && sd == 2 * q_only - rb, p, q);
        if (i != j) c6.record(size(p) > size(q), p, q);
      }
      if (j < i) continue;
      const Partition lo = meet(p, q);
      const Partition hi = join(p, q);
      const auto v = evaluate_all(p, q);
      const auto w = evaluate_all(hi, lo);
      c1.record(w[0] >= v[0], p, q);
      c2.record(w[1] >= v[1], p, q);
      c5.record(v[1] == 2 * (n - common_blocks(p, q)) - (rank(p) + rank(q)), p, q);
      c7.record(size(hi) + size(lo) >= size(p) + size(q), p, q);
      const auto sets = maximum_coincidence_sets(p, q);
      bool c8_ok = true;
      bool c9_ok = true;
      for (SubsetMask a : sets) {
        c8_ok = c8_ok && size(induce(p, mask_elements(a)).partition) == size(lo);
        c9_ok = c9_ok && covering_conditions_hold(p, q, a);
      }
      c8.record(c8_ok, p, q);
      c9.record(c9_ok, p, q);
      const int d = n - std::popcount(sets.front());
      by_d[static_cast<std::size_t>(d)].add(v[5], p, q);
    }
  }

  std::vector<ClaimReport> out;
  out.push_back(from_tally("C1", n, c1, "D(join, meet) >= D(P, Q)"));
  out.push_back(from_tally("C2", n, c2, "SD(join, meet) >= SD(P, Q)"));
  ClaimReport c3 = claim3_report();
  out.push_back(std::move(c3));
  out.push_back(from_tally("C4", n, c4, "comparable P >= Q: RB = |Q\\P| - |P\\Q|"));
  out.push_back(from_tally("C5", n, c5, "SD = 2(n - |P cap Q|) - (r(P) + r(Q))"));
  out.push_back(from_tally("C6", n, c6, "strict monotonicity and merge gain |B||B'|"));
  out.push_back(from_tally("C7", n, c7, "s(join) + s(meet) >= s(P) + s(Q)"));
  out.push_back(from_tally("C8", n, c8, "size of the restriction to every maximum coincidence set equals s(meet)"));
  out.push_back(from_tally("C9", n, c9, "covering conditions on every maximum coincidence set"));

  // C10 covers k <= 2(n-k), C11 the remaining k >= 1, C12 the maxima.
  auto bound_report = [&](std::string id, auto select, auto formula, bool use_max) {
    ClaimReport r;
    r.claim_id = std::move(id);
    r.n = n;
    r.verified = true;
    std::ostringstream detail;
    for (int k = 0; k < n; ++k) {
      if (!select(k)) continue;
      const Extremes& e = by_d[static_cast<std::size_t>(k)];
      const long long exact = use_max ? e.max : e.min;
      const long long want = formula(k);
      detail << "k=" << k << " exact " << exact << " formula " << want << "; ";
      const PartitionPair& pair = use_max ? e.argmax : e.argmin;
      if (!r.witness) r.witness = pair;
      if (exact != want && r.verified) {
        r.verified = false;
        r.counterexample = pair;
      }
    }
    r.detail = detail.str();
    return r;
  };
  out.push_back(bound_report(
      "C10", [&](int k) { return k >= 1 && min_case(n, k) == BoundCase::SMALL_K; },
      [&](int k) { return min_ih_given_d(n, k); }, false));
  out.push_back(bound_report(
      "C11",
      [&](int k) { return min_case(n, k) == BoundCase::MID_K || min_case(n, k) == BoundCase::TOP_K; },
      [&](int k) { return min_ih_given_d(n, k); }, false));
  out.push_back(bound_report(
      "C12", [](int) { return true; }, [&](int k) { return max_ih_given_d(n, k); }, true));
  out.push_back(from_tally("EQ5", n, eq5, "comparable P >= Q: SD = RB + 2|P\\Q| = 2|Q\\P| - RB"));

  {
    ClaimReport r;
    r.claim_id = "SIZES";
    r.n = n;
    std::set<long long> expected;
    std::vector<int> scratch;
    integer_partitions(n, n, scratch, expected);
    const auto sizes = available_sizes(n, kVerifyLimit);
    const bool same = std::equal(sizes.begin(), sizes.end(), expected.begin(), expected.end());
    std::vector<long long> level_max(static_cast<std::size_t>(n), -1);
    for (const Partition& p : parts) {
      auto& slot = level_max[static_cast<std::size_t>(rank(p))];
      slot = std::max(slot, size(p));
    }
    bool levels = true;
    for (int k = 0; k < n; ++k) levels = levels && level_max[static_cast<std::size_t>(k)] == choose2(k + 1);
    r.verified = same && levels;
    std::ostringstream detail;
    detail << "available sizes {";
    for (std::size_t t = 0; t < sizes.size(); ++t) detail << (t ? "," : "") << sizes[t];
    detail << "}" << (same ? " match" : " differ from") << " integer-partition sizes; level maxima C(k+1,2) "
           << (levels ? "hold" : "fail");
    r.detail = detail.str();
    out.push_back(std::move(r));
  }
  out.push_back(modular_forms_report(n));
  return out;
}

std::string render_text(const std::vector<ClaimReport>& reports) {
  std::ostringstream out;
  for (const ClaimReport& r : reports) {
    out << r.claim_id << std::string(r.claim_id.size() < 9 ? 9 - r.claim_id.size() : 1, ' ') << "n=" << r.n << "  "
        << (r.verified ? "verified" : "REFUTED ") << "  " << r.detail << '\n';
  }
  return out.str();
}

std::string render_json(const std::vector<ClaimReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  auto pair_json = [](const std::optional<PartitionPair>& p) {
    return p ? nlohmann::ordered_json::array({p->first.to_string(), p->second.to_string()})
             : nlohmann::ordered_json(nullptr);
  };
  for (const ClaimReport& r : reports) {
    nlohmann::ordered_json e;
    e["claim"] = r.claim_id;
    e["n"] = r.n;
    e["verified"] = r.verified;
    e["counterexample"] = pair_json(r.counterexample);
    e["witness"] = pair_json(r.witness);
    e["detail"] = r.detail;
    arr.push_back(std::move(e));
  }
  return arr.dump(2) + "\n";
}

}  // namespace partdist
