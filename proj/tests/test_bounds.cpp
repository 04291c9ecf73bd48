#include "doctest.h"

#include <climits>

#include "brute.hpp"
#include "partdist/bounds.hpp"
#include "partdist/errors.hpp"
#include "partdist/oracle.hpp"

using namespace partdist;

namespace {

ClassVector sizes(std::initializer_list<int> s) { return ClassVector::from_block_sizes(std::vector<int>(s)); }

// Cheapest way to hand k outside elements to n-k inside elements, each inside
// element splitting its share between the two partitions; tries every
// distribution of the shares.
long long spread_minimum(int n, int k) {
  const int bins = n - k;
  long long best = LLONG_MAX;
  std::vector<int> share(static_cast<std::size_t>(bins), 0);
  auto cost = [](int m) { return choose2(m / 2 + 1) + choose2((m + 1) / 2 + 1); };
  auto rec = [&](auto&& self, int bin, int left) -> void {
    if (bin == bins - 1) {
      share[static_cast<std::size_t>(bin)] = left;
      long long total = 0;
      for (int m : share) total += cost(m);
      best = std::min(best, total);
      return;
    }
    for (int m = 0; m <= left; ++m) {
      share[static_cast<std::size_t>(bin)] = m;
      self(self, bin + 1, left - m);
    }
  };
  rec(rec, 0, k);
  return best;
}

}  // namespace

TEST_CASE("maximum IH for a given D") {
  for (int n = 2; n <= 9; ++n) {
    CHECK(max_ih_given_d(n, 0) == 0);
    CHECK(max_ih_given_d(n, n - 1) == choose2(n));
  }
  CHECK(max_ih_given_d(7, 5) == 20);
  CHECK(max_ih_given_d(6, 3) == 12);
  CHECK_THROWS_AS(max_ih_given_d(5, 5), RangeError);
  CHECK_THROWS_AS(max_ih_given_d(5, -1), RangeError);
}

TEST_CASE("maximum agrees with exhaustive search at n=6") {
  const int n = 6;
  std::vector<long long> best(n, -1);
  const auto all = brute::all_partitions(n);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto d = static_cast<std::size_t>(brute::d_subsets(a, b));
      best[d] = std::max(best[d], brute::ih(a, b));
    }
  }
  for (int k = 0; k < n; ++k) CHECK(max_ih_given_d(n, k) == best[static_cast<std::size_t>(k)]);
}

TEST_CASE("minimum regimes") {
  CHECK(min_case(6, 0) == BoundCase::ZERO);
  CHECK(min_case(6, 3) == BoundCase::SMALL_K);
  CHECK(min_case(6, 4) == BoundCase::SMALL_K);
  CHECK(min_case(7, 5) == BoundCase::MID_K);
  CHECK(min_case(6, 5) == BoundCase::TOP_K);
  // n=3, k=2 satisfies both k <= 2(n-k) and k = n-1; the top/bottom regime wins.
  CHECK(min_case(3, 2) == BoundCase::TOP_K);

  CHECK(min_ih_given_d(6, 0) == 0);
  CHECK(min_ih_given_d(6, 3) == 3);
  CHECK(min_ih_given_d(7, 5) == 6);
  CHECK(min_ih_given_d(9, 7) == 10);
  CHECK(min_ih_given_d(5, 4) == 10);
  CHECK(min_ih_given_d(3, 2) == 3);
}

TEST_CASE("uniform spreading value") {
  CHECK(claim11_value(7, 5) == 6);
  CHECK(claim11_value(9, 7) == 10);
  CHECK(claim11_value(11, 8) == 10);
  for (int n = 4; n <= 14; ++n) {
    for (int k = 1; k < n - 1; ++k) {
      if (2 * (n - k) < k) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(claim11_value(n, k) == spread_minimum(n, k));
      }
    }
  }
  CHECK_THROWS_AS(claim11_value(7, 3), RangeError);
  CHECK_THROWS_AS(claim11_value(7, 6), RangeError);
}

TEST_CASE("constrained maximum") {
  CHECK(constrained_max(sizes({1, 1}), 1) == 2);
  CHECK(constrained_max(sizes({3, 2}), 2) == 12);
  CHECK_THROWS_AS(constrained_max(sizes({4}), 1), RangeError);

  // With one outside element the construction is realizable.
  const auto small = constrained_extremes(3).at({sizes({1, 1}), 1});
  CHECK(small.max == 2);

  // With two, both constructed partitions join the outside elements to each
  // other, so that atom cancels and the exhaustive maximum falls short.
  const auto table = constrained_extremes(7);
  const auto it = table.find({sizes({3, 2}), 2});
  REQUIRE(it != table.end());
  CHECK(it->second.max < constrained_max(sizes({3, 2}), 2));
  const auto a = brute::from_partition(it->second.argmax.first);
  const auto b = brute::from_partition(it->second.argmax.second);
  CHECK(brute::d_subsets(a, b) == 2);
  CHECK(brute::ih(a, b) == it->second.max);
}

TEST_CASE("constrained minimum") {
  CHECK(constrained_min(sizes({1, 1, 1}), 4) == 4);
  CHECK(constrained_min(sizes({1, 1}), 5) == 6);
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> singles(static_cast<std::size_t>(m), 1);
    for (int k = 1; k <= 2 * m; ++k) CHECK(constrained_min(ClassVector::from_block_sizes(singles), k) == k);
  }
  CHECK_THROWS_AS(constrained_min(sizes({2}), 0), RangeError);
}

TEST_CASE("greedy construction") {
  const GreedyRun two = run_greedy(sizes({1, 1}), 2);
  CHECK(two.objective == 2);
  REQUIRE(two.trace.size() == 2);
  CHECK(two.trace[0].side == Side::P);
  CHECK(two.trace[1].side == Side::Q);
  CHECK(two.trace[0].element != two.trace[1].element);

  const GreedyRun five = run_greedy(sizes({1, 1}), 5);
  CHECK(five.objective == 6);
  CHECK(five.state.degree_p[0] + five.state.degree_p[1] == 3);
  CHECK(five.state.degree_q[0] + five.state.degree_q[1] == 2);
  CHECK(five.state.covered == 5);
  CHECK(five.objective == five.state.objective());

  CHECK(run_greedy(sizes({2}), 1).objective == 2);

  for (int total = 1; total <= 6; ++total) {
    for (int k = 1; k <= 6; ++k) {
      const ClassVector base = ClassVector::from_block_sizes(std::vector<int>(static_cast<std::size_t>(total), 1));
      CHECK(run_greedy(base, k).objective == run_greedy(base, k, TieOrder::LARGEST_FIRST).objective);
    }
  }
  CHECK(run_greedy(sizes({3, 2, 1}), 4).objective ==
        run_greedy(sizes({3, 2, 1}), 4, TieOrder::LARGEST_FIRST).objective);
}

TEST_CASE("bounds table") {
  const auto six = bounds_table(6);
  REQUIRE(six.size() == 6);
  CHECK(six[0].min_ih == 0);
  CHECK(six[0].max_ih == 0);
  CHECK(six[3].min_ih == 3);
  CHECK(six[3].max_ih == 12);
  const auto seven = bounds_table(7);
  CHECK(seven[5].min_ih == 6);
  CHECK(seven[5].max_ih == 20);
  CHECK(seven[5].min_case == BoundCase::MID_K);
  CHECK_THROWS_AS(bounds_table(1), RangeError);
}
