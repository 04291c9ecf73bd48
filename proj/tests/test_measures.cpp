#include "doctest.h"

#include <random>

#include "brute.hpp"
#include "partdist/errors.hpp"
#include "partdist/measures.hpp"

using namespace partdist;

namespace {

Partition P(const char* literal) { return Partition::parse(literal); }

}  // namespace

TEST_CASE("partition distance on worked pairs") {
  CHECK(pd_distance(P("1234"), P("1|2|3|4")) == 3);
  CHECK(pd_distance(P("12|34"), P("13|24")) == 2);
  CHECK(pd_distance(P("12|34|5|6"), P("1|2|3|4|56")) == 3);
  CHECK(pd_distance(P("12|34"), P("12|34")) == 0);
  // Both restrict to 3|5|6|7 on {3,5,6,7}, so at most three deletions are needed.
  CHECK(pd_distance(P("134|26|5|7"), P("15|27|3|4|6")) == 3);
}

TEST_CASE("symmetric difference of block sets") {
  CHECK(delta_sd(P("12|34567"), P("12|3|4|5|67")) == 5);
  CHECK(delta_sd(P("12|34|567"), P("12|35|467")) == 4);
  CHECK(delta_sd(Partition::top(6), Partition::bottom(6)) == 7);
  CHECK(delta_sd(P("12|34"), P("12|34")) == 0);
}

TEST_CASE("rank-based measures") {
  CHECK(delta_rb(Partition::top(5), Partition::bottom(5)) == 4);
  CHECK(delta_rb(P("12|34"), P("13|24")) == 3);
  CHECK(delta_rb(P("12|34"), P("12|34")) == 0);
  CHECK(delta_rb_plus(P("12|34"), P("13|24")) == 4);
  CHECK(delta_rb_plus(P("12|34"), P("12|34")) == 0);
}

TEST_CASE("rank-based measures coincide on rank-modular pairs") {
  for (const auto& p : enumerate_partitions(5)) {
    for (const auto& q : enumerate_partitions(5)) {
      const bool rank_modular = rank(p) + rank(q) == rank(meet(p, q)) + rank(join(p, q));
      CHECK((delta_rb(p, q) == delta_rb_plus(p, q)) == rank_modular);
    }
  }
}

TEST_CASE("size-based measures") {
  CHECK(delta_sb(Partition::top(6), Partition::bottom(6)) == 15);
  CHECK(delta_sb(modular_partition(6, {1, 2, 3}), Partition::bottom(6)) == 3);
  CHECK(delta_sb(P("12|34"), P("12|34")) == 0);

  CHECK(delta_ih(P("12|34|5|6"), P("1|2|3|4|56")) == 3);
  CHECK(delta_ih(P("12|34|56"), P("16|23|45")) == 6);
  CHECK(delta_ih(P("12|34|5|6"), P("12|35|4|6")) == 2);
  CHECK(delta_ih(P("134|26|5|7"), P("15|27|3|4|6")) == 6);
}

TEST_CASE("all measures agree with slow references at n=5") {
  const auto all = brute::all_partitions(5);
  for (const auto& a : all) {
    const Partition p = brute::to_partition(a);
    for (const auto& b : all) {
      const Partition q = brute::to_partition(b);
      const auto v = evaluate_all(p, q);
      const auto lo = brute::meet(a, b);
      const auto hi = brute::join(a, b);
      REQUIRE(v[0] == brute::d_subsets(a, b));
      REQUIRE(v[0] == brute::pd_assignment(a, b));
      REQUIRE(v[1] == brute::sd(a, b));
      REQUIRE(v[2] == brute::num_blocks(lo) - brute::num_blocks(hi));
      REQUIRE(v[3] == (5 - brute::num_blocks(a)) + (5 - brute::num_blocks(b)) - 2 * (5 - brute::num_blocks(lo)));
      REQUIRE(v[4] == brute::size(hi) - brute::size(lo));
      REQUIRE(v[5] == brute::ih(a, b));
      for (MeasureId id : kAllMeasures) REQUIRE(raw_distance(id, p, q) == v[static_cast<std::size_t>(id)]);
    }
  }
}

TEST_CASE("matching handles rectangular and tied tables") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    std::vector<long long> flat(rows * cols);
    std::vector<std::vector<long long>> table(rows, std::vector<long long>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) flat[r * cols + c] = table[r][c] = static_cast<long long>(rng() % 4);
    }
    REQUIRE(max_weight_matching(rows, cols, flat) == brute::best_assignment(table));
  }
  CHECK(max_weight_matching(0, 0, {}) == 0);
  CHECK_THROWS_AS(max_weight_matching(2, 2, {1, 2, 3}), ValidationError);
}

TEST_CASE("normalization") {
  CHECK(normalize(0).normalized_string() == "0 (0.000000)");
  CHECK(normalize(1).normalized.num == 1);
  CHECK(normalize(1).normalized.den == 2);
  CHECK(normalize(3).normalized_string() == "3/4 (0.750000)");
  const DistanceValue same = distance(MeasureId::IH, P("12|3"), P("12|3"));
  CHECK(same.raw == 0);
  CHECK(same.normalized.num == 0);
  CHECK_THROWS_AS(normalize(-1), RangeError);
}

TEST_CASE("measure names") {
  CHECK(parse_measure("IH") == MeasureId::IH);
  CHECK(parse_measure("rbp") == MeasureId::RBP);
  CHECK(parse_measure("Pd") == MeasureId::PD);
  CHECK_THROWS_AS(parse_measure("rand"), ValidationError);
  for (MeasureId id : kAllMeasures) CHECK(parse_measure(measure_name(id)) == id);
}

TEST_CASE("mismatched ground sets are rejected") {
  CHECK_THROWS_AS(delta_ih(P("12"), P("123")), MismatchError);
}
