#include "doctest.h"

#include "brute.hpp"
#include "partdist/errors.hpp"
#include "partdist/partition.hpp"

using namespace partdist;

namespace {

Partition P(const char* literal) { return Partition::parse(literal); }

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("from_blocks canonicalizes") {
  CHECK(Partition::from_blocks(4, {{1, 2}, {3, 4}}).to_string() == "12|34");
  CHECK(Partition::from_blocks(4, {{3, 4}, {2, 1}}) == Partition::from_blocks(4, {{1, 2}, {3, 4}}));
  CHECK(Partition::from_blocks(5, {{5}, {4, 2}, {3, 1}}).to_string() == "13|24|5");
}

TEST_CASE("from_blocks rejects malformed input") {
  const auto overlap = error_of([] { Partition::from_blocks(3, {{1, 2}, {2, 3}}); });
  CHECK(overlap.find("element 2") != std::string::npos);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 2}}), ValidationError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 2}, {}, {3}}), ValidationError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 2}, {4}}), ValidationError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {2, 3}}), ValidationError);
}

TEST_CASE("literals parse in both forms") {
  CHECK(P("12|34|567") == Partition::from_blocks(7, {{1, 2}, {3, 4}, {5, 6, 7}}));
  CHECK(P("1 2|3 4|5 6 7") == P("12|34|567"));
  CHECK(P("21|43") == P("12|34"));
  const auto big = P("1 2 10|3 4 5 6 7 8 9|11");
  CHECK(big.n() == 11);
  CHECK(big.to_string() == "1 2 10|3 4 5 6 7 8 9|11");
  CHECK_THROWS_AS(P("12||3"), ValidationError);
  CHECK_THROWS_AS(P("12|x3"), ValidationError);
  CHECK_THROWS_AS(P("12|24"), ValidationError);
}

TEST_CASE("from_labels maps names in bytewise order") {
  const std::vector<LabeledElement> abc{{"a", "x"}, {"b", "x"}, {"c", "y"}};
  CHECK(from_labels(abc) == P("12|3"));
  const std::vector<LabeledElement> shuffled{{"c", "y"}, {"a", "x"}, {"b", "x"}};
  CHECK(from_labels(shuffled) == P("12|3"));
  const std::vector<LabeledElement> one{{"a", "x"}};
  CHECK(from_labels(one) == Partition::top(1));
  const std::vector<LabeledElement> dup{{"a", "x"}, {"a", "y"}};
  CHECK_THROWS_AS(from_labels(dup), ValidationError);
}

TEST_CASE("meet and join on worked pairs") {
  CHECK(meet(P("12|34"), P("13|24")) == Partition::bottom(4));
  CHECK(meet(P("12|34|567"), P("12|35|467")) == P("12|3|4|5|67"));
  CHECK(join(P("12|34"), P("13|24")) == Partition::top(4));
  CHECK(join(P("12|34|567"), P("12|35|467")) == P("12|34567"));
  CHECK_THROWS_AS(meet(P("12"), P("12|3")), MismatchError);
}

TEST_CASE("lattice operations agree with the relational reference at n=5") {
  const auto all = brute::all_partitions(5);
  for (const auto& a : all) {
    const Partition p = brute::to_partition(a);
    CHECK(meet(p, p) == p);
    CHECK(join(p, p) == p);
    for (const auto& b : all) {
      const Partition q = brute::to_partition(b);
      REQUIRE(meet(p, q) == brute::to_partition(brute::meet(a, b)));
      REQUIRE(join(p, q) == brute::to_partition(brute::join(a, b)));
      REQUIRE(finer_or_equal(p, q) == brute::finer(a, b));
      // Indicator of the meet is the AND of the indicators.
      REQUIRE(indicator(meet(p, q)) == (indicator(p) & indicator(q)));
      REQUIRE(indicator(p).hamming(indicator(q)) == static_cast<std::size_t>(brute::ih(a, b)));
    }
  }
}

TEST_CASE("refinement and covering") {
  CHECK(finer_or_equal(Partition::bottom(4), P("12|34")));
  CHECK_FALSE(finer_or_equal(P("12|34"), P("13|24")));
  CHECK(finer_or_equal(P("12|34"), P("12|34")));
  CHECK(covers(P("12|3"), Partition::bottom(3)));
  CHECK_FALSE(covers(P("123"), Partition::bottom(3)));
  CHECK_FALSE(covers(P("12|34"), P("13|24")));
}

TEST_CASE("rank, class vector and size") {
  CHECK(rank(Partition::bottom(5)) == 0);
  CHECK(rank(Partition::top(5)) == 4);
  CHECK(rank(P("12|34|567")) == 4);

  const ClassVector c = class_vector(P("12|34|567"));
  CHECK(c.count(1) == 0);
  CHECK(c.count(2) == 2);
  CHECK(c.count(3) == 1);
  CHECK(c.count(4) == 0);
  CHECK(class_vector(Partition::bottom(4)).count(1) == 4);
  CHECK(class_vector(Partition::top(4)).count(4) == 1);
  CHECK(class_vector(Partition::top(4)).count(1) == 0);

  CHECK(size(Partition::bottom(6)) == 0);
  CHECK(size(Partition::top(6)) == 15);
  CHECK(size(P("12|34|567")) == 5);
  CHECK(indicator(P("12|34|567")).popcount() == 5);
}

TEST_CASE("pair indicator layout") {
  CHECK(indicator(P("12|3")).to_bit_string() == "100");
  CHECK(indicator(Partition::top(4)).to_bit_string() == "111111");
  CHECK(indicator(Partition::bottom(4)).to_bit_string() == "000000");
  CHECK(PairIndicator::index(5, 1, 2) == 0);
  CHECK(PairIndicator::index(5, 2, 3) == 4);
  CHECK(PairIndicator::index(5, 4, 5) == 9);
  for (const auto& a : brute::all_partitions(5)) {
    CHECK(indicator(brute::to_partition(a)).transitively_closed());
  }
  PairIndicator open(3);
  open.set(1, 2);
  open.set(2, 3);
  CHECK_FALSE(open.transitively_closed());
}

TEST_CASE("induce restricts and re-indexes") {
  const Partition p = P("134|26|5|7");
  const auto on12 = induce(p, {1, 2});
  CHECK(on12.partition == P("1|2"));
  CHECK(on12.elements == ElementSet{1, 2});
  CHECK(induce(p, {1, 2, 3, 4, 5, 6, 7}).partition == p);
  const auto on13 = induce(P("12|34"), {1, 3});
  CHECK(on13.partition == P("1|2"));
  CHECK(on13.to_new(3) == 2);
  CHECK(on13.to_new(2) == 0);
  CHECK(induce(P("134|26|5|7"), {3, 4, 6}).partition == P("12|3"));
}

TEST_CASE("atoms and modular partitions") {
  const auto a3 = atoms_of(3);
  REQUIRE(a3.size() == 3);
  CHECK(a3[0] == P("12|3"));
  CHECK(a3[1] == P("13|2"));
  CHECK(a3[2] == P("1|23"));
  CHECK(atoms_of(4).size() == 6);
  REQUIRE(atoms_of(2).size() == 1);
  CHECK(atoms_of(2)[0] == Partition::top(2));
  CHECK(atom(5, 2, 4) == P("1|24|3|5"));

  CHECK(is_modular(P("123|4|5")));
  CHECK_FALSE(is_modular(P("12|34")));
  CHECK(is_modular(Partition::bottom(4)));
  CHECK(modular_partition(5, {2, 3, 5}) == P("1|235|4"));
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(7).size() == 877);
  const std::size_t bell[] = {1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_partitions(n).size() == bell[n - 1]);

  // Same list, same order as the recursive reference.
  const auto lib = enumerate_partitions(6);
  const auto ref = brute::all_partitions(6);
  REQUIRE(lib.size() == ref.size());
  for (std::size_t i = 0; i < lib.size(); ++i) CHECK(brute::from_partition(lib[i]) == ref[i]);
  CHECK(std::is_sorted(lib.begin(), lib.end()));

  PartitionStream stream(4);
  std::size_t seen = 0;
  while (stream.next()) ++seen;
  CHECK(seen == 15);
  stream.restart();
  CHECK(stream.next() == Partition::top(4));

  CHECK_THROWS_AS(enumerate_partitions(13), CapacityError);
  CHECK(enumerate_partitions(9, 9).size() == 21147);
}

TEST_CASE("modular enumeration") {
  CHECK(enumerate_modular(1).size() == 1);
  CHECK(enumerate_modular(3).size() == 5);
  CHECK(enumerate_modular(4).size() == 12);
  for (int n = 1; n <= 10; ++n) {
    const auto mods = enumerate_modular(n);
    CHECK(mods.size() == (std::size_t{1} << n) - static_cast<std::size_t>(n));
    CHECK(std::all_of(mods.begin(), mods.end(), [](const Partition& p) { return is_modular(p); }));
  }
}

TEST_CASE("complements") {
  CHECK(complements(Partition::top(4)) == std::vector<Partition>{Partition::bottom(4)});
  CHECK(complements(Partition::bottom(4)) == std::vector<Partition>{Partition::top(4)});

  // Reference: scan all partitions for meet = bottom and join = top.
  for (int n = 3; n <= 5; ++n) {
    const auto all = brute::all_partitions(n);
    const brute::Labels bottom = brute::from_partition(Partition::bottom(n));
    const brute::Labels top = brute::from_partition(Partition::top(n));
    for (const auto& a : all) {
      std::vector<Partition> want;
      for (const auto& b : all) {
        if (brute::meet(a, b) == bottom && brute::join(a, b) == top) want.push_back(brute::to_partition(b));
      }
      CHECK(complements(brute::to_partition(a)) == want);
    }
  }
  CHECK(complements(P("12|3")) == std::vector<Partition>{P("13|2"), P("1|23")});
}
