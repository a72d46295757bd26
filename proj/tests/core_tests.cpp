#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "trainbench/core.hpp"
#include "trainbench/oracle.hpp"

using namespace trainbench;

TEST_CASE("opposite swaps the two colors and is an involution") {
  CHECK(opposite(Color::R) == Color::B);
  CHECK(opposite(Color::B) == Color::R);
  CHECK(opposite(opposite(Color::R)) == Color::R);
  CHECK(opposite(opposite(Color::B)) == Color::B);
  CHECK(opposite(Color::R) != Color::R);
}

TEST_CASE("color characters round-trip") {
  CHECK(color_char(Color::R) == 'R');
  CHECK(color_char(Color::B) == 'B');
  CHECK(parse_color('R') == Color::R);
  CHECK(parse_color('B') == Color::B);
  CHECK(!try_parse_color('x'));
  CHECK_THROWS_AS(parse_color('Q'), ParseError);
}

TEST_CASE("set indexing returns the k+1-st smallest element") {
  CHECK(NatSet{5, 7, 9}.element(0) == 5);
  CHECK(NatSet{5, 9, 12}.element(2) == 12);
  CHECK(NatSet{1, 2, 3}.element(1) == 2);
  CHECK_THROWS_AS(NatSet({5, 7, 9}).element(3), ContractViolation);
}

TEST_CASE("sets sort their elements and reject duplicates") {
  const NatSet s = NatSet::from_elements({9, 5, 7});
  CHECK(s == NatSet{5, 7, 9});
  CHECK(s.contains(7));
  CHECK(!s.contains(6));
  CHECK(s.min_value() == 5);
  CHECK(s.max_value() == 9);
  CHECK_THROWS_AS(NatSet::from_elements({1, 1, 2}), ContractViolation);
}

TEST_CASE("precedes compares at the largest differing position") {
  CHECK(precedes(NatSet{2, 3, 5}, NatSet{1, 2, 3}));
  CHECK(precedes(NatSet{5, 9, 12}, NatSet{5, 7, 9}));
  CHECK(!precedes(NatSet{1, 2, 3}, NatSet{1, 2, 3}));
  CHECK_THROWS_AS(precedes(NatSet{1, 2}, NatSet{1, 2, 3}),
                  ContractViolation);
}

TEST_CASE("precedes is a strict total order on distinct equal-size sets") {
  // All 3-subsets of {0..7} via the train enumerator (length-1 trains).
  std::vector<NatSet> subsets;
  for (const Train& t : enumerate_trains(8, 3, 1))
    subsets.push_back(t.sets[0]);
  REQUIRE(subsets.size() == 56);

  for (const NatSet& a : subsets) {
    for (const NatSet& b : subsets) {
      const int ways = (precedes(a, b) ? 1 : 0) + (precedes(b, a) ? 1 : 0) +
                       (a == b ? 1 : 0);
      CHECK(ways == 1);
    }
  }
}

TEST_CASE("is_train accepts the canonical 3-train") {
  const std::vector<NatSet> sets = {
      {1, 2, 3}, {2, 3, 5}, {5, 7, 9}, {5, 9, 12}};
  CHECK(is_train(sets, 3));
}

TEST_CASE("is_train checks growth and distinctness") {
  CHECK(is_train(std::vector<NatSet>{{1, 2, 3}, {1, 2, 4}}, 3));
  CHECK(!is_train(std::vector<NatSet>{{2, 3, 5}, {1, 3, 5}}, 3));
  CHECK(!is_train(std::vector<NatSet>{{1, 2, 3}, {1, 2, 3}}, 3));
  CHECK(!is_train(std::vector<NatSet>{{1, 2}}, 3));       // wrong size
  CHECK(!is_train(std::vector<NatSet>{}, 3));             // no sets
  CHECK(is_train(std::vector<NatSet>{{4, 9}}, 2));
}

namespace {

// The definition spelled out directly: pairwise distinct sets, and every
// element entering the next set exceeds the previous maximum.
bool is_train_by_definition(const std::vector<NatSet>& sets, Nat m) {
  if (sets.empty()) return false;
  for (const NatSet& s : sets) {
    if (s.size() != m) return false;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i] == sets[j]) return false;
    }
  }
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    for (Nat a : sets[i + 1]) {
      if (!sets[i].contains(a) && a <= sets[i].max_value()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("is_train agrees with the spelled-out definition") {
  std::vector<NatSet> subsets;
  for (const Train& t : enumerate_trains(5, 2, 1))
    subsets.push_back(t.sets[0]);
  REQUIRE(subsets.size() == 10);

  // Every sequence of up to three 2-subsets of {0..4}.
  std::vector<NatSet> seq;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    seq = {subsets[i]};
    CHECK(is_train(seq, 2) == is_train_by_definition(seq, 2));
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      seq = {subsets[i], subsets[j]};
      CHECK(is_train(seq, 2) == is_train_by_definition(seq, 2));
      for (std::size_t k = 0; k < subsets.size(); ++k) {
        seq = {subsets[i], subsets[j], subsets[k]};
        CHECK(is_train(seq, 2) == is_train_by_definition(seq, 2));
      }
    }
  }
}

TEST_CASE("later train sets precede earlier ones") {
  for (const Train& t : enumerate_trains(6, 2, 3)) {
    for (std::size_t later = 0; later < t.sets.size(); ++later) {
      for (std::size_t earlier = 0; earlier < later; ++earlier)
        CHECK(precedes(t.sets[later], t.sets[earlier]));
    }
  }
}

TEST_CASE("pair colorings grow by whole columns") {
  PairColoring c;
  CHECK(c.bound() == 0);
  CHECK(c.is_total_below(1));
  c.append_column({});
  const std::vector<Color> col1 = {Color::R};
  c.append_column(col1);
  const std::vector<Color> col2 = {Color::R, Color::B};
  c.append_column(col2);

  CHECK(c.bound() == 3);
  CHECK(c.pair_count() == 3);
  CHECK(c.color(0, 1) == Color::R);
  CHECK(c.color(0, 2) == Color::R);
  CHECK(c.color(1, 2) == Color::B);
  CHECK(!c.try_color(0, 3));
  CHECK(!c.try_color(1, 1));
  CHECK_THROWS_AS(c.color(0, 3), ContractViolation);
  CHECK(c.is_total_below(3));
  CHECK(!c.is_total_below(4));

  // A column of the wrong width is rejected.
  CHECK_THROWS_AS(c.append_column(col1), ContractViolation);

  PairColoring d;
  d.append_column({});
  d.append_column(col1);
  d.append_column(col2);
  CHECK(c == d);
}

TEST_CASE("sparse colorings are write-once") {
  SparseColoring c;
  c.set(0, 1, Color::R);
  CHECK(c.color(0, 1) == Color::R);
  CHECK(!c.try_color(1, 2));
  CHECK_THROWS_AS(c.set(0, 1, Color::R), ContractViolation);
  CHECK_THROWS_AS(c.set(2, 1, Color::R), ContractViolation);
  CHECK_THROWS_AS(c.color(0, 2), ContractViolation);
}
