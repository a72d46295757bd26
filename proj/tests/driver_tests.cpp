#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "trainbench/driver.hpp"
#include "trainbench/io.hpp"
#include "trainbench/oracle.hpp"

using namespace trainbench;

namespace {
const Predicate kTrue = Predicate::constantly_true();
const Predicate kEven = Predicate::residue(2, 0);
}  // namespace

TEST_CASE("scripts validate their schedules") {
  CHECK_THROWS_AS(
      EnumerationScript::make(std::nullopt, {{0, kTrue}}),
      ContractViolation);
  CHECK_THROWS_AS(EnumerationScript::make(Nat{5}, {{3, kTrue}}),
                  ContractViolation);
  CHECK_THROWS_AS(
      EnumerationScript::make(Nat{0}, {{2, kTrue}, {2, kEven}}),
      ContractViolation);

  const auto script =
      EnumerationScript::make(Nat{2}, {{2, kTrue}, {6, kEven}});
  CHECK(script.enumerated_by(0) == 0);
  CHECK(script.enumerated_by(1) == 0);
  CHECK(script.enumerated_by(2) == 1);
  CHECK(script.enumerated_by(5) == 1);
  CHECK(script.enumerated_by(6) == 2);
  CHECK(script.enumerated_by(100) == 2);
}

TEST_CASE("a never-halting function leaves every pair at the default") {
  const auto run = run_driver(EnumerationScript::never_halts(), 5, Color::R);
  CHECK(run.coloring.bound() == 5);
  for (Nat b = 1; b < 5; ++b) {
    for (Nat a = 0; a < b; ++a) CHECK(run.coloring.color(a, b) == Color::R);
  }
  REQUIRE(run.log.size() == 5);
  for (const auto& entry : run.log) {
    CHECK(entry.regime == Regime::PreHalt);
    CHECK(entry.predicate_count == 0);
  }
}

TEST_CASE("halting at step zero matches the plain construction") {
  const auto script = EnumerationScript::make(Nat{0}, {{0, kTrue}});
  const auto run = run_driver(script, 3, Color::R);
  const std::vector<Predicate> preds = {kTrue};
  const auto direct = generate_coloring(preds, 3, Color::R);
  CHECK(coloring_dump_string(run.coloring) ==
        coloring_dump_string(direct.coloring));
  CHECK(coloring_dump_string(run.coloring) == "0 1 R\n0 2 R\n1 2 B\n");
}

TEST_CASE("regimes switch as predicates are enumerated") {
  const auto script =
      EnumerationScript::make(Nat{2}, {{2, kTrue}, {6, kEven}});
  const auto run = run_driver(script, 40, Color::R);

  REQUIRE(run.log.size() == 40);
  CHECK(run.log[0].regime == Regime::PreHalt);
  CHECK(run.log[1].regime == Regime::PreHalt);
  for (Nat b = 2; b < 6; ++b) {
    CHECK(run.log[b].regime == Regime::Diagonalizing);
    CHECK(run.log[b].predicate_count == 1);
  }
  for (Nat b = 6; b < 40; ++b) {
    CHECK(run.log[b].regime == Regime::Diagonalizing);
    CHECK(run.log[b].predicate_count == 2);
  }

  SUBCASE("the arbitrary columns are default-colored") {
    CHECK(run.coloring.color(0, 1) == Color::R);
  }

  SUBCASE("the coloring is total") {
    std::istringstream dump(coloring_dump_string(run.coloring));
    CHECK(verify_coloring_total(dump, 40));
  }

  SUBCASE("the predicate count never decreases") {
    for (std::size_t b = 1; b < run.log.size(); ++b) {
      CHECK(run.log[b].predicate_count >= run.log[b - 1].predicate_count);
      // Once diagonalizing, never back to arbitrary columns.
      if (run.log[b - 1].regime == Regime::Diagonalizing)
        CHECK(run.log[b].regime == Regime::Diagonalizing);
    }
  }

  SUBCASE("both finally-enumerated predicates get certificates") {
    const std::vector<Predicate> final_preds = {kTrue, kEven};
    const auto certs = check_tail_property(run, final_preds, 5, 40);
    REQUIRE(certs.size() == 2);
    for (std::size_t j = 0; j < 2; ++j) {
      REQUIRE(certs[j].has_value());
      CHECK(certs[j]->predicate_index == j);
      CHECK(revalidate_certificate(*certs[j], run.coloring, final_preds));
    }
  }
}

TEST_CASE("a lone constantly-false predicate needs no certificate") {
  const auto script =
      EnumerationScript::make(Nat{0}, {{0, Predicate::constantly_false()}});
  const auto run = run_driver(script, 10, Color::R);
  const std::vector<Predicate> final_preds = {Predicate::constantly_false()};
  const auto certs = check_tail_property(run, final_preds, 1, 10);
  REQUIRE(certs.size() == 1);
  CHECK(!certs[0].has_value());  // the approximated set is empty
}

TEST_CASE("driver runs are deterministic") {
  const auto script =
      EnumerationScript::make(Nat{3}, {{4, kEven}, {9, kTrue}});
  const auto one = run_driver(script, 30, Color::B);
  const auto two = run_driver(script, 30, Color::B);
  CHECK(coloring_dump_string(one.coloring) ==
        coloring_dump_string(two.coloring));
}
