#ifndef TRAINBENCH_DRIVER_HPP
#define TRAINBENCH_DRIVER_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trainbench/diag.hpp"

namespace trainbench {

/// Scripted stand-in for the watched partial function and its enumeration:
/// the step at which the function halts (if ever) and the steps at which
/// predicate indices appear afterwards.
struct EnumerationScript {
  std::optional<Nat> halt_step;
  std::vector<std::pair<Nat, Predicate>> schedule;

  /// Validates: no schedule without a halt step; steps strictly increasing
  /// and none before the halt step.
  static EnumerationScript make(std::optional<Nat> halt_step,
                                std::vector<std::pair<Nat, Predicate>> schedule);
  static EnumerationScript never_halts() { return EnumerationScript{}; }

  /// How many predicates have been enumerated by step b.
  std::size_t enumerated_by(Nat b) const noexcept;
};

enum class Regime { PreHalt, EmptyEnumeration, Diagonalizing };

const char* regime_name(Regime r) noexcept;

struct DriverLogEntry {
  Nat column = 0;
  Regime regime = Regime::PreHalt;
  std::size_t predicate_count = 0;
};

struct DriverRun {
  PairColoring coloring;
  std::vector<DriverLogEntry> log;
  std::vector<ColumnLog> columns;  // empty log entries for default columns
};

/// Column b is colored by default_color while the function has not halted
/// by step b or nothing is enumerated yet; afterwards the column runs the
/// diagonalizing construction with exactly the predicates enumerated by
/// step b, as if no further ones will appear.
DriverRun run_driver(const EnumerationScript& script, Nat bound,
                     Color default_color, const LemmaOptions& opts = {});

/// Certificate search for each finally-enumerated predicate against the
/// driver's coloring.
std::vector<std::optional<NonHomogeneityCertificate>> check_tail_property(
    const DriverRun& run, std::span<const Predicate> final_preds, Nat x_bound,
    Nat y_bound);

}  // namespace trainbench

#endif  // TRAINBENCH_DRIVER_HPP
