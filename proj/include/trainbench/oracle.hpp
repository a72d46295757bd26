#ifndef TRAINBENCH_ORACLE_HPP
#define TRAINBENCH_ORACLE_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trainbench/core.hpp"
#include "trainbench/lemma.hpp"

namespace trainbench {

struct BruteForceLimits {
  std::size_t max_vertices = 24;
};

/// Independent existence check for the lemma: enumerates every coloring of
/// the union of the train sets (ascending bit masks, bit k = k-th vertex,
/// set bit = B) and returns the first one under which every homogeneous
/// train set contains an oppositely colored vertex. Knows nothing about
/// stages or requirement order. Refuses unions above the vertex ceiling.
std::optional<VertexColoring> brute_force_vertex_coloring(
    std::span<const Train> trains, PairColorFn c,
    const BruteForceLimits& limits = {});
std::optional<VertexColoring> brute_force_vertex_coloring(
    std::span<const Train> trains, const PairColoring& c,
    const BruteForceLimits& limits = {});

/// Every train over the universe with the given set size, lengths 1 up to
/// max_length, in a fixed deterministic order.
std::vector<Train> enumerate_trains(Nat universe, Nat set_size,
                                    std::size_t max_length);

struct SweepConfig {
  std::size_t train_count = 1;  // n; sets have size n+1
  Nat universe = 5;             // elements 0..universe-1
  std::size_t max_train_length = 2;

  enum class Mode {
    Exhaustive,  // every coloring of every family's internal pairs
    Sampled,     // sample_count seeded random colorings per family
    Auto,        // exhaustive while a family has <= auto_pair_threshold
                 // internal pairs, sampled past that
  };
  Mode mode = Mode::Exhaustive;
  std::uint64_t sample_count = 10000;
  std::uint64_t seed = 1;
  std::size_t auto_pair_threshold = 15;

  // Exhaustive/auto sweeps refuse universes with more pairs than this;
  // keeps desk-scale runs under control.
  Nat universe_pair_ceiling = 28;
  std::size_t brute_force_ceiling = 24;

  unsigned jobs = 0;  // 0 = hardware concurrency
};

struct SweepReport {
  std::uint64_t train_pool = 0;  // trains enumerated per slot
  std::uint64_t families = 0;
  std::uint64_t instances = 0;

  std::uint64_t property_failures = 0;
  std::uint64_t alarms = 0;
  std::uint64_t oracle_disagreements = 0;
  std::uint64_t stage_violations = 0;
  std::uint64_t crucial_violations = 0;

  std::vector<std::string> failures;  // instance encodings, capped

  std::uint64_t failure_count() const noexcept {
    return property_failures + alarms + oracle_disagreements +
           stage_violations + crucial_violations;
  }
};

/// Enumerates every family of train_count trains (ordered tuples over the
/// enumerated train pool) and every (or sampled) coloring of the family's
/// internal pairs; runs the stage construction with per-stage verification
/// on each instance, checks the lemma property, and compares against the
/// brute-force oracle. Instances are independent, so the sweep fans out
/// over worker threads and merges counts in family order.
SweepReport run_lemma_sweep(const SweepConfig& cfg);

void print_sweep_report(const SweepReport& rep, std::ostream& out);

/// True iff the dump text holds exactly one well-formed line `a b C` per
/// pair a < b < bound, sorted by (b, a).
bool verify_coloring_total(std::istream& dump, Nat bound);

struct HomogeneityResult {
  enum class Kind { Homogeneous, NonHomogeneous, Vacuous } kind;
  std::optional<Color> color;  // set iff Homogeneous
};

/// The constant color of the coloring on pairs inside H; Vacuous when H
/// has fewer than two elements; missing pairs are a contract violation.
HomogeneityResult check_homogeneous(const PairColoring& coloring,
                                    const NatSet& H);

}  // namespace trainbench

#endif  // TRAINBENCH_ORACLE_HPP
