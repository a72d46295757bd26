#ifndef TRAINBENCH_LEMMA_HPP
#define TRAINBENCH_LEMMA_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trainbench/core.hpp"

namespace trainbench {

/// The stage construction found fewer than two undefined elements in a set
/// it must act on. On valid input (k trains of m-sets, k < m, all internal
/// pairs colored) the counting argument rules this out, so this alarm
/// firing means the construction itself is broken.
struct SoundnessAlarm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A per-stage invariant did not survive a stage (never expected to fire).
struct StageCheckFailure : std::runtime_error {
  enum class Kind { Bullet, CrucialObservation };
  Kind kind;
  int bullet;  // 1..4 when kind == Bullet, else 0

  StageCheckFailure(Kind k, int b, const std::string& what)
      : std::runtime_error(what), kind(k), bullet(b) {}
};

/// One obligation of the construction: the position-i set of train j.
struct Requirement {
  std::size_t train_index = 0;  // j
  std::size_t position = 0;     // i
  NatSet members;

  friend bool operator==(const Requirement&, const Requirement&) = default;
};

/// Snapshot of the construction after `processed` stages. Stage s acted
/// iff witnesses[s] holds a vertex; acted_color[s] then records the
/// homogeneous color the stage reacted to (the witness received its
/// opposite).
struct StageState {
  std::vector<Requirement> requirements;
  std::size_t processed = 0;
  std::vector<std::optional<Nat>> witnesses;
  std::vector<std::optional<Color>> acted_color;
  std::vector<std::pair<Nat, Color>> partial;  // c* so far, sorted by vertex
};

std::optional<Color> lookup_vertex(std::span<const std::pair<Nat, Color>> vc,
                                   Nat vertex) noexcept;

/// Checks the four per-stage invariants on a snapshot:
///   1. the partial coloring is defined exactly on the chosen witnesses;
///   2. every witness sits in its stage's set above the minimum, the set is
///      homogeneous, and the witness carries the opposite color;
///   3. every homogeneous set seen so far contains an oppositely colored
///      witness;
///   4. no set was acted on twice (a later witness inside a set that
///      already holds an earlier one differs from it in color).
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_stage_invariants(const StageState& state,
                                                  PairColorFn c);

/// True iff whenever an earlier witness of the same train lands inside a
/// later homogeneous set, it already carries the color that set needs.
bool check_crucial_observation(const StageState& state, PairColorFn c);

/// Per-requirement evidence: nothing to do (not homogeneous), or a vertex
/// inside the set carrying the color opposite the set's homogeneous color.
struct RequirementOutcome {
  Requirement requirement;
  std::optional<Color> homogeneous;
  std::optional<Nat> witness;
};
using LemmaCertificate = std::vector<RequirementOutcome>;

enum class StageAction { NotHomogeneous, AlreadyMet, Acted };

struct StageRecord {
  std::size_t stage = 0;
  StageAction action = StageAction::NotHomogeneous;
  std::optional<Color> homogeneous;
  std::optional<Nat> witness;  // AlreadyMet: covering vertex; Acted: new one
};

/// Vertex colorings are small sorted (vertex, color) tables.
using VertexColoring = std::vector<std::pair<Nat, Color>>;

struct VertexColoringResult {
  VertexColoring vertex_color;  // total on the union of all train sets
  std::vector<StageRecord> stages;
  LemmaCertificate certificate;
  StageState final_state;
};

struct LemmaOptions {
  Color default_color = Color::R;
  /// Re-check the four bullet invariants and the crucial observation after
  /// every stage; violations throw StageCheckFailure.
  bool verify_stages = true;
};

/// The constant color of c on the pairs inside s, if there is one. Needs
/// |s| >= 2 and every internal pair colored.
std::optional<Color> homogeneous_color(PairColorFn c, const NatSet& s);
std::optional<Color> homogeneous_color(const PairColoring& c, const NatSet& s);

/// All (j, i) requirements sorted so the sets ascend in `precedes`; equal
/// sets tie-break by (train index, position). Accepts k trains of m-sets
/// for any k <= m-1 (the hypotheses the counting argument needs); trains
/// must be valid and of equal set size.
std::vector<Requirement> order_requirements(std::span<const Train> trains);

/// Stage construction: processes requirements in order, committing one
/// witness per acting stage, then extends by default_color to the rest of
/// the union. Guarantees: every train set on which c is homogeneous with
/// color i contains a vertex colored opposite(i).
VertexColoringResult build_vertex_coloring(std::span<const Train> trains,
                                           PairColorFn c,
                                           const LemmaOptions& opts = {});
VertexColoringResult build_vertex_coloring(std::span<const Train> trains,
                                           const PairColoring& c,
                                           const LemmaOptions& opts = {});

/// Same construction on a pre-ordered requirement list (skips validation
/// and ordering; the sweep harness calls this once per coloring after
/// ordering once per train family).
VertexColoringResult run_stage_construction(
    std::span<const Requirement> ordered, PairColorFn c,
    const LemmaOptions& opts = {});

/// Empty if every homogeneous train set contains an oppositely colored
/// vertex under cstar; otherwise a violating set. cstar must cover the
/// union of the train sets.
std::optional<NatSet> check_lemma_property(std::span<const Train> trains,
                                           PairColorFn c,
                                           const VertexColoring& cstar);

}  // namespace trainbench

#endif  // TRAINBENCH_LEMMA_HPP
