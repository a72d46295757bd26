#ifndef TRAINBENCH_DIAG_HPP
#define TRAINBENCH_DIAG_HPP

#include <optional>
#include <span>
#include <vector>

#include "trainbench/core.hpp"
#include "trainbench/lemma.hpp"
#include "trainbench/predicates.hpp"

namespace trainbench {

/// Bounded approximation of one predicate's induced set: the z < y_bound
/// that survive "forall x < x_bound exists y < y_bound", with Unknown
/// counted as true.
struct SetApproximation {
  std::size_t predicate_index = 0;
  Nat x_bound = 0;
  Nat y_bound = 0;
  NatSet members;
};

/// Finite evidence that an approximated set is not homogeneous: two
/// differently colored pairs whose four endpoints all belong to the stated
/// approximation.
struct NonHomogeneityCertificate {
  std::size_t predicate_index = 0;
  Nat x_bound = 0;
  Nat y_bound = 0;
  Nat a1 = 0, b1 = 0;
  Color c1 = Color::R;
  Nat a2 = 0, b2 = 0;
  Color c2 = Color::R;
};

/// What one column's lemma instance looked like and what the construction
/// did with it.
struct ColumnLog {
  Nat column = 0;
  std::vector<Train> trains;  // one per predicate that produced any sets
  std::vector<std::size_t> train_owner;  // predicate index per train
  std::vector<StageRecord> stages;
  LemmaCertificate certificate;
};

struct DiagRun {
  PairColoring coloring;
  std::vector<ColumnLog> columns;
};

/// All a < b such that every x < level has some y < b with a non-False
/// answer against the prefix.
std::vector<Nat> qualifying_elements(const Predicate& pred, Nat level, Nat b,
                                     const PairColoring& prefix);

/// The train a predicate induces at column b: for each level i = 0..b, the
/// set_size smallest qualifying elements, stopping once fewer qualify,
/// with consecutive duplicates collapsed. Empty when even level 0 is too
/// thin (b < set_size).
Train build_train_for(const Predicate& pred, Nat set_size, Nat b,
                      const PairColoring& prefix);

/// Colors for the pairs (a, b), a < b: runs the train lemma on the
/// predicates' trains against the prefix and extends the vertex coloring
/// by default_color everywhere it is silent.
struct ColumnResult {
  std::vector<Color> colors;
  ColumnLog log;
};
ColumnResult extend_coloring_column(Nat b, const PairColoring& prefix,
                                    std::span<const Predicate> preds,
                                    Color default_color,
                                    const LemmaOptions& opts = {});

/// Iterates extend_coloring_column for b = 0..bound-1.
DiagRun generate_coloring(std::span<const Predicate> preds, Nat bound,
                          Color default_color, const LemmaOptions& opts = {});

SetApproximation approximate_set(const Predicate& pred,
                                 std::size_t predicate_index, Nat x_bound,
                                 Nat y_bound, const PairColoring& coloring);

/// Scans the pairs inside the approximation in (b, a)-lexicographic order
/// and returns the first pair whose color differs from the first pair
/// seen, packaged with it as a certificate.
std::optional<NonHomogeneityCertificate> find_nonhomogeneity_certificate(
    std::size_t predicate_index, const PairColoring& coloring,
    std::span<const Predicate> preds, Nat x_bound, Nat y_bound);

/// Re-checks a certificate the hard way: recompute the approximation,
/// confirm membership of all four endpoints, and look both pair colors up
/// in the coloring.
bool revalidate_certificate(const NonHomogeneityCertificate& cert,
                            const PairColoring& coloring,
                            std::span<const Predicate> preds);

}  // namespace trainbench

#endif  // TRAINBENCH_DIAG_HPP
