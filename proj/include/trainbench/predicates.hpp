#ifndef TRAINBENCH_PREDICATES_HPP
#define TRAINBENCH_PREDICATES_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "trainbench/core.hpp"

namespace trainbench {

/// Three-valued answer of a bounded predicate evaluation. Unknown means
/// the coloring prefix is not yet long enough to decide, and callers count
/// it as "true for now".
enum class Tri : std::uint8_t { False = 0, True = 1, Unknown = 2 };

/// Evaluator for one R(z, x, y, c) matrix of a universally-existentially
/// quantified set {z : forall x exists y R(z,x,y,c)}. Evaluators are pure:
/// the same arguments against the same prefix always answer the same, and
/// a True/False answer never changes when the prefix grows (only Unknown
/// may resolve).
class Predicate {
 public:
  using Fn = std::function<Tri(Nat z, Nat x, Nat y, const PairColoring&)>;

  Predicate() = default;
  Predicate(std::string spec, Fn fn) : spec_(std::move(spec)), fn_(std::move(fn)) {}

  Tri evaluate(Nat z, Nat x, Nat y, const PairColoring& prefix) const {
    return fn_(z, x, y, prefix);
  }
  const std::string& spec() const noexcept { return spec_; }

  // Built-in families. Thresholds in a flip schedule are per-x: the answer
  // is False below schedule[x] and True from it on (past the end of the
  // schedule the answer is always True).
  static Predicate constantly_true();
  static Predicate constantly_false();
  static Predicate residue(Nat modulus, Nat remainder);
  static Predicate at_least(Nat threshold);
  static Predicate flip(std::vector<Nat> schedule);
  static Predicate color_query(Nat a, Nat b, Color want);

  /// Spec strings: true | false | mod:M:R | ge:T | flip:T0-T1-... |
  /// colorq:A:B:C
  static Predicate parse(std::string_view spec);

 private:
  std::string spec_;
  Fn fn_;
};

/// Splits on commas and parses each item.
std::vector<Predicate> parse_predicate_list(std::string_view specs);

}  // namespace trainbench

#endif  // TRAINBENCH_PREDICATES_HPP
