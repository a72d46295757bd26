#ifndef TRAINBENCH_CORE_HPP
#define TRAINBENCH_CORE_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace trainbench {

using Nat = std::uint64_t;

/// A caller broke a documented precondition (CLI maps this to exit code 2).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Malformed input text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --------------------------------------------------------------- colors

enum class Color : std::uint8_t { R = 0, B = 1 };

constexpr Color opposite(Color c) noexcept {
  return c == Color::R ? Color::B : Color::R;
}

constexpr char color_char(Color c) noexcept {
  return c == Color::R ? 'R' : 'B';
}

std::optional<Color> try_parse_color(char ch) noexcept;
Color parse_color(char ch);

// --------------------------------------------------------------- sets

/// Finite set of naturals stored as a strictly increasing sequence, so
/// element(k) is the (k+1)-st smallest member and comparisons are
/// positional.
class NatSet {
 public:
  NatSet() = default;
  NatSet(std::initializer_list<Nat> xs);

  /// Sorts; duplicate elements are rejected.
  static NatSet from_elements(std::vector<Nat> xs);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Nat element(std::size_t k) const;
  bool contains(Nat x) const noexcept;
  Nat min_value() const;
  Nat max_value() const;

  std::span<const Nat> elements() const noexcept {
    return {elems_.data(), elems_.size()};
  }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  boost::container::small_vector<Nat, 6> elems_;
};

/// Strict order on equal-size sets: at the largest position where the two
/// sorted sequences differ, the set with the larger entry comes first.
/// False on equal sets; unequal sizes are a contract violation.
bool precedes(const NatSet& a, const NatSet& b);

std::string format_set(const NatSet& s);

// --------------------------------------------------------------- trains

/// A sequence of distinct equal-size sets where every element entering the
/// next set exceeds everything in the current one.
struct Train {
  Nat set_size = 0;
  std::vector<NatSet> sets;

  bool empty() const noexcept { return sets.empty(); }
  std::size_t length() const noexcept { return sets.size(); }

  /// Validates via is_train; throws ContractViolation on a bad sequence.
  static Train make(Nat set_size, std::vector<NatSet> sets);
  /// A train with no sets yet (used when too few elements qualify).
  static Train none(Nat set_size) { return Train{set_size, {}}; }

  friend bool operator==(const Train&, const Train&) = default;
};

/// True iff the sequence is nonempty, every set has size m, consecutive
/// sets are distinct, and each new element exceeds the previous set's
/// maximum. (Consecutive distinctness plus growth forces strictly
/// increasing maxima, so all sets are pairwise distinct.)
bool is_train(std::span<const NatSet> sets, Nat m) noexcept;
bool is_train(const Train& t) noexcept;

// --------------------------------------------------------------- colorings

/// Write-once 2-coloring of pairs {a,b} with a<b, grown one column (fixed
/// b) at a time; column b carries the colors of (0,b),...,(b-1,b). The
/// coloring is total below bound() and empty at or above it.
class PairColoring {
 public:
  /// Number of columns appended so far.
  Nat bound() const noexcept { return bound_; }
  /// Every pair (a,b) with a<b<limit has a color. (limit <= 1 is vacuous.)
  bool is_total_below(Nat limit) const noexcept {
    return limit <= 1 || bound_ >= limit;
  }

  Color color(Nat a, Nat b) const;
  std::optional<Color> try_color(Nat a, Nat b) const noexcept;

  /// Appends column bound(); needs exactly bound() colors, one per a.
  void append_column(std::span<const Color> colors);

  Nat pair_count() const noexcept { return entries_.size(); }

  friend bool operator==(const PairColoring&, const PairColoring&) = default;

 private:
  Nat bound_ = 0;
  std::vector<Color> entries_;  // (a,b) lives at b*(b-1)/2 + a
};

/// Non-owning view "color of pair (a,b)". Callers guarantee every pair the
/// consumer will ask about is defined; the view itself does not check.
struct PairColorFn {
  const void* ctx = nullptr;
  Color (*fn)(const void*, Nat, Nat) = nullptr;

  Color operator()(Nat a, Nat b) const { return fn(ctx, a, b); }
};

/// View over a PairColoring (pairs at or above bound are a contract
/// violation when queried).
PairColorFn as_color_fn(const PairColoring& c);

/// Explicit finite pair map for standalone lemma instances, where only the
/// pairs inside the train sets need colors. Entries are write-once.
class SparseColoring {
 public:
  void set(Nat a, Nat b, Color c);
  std::optional<Color> try_color(Nat a, Nat b) const noexcept;
  Color color(Nat a, Nat b) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::pair<Nat, Nat>, Color>& entries() const noexcept {
    return entries_;
  }

 private:
  std::map<std::pair<Nat, Nat>, Color> entries_;
};

PairColorFn as_color_fn(const SparseColoring& c);

}  // namespace trainbench

#endif  // TRAINBENCH_CORE_HPP
