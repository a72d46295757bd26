#include "trainbench/core.hpp"

#include <algorithm>
#include <sstream>

namespace trainbench {

std::optional<Color> try_parse_color(char ch) noexcept {
  switch (ch) {
    case 'R':
      return Color::R;
    case 'B':
      return Color::B;
    default:
      return std::nullopt;
  }
}

Color parse_color(char ch) {
  if (auto c = try_parse_color(ch)) return *c;
  throw ParseError(std::string("bad color character '") + ch + "'");
}

// --------------------------------------------------------------- NatSet

NatSet::NatSet(std::initializer_list<Nat> xs) {
  std::vector<Nat> v(xs);
  *this = from_elements(std::move(v));
}

NatSet NatSet::from_elements(std::vector<Nat> xs) {
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw ContractViolation("set has a duplicate element");
  NatSet s;
  s.elems_.assign(xs.begin(), xs.end());
  return s;
}

Nat NatSet::element(std::size_t k) const {
  if (k >= elems_.size())
    throw ContractViolation("set index " + std::to_string(k) +
                            " out of range for size " +
                            std::to_string(elems_.size()));
  return elems_[k];
}

bool NatSet::contains(Nat x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

Nat NatSet::min_value() const {
  if (elems_.empty()) throw ContractViolation("min of empty set");
  return elems_.front();
}

Nat NatSet::max_value() const {
  if (elems_.empty()) throw ContractViolation("max of empty set");
  return elems_.back();
}

bool precedes(const NatSet& a, const NatSet& b) {
  if (a.size() != b.size())
    throw ContractViolation("precedes needs equal-size sets");
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a.element(k) != b.element(k)) return a.element(k) > b.element(k);
  }
  return false;
}

std::string format_set(const NatSet& s) {
  std::ostringstream out;
  bool first = true;
  for (Nat x : s) {
    if (!first) out << ' ';
    out << x;
    first = false;
  }
  return out.str();
}

// --------------------------------------------------------------- trains

bool is_train(std::span<const NatSet> sets, Nat m) noexcept {
  if (sets.empty() || m == 0) return false;
  for (const NatSet& s : sets) {
    if (s.size() != m) return false;
  }
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    const NatSet& cur = sets[i];
    const NatSet& next = sets[i + 1];
    if (cur == next) return false;
    for (Nat a : next) {
      if (!cur.contains(a) && a <= cur.max_value()) return false;
    }
  }
  return true;
}

bool is_train(const Train& t) noexcept {
  return is_train(std::span<const NatSet>(t.sets), t.set_size);
}

Train Train::make(Nat set_size, std::vector<NatSet> sets) {
  Train t{set_size, std::move(sets)};
  if (!is_train(t)) throw ContractViolation("not a valid train");
  return t;
}

// --------------------------------------------------------------- colorings

namespace {
constexpr Nat pair_index(Nat a, Nat b) noexcept { return b * (b - 1) / 2 + a; }
}  // namespace

Color PairColoring::color(Nat a, Nat b) const {
  if (auto c = try_color(a, b)) return *c;
  throw ContractViolation("pair (" + std::to_string(a) + "," +
                          std::to_string(b) + ") is not colored");
}

std::optional<Color> PairColoring::try_color(Nat a, Nat b) const noexcept {
  if (a >= b || b >= bound_) return std::nullopt;
  return entries_[pair_index(a, b)];
}

void PairColoring::append_column(std::span<const Color> colors) {
  if (colors.size() != bound_)
    throw ContractViolation("column " + std::to_string(bound_) + " needs " +
                            std::to_string(bound_) + " colors, got " +
                            std::to_string(colors.size()));
  entries_.insert(entries_.end(), colors.begin(), colors.end());
  ++bound_;
}

PairColorFn as_color_fn(const PairColoring& c) {
  return PairColorFn{&c, [](const void* ctx, Nat a, Nat b) {
                       return static_cast<const PairColoring*>(ctx)->color(a,
                                                                           b);
                     }};
}

void SparseColoring::set(Nat a, Nat b, Color c) {
  if (a >= b) throw ContractViolation("pair needs a < b");
  auto [it, inserted] = entries_.emplace(std::make_pair(a, b), c);
  if (!inserted)
    throw ContractViolation("pair (" + std::to_string(a) + "," +
                            std::to_string(b) + ") already colored");
}

std::optional<Color> SparseColoring::try_color(Nat a, Nat b) const noexcept {
  auto it = entries_.find({a, b});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Color SparseColoring::color(Nat a, Nat b) const {
  if (auto c = try_color(a, b)) return *c;
  throw ContractViolation("pair (" + std::to_string(a) + "," +
                          std::to_string(b) + ") is not colored");
}

PairColorFn as_color_fn(const SparseColoring& c) {
  return PairColorFn{&c, [](const void* ctx, Nat a, Nat b) {
                       return static_cast<const SparseColoring*>(ctx)->color(
                           a, b);
                     }};
}

}  // namespace trainbench
