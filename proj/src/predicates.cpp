#include "trainbench/predicates.hpp"

#include <charconv>

namespace trainbench {

namespace {

Nat parse_nat(std::string_view text, std::string_view what) {
  Nat value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) +
                     "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Predicate Predicate::constantly_true() {
  return Predicate("true",
                   [](Nat, Nat, Nat, const PairColoring&) { return Tri::True; });
}

Predicate Predicate::constantly_false() {
  return Predicate("false", [](Nat, Nat, Nat, const PairColoring&) {
    return Tri::False;
  });
}

Predicate Predicate::residue(Nat modulus, Nat remainder) {
  if (modulus == 0) throw ContractViolation("residue needs modulus >= 1");
  if (remainder >= modulus)
    throw ContractViolation("residue needs remainder < modulus");
  return Predicate(
      "mod:" + std::to_string(modulus) + ":" + std::to_string(remainder),
      [modulus, remainder](Nat z, Nat, Nat, const PairColoring&) {
        return z % modulus == remainder ? Tri::True : Tri::False;
      });
}

Predicate Predicate::at_least(Nat threshold) {
  return Predicate("ge:" + std::to_string(threshold),
                   [threshold](Nat z, Nat, Nat, const PairColoring&) {
                     return z >= threshold ? Tri::True : Tri::False;
                   });
}

Predicate Predicate::flip(std::vector<Nat> schedule) {
  std::string spec = "flip:";
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (i > 0) spec += '-';
    spec += std::to_string(schedule[i]);
  }
  return Predicate(std::move(spec),
                   [schedule = std::move(schedule)](Nat, Nat x, Nat y,
                                                    const PairColoring&) {
                     const Nat threshold = x < schedule.size() ? schedule[x] : 0;
                     return y >= threshold ? Tri::True : Tri::False;
                   });
}

Predicate Predicate::color_query(Nat a, Nat b, Color want) {
  if (a >= b) throw ContractViolation("color query needs a < b");
  return Predicate("colorq:" + std::to_string(a) + ":" + std::to_string(b) +
                       ":" + color_char(want),
                   [a, b, want](Nat, Nat, Nat, const PairColoring& prefix) {
                     const auto got = prefix.try_color(a, b);
                     if (!got) return Tri::Unknown;
                     return *got == want ? Tri::True : Tri::False;
                   });
}

Predicate Predicate::parse(std::string_view spec) {
  if (spec == "true") return constantly_true();
  if (spec == "false") return constantly_false();

  const auto parts = split(spec, ':');
  const std::string_view head = parts[0];
  if (head == "mod" && parts.size() == 3)
    return residue(parse_nat(parts[1], "modulus"),
                   parse_nat(parts[2], "remainder"));
  if (head == "ge" && parts.size() == 2)
    return at_least(parse_nat(parts[1], "threshold"));
  if (head == "flip" && parts.size() == 2) {
    std::vector<Nat> schedule;
    for (auto item : split(parts[1], '-'))
      schedule.push_back(parse_nat(item, "flip threshold"));
    return flip(std::move(schedule));
  }
  if (head == "colorq" && parts.size() == 4) {
    if (parts[3].size() != 1) throw ParseError("bad color in color query");
    return color_query(parse_nat(parts[1], "pair element"),
                       parse_nat(parts[2], "pair element"),
                       parse_color(parts[3][0]));
  }
  throw ParseError("unknown predicate spec '" + std::string(spec) + "'");
}

std::vector<Predicate> parse_predicate_list(std::string_view specs) {
  std::vector<Predicate> preds;
  for (auto item : split(specs, ',')) {
    if (item.empty()) throw ParseError("empty predicate spec");
    preds.push_back(Predicate::parse(item));
  }
  return preds;
}

}  // namespace trainbench
