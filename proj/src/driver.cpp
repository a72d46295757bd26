#include "trainbench/driver.hpp"

namespace trainbench {

EnumerationScript EnumerationScript::make(
    std::optional<Nat> halt_step,
    std::vector<std::pair<Nat, Predicate>> schedule) {
  if (!halt_step && !schedule.empty())
    throw ContractViolation("a never-halting script cannot enumerate");
  Nat previous = 0;
  bool first = true;
  for (const auto& [step, pred] : schedule) {
    if (halt_step && step < *halt_step)
      throw ContractViolation("enumeration step " + std::to_string(step) +
                              " precedes the halt step");
    if (!first && step <= previous)
      throw ContractViolation("enumeration steps must strictly increase");
    previous = step;
    first = false;
  }
  return EnumerationScript{halt_step, std::move(schedule)};
}

std::size_t EnumerationScript::enumerated_by(Nat b) const noexcept {
  if (!halt_step || *halt_step > b) return 0;
  std::size_t count = 0;
  for (const auto& [step, pred] : schedule) {
    if (step <= b) ++count;
  }
  return count;
}

const char* regime_name(Regime r) noexcept {
  switch (r) {
    case Regime::PreHalt:
      return "prehalt";
    case Regime::EmptyEnumeration:
      return "empty";
    case Regime::Diagonalizing:
      return "diag";
  }
  return "?";
}

DriverRun run_driver(const EnumerationScript& script, Nat bound,
                     Color default_color, const LemmaOptions& opts) {
  DriverRun run;
  run.log.reserve(bound);
  run.columns.reserve(bound);

  std::vector<Predicate> active;
  for (Nat b = 0; b < bound; ++b) {
    const bool halted = script.halt_step && *script.halt_step <= b;
    const std::size_t known = script.enumerated_by(b);

    if (!halted || known == 0) {
      run.log.push_back(DriverLogEntry{
          b, halted ? Regime::EmptyEnumeration : Regime::PreHalt, 0});
      std::vector<Color> column(b, default_color);
      run.coloring.append_column(column);
      ColumnLog log;
      log.column = b;
      run.columns.push_back(std::move(log));
      continue;
    }

    while (active.size() < known)
      active.push_back(script.schedule[active.size()].second);

    run.log.push_back(DriverLogEntry{b, Regime::Diagonalizing, known});
    ColumnResult col =
        extend_coloring_column(b, run.coloring, active, default_color, opts);
    run.coloring.append_column(col.colors);
    run.columns.push_back(std::move(col.log));
  }
  return run;
}

std::vector<std::optional<NonHomogeneityCertificate>> check_tail_property(
    const DriverRun& run, std::span<const Predicate> final_preds, Nat x_bound,
    Nat y_bound) {
  std::vector<std::optional<NonHomogeneityCertificate>> certs;
  certs.reserve(final_preds.size());
  for (std::size_t j = 0; j < final_preds.size(); ++j) {
    certs.push_back(find_nonhomogeneity_certificate(j, run.coloring,
                                                    final_preds, x_bound,
                                                    y_bound));
  }
  return certs;
}

}  // namespace trainbench
