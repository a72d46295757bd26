#include "trainbench/cli.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "trainbench/diag.hpp"
#include "trainbench/driver.hpp"
#include "trainbench/io.hpp"
#include "trainbench/lemma.hpp"
#include "trainbench/oracle.hpp"
#include "trainbench/predicates.hpp"

namespace trainbench {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// ------------------------------------------------------------- manifests

struct Manifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> flags;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;

  void flag(std::string name, std::string value) {
    flags.emplace_back(std::move(name), std::move(value));
  }
  void input(std::string name, std::string_view bytes) {
    inputs.emplace_back(std::move(name), fnv1a64_hex(bytes));
  }
  void output(std::string name, std::string_view bytes) {
    outputs.emplace_back(std::move(name), fnv1a64_hex(bytes));
  }

  std::string str() const {
    std::ostringstream out;
    out << "subcommand " << subcommand << '\n';
    for (const auto& [name, value] : flags)
      out << "flag " << name << ' ' << value << '\n';
    for (const auto& [name, digest] : inputs)
      out << "input " << name << " fnv1a64 " << digest << '\n';
    for (const auto& [name, digest] : outputs)
      out << "output " << name << " fnv1a64 " << digest << '\n';
    return out.str();
  }
};

/// Written next to the primary output file when there is one, otherwise to
/// stderr; an explicit --manifest path wins.
void emit_manifest(const Manifest& m, const std::string& manifest_path,
                   const std::string& sibling_output, std::ostream& err) {
  if (!manifest_path.empty()) {
    atomic_write_file(manifest_path, m.str());
  } else if (!sibling_output.empty()) {
    atomic_write_file(sibling_output + ".manifest", m.str());
  } else {
    err << m.str();
  }
}

Color parse_default_color(const std::string& text) {
  if (text.size() == 1) {
    if (auto c = try_parse_color(text[0])) return *c;
  }
  throw ParseError("default color must be R or B, got '" + text + "'");
}

NatSet parse_set_argument(std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  return parse_set_line(text);
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// ------------------------------------------------------------- lemma

struct LemmaArgs {
  std::string instance_file;  // empty = stdin
  std::string default_color = "R";
  std::string manifest_path;
};

int run_lemma(const LemmaArgs& args, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const std::string text =
      args.instance_file.empty() ? read_stream(in) : read_file(args.instance_file);
  std::istringstream stream(text);
  const LemmaInstance inst = parse_lemma_instance(stream);

  // Reject instances whose internal pairs are not fully covered before
  // touching the construction.
  for (const Train& t : inst.trains) {
    for (const NatSet& s : t.sets) {
      const auto xs = s.elements();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          if (!inst.pairs.try_color(xs[i], xs[j]))
            throw ContractViolation("instance leaves pair (" +
                                    std::to_string(xs[i]) + "," +
                                    std::to_string(xs[j]) + ") uncolored");
        }
      }
    }
  }

  LemmaOptions opts;
  opts.default_color = parse_default_color(args.default_color);
  const auto result =
      build_vertex_coloring(inst.trains, as_color_fn(inst.pairs), opts);
  const auto violation =
      check_lemma_property(inst.trains, as_color_fn(inst.pairs),
                           result.vertex_color);

  std::ostringstream body;
  for (const auto& [vertex, color] : result.vertex_color)
    body << vertex << ' ' << color_char(color) << '\n';
  for (const auto& outcome : result.certificate) {
    body << "req " << outcome.requirement.train_index << ' '
         << outcome.requirement.position;
    if (outcome.homogeneous) {
      body << " homogeneous " << color_char(*outcome.homogeneous)
           << " witness " << *outcome.witness << '\n';
    } else {
      body << " not-homogeneous\n";
    }
  }
  if (violation)
    body << "VIOLATION " << format_set(*violation) << '\n';
  else
    body << "OK\n";
  out << body.str();

  Manifest m;
  m.subcommand = "lemma";
  m.flag("--default", args.default_color);
  m.input(args.instance_file.empty() ? "stdin" : args.instance_file, text);
  m.output("stdout", body.str());
  emit_manifest(m, args.manifest_path, "", err);
  return violation ? kExitViolation : kExitOk;
}

// ------------------------------------------------------------- diag

struct DiagArgs {
  std::vector<std::string> pred_specs;
  Nat bound = 0;
  std::string default_color = "R";
  std::string dump_path;
  std::vector<Nat> certify;  // empty or {X, Y}
  std::string manifest_path;
};

std::vector<Predicate> collect_predicates(
    const std::vector<std::string>& specs) {
  std::vector<Predicate> preds;
  for (const auto& spec : specs) {
    auto batch = parse_predicate_list(spec);
    for (auto& p : batch) preds.push_back(std::move(p));
  }
  if (preds.empty()) throw ParseError("no predicates given");
  return preds;
}

void emit_certificates(const PairColoring& coloring,
                       std::span<const Predicate> preds, Nat x_bound,
                       Nat y_bound, std::ostream& out, std::string* body) {
  for (std::size_t j = 0; j < preds.size(); ++j) {
    const auto cert =
        find_nonhomogeneity_certificate(j, coloring, preds, x_bound, y_bound);
    std::ostringstream line;
    if (cert) {
      line << "CERT " << j << ' ' << cert->a1 << ' ' << cert->b1 << ' '
           << color_char(cert->c1) << ' ' << cert->a2 << ' ' << cert->b2
           << ' ' << color_char(cert->c2) << '\n';
    } else {
      line << "NOCERT " << j << '\n';
    }
    out << line.str();
    if (body) *body += line.str();
  }
}

int run_diag(const DiagArgs& args, std::ostream& out, std::ostream& err) {
  const std::vector<Predicate> preds = collect_predicates(args.pred_specs);
  if (!args.certify.empty() && args.certify[1] > args.bound)
    throw ContractViolation("certificate y bound exceeds the coloring bound");

  const Color def = parse_default_color(args.default_color);
  const DiagRun run = generate_coloring(preds, args.bound, def);
  const std::string dump = coloring_dump_string(run.coloring);

  std::string stdout_body;
  if (args.dump_path.empty()) {
    out << dump;
    stdout_body += dump;
  } else {
    atomic_write_file(args.dump_path, dump);
  }
  if (!args.certify.empty()) {
    emit_certificates(run.coloring, preds, args.certify[0], args.certify[1],
                      out, &stdout_body);
  }

  Manifest m;
  m.subcommand = "diag";
  m.flag("--preds", join(args.pred_specs, ','));
  m.flag("--bound", std::to_string(args.bound));
  m.flag("--default", args.default_color);
  if (!args.certify.empty())
    m.flag("--certify", std::to_string(args.certify[0]) + " " +
                            std::to_string(args.certify[1]));
  if (!args.dump_path.empty()) m.output(args.dump_path, dump);
  if (!stdout_body.empty()) m.output("stdout", stdout_body);
  emit_manifest(m, args.manifest_path, args.dump_path, err);
  return kExitOk;
}

// ------------------------------------------------------------- drive

struct DriveArgs {
  std::string halt = "never";
  std::vector<std::string> enumerations;
  Nat bound = 0;
  std::string default_color = "R";
  std::string dump_path;
  std::string log_path;
  std::vector<Nat> certify;
  std::string manifest_path;
};

EnumerationScript parse_script(const DriveArgs& args) {
  std::optional<Nat> halt_step;
  if (args.halt != "never") {
    Nat step = 0;
    std::istringstream in(args.halt);
    if (!(in >> step) || !in.eof())
      throw ParseError("--halt needs a step number or 'never'");
    halt_step = step;
  }
  std::vector<std::pair<Nat, Predicate>> schedule;
  for (const auto& item : args.enumerations) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("--enum needs step:predspec, got '" + item + "'");
    Nat step = 0;
    std::istringstream in(item.substr(0, colon));
    if (!(in >> step) || !in.eof())
      throw ParseError("bad enumeration step in '" + item + "'");
    schedule.emplace_back(step, Predicate::parse(item.substr(colon + 1)));
  }
  return EnumerationScript::make(halt_step, std::move(schedule));
}

int run_drive(const DriveArgs& args, std::ostream& out, std::ostream& err) {
  const EnumerationScript script = parse_script(args);
  if (!args.certify.empty() && args.certify[1] > args.bound)
    throw ContractViolation("certificate y bound exceeds the coloring bound");

  const Color def = parse_default_color(args.default_color);
  const DriverRun run = run_driver(script, args.bound, def);

  const std::string dump = coloring_dump_string(run.coloring);
  std::ostringstream log_text;
  for (const auto& entry : run.log) {
    log_text << entry.column << ' ' << regime_name(entry.regime) << ' '
             << entry.predicate_count << '\n';
  }

  std::string stdout_body;
  if (args.dump_path.empty()) {
    out << dump;
    stdout_body += dump;
  } else {
    atomic_write_file(args.dump_path, dump);
  }
  if (args.log_path.empty()) {
    out << log_text.str();
    stdout_body += log_text.str();
  } else {
    atomic_write_file(args.log_path, log_text.str());
  }
  if (!args.certify.empty()) {
    std::vector<Predicate> final_preds;
    for (const auto& [step, pred] : script.schedule)
      final_preds.push_back(pred);
    emit_certificates(run.coloring, final_preds, args.certify[0],
                      args.certify[1], out, &stdout_body);
  }

  Manifest m;
  m.subcommand = "drive";
  m.flag("--halt", args.halt);
  for (const auto& e : args.enumerations) m.flag("--enum", e);
  m.flag("--bound", std::to_string(args.bound));
  m.flag("--default", args.default_color);
  if (!args.dump_path.empty()) m.output(args.dump_path, dump);
  if (!args.log_path.empty()) m.output(args.log_path, log_text.str());
  if (!stdout_body.empty()) m.output("stdout", stdout_body);
  emit_manifest(m, args.manifest_path, args.dump_path, err);
  return kExitOk;
}

// ------------------------------------------------------------- sweep

struct SweepArgs {
  SweepConfig cfg;
  std::string mode = "exhaustive";
  std::string manifest_path;
};

int run_sweep(SweepArgs& args, std::ostream& out, std::ostream& err) {
  if (args.mode == "exhaustive")
    args.cfg.mode = SweepConfig::Mode::Exhaustive;
  else if (args.mode == "sampled")
    args.cfg.mode = SweepConfig::Mode::Sampled;
  else if (args.mode == "auto")
    args.cfg.mode = SweepConfig::Mode::Auto;
  else
    throw ParseError("--mode must be exhaustive, sampled or auto");

  const SweepReport rep = run_lemma_sweep(args.cfg);

  std::ostringstream body;
  print_sweep_report(rep, body);
  out << body.str();
  err << "train pool " << rep.train_pool << ", families " << rep.families
      << ", property " << rep.property_failures << ", alarms " << rep.alarms
      << ", oracle " << rep.oracle_disagreements << ", stage "
      << rep.stage_violations << ", crucial " << rep.crucial_violations
      << '\n';

  Manifest m;
  m.subcommand = "sweep";
  m.flag("--trains", std::to_string(args.cfg.train_count));
  m.flag("--universe", std::to_string(args.cfg.universe));
  m.flag("--max-len", std::to_string(args.cfg.max_train_length));
  m.flag("--mode", args.mode);
  m.flag("--samples", std::to_string(args.cfg.sample_count));
  m.flag("--seed", std::to_string(args.cfg.seed));
  m.output("stdout", body.str());
  emit_manifest(m, args.manifest_path, "", err);
  return rep.failure_count() == 0 ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------- verify

struct VerifyArgs {
  std::string dump_path;
  std::optional<Nat> total_bound;
  std::string hom_set;
  std::string cert_path;
  std::string manifest_path;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const int selected = (args.total_bound ? 1 : 0) +
                       (args.hom_set.empty() ? 0 : 1) +
                       (args.cert_path.empty() ? 0 : 1);
  if (selected != 1)
    throw ParseError("verify needs exactly one of --total, --hom, --cert");

  const std::string dump_text = read_file(args.dump_path);
  Manifest m;
  m.subcommand = "verify";
  m.input(args.dump_path, dump_text);

  std::ostringstream body;
  int code = kExitOk;

  if (args.total_bound) {
    m.flag("--total", std::to_string(*args.total_bound));
    std::istringstream stream(dump_text);
    const bool ok = verify_coloring_total(stream, *args.total_bound);
    body << (ok ? "TOTAL" : "NOT-TOTAL") << ' ' << *args.total_bound << '\n';
    code = ok ? kExitOk : kExitViolation;
  } else if (!args.hom_set.empty()) {
    m.flag("--hom", args.hom_set);
    std::istringstream stream(dump_text);
    const PairColoring coloring = parse_coloring_dump(stream);
    const NatSet H = parse_set_argument(args.hom_set);
    const HomogeneityResult res = check_homogeneous(coloring, H);
    switch (res.kind) {
      case HomogeneityResult::Kind::Homogeneous:
        body << color_char(*res.color) << '\n';
        code = kExitOk;
        break;
      case HomogeneityResult::Kind::Vacuous:
        body << "vacuous\n";
        code = kExitOk;
        break;
      case HomogeneityResult::Kind::NonHomogeneous:
        body << "NONHOMOGENEOUS\n";
        code = kExitViolation;
        break;
    }
  } else {
    m.flag("--cert", args.cert_path);
    const std::string cert_text = read_file(args.cert_path);
    m.input(args.cert_path, cert_text);
    std::istringstream dump_stream(dump_text);
    const PairColoring coloring = parse_coloring_dump(dump_stream);

    std::istringstream lines(cert_text);
    std::string line;
    bool all_ok = true;
    bool any = false;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      std::istringstream in(line);
      std::string head;
      in >> head;
      if (head == "NOCERT") continue;
      if (head != "CERT") throw ParseError("bad certificate line: '" + line + "'");
      std::size_t j = 0;
      Nat a1 = 0, b1 = 0, a2 = 0, b2 = 0;
      std::string c1, c2, extra;
      if (!(in >> j >> a1 >> b1 >> c1 >> a2 >> b2 >> c2) || (in >> extra) ||
          c1.size() != 1 || c2.size() != 1)
        throw ParseError("bad certificate line: '" + line + "'");
      const Color col1 = parse_color(c1[0]);
      const Color col2 = parse_color(c2[0]);
      any = true;
      const bool ok = col1 != col2 &&
                      coloring.try_color(a1, b1) == col1 &&
                      coloring.try_color(a2, b2) == col2;
      body << "cert " << j << (ok ? " ok" : " BAD") << '\n';
      all_ok = all_ok && ok;
    }
    if (!any) body << "no certificates\n";
    code = all_ok ? kExitOk : kExitViolation;
  }

  out << body.str();
  m.output("stdout", body.str());
  emit_manifest(m, args.manifest_path, "", err);
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Pair-coloring workbench: train lemma, diagonalizing "
               "construction, enumeration driver, exhaustive sweeps and "
               "dump verification"};
  app.require_subcommand(1);

  LemmaArgs lemma_args;
  auto* lemma_cmd = app.add_subcommand(
      "lemma", "Run the vertex-coloring construction on an instance file");
  lemma_cmd->add_option("instance", lemma_args.instance_file,
                        "instance file (default: stdin)");
  lemma_cmd->add_option("--default", lemma_args.default_color,
                        "color for untouched vertices (R or B)");
  lemma_cmd->add_option("--manifest", lemma_args.manifest_path);

  DiagArgs diag_args;
  auto* diag_cmd = app.add_subcommand(
      "diag", "Build a coloring that diagonalizes the given predicates");
  diag_cmd->add_option("--preds", diag_args.pred_specs,
                       "comma-separated predicate specs (true, false, "
                       "mod:M:R, ge:T, flip:T0-T1-..., colorq:A:B:C)")
      ->required();
  diag_cmd->add_option("--bound", diag_args.bound, "columns to build")
      ->required();
  diag_cmd->add_option("--default", diag_args.default_color);
  diag_cmd->add_option("--dump", diag_args.dump_path, "write the dump here");
  diag_cmd->add_option("--certify", diag_args.certify,
                       "emit CERT/NOCERT lines for bounds X Y")
      ->expected(2);
  diag_cmd->add_option("--manifest", diag_args.manifest_path);

  DriveArgs drive_args;
  auto* drive_cmd = app.add_subcommand(
      "drive", "Watch a scripted enumeration and color columns as it grows");
  drive_cmd->add_option("--halt", drive_args.halt,
                        "halting step, or 'never'");
  drive_cmd->add_option("--enum", drive_args.enumerations,
                        "step:predspec (repeatable)");
  drive_cmd->add_option("--bound", drive_args.bound)->required();
  drive_cmd->add_option("--default", drive_args.default_color);
  drive_cmd->add_option("--dump", drive_args.dump_path);
  drive_cmd->add_option("--log", drive_args.log_path,
                        "write per-column regime lines here");
  drive_cmd->add_option("--certify", drive_args.certify)->expected(2);
  drive_cmd->add_option("--manifest", drive_args.manifest_path);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Exhaustive lemma soundness sweep against the brute-force "
               "oracle");
  sweep_cmd->add_option("--trains", sweep_args.cfg.train_count);
  sweep_cmd->add_option("--universe", sweep_args.cfg.universe);
  sweep_cmd->add_option("--max-len", sweep_args.cfg.max_train_length);
  sweep_cmd->add_option("--mode", sweep_args.mode,
                        "exhaustive, sampled or auto");
  sweep_cmd->add_option("--samples", sweep_args.cfg.sample_count);
  sweep_cmd->add_option("--seed", sweep_args.cfg.seed);
  sweep_cmd->add_option("--pair-threshold", sweep_args.cfg.auto_pair_threshold);
  sweep_cmd->add_option("--universe-pair-ceiling",
                        sweep_args.cfg.universe_pair_ceiling);
  sweep_cmd->add_option("--brute-ceiling", sweep_args.cfg.brute_force_ceiling);
  sweep_cmd->add_option("--jobs", sweep_args.cfg.jobs);
  sweep_cmd->add_option("--manifest", sweep_args.manifest_path);

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a coloring dump against a claim");
  verify_cmd->add_option("dump", verify_args.dump_path)->required();
  Nat total_bound = 0;
  auto* total_opt = verify_cmd->add_option(
      "--total", total_bound, "dump must cover every pair below this bound");
  verify_cmd->add_option("--hom", verify_args.hom_set,
                         "set whose internal pairs must share one color");
  verify_cmd->add_option("--cert", verify_args.cert_path,
                         "re-check CERT lines against the dump");
  verify_cmd->add_option("--manifest", verify_args.manifest_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (lemma_cmd->parsed()) return run_lemma(lemma_args, in, out, err);
    if (diag_cmd->parsed()) return run_diag(diag_args, out, err);
    if (drive_cmd->parsed()) return run_drive(drive_args, out, err);
    if (sweep_cmd->parsed()) return run_sweep(sweep_args, out, err);
    if (verify_cmd->parsed()) {
      if (total_opt->count() > 0) verify_args.total_bound = total_bound;
      return run_verify(verify_args, out, err);
    }
  } catch (const SoundnessAlarm& e) {
    err << "soundness alarm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StageCheckFailure& e) {
    err << "stage check failure: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace trainbench
