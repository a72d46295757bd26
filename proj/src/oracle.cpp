#include "trainbench/oracle.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace trainbench {

// ------------------------------------------------------------ brute force

std::optional<VertexColoring> brute_force_vertex_coloring(
    std::span<const Train> trains, PairColorFn c,
    const BruteForceLimits& limits) {
  std::vector<Nat> vertices;
  for (const Train& t : trains) {
    for (const NatSet& s : t.sets)
      vertices.insert(vertices.end(), s.begin(), s.end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  if (vertices.size() > limits.max_vertices || vertices.size() > 63)
    throw ContractViolation("brute force refuses " +
                            std::to_string(vertices.size()) +
                            " vertices (ceiling " +
                            std::to_string(std::min<std::size_t>(
                                limits.max_vertices, 63)) +
                            ")");

  // Per-set vertex bitmask plus homogeneous color, derived directly from c.
  struct Constraint {
    std::uint64_t mask;
    Color homog;
  };
  std::vector<Constraint> constraints;
  for (const Train& t : trains) {
    for (const NatSet& s : t.sets) {
      const auto iota = homogeneous_color(c, s);
      if (!iota) continue;
      std::uint64_t mask = 0;
      for (Nat a : s) {
        const auto pos = std::lower_bound(vertices.begin(), vertices.end(), a) -
                         vertices.begin();
        mask |= std::uint64_t{1} << pos;
      }
      constraints.push_back(Constraint{mask, *iota});
    }
  }

  const std::uint64_t total = std::uint64_t{1} << vertices.size();
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    bool ok = true;
    for (const Constraint& cons : constraints) {
      // A homogeneous-R set needs a B vertex (a set bit) inside, and vice
      // versa.
      const std::uint64_t inside = assignment & cons.mask;
      if (cons.homog == Color::R ? inside == 0 : inside == cons.mask) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    VertexColoring out;
    out.reserve(vertices.size());
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      out.emplace_back(vertices[k],
                       (assignment >> k) & 1 ? Color::B : Color::R);
    }
    return out;
  }
  return std::nullopt;
}

std::optional<VertexColoring> brute_force_vertex_coloring(
    std::span<const Train> trains, const PairColoring& c,
    const BruteForceLimits& limits) {
  return brute_force_vertex_coloring(trains, as_color_fn(c), limits);
}

// ------------------------------------------------------------ enumeration

namespace {

template <class Fn>
void for_each_combination(std::span<const Nat> pool, std::size_t k, Fn&& fn) {
  if (k == 0 || k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Nat> current(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) current[i] = pool[idx[i]];
    fn(std::span<const Nat>(current));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Train> enumerate_trains(Nat universe, Nat set_size,
                                    std::size_t max_length) {
  std::vector<Train> out;
  if (set_size == 0 || max_length == 0 || universe < set_size) return out;

  std::vector<Nat> all;
  for (Nat a = 0; a < universe; ++a) all.push_back(a);

  std::function<void(Train&)> extend = [&](Train& t) {
    out.push_back(t);
    if (t.sets.size() >= max_length) return;
    const NatSet last = t.sets.back();
    // Successors may reuse elements of the last set, but anything new must
    // lie above its maximum.
    std::vector<Nat> pool(last.begin(), last.end());
    for (Nat a = last.max_value() + 1; a < universe; ++a) pool.push_back(a);
    for_each_combination(pool, set_size, [&](std::span<const Nat> xs) {
      NatSet next =
          NatSet::from_elements(std::vector<Nat>(xs.begin(), xs.end()));
      if (next == last) return;
      t.sets.push_back(std::move(next));
      extend(t);
      t.sets.pop_back();
    });
  };

  for_each_combination(all, set_size, [&](std::span<const Nat> xs) {
    Train t{set_size,
            {NatSet::from_elements(std::vector<Nat>(xs.begin(), xs.end()))}};
    extend(t);
  });
  return out;
}

// ------------------------------------------------------------ the sweep

namespace {

struct FamilyWork {
  std::vector<Train> trains;
  std::vector<Requirement> ordered;
  std::vector<std::pair<Nat, Nat>> pairs;  // internal pairs, sorted
  std::vector<std::int16_t> pair_slot;     // a*universe+b -> pair index
  Nat universe = 0;
  std::vector<Color> colors;               // current coloring of `pairs`
};

Color family_color(const void* ctx, Nat a, Nat b) {
  const auto* fw = static_cast<const FamilyWork*>(ctx);
  return fw->colors[fw->pair_slot[a * fw->universe + b]];
}

void setup_family(FamilyWork& fw, const std::vector<Train>& pool,
                  std::span<const std::size_t> picks, Nat universe) {
  fw.universe = universe;
  fw.trains.clear();
  for (std::size_t t : picks) fw.trains.push_back(pool[t]);
  fw.ordered = order_requirements(fw.trains);

  fw.pairs.clear();
  for (const Requirement& req : fw.ordered) {
    const auto xs = req.members.elements();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        fw.pairs.emplace_back(xs[i], xs[j]);
    }
  }
  std::sort(fw.pairs.begin(), fw.pairs.end());
  fw.pairs.erase(std::unique(fw.pairs.begin(), fw.pairs.end()),
                 fw.pairs.end());

  fw.pair_slot.assign(universe * universe, -1);
  for (std::size_t k = 0; k < fw.pairs.size(); ++k)
    fw.pair_slot[fw.pairs[k].first * universe + fw.pairs[k].second] =
        static_cast<std::int16_t>(k);
  fw.colors.assign(fw.pairs.size(), Color::R);
}

std::string encode_instance(const FamilyWork& fw, const char* what) {
  std::ostringstream out;
  out << what << " trains";
  for (const Train& t : fw.trains) {
    out << " [";
    for (std::size_t i = 0; i < t.sets.size(); ++i) {
      if (i) out << " | ";
      out << format_set(t.sets[i]);
    }
    out << "]";
  }
  out << " coloring";
  for (std::size_t k = 0; k < fw.pairs.size(); ++k) {
    out << ' ' << fw.pairs[k].first << ':' << fw.pairs[k].second << ':'
        << color_char(fw.colors[k]);
  }
  return out.str();
}

constexpr std::size_t kFailureSampleCap = 64;

void run_instance(FamilyWork& fw, const BruteForceLimits& limits,
                  SweepReport& rep) {
  ++rep.instances;
  const PairColorFn fn{&fw, &family_color};
  const LemmaOptions opts{Color::R, /*verify_stages=*/true};

  bool built_ok = false;
  const char* what = nullptr;
  try {
    const auto result = run_stage_construction(fw.ordered, fn, opts);
    if (check_lemma_property(fw.trains, fn, result.vertex_color)) {
      ++rep.property_failures;
      what = "property";
    } else {
      built_ok = true;
    }
  } catch (const SoundnessAlarm&) {
    ++rep.alarms;
    what = "alarm";
  } catch (const StageCheckFailure& e) {
    if (e.kind == StageCheckFailure::Kind::Bullet)
      ++rep.stage_violations;
    else
      ++rep.crucial_violations;
    what = "stage";
  }

  const auto brute = brute_force_vertex_coloring(fw.trains, fn, limits);
  if (brute.has_value() != built_ok) {
    ++rep.oracle_disagreements;
    if (!what) what = "oracle";
  }

  if (what && rep.failures.size() < kFailureSampleCap)
    rep.failures.push_back(encode_instance(fw, what));
}

void sweep_family(FamilyWork& fw, std::uint64_t family_index,
                  const SweepConfig& cfg, const BruteForceLimits& limits,
                  SweepReport& rep) {
  const std::size_t p = fw.pairs.size();
  const bool exhaustive =
      cfg.mode == SweepConfig::Mode::Exhaustive ||
      (cfg.mode == SweepConfig::Mode::Auto && p <= cfg.auto_pair_threshold);

  if (exhaustive) {
    const std::uint64_t total = std::uint64_t{1} << p;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      for (std::size_t k = 0; k < p; ++k)
        fw.colors[k] = (mask >> k) & 1 ? Color::B : Color::R;
      run_instance(fw, limits, rep);
    }
  } else {
    // Seed depends only on the family, so reports do not change with the
    // thread partition.
    std::mt19937_64 rng(cfg.seed ^
                        (0x9e3779b97f4a7c15ULL * (family_index + 1)));
    for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
      for (std::size_t k = 0; k < p; ++k)
        fw.colors[k] = rng() & 1 ? Color::B : Color::R;
      run_instance(fw, limits, rep);
    }
  }
}

void merge_into(SweepReport& total, const SweepReport& part) {
  total.families += part.families;
  total.instances += part.instances;
  total.property_failures += part.property_failures;
  total.alarms += part.alarms;
  total.oracle_disagreements += part.oracle_disagreements;
  total.stage_violations += part.stage_violations;
  total.crucial_violations += part.crucial_violations;
  for (const auto& f : part.failures) {
    if (total.failures.size() < kFailureSampleCap) total.failures.push_back(f);
  }
}

}  // namespace

SweepReport run_lemma_sweep(const SweepConfig& cfg) {
  if (cfg.train_count == 0) throw ContractViolation("need at least one train");
  if (cfg.universe < 2 || cfg.universe > 32)
    throw ContractViolation("universe out of range");
  if (cfg.mode != SweepConfig::Mode::Sampled) {
    const Nat universe_pairs = cfg.universe * (cfg.universe - 1) / 2;
    if (universe_pairs > cfg.universe_pair_ceiling)
      throw ContractViolation(
          "exhaustive sweep refused: universe has " +
          std::to_string(universe_pairs) + " pairs (ceiling " +
          std::to_string(cfg.universe_pair_ceiling) + ")");
  }
  const Nat set_size = cfg.train_count + 1;
  const std::size_t worst_union =
      cfg.train_count * cfg.max_train_length * set_size;
  if (worst_union > cfg.brute_force_ceiling)
    throw ContractViolation("sweep refused: unions of up to " +
                            std::to_string(worst_union) +
                            " vertices exceed the brute-force ceiling");

  const std::vector<Train> pool =
      enumerate_trains(cfg.universe, set_size, cfg.max_train_length);

  std::uint64_t family_total = 1;
  for (std::size_t j = 0; j < cfg.train_count; ++j)
    family_total *= pool.size();

  const BruteForceLimits limits{cfg.brute_force_ceiling};
  unsigned jobs = cfg.jobs ? cfg.jobs : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  jobs = static_cast<unsigned>(
      std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(family_total, 1)));

  std::vector<SweepReport> parts(jobs);
  auto worker = [&](unsigned w) {
    SweepReport& rep = parts[w];
    FamilyWork fw;
    std::vector<std::size_t> picks(cfg.train_count);
    for (std::uint64_t fam = w; fam < family_total; fam += jobs) {
      std::uint64_t rest = fam;
      for (std::size_t j = 0; j < cfg.train_count; ++j) {
        picks[j] = rest % pool.size();
        rest /= pool.size();
      }
      setup_family(fw, pool, picks, cfg.universe);
      ++rep.families;
      sweep_family(fw, fam, cfg, limits, rep);
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  SweepReport total;
  total.train_pool = pool.size();
  for (const auto& part : parts) merge_into(total, part);
  std::sort(total.failures.begin(), total.failures.end());
  return total;
}

void print_sweep_report(const SweepReport& rep, std::ostream& out) {
  out << "instances " << rep.instances << '\n';
  out << "failures " << rep.failure_count() << '\n';
  for (const auto& f : rep.failures) out << f << '\n';
}

// ------------------------------------------------------------ dump checks

bool verify_coloring_total(std::istream& dump, Nat bound) {
  std::string line;
  for (Nat b = 1; b < bound; ++b) {
    for (Nat a = 0; a < b; ++a) {
      if (!std::getline(dump, line)) return false;
      std::istringstream in(line);
      Nat la = 0, lb = 0;
      std::string color;
      std::string extra;
      if (!(in >> la >> lb >> color)) return false;
      if (in >> extra) return false;
      if (la != a || lb != b) return false;
      if (color.size() != 1 || !try_parse_color(color[0])) return false;
    }
  }
  // Nothing may follow the last expected pair.
  while (std::getline(dump, line)) {
    if (!line.empty()) return false;
  }
  return true;
}

HomogeneityResult check_homogeneous(const PairColoring& coloring,
                                    const NatSet& H) {
  if (H.size() < 2)
    return HomogeneityResult{HomogeneityResult::Kind::Vacuous, std::nullopt};
  const auto iota = homogeneous_color(coloring, H);
  if (!iota)
    return HomogeneityResult{HomogeneityResult::Kind::NonHomogeneous,
                             std::nullopt};
  return HomogeneityResult{HomogeneityResult::Kind::Homogeneous, iota};
}

}  // namespace trainbench
