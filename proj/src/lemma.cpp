#include "trainbench/lemma.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <boost/container/small_vector.hpp>

namespace trainbench {

namespace {

using HomogCache = boost::container::small_vector<std::optional<Color>, 8>;

struct BulletViolation {
  int bullet;
  std::string detail;
};

void insert_vertex(std::vector<std::pair<Nat, Color>>& vc, Nat vertex,
                   Color color) {
  auto it = std::lower_bound(
      vc.begin(), vc.end(), vertex,
      [](const std::pair<Nat, Color>& e, Nat v) { return e.first < v; });
  vc.insert(it, {vertex, color});
}

std::optional<BulletViolation> check_bullets(
    const StageState& st, std::span<const std::optional<Color>> homog) {
  const std::size_t r = st.processed;

  // 1. c* is defined exactly on the chosen witnesses.
  std::size_t defined = 0;
  for (std::size_t s = 0; s < r; ++s) {
    if (!st.witnesses[s]) continue;
    ++defined;
    if (!lookup_vertex(st.partial, *st.witnesses[s]))
      return BulletViolation{1, "witness of stage " + std::to_string(s) +
                                    " missing from the partial coloring"};
  }
  if (defined != st.partial.size())
    return BulletViolation{1, "partial coloring has entries beyond the " +
                                  std::to_string(defined) + " witnesses"};

  // 2. every acting stage reacted to a homogeneous set, avoided its
  //    minimum, and placed the opposite color.
  for (std::size_t s = 0; s < r; ++s) {
    if (!st.witnesses[s]) continue;
    const Requirement& req = st.requirements[s];
    const Nat a = *st.witnesses[s];
    if (!req.members.contains(a))
      return BulletViolation{2, "stage " + std::to_string(s) +
                                    " witness lies outside its set"};
    if (a == req.members.element(0))
      return BulletViolation{2, "stage " + std::to_string(s) +
                                    " acted with the minimum of its set"};
    if (!homog[s])
      return BulletViolation{2, "stage " + std::to_string(s) +
                                    " acted on a non-homogeneous set"};
    if (st.acted_color[s] != homog[s])
      return BulletViolation{2, "stage " + std::to_string(s) +
                                    " recorded the wrong homogeneous color"};
    if (lookup_vertex(st.partial, a) != opposite(*homog[s]))
      return BulletViolation{2, "stage " + std::to_string(s) +
                                    " witness does not carry the opposite "
                                    "color"};
  }

  // 3. every homogeneous requirement seen so far is met.
  for (std::size_t s = 0; s < r; ++s) {
    if (!homog[s]) continue;
    const Color want = opposite(*homog[s]);
    bool met = false;
    for (std::size_t s2 = 0; s2 <= s && !met; ++s2) {
      if (!st.witnesses[s2]) continue;
      const Nat a = *st.witnesses[s2];
      met = st.requirements[s].members.contains(a) &&
            lookup_vertex(st.partial, a) == want;
    }
    if (!met)
      return BulletViolation{3, "requirement of stage " + std::to_string(s) +
                                    " is homogeneous but unmet"};
  }

  // 4. no second action on an already-met set.
  for (std::size_t s = 1; s < r; ++s) {
    if (!st.witnesses[s]) continue;
    for (std::size_t s2 = 0; s2 < s; ++s2) {
      if (!st.witnesses[s2]) continue;
      if (!st.requirements[s].members.contains(*st.witnesses[s2])) continue;
      if (lookup_vertex(st.partial, *st.witnesses[s]) ==
          lookup_vertex(st.partial, *st.witnesses[s2]))
        return BulletViolation{4, "stages " + std::to_string(s2) + " and " +
                                      std::to_string(s) +
                                      " put the same color inside one set"};
    }
  }
  return std::nullopt;
}

bool check_crucial(const StageState& st,
                   std::span<const std::optional<Color>> homog) {
  for (std::size_t s = 0; s < st.processed; ++s) {
    if (!homog[s]) continue;
    const Requirement& req = st.requirements[s];
    for (std::size_t s2 = 0; s2 < s; ++s2) {
      if (!st.witnesses[s2]) continue;
      if (st.requirements[s2].train_index != req.train_index) continue;
      const Nat a = *st.witnesses[s2];
      if (!req.members.contains(a)) continue;
      if (lookup_vertex(st.partial, a) != opposite(*homog[s])) return false;
    }
  }
  return true;
}

HomogCache compute_homogeneity(std::span<const Requirement> reqs,
                               PairColorFn c) {
  HomogCache cache;
  cache.reserve(reqs.size());
  for (const Requirement& req : reqs)
    cache.push_back(homogeneous_color(c, req.members));
  return cache;
}

}  // namespace

std::optional<Color> lookup_vertex(std::span<const std::pair<Nat, Color>> vc,
                                   Nat vertex) noexcept {
  auto it = std::lower_bound(
      vc.begin(), vc.end(), vertex,
      [](const std::pair<Nat, Color>& e, Nat v) { return e.first < v; });
  if (it == vc.end() || it->first != vertex) return std::nullopt;
  return it->second;
}

std::optional<Color> homogeneous_color(PairColorFn c, const NatSet& s) {
  if (s.size() < 2)
    throw ContractViolation("homogeneity needs at least two elements");
  const auto xs = s.elements();
  const Color first = c(xs[0], xs[1]);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (c(xs[i], xs[j]) != first) return std::nullopt;
    }
  }
  return first;
}

std::optional<Color> homogeneous_color(const PairColoring& c,
                                       const NatSet& s) {
  if (s.size() < 2)
    throw ContractViolation("homogeneity needs at least two elements");
  const auto xs = s.elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!c.try_color(xs[i], xs[j]))
        throw ContractViolation("pair (" + std::to_string(xs[i]) + "," +
                                std::to_string(xs[j]) +
                                ") inside a train set is not colored");
    }
  }
  return homogeneous_color(as_color_fn(c), s);
}

std::optional<std::string> check_stage_invariants(const StageState& state,
                                                  PairColorFn c) {
  const auto homog = compute_homogeneity(state.requirements, c);
  if (auto v = check_bullets(state, {homog.data(), homog.size()}))
    return "bullet " + std::to_string(v->bullet) + ": " + v->detail;
  return std::nullopt;
}

bool check_crucial_observation(const StageState& state, PairColorFn c) {
  const auto homog = compute_homogeneity(state.requirements, c);
  return check_crucial(state, {homog.data(), homog.size()});
}

std::vector<Requirement> order_requirements(std::span<const Train> trains) {
  std::vector<Requirement> reqs;
  if (trains.empty()) return reqs;

  const Nat m = trains[0].set_size;
  if (m < 2) throw ContractViolation("train sets need at least two elements");
  std::size_t total = 0;
  for (const Train& t : trains) {
    if (t.set_size != m)
      throw ContractViolation("trains must share one set size");
    if (!is_train(t)) throw ContractViolation("invalid train");
    total += t.sets.size();
  }
  if (trains.size() > m - 1)
    throw ContractViolation(
        "too many trains: " + std::to_string(trains.size()) +
        " trains of " + std::to_string(m) + "-sets (need at most set size "
        "minus one)");

  reqs.reserve(total);
  for (std::size_t j = 0; j < trains.size(); ++j) {
    for (std::size_t i = 0; i < trains[j].sets.size(); ++i)
      reqs.push_back(Requirement{j, i, trains[j].sets[i]});
  }
  std::sort(reqs.begin(), reqs.end(),
            [](const Requirement& x, const Requirement& y) {
              if (x.members != y.members) return precedes(x.members, y.members);
              return std::tie(x.train_index, x.position) <
                     std::tie(y.train_index, y.position);
            });
  return reqs;
}

VertexColoringResult run_stage_construction(
    std::span<const Requirement> ordered, PairColorFn c,
    const LemmaOptions& opts) {
  VertexColoringResult out;
  const std::size_t count = ordered.size();

  StageState st;
  st.requirements.assign(ordered.begin(), ordered.end());
  st.witnesses.reserve(count);
  st.acted_color.reserve(count);
  st.partial.reserve(count);
  out.stages.reserve(count);
  out.certificate.reserve(count);

  const HomogCache homog = compute_homogeneity(ordered, c);
  const std::span<const std::optional<Color>> homog_view{homog.data(),
                                                         homog.size()};

  for (std::size_t r = 0; r < count; ++r) {
    const Requirement& req = ordered[r];
    StageRecord rec;
    rec.stage = r;
    rec.homogeneous = homog[r];

    std::optional<Nat> new_witness;
    std::optional<Color> acted;
    if (!homog[r]) {
      rec.action = StageAction::NotHomogeneous;  // no commitment
    } else {
      const Color want = opposite(*homog[r]);
      std::optional<Nat> covering;
      for (std::size_t s = 0; s < r && !covering; ++s) {
        if (st.witnesses[s] && req.members.contains(*st.witnesses[s]) &&
            lookup_vertex(st.partial, *st.witnesses[s]) == want)
          covering = st.witnesses[s];
      }
      if (covering) {
        rec.action = StageAction::AlreadyMet;
        rec.witness = covering;
      } else {
        // Act with the largest element still undefined. The counting
        // argument guarantees at least two such, which keeps the witness
        // off the set's minimum.
        std::optional<Nat> pick;
        std::size_t undefined = 0;
        for (Nat a : req.members) {
          if (!lookup_vertex(st.partial, a)) {
            ++undefined;
            pick = a;
          }
        }
        if (undefined < 2) {
          std::ostringstream msg;
          msg << "stage " << r << " (train " << req.train_index
              << ", position " << req.position << ", set {"
              << format_set(req.members) << "}) has " << undefined
              << " undefined elements; the counting argument promises at "
                 "least two";
          throw SoundnessAlarm(msg.str());
        }
        insert_vertex(st.partial, *pick, want);
        rec.action = StageAction::Acted;
        rec.witness = pick;
        new_witness = pick;
        acted = homog[r];
      }
    }

    st.witnesses.push_back(new_witness);
    st.acted_color.push_back(acted);
    st.processed = r + 1;

    if (opts.verify_stages) {
      if (auto v = check_bullets(st, homog_view))
        throw StageCheckFailure(
            StageCheckFailure::Kind::Bullet, v->bullet,
            "after stage " + std::to_string(r) + ", bullet " +
                std::to_string(v->bullet) + ": " + v->detail);
      if (!check_crucial(st, homog_view))
        throw StageCheckFailure(
            StageCheckFailure::Kind::CrucialObservation, 0,
            "crucial observation fails after stage " + std::to_string(r));
    }

    out.stages.push_back(rec);
    out.certificate.push_back(RequirementOutcome{req, homog[r], rec.witness});
  }

  out.vertex_color = st.partial;
  for (const Requirement& req : ordered) {
    for (Nat a : req.members) {
      if (!lookup_vertex(out.vertex_color, a))
        insert_vertex(out.vertex_color, a, opts.default_color);
    }
  }
  out.final_state = std::move(st);
  return out;
}

VertexColoringResult build_vertex_coloring(std::span<const Train> trains,
                                           PairColorFn c,
                                           const LemmaOptions& opts) {
  const std::vector<Requirement> ordered = order_requirements(trains);
  return run_stage_construction(ordered, c, opts);
}

VertexColoringResult build_vertex_coloring(std::span<const Train> trains,
                                           const PairColoring& c,
                                           const LemmaOptions& opts) {
  // Reject instances whose internal pairs are not fully colored before
  // running anything.
  for (const Train& t : trains) {
    for (const NatSet& s : t.sets) {
      const auto xs = s.elements();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          if (!c.try_color(xs[i], xs[j]))
            throw ContractViolation(
                "pair (" + std::to_string(xs[i]) + "," +
                std::to_string(xs[j]) + ") inside a train set is not colored");
        }
      }
    }
  }
  return build_vertex_coloring(trains, as_color_fn(c), opts);
}

std::optional<NatSet> check_lemma_property(std::span<const Train> trains,
                                           PairColorFn c,
                                           const VertexColoring& cstar) {
  for (const Train& t : trains) {
    for (const NatSet& s : t.sets) {
      const auto iota = homogeneous_color(c, s);
      if (!iota) continue;
      const Color want = opposite(*iota);
      bool met = false;
      for (Nat a : s) {
        const auto col = lookup_vertex(cstar, a);
        if (!col)
          throw ContractViolation("vertex " + std::to_string(a) +
                                  " missing from the vertex coloring");
        if (*col == want) met = true;
      }
      if (!met) return s;
    }
  }
  return std::nullopt;
}

}  // namespace trainbench
