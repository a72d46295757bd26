#include "trainbench/diag.hpp"

#include <algorithm>

namespace trainbench {

namespace {

bool exists_witness_below(const Predicate& pred, Nat z, Nat x, Nat y_bound,
                          const PairColoring& prefix) {
  for (Nat y = 0; y < y_bound; ++y) {
    if (pred.evaluate(z, x, y, prefix) != Tri::False) return true;
  }
  return false;
}

}  // namespace

std::vector<Nat> qualifying_elements(const Predicate& pred, Nat level, Nat b,
                                     const PairColoring& prefix) {
  std::vector<Nat> out;
  for (Nat a = 0; a < b; ++a) {
    bool ok = true;
    for (Nat x = 0; x < level && ok; ++x)
      ok = exists_witness_below(pred, a, x, b, prefix);
    if (ok) out.push_back(a);
  }
  return out;
}

Train build_train_for(const Predicate& pred, Nat set_size, Nat b,
                      const PairColoring& prefix) {
  if (set_size == 0) throw ContractViolation("set size must be positive");

  // Level 0 admits everything below b; each further level only filters,
  // so one shrinking pool serves all levels.
  std::vector<Nat> pool;
  pool.reserve(b);
  for (Nat a = 0; a < b; ++a) pool.push_back(a);

  Train train = Train::none(set_size);
  for (Nat level = 0; level <= b; ++level) {
    if (level > 0) {
      const Nat x = level - 1;
      std::erase_if(pool, [&](Nat a) {
        return !exists_witness_below(pred, a, x, b, prefix);
      });
    }
    if (pool.size() < set_size) break;
    NatSet front = NatSet::from_elements(
        std::vector<Nat>(pool.begin(), pool.begin() + set_size));
    if (train.sets.empty() || train.sets.back() != front)
      train.sets.push_back(std::move(front));
  }
  return train;
}

ColumnResult extend_coloring_column(Nat b, const PairColoring& prefix,
                                    std::span<const Predicate> preds,
                                    Color default_color,
                                    const LemmaOptions& opts) {
  if (!prefix.is_total_below(b))
    throw ContractViolation("prefix is not total below column " +
                            std::to_string(b));
  if (preds.empty()) throw ContractViolation("need at least one predicate");

  ColumnResult out;
  out.log.column = b;

  const Nat set_size = preds.size() + 1;
  for (std::size_t j = 0; j < preds.size(); ++j) {
    Train t = build_train_for(preds[j], set_size, b, prefix);
    if (t.empty()) continue;  // contributes no requirements
    out.log.trains.push_back(std::move(t));
    out.log.train_owner.push_back(j);
  }

  LemmaOptions column_opts = opts;
  column_opts.default_color = default_color;
  VertexColoring cstar;
  if (!out.log.trains.empty()) {
    auto result = build_vertex_coloring(out.log.trains, prefix, column_opts);
    cstar = std::move(result.vertex_color);
    out.log.stages = std::move(result.stages);
    out.log.certificate = std::move(result.certificate);
  }

  out.colors.reserve(b);
  for (Nat a = 0; a < b; ++a) {
    const auto c = lookup_vertex(cstar, a);
    out.colors.push_back(c ? *c : default_color);
  }
  return out;
}

DiagRun generate_coloring(std::span<const Predicate> preds, Nat bound,
                          Color default_color, const LemmaOptions& opts) {
  DiagRun run;
  run.columns.reserve(bound);
  for (Nat b = 0; b < bound; ++b) {
    ColumnResult col =
        extend_coloring_column(b, run.coloring, preds, default_color, opts);
    run.coloring.append_column(col.colors);
    run.columns.push_back(std::move(col.log));
  }
  return run;
}

SetApproximation approximate_set(const Predicate& pred,
                                 std::size_t predicate_index, Nat x_bound,
                                 Nat y_bound, const PairColoring& coloring) {
  if (!coloring.is_total_below(y_bound))
    throw ContractViolation("coloring is not total below " +
                            std::to_string(y_bound));
  std::vector<Nat> members;
  for (Nat z = 0; z < y_bound; ++z) {
    bool ok = true;
    for (Nat x = 0; x < x_bound && ok; ++x)
      ok = exists_witness_below(pred, z, x, y_bound, coloring);
    if (ok) members.push_back(z);
  }
  return SetApproximation{predicate_index, x_bound, y_bound,
                          NatSet::from_elements(std::move(members))};
}

std::optional<NonHomogeneityCertificate> find_nonhomogeneity_certificate(
    std::size_t predicate_index, const PairColoring& coloring,
    std::span<const Predicate> preds, Nat x_bound, Nat y_bound) {
  if (predicate_index >= preds.size())
    throw ContractViolation("predicate index out of range");
  const SetApproximation approx = approximate_set(
      preds[predicate_index], predicate_index, x_bound, y_bound, coloring);

  const auto members = approx.members.elements();
  bool have_first = false;
  Nat a1 = 0, b1 = 0;
  Color c1 = Color::R;
  for (std::size_t bi = 1; bi < members.size(); ++bi) {
    for (std::size_t ai = 0; ai < bi; ++ai) {
      const Nat a = members[ai];
      const Nat b = members[bi];
      const Color col = coloring.color(a, b);
      if (!have_first) {
        a1 = a;
        b1 = b;
        c1 = col;
        have_first = true;
        continue;
      }
      if (col != c1)
        return NonHomogeneityCertificate{predicate_index, x_bound, y_bound,
                                         a1,  b1,      c1,
                                         a,   b,       col};
    }
  }
  return std::nullopt;
}

bool revalidate_certificate(const NonHomogeneityCertificate& cert,
                            const PairColoring& coloring,
                            std::span<const Predicate> preds) {
  if (cert.predicate_index >= preds.size()) return false;
  if (cert.a1 >= cert.b1 || cert.a2 >= cert.b2) return false;
  if (cert.c1 == cert.c2) return false;

  const SetApproximation approx =
      approximate_set(preds[cert.predicate_index], cert.predicate_index,
                      cert.x_bound, cert.y_bound, coloring);
  for (Nat v : {cert.a1, cert.b1, cert.a2, cert.b2}) {
    if (!approx.members.contains(v)) return false;
  }
  return coloring.try_color(cert.a1, cert.b1) == cert.c1 &&
         coloring.try_color(cert.a2, cert.b2) == cert.c2;
}

}  // namespace trainbench
