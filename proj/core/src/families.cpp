#include "prefrep/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "prefrep/error.hpp"

namespace prefrep {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kAll: return "all";
    case Family::kGlobal: return "global";
    case Family::kPareto: return "pareto";
    case Family::kCommon: return "common";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "all") return Family::kAll;
  if (text == "g" || text == "global") return Family::kGlobal;
  if (text == "p" || text == "pareto") return Family::kPareto;
  if (text == "c" || text == "common") return Family::kCommon;
  throw ArgumentError("unknown family '" + std::string(text) + "'");
}

namespace {

std::shared_ptr<const ConflictHypergraph> make_graph(const Schema& schema, Instance instance,
                                                     const ConstraintSet& constraints) {
  check_instance(schema, instance);
  return std::make_shared<const ConflictHypergraph>(std::move(instance), constraints.all(schema));
}

}  // namespace

Context::Context(Schema schema, Instance instance, ConstraintSet constraints)
    : schema_(std::move(schema)),
      constraints_(std::move(constraints)),
      graph_(make_graph(schema_, std::move(instance), constraints_)),
      priority_(graph_) {}

Context Context::make(Schema schema, Instance instance, ConstraintSet constraints,
                      std::span<const std::pair<Fact, Fact>> pairs, PriorityMode mode,
                      std::vector<std::pair<Fact, Fact>>* dropped) {
  Context ctx(std::move(schema), std::move(instance), std::move(constraints));
  ctx.priority_ = validate_priority(pairs, ctx.graph_, mode, dropped);
  return ctx;
}

Context Context::with_priority(Priority p) const {
  if (p.host_ptr() != graph_) throw ArgumentError("priority belongs to another hypergraph");
  Context ctx = *this;
  ctx.priority_ = std::move(p);
  return ctx;
}

bool dominates_g(const Priority& p, const FactSet& a, const FactSet& b) {
  if (a == b) throw ArgumentError("a repair is not compared with itself");
  // Hot in family enumeration: no temporaries.
  for (auto x = b.find_first(); x != FactSet::npos; x = b.find_next(x)) {
    if (a[x]) continue;
    const auto& w = p.beaten_by(x);
    bool covered = false;
    for (auto y = w.find_first(); y != FactSet::npos && !covered; y = w.find_next(y)) {
      covered = a[y] && !b[y];
    }
    if (!covered) return false;
  }
  return true;
}

bool dominates_g(const Instance& a, const Instance& b, const Priority& p) {
  return dominates_g(p, p.host().to_set(a), p.host().to_set(b));
}

bool dominates_p(const Priority& p, const FactSet& a, const FactSet& b) {
  if (a == b) throw ArgumentError("a repair is not compared with itself");
  FactSet winners = a - b;
  FactSet losers = b - a;
  for (auto y = winners.find_first(); y != FactSet::npos; y = winners.find_next(y)) {
    if (losers.is_subset_of(p.beats(y))) return true;
  }
  return false;
}

bool dominates_p(const Instance& a, const Instance& b, const Priority& p) {
  return dominates_p(p, p.host().to_set(a), p.host().to_set(b));
}

bool is_globally_optimal(const Context& ctx, const FactSet& r, std::span<const FactSet> all) {
  return std::none_of(all.begin(), all.end(), [&](const FactSet& other) {
    return other != r && dominates_g(ctx.priority(), other, r);
  });
}

bool is_globally_optimal(const Context& ctx, const FactSet& r, std::size_t cap) {
  auto all = all_repair_sets(ctx.graph(), cap);
  return is_globally_optimal(ctx, r, all);
}

bool is_pareto_optimal(const Context& ctx, const FactSet& r) {
  const auto& hg = ctx.graph();
  const auto& p = ctx.priority();
  for (FactId y = 0; y < hg.node_count(); ++y) {
    if (r[y] || (p.beats(y) & r).none()) continue;
    bool improves = true;
    for (auto e : hg.incident(y)) {
      const auto& edge = hg.edges()[e];
      bool inside = std::all_of(edge.begin(), edge.end(), [&](FactId x) { return x == y || r[x]; });
      if (!inside) continue;
      bool beaten = std::any_of(edge.begin(), edge.end(),
                                [&](FactId x) { return x != y && p.prefers(y, x); });
      if (!beaten) {
        improves = false;
        break;
      }
    }
    if (improves) return false;
  }
  return true;
}

bool is_common_optimal(const Context& ctx, const FactSet& r) {
  // Available moves only grow as the run proceeds (the remaining set shrinks and
  // the kept set grows), so any maximal sequence of agreeing moves reaches the
  // same end state and a single greedy pass decides the question.
  const auto& hg = ctx.graph();
  const auto& p = ctx.priority();
  FactSet remaining = hg.full_set();
  FactSet kept = hg.empty_set();
  bool progress = true;
  while (remaining.any() && progress) {
    progress = false;
    FactSet w = winnow(p, remaining);
    for (auto f = w.find_first(); f != FactSet::npos; f = w.find_next(f)) {
      if (r[f]) {
        kept.set(f);
      } else if (!hg.blocks(kept, f)) {
        continue;
      }
      remaining.reset(f);
      progress = true;
    }
  }
  return remaining.none() && kept == r;
}

bool is_preferred(const Context& ctx, Family family, const FactSet& r, std::size_t cap) {
  if (r.size() != ctx.graph().node_count() || !ctx.graph().is_maximal_independent(r)) {
    throw ArgumentError("candidate is not a repair");
  }
  switch (family) {
    case Family::kAll: return true;
    case Family::kGlobal: return is_globally_optimal(ctx, r, cap);
    case Family::kPareto: return is_pareto_optimal(ctx, r);
    case Family::kCommon: return is_common_optimal(ctx, r);
  }
  return false;
}

std::vector<FactId> seeded_order(std::size_t n, std::uint64_t seed) {
  std::vector<FactId> order(n);
  std::iota(order.begin(), order.end(), FactId{0});
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

namespace {

// Calls visit on each subset of `pool` of size k (ids ascending), while visit returns true.
template <typename Visit>
bool for_each_subset(const std::vector<FactId>& pool, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<FactSet> improve_global(const Context& ctx, const FactSet& r,
                                      const GlobalRepairOptions& opts, bool* budget_hit) {
  const auto& hg = ctx.graph();
  const auto& p = ctx.priority();
  if (budget_hit) *budget_hit = false;
  // Only facts beating some member of r can witness a replacement; a replaced
  // set X may as well be everything in r the chosen Y beats.
  std::vector<FactId> pool;
  for (FactId y = 0; y < hg.node_count(); ++y) {
    if (!r[y] && p.beats(y).intersects(r)) pool.push_back(y);
  }
  auto order = seeded_order(hg.node_count(), opts.seed);
  std::size_t examined = 0;
  std::optional<FactSet> found;
  bool exhausted = false;
  for (std::size_t k = 1; k <= pool.size() && !found && !exhausted; ++k) {
    for_each_subset(pool, k, [&](const std::vector<std::size_t>& idx) {
      if (examined++ == opts.search_budget) {
        exhausted = true;
        return false;
      }
      FactSet y = hg.empty_set();
      FactSet beaten = hg.empty_set();
      for (auto i : idx) {
        y.set(pool[i]);
        beaten |= p.beats(pool[i]);
      }
      FactSet j = (r - (beaten & r)) | y;
      if (!hg.is_independent(j)) return true;
      found = extend_to_repair(hg, j, order);
      return false;
    });
  }
  if (found) return found;
  if (!exhausted) return std::nullopt;
  if (budget_hit) *budget_hit = true;
  for (const auto& other : all_repair_sets(hg, opts.cap)) {
    if (other != r && dominates_g(p, other, r)) return other;
  }
  return std::nullopt;
}

FactSet build_global_repair(const Context& ctx, const GlobalRepairOptions& opts) {
  auto order = seeded_order(ctx.graph().node_count(), opts.seed);
  FactSet r = construct_repair(ctx.graph(), order);
  while (auto next = improve_global(ctx, r, opts)) r = std::move(*next);
  return r;
}

FactSet build_pareto_repair(const Context& ctx, std::uint64_t seed) {
  auto order = seeded_order(ctx.graph().node_count(), seed);
  FactSet r = construct_repair(ctx.graph(), order);
  if (is_pareto_optimal(ctx, r)) return r;
  return build_common_repair(ctx, std::span<const FactId>{}, seed);
}

FactSet build_common_repair(const Context& ctx, std::span<const FactId> choices, std::uint64_t seed) {
  const auto& hg = ctx.graph();
  const auto& p = ctx.priority();
  FactSet remaining = hg.full_set();
  FactSet kept = hg.empty_set();
  auto take = [&](FactId f) {
    remaining.reset(f);
    if (!hg.blocks(kept, f)) kept.set(f);
  };
  for (std::size_t step = 0; step < choices.size(); ++step) {
    FactId f = choices[step];
    if (f >= hg.node_count() || !remaining[f]) {
      throw ArgumentError("choice " + std::to_string(step + 1) + " is not a remaining fact");
    }
    if (p.beaten_by(f).intersects(remaining)) {
      throw ArgumentError("choice " + std::to_string(step + 1) + " (" + hg.instance()[f].to_string() +
                          ") is dominated by a remaining fact");
    }
    take(f);
  }
  auto order = seeded_order(hg.node_count(), seed);
  while (remaining.any()) {
    for (auto f : order) {
      if (remaining[f] && !p.beaten_by(f).intersects(remaining)) {
        take(f);
        break;
      }
    }
  }
  return kept;
}

Instance build_common_repair(const Context& ctx, std::span<const Fact> choices, std::uint64_t seed) {
  std::vector<FactId> ids;
  for (const auto& f : choices) ids.push_back(ctx.graph().id(f));
  return ctx.graph().to_instance(build_common_repair(ctx, std::span<const FactId>(ids), seed));
}

std::vector<FactSet> preferred_repair_sets(const Context& ctx, Family family, std::size_t cap) {
  auto all = all_repair_sets(ctx.graph(), cap);
  std::vector<FactSet> out;
  for (const auto& r : all) {
    bool keep = false;
    switch (family) {
      case Family::kAll: keep = true; break;
      case Family::kGlobal: keep = is_globally_optimal(ctx, r, all); break;
      case Family::kPareto: keep = is_pareto_optimal(ctx, r); break;
      case Family::kCommon: keep = is_common_optimal(ctx, r); break;
    }
    if (keep) out.push_back(r);
  }
  return out;
}

std::vector<Instance> preferred_repairs(const Context& ctx, Family family, std::size_t cap) {
  std::vector<Instance> out;
  for (const auto& r : preferred_repair_sets(ctx, family, cap)) out.push_back(ctx.graph().to_instance(r));
  return out;
}

}  // namespace prefrep
