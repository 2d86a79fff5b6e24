#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "prefrep/constraint.hpp"
#include "prefrep/priority.hpp"
#include "prefrep/repair.hpp"

namespace prefrep {

enum class Family { kAll, kGlobal, kPareto, kCommon };

std::string_view to_string(Family f);
/// Accepts all|g|global|p|pareto|c|common. Throws ArgumentError.
Family parse_family(std::string_view text);

/// Schema, instance, constraints, conflict hypergraph and a validated priority.
class Context {
 public:
  /// Empty priority. Checks the instance and constraints against the schema.
  Context(Schema schema, Instance instance, ConstraintSet constraints);

  /// Validates `pairs` against the conflict hypergraph.
  static Context make(Schema schema, Instance instance, ConstraintSet constraints,
                      std::span<const std::pair<Fact, Fact>> pairs,
                      PriorityMode mode = PriorityMode::kStrict,
                      std::vector<std::pair<Fact, Fact>>* dropped = nullptr);

  const Schema& schema() const { return schema_; }
  const ConstraintSet& constraints() const { return constraints_; }
  const Instance& instance() const { return graph_->instance(); }
  const ConflictHypergraph& graph() const { return *graph_; }
  const std::shared_ptr<const ConflictHypergraph>& graph_ptr() const { return graph_; }
  const Priority& priority() const { return priority_; }

  /// Same data under another priority over the same hypergraph.
  Context with_priority(Priority p) const;

 private:
  Schema schema_;
  ConstraintSet constraints_;
  std::shared_ptr<const ConflictHypergraph> graph_;
  Priority priority_;
};

/// ∀x ∈ b∖a ∃y ∈ a∖b. y ≻ x. Rejects a == b with ArgumentError.
bool dominates_g(const Priority& p, const FactSet& a, const FactSet& b);
bool dominates_g(const Instance& a, const Instance& b, const Priority& p);

/// ∃y ∈ a∖b ∀x ∈ b∖a. y ≻ x. Rejects a == b with ArgumentError.
bool dominates_p(const Priority& p, const FactSet& a, const FactSet& b);
bool dominates_p(const Instance& a, const Instance& b, const Priority& p);

/// No other member of `all` globally dominates r.
bool is_globally_optimal(const Context& ctx, const FactSet& r, std::span<const FactSet> all);
/// Enumerates the repairs itself.
bool is_globally_optimal(const Context& ctx, const FactSet& r, std::size_t cap = kDefaultRepairCap);

/// Polynomial check: r is not Pareto optimal iff some y outside r beats a
/// member of every conflict contained in r ∪ {y}.
bool is_pareto_optimal(const Context& ctx, const FactSet& r);

/// Replays the winnow-restricted greedy construction, taking at each step any
/// undominated remaining fact whose keep/drop outcome agrees with r.
bool is_common_optimal(const Context& ctx, const FactSet& r);

/// Membership of a repair in a family. Throws ArgumentError when r is not a repair.
bool is_preferred(const Context& ctx, Family family, const FactSet& r,
                  std::size_t cap = kDefaultRepairCap);

/// Fact ids in the global fact order (seed 0) or a seeded shuffle of it.
std::vector<FactId> seeded_order(std::size_t n, std::uint64_t seed);

struct GlobalRepairOptions {
  std::uint64_t seed = 0;
  /// Replacement sets Y examined per improvement step before falling back to
  /// scanning the enumerated repairs for a dominator.
  std::size_t search_budget = 1u << 16;
  std::size_t cap = kDefaultRepairCap;
};

/// Greedy repair, then repeated improvement by replacement until no
/// replacement satisfying the global condition exists.
FactSet build_global_repair(const Context& ctx, const GlobalRepairOptions& opts = {});

/// One improvement step: a repair globally preferred over r, if any.
/// `budget_hit` reports whether the fallback scan was needed.
std::optional<FactSet> improve_global(const Context& ctx, const FactSet& r,
                                      const GlobalRepairOptions& opts, bool* budget_hit = nullptr);

/// Greedy repair; returned if Pareto optimal, otherwise a common optimal repair.
FactSet build_pareto_repair(const Context& ctx, std::uint64_t seed = 0);

/// Winnow-restricted greedy construction. `choices` (a prefix of the choice
/// sequence) must pick an undominated remaining fact at each step, otherwise
/// ArgumentError naming the step; the rest follows the seeded order.
FactSet build_common_repair(const Context& ctx, std::span<const FactId> choices = {},
                            std::uint64_t seed = 0);
Instance build_common_repair(const Context& ctx, std::span<const Fact> choices,
                             std::uint64_t seed = 0);

/// Repairs of the family, in enumeration order.
std::vector<FactSet> preferred_repair_sets(const Context& ctx, Family family,
                                           std::size_t cap = kDefaultRepairCap);
std::vector<Instance> preferred_repairs(const Context& ctx, Family family,
                                        std::size_t cap = kDefaultRepairCap);

}  // namespace prefrep
