#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "prefrep/constraint.hpp"
#include "prefrep/model.hpp"

namespace prefrep {

/// Position of a fact in the (canonically ordered) instance.
using FactId = std::size_t;
/// Subset of an instance, indexed by FactId.
using FactSet = boost::dynamic_bitset<>;

/// Sorted fact ids of one conflict.
using Conflict = std::vector<FactId>;

/// All conflicts of `instance` w.r.t. `constraints`, deduplicated, each sorted,
/// in lexicographic order.
std::vector<Conflict> find_conflict_ids(const Instance& instance,
                                        std::span<const DenialConstraint> constraints);

/// Same, as fact sets.
std::vector<std::vector<Fact>> find_conflicts(const Instance& instance,
                                              std::span<const DenialConstraint> constraints);

/// Nodes are the instance facts, hyperedges the conflicts.
/// Maximal independent sets are exactly the repairs.
class ConflictHypergraph {
 public:
  ConflictHypergraph(Instance instance, std::vector<DenialConstraint> constraints);

  const Instance& instance() const { return instance_; }
  const std::vector<DenialConstraint>& constraints() const { return constraints_; }
  std::size_t node_count() const { return instance_.size(); }
  const std::vector<Conflict>& edges() const { return edges_; }
  /// Indices into edges() of the conflicts containing `f`.
  const std::vector<std::size_t>& incident(FactId f) const { return incident_[f]; }
  const FactSet& neighbor_set(FactId f) const { return neighbors_[f]; }
  bool are_neighbors(FactId a, FactId b) const { return neighbors_[a][b]; }
  /// Nodes plus the sum of hyperedge cardinalities.
  std::size_t size() const;

  /// Throws ArgumentError when the fact is not a node.
  FactId id(const Fact& f) const;

  FactSet empty_set() const { return FactSet(node_count()); }
  FactSet full_set() const;
  /// Throws ArgumentError when the instance is not a subset of the nodes.
  FactSet to_set(const Instance& sub) const;
  Instance to_instance(const FactSet& s) const;

  /// True when s ∪ {f} contains a conflict involving f (s need not exclude f).
  bool blocks(const FactSet& s, FactId f) const;
  bool is_independent(const FactSet& s) const;
  bool is_maximal_independent(const FactSet& s) const;

 private:
  Instance instance_;
  std::vector<DenialConstraint> constraints_;
  std::vector<Conflict> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<FactSet> neighbors_;
};

/// Facts sharing a conflict with v, excluding v. Throws ArgumentError for unknown v.
std::vector<Fact> neighbors(const ConflictHypergraph& hg, const Fact& v);

bool is_consistent(const Instance& instance, std::span<const DenialConstraint> constraints);

/// candidate ⊆ instance, consistent, and maximal.
bool is_repair(const Instance& candidate, const Instance& instance,
               std::span<const DenialConstraint> constraints);

}  // namespace prefrep
