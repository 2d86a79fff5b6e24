#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prefrep/conflict.hpp"

namespace prefrep {

inline constexpr std::size_t kDefaultRepairCap = 100000;

/// Greedy construction: takes facts in `order`, keeping each one that does not
/// complete a conflict with the facts kept so far. `order` must be a permutation
/// of the node ids (ArgumentError otherwise).
FactSet construct_repair(const ConflictHypergraph& hg, std::span<const FactId> order);

/// Same, starting from `start` (assumed independent) and visiting `order`,
/// which need not mention every fact.
FactSet extend_to_repair(const ConflictHypergraph& hg, FactSet start, std::span<const FactId> order);

/// Greedy construction from a fact permutation.
Instance construct_repair(const Instance& instance, std::span<const DenialConstraint> constraints,
                          std::span<const Fact> choices);

/// Every maximal independent set, sorted by fact-id vector. Throws
/// EnumerationLimitError when more than `cap` exist.
std::vector<FactSet> all_repair_sets(const ConflictHypergraph& hg, std::size_t cap = kDefaultRepairCap);

std::vector<Instance> all_repairs(const ConflictHypergraph& hg, std::size_t cap = kDefaultRepairCap);
std::vector<Instance> all_repairs(const Instance& instance,
                                  std::span<const DenialConstraint> constraints,
                                  std::size_t cap = kDefaultRepairCap);

}  // namespace prefrep
