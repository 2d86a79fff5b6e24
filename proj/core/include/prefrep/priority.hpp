#pragma once

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "prefrep/conflict.hpp"

namespace prefrep {

enum class PriorityMode { kStrict, kLenient };

/// An acyclic relation on neighboring facts of a conflict hypergraph.
/// `prefers(a, b)` reads "a ≻ b": a wins over b.
class Priority {
 public:
  using Pair = std::pair<FactId, FactId>;

  /// The empty priority.
  explicit Priority(std::shared_ptr<const ConflictHypergraph> host);

  const ConflictHypergraph& host() const { return *host_; }
  const std::shared_ptr<const ConflictHypergraph>& host_ptr() const { return host_; }

  bool prefers(FactId a, FactId b) const { return beats_[a][b]; }
  /// Facts b with a ≻ b.
  const FactSet& beats(FactId a) const { return beats_[a]; }
  /// Facts a with a ≻ b.
  const FactSet& beaten_by(FactId b) const { return beaten_by_[b]; }
  /// Sorted pairs (winner, loser).
  std::vector<Pair> pairs() const;
  std::vector<std::pair<Fact, Fact>> fact_pairs() const;
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  /// Adds a ≻ b without any validation. Used by validators and enumerators.
  void add_unchecked(FactId a, FactId b);
  void remove_unchecked(FactId a, FactId b);
  /// True when b reaches a along ≻ edges (so adding a ≻ b would close a cycle).
  bool reaches(FactId from, FactId to) const;

  friend bool operator==(const Priority& a, const Priority& b);

 private:
  std::shared_ptr<const ConflictHypergraph> host_;
  std::vector<FactSet> beats_;
  std::vector<FactSet> beaten_by_;
  std::size_t count_ = 0;
};

/// Builds a priority from (winner, loser) pairs. Strict mode rejects pairs of
/// non-neighbors; lenient mode drops them and appends them to `dropped`.
/// Both reject cycles with PriorityError. Unknown facts raise ArgumentError.
Priority validate_priority(std::span<const std::pair<Fact, Fact>> pairs,
                           std::shared_ptr<const ConflictHypergraph> host, PriorityMode mode,
                           std::vector<std::pair<Fact, Fact>>* dropped = nullptr);

Priority validate_priority(std::span<const Priority::Pair> pairs,
                           std::shared_ptr<const ConflictHypergraph> host, PriorityMode mode,
                           std::vector<Priority::Pair>* dropped = nullptr);

/// Every two distinct neighbors are ordered.
bool is_total(const Priority& p);

/// p1 ⊇ p2. Throws ArgumentError when the hosts differ.
bool extends(const Priority& p1, const Priority& p2);

/// Unordered neighbor pairs (a < b) not oriented by p.
std::vector<Priority::Pair> unordered_pairs(const Priority& p);

/// Calls `visit` on each acyclic total extension of p exactly once, in a
/// deterministic order. Stops early when `visit` returns false.
void for_each_total_extension(const Priority& p, const std::function<bool(const Priority&)>& visit);

std::vector<Priority> total_extensions(const Priority& p);

/// ω(s): members of s not beaten by another member of s.
FactSet winnow(const Priority& p, const FactSet& s);
std::vector<Fact> winnow(const Priority& p, std::span<const Fact> s);

}  // namespace prefrep
