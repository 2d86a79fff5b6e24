#include "prefrep/repair.hpp"

#include <algorithm>

#include "prefrep/error.hpp"

namespace prefrep {

FactSet extend_to_repair(const ConflictHypergraph& hg, FactSet start, std::span<const FactId> order) {
  for (auto f : order) {
    if (!start[f] && !hg.blocks(start, f)) start.set(f);
  }
  return start;
}

FactSet construct_repair(const ConflictHypergraph& hg, std::span<const FactId> order) {
  FactSet seen = hg.empty_set();
  for (auto f : order) {
    if (f >= hg.node_count() || seen[f]) throw ArgumentError("choice sequence is not a permutation");
    seen.set(f);
  }
  if (order.size() != hg.node_count()) throw ArgumentError("choice sequence is not a permutation");
  return extend_to_repair(hg, hg.empty_set(), order);
}

Instance construct_repair(const Instance& instance, std::span<const DenialConstraint> constraints,
                          std::span<const Fact> choices) {
  ConflictHypergraph hg(instance, {constraints.begin(), constraints.end()});
  std::vector<FactId> order;
  for (const auto& f : choices) order.push_back(hg.id(f));
  return hg.to_instance(construct_repair(hg, order));
}

namespace {

class Enumerator {
 public:
  Enumerator(const ConflictHypergraph& hg, std::size_t cap)
      : hg_(hg), cap_(cap), in_(hg.empty_set()), out_(hg.empty_set()) {}

  std::vector<FactSet> run() {
    step(0);
    return std::move(found_);
  }

 private:
  // Could f still be blocked once the undecided facts (ids > k) are settled?
  bool can_be_blocked(FactId f, FactId k) const {
    for (auto e : hg_.incident(f)) {
      const auto& edge = hg_.edges()[e];
      if (std::all_of(edge.begin(), edge.end(),
                      [&](FactId x) { return x == f || in_[x] || (x > k && !out_[x]); })) {
        return true;
      }
    }
    return false;
  }

  void step(FactId k) {
    if (k == hg_.node_count()) {
      for (auto f = out_.find_first(); f != FactSet::npos; f = out_.find_next(f)) {
        if (!hg_.blocks(in_, f)) return;
      }
      if (found_.size() == cap_) throw EnumerationLimitError(cap_);
      found_.push_back(in_);
      return;
    }
    if (!hg_.blocks(in_, k)) {
      in_.set(k);
      step(k + 1);
      in_.reset(k);
    }
    if (can_be_blocked(k, k)) {
      out_.set(k);
      // Earlier excluded facts may have lost their last chance of being blocked.
      bool viable = true;
      for (auto f = out_.find_first(); viable && f != FactSet::npos; f = out_.find_next(f)) {
        viable = can_be_blocked(f, k);
      }
      if (viable) step(k + 1);
      out_.reset(k);
    }
  }

  const ConflictHypergraph& hg_;
  std::size_t cap_;
  FactSet in_;
  FactSet out_;
  std::vector<FactSet> found_;
};

}  // namespace

std::vector<FactSet> all_repair_sets(const ConflictHypergraph& hg, std::size_t cap) {
  // Facts are decided in id order, so repairs come out in lexicographic order
  // of their membership vectors (members first).
  return Enumerator(hg, cap).run();
}

std::vector<Instance> all_repairs(const ConflictHypergraph& hg, std::size_t cap) {
  std::vector<Instance> out;
  for (const auto& s : all_repair_sets(hg, cap)) out.push_back(hg.to_instance(s));
  return out;
}

std::vector<Instance> all_repairs(const Instance& instance,
                                  std::span<const DenialConstraint> constraints, std::size_t cap) {
  return all_repairs(ConflictHypergraph(instance, {constraints.begin(), constraints.end()}), cap);
}

}  // namespace prefrep
