#include "prefrep/conflict.hpp"

#include <algorithm>
#include <set>

#include "prefrep/error.hpp"

namespace prefrep {

namespace {

// Nested matching of the constraint atoms against the facts of their relations,
// pruning with three-valued guard evaluation after each binding step.
class Matcher {
 public:
  Matcher(const Instance& instance, const DenialConstraint& dc, std::set<Conflict>& out)
      : instance_(instance), dc_(dc), out_(out) {
    for (const auto& a : dc.atoms) {
      auto lo = std::lower_bound(instance.begin(), instance.end(), a.relation,
                                 [](const Fact& f, const std::string& r) { return f.relation < r; });
      auto hi = std::upper_bound(instance.begin(), instance.end(), a.relation,
                                 [](const std::string& r, const Fact& f) { return r < f.relation; });
      ranges_.emplace_back(static_cast<FactId>(lo - instance.begin()),
                           static_cast<FactId>(hi - instance.begin()));
    }
  }

  void run() {
    Binding b;
    std::vector<FactId> chosen;
    step(0, b, chosen);
  }

 private:
  void step(std::size_t k, const Binding& b, std::vector<FactId>& chosen) {
    if (k == dc_.atoms.size()) {
      if (eval_builtin(dc_.guard, b)) {
        Conflict c = chosen;
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        out_.insert(std::move(c));
      }
      return;
    }
    const auto& atom = dc_.atoms[k];
    for (FactId id = ranges_[k].first; id < ranges_[k].second; ++id) {
      const auto& fact = instance_[id];
      if (fact.tuple.size() != atom.terms.size()) continue;
      Binding nb = b;
      bool ok = true;
      for (std::size_t i = 0; ok && i < atom.terms.size(); ++i) {
        const auto& t = atom.terms[i];
        if (const auto* v = std::get_if<Value>(&t)) {
          ok = *v == fact.tuple[i];
        } else {
          auto [it, inserted] = nb.emplace(std::get<Variable>(t).name, fact.tuple[i]);
          if (!inserted) ok = it->second == fact.tuple[i];
        }
      }
      if (!ok) continue;
      if (auto v = eval_builtin_partial(dc_.guard, nb); v && !*v) continue;
      chosen.push_back(id);
      step(k + 1, nb, chosen);
      chosen.pop_back();
    }
  }

  const Instance& instance_;
  const DenialConstraint& dc_;
  std::set<Conflict>& out_;
  std::vector<std::pair<FactId, FactId>> ranges_;
};

}  // namespace

std::vector<Conflict> find_conflict_ids(const Instance& instance,
                                        std::span<const DenialConstraint> constraints) {
  std::set<Conflict> out;
  for (const auto& dc : constraints) Matcher(instance, dc, out).run();
  return {out.begin(), out.end()};
}

std::vector<std::vector<Fact>> find_conflicts(const Instance& instance,
                                              std::span<const DenialConstraint> constraints) {
  std::vector<std::vector<Fact>> out;
  for (const auto& c : find_conflict_ids(instance, constraints)) {
    auto& facts = out.emplace_back();
    for (auto id : c) facts.push_back(instance[id]);
  }
  return out;
}

ConflictHypergraph::ConflictHypergraph(Instance instance, std::vector<DenialConstraint> constraints)
    : instance_(std::move(instance)), constraints_(std::move(constraints)) {
  edges_ = find_conflict_ids(instance_, constraints_);
  incident_.resize(node_count());
  neighbors_.assign(node_count(), FactSet(node_count()));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (auto a : edges_[e]) {
      incident_[a].push_back(e);
      for (auto b : edges_[e]) {
        if (a != b) neighbors_[a].set(b);
      }
    }
  }
}

std::size_t ConflictHypergraph::size() const {
  std::size_t n = node_count();
  for (const auto& e : edges_) n += e.size();
  return n;
}

FactId ConflictHypergraph::id(const Fact& f) const {
  if (auto i = instance_.index_of(f)) return *i;
  throw ArgumentError("fact " + f.to_string() + " is not in the instance");
}

FactSet ConflictHypergraph::full_set() const {
  FactSet s(node_count());
  s.set();
  return s;
}

FactSet ConflictHypergraph::to_set(const Instance& sub) const {
  FactSet s(node_count());
  for (const auto& f : sub) s.set(id(f));
  return s;
}

Instance ConflictHypergraph::to_instance(const FactSet& s) const {
  std::vector<Fact> facts;
  for (auto i = s.find_first(); i != FactSet::npos; i = s.find_next(i)) facts.push_back(instance_[i]);
  return Instance(std::move(facts));
}

bool ConflictHypergraph::blocks(const FactSet& s, FactId f) const {
  for (auto e : incident_[f]) {
    const auto& edge = edges_[e];
    if (std::all_of(edge.begin(), edge.end(), [&](FactId x) { return x == f || s[x]; })) return true;
  }
  return false;
}

bool ConflictHypergraph::is_independent(const FactSet& s) const {
  return std::none_of(edges_.begin(), edges_.end(), [&](const Conflict& e) {
    return std::all_of(e.begin(), e.end(), [&](FactId x) { return s[x]; });
  });
}

bool ConflictHypergraph::is_maximal_independent(const FactSet& s) const {
  if (!is_independent(s)) return false;
  for (FactId f = 0; f < node_count(); ++f) {
    if (!s[f] && !blocks(s, f)) return false;
  }
  return true;
}

std::vector<Fact> neighbors(const ConflictHypergraph& hg, const Fact& v) {
  const auto& n = hg.neighbor_set(hg.id(v));
  std::vector<Fact> out;
  for (auto i = n.find_first(); i != FactSet::npos; i = n.find_next(i)) {
    out.push_back(hg.instance()[i]);
  }
  return out;
}

bool is_consistent(const Instance& instance, std::span<const DenialConstraint> constraints) {
  return find_conflict_ids(instance, constraints).empty();
}

bool is_repair(const Instance& candidate, const Instance& instance,
               std::span<const DenialConstraint> constraints) {
  if (!candidate.is_subset_of(instance)) return false;
  ConflictHypergraph hg(instance, {constraints.begin(), constraints.end()});
  return hg.is_maximal_independent(hg.to_set(candidate));
}

}  // namespace prefrep
