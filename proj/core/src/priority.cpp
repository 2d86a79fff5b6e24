#include "prefrep/priority.hpp"

#include <algorithm>

#include "prefrep/error.hpp"

namespace prefrep {

Priority::Priority(std::shared_ptr<const ConflictHypergraph> host) : host_(std::move(host)) {
  if (!host_) throw ArgumentError("priority needs a conflict hypergraph");
  beats_.assign(host_->node_count(), host_->empty_set());
  beaten_by_.assign(host_->node_count(), host_->empty_set());
}

std::vector<Priority::Pair> Priority::pairs() const {
  std::vector<Pair> out;
  for (FactId a = 0; a < beats_.size(); ++a) {
    for (auto b = beats_[a].find_first(); b != FactSet::npos; b = beats_[a].find_next(b)) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::pair<Fact, Fact>> Priority::fact_pairs() const {
  std::vector<std::pair<Fact, Fact>> out;
  for (auto [a, b] : pairs()) out.emplace_back(host_->instance()[a], host_->instance()[b]);
  return out;
}

void Priority::add_unchecked(FactId a, FactId b) {
  if (beats_[a][b]) return;
  beats_[a].set(b);
  beaten_by_[b].set(a);
  ++count_;
}

void Priority::remove_unchecked(FactId a, FactId b) {
  if (!beats_[a][b]) return;
  beats_[a].reset(b);
  beaten_by_[b].reset(a);
  --count_;
}

bool Priority::reaches(FactId from, FactId to) const {
  FactSet seen(beats_.size());
  std::vector<FactId> stack{from};
  seen.set(from);
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    const auto& next = beats_[x];
    for (auto y = next.find_first(); y != FactSet::npos; y = next.find_next(y)) {
      if (!seen[y]) {
        seen.set(y);
        stack.push_back(y);
      }
    }
  }
  return false;
}

bool operator==(const Priority& a, const Priority& b) {
  return (a.host_ == b.host_ || a.host_->instance() == b.host_->instance()) && a.beats_ == b.beats_;
}

namespace {

// One cycle of the relation, or empty.
std::vector<FactId> find_cycle(const Priority& p) {
  const auto n = p.host().node_count();
  std::vector<int> color(n, 0);
  std::vector<FactId> parent(n, 0);
  for (FactId root = 0; root < n; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<FactId, FactId>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto& out = p.beats(x);
      auto y = next == 0 ? out.find_first() : out.find_next(next - 1);
      if (y == FactSet::npos) {
        color[x] = 2;
        stack.pop_back();
        continue;
      }
      next = y + 1;
      if (color[y] == 1) {
        std::vector<FactId> cycle{y};
        for (auto z = x; z != y; z = parent[z]) cycle.push_back(z);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (color[y] == 0) {
        color[y] = 1;
        parent[y] = x;
        stack.emplace_back(y, 0);
      }
    }
  }
  return {};
}

}  // namespace

Priority validate_priority(std::span<const Priority::Pair> pairs,
                           std::shared_ptr<const ConflictHypergraph> host, PriorityMode mode,
                           std::vector<Priority::Pair>* dropped) {
  Priority p(std::move(host));
  const auto& hg = p.host();
  for (auto [a, b] : pairs) {
    if (a >= hg.node_count() || b >= hg.node_count()) {
      throw ArgumentError("priority refers to an unknown fact id");
    }
    const auto& fa = hg.instance()[a];
    const auto& fb = hg.instance()[b];
    if (a == b) {
      throw PriorityError("priority is cyclic: " + fa.to_string() + " > itself", {fa.to_string()});
    }
    if (!hg.are_neighbors(a, b)) {
      if (mode == PriorityMode::kStrict) {
        throw PriorityError("priority pair " + fa.to_string() + " > " + fb.to_string() +
                            " relates facts that share no conflict");
      }
      if (dropped) dropped->emplace_back(a, b);
      continue;
    }
    p.add_unchecked(a, b);
  }
  if (auto cycle = find_cycle(p); !cycle.empty()) {
    std::vector<std::string> names;
    std::string text;
    for (auto id : cycle) {
      names.push_back(hg.instance()[id].to_string());
      text += names.back() + " > ";
    }
    text += names.front();
    throw PriorityError("priority is cyclic: " + text, std::move(names));
  }
  return p;
}

Priority validate_priority(std::span<const std::pair<Fact, Fact>> pairs,
                           std::shared_ptr<const ConflictHypergraph> host, PriorityMode mode,
                           std::vector<std::pair<Fact, Fact>>* dropped) {
  std::vector<Priority::Pair> ids;
  for (const auto& [a, b] : pairs) ids.emplace_back(host->id(a), host->id(b));
  std::vector<Priority::Pair> dropped_ids;
  auto p = validate_priority(ids, host, mode, &dropped_ids);
  if (dropped) {
    for (auto [a, b] : dropped_ids) dropped->emplace_back(host->instance()[a], host->instance()[b]);
  }
  return p;
}

std::vector<Priority::Pair> unordered_pairs(const Priority& p) {
  std::vector<Priority::Pair> out;
  const auto& hg = p.host();
  for (FactId a = 0; a < hg.node_count(); ++a) {
    const auto& n = hg.neighbor_set(a);
    for (auto b = n.find_next(a); b != FactSet::npos; b = n.find_next(b)) {
      if (!p.prefers(a, b) && !p.prefers(b, a)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_total(const Priority& p) { return unordered_pairs(p).empty(); }

bool extends(const Priority& p1, const Priority& p2) {
  if (p1.host_ptr() != p2.host_ptr() && p1.host().instance() != p2.host().instance()) {
    throw ArgumentError("priorities are defined over different instances");
  }
  for (auto [a, b] : p2.pairs()) {
    if (!p1.prefers(a, b)) return false;
  }
  return true;
}

namespace {

bool orient(Priority& cur, const std::vector<Priority::Pair>& todo, std::size_t k,
            const std::function<bool(const Priority&)>& visit) {
  if (k == todo.size()) return visit(cur);
  auto [a, b] = todo[k];
  // Every acyclic partial orientation extends to a total one, so both branches
  // that keep the relation acyclic lead to at least one extension.
  for (auto [x, y] : {Priority::Pair{a, b}, Priority::Pair{b, a}}) {
    if (cur.reaches(y, x)) continue;
    cur.add_unchecked(x, y);
    bool go_on = orient(cur, todo, k + 1, visit);
    cur.remove_unchecked(x, y);
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_total_extension(const Priority& p, const std::function<bool(const Priority&)>& visit) {
  Priority cur = p;
  orient(cur, unordered_pairs(p), 0, visit);
}

std::vector<Priority> total_extensions(const Priority& p) {
  std::vector<Priority> out;
  for_each_total_extension(p, [&](const Priority& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

FactSet winnow(const Priority& p, const FactSet& s) {
  FactSet out = s;
  for (auto f = s.find_first(); f != FactSet::npos; f = s.find_next(f)) {
    if (p.beaten_by(f).intersects(s)) out.reset(f);
  }
  return out;
}

std::vector<Fact> winnow(const Priority& p, std::span<const Fact> s) {
  FactSet set = p.host().empty_set();
  for (const auto& f : s) set.set(p.host().id(f));
  auto w = winnow(p, set);
  std::vector<Fact> out;
  for (auto i = w.find_first(); i != FactSet::npos; i = w.find_next(i)) {
    out.push_back(p.host().instance()[i]);
  }
  return out;
}

}  // namespace prefrep
