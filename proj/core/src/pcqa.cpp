#include "prefrep/pcqa.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "prefrep/error.hpp"

namespace prefrep {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kUndetermined: return "undetermined";
  }
  return "?";
}

std::string_view to_string(ConjunctTest t) {
  switch (t) {
    case ConjunctTest::kSatisfiable: return "satisfiable";
    case ConjunctTest::kMissingFact: return "missing-fact";
    case ConjunctTest::kRequiredConflict: return "required-conflict";
    case ConjunctTest::kSharedCluster: return "shared-cluster";
    case ConjunctTest::kNotPreferred: return "not-preferred";
    case ConjunctTest::kNoAlternative: return "no-alternative";
  }
  return "?";
}

PcqaResult pcqa_generic(const Context& ctx, Family family, const Query& q, std::size_t cap) {
  PcqaResult res;
  bool any_true = false, any_false = false;
  for (const auto& r : preferred_repair_sets(ctx, family, cap)) {
    ++res.preferred_count;
    auto inst = ctx.graph().to_instance(r);
    if (eval_query(inst, q)) {
      if (!any_true) res.true_witness = inst;
      any_true = true;
    } else {
      if (!any_false) res.false_witness = inst;
      any_false = true;
    }
  }
  res.verdict = !any_false ? Verdict::kTrue : !any_true ? Verdict::kFalse : Verdict::kUndetermined;
  return res;
}

namespace {

void cluster_relation(const Instance& instance, const std::string& relation,
                      const std::vector<std::size_t>& lhs, const std::vector<std::size_t>& rhs,
                      ClusterIndex& idx) {
  std::map<std::vector<Value>, std::size_t> x_ids;
  std::map<std::pair<std::size_t, std::vector<Value>>, std::size_t> xy_ids;
  for (FactId f = 0; f < instance.size(); ++f) {
    const auto& fact = instance[f];
    if (fact.relation != relation) continue;
    std::vector<Value> xs, ys;
    for (auto i : lhs) xs.push_back(fact.tuple[i]);
    for (auto i : rhs) ys.push_back(fact.tuple[i]);
    auto [xit, xnew] = x_ids.emplace(xs, idx.x_clusters.size());
    if (xnew) {
      idx.x_clusters.emplace_back();
      idx.xy_in_x.emplace_back();
    }
    auto x = xit->second;
    auto [yit, ynew] = xy_ids.emplace(std::make_pair(x, ys), idx.xy_clusters.size());
    if (ynew) {
      idx.xy_clusters.emplace_back();
      idx.xy_in_x[x].push_back(yit->second);
    }
    idx.x_of[f] = x;
    idx.xy_of[f] = yit->second;
    idx.x_clusters[x].push_back(f);
    idx.xy_clusters[yit->second].push_back(f);
  }
}

}  // namespace

ClusterIndex build_cluster_index(const Instance& instance, const FunctionalDependency& fd,
                                 const Schema& schema) {
  auto pos = fd_positions(fd, schema);
  ClusterIndex idx;
  idx.x_of.assign(instance.size(), ClusterIndex::kNone);
  idx.xy_of.assign(instance.size(), ClusterIndex::kNone);
  cluster_relation(instance, fd.relation, pos.lhs, pos.rhs, idx);
  return idx;
}

ClusterIndex build_cluster_index(const Context& ctx) {
  const auto& cs = ctx.constraints();
  if (!cs.denials.empty()) {
    throw UnsupportedShapeError("the tractable path handles functional dependencies only");
  }
  std::map<std::string, const FunctionalDependency*> by_relation;
  for (const auto& fd : cs.fds) {
    if (!by_relation.emplace(fd.relation, &fd).second) {
      throw UnsupportedShapeError("relation " + fd.relation +
                                  " has more than one functional dependency");
    }
  }
  const auto& instance = ctx.instance();
  ClusterIndex idx;
  idx.x_of.assign(instance.size(), ClusterIndex::kNone);
  idx.xy_of.assign(instance.size(), ClusterIndex::kNone);
  for (const auto& [rel, fd] : by_relation) {
    auto pos = fd_positions(*fd, ctx.schema());
    cluster_relation(instance, rel, pos.lhs, pos.rhs, idx);
  }
  for (FactId f = 0; f < instance.size(); ++f) {
    if (idx.x_of[f] != ClusterIndex::kNone) continue;
    idx.x_of[f] = idx.x_clusters.size();
    idx.xy_of[f] = idx.xy_clusters.size();
    idx.xy_in_x.push_back({idx.xy_clusters.size()});
    idx.x_clusters.push_back({f});
    idx.xy_clusters.push_back({f});
  }
  return idx;
}

namespace {

void collect_clause(const Formula& f, Clause& out) {
  switch (f.kind()) {
    case Formula::Kind::kFalse: return;
    case Formula::Kind::kOr:
      for (const auto& c : f.children()) collect_clause(c, out);
      return;
    case Formula::Kind::kAtom:
    case Formula::Kind::kNot: {
      bool positive = f.kind() == Formula::Kind::kAtom;
      const Formula& a = positive ? f : f.body();
      if (a.kind() == Formula::Kind::kAtom) {
        Fact fact{a.atom().relation, {}};
        bool ground = true;
        for (const auto& t : a.atom().terms) {
          if (const auto* v = std::get_if<Value>(&t)) fact.tuple.push_back(*v);
          else ground = false;
        }
        if (ground) {
          out.push_back({std::move(fact), positive});
          return;
        }
      }
      break;
    }
    default: break;
  }
  throw UnsupportedShapeError("query is not a quantifier-free CNF over ground atoms: " + f.to_string());
}

}  // namespace

Cnf to_cnf(const Query& q) {
  const auto& f = q.formula();
  Cnf out;
  if (f.kind() == Formula::Kind::kTrue) return out;
  if (f.kind() == Formula::Kind::kAnd) {
    for (const auto& c : f.children()) collect_clause(c, out.emplace_back());
  } else {
    collect_clause(f, out.emplace_back());
  }
  return out;
}

std::optional<Cnf> negate_cnf(const Cnf& cnf, std::size_t max_clauses) {
  // ¬∧_i ∨_j l_ij = ∨_i ∧_j ¬l_ij; distribute into one clause per choice of a literal from each clause.
  Cnf out{Clause{}};
  for (const auto& clause : cnf) {
    if (clause.empty()) return Cnf{};  // ¬FALSE = TRUE
    if (out.size() * clause.size() > max_clauses) return std::nullopt;
    Cnf next;
    for (const auto& partial : out) {
      for (const auto& lit : clause) {
        Clause c = partial;
        c.push_back({lit.fact, !lit.positive});
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

// Within X-cluster x, can the (X,Y)-cluster d be the choice of a preferred repair?
bool locally_preferred(const Priority& p, const ClusterIndex& idx, Family family, std::size_t x,
                       std::size_t d) {
  const auto& members = idx.xy_clusters[d];
  const auto& cluster = idx.x_clusters[x];
  switch (family) {
    case Family::kAll: return true;
    case Family::kCommon:
      // Some member of d is undominated in the whole X-cluster.
      return std::any_of(members.begin(), members.end(), [&](FactId f) {
        return std::none_of(cluster.begin(), cluster.end(),
                            [&](FactId g) { return p.prefers(g, f); });
      });
    case Family::kGlobal:
      // No other (X,Y)-cluster beats every member of d.
      for (auto other : idx.xy_in_x[x]) {
        if (other == d) continue;
        const auto& rival = idx.xy_clusters[other];
        bool covers = std::all_of(members.begin(), members.end(), [&](FactId f) {
          return std::any_of(rival.begin(), rival.end(), [&](FactId g) { return p.prefers(g, f); });
        });
        if (covers) return false;
      }
      return true;
    case Family::kPareto:
      // No single fact outside d beats every member of d.
      for (auto g : cluster) {
        if (idx.xy_of[g] == d) continue;
        if (std::all_of(members.begin(), members.end(), [&](FactId f) { return p.prefers(g, f); })) {
          return false;
        }
      }
      return true;
  }
  return false;
}

}  // namespace

ConjunctTest test_conjunct(const Context& ctx, const ClusterIndex& idx, Family family,
                           const Clause& clause) {
  const auto& hg = ctx.graph();
  const auto& p = ctx.priority();
  // The repair must contain the facts of negative literals and avoid those of positive ones.
  std::vector<FactId> required;
  std::set<std::size_t> forbidden_xy;
  for (const auto& lit : clause) {
    auto id = hg.instance().index_of(lit.fact);
    if (!lit.positive) {
      if (!id) return ConjunctTest::kMissingFact;
      required.push_back(*id);
    } else if (id) {
      forbidden_xy.insert(idx.xy_of[*id]);
    }
  }
  std::map<std::size_t, std::size_t> chosen;  // X-cluster -> required (X,Y)-cluster
  for (auto f : required) {
    auto [it, inserted] = chosen.emplace(idx.x_of[f], idx.xy_of[f]);
    if (!inserted && it->second != idx.xy_of[f]) return ConjunctTest::kRequiredConflict;
  }
  for (auto f : required) {
    if (forbidden_xy.count(idx.xy_of[f])) return ConjunctTest::kSharedCluster;
  }
  for (auto [x, d] : chosen) {
    if (!locally_preferred(p, idx, family, x, d)) return ConjunctTest::kNotPreferred;
  }
  std::set<std::size_t> open_x;
  for (auto d : forbidden_xy) {
    auto x = idx.x_of[idx.xy_clusters[d].front()];
    if (!chosen.count(x)) open_x.insert(x);
  }
  for (auto x : open_x) {
    const auto& options = idx.xy_in_x[x];
    bool ok = std::any_of(options.begin(), options.end(), [&](std::size_t d) {
      return !forbidden_xy.count(d) && locally_preferred(p, idx, family, x, d);
    });
    if (!ok) return ConjunctTest::kNoAlternative;
  }
  return ConjunctTest::kSatisfiable;
}

PcqaResult pcqa_single_fd(const Context& ctx, Family family, const Query& q,
                          std::size_t max_dual_clauses) {
  if (!q.is_cnf()) {
    throw UnsupportedShapeError("the tractable path needs a quantifier-free CNF query; use the generic evaluator");
  }
  auto idx = build_cluster_index(ctx);
  auto cnf = to_cnf(q);
  PcqaResult res;
  auto holds_everywhere = [&](const Cnf& c, std::vector<ConjunctTest>& tests) {
    bool all_fail = true;
    for (const auto& clause : c) {
      tests.push_back(test_conjunct(ctx, idx, family, clause));
      if (tests.back() == ConjunctTest::kSatisfiable) all_fail = false;
    }
    return all_fail;
  };
  if (holds_everywhere(cnf, res.tests)) {
    res.verdict = Verdict::kTrue;
    return res;
  }
  auto dual = negate_cnf(cnf, max_dual_clauses);
  if (!dual) {
    res.warnings.push_back("negated query too large for CNF conversion; used the generic evaluator");
    auto generic = pcqa_generic(ctx, family, q);
    generic.tests = std::move(res.tests);
    generic.used_fallback = true;
    generic.warnings = std::move(res.warnings);
    return generic;
  }
  res.verdict = holds_everywhere(*dual, res.dual_tests) ? Verdict::kFalse : Verdict::kUndetermined;
  return res;
}

}  // namespace prefrep
