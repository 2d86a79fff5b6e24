#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefrep/families.hpp"
#include "prefrep/query.hpp"

namespace prefrep {

enum class Verdict { kTrue, kFalse, kUndetermined };

std::string_view to_string(Verdict v);

/// Outcome of the per-conjunct test "does a preferred repair falsify this clause?"
enum class ConjunctTest {
  kSatisfiable,      // some preferred repair falsifies the clause
  kMissingFact,      // a fact the repair would have to contain is not in the instance
  kRequiredConflict, // the facts the repair would have to contain conflict
  kSharedCluster,    // a required fact shares its (X,Y)-cluster with a forbidden one
  kNotPreferred,     // a required (X,Y)-cluster is never chosen by a preferred repair
  kNoAlternative,    // every preferred choice in some X-cluster hits a forbidden fact
};

std::string_view to_string(ConjunctTest t);

struct PcqaResult {
  Verdict verdict = Verdict::kUndetermined;
  /// Preferred repairs where the query holds / fails (generic evaluator only).
  std::optional<Instance> true_witness;
  std::optional<Instance> false_witness;
  std::size_t preferred_count = 0;
  /// Per-clause outcomes of the tractable path, for q and (when run) for ¬q.
  std::vector<ConjunctTest> tests;
  std::vector<ConjunctTest> dual_tests;
  bool used_fallback = false;
  std::vector<std::string> warnings;
};

/// Evaluates q on every preferred repair.
PcqaResult pcqa_generic(const Context& ctx, Family family, const Query& q,
                        std::size_t cap = kDefaultRepairCap);

/// X-clusters and (X,Y)-clusters of one relation under one FD.
/// Facts of other relations map to kNone.
struct ClusterIndex {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> x_of;
  std::vector<std::size_t> xy_of;
  std::vector<std::vector<FactId>> x_clusters;
  std::vector<std::vector<FactId>> xy_clusters;
  /// (X,Y)-cluster ids of each X-cluster.
  std::vector<std::vector<std::size_t>> xy_in_x;
};

ClusterIndex build_cluster_index(const Instance& instance, const FunctionalDependency& fd,
                                 const Schema& schema);

/// Cluster index over the whole instance: relations with an FD are clustered
/// by it, facts of other relations form singleton clusters. Throws
/// UnsupportedShapeError unless the constraints are at most one FD per relation.
ClusterIndex build_cluster_index(const Context& ctx);

/// A ground literal.
struct Literal {
  Fact fact;
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};
using Clause = std::vector<Literal>;
using Cnf = std::vector<Clause>;

/// Reads a quantifier-free CNF query. Throws UnsupportedShapeError otherwise.
Cnf to_cnf(const Query& q);
/// CNF of ¬(cnf) by distribution; nullopt when it would exceed `max_clauses`.
std::optional<Cnf> negate_cnf(const Cnf& cnf, std::size_t max_clauses);

/// Does a preferred repair of the family falsify `clause`?
ConjunctTest test_conjunct(const Context& ctx, const ClusterIndex& idx, Family family,
                           const Clause& clause);

inline constexpr std::size_t kMaxDualClauses = 4096;

/// Tractable evaluation for at most one FD per relation and quantifier-free CNF
/// queries. FALSE comes from the same test on ¬q; if ¬q's CNF exceeds
/// `max_dual_clauses` the generic evaluator is used and a warning recorded.
PcqaResult pcqa_single_fd(const Context& ctx, Family family, const Query& q,
                          std::size_t max_dual_clauses = kMaxDualClauses);

}  // namespace prefrep
