#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefrep/families.hpp"
#include "prefrep/query.hpp"

namespace prefrep {

/// Clauses of signed 1-based variable indices.
struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;

  /// Throws ArgumentError on empty clauses, repeated literals or out-of-range variables.
  void validate() const;
  std::string to_string() const;
};

/// ∀x_1..x_n ∃x_{n+1}..x_{n+m}. matrix, with a 3CNF matrix over n+m variables.
struct QbfFormula {
  int universal = 0;
  int existential = 0;
  CnfFormula matrix;

  void validate() const;
  std::string to_string() const;
};

/// A generated context with the data needed to check it.
struct Generated {
  Context ctx;
  std::optional<Query> query;
  /// Documented chain of repairs (counter instance only), most preferred first.
  std::vector<Instance> chain;
  /// Human-readable source of the instance, e.g. the encoded formula.
  std::string provenance;
};

/// n-bit binary counter: R(A,B), facts R(i,0), R(i,1) for i < n and R(i,2) for
/// i < n-1, the FD A -> B plus the two carry constraints, and the ≫_G chain
/// I'_{2^n-1}, I'_{2^n-2}, I'_{2^n-3,c}, ..., I'_1, I'_0.
Generated counter_instance(int n);

/// Reduction from the complement of SAT: PCQA of ¬b is TRUE iff f is unsatisfiable.
Generated sat_reduction(const CnfFormula& f);

/// Reduction from ∀*∃*3QBF: PCQA(GLOBAL, p_∃) is TRUE iff f is valid.
Generated qbf_reduction(const QbfFormula& f);

enum class RandomShape { kSingleKey, kSingleFd, kMultiFd, kDenialMixed };

std::string_view to_string(RandomShape s);
RandomShape parse_shape(std::string_view text);

struct RandomProfile {
  std::size_t facts = 8;
  RandomShape shape = RandomShape::kSingleFd;
  /// Probability of orienting a neighbor pair.
  double density = 0.5;
  /// Further pairs get oriented until at most this many neighbor pairs remain unordered.
  std::size_t max_unordered = 8;
  /// Values are drawn from 0..value_range-1.
  int value_range = 3;
};

/// Reproducible random context.
Generated random_ctx(std::uint64_t seed, const RandomProfile& profile);

/// Random priority over the context's hypergraph with the given orientation density.
Priority random_priority(std::shared_ptr<const ConflictHypergraph> hg, std::uint64_t seed,
                         double density, std::size_t max_unordered = static_cast<std::size_t>(-1));

/// DIMACS CNF ("c" comments, "p cnf V C" header, 0-terminated clauses).
CnfFormula parse_dimacs(std::string_view text);
/// DIMACS CNF preceded by a "u N" line giving the number of leading universal variables.
QbfFormula parse_qbf(std::string_view text);
std::string to_dimacs(const CnfFormula& f);
std::string to_dimacs(const QbfFormula& f);

}  // namespace prefrep
