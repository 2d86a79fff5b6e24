#pragma once

#include <map>
#include <string>

#include "prefrep/formula.hpp"
#include "prefrep/model.hpp"

namespace prefrep {

/// A closed, well-typed query formula.
class Query {
 public:
  /// Throws SchemaError on free variables, unknown relations, arity or typing errors,
  /// or a variable bound twice.
  static Query make(const Schema& schema, Formula f);

  const Formula& formula() const { return formula_; }
  const std::map<std::string, Domain>& domains() const { return domains_; }

  bool is_atomic() const { return formula_.kind() == Formula::Kind::kAtom; }
  bool is_quantifier_free() const { return formula_.is_quantifier_free(); }
  /// ∃* over a conjunction of atoms and comparisons.
  bool is_conjunctive() const;
  /// Quantifier-free conjunction of disjunctions of (negated) ground atoms.
  bool is_cnf() const;

  std::string to_string() const { return formula_.to_string(); }
  friend bool operator==(const Query& a, const Query& b) { return a.formula_ == b.formula_; }

 private:
  Formula formula_;
  std::map<std::string, Domain> domains_;
};

/// Model-theoretic truth; quantifiers range over the active domain of the
/// instance plus the query's literals, restricted to the variable's domain.
bool eval_query(const Instance& instance, const Query& query);

}  // namespace prefrep
