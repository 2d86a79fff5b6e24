#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "prefrep/model.hpp"
#include "prefrep/value.hpp"

namespace prefrep {

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// A term is a variable or a literal value.
using Term = std::variant<Variable, Value>;

std::string to_string(const Term& t);

/// Relational atom pattern R(t1, ..., tk).
struct Atom {
  std::string relation;
  std::vector<Term> terms;

  std::string to_string() const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Variable bindings used during evaluation.
using Binding = std::map<std::string, Value>;

/// Immutable first-order formula over relational atoms and built-in comparisons.
///
/// Used both for denial-constraint guards (quantifier-free, atom-free) and
/// for closed queries. Copies share structure.
class Formula {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kCompare, kNot, kAnd, kOr, kExists, kForall };

  Formula();  // TRUE

  static Formula truth(bool value);
  static Formula atom(Atom a);
  static Formula compare(Term lhs, CmpOp op, Term rhs);
  static Formula negation(Formula f);
  /// Empty list yields TRUE, a single element yields that element.
  static Formula conjunction(std::vector<Formula> children);
  /// Empty list yields FALSE, a single element yields that element.
  static Formula disjunction(std::vector<Formula> children);
  static Formula exists(std::vector<std::string> vars, Formula body);
  static Formula forall(std::vector<std::string> vars, Formula body);

  Kind kind() const;
  const Atom& atom() const;
  CmpOp op() const;
  const Term& lhs() const;
  const Term& rhs() const;
  /// Children of NOT (one), AND/OR (any), EXISTS/FORALL (one: the body).
  std::span<const Formula> children() const;
  const Formula& body() const;
  const std::vector<std::string>& variables() const;

  std::set<std::string> free_variables() const;
  bool is_quantifier_free() const;
  bool mentions_atoms() const;
  /// Literal values occurring anywhere in the formula.
  std::vector<Value> literals() const;

  /// Text in the query DSL; parses back to a structurally equal formula.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Evaluates an atom-free, quantifier-free formula. Every variable must be bound.
/// Throws TypeError on ill-typed comparisons, ArgumentError on unbound variables.
bool eval_builtin(const Formula& f, const Binding& binding);

/// Kleene evaluation of an atom-free, quantifier-free formula under a partial
/// binding; nullopt when the outcome depends on unbound variables.
std::optional<bool> eval_builtin_partial(const Formula& f, const Binding& binding);

/// Infers the domain of every variable from its positions in `atoms` and in
/// relational atoms of `f`, then from comparisons against typed terms.
/// Checks relation names and arities, comparison typing (order comparisons on
/// rationals only), and that every variable gets a domain. Throws SchemaError.
std::map<std::string, Domain> infer_domains(const Schema& schema, std::span<const Atom> atoms,
                                            const Formula& f);

}  // namespace prefrep
