#pragma once

#include <map>
#include <string>
#include <vector>

#include "prefrep/formula.hpp"
#include "prefrep/model.hpp"

namespace prefrep {

/// ∀x̄. ¬[R_1(x̄_1) ∧ … ∧ R_n(x̄_n) ∧ guard]
struct DenialConstraint {
  std::vector<Atom> atoms;
  Formula guard;

  std::string to_string() const;
  friend bool operator==(const DenialConstraint&, const DenialConstraint&) = default;
};

/// R: X -> Y
struct FunctionalDependency {
  std::string relation;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;

  std::string to_string() const;
  friend bool operator==(const FunctionalDependency&, const FunctionalDependency&) = default;
};

/// Checks that the constraint has at least one atom, an atom-free quantifier-free
/// guard whose variables all occur in the atoms, and consistent typing.
/// Returns the inferred variable domains. Throws SchemaError.
std::map<std::string, Domain> check_constraint(const Schema& schema, const DenialConstraint& dc);

/// Two atoms over the relation; attribute i is bound to `v<i>` when in X and to
/// `v<i>_1` / `v<i>_2` otherwise. Guard: NOT (v<j>_1 = v<j>_2 AND ...) over Y \ X.
DenialConstraint desugar_fd(const FunctionalDependency& fd, const Schema& schema);

/// Positions of the FD's left- and right-hand attributes.
struct FdPositions {
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;
};
FdPositions fd_positions(const FunctionalDependency& fd, const Schema& schema);

/// The constraint set F as written: FDs kept apart so shape-specific algorithms can see them.
struct ConstraintSet {
  std::vector<FunctionalDependency> fds;
  std::vector<DenialConstraint> denials;

  bool empty() const { return fds.empty() && denials.empty(); }
  /// FDs desugared (in order) followed by the denial constraints. Validates everything.
  std::vector<DenialConstraint> all(const Schema& schema) const;
  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

}  // namespace prefrep
