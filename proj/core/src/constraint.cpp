#include "prefrep/constraint.hpp"

#include <algorithm>

#include "prefrep/error.hpp"

namespace prefrep {

std::string DenialConstraint::to_string() const {
  std::string out = "DENIAL [";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += atoms[i].to_string();
  }
  out += "]";
  if (guard.kind() != Formula::Kind::kTrue) out += " WHERE " + guard.to_string();
  return out + ";";
}

std::string FunctionalDependency::to_string() const {
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
    return s;
  };
  return "FD " + relation + ": " + join(lhs) + " -> " + join(rhs) + ";";
}

std::map<std::string, Domain> check_constraint(const Schema& schema, const DenialConstraint& dc) {
  if (dc.atoms.empty()) throw SchemaError("denial constraint needs at least one atom");
  if (dc.guard.mentions_atoms() || !dc.guard.is_quantifier_free()) {
    throw SchemaError("denial constraint guard must be built-in only: " + dc.guard.to_string());
  }
  std::set<std::string> atom_vars;
  for (const auto& a : dc.atoms) {
    for (const auto& t : a.terms) {
      if (const auto* v = std::get_if<Variable>(&t)) atom_vars.insert(v->name);
    }
  }
  for (const auto& v : dc.guard.free_variables()) {
    if (!atom_vars.count(v)) {
      throw SchemaError("guard variable " + v + " does not occur in any atom of " + dc.to_string());
    }
  }
  return infer_domains(schema, dc.atoms, dc.guard);
}

FdPositions fd_positions(const FunctionalDependency& fd, const Schema& schema) {
  const auto& rel = schema.at(fd.relation);
  FdPositions out;
  for (const auto& a : fd.lhs) out.lhs.push_back(rel.position(a));
  for (const auto& a : fd.rhs) out.rhs.push_back(rel.position(a));
  return out;
}

DenialConstraint desugar_fd(const FunctionalDependency& fd, const Schema& schema) {
  const auto& rel = schema.at(fd.relation);
  auto pos = fd_positions(fd, schema);
  auto in_lhs = [&](std::size_t i) {
    return std::find(pos.lhs.begin(), pos.lhs.end(), i) != pos.lhs.end();
  };
  Atom a1{rel.name, {}}, a2{rel.name, {}};
  for (std::size_t i = 0; i < rel.arity(); ++i) {
    auto base = "v" + std::to_string(i);
    if (in_lhs(i)) {
      a1.terms.emplace_back(Variable{base});
      a2.terms.emplace_back(Variable{base});
    } else {
      a1.terms.emplace_back(Variable{base + "_1"});
      a2.terms.emplace_back(Variable{base + "_2"});
    }
  }
  std::vector<std::size_t> rhs;
  for (auto i : pos.rhs) {
    if (!in_lhs(i) && std::find(rhs.begin(), rhs.end(), i) == rhs.end()) rhs.push_back(i);
  }
  std::sort(rhs.begin(), rhs.end());
  std::vector<Formula> eqs;
  for (auto i : rhs) {
    auto base = "v" + std::to_string(i);
    eqs.push_back(Formula::compare(Variable{base + "_1"}, CmpOp::kEq, Variable{base + "_2"}));
  }
  return DenialConstraint{{std::move(a1), std::move(a2)},
                          Formula::negation(Formula::conjunction(std::move(eqs)))};
}

std::vector<DenialConstraint> ConstraintSet::all(const Schema& schema) const {
  std::vector<DenialConstraint> out;
  for (const auto& fd : fds) out.push_back(desugar_fd(fd, schema));
  for (const auto& dc : denials) {
    check_constraint(schema, dc);
    out.push_back(dc);
  }
  return out;
}

}  // namespace prefrep
