#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prefrep/constraint.hpp"
#include "prefrep/model.hpp"
#include "prefrep/query.hpp"

namespace prefrep {

/// Instance file: a schema block followed by one fact per line.
///
///   schema {
///     Emp(Name: constant, Salary: rational, Dept: constant)
///   }
///   Emp(John, 80000, IT)
///
/// Numbers (integer, decimal, p/q) are rationals; bare identifiers and quoted
/// strings are constants. '#' starts a comment.
struct InstanceFile {
  Schema schema;
  Instance instance;
};
InstanceFile parse_instance_file(std::string_view text);

/// Constraint file: `FD Rel: A, B -> C;` and
/// `DENIAL [Rel1(x, y), Rel2(x, z)] WHERE y > z AND NOT (x = z);`.
/// In atoms and guards bare identifiers are variables and constants are quoted.
ConstraintSet parse_constraints(std::string_view text, const Schema& schema);

/// Priority file: `Fact > Fact` per line, facts written as in instance files.
std::vector<std::pair<Fact, Fact>> parse_priority(std::string_view text, const Schema& schema);

/// A formula in the query language: EXISTS/FORALL x, y . body; NOT, AND, OR,
/// parentheses, TRUE, FALSE, atoms and comparisons (= != < <= > >=).
Formula parse_formula(std::string_view text);

/// Query file: `name: formula;` entries.
std::vector<std::pair<std::string, Query>> parse_queries(std::string_view text, const Schema& schema);

std::string write_instance_file(const Schema& schema, const Instance& instance);
std::string write_constraints(const ConstraintSet& cs);
std::string write_priority(const std::vector<std::pair<Fact, Fact>>& pairs);
std::string write_queries(const std::vector<std::pair<std::string, Query>>& queries);

}  // namespace prefrep
