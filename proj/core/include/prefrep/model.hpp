#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prefrep/value.hpp"

namespace prefrep {

struct Attribute {
  std::string name;
  Domain domain = Domain::kRational;
  bool operator==(const Attribute&) const = default;
};

struct RelationSchema {
  std::string name;
  std::vector<Attribute> attributes;

  std::size_t arity() const { return attributes.size(); }
  /// Position of the named attribute; throws SchemaError when absent.
  std::size_t position(const std::string& attribute) const;
  bool operator==(const RelationSchema&) const = default;
};

/// Relation names with typed attribute lists. Arity >= 1, attribute names unique.
class Schema {
 public:
  /// Throws SchemaError on a duplicate relation, zero arity or repeated attribute.
  void add_relation(RelationSchema relation);

  const RelationSchema* find(const std::string& name) const;
  const RelationSchema& at(const std::string& name) const;
  const std::map<std::string, RelationSchema>& relations() const { return relations_; }
  bool empty() const { return relations_.empty(); }

  bool operator==(const Schema&) const = default;

 private:
  std::map<std::string, RelationSchema> relations_;
};

/// A ground relational atom. Ordered by relation name, then tuple.
struct Fact {
  std::string relation;
  std::vector<Value> tuple;

  std::string to_string() const;

  friend bool operator==(const Fact&, const Fact&) = default;
  friend std::strong_ordering operator<=>(const Fact& a, const Fact& b);
};

/// Throws SchemaError unless `fact` names a known relation with matching arity and domains.
void check_fact(const Schema& schema, const Fact& fact);

/// A finite set of facts kept in canonical order; fact positions serve as ids.
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::vector<Fact> facts);
  Instance(std::initializer_list<Fact> facts) : Instance(std::vector<Fact>(facts)) {}

  std::span<const Fact> facts() const { return facts_; }
  std::size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }
  const Fact& operator[](std::size_t i) const { return facts_[i]; }

  bool contains(const Fact& f) const { return index_of(f).has_value(); }
  std::optional<std::size_t> index_of(const Fact& f) const;
  bool is_subset_of(const Instance& other) const;

  auto begin() const { return facts_.begin(); }
  auto end() const { return facts_.end(); }

  bool operator==(const Instance&) const = default;
  friend auto operator<=>(const Instance& a, const Instance& b) { return a.facts_ <=> b.facts_; }

 private:
  std::vector<Fact> facts_;
};

/// Throws SchemaError on the first ill-typed fact.
void check_instance(const Schema& schema, const Instance& instance);

/// Every value occurring in the instance.
std::vector<Value> active_domain(const Instance& instance);

}  // namespace prefrep
