#include "prefrep/model.hpp"

#include <algorithm>
#include <set>

#include "prefrep/error.hpp"

namespace prefrep {

std::size_t RelationSchema::position(const std::string& attribute) const {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == attribute) return i;
  }
  throw SchemaError("relation " + name + " has no attribute " + attribute);
}

void Schema::add_relation(RelationSchema relation) {
  if (relation.attributes.empty()) {
    throw SchemaError("relation " + relation.name + " must have arity greater than 0");
  }
  if (relations_.count(relation.name)) {
    throw SchemaError("relation " + relation.name + " declared twice");
  }
  std::set<std::string> seen;
  for (const auto& a : relation.attributes) {
    if (!seen.insert(a.name).second) {
      throw SchemaError("attribute " + a.name + " repeated in relation " + relation.name);
    }
  }
  auto name = relation.name;
  relations_.emplace(std::move(name), std::move(relation));
}

const RelationSchema* Schema::find(const std::string& name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

const RelationSchema& Schema::at(const std::string& name) const {
  if (const auto* r = find(name)) return *r;
  throw SchemaError("unknown relation " + name);
}

std::string Fact::to_string() const {
  std::string out = relation + "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ", ";
    out += tuple[i].to_string();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Fact& a, const Fact& b) {
  if (auto c = a.relation <=> b.relation; c != 0) return c;
  return std::lexicographical_compare_three_way(a.tuple.begin(), a.tuple.end(), b.tuple.begin(),
                                                b.tuple.end());
}

void check_fact(const Schema& schema, const Fact& fact) {
  const auto* rel = schema.find(fact.relation);
  if (!rel) throw SchemaError("unknown relation in fact " + fact.to_string());
  if (rel->arity() != fact.tuple.size()) {
    throw SchemaError("fact " + fact.to_string() + " has arity " + std::to_string(fact.tuple.size()) +
                      ", relation " + rel->name + " expects " + std::to_string(rel->arity()));
  }
  for (std::size_t i = 0; i < fact.tuple.size(); ++i) {
    if (fact.tuple[i].domain() != rel->attributes[i].domain) {
      throw SchemaError("fact " + fact.to_string() + ": attribute " + rel->attributes[i].name +
                        " expects a " + std::string(to_string(rel->attributes[i].domain)));
    }
  }
}

Instance::Instance(std::vector<Fact> facts) : facts_(std::move(facts)) {
  std::sort(facts_.begin(), facts_.end());
  facts_.erase(std::unique(facts_.begin(), facts_.end()), facts_.end());
}

std::optional<std::size_t> Instance::index_of(const Fact& f) const {
  auto it = std::lower_bound(facts_.begin(), facts_.end(), f);
  if (it == facts_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - facts_.begin());
}

bool Instance::is_subset_of(const Instance& other) const {
  return std::includes(other.facts_.begin(), other.facts_.end(), facts_.begin(), facts_.end());
}

void check_instance(const Schema& schema, const Instance& instance) {
  for (const auto& f : instance) check_fact(schema, f);
}

std::vector<Value> active_domain(const Instance& instance) {
  std::set<Value> values;
  for (const auto& f : instance) values.insert(f.tuple.begin(), f.tuple.end());
  return {values.begin(), values.end()};
}

}  // namespace prefrep
