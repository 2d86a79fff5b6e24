#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "prefrep/error.hpp"
#include "prefrep/families.hpp"
#include "prefrep/generators.hpp"
#include "prefrep/io.hpp"

namespace prefrep::support {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& file) {
  return std::string(PREFREP_FIXTURE_DIR) + "/" + file;
}

/// Loads <name>.facts, <name>.constraints and, if asked, <name>.priority.
inline Context load_fixture(const std::string& name, bool with_priority = true) {
  auto file = parse_instance_file(read_file(fixture_path(name + ".facts")));
  auto cs = parse_constraints(read_file(fixture_path(name + ".constraints")), file.schema);
  std::vector<std::pair<Fact, Fact>> pairs;
  if (with_priority) pairs = parse_priority(read_file(fixture_path(name + ".priority")), file.schema);
  return Context::make(file.schema, file.instance, cs, pairs);
}

inline Query load_query(const Context& ctx, const std::string& name, const std::string& id) {
  for (auto& [n, q] : parse_queries(read_file(fixture_path(name + ".queries")), ctx.schema())) {
    if (n == id) return q;
  }
  throw std::runtime_error("no query " + id);
}

/// Parses facts written as in instance files against the context's schema.
inline Instance facts(const Schema& schema, std::initializer_list<const char*> lines) {
  std::string text = write_instance_file(schema, Instance{});
  for (const auto* l : lines) text += std::string(l) + "\n";
  return parse_instance_file(text).instance;
}

inline FactSet fact_set(const Context& ctx, std::initializer_list<const char*> lines) {
  return ctx.graph().to_set(facts(ctx.schema(), lines));
}

inline std::vector<Instance> sorted(std::vector<Instance> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace prefrep::support

#include <random>

namespace prefrep::support {

/// Orients each unordered neighbor pair with probability `density` in a random
/// direction, skipping orientations that would close a cycle.
inline Priority random_extension(const Priority& p, std::mt19937_64& rng, double density) {
  Priority out = p;
  auto pairs = unordered_pairs(p);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution take(density), flip(0.5);
  for (auto [a, b] : pairs) {
    if (!take(rng)) continue;
    if (flip(rng)) std::swap(a, b);
    if (out.reaches(b, a)) std::swap(a, b);
    if (!out.reaches(b, a)) out.add_unchecked(a, b);
  }
  return out;
}

/// The seeded corpus: shapes round-robin, 4 to 12 facts.
inline RandomProfile corpus_profile(std::uint64_t seed) {
  static constexpr RandomShape shapes[] = {RandomShape::kSingleKey, RandomShape::kSingleFd,
                                           RandomShape::kMultiFd, RandomShape::kDenialMixed};
  RandomProfile p;
  p.shape = shapes[seed % 4];
  p.facts = 4 + seed * 7 % 9;
  p.density = 0.2 + 0.15 * static_cast<double>(seed % 5);
  return p;
}

}  // namespace prefrep::support

namespace prefrep::support {

/// Random quantifier-free CNF over facts mostly drawn from the instance.
inline Query random_cnf_query(const Context& ctx, std::mt19937_64& rng, int value_range = 3) {
  std::uniform_int_distribution<int> nclauses(1, 3), nlits(1, 3), val(0, value_range - 1);
  std::uniform_int_distribution<std::size_t> pick(0, ctx.instance().size() - 1);
  std::bernoulli_distribution present(0.8), positive(0.5);
  std::vector<Formula> clauses;
  for (int c = nclauses(rng); c > 0; --c) {
    std::vector<Formula> lits;
    for (int l = nlits(rng); l > 0; --l) {
      Fact f;
      if (!ctx.instance().empty() && present(rng)) {
        f = ctx.instance()[pick(rng)];
      } else {
        const auto& rel = ctx.schema().relations().begin()->second;
        f.relation = rel.name;
        for (std::size_t i = 0; i < rel.arity(); ++i) f.tuple.emplace_back(static_cast<long long>(val(rng)));
      }
      Atom a{f.relation, {}};
      for (const auto& v : f.tuple) a.terms.emplace_back(v);
      auto lit = Formula::atom(a);
      lits.push_back(positive(rng) ? lit : Formula::negation(lit));
    }
    clauses.push_back(lits.size() == 1 ? lits[0] : Formula::disjunction(lits));
  }
  return Query::make(ctx.schema(), clauses.size() == 1 ? clauses[0] : Formula::conjunction(clauses));
}

}  // namespace prefrep::support
