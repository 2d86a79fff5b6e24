#include "prefrep/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>

#include "prefrep/error.hpp"

namespace prefrep {

namespace {

void validate_cnf(const CnfFormula& f, bool allow_repeats) {
  if (f.variables < 0) throw ArgumentError("negative variable count");
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    if (clause.empty()) throw ArgumentError("clause " + std::to_string(c + 1) + " is empty");
    std::set<int> seen;
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.variables) {
        throw ArgumentError("clause " + std::to_string(c + 1) + " uses an unknown variable");
      }
      if (!seen.insert(lit).second && !allow_repeats) {
        throw ArgumentError("clause " + std::to_string(c + 1) + " repeats a literal");
      }
    }
  }
}

std::string literal_text(int lit) {
  return (lit < 0 ? "~x" : "x") + std::to_string(std::abs(lit));
}

std::string clauses_text(const std::vector<std::vector<int>>& clauses) {
  std::string out;
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (c) out += " & ";
    out += "(";
    for (std::size_t i = 0; i < clauses[c].size(); ++i) {
      if (i) out += " | ";
      out += literal_text(clauses[c][i]);
    }
    out += ")";
  }
  return out.empty() ? "true" : out;
}

Fact fact(const std::string& rel, std::initializer_list<long long> values) {
  Fact f{rel, {}};
  for (auto v : values) f.tuple.emplace_back(v);
  return f;
}

Schema rational_schema(const std::string& rel, std::initializer_list<const char*> attrs) {
  RelationSchema r{rel, {}};
  for (const auto* a : attrs) r.attributes.push_back({a, Domain::kRational});
  Schema s;
  s.add_relation(std::move(r));
  return s;
}

Atom atom(const std::string& rel, std::vector<Term> terms) { return Atom{rel, std::move(terms)}; }
Term var(const char* name) { return Variable{name}; }
Term lit(long long v) { return Value(v); }

}  // namespace

void CnfFormula::validate() const { validate_cnf(*this, false); }

std::string CnfFormula::to_string() const { return clauses_text(clauses); }

void QbfFormula::validate() const {
  if (universal < 0 || existential < 0) throw ArgumentError("negative variable count");
  if (matrix.variables != universal + existential) {
    throw ArgumentError("matrix must range over exactly the quantified variables");
  }
  validate_cnf(matrix, true);
  for (std::size_t c = 0; c < matrix.clauses.size(); ++c) {
    if (matrix.clauses[c].size() != 3) {
      throw ArgumentError("clause " + std::to_string(c + 1) + " does not have exactly 3 literals");
    }
  }
}

std::string QbfFormula::to_string() const {
  std::string out;
  if (universal > 0) {
    out += "forall";
    for (int i = 1; i <= universal; ++i) out += " x" + std::to_string(i);
    out += " . ";
  }
  if (existential > 0) {
    out += "exists";
    for (int i = universal + 1; i <= universal + existential; ++i) out += " x" + std::to_string(i);
    out += " . ";
  }
  return out + clauses_text(matrix.clauses);
}

Generated counter_instance(int n) {
  if (n < 1) throw ArgumentError("counter needs at least one bit");
  const std::string R = "R";
  auto p0 = [&](int i) { return fact(R, {i, 0}); };
  auto p1 = [&](int i) { return fact(R, {i, 1}); };
  auto pc = [&](int i) { return fact(R, {i, 2}); };

  std::vector<Fact> facts;
  for (int i = 0; i < n; ++i) {
    facts.push_back(p0(i));
    facts.push_back(p1(i));
    if (i < n - 1) facts.push_back(pc(i));
  }
  ConstraintSet cs;
  cs.fds.push_back({R, {"A"}, {"B"}});
  // A carry at bit i resets every lower bit.
  cs.denials.push_back({{atom(R, {var("i"), lit(2)}), atom(R, {var("j"), lit(1)})},
                        Formula::compare(var("i"), CmpOp::kGt, var("j"))});
  // A bit is carried only into a zero bit; the guard language has no arithmetic,
  // so the successor relation is spelled out per bit.
  for (int i = 1; i < n; ++i) {
    cs.denials.push_back({{atom(R, {lit(i), lit(1)}), atom(R, {lit(i - 1), lit(2)})}, Formula()});
  }

  std::vector<std::pair<Fact, Fact>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(p1(i), p0(i));
  for (int i = 1; i < n; ++i) pairs.emplace_back(p1(i), pc(i - 1));
  for (int i = 0; i <= n - 2; ++i) {
    for (int j = 0; j <= i; ++j) pairs.emplace_back(pc(i), p1(j));
  }

  Generated g{Context::make(rational_schema(R, {"A", "B"}), Instance(facts), cs, pairs), std::nullopt,
              {}, "counter n=" + std::to_string(n)};

  auto number = [&](long long value) {
    std::vector<Fact> r;
    for (int j = 0; j < n; ++j) r.push_back((value >> j) & 1 ? p1(j) : p0(j));
    return Instance(r);
  };
  auto carried = [&](long long value) {
    int low = 0;
    while ((value >> low) & 1) ++low;
    std::vector<Fact> r;
    for (int j = 0; j + 2 <= low; ++j) r.push_back(p0(j));
    r.push_back(pc(low - 1));
    for (int j = low; j < n; ++j) r.push_back((value >> j) & 1 ? p1(j) : p0(j));
    return Instance(r);
  };
  const long long top = (1LL << n) - 1;
  std::vector<Instance> ascending;
  for (long long v = 0; v <= top; ++v) {
    ascending.push_back(number(v));
    if (v % 2 == 1 && v <= top - 2) ascending.push_back(carried(v));
  }
  g.chain.assign(ascending.rbegin(), ascending.rend());
  return g;
}

Generated sat_reduction(const CnfFormula& f) {
  f.validate();
  const std::string R = "R";
  const long long n = f.variables;
  auto w = [&](long long i) { return fact(R, {i, 1, i, 1}); };
  auto wbar = [&](long long i) { return fact(R, {i, -1, -i, 1}); };
  auto d = [&](long long j) { return fact(R, {n + j, 1, 0, 1}); };
  auto v = [&](long long i, long long j) { return fact(R, {n + j, 0, -i, 0}); };
  auto vbar = [&](long long i, long long j) { return fact(R, {n + j, 0, i, 0}); };
  const Fact b = fact(R, {0, 0, 0, 0});

  std::vector<Fact> facts{b};
  std::vector<std::pair<Fact, Fact>> pairs;
  for (long long i = 1; i <= n; ++i) {
    facts.push_back(w(i));
    facts.push_back(wbar(i));
  }
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const long long j = static_cast<long long>(c) + 1;
    facts.push_back(d(j));
    pairs.emplace_back(d(j), b);
    for (int l : f.clauses[c]) {
      const long long i = std::abs(l);
      if (l > 0) {
        facts.push_back(v(i, j));
        pairs.emplace_back(wbar(i), v(i, j));
        pairs.emplace_back(v(i, j), d(j));
      } else {
        facts.push_back(vbar(i, j));
        pairs.emplace_back(w(i), vbar(i, j));
        pairs.emplace_back(vbar(i, j), d(j));
      }
    }
  }
  ConstraintSet cs;
  cs.fds.push_back({R, {"A1"}, {"B1"}});
  cs.fds.push_back({R, {"A2"}, {"B2"}});
  auto schema = rational_schema(R, {"A1", "B1", "A2", "B2"});
  Generated g{Context::make(schema, Instance(facts), cs, pairs), std::nullopt, {},
              "sat reduction of " + f.to_string()};
  g.query = Query::make(schema, Formula::negation(Formula::atom(atom(R, {lit(0), lit(0), lit(0), lit(0)}))));
  return g;
}

Generated qbf_reduction(const QbfFormula& f) {
  f.validate();
  const std::string R = "R";
  const int total = f.universal + f.existential;
  auto q = [&](long long i) { return i <= f.universal ? 1LL : 0LL; };
  auto v = [&](long long i) { return fact(R, {0, q(i), i, 1, i, 1, i, 1}); };
  auto vbar = [&](long long i) { return fact(R, {0, q(i), i, -1, i, -1, i, -1}); };
  // A clause fact conflicts with the valuation facts of its universal literals
  // through the literal's column, and with every existential valuation fact
  // through A1 -> B1. Existential literal columns get a value used nowhere
  // else, so two clause facts never clash on an existential variable.
  long long fresh = 0;
  auto d = [&](const std::vector<int>& c) {
    Fact r{R, {Value(0LL), Value(1LL)}};
    for (std::size_t p = 0; p < c.size(); ++p) {
      const int l = c[p];
      // A repeated literal needs no column of its own; giving it one could make
      // the clause fact coincide with a valuation fact.
      const bool repeat = std::find(c.begin(), c.begin() + p, l) != c.begin() + p;
      if (std::abs(l) <= f.universal && !repeat) {
        r.tuple.emplace_back(static_cast<long long>(std::abs(l)));
        r.tuple.emplace_back(l > 0 ? -1LL : 1LL);
      } else {
        r.tuple.emplace_back(--fresh);
        r.tuple.emplace_back(0LL);
      }
    }
    return r;
  };
  const Fact p_exists = fact(R, {0, 0, 0, 0, 0, 0, 0, 0});
  const Fact p_forall = fact(R, {0, 1, 0, 0, 0, 0, 0, 0});

  std::vector<Fact> facts{p_exists, p_forall};
  std::vector<std::pair<Fact, Fact>> pairs{{p_exists, p_forall}};
  for (long long i = 1; i <= total; ++i) {
    facts.push_back(v(i));
    facts.push_back(vbar(i));
    if (i <= f.universal) {
      pairs.emplace_back(p_exists, v(i));
      pairs.emplace_back(p_exists, vbar(i));
    }
  }
  for (const auto& c : f.matrix.clauses) {
    auto dk = d(c);
    facts.push_back(dk);
    for (int l : c) pairs.emplace_back(l > 0 ? v(std::abs(l)) : vbar(std::abs(l)), dk);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  ConstraintSet cs;
  for (int k = 1; k <= 4; ++k) {
    cs.fds.push_back({R, {"A" + std::to_string(k)}, {"B" + std::to_string(k)}});
  }
  auto schema = rational_schema(R, {"A1", "B1", "A2", "B2", "A3", "B3", "A4", "B4"});
  Generated g{Context::make(schema, Instance(facts), cs, pairs), std::nullopt, {},
              "qbf reduction of " + f.to_string()};
  std::vector<Term> terms(8, lit(0));
  g.query = Query::make(schema, Formula::atom(atom(R, terms)));
  return g;
}

std::string_view to_string(RandomShape s) {
  switch (s) {
    case RandomShape::kSingleKey: return "single-key";
    case RandomShape::kSingleFd: return "single-fd";
    case RandomShape::kMultiFd: return "multi-fd";
    case RandomShape::kDenialMixed: return "denial-mixed";
  }
  return "?";
}

RandomShape parse_shape(std::string_view text) {
  for (auto s : {RandomShape::kSingleKey, RandomShape::kSingleFd, RandomShape::kMultiFd,
                 RandomShape::kDenialMixed}) {
    if (text == to_string(s)) return s;
  }
  throw ArgumentError("unknown constraint shape '" + std::string(text) + "'");
}

namespace {

Priority orient_randomly(std::shared_ptr<const ConflictHypergraph> hg, std::mt19937_64& rng,
                         double density, std::size_t max_unordered) {
  Priority p(std::move(hg));
  auto todo = unordered_pairs(p);
  std::shuffle(todo.begin(), todo.end(), rng);
  std::bernoulli_distribution pick(density), flip(0.5);
  auto orient = [&](Priority::Pair pr) {
    auto [a, b] = pr;
    if (flip(rng)) std::swap(a, b);
    if (p.reaches(b, a)) std::swap(a, b);
    p.add_unchecked(a, b);
  };
  std::vector<Priority::Pair> rest;
  for (auto pr : todo) {
    if (density >= 1.0 || (density > 0.0 && pick(rng))) {
      orient(pr);
    } else {
      rest.push_back(pr);
    }
  }
  while (rest.size() > max_unordered) {
    orient(rest.back());
    rest.pop_back();
  }
  return p;
}

}  // namespace

Priority random_priority(std::shared_ptr<const ConflictHypergraph> hg, std::uint64_t seed,
                         double density, std::size_t max_unordered) {
  std::mt19937_64 rng(seed);
  return orient_randomly(std::move(hg), rng, density, max_unordered);
}

Generated random_ctx(std::uint64_t seed, const RandomProfile& profile) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(0, std::max(1, profile.value_range) - 1);
  Schema schema;
  ConstraintSet cs;
  auto rational_rel = [](const std::string& name, std::initializer_list<const char*> attrs) {
    RelationSchema r{name, {}};
    for (const auto* a : attrs) r.attributes.push_back({a, Domain::kRational});
    return r;
  };
  switch (profile.shape) {
    case RandomShape::kSingleKey:
      schema.add_relation(rational_rel("R", {"A", "B", "C"}));
      cs.fds.push_back({"R", {"A"}, {"B", "C"}});
      break;
    case RandomShape::kSingleFd:
      schema.add_relation(rational_rel("R", {"A", "B", "C"}));
      cs.fds.push_back({"R", {"A"}, {"B"}});
      break;
    case RandomShape::kMultiFd:
      schema.add_relation(rational_rel("R", {"A", "B", "C"}));
      cs.fds.push_back({"R", {"A"}, {"B"}});
      cs.fds.push_back({"R", {"B"}, {"C"}});
      break;
    case RandomShape::kDenialMixed: {
      schema.add_relation(rational_rel("R", {"A", "B"}));
      schema.add_relation(RelationSchema{"S", {{"K", Domain::kConstant}, {"V", Domain::kRational}}});
      cs.fds.push_back({"R", {"A"}, {"B"}});
      auto k = Value::constant;
      cs.denials.push_back(
          {{atom("R", {var("x"), var("y")}), atom("S", {var("k"), var("z")})},
           Formula::conjunction({Formula::compare(var("y"), CmpOp::kGt, var("z")),
                                 Formula::negation(Formula::compare(var("k"), CmpOp::kEq, k("a")))})});
      cs.denials.push_back({{atom("S", {var("k"), var("z")})},
                            Formula::conjunction({Formula::compare(var("k"), CmpOp::kEq, k("c")),
                                                  Formula::compare(var("z"), CmpOp::kGt, lit(1))})});
      cs.denials.push_back({{atom("R", {var("x"), var("y")}), atom("S", {var("k"), var("x")}),
                             atom("S", {var("k"), var("y")})},
                            Formula::compare(var("x"), CmpOp::kNe, var("y"))});
      break;
    }
  }
  const char* names[] = {"a", "b", "c"};
  std::set<Fact> facts;
  for (std::size_t attempt = 0; facts.size() < profile.facts && attempt < profile.facts * 50; ++attempt) {
    Fact f;
    if (profile.shape == RandomShape::kDenialMixed && (rng() & 1)) {
      f = Fact{"S", {Value::constant(names[value(rng) % 3]), Value(static_cast<long long>(value(rng)))}};
    } else {
      f.relation = "R";
      for (std::size_t i = 0; i < schema.at("R").arity(); ++i) {
        f.tuple.emplace_back(static_cast<long long>(value(rng)));
      }
    }
    facts.insert(std::move(f));
  }
  Context base(schema, Instance(std::vector<Fact>(facts.begin(), facts.end())), cs);
  auto p = orient_randomly(base.graph_ptr(), rng, profile.density, profile.max_unordered);
  std::ostringstream prov;
  prov << "random seed=" << seed << " shape=" << to_string(profile.shape) << " facts=" << profile.facts
       << " density=" << profile.density;
  return Generated{base.with_priority(std::move(p)), std::nullopt, {}, prov.str()};
}

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int to_int(const std::string& t, std::size_t line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + t + "'", line);
  }
}

CnfFormula parse_dimacs_lines(std::string_view text, std::optional<int>* universal) {
  CnfFormula f;
  bool header = false;
  int expected = 0;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] == "c" || toks[0][0] == '%') continue;
    if (toks[0] == "u") {
      if (!universal || header || universal->has_value() || toks.size() != 2) {
        throw ParseError("unexpected universal-count line", line_no);
      }
      *universal = to_int(toks[1], line_no);
      continue;
    }
    if (toks[0] == "p") {
      if (header || toks.size() != 4 || toks[1] != "cnf") throw ParseError("bad problem line", line_no);
      f.variables = to_int(toks[2], line_no);
      expected = to_int(toks[3], line_no);
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the 'p cnf' header", line_no);
    for (const auto& t : toks) {
      int lit = to_int(t, line_no);
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::abs(lit) > f.variables) throw ParseError("literal out of range: " + t, line_no);
        current.push_back(lit);
      }
    }
  }
  if (!header) throw ParseError("missing 'p cnf' header", line_no);
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (static_cast<int>(f.clauses.size()) != expected) {
    throw ParseError("header announces " + std::to_string(expected) + " clauses, found " +
                         std::to_string(f.clauses.size()),
                     line_no);
  }
  return f;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) { return parse_dimacs_lines(text, nullptr); }

QbfFormula parse_qbf(std::string_view text) {
  std::optional<int> universal;
  QbfFormula q;
  q.matrix = parse_dimacs_lines(text, &universal);
  if (!universal) throw ParseError("missing 'u N' universal-count line", 0);
  q.universal = *universal;
  q.existential = q.matrix.variables - q.universal;
  return q;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string to_dimacs(const QbfFormula& f) {
  return "u " + std::to_string(f.universal) + "\n" + to_dimacs(f.matrix);
}

}  // namespace prefrep
