#include "prefrep/query.hpp"

#include <algorithm>

#include "prefrep/error.hpp"

namespace prefrep {

Query Query::make(const Schema& schema, Formula f) {
  auto free = f.free_variables();
  if (!free.empty()) throw SchemaError("query has free variable " + *free.begin());
  Query q;
  q.domains_ = infer_domains(schema, {}, f);
  q.formula_ = std::move(f);
  return q;
}

namespace {

bool is_ground_literal(const Formula& f) {
  const Formula* a = &f;
  if (f.kind() == Formula::Kind::kNot) a = &f.body();
  if (a->kind() != Formula::Kind::kAtom) return false;
  return std::all_of(a->atom().terms.begin(), a->atom().terms.end(),
                     [](const Term& t) { return std::holds_alternative<Value>(t); });
}

bool is_clause(const Formula& f) {
  if (f.kind() == Formula::Kind::kOr) {
    return std::all_of(f.children().begin(), f.children().end(), is_ground_literal);
  }
  return is_ground_literal(f) || f.kind() == Formula::Kind::kFalse;
}

bool is_conj_body(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kCompare:
    case Formula::Kind::kTrue: return true;
    case Formula::Kind::kAnd:
      return std::all_of(f.children().begin(), f.children().end(), [](const Formula& c) {
        return c.kind() == Formula::Kind::kAtom || c.kind() == Formula::Kind::kCompare;
      });
    default: return false;
  }
}

}  // namespace

bool Query::is_conjunctive() const {
  const Formula* f = &formula_;
  while (f->kind() == Formula::Kind::kExists) f = &f->body();
  return is_conj_body(*f);
}

bool Query::is_cnf() const {
  if (formula_.kind() == Formula::Kind::kTrue) return true;
  if (formula_.kind() == Formula::Kind::kAnd) {
    return std::all_of(formula_.children().begin(), formula_.children().end(), is_clause);
  }
  return is_clause(formula_);
}

namespace {

class Evaluator {
 public:
  Evaluator(const Instance& instance, const Query& q) : instance_(instance), query_(q) {}

  bool eval(const Formula& f, Binding& b) const {
    switch (f.kind()) {
      case Formula::Kind::kTrue: return true;
      case Formula::Kind::kFalse: return false;
      case Formula::Kind::kAtom: return instance_.contains(ground(f.atom(), b));
      case Formula::Kind::kCompare: return eval_builtin(f, b);
      case Formula::Kind::kNot: return !eval(f.body(), b);
      case Formula::Kind::kAnd:
        for (const auto& c : f.children()) {
          if (!eval(c, b)) return false;
        }
        return true;
      case Formula::Kind::kOr:
        for (const auto& c : f.children()) {
          if (eval(c, b)) return true;
        }
        return false;
      case Formula::Kind::kExists: return exists(f.variables(), f.body(), b);
      case Formula::Kind::kForall: return !exists(f.variables(), push_not(f.body()), b);
    }
    return false;
  }

 private:
  static Formula push_not(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kNot: return f.body();
      case Formula::Kind::kOr: {
        std::vector<Formula> cs;
        for (const auto& c : f.children()) {
          cs.push_back(c.kind() == Formula::Kind::kNot ? c.body() : Formula::negation(c));
        }
        return Formula::conjunction(std::move(cs));
      }
      default: return Formula::negation(f);
    }
  }

  Fact ground(const Atom& a, const Binding& b) const {
    Fact f{a.relation, {}};
    f.tuple.reserve(a.terms.size());
    for (const auto& t : a.terms) {
      if (const auto* v = std::get_if<Value>(&t)) {
        f.tuple.push_back(*v);
      } else {
        auto it = b.find(std::get<Variable>(t).name);
        if (it == b.end()) throw ArgumentError("unbound variable in " + a.to_string());
        f.tuple.push_back(it->second);
      }
    }
    return f;
  }

  // A positive atom conjunct mentioning one of `vars`, if any.
  static const Atom* join_atom(const std::vector<std::string>& vars, const Formula& body) {
    auto mentions = [&](const Atom& a) {
      return std::any_of(a.terms.begin(), a.terms.end(), [&](const Term& t) {
        const auto* v = std::get_if<Variable>(&t);
        return v && std::find(vars.begin(), vars.end(), v->name) != vars.end();
      });
    };
    if (body.kind() == Formula::Kind::kAtom) return mentions(body.atom()) ? &body.atom() : nullptr;
    if (body.kind() != Formula::Kind::kAnd) return nullptr;
    for (const auto& c : body.children()) {
      if (c.kind() == Formula::Kind::kAtom && mentions(c.atom())) return &c.atom();
    }
    return nullptr;
  }

  bool exists(const std::vector<std::string>& vars, const Formula& body, Binding& b) const {
    if (vars.empty()) return eval(body, b);
    if (const Atom* a = join_atom(vars, body)) {
      auto lo = std::lower_bound(instance_.begin(), instance_.end(), a->relation,
                                 [](const Fact& f, const std::string& r) { return f.relation < r; });
      for (auto it = lo; it != instance_.end() && it->relation == a->relation; ++it) {
        Binding nb = b;
        std::vector<std::string> rest = vars;
        bool ok = it->tuple.size() == a->terms.size();
        for (std::size_t i = 0; ok && i < a->terms.size(); ++i) {
          const auto& t = a->terms[i];
          const auto& val = it->tuple[i];
          if (const auto* v = std::get_if<Value>(&t)) {
            ok = *v == val;
            continue;
          }
          const auto& name = std::get<Variable>(t).name;
          auto r = std::find(rest.begin(), rest.end(), name);
          if (r != rest.end()) {
            nb[name] = val;
            rest.erase(r);
          } else if (auto bound = nb.find(name); bound != nb.end()) {
            ok = bound->second == val;
          }
        }
        if (ok && exists(rest, body, nb)) return true;
      }
      return false;
    }
    const auto& name = vars.front();
    std::vector<std::string> rest(vars.begin() + 1, vars.end());
    build_domains();
    const auto& dom = query_.domains().at(name) == Domain::kRational ? rationals_ : constants_;
    for (const auto& v : dom) {
      Binding nb = b;
      nb[name] = v;
      if (exists(rest, body, nb)) return true;
    }
    return false;
  }

  // Only quantifiers without a guarding atom range over the active domain.
  void build_domains() const {
    if (domains_built_) return;
    std::set<Value> rat, con;
    auto add = [&](const Value& v) { (v.is_rational() ? rat : con).insert(v); };
    for (const auto& v : active_domain(instance_)) add(v);
    for (const auto& v : query_.formula().literals()) add(v);
    rationals_.assign(rat.begin(), rat.end());
    constants_.assign(con.begin(), con.end());
    domains_built_ = true;
  }

  const Instance& instance_;
  const Query& query_;
  mutable bool domains_built_ = false;
  mutable std::vector<Value> rationals_;
  mutable std::vector<Value> constants_;
};

}  // namespace

bool eval_query(const Instance& instance, const Query& query) {
  Evaluator ev(instance, query);
  Binding b;
  return ev.eval(query.formula(), b);
}

}  // namespace prefrep
