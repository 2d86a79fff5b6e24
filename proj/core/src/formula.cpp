#include "prefrep/formula.hpp"

#include <algorithm>
#include <functional>

#include "prefrep/error.hpp"

namespace prefrep {

struct Formula::Node {
  Kind kind = Kind::kTrue;
  Atom atom;
  CmpOp op = CmpOp::kEq;
  Term lhs;
  Term rhs;
  std::vector<Formula> children;
  std::vector<std::string> vars;
};

namespace {

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "'";
}

}  // namespace

std::string to_string(const Term& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return v->name;
  const auto& val = std::get<Value>(t);
  return val.is_constant() ? quote(val.as_constant()) : val.to_string();
}

std::string Atom::to_string() const {
  std::string out = relation + "(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ", ";
    out += prefrep::to_string(terms[i]);
  }
  return out + ")";
}

Formula::Formula() : node_(std::make_shared<Node>()) {}

Formula Formula::truth(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = value ? Kind::kTrue : Kind::kFalse;
  return Formula(std::move(n));
}

Formula Formula::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAtom;
  n->atom = std::move(a);
  return Formula(std::move(n));
}

Formula Formula::compare(Term lhs, CmpOp op, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kCompare;
  n->lhs = std::move(lhs);
  n->op = op;
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kNot;
  n->children.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::conjunction(std::vector<Formula> children) {
  if (children.empty()) return truth(true);
  if (children.size() == 1) return std::move(children.front());
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAnd;
  n->children = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::disjunction(std::vector<Formula> children) {
  if (children.empty()) return truth(false);
  if (children.size() == 1) return std::move(children.front());
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOr;
  n->children = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::exists(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  auto n = std::make_shared<Node>();
  n->kind = Kind::kExists;
  n->vars = std::move(vars);
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::forall(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  auto n = std::make_shared<Node>();
  n->kind = Kind::kForall;
  n->vars = std::move(vars);
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom() const {
  if (kind() != Kind::kAtom) throw ArgumentError("formula is not an atom");
  return node_->atom;
}

CmpOp Formula::op() const { return node_->op; }
const Term& Formula::lhs() const { return node_->lhs; }
const Term& Formula::rhs() const { return node_->rhs; }
std::span<const Formula> Formula::children() const { return node_->children; }

const Formula& Formula::body() const {
  if (node_->children.empty()) throw ArgumentError("formula has no body");
  return node_->children.front();
}

const std::vector<std::string>& Formula::variables() const { return node_->vars; }

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto term = [&](const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t); v && !bound.count(v->name)) out.insert(v->name);
  };
  switch (f.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse: return;
    case Formula::Kind::kAtom:
      for (const auto& t : f.atom().terms) term(t);
      return;
    case Formula::Kind::kCompare:
      term(f.lhs());
      term(f.rhs());
      return;
    case Formula::Kind::kNot:
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      for (const auto& c : f.children()) collect_free(c, bound, out);
      return;
    case Formula::Kind::kExists:
    case Formula::Kind::kForall: {
      std::vector<std::string> added;
      for (const auto& v : f.variables()) {
        if (bound.insert(v).second) added.push_back(v);
      }
      collect_free(f.body(), bound, out);
      for (const auto& v : added) bound.erase(v);
      return;
    }
  }
}

}  // namespace

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

bool Formula::is_quantifier_free() const {
  if (kind() == Kind::kExists || kind() == Kind::kForall) return false;
  return std::all_of(children().begin(), children().end(),
                     [](const Formula& c) { return c.is_quantifier_free(); });
}

bool Formula::mentions_atoms() const {
  if (kind() == Kind::kAtom) return true;
  return std::any_of(children().begin(), children().end(),
                     [](const Formula& c) { return c.mentions_atoms(); });
}

std::vector<Value> Formula::literals() const {
  std::vector<Value> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    auto term = [&](const Term& t) {
      if (const auto* v = std::get_if<Value>(&t)) out.push_back(*v);
    };
    if (f.kind() == Kind::kAtom) {
      for (const auto& t : f.atom().terms) term(t);
    } else if (f.kind() == Kind::kCompare) {
      term(f.lhs());
      term(f.rhs());
    }
    for (const auto& c : f.children()) walk(c);
  };
  walk(*this);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool compound(const Formula& f) {
  auto k = f.kind();
  return k == Formula::Kind::kAnd || k == Formula::Kind::kOr || k == Formula::Kind::kExists ||
         k == Formula::Kind::kForall;
}

std::string join_vars(const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i];
  }
  return out;
}

}  // namespace

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::kTrue: return "TRUE";
    case Kind::kFalse: return "FALSE";
    case Kind::kAtom: return atom().to_string();
    case Kind::kCompare:
      return prefrep::to_string(lhs()) + " " + std::string(prefrep::to_string(op())) + " " +
             prefrep::to_string(rhs());
    case Kind::kNot: return "NOT (" + body().to_string() + ")";
    case Kind::kAnd:
    case Kind::kOr: {
      std::string sep = kind() == Kind::kAnd ? " AND " : " OR ";
      std::string out;
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) out += sep;
        const auto& c = children()[i];
        out += compound(c) ? "(" + c.to_string() + ")" : c.to_string();
      }
      return out;
    }
    case Kind::kExists: return "EXISTS " + join_vars(variables()) + " . " + body().to_string();
    case Kind::kForall: return "FORALL " + join_vars(variables()) + " . " + body().to_string();
  }
  return "?";
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.atom == y.atom && x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs &&
         x.children == y.children && x.vars == y.vars;
}

namespace {

const Value* resolve(const Term& t, const Binding& binding) {
  if (const auto* v = std::get_if<Value>(&t)) return v;
  auto it = binding.find(std::get<Variable>(t).name);
  return it == binding.end() ? nullptr : &it->second;
}

}  // namespace

bool eval_builtin(const Formula& f, const Binding& binding) {
  switch (f.kind()) {
    case Formula::Kind::kTrue: return true;
    case Formula::Kind::kFalse: return false;
    case Formula::Kind::kCompare: {
      const Value* l = resolve(f.lhs(), binding);
      const Value* r = resolve(f.rhs(), binding);
      if (!l || !r) throw ArgumentError("unbound variable in " + f.to_string());
      return compare(*l, f.op(), *r);
    }
    case Formula::Kind::kNot: return !eval_builtin(f.body(), binding);
    case Formula::Kind::kAnd:
      for (const auto& c : f.children()) {
        if (!eval_builtin(c, binding)) return false;
      }
      return true;
    case Formula::Kind::kOr:
      for (const auto& c : f.children()) {
        if (eval_builtin(c, binding)) return true;
      }
      return false;
    default: throw ArgumentError("not a built-in formula: " + f.to_string());
  }
}

std::optional<bool> eval_builtin_partial(const Formula& f, const Binding& binding) {
  switch (f.kind()) {
    case Formula::Kind::kTrue: return true;
    case Formula::Kind::kFalse: return false;
    case Formula::Kind::kCompare: {
      const Value* l = resolve(f.lhs(), binding);
      const Value* r = resolve(f.rhs(), binding);
      if (!l || !r) return std::nullopt;
      return compare(*l, f.op(), *r);
    }
    case Formula::Kind::kNot: {
      auto v = eval_builtin_partial(f.body(), binding);
      if (!v) return std::nullopt;
      return !*v;
    }
    case Formula::Kind::kAnd: {
      bool unknown = false;
      for (const auto& c : f.children()) {
        auto v = eval_builtin_partial(c, binding);
        if (!v) unknown = true;
        else if (!*v) return false;
      }
      if (unknown) return std::nullopt;
      return true;
    }
    case Formula::Kind::kOr: {
      bool unknown = false;
      for (const auto& c : f.children()) {
        auto v = eval_builtin_partial(c, binding);
        if (!v) unknown = true;
        else if (*v) return true;
      }
      if (unknown) return std::nullopt;
      return false;
    }
    default: throw ArgumentError("not a built-in formula: " + f.to_string());
  }
}

namespace {

class DomainInference {
 public:
  explicit DomainInference(const Schema& schema) : schema_(schema) {}

  void add_atom(const Atom& a) {
    const auto& rel = schema_.at(a.relation);
    if (rel.arity() != a.terms.size()) {
      throw SchemaError("atom " + a.to_string() + " has arity " + std::to_string(a.terms.size()) +
                        ", relation " + rel.name + " expects " + std::to_string(rel.arity()));
    }
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
      Domain d = rel.attributes[i].domain;
      if (const auto* v = std::get_if<Variable>(&a.terms[i])) {
        assign(v->name, d, a.to_string());
      } else if (std::get<Value>(a.terms[i]).domain() != d) {
        throw SchemaError("atom " + a.to_string() + ": attribute " + rel.attributes[i].name +
                          " expects a " + std::string(to_string(d)));
      }
    }
  }

  void walk(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kAtom:
        add_atom(f.atom());
        note_terms(f.atom().terms);
        return;
      case Formula::Kind::kCompare:
        comparisons_.push_back(f);
        note_terms({f.lhs(), f.rhs()});
        return;
      case Formula::Kind::kExists:
      case Formula::Kind::kForall:
        for (const auto& v : f.variables()) {
          if (!bound_.insert(v).second) {
            throw SchemaError("variable " + v + " is bound more than once");
          }
          seen_.insert(v);
        }
        walk(f.body());
        return;
      default:
        for (const auto& c : f.children()) walk(c);
    }
  }

  void note_terms(const std::vector<Term>& terms) {
    for (const auto& t : terms) {
      if (const auto* v = std::get_if<Variable>(&t)) seen_.insert(v->name);
    }
  }

  void note_atom_vars(const Atom& a) { note_terms(a.terms); }

  std::map<std::string, Domain> finish() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : comparisons_) {
        auto l = domain_of(c.lhs());
        auto r = domain_of(c.rhs());
        if (l && !r) {
          assign(std::get<Variable>(c.rhs()).name, *l, c.to_string());
          changed = true;
        } else if (r && !l) {
          assign(std::get<Variable>(c.lhs()).name, *r, c.to_string());
          changed = true;
        }
      }
    }
    for (const auto& v : seen_) {
      if (!domains_.count(v)) {
        throw SchemaError("cannot determine the domain of variable " + v);
      }
    }
    for (const auto& c : comparisons_) {
      auto l = *domain_of(c.lhs());
      auto r = *domain_of(c.rhs());
      if (l != r) {
        throw SchemaError("comparison " + c.to_string() + " mixes a rational and a constant");
      }
      if (l == Domain::kConstant && is_order_op(c.op())) {
        throw SchemaError("comparison " + c.to_string() + " orders constants");
      }
    }
    return domains_;
  }

 private:
  std::optional<Domain> domain_of(const Term& t) const {
    if (const auto* v = std::get_if<Value>(&t)) return v->domain();
    auto it = domains_.find(std::get<Variable>(t).name);
    if (it == domains_.end()) return std::nullopt;
    return it->second;
  }

  void assign(const std::string& var, Domain d, const std::string& where) {
    auto [it, inserted] = domains_.emplace(var, d);
    if (!inserted && it->second != d) {
      throw SchemaError("variable " + var + " used as both rational and constant in " + where);
    }
  }

  const Schema& schema_;
  std::map<std::string, Domain> domains_;
  std::set<std::string> bound_;
  std::set<std::string> seen_;
  std::vector<Formula> comparisons_;
};

}  // namespace

std::map<std::string, Domain> infer_domains(const Schema& schema, std::span<const Atom> atoms,
                                            const Formula& f) {
  DomainInference inf(schema);
  for (const auto& a : atoms) {
    inf.add_atom(a);
    inf.note_atom_vars(a);
  }
  inf.walk(f);
  return inf.finish();
}

}  // namespace prefrep
