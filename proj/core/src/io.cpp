#include "prefrep/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "prefrep/error.hpp"

namespace prefrep {

namespace {

enum class Tok { kIdent, kNumber, kString, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::kIdent, std::string(s.substr(i, j - i)), line});
      i = j;
    } else if (digit(i) || ((c == '-' || c == '+') && (digit(i + 1) || (s.size() > i + 2 && s[i + 1] == '.' && digit(i + 2)))) ||
               (c == '.' && digit(i + 1))) {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.' ||
                              (s[j] == '/' && digit(j + 1)))) {
        ++j;
      }
      out.push_back({Tok::kNumber, std::string(s.substr(i, j - i)), line});
      i = j;
    } else if (c == '\'' || c == '"') {
      std::string text;
      std::size_t start = line;
      ++i;
      while (true) {
        if (i >= s.size()) throw ParseError("unterminated string", start);
        if (s[i] == c) break;
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        if (s[i] == '\n') ++line;
        text.push_back(s[i++]);
      }
      ++i;
      out.push_back({Tok::kString, std::move(text), start});
    } else {
      static const char* two[] = {"->", "!=", "<>", "<=", ">="};
      std::string p(1, c);
      for (const auto* t : two) {
        if (s.substr(i, 2) == t) p = t;
      }
      if (p == "<>") p = "!=";
      if (std::string("()[]{},:;.=<>!").find(c) == std::string::npos && p.size() == 1) {
        throw ParseError(std::string("unexpected character '") + c + "'", line);
      }
      i += p.size() == 2 && s.substr(i, 2) != p ? 2 : p.size();
      out.push_back({Tok::kPunct, p, line});
    }
  }
  out.push_back({Tok::kEnd, "", line});
  return out;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Tok::kEnd; }
  std::size_t line() const { return peek().line; }

  bool is_punct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == Tok::kPunct && peek(k).text == p;
  }
  bool is_keyword(std::string_view kw, std::size_t k = 0) const {
    return peek(k).kind == Tok::kIdent && upper(peek(k).text) == kw;
  }
  bool accept(std::string_view p) {
    if (!is_punct(p)) return false;
    ++pos_;
    return true;
  }
  bool accept_keyword(std::string_view kw) {
    if (!is_keyword(kw)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = peek();
    std::string got = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError(what + ", got " + got, t.line);
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail("expected '" + std::string(p) + "'");
  }
  std::string ident(const char* what) {
    if (peek().kind != Tok::kIdent) fail(std::string("expected ") + what);
    return next().text;
  }

  // Value in instance syntax: bare identifiers are constants.
  Value value() {
    const auto& t = peek();
    if (t.kind == Tok::kNumber) return number();
    if (t.kind == Tok::kString || t.kind == Tok::kIdent) return Value::constant(next().text);
    fail("expected a value");
  }

  Value number() {
    auto t = next();
    try {
      return Value::parse_number(t.text);
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), t.line);
    }
  }

  // Fact in instance syntax, checked against the schema.
  Fact fact(const Schema& schema) {
    std::size_t ln = line();
    Fact f{ident("a relation name"), {}};
    expect("(");
    if (!is_punct(")")) {
      do {
        f.tuple.push_back(value());
      } while (accept(","));
    }
    expect(")");
    try {
      check_fact(schema, f);
    } catch (const SchemaError& e) {
      throw ParseError(e.what(), ln);
    }
    return f;
  }

  // Term in formula syntax: bare identifiers are variables.
  Term term() {
    const auto& t = peek();
    if (t.kind == Tok::kNumber) return number();
    if (t.kind == Tok::kString) return Value::constant(next().text);
    if (t.kind == Tok::kIdent && !reserved(t.text)) return Variable{next().text};
    fail("expected a variable or a literal");
  }

  static bool reserved(const std::string& word) {
    static const std::set<std::string> kw{"NOT", "AND", "OR", "EXISTS", "FORALL", "TRUE", "FALSE", "WHERE"};
    return kw.count(upper(word)) > 0;
  }

  Atom atom() {
    Atom a{ident("a relation name"), {}};
    expect("(");
    if (!is_punct(")")) {
      do {
        a.terms.push_back(term());
      } while (accept(","));
    }
    expect(")");
    return a;
  }

  Formula formula() {
    if (is_keyword("EXISTS") || is_keyword("FORALL")) {
      bool ex = upper(next().text) == "EXISTS";
      std::vector<std::string> vars;
      do {
        if (peek().kind != Tok::kIdent || reserved(peek().text)) fail("expected a variable name");
        vars.push_back(next().text);
      } while (accept(","));
      expect(".");
      auto body = formula();
      return ex ? Formula::exists(std::move(vars), std::move(body))
                : Formula::forall(std::move(vars), std::move(body));
    }
    std::vector<Formula> parts{conjunction()};
    while (accept_keyword("OR")) parts.push_back(conjunction());
    return Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (accept_keyword("AND")) parts.push_back(unary());
    return Formula::conjunction(std::move(parts));
  }

  Formula unary() {
    if (accept_keyword("NOT")) return Formula::negation(unary());
    if (is_keyword("EXISTS") || is_keyword("FORALL")) return formula();
    if (accept_keyword("TRUE")) return Formula::truth(true);
    if (accept_keyword("FALSE")) return Formula::truth(false);
    if (accept("(")) {
      auto f = formula();
      expect(")");
      return f;
    }
    if (peek().kind == Tok::kIdent && is_punct("(", 1)) return Formula::atom(atom());
    auto lhs = term();
    static const std::pair<const char*, CmpOp> ops[] = {{"=", CmpOp::kEq},  {"!=", CmpOp::kNe},
                                                         {"<", CmpOp::kLt},  {"<=", CmpOp::kLe},
                                                         {">", CmpOp::kGt},  {">=", CmpOp::kGe}};
    for (auto [text, op] : ops) {
      if (accept(text)) return Formula::compare(std::move(lhs), op, term());
    }
    fail("expected a comparison operator");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Domain domain_tag(Parser& p) {
  auto t = p.peek();
  auto tag = p.ident("a domain (rational or constant)");
  if (tag == "rational") return Domain::kRational;
  if (tag == "constant") return Domain::kConstant;
  throw ParseError("unknown domain '" + tag + "'", t.line);
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  Parser p(text);
  InstanceFile out;
  if (!p.accept_keyword("SCHEMA")) p.fail("expected the schema block");
  p.expect("{");
  while (!p.accept("}")) {
    std::size_t ln = p.line();
    RelationSchema rel{p.ident("a relation name"), {}};
    p.expect("(");
    do {
      Attribute a;
      a.name = p.ident("an attribute name");
      p.expect(":");
      a.domain = domain_tag(p);
      rel.attributes.push_back(std::move(a));
    } while (p.accept(","));
    p.expect(")");
    p.accept(",");
    p.accept(";");
    try {
      out.schema.add_relation(std::move(rel));
    } catch (const SchemaError& e) {
      throw ParseError(e.what(), ln);
    }
  }
  std::vector<Fact> facts;
  while (!p.at_end()) {
    facts.push_back(p.fact(out.schema));
    p.accept(";");
  }
  out.instance = Instance(std::move(facts));
  return out;
}

ConstraintSet parse_constraints(std::string_view text, const Schema& schema) {
  Parser p(text);
  ConstraintSet cs;
  while (!p.at_end()) {
    std::size_t ln = p.line();
    try {
      if (p.accept_keyword("FD")) {
        FunctionalDependency fd;
        fd.relation = p.ident("a relation name");
        p.expect(":");
        if (!p.is_punct("->")) {
          do {
            fd.lhs.push_back(p.ident("an attribute name"));
          } while (p.accept(","));
        }
        p.expect("->");
        do {
          fd.rhs.push_back(p.ident("an attribute name"));
        } while (p.accept(","));
        p.expect(";");
        desugar_fd(fd, schema);
        cs.fds.push_back(std::move(fd));
      } else if (p.accept_keyword("DENIAL")) {
        DenialConstraint dc;
        p.expect("[");
        do {
          dc.atoms.push_back(p.atom());
        } while (p.accept(","));
        p.expect("]");
        if (p.accept_keyword("WHERE")) dc.guard = p.formula();
        p.expect(";");
        check_constraint(schema, dc);
        cs.denials.push_back(std::move(dc));
      } else {
        p.fail("expected FD or DENIAL");
      }
    } catch (const SchemaError& e) {
      throw ParseError(e.what(), ln);
    }
  }
  return cs;
}

std::vector<std::pair<Fact, Fact>> parse_priority(std::string_view text, const Schema& schema) {
  Parser p(text);
  std::vector<std::pair<Fact, Fact>> out;
  while (!p.at_end()) {
    auto a = p.fact(schema);
    p.expect(">");
    auto b = p.fact(schema);
    p.accept(";");
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  auto f = p.formula();
  p.accept(";");
  if (!p.at_end()) p.fail("unexpected trailing input");
  return f;
}

std::vector<std::pair<std::string, Query>> parse_queries(std::string_view text, const Schema& schema) {
  Parser p(text);
  std::vector<std::pair<std::string, Query>> out;
  std::set<std::string> names;
  while (!p.at_end()) {
    std::size_t ln = p.line();
    auto name = p.ident("a query name");
    if (!names.insert(name).second) throw ParseError("query " + name + " defined twice", ln);
    p.expect(":");
    auto f = p.formula();
    p.expect(";");
    try {
      out.emplace_back(name, Query::make(schema, std::move(f)));
    } catch (const SchemaError& e) {
      throw ParseError(e.what(), ln);
    }
  }
  return out;
}

std::string write_instance_file(const Schema& schema, const Instance& instance) {
  std::string out = "schema {\n";
  for (const auto& [name, rel] : schema.relations()) {
    out += "  " + name + "(";
    for (std::size_t i = 0; i < rel.attributes.size(); ++i) {
      if (i) out += ", ";
      out += rel.attributes[i].name + ": " + std::string(to_string(rel.attributes[i].domain));
    }
    out += ")\n";
  }
  out += "}\n";
  for (const auto& f : instance) out += f.to_string() + "\n";
  return out;
}

std::string write_constraints(const ConstraintSet& cs) {
  std::string out;
  for (const auto& fd : cs.fds) out += fd.to_string() + "\n";
  for (const auto& dc : cs.denials) out += dc.to_string() + "\n";
  return out;
}

std::string write_priority(const std::vector<std::pair<Fact, Fact>>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) out += a.to_string() + " > " + b.to_string() + "\n";
  return out;
}

std::string write_queries(const std::vector<std::pair<std::string, Query>>& queries) {
  std::string out;
  for (const auto& [name, q] : queries) out += name + ": " + q.to_string() + ";\n";
  return out;
}

}  // namespace prefrep
