#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "prefrep/error.hpp"
#include "prefrep/families.hpp"
#include "prefrep/generators.hpp"
#include "prefrep/io.hpp"
#include "prefrep/pcqa.hpp"

namespace prefrep::cli {

namespace {

using nlohmann::json;

constexpr int kJsonVersion = 1;

struct Options {
  std::string instance;
  std::string constraints;
  std::string priority;
  std::string queries;
  std::string priority_mode = "strict";
  std::size_t max_repairs = kDefaultRepairCap;
  std::uint64_t seed = 0;
  std::string format = "text";

  std::string family = "all";
  std::string candidate;
  std::string query;
  bool tractable = false;
  bool cnf = false;
  bool construct = false;

  int n = 3;
  std::string formula_file;
  std::string shape = "single-fd";
  std::size_t facts = 8;
  double density = 0.5;
  std::size_t max_unordered = 8;
  std::string out;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Error from a specific input file: prefix the path so line numbers make sense.
template <typename F>
auto from_file(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

struct Loaded {
  Context ctx;
  std::vector<std::string> warnings;
};

Loaded load(const Options& o, std::istream& in) {
  if (o.instance.empty()) throw ArgumentError("--instance is required");
  auto file = from_file(o.instance, [&] { return parse_instance_file(slurp(o.instance, in)); });
  ConstraintSet cs;
  if (!o.constraints.empty()) {
    cs = from_file(o.constraints, [&] { return parse_constraints(slurp(o.constraints, in), file.schema); });
  }
  std::vector<std::pair<Fact, Fact>> pairs;
  if (!o.priority.empty()) {
    pairs = from_file(o.priority, [&] { return parse_priority(slurp(o.priority, in), file.schema); });
  }
  PriorityMode mode;
  if (o.priority_mode == "strict") mode = PriorityMode::kStrict;
  else if (o.priority_mode == "lenient") mode = PriorityMode::kLenient;
  else throw ArgumentError("--priority-mode must be strict or lenient");
  std::vector<std::pair<Fact, Fact>> dropped;
  auto ctx = Context::make(file.schema, file.instance, cs, pairs, mode, &dropped);
  Loaded l{std::move(ctx), {}};
  for (const auto& [a, b] : dropped) {
    l.warnings.push_back("dropped " + a.to_string() + " > " + b.to_string() + ": not neighbors");
  }
  return l;
}

json facts_json(const Instance& inst) {
  json a = json::array();
  for (const auto& f : inst) a.push_back(f.to_string());
  return a;
}

std::string braces(const Instance& inst) {
  std::string s = "{";
  for (std::size_t i = 0; i < inst.size(); ++i) s += (i ? ", " : "") + inst[i].to_string();
  return s + "}";
}

class Report {
 public:
  Report(std::string command, bool as_json) : as_json_(as_json) {
    j_["version"] = kJsonVersion;
    j_["command"] = std::move(command);
  }
  json& data() { return j_; }
  void line(const std::string& s) { text_ += s + "\n"; }
  void warnings(const std::vector<std::string>& w) {
    j_["warnings"] = w;
    for (const auto& s : w) line("warning: " + s);
  }
  void print(std::ostream& out) const {
    if (as_json_) out << j_.dump(2) << "\n";
    else out << text_;
  }

 private:
  bool as_json_;
  json j_;
  std::string text_;
};

void cmd_conflicts(const Loaded& l, Report& r) {
  const auto& hg = l.ctx.graph();
  json arr = json::array();
  for (const auto& e : hg.edges()) {
    Instance c;
    std::vector<Fact> fs;
    for (auto id : e) fs.push_back(hg.instance()[id]);
    c = Instance(fs);
    arr.push_back(facts_json(c));
    r.line(braces(c));
  }
  r.data()["conflicts"] = arr;
  r.data()["count"] = hg.edges().size();
}

void list_repairs(const std::vector<Instance>& reps, Report& r, const char* key) {
  json arr = json::array();
  for (const auto& rep : reps) {
    arr.push_back(facts_json(rep));
    r.line(braces(rep));
  }
  r.data()[key] = arr;
  r.data()["count"] = reps.size();
}

void cmd_repairs(const Loaded& l, const Options& o, Report& r) {
  list_repairs(all_repairs(l.ctx.graph(), o.max_repairs), r, "repairs");
}

void cmd_check(const Loaded& l, const Options& o, std::istream& in, Report& r) {
  const auto& ctx = l.ctx;
  auto family = parse_family(o.family);
  auto text = write_instance_file(ctx.schema(), Instance{}) + slurp(o.candidate, in);
  auto cand = from_file(o.candidate, [&] { return parse_instance_file(text).instance; });
  std::string reason;
  bool repair = false, preferred = false;
  if (!cand.is_subset_of(ctx.instance())) {
    reason = "not a subset of the instance";
  } else {
    auto s = ctx.graph().to_set(cand);
    if (!ctx.graph().is_independent(s)) {
      reason = "inconsistent";
    } else if (!ctx.graph().is_maximal_independent(s)) {
      reason = "not maximal";
    } else {
      repair = true;
      preferred = is_preferred(ctx, family, s, o.max_repairs);
      reason = preferred ? "preferred" : "not " + std::string(to_string(family)) + " optimal";
    }
  }
  r.data()["family"] = to_string(family);
  r.data()["repair"] = repair;
  r.data()["preferred"] = preferred;
  r.data()["reason"] = reason;
  r.line(std::string(preferred ? "pass" : "fail") + ": " + reason);
}

void cmd_preferred(const Loaded& l, const Options& o, Report& r) {
  const auto& ctx = l.ctx;
  auto family = parse_family(o.family);
  r.data()["family"] = to_string(family);
  if (!o.construct) {
    list_repairs(preferred_repairs(ctx, family, o.max_repairs), r, "repairs");
    return;
  }
  FactSet s;
  switch (family) {
    case Family::kAll: s = construct_repair(ctx.graph(), seeded_order(ctx.instance().size(), o.seed)); break;
    case Family::kGlobal: {
      GlobalRepairOptions opts;
      opts.seed = o.seed;
      opts.cap = o.max_repairs;
      s = build_global_repair(ctx, opts);
      break;
    }
    case Family::kPareto: s = build_pareto_repair(ctx, o.seed); break;
    case Family::kCommon: s = build_common_repair(ctx, std::span<const FactId>{}, o.seed); break;
  }
  list_repairs({ctx.graph().to_instance(s)}, r, "repairs");
}

Query resolve_query(const Context& ctx, const Options& o, std::istream& in) {
  if (o.query.empty()) throw ArgumentError("--query is required");
  if (o.queries.empty()) return Query::make(ctx.schema(), parse_formula(o.query));
  auto all = from_file(o.queries, [&] { return parse_queries(slurp(o.queries, in), ctx.schema()); });
  for (auto& [name, q] : all) {
    if (name == o.query) return q;
  }
  throw ArgumentError("no query named " + o.query + " in " + o.queries);
}

void cmd_answer(const Loaded& l, const Options& o, std::istream& in, Report& r) {
  const auto& ctx = l.ctx;
  auto family = parse_family(o.family);
  auto q = resolve_query(ctx, o, in);
  if (o.cnf && !q.is_cnf()) throw UnsupportedShapeError("query is not a quantifier-free CNF: " + q.to_string());
  auto res = o.tractable ? pcqa_single_fd(ctx, family, q) : pcqa_generic(ctx, family, q, o.max_repairs);
  std::string verdict(to_string(res.verdict));
  r.data()["family"] = to_string(family);
  r.data()["query"] = q.to_string();
  r.data()["verdict"] = verdict;
  r.data()["method"] = o.tractable ? "tractable" : "enumeration";
  r.line(verdict);
  if (o.tractable) {
    auto names = [](const std::vector<ConjunctTest>& ts) {
      json a = json::array();
      for (auto t : ts) a.push_back(to_string(t));
      return a;
    };
    r.data()["clause_tests"] = names(res.tests);
    r.data()["dual_clause_tests"] = names(res.dual_tests);
    r.data()["used_fallback"] = res.used_fallback;
  } else {
    r.data()["preferred_count"] = res.preferred_count;
    if (res.true_witness) r.data()["true_witness"] = facts_json(*res.true_witness);
    if (res.false_witness) r.data()["false_witness"] = facts_json(*res.false_witness);
  }
  std::vector<std::string> w = l.warnings;
  w.insert(w.end(), res.warnings.begin(), res.warnings.end());
  r.warnings(w);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f || !(f << text)) throw ArgumentError("cannot write " + path);
}

void cmd_gen(const std::string& kind, const Options& o, std::istream& in, Report& r) {
  std::optional<Generated> g;
  if (kind == "counter") {
    if (o.n < 1) throw ArgumentError("--n must be at least 1");
    g = counter_instance(o.n);
  } else if (kind == "sat") {
    g = sat_reduction(from_file(o.formula_file, [&] { return parse_dimacs(slurp(o.formula_file, in)); }));
  } else if (kind == "qbf") {
    g = qbf_reduction(from_file(o.formula_file, [&] { return parse_qbf(slurp(o.formula_file, in)); }));
  } else {
    RandomProfile p;
    p.shape = parse_shape(o.shape);
    p.facts = o.facts;
    p.density = o.density;
    p.max_unordered = o.max_unordered;
    g = random_ctx(o.seed, p);
  }
  const auto& ctx = g->ctx;
  std::map<std::string, std::string> files{
      {"facts", write_instance_file(ctx.schema(), ctx.instance())},
      {"constraints", write_constraints(ctx.constraints())},
      {"priority", write_priority(ctx.priority().fact_pairs())},
  };
  if (g->query) files["queries"] = write_queries({{"q", *g->query}});
  r.data()["generator"] = kind;
  r.data()["provenance"] = g->provenance;
  if (!g->chain.empty()) {
    json chain = json::array();
    for (const auto& c : g->chain) chain.push_back(facts_json(c));
    r.data()["chain"] = chain;
  }
  r.line("# " + g->provenance);
  if (!o.out.empty()) {
    json written = json::array();
    for (const auto& [ext, text] : files) {
      auto path = o.out + "." + ext;
      write_file(path, text);
      written.push_back(path);
      r.line("wrote " + path);
    }
    r.data()["files"] = written;
  } else {
    for (const auto& [ext, text] : files) {
      r.data()[ext] = text;
      r.line("## " + ext);
      r.line(text);
    }
  }
}

void add_context_options(CLI::App* sub, Options& o) {
  sub->add_option("--instance,-i", o.instance, "Instance file ('-' for stdin)")->required();
  sub->add_option("--constraints,-c", o.constraints, "Constraint file");
  sub->add_option("--priority,-p", o.priority, "Priority file");
  sub->add_option("--priority-mode", o.priority_mode, "strict|lenient")
      ->check(CLI::IsMember({"strict", "lenient"}));
  sub->add_option("--max-repairs", o.max_repairs, "Repair enumeration cap");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  Options o;
  CLI::App app{"Preferred repairs and preferred consistent query answers", "prefrep"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for builders and generators");

  auto* conflicts = app.add_subcommand("conflicts", "List the conflicts");
  add_context_options(conflicts, o);
  auto* repairs = app.add_subcommand("repairs", "List all repairs");
  add_context_options(repairs, o);
  auto* check = app.add_subcommand("check", "Check a candidate repair against a family");
  add_context_options(check, o);
  check->add_option("--family,-f", o.family, "all|g|p|c");
  check->add_option("--candidate", o.candidate, "File with the candidate's facts")->required();
  auto* preferred = app.add_subcommand("preferred", "List preferred repairs");
  add_context_options(preferred, o);
  preferred->add_option("--family,-f", o.family, "all|g|p|c");
  preferred->add_flag("--construct", o.construct, "Build one repair with the family's algorithm");
  auto* answer = app.add_subcommand("answer", "Preferred consistent answer to a closed query");
  add_context_options(answer, o);
  answer->add_option("--family,-f", o.family, "all|g|p|c");
  answer->add_option("--queries,-q", o.queries, "Query file; --query then names an entry");
  answer->add_option("--query", o.query, "Query name, or the formula itself without --queries")->required();
  answer->add_flag("--tractable", o.tractable, "Use the single-FD algorithm");
  answer->add_flag("--cnf", o.cnf, "Require a quantifier-free CNF query");

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_counter = gen->add_subcommand("counter", "n-bit counter instance");
  gen_counter->add_option("--n", o.n, "Bits");
  auto* gen_sat = gen->add_subcommand("sat", "Reduction from a DIMACS CNF");
  gen_sat->add_option("--cnf", o.formula_file, "DIMACS file ('-' for stdin)")->required();
  auto* gen_qbf = gen->add_subcommand("qbf", "Reduction from a DIMACS QBF with a 'u N' line");
  gen_qbf->add_option("--qbf", o.formula_file, "QBF file ('-' for stdin)")->required();
  auto* gen_random = gen->add_subcommand("random", "Seeded random context");
  gen_random->add_option("--shape", o.shape, "single-key|single-fd|multi-fd|denial-mixed");
  gen_random->add_option("--facts", o.facts, "Number of facts");
  gen_random->add_option("--density", o.density, "Priority orientation probability");
  gen_random->add_option("--max-unordered", o.max_unordered, "Unordered neighbor pairs allowed");
  for (auto* g : {gen_counter, gen_sat, gen_qbf, gen_random}) {
    g->add_option("--out,-o", o.out, "Write PREFIX.facts, .constraints, .priority, .queries");
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const bool as_json = o.format == "json";
  try {
    if (gen->parsed()) {
      std::string kind = gen_counter->parsed() ? "counter"
                         : gen_sat->parsed()   ? "sat"
                         : gen_qbf->parsed()   ? "qbf"
                                               : "random";
      Report r("gen", as_json);
      cmd_gen(kind, o, in, r);
      r.print(out);
      return kOk;
    }
    auto loaded = load(o, in);
    CLI::App* sub = app.get_subcommands().front();
    Report r(sub->get_name(), as_json);
    if (sub == conflicts) cmd_conflicts(loaded, r);
    else if (sub == repairs) cmd_repairs(loaded, o, r);
    else if (sub == check) cmd_check(loaded, o, in, r);
    else if (sub == preferred) cmd_preferred(loaded, o, r);
    else cmd_answer(loaded, o, in, r);
    if (sub != answer) r.warnings(loaded.warnings);
    r.print(out);
    return kOk;
  } catch (const EnumerationLimitError& e) {
    err << "error: " << e.what() << " (raise --max-repairs)\n";
    return kLimit;
  } catch (const PriorityError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace prefrep::cli
