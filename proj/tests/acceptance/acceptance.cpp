// One line per acceptance criterion. Exit status is the number of failing
// criteria that are not listed as known to be unattainable.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "prefrep/pcqa.hpp"
#include "support.hpp"

using namespace prefrep;
using namespace prefrep::support;
using oracle::Mask;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned budgets.
constexpr double kExample2Seconds = 1.0;
constexpr double kOracleSuiteSeconds = 300.0;
constexpr double kTractableSeconds = 120.0;
constexpr std::uint64_t kCorpusSize = 500;
constexpr std::size_t kCorpusMaxFacts = 12;
constexpr int kExtensionsPerContext = 200;
constexpr std::uint64_t kTractableContexts = 300;
constexpr int kQueriesPerContext = 4;
constexpr std::uint64_t kAlgorithmContexts = 300;
constexpr std::size_t kAlgorithmMaxFacts = 8;
constexpr int kSatMaxVars = 4;
constexpr int kSatMaxClauses = 4;
constexpr int kQbfMaxVars = 5;
constexpr int kQbfRandomFormulas = 3000;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Line {
  int id;
  std::string title;
  bool pass;
  std::string detail;
  bool known_unattainable = false;
};

std::vector<Instance> fam(const Context& ctx, Family f) { return sorted(preferred_repairs(ctx, f)); }
std::vector<Mask> fam_masks(const Context& ctx, Family f) { return oracle::to_masks(preferred_repair_sets(ctx, f)); }

bool subset(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string fmt(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds);
  return buf;
}

Line criterion1() {
  auto t = Clock::now();
  auto ctx = load_fixture("example2");
  auto s = [&](std::initializer_list<const char*> l) { return facts(ctx.schema(), l); };
  auto i1 = s({"Mgr(Bob,70000,'R&D')", "Mgr(Mary,50000,PR)", "Mgr(Ken,60000,IT)"});
  auto i2 = s({"Mgr(Bob,70000,'R&D')", "Mgr(Mary,40000,IT)", "Mgr(Ken,50000,PR)"});
  auto i3 = s({"Mgr(Bob,60000,AD)", "Mgr(Mary,40000,IT)", "Mgr(Ken,50000,PR)"});
  auto i4 = s({"Mgr(Bob,60000,AD)", "Mgr(Mary,50000,PR)", "Mgr(Ken,60000,IT)"});
  bool ok = sorted(all_repairs(ctx.graph())) == sorted({i1, i2, i3, i4}) &&
            fam(ctx, Family::kPareto) == sorted({i1, i2}) && fam(ctx, Family::kGlobal) == std::vector{i1} &&
            fam(ctx, Family::kCommon) == std::vector{i1};
  double secs = since(t);
  return {1, "Example 2 end-to-end", ok && secs < kExample2Seconds,
          "4 repairs, P={I1',I2'}, G=C={I1'}; " + fmt(secs) + " (limit " + fmt(kExample2Seconds) + ")"};
}

Line criterion2() {
  auto ctx = load_fixture("example1");
  auto s = [&](std::initializer_list<const char*> l) { return facts(ctx.schema(), l); };
  auto r2 = s({"Emp(John,50000,IT)", "Mgr(Mary,70000,IT)"});
  auto r3 = s({"Emp(John,40000,IT)", "Mgr(Mary,70000,IT)"});
  auto g = fam(ctx, Family::kGlobal);
  auto nv = oracle::analyze(ctx);
  bool oracle_agrees = oracle::grep(nv) == fam_masks(ctx, Family::kGlobal);
  auto verdict = pcqa_generic(ctx, Family::kGlobal, load_query(ctx, "example1", "q0")).verdict;
  bool ok = all_repairs(ctx.graph()).size() == 3 && g == sorted({r2, r3}) && oracle_agrees &&
            verdict == Verdict::kFalse;
  return {2, "Example 1 with priority", ok,
          "3 repairs, G={I2',I3'} (oracle " + std::string(oracle_agrees ? "agrees" : "DISAGREES") +
              "), answer to Q0 = " + std::string(to_string(verdict))};
}

Line criterion3() {
  auto ctx = load_fixture("hierarchy");
  auto s = [&](std::initializer_list<const char*> l) { return facts(ctx.schema(), l); };
  auto i1 = s({"R(1,1,1,1)"}), i2 = s({"R(1,2,1,2)"}), i3 = s({"R(1,3,0,0)", "R(0,0,1,3)"});
  auto all = sorted({i1, i2, i3});
  auto g = fam(ctx, Family::kGlobal), c = fam(ctx, Family::kCommon);
  bool ok = sorted(all_repairs(ctx.graph())) == all && g == all && c == sorted({i1, i2});
  return {3, "Common strictly inside global", ok,
          "|Rep|=3, |G|=" + std::to_string(g.size()) + ", |C|=" + std::to_string(c.size())};
}

struct CorpusStats {
  std::size_t contexts = 0, oracle_disagreements = 0;
  std::size_t p1 = 0, p2 = 0, p3 = 0, p4 = 0, extensions = 0;
  std::size_t hierarchy = 0, single_key = 0, single_key_ctx = 0, single_fd = 0, single_fd_ctx = 0;
  std::map<RandomShape, std::size_t> shapes;
  double oracle_seconds = 0, property_seconds = 0;
  std::vector<std::string> first_failures;

  void note(const std::string& what, std::uint64_t seed) {
    if (first_failures.size() < 5) first_failures.push_back(what + " @seed " + std::to_string(seed));
  }
};

CorpusStats run_corpus() {
  CorpusStats st;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    auto prof = corpus_profile(seed);
    auto gen = random_ctx(seed, prof);
    const auto& ctx = gen.ctx;
    if (ctx.instance().size() > kCorpusMaxFacts) continue;
    ++st.contexts;
    ++st.shapes[prof.shape];

    auto t = Clock::now();
    auto nv = oracle::analyze(ctx);
    auto all = oracle::to_masks(all_repair_sets(ctx.graph()));
    auto g = fam_masks(ctx, Family::kGlobal), p = fam_masks(ctx, Family::kPareto), c = fam_masks(ctx, Family::kCommon);
    bool agree = all == nv.repairs && g == oracle::grep(nv) && p == oracle::prep(nv) && c == oracle::crep(ctx, nv);
    for (auto r : nv.repairs) {
      auto rs = oracle::to_set(r, nv.n);
      bool in_g = std::binary_search(g.begin(), g.end(), r), in_p = std::binary_search(p.begin(), p.end(), r),
           in_c = std::binary_search(c.begin(), c.end(), r);
      agree = agree && is_preferred(ctx, Family::kGlobal, rs) == in_g &&
              is_preferred(ctx, Family::kPareto, rs) == in_p && is_preferred(ctx, Family::kCommon, rs) == in_c;
    }
    if (!agree) {
      ++st.oracle_disagreements;
      st.note("oracle", seed);
    }
    st.oracle_seconds += since(t);

    t = Clock::now();
    // P1
    if (g.empty() || p.empty() || c.empty()) {
      ++st.p1;
      st.note("P1", seed);
    }
    // P3
    auto empty = ctx.with_priority(Priority(ctx.graph_ptr()));
    if (fam_masks(empty, Family::kGlobal) != all || fam_masks(empty, Family::kPareto) != all ||
        fam_masks(empty, Family::kCommon) != all) {
      ++st.p3;
      st.note("P3", seed);
    }
    // P2 and P4
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < kExtensionsPerContext; ++i) {
      std::uniform_real_distribution<double> dens(0.0, 1.0);
      auto ext = ctx.with_priority(random_extension(ctx.priority(), rng, dens(rng)));
      ++st.extensions;
      auto eg = fam_masks(ext, Family::kGlobal), ep = fam_masks(ext, Family::kPareto),
           ec = fam_masks(ext, Family::kCommon);
      if (!subset(eg, g) || !subset(ep, p) || !subset(ec, c)) {
        ++st.p2;
        st.note("P2", seed);
      }
      if (is_total(ext.priority()) && (eg.size() != 1 || ep != eg || ec != eg)) {
        ++st.p4;
        st.note("P4", seed);
      }
    }
    std::mt19937_64 trng(seed);
    auto total = ctx.with_priority(random_extension(ctx.priority(), trng, 1.0));
    auto tg = fam_masks(total, Family::kGlobal);
    if (tg.size() != 1 || fam_masks(total, Family::kPareto) != tg || fam_masks(total, Family::kCommon) != tg) {
      ++st.p4;
      st.note("P4", seed);
    }
    // hierarchy and collapse
    if (!subset(c, g) || !subset(g, p)) {
      ++st.hierarchy;
      st.note("hierarchy", seed);
    }
    if (prof.shape == RandomShape::kSingleKey) {
      ++st.single_key_ctx;
      if (p != g || g != c) {
        ++st.single_key;
        st.note("single-key collapse", seed);
      }
    }
    if (prof.shape == RandomShape::kSingleFd) {
      ++st.single_fd_ctx;
      if (g != c) ++st.single_fd;
    }
    st.property_seconds += since(t);
  }
  return st;
}

std::string failures(const CorpusStats& st) {
  std::string s;
  for (const auto& f : st.first_failures) s += "; " + f;
  return s;
}

Line criterion4(const CorpusStats& st) {
  std::ostringstream d;
  d << st.contexts << " contexts (";
  bool first = true;
  for (auto [shape, n] : st.shapes) {
    d << (first ? "" : ", ") << to_string(shape) << " " << n;
    first = false;
  }
  d << "), " << st.oracle_disagreements << " disagreements with grep/prep/crep, " << fmt(st.oracle_seconds)
    << " (limit " << fmt(kOracleSuiteSeconds) << ")" << failures(st);
  return {4, "Oracle equivalence", st.contexts >= 500 && st.oracle_disagreements == 0 &&
                                        st.oracle_seconds + st.property_seconds < kOracleSuiteSeconds,
          d.str()};
}

Line criterion5(const CorpusStats& st) {
  std::ostringstream d;
  d << "violations P1=" << st.p1 << " P2=" << st.p2 << " P3=" << st.p3 << " P4=" << st.p4 << " over "
    << st.extensions << " priority extensions, " << fmt(st.property_seconds);
  return {5, "Framework properties P1-P4", st.p1 + st.p2 + st.p3 + st.p4 == 0, d.str()};
}

// R(A,B,C), A -> B: a1, a2 share an (A,B)-cluster, b beats a1, c beats a2.
bool single_fd_counterexample_holds() {
  Schema s;
  s.add_relation({"R", {{"A"}, {"B"}, {"C"}}});
  Fact a1{"R", {1, 1, 1}}, a2{"R", {1, 1, 2}}, b{"R", {1, 2, 0}}, c{"R", {1, 3, 0}};
  ConstraintSet cs;
  cs.fds.push_back({"R", {"A"}, {"B"}});
  std::vector<std::pair<Fact, Fact>> pairs{{b, a1}, {c, a2}};
  auto ctx = Context::make(s, Instance{a1, a2, b, c}, cs, pairs);
  auto nv = oracle::analyze(ctx);
  return oracle::grep(nv) != oracle::crep(ctx, nv);
}

Line criterion6(const CorpusStats& st) {
  std::ostringstream d;
  d << "hierarchy violations " << st.hierarchy << "; single-key collapse violations " << st.single_key << "/"
    << st.single_key_ctx << "; single-FD G=C violations " << st.single_fd << "/" << st.single_fd_ctx;
  Line l{6, "Hierarchy and collapse", st.hierarchy + st.single_key + st.single_fd == 0, d.str()};
  bool counterexample = single_fd_counterexample_holds();
  if (counterexample) {
    d << "; G != C on the 4-fact single-FD instance R(1,1,1),R(1,1,2) < R(1,2,0),R(1,3,0) (oracle-confirmed)";
    l.detail = d.str();
  }
  // G = C under one FD is false in general: only that clause may fail.
  l.known_unattainable = !l.pass && st.hierarchy == 0 && st.single_key == 0 && counterexample;
  return l;
}

Line criterion7() {
  bool ok = true;
  std::ostringstream d;
  std::size_t pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    auto c = counter_instance(n);
    for (std::size_t i = 0; i + 1 < c.chain.size(); ++i, ++pairs) {
      if (!dominates_g(c.chain[i], c.chain[i + 1], c.ctx.priority())) {
        ok = false;
        d << "n=" << n << " step " << i << " not dominating; ";
      }
    }
    if (n <= 4) {
      auto nv = oracle::analyze(c.ctx);
      if (oracle::grep(nv) != std::vector<Mask>{oracle::to_mask(c.ctx.graph().to_set(c.chain.front()))}) {
        ok = false;
        d << "n=" << n << " grep is not {top}; ";
      }
    }
  }
  auto len3 = counter_instance(3).chain.size();
  ok = ok && len3 == 11;
  d << pairs << " consecutive pairs dominate for n=1..6, grep={I'_{2^n-1}} for n<=4, chain length n=3: " << len3;
  return {7, "Counter chain", ok, d.str()};
}

Line criterion8() {
  auto t = Clock::now();
  std::size_t disagreements = 0, checks = 0, fallbacks = 0;
  std::map<Verdict, std::size_t> verdicts;
  std::string first;
  for (std::uint64_t seed = 0; seed < kTractableContexts; ++seed) {
    RandomProfile prof;
    prof.shape = RandomShape::kSingleFd;
    prof.facts = 3 + seed % 10;
    prof.density = 0.2 + 0.2 * static_cast<double>(seed % 4);
    auto g = random_ctx(seed + 50000, prof);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < kQueriesPerContext; ++i) {
      auto q = random_cnf_query(g.ctx, rng);
      for (auto f : {Family::kGlobal, Family::kPareto, Family::kCommon}) {
        auto fast = pcqa_single_fd(g.ctx, f, q);
        auto slow = pcqa_generic(g.ctx, f, q);
        ++checks;
        ++verdicts[slow.verdict];
        fallbacks += fast.used_fallback;
        if (fast.verdict != slow.verdict) {
          if (!disagreements) first = "; first: seed " + std::to_string(seed) + " " + q.to_string();
          ++disagreements;
        }
      }
    }
  }
  double secs = since(t);
  std::ostringstream d;
  d << kTractableContexts << " contexts, " << checks << " comparisons (true " << verdicts[Verdict::kTrue]
    << ", false " << verdicts[Verdict::kFalse] << ", undetermined " << verdicts[Verdict::kUndetermined] << "), "
    << disagreements << " disagreements, " << fallbacks << " fallbacks, " << fmt(secs) << " (limit "
    << fmt(kTractableSeconds) << ")" << first;
  return {8, "Tractable PCQA agreement", disagreements == 0 && secs < kTractableSeconds, d.str()};
}

// Clauses over v variables without complementary literals, as sign vectors.
std::vector<std::vector<int>> all_clauses(int v) {
  std::vector<std::vector<int>> out;
  int total = 1;
  for (int i = 0; i < v; ++i) total *= 3;
  for (int code = 1; code < total; ++code) {
    std::vector<int> c;
    int x = code;
    for (int i = 1; i <= v; ++i, x /= 3) {
      if (x % 3 == 1) c.push_back(i);
      if (x % 3 == 2) c.push_back(-i);
    }
    out.push_back(c);
  }
  return out;
}

// Clause index maps for every variable permutation combined with every sign flip.
std::vector<std::vector<int>> symmetry_tables(int v, const std::vector<std::vector<int>>& clauses) {
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(clauses.size()); ++i) index[clauses[i]] = i;
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> tables;
  do {
    for (int flips = 0; flips < (1 << v); ++flips) {
      std::vector<int> t;
      for (const auto& c : clauses) {
        std::vector<int> m;
        for (int l : c) {
          int var = perm[std::abs(l) - 1];
          bool neg = (l < 0) != static_cast<bool>(flips >> (std::abs(l) - 1) & 1);
          m.push_back(neg ? -var : var);
        }
        std::sort(m.begin(), m.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
        t.push_back(index.at(m));
      }
      tables.push_back(t);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

struct SatSweep {
  std::size_t formulas = 0, disagreements = 0, unsat = 0;
  std::string first;
};

void check_sat(const CnfFormula& f, SatSweep& s) {
  auto g = sat_reduction(f);
  bool unsat = !oracle::satisfiable(f);
  s.unsat += unsat;
  ++s.formulas;
  for (auto fam : {Family::kPareto, Family::kGlobal, Family::kCommon}) {
    bool yes = pcqa_generic(g.ctx, fam, *g.query).verdict == Verdict::kTrue;
    if (yes != unsat) {
      if (!s.disagreements) s.first = "; first: " + f.to_string() + " under " + std::string(to_string(fam));
      ++s.disagreements;
    }
  }
}

// Every CNF up to variable renaming and sign flips, plus a random sample taken literally.
SatSweep sat_sweep() {
  SatSweep s;
  for (int v = 1; v <= kSatMaxVars; ++v) {
    auto clauses = all_clauses(v);
    auto tables = symmetry_tables(v, clauses);
    const int nc = static_cast<int>(clauses.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
      if (!pick.empty()) {
        bool canonical = true;
        std::vector<int> img(pick.size());
        for (const auto& t : tables) {
          for (std::size_t i = 0; i < pick.size(); ++i) img[i] = t[pick[i]];
          std::sort(img.begin(), img.end());
          if (img < pick) {
            canonical = false;
            break;
          }
        }
        if (!canonical) return;  // every extension has a smaller image too
        CnfFormula f{v, {}};
        for (int c : pick) f.clauses.push_back(clauses[c]);
        check_sat(f, s);
      }
      if (static_cast<int>(pick.size()) == kSatMaxClauses) return;
      for (int c = from; c < nc; ++c) {
        pick.push_back(c);
        rec(c + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }
  std::mt19937_64 rng(2024);
  auto clauses = all_clauses(kSatMaxVars);
  std::uniform_int_distribution<std::size_t> pick(0, clauses.size() - 1);
  std::uniform_int_distribution<int> count(1, kSatMaxClauses);
  for (int i = 0; i < 300; ++i) {
    CnfFormula f{kSatMaxVars, {}};
    std::set<std::size_t> chosen;
    for (int k = count(rng); k > 0; --k) chosen.insert(pick(rng));
    for (auto c : chosen) f.clauses.push_back(clauses[c]);
    check_sat(f, s);
  }
  return s;
}

struct QbfSweep {
  std::size_t formulas = 0, disagreements = 0, valid = 0;
  std::string first;
};

void check_qbf(const QbfFormula& f, QbfSweep& s) {
  auto g = qbf_reduction(f);
  bool valid = oracle::valid(f);
  bool yes = pcqa_generic(g.ctx, Family::kGlobal, *g.query).verdict == Verdict::kTrue;
  s.valid += valid;
  ++s.formulas;
  if (yes != valid) {
    if (!s.disagreements) s.first = "; first: " + f.to_string();
    ++s.disagreements;
  }
}

// Exhaustive for up to 3 variables and 2 clauses, seeded sample up to 5 variables.
QbfSweep qbf_sweep() {
  QbfSweep s;
  auto three_literal = [](int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> lits;
    for (int i = 1; i <= v; ++i) {
      lits.push_back(i);
      lits.push_back(-i);
    }
    for (std::size_t a = 0; a < lits.size(); ++a)
      for (std::size_t b = a; b < lits.size(); ++b)
        for (std::size_t c = b; c < lits.size(); ++c) out.push_back({lits[a], lits[b], lits[c]});
    return out;
  };
  for (int total = 1; total <= 3; ++total) {
    auto cl = three_literal(total);
    for (int u = 0; u <= total; ++u) {
      for (std::size_t a = 0; a < cl.size(); ++a) {
        check_qbf(QbfFormula{u, total - u, {total, {cl[a]}}}, s);
        for (std::size_t b = a + 1; b < cl.size(); ++b) check_qbf(QbfFormula{u, total - u, {total, {cl[a], cl[b]}}}, s);
      }
    }
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < kQbfRandomFormulas; ++i) {
    int total = std::uniform_int_distribution<int>(1, kQbfMaxVars)(rng);
    int u = std::uniform_int_distribution<int>(0, total)(rng);
    int k = std::uniform_int_distribution<int>(1, 6)(rng);
    QbfFormula f{u, total - u, {total, {}}};
    std::uniform_int_distribution<int> var(1, total);
    std::bernoulli_distribution neg(0.5);
    for (int c = 0; c < k; ++c) {
      std::vector<int> clause;
      for (int l = 0; l < 3; ++l) clause.push_back(neg(rng) ? -var(rng) : var(rng));
      f.matrix.clauses.push_back(clause);
    }
    check_qbf(f, s);
  }
  return s;
}

Line criterion9() {
  auto t = Clock::now();
  auto sat = sat_sweep();
  auto qbf = qbf_sweep();
  std::ostringstream d;
  d << "SAT: " << sat.formulas << " CNFs (" << sat.unsat << " unsat) x {P,G,C}, " << sat.disagreements
    << " disagreements" << sat.first << "; QBF: " << qbf.formulas << " formulas (" << qbf.valid << " valid), "
    << qbf.disagreements << " disagreements" << qbf.first << "; " << fmt(since(t));
  return {9, "Reduction fidelity", sat.disagreements == 0 && qbf.disagreements == 0, d.str()};
}

// Every result of the winnow-restricted construction, over all valid choice sequences.
std::set<Mask> common_images(const Context& ctx, std::size_t& runs) {
  const auto& hg = ctx.graph();
  std::set<Mask> out;
  std::set<std::pair<Mask, Mask>> seen;
  std::vector<FactId> seq;
  std::function<void(FactSet, FactSet)> go = [&](FactSet remaining, FactSet kept) {
    if (!seen.insert({oracle::to_mask(remaining), oracle::to_mask(kept)}).second) return;
    if (remaining.none()) {
      ++runs;
      out.insert(oracle::to_mask(build_common_repair(ctx, std::span<const FactId>(seq))));
      return;
    }
    auto w = winnow(ctx.priority(), remaining);
    for (auto f = w.find_first(); f != FactSet::npos; f = w.find_next(f)) {
      auto r = remaining;
      r.reset(f);
      auto k = kept;
      if (!hg.blocks(kept, f)) k.set(f);
      seq.push_back(f);
      go(r, k);
      seq.pop_back();
    }
  };
  go(hg.full_set(), hg.empty_set());
  return out;
}

Line criterion10() {
  std::size_t contexts = 0, common_bad = 0, global_bad = 0, pareto_bad = 0, runs = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < kAlgorithmContexts; ++seed) {
    auto prof = corpus_profile(seed);
    prof.facts = 3 + seed % (kAlgorithmMaxFacts - 2);
    auto g = random_ctx(seed + 90000, prof);
    const auto& ctx = g.ctx;
    if (ctx.instance().size() > kAlgorithmMaxFacts) continue;
    ++contexts;
    auto nv = oracle::analyze(ctx);
    auto crep = oracle::crep(ctx, nv), grep = oracle::grep(nv), prep = oracle::prep(nv);
    auto img = common_images(ctx, runs);
    if (std::vector<Mask>(img.begin(), img.end()) != crep) {
      ++common_bad;
      if (first.empty()) first = "; first: common @seed " + std::to_string(seed);
    }
    for (std::uint64_t s = 0; s < 10; ++s) {
      GlobalRepairOptions opts;
      opts.seed = s;
      if (!std::binary_search(grep.begin(), grep.end(), oracle::to_mask(build_global_repair(ctx, opts)))) {
        ++global_bad;
        if (first.empty()) first = "; first: global @seed " + std::to_string(seed);
      }
      if (!std::binary_search(prep.begin(), prep.end(), oracle::to_mask(build_pareto_repair(ctx, s)))) {
        ++pareto_bad;
        if (first.empty()) first = "; first: pareto @seed " + std::to_string(seed);
      }
    }
  }
  std::ostringstream d;
  d << contexts << " contexts, " << runs << " complete choice sequences; mismatches common=" << common_bad
    << " global=" << global_bad << " pareto=" << pareto_bad << first;
  return {10, "Algorithm soundness and completeness", common_bad + global_bad + pareto_bad == 0, d.str()};
}

}  // namespace

int main() {
  std::vector<std::function<std::vector<Line>()>> steps{
      [] { return std::vector{criterion1()}; },
      [] { return std::vector{criterion2()}; },
      [] { return std::vector{criterion3()}; },
      [] {
        auto st = run_corpus();
        return std::vector{criterion4(st), criterion5(st), criterion6(st)};
      },
      [] { return std::vector{criterion7()}; },
      [] { return std::vector{criterion8()}; },
      [] { return std::vector{criterion9()}; },
      [] { return std::vector{criterion10()}; },
  };
  int unexpected = 0, passed = 0;
  for (const auto& step : steps) {
    std::vector<Line> lines;
    try {
      lines = step();
    } catch (const std::exception& e) {
      std::cout << "FAIL  (exception) " << e.what() << std::endl;
      ++unexpected;
      continue;
    }
    for (const auto& l : lines) {
      std::cout << (l.pass ? "PASS" : "FAIL") << "  [" << l.id << "] " << l.title << ": " << l.detail
                << (l.known_unattainable ? "  (known unattainable: G = C does not hold for one FD in general)" : "")
                << std::endl;
      passed += l.pass;
      if (!l.pass && !l.known_unattainable) ++unexpected;
    }
  }
  std::cout << passed << "/10 criteria pass";
  if (passed < 10) std::cout << ", " << unexpected << " unexpected failure(s)";
  std::cout << std::endl;
  return unexpected;
}
