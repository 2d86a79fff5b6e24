#include <gtest/gtest.h>

#include "prefrep/pcqa.hpp"
#include "support.hpp"

using namespace prefrep;
using namespace prefrep::support;

class SingleFdAgreement : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SingleFdAgreement, MatchesGeneric) {
  RandomProfile prof;
  prof.shape = GetParam() % 2 ? RandomShape::kSingleFd : RandomShape::kSingleKey;
  prof.facts = 3 + GetParam() % 10;
  auto g = random_ctx(GetParam() + 1000, prof);
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 4; ++i) {
    auto q = random_cnf_query(g.ctx, rng);
    for (auto f : {Family::kAll, Family::kGlobal, Family::kPareto, Family::kCommon}) {
      auto fast = pcqa_single_fd(g.ctx, f, q);
      auto slow = pcqa_generic(g.ctx, f, q);
      EXPECT_EQ(fast.verdict, slow.verdict) << to_string(f) << " " << q.to_string();
      EXPECT_FALSE(fast.used_fallback);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SingleFdAgreement, ::testing::Range<std::uint64_t>(0, 80));

namespace {

// R(A,B,C), A -> B. X-cluster 1: {R(1,1,0), R(1,1,1)} ≻ R(1,2,0). X-cluster 2: R(2,0,0) vs R(2,1,0), unordered.
Context clusters() {
  Schema s;
  s.add_relation({"R", {{"A"}, {"B"}, {"C"}}});
  ConstraintSet cs;
  cs.fds.push_back({"R", {"A"}, {"B"}});
  Instance inst{Fact{"R", {1, 1, 0}}, Fact{"R", {1, 1, 1}}, Fact{"R", {1, 2, 0}},
                Fact{"R", {2, 0, 0}}, Fact{"R", {2, 1, 0}}};
  std::vector<std::pair<Fact, Fact>> pairs{{Fact{"R", {1, 1, 0}}, Fact{"R", {1, 2, 0}}},
                                           {Fact{"R", {1, 1, 1}}, Fact{"R", {1, 2, 0}}}};
  return Context::make(s, inst, cs, pairs);
}

Literal pos(std::initializer_list<long long> t) {
  Fact f{"R", {}};
  for (auto v : t) f.tuple.emplace_back(v);
  return {f, true};
}
Literal neg(std::initializer_list<long long> t) {
  auto l = pos(t);
  l.positive = false;
  return l;
}

}  // namespace

TEST(ConjunctTest, EachOutcome) {
  auto ctx = clusters();
  auto idx = build_cluster_index(ctx);
  auto g = Family::kGlobal;
  // A clause is falsified when its negative literals are in the repair and positive ones are not.
  EXPECT_EQ(test_conjunct(ctx, idx, g, {neg({9, 9, 9})}), ConjunctTest::kMissingFact);
  EXPECT_EQ(test_conjunct(ctx, idx, g, {neg({2, 0, 0}), neg({2, 1, 0})}), ConjunctTest::kRequiredConflict);
  EXPECT_EQ(test_conjunct(ctx, idx, g, {neg({1, 1, 0}), pos({1, 1, 1})}), ConjunctTest::kSharedCluster);
  EXPECT_EQ(test_conjunct(ctx, idx, g, {neg({1, 2, 0})}), ConjunctTest::kNotPreferred);
  EXPECT_EQ(test_conjunct(ctx, idx, g, {pos({2, 0, 0}), pos({2, 1, 0})}), ConjunctTest::kNoAlternative);
  EXPECT_EQ(test_conjunct(ctx, idx, g, {pos({2, 0, 0})}), ConjunctTest::kSatisfiable);
  // Under ALL the dominated cluster is fine.
  EXPECT_EQ(test_conjunct(ctx, idx, Family::kAll, {neg({1, 2, 0})}), ConjunctTest::kSatisfiable);
}

TEST(PcqaTest, VerdictsAndWitnesses) {
  auto ctx = clusters();
  auto q = Query::make(ctx.schema(), Formula::atom(Atom{"R", {Value(1LL), Value(1LL), Value(0LL)}}));
  auto fast = pcqa_single_fd(ctx, Family::kGlobal, q);
  EXPECT_EQ(fast.verdict, Verdict::kTrue);
  auto slow = pcqa_generic(ctx, Family::kGlobal, q);
  EXPECT_EQ(slow.verdict, Verdict::kTrue);
  EXPECT_EQ(slow.preferred_count, 2u);
  EXPECT_TRUE(slow.true_witness.has_value());
  EXPECT_FALSE(slow.false_witness.has_value());
  EXPECT_EQ(pcqa_generic(ctx, Family::kAll, q).verdict, Verdict::kUndetermined);
}

TEST(PcqaTest, RejectsUnsupportedShapes) {
  auto ctx = load_fixture("example2");
  auto q = Query::make(ctx.schema(), Formula::truth(true));
  EXPECT_THROW(pcqa_single_fd(ctx, Family::kGlobal, q), UnsupportedShapeError);
  auto e1 = load_fixture("example1");
  EXPECT_THROW(pcqa_single_fd(e1, Family::kGlobal, load_query(e1, "example1", "q0")), UnsupportedShapeError);
}

TEST(PcqaTest, NegationOfCnf) {
  Cnf cnf{{pos({1, 1, 0}), pos({2, 0, 0})}, {neg({1, 2, 0})}};
  auto dual = negate_cnf(cnf, 100);
  ASSERT_TRUE(dual.has_value());
  EXPECT_EQ(dual->size(), 2u);
  EXPECT_FALSE(negate_cnf(Cnf(13, Clause{pos({1, 1, 0}), pos({2, 0, 0})}), 4096).has_value());
}
