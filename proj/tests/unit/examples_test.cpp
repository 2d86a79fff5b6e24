#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prefrep/pcqa.hpp"
#include "support.hpp"

using namespace prefrep;
using namespace prefrep::support;

namespace {

std::vector<Instance> family(const Context& ctx, Family f) { return sorted(preferred_repairs(ctx, f)); }

}  // namespace

class ManagersTest : public ::testing::Test {
 protected:
  Context ctx = load_fixture("example2");
  Instance i1 = facts(ctx.schema(), {"Mgr(Bob,70000,'R&D')", "Mgr(Mary,50000,PR)", "Mgr(Ken,60000,IT)"});
  Instance i2 = facts(ctx.schema(), {"Mgr(Bob,70000,'R&D')", "Mgr(Mary,40000,IT)", "Mgr(Ken,50000,PR)"});
  Instance i3 = facts(ctx.schema(), {"Mgr(Bob,60000,AD)", "Mgr(Mary,40000,IT)", "Mgr(Ken,50000,PR)"});
  Instance i4 = facts(ctx.schema(), {"Mgr(Bob,60000,AD)", "Mgr(Mary,50000,PR)", "Mgr(Ken,60000,IT)"});
};

TEST_F(ManagersTest, FiveConflictsFourRepairs) {
  EXPECT_EQ(ctx.graph().edges().size(), 5u);
  EXPECT_EQ(ctx.priority().size(), 3u);
  EXPECT_EQ(sorted(all_repairs(ctx.graph())), sorted({i1, i2, i3, i4}));
}

TEST_F(ManagersTest, Families) {
  EXPECT_EQ(family(ctx, Family::kGlobal), std::vector<Instance>{i1});
  EXPECT_EQ(family(ctx, Family::kPareto), sorted({i1, i2}));
  EXPECT_EQ(family(ctx, Family::kCommon), std::vector<Instance>{i1});
}

TEST_F(ManagersTest, Dominance) {
  EXPECT_TRUE(dominates_g(i1, i2, ctx.priority()));
  EXPECT_FALSE(dominates_g(i2, i1, ctx.priority()));
  EXPECT_FALSE(dominates_p(i1, i2, ctx.priority()));
  // no single fact of i1 beats all of i3∖i1; i3 falls to i2 instead
  EXPECT_FALSE(dominates_p(i1, i3, ctx.priority()));
  EXPECT_TRUE(dominates_p(i2, i3, ctx.priority()));
  EXPECT_THROW(dominates_g(i1, i1, ctx.priority()), ArgumentError);
}

TEST_F(ManagersTest, Builders) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GlobalRepairOptions opts;
    opts.seed = seed;
    EXPECT_EQ(ctx.graph().to_instance(build_global_repair(ctx, opts)), i1);
    auto p = ctx.graph().to_instance(build_pareto_repair(ctx, seed));
    EXPECT_TRUE(p == i1 || p == i2);
  }
  auto choices = facts(ctx.schema(), {"Mgr(Bob,70000,'R&D')", "Mgr(Mary,50000,PR)", "Mgr(Ken,60000,IT)"});
  std::vector<Fact> seq(choices.begin(), choices.end());
  EXPECT_EQ(build_common_repair(ctx, std::span<const Fact>(seq)), i1);
}

TEST(EmployeesTest, RepairsFamiliesAndAnswer) {
  auto ctx = load_fixture("example1");
  EXPECT_EQ(ctx.graph().edges().size(), 4u);
  auto r1 = facts(ctx.schema(), {"Emp(John,80000,IT)"});
  auto r2 = facts(ctx.schema(), {"Emp(John,50000,IT)", "Mgr(Mary,70000,IT)"});
  auto r3 = facts(ctx.schema(), {"Emp(John,40000,IT)", "Mgr(Mary,70000,IT)"});
  EXPECT_EQ(sorted(all_repairs(ctx.graph())), sorted({r1, r2, r3}));
  EXPECT_EQ(family(ctx, Family::kGlobal), sorted({r2, r3}));
  EXPECT_FALSE(is_pareto_optimal(ctx, ctx.graph().to_set(r1)));

  auto q0 = load_query(ctx, "example1", "q0");
  EXPECT_TRUE(eval_query(ctx.instance(), q0));
  EXPECT_EQ(pcqa_generic(ctx, Family::kGlobal, q0).verdict, Verdict::kFalse);
  auto bare = load_fixture("example1", false);
  EXPECT_EQ(pcqa_generic(bare, Family::kAll, q0).verdict, Verdict::kUndetermined);
}

TEST(EmployeesTest, GreedyRunFromTopSalary) {
  auto ctx = load_fixture("example1", false);
  auto first = facts(ctx.schema(), {"Emp(John,80000,IT)"});
  std::vector<Fact> seq(first.begin(), first.end());
  EXPECT_EQ(build_common_repair(ctx, std::span<const Fact>(seq)), first);
}

TEST(HierarchyTest, CommonStrictlyInsideGlobal) {
  auto ctx = load_fixture("hierarchy");
  auto i1 = facts(ctx.schema(), {"R(1,1,1,1)"});
  auto i2 = facts(ctx.schema(), {"R(1,2,1,2)"});
  auto i3 = facts(ctx.schema(), {"R(1,3,0,0)", "R(0,0,1,3)"});
  EXPECT_EQ(sorted(all_repairs(ctx.graph())), sorted({i1, i2, i3}));
  EXPECT_EQ(family(ctx, Family::kGlobal), sorted({i1, i2, i3}));
  EXPECT_EQ(family(ctx, Family::kCommon), sorted({i1, i2}));
  EXPECT_FALSE(is_total(ctx.priority()));

  auto first = facts(ctx.schema(), {"R(1,1,1,1)"});
  std::vector<Fact> seq(first.begin(), first.end());
  EXPECT_EQ(build_common_repair(ctx, std::span<const Fact>(seq)), i1);
}

TEST(HierarchyTest, OraclesAgree) {
  for (const char* name : {"example1", "example2", "hierarchy"}) {
    auto ctx = load_fixture(name);
    auto nv = oracle::analyze(ctx);
    EXPECT_EQ(nv.repairs, oracle::to_masks(all_repair_sets(ctx.graph()))) << name;
    EXPECT_EQ(oracle::grep(nv), oracle::to_masks(preferred_repair_sets(ctx, Family::kGlobal))) << name;
    EXPECT_EQ(oracle::prep(nv), oracle::to_masks(preferred_repair_sets(ctx, Family::kPareto))) << name;
    EXPECT_EQ(oracle::crep(ctx, nv), oracle::to_masks(preferred_repair_sets(ctx, Family::kCommon))) << name;
  }
}
