#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace mindouble;

namespace {

Instance complete(int n, int k) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Instance::create(n, k, e);
}

DoublePattern pat(std::vector<int> b) { return DoublePattern(std::move(b)); }

}  // namespace

TEST(Master, NoCuts) {
  auto p = mp1_solve(6, 2, base_fixings(fixtures::six_vertex()), {});
  ASSERT_TRUE(p);
  EXPECT_EQ(p->bits, (std::vector<int>{0, 0, 1, 0, 0, 0}));
}

TEST(Master, TwoCutsLexicographicTie) {
  auto p = mp1_solve(6, 2, base_fixings(fixtures::six_vertex()),
                     {BendersCut{{3}}, BendersCut{{4, 5}}});
  ASSERT_TRUE(p);
  EXPECT_EQ(p->bits, (std::vector<int>{0, 0, 1, 1, 0, 1}));
}

TEST(Master, CutWithTailFixing) {
  PresolveResult f = base_fixings(fixtures::six_vertex());
  f.fixed_zero.insert(5);
  auto p = mp1_solve(6, 2, f, {BendersCut{{4}}});
  ASSERT_TRUE(p);
  EXPECT_EQ(p->bits, (std::vector<int>{0, 0, 1, 0, 1, 0}));
}

TEST(Master, ContradictionIsAbsent) {
  PresolveResult f = base_fixings(fixtures::six_vertex());
  f.fixed_zero.insert({3, 4, 5});
  EXPECT_FALSE(mp1_solve(6, 2, f, {BendersCut{{4, 5}}}));
}

// The master against exhaustive enumeration of the free bits.
TEST(Master, MatchesExhaustive) {
  const int n = 8, k = 2;
  PresolveResult f;
  f.fixed_zero = {0, 1, 7};
  f.fixed_one = {2};
  f.cover_inequalities = {{3, 4}};
  std::vector<BendersCut> cuts = {{{3, 5}}, {{4, 6}}, {{5, 6, 7}}};
  std::vector<DoublePattern> nogoods = {pat({0, 0, 1, 0, 1, 1, 0, 0})};
  std::optional<DoublePattern> best;
  for (int mask = 0; mask < (1 << 5); ++mask) {
    std::vector<int> b = {0, 0, 1, 0, 0, 0, 0, 0};
    for (int i = 0; i < 5; ++i) b[3 + i] = mask >> (4 - i) & 1;
    DoublePattern d(b);
    if (!f.satisfied_by(d)) continue;
    bool ok = std::find(nogoods.begin(), nogoods.end(), d) == nogoods.end();
    for (const auto& c : cuts) ok = ok && c.satisfied_by(d);
    if (!ok) continue;
    if (!best || d.count() < best->count() ||
        (d.count() == best->count() && d.bits < best->bits)) {
      best = d;
    }
  }
  auto got = mp1_solve(n, k, f, cuts, nogoods);
  ASSERT_TRUE(got && best);
  EXPECT_EQ(got->bits, best->bits);
}

TEST(Sub, SixVertexPatterns) {
  Instance g = fixtures::six_vertex();
  auto o = sp1_solve(g, pat({0, 0, 1, 0, 0, 1}));
  ASSERT_TRUE(o);
  OrderReport rep = check_order(g, *o);
  EXPECT_TRUE(rep.is_dvop);
  EXPECT_EQ(rep.doubles.bits[3] + rep.doubles.bits[4], 0);
  EXPECT_FALSE(sp1_solve(g, pat({0, 0, 1, 0, 0, 0})));
  EXPECT_EQ(check_order(g, VertexOrder({3, 5, 2, 1, 0, 4})).doubles.bits,
            (std::vector<int>{0, 0, 1, 0, 0, 1}));
}

TEST(Sub, CompleteGraph) {
  auto o = sp1_solve(complete(5, 2), pat({0, 0, 1, 0, 0}));
  ASSERT_TRUE(o);
  EXPECT_TRUE(check_order(complete(5, 2), *o).is_dvop);
}

TEST(Iis, MinimalOnSixVertex) {
  Instance g = fixtures::six_vertex();
  DoublePattern p = pat({0, 0, 1, 0, 0, 0});
  BendersCut cut = find_iis(g, p);
  ASSERT_FALSE(cut.ranks.empty());
  EXPECT_FALSE(cut.satisfied_by(p));
  for (int r : cut.ranks) {
    EXPECT_GE(r, 3);
    // relax only the cut ranks other than r: still infeasible, then
    // relaxing r as well restores feasibility
    DoublePattern q = pat({0, 0, 1, 1, 1, 1});
    for (int s : cut.ranks) q.bits[s] = 0;
    EXPECT_FALSE(sp1_solve(g, q));
    q.bits[r] = 1;
    EXPECT_TRUE(sp1_solve(g, q)) << "rank " << r;
  }
}

TEST(Iis, RejectsFeasiblePattern) {
  EXPECT_THROW(find_iis(fixtures::six_vertex(), pat({0, 0, 1, 0, 0, 1})),
               std::logic_error);
}

TEST(Naive, WorkedExamples) {
  Solution a = solve_naive(fixtures::six_vertex());
  EXPECT_EQ(a.status, Status::kOptimal);
  EXPECT_EQ(a.objective, 2u);
  Solution b = solve_naive(fixtures::witness_graph());
  EXPECT_EQ(b.status, Status::kOptimal);
  EXPECT_EQ(b.objective, 1u);
  EXPECT_EQ(solve_naive(fixtures::six_vertex(3)).status, Status::kInfeasible);
  Instance p5 = Instance::create(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(solve_naive(p5).status, Status::kInfeasible);
}

TEST(Naive, StatsCountCuts) {
  auto out = solve_naive_traced(fixtures::six_vertex());
  EXPECT_EQ(out.solution.stats.cuts, static_cast<int>(out.log.size()));
  EXPECT_GE(out.solution.stats.iterations, 1);
}

TEST(Naive, NogoodVariantAgrees) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Instance g = gen_random(8, 0.55, 2, seed);
    NaiveOptions weak;
    weak.nogood = true;
    Solution a = solve_naive(g);
    Solution b = solve_naive(g, weak);
    EXPECT_EQ(a.status, b.status);
    if (a.status == Status::kOptimal) EXPECT_EQ(a.objective, b.objective);
  }
}

// Every cut is violated by its pattern and kept by each optimal pattern.
TEST(Naive, CutsSoundAgainstBruteForce) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 7 + static_cast<int>(seed % 3);
    int k = seed % 3 == 0 ? 3 : 2;
    Instance g = gen_random(n, 0.5, k, seed);
    auto b = fixtures::brute_force(g);
    for (bool pre : {true, false}) {
      NaiveOptions o;
      o.use_presolve = pre;
      auto out = solve_naive_traced(g, o);
      if (b.valid == 0) {
        EXPECT_EQ(out.solution.status, Status::kInfeasible);
        continue;
      }
      ASSERT_EQ(out.solution.status, Status::kOptimal);
      EXPECT_EQ(out.solution.objective, static_cast<std::uint64_t>(b.min_double))
          << "seed " << seed;
      for (const auto& rec : out.log) {
        EXPECT_FALSE(rec.cut.satisfied_by(rec.pattern));
        for (const auto& perm : b.double_optimal) {
          DoublePattern opt(fixtures::evaluate(g, perm).pattern);
          EXPECT_TRUE(rec.cut.satisfied_by(opt)) << "seed " << seed;
        }
      }
    }
  }
}
