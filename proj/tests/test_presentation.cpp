#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "gentle/presentation.hpp"
#include "test_support.hpp"

using namespace gentle;
using gentle::testing::load;

namespace {

Quiver one_vertex_two_loops(const std::string& x, const std::string& y) {
  return Quiver{{"v"}, {{x, "v", "v"}, {y, "v", "v"}}};
}

}  // namespace

TEST(Presentation, LoopsWithMixedRelationsAreGentle) {
  auto [pres, violations] = check_presentation(one_vertex_two_loops("x", "y"), {{"x", "y"}, {"y", "x"}});
  ASSERT_TRUE(pres.has_value());
  EXPECT_TRUE(violations.empty());
}

TEST(Presentation, LoopsWithSquareRelationsAreGentle) {
  auto [pres, violations] = check_presentation(one_vertex_two_loops("a", "b"), {{"a", "a"}, {"b", "b"}});
  ASSERT_TRUE(pres.has_value());
}

TEST(Presentation, ThirdRelationViolatesConditionThreeAtA) {
  auto [pres, violations] = check_presentation(one_vertex_two_loops("a", "b"), {{"a", "a"}, {"b", "b"}, {"a", "b"}});
  EXPECT_FALSE(pres.has_value());
  ASSERT_FALSE(violations.empty());
  bool at_a = false;
  for (const Violation& v : violations)
    if (v.kind == ErrorKind::GentleCondition3Violated && v.location.find('a') != std::string::npos) at_a = true;
  EXPECT_TRUE(at_a);
  EXPECT_GENTLE_ERROR(validate_presentation(one_vertex_two_loops("a", "b"), {{"a", "a"}, {"b", "b"}, {"a", "b"}}),
                      ErrorKind::GentleCondition3Violated);
}

TEST(Presentation, NonComposableRelationRejected) {
  Quiver q{{"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}};
  EXPECT_GENTLE_ERROR(validate_presentation(q, {{"a", "b"}}), ErrorKind::NonComposableRelation);
}

TEST(Presentation, ThreeArrowsIntoAVertexRejected) {
  Quiver q{{"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "1", "2"}}};
  EXPECT_GENTLE_ERROR(validate_presentation(q, {}), ErrorKind::TooManyArrowsAtVertex);
}

TEST(Presentation, TwoFreeContinuationsViolateConditionTwo) {
  // Both loops compose freely with each other and themselves.
  EXPECT_GENTLE_ERROR(validate_presentation(one_vertex_two_loops("x", "y"), {}), ErrorKind::GentleCondition2Violated);
}

TEST(Presentation, ReportsEveryViolation) {
  Quiver q{{"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "1", "2"}, {"x", "1", "1"}, {"y", "1", "1"}}};
  auto [pres, violations] = check_presentation(q, {});
  EXPECT_FALSE(pres.has_value());
  EXPECT_GE(violations.size(), 2u);
}

TEST(Presentation, ParseAndRenderRoundtrip) {
  Presentation pres = load("pres1.gp");
  Presentation again = parse_presentation(render_presentation(pres));
  EXPECT_EQ(render_presentation(again), render_presentation(pres));
  EXPECT_EQ(pres.num_vertices(), 1);
  EXPECT_EQ(pres.num_arrows(), 2);
  EXPECT_EQ(pres.relations().size(), 2u);
}

TEST(Presentation, ParseErrors) {
  EXPECT_GENTLE_ERROR(parse_presentation("vertex 1\narrow a 1 -> 1\n"), ErrorKind::Parse);
  EXPECT_GENTLE_ERROR(parse_presentation("vertex 1\narrow a: 1 -> 2\n"), ErrorKind::Parse);
  EXPECT_GENTLE_ERROR(parse_presentation("bogus line\n"), ErrorKind::Parse);
}

TEST(PathInP, PowersOfXAreNonzeroInPres1) {
  Presentation pres = load("pres1.gp");
  auto p = path_in_P(pres, "xxx");
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(render_path(pres, *p), "x^3");
  EXPECT_FALSE(path_in_P(pres, "xy").has_value());
}

TEST(PathInP, AlternatingPathsInPres2) {
  Presentation pres = load("pres2.gp");
  auto p = path_in_P(pres, "ab");
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->length(), 2u);
  EXPECT_FALSE(path_in_P(pres, "aa").has_value());
}

TEST(PathInP, NotChainedThrows) {
  Presentation pres = load("a3.gp");
  EXPECT_GENTLE_ERROR(path_in_P(pres, "ab"), ErrorKind::NotChained);
}

TEST(PathInP, FirstAndLastArrows) {
  Presentation pres2 = load("pres2.gp");
  const int a = *pres2.find_arrow("a"), b = *pres2.find_arrow("b");
  Path ab = *path_in_P(pres2, "ab");
  EXPECT_EQ(first_arrow(ab), b);
  EXPECT_EQ(last_arrow(ab), a);
  Path aba = *path_in_P(pres2, "aba");
  EXPECT_EQ(first_arrow(aba), a);
  EXPECT_EQ(last_arrow(aba), a);
  Presentation pres1 = load("pres1.gp");
  Path x3 = *path_in_P(pres1, "xxx");
  EXPECT_EQ(first_arrow(x3), *pres1.find_arrow("x"));
  EXPECT_EQ(last_arrow(x3), *pres1.find_arrow("x"));
}

TEST(PathInP, SubstringScanMatchesIncrementalCheck) {
  for (const char* name : {"pres1.gp", "pres2.gp", "cycle4.gp", "bandalg.gp"}) {
    Presentation pres = load(name);
    for (const Path& p : enumerate_P(pres, 5).paths) {
      for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k)
        EXPECT_FALSE(pres.is_relation(p.arrows[k], p.arrows[k + 1])) << name;
      EXPECT_TRUE(is_nonzero_path(pres, p.arrows));
    }
  }
}

TEST(PathInP, FactorizationRecomposes) {
  Presentation pres = load("pres2.gp");
  for (const Path& p : enumerate_P(pres, 6).paths) {
    if (p.length() < 2) continue;
    Path rest{-1, std::vector<int>(p.arrows.begin() + 1, p.arrows.end())};
    rest.vertex = path_tail(pres, rest);
    auto back = compose(pres, arrow_path(pres, last_arrow(p)), rest);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, p);
  }
}

TEST(PrimitiveCycles, Examples) {
  Presentation pres1 = load("pres1.gp");
  std::set<std::string> c1;
  for (const Path& p : primitive_cycles(pres1)) c1.insert(render_path(pres1, p));
  EXPECT_EQ(c1, (std::set<std::string>{"x", "y"}));
  Presentation pres2 = load("pres2.gp");
  std::set<std::string> c2;
  for (const Path& p : primitive_cycles(pres2)) c2.insert(render_path(pres2, p, PathStyle::Joined));
  EXPECT_EQ(c2, (std::set<std::string>{"a*b", "b*a"}));
  EXPECT_TRUE(primitive_cycles(load("a3.gp")).empty());
  EXPECT_TRUE(primitive_cycles(load("a3rel.gp")).empty());
}

TEST(EnumerateP, Examples) {
  Presentation a3rel = load("a3rel.gp");
  auto e = enumerate_P(a3rel, 2);
  EXPECT_TRUE(e.finite);
  std::set<std::string> names;
  for (const Path& p : e.paths) names.insert(render_path(a3rel, p));
  EXPECT_EQ(names, (std::set<std::string>{"a", "b"}));

  Presentation pres1 = load("pres1.gp");
  auto e1 = enumerate_P(pres1, 3);
  EXPECT_FALSE(e1.finite);
  std::set<std::string> n1;
  for (const Path& p : e1.paths) n1.insert(render_path(pres1, p));
  EXPECT_EQ(n1, (std::set<std::string>{"x", "x^2", "x^3", "y", "y^2", "y^3"}));

  Presentation pres2 = load("pres2.gp");
  auto e2 = enumerate_P(pres2, 2);
  EXPECT_FALSE(e2.finite);
  std::set<std::string> n2;
  for (const Path& p : e2.paths) n2.insert(render_path(pres2, p, PathStyle::Joined));
  EXPECT_EQ(n2, (std::set<std::string>{"a", "b", "a*b", "b*a"}));
}

TEST(EnumerateP, FiniteEnumerationIsClosedUnderComposition) {
  for (const char* name : {"a3rel.gp", "a3.gp", "cycle4.gp", "bandalg.gp"}) {
    Presentation pres = load(name);
    auto e = enumerate_P(pres, 10);
    ASSERT_TRUE(e.finite) << name;
    std::set<std::vector<int>> all;
    for (const Path& p : e.paths) all.insert(p.arrows);
    for (const Path& p : e.paths)
      for (const Path& q : e.paths) {
        if (path_tail(pres, p) != path_head(pres, q)) continue;
        auto pq = compose(pres, p, q);
        if (pq) EXPECT_TRUE(all.count(pq->arrows)) << name;
      }
    // Independent walker: every chained arrow sequence avoiding relations of length <= 6.
    std::set<std::vector<int>> walked;
    std::function<void(std::vector<int>&)> walk = [&](std::vector<int>& arrows) {
      walked.insert(arrows);
      if (arrows.size() >= 6) return;
      for (int x = 0; x < pres.num_arrows(); ++x) {
        if (!pres.chained(x, arrows.front()) || pres.is_relation(x, arrows.front())) continue;
        arrows.insert(arrows.begin(), x);
        walk(arrows);
        arrows.erase(arrows.begin());
      }
    };
    for (int a = 0; a < pres.num_arrows(); ++a) {
      std::vector<int> start{a};
      walk(start);
    }
    EXPECT_EQ(walked, all) << name;
  }
}

TEST(EnumerateP, ParsePathForms) {
  Presentation pres = load("pres1.gp");
  EXPECT_EQ(parse_path(pres, "x^3"), parse_path(pres, "x*x*x"));
  EXPECT_EQ(parse_path(pres, "xxx"), parse_path(pres, "x^3"));
  EXPECT_TRUE(parse_path(pres, "e_1").trivial());
  EXPECT_EQ(render_path(pres, parse_path(pres, "x^2"), PathStyle::Joined), "x*x");
}
