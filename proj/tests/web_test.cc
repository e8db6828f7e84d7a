#include <gtest/gtest.h>

#include "lrscatter/oracles.h"
#include "lrscatter/scattering.h"
#include "lrscatter/web.h"

namespace lrscatter {
namespace {

using P = BaricentricPoint;

std::vector<int> Labels(const DominantWeight& w) {
  std::vector<int> out;
  for (int k = 1; k < w.rank(); ++k) out.push_back(w.Label(k));
  return out;
}

BzPattern LinePattern(int rank, LineType type, int constant2) {
  WebDiagram web;
  web.AddSegment({type, constant2, std::nullopt, std::nullopt, 1});
  BzPattern f(rank);
  for (const auto& p : f.points()) f.Set(p, web.ValueAt(p));
  return f;
}

TEST(BaricentricPoint, Basics) {
  EXPECT_THROW(P::Doubled(1, 1, 1), std::invalid_argument);
  EXPECT_EQ(ToString(P::Doubled(-3, 1, 2)), "(-3/2,1/2,1)");
  EXPECT_TRUE(P::Integer(-2, 1, 1).IsInteger());
  EXPECT_FALSE(P::Doubled(-3, 1, 2).IsInteger());
}

TEST(WebFromScattering, SinglePair) {
  ParamCollection c({{1, 2}}, {0}, 2);
  auto web = WebFromScattering(BasisTuple({2}), BasisTuple({5}), c);
  ASSERT_TRUE(web);
  std::vector<WebSegment> expect = {
      {LineType::kAlpha, -4, 0, std::nullopt, 1},   // NW ray (-2,*,*)
      {LineType::kAlpha, -10, std::nullopt, 0, 1},  // SE ray (-5,*,*)
      {LineType::kBeta, 4, std::nullopt, 0, 1},     // SW ray (*,2,*)
      {LineType::kBeta, 10, 0, std::nullopt, 1},    // NE ray (*,5,*)
      {LineType::kGamma, 0, 4, 10, 1},              // beta in [2, 5]
  };
  std::sort(expect.begin(), expect.end());
  auto got = web->segments();
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expect);
  ASSERT_EQ(web->nodes().size(), 2u);
  EXPECT_EQ(web->nodes()[0].point, P::Integer(-5, 5, 0));
  EXPECT_EQ(web->nodes()[0].kind, ForkKind::kRight);
  EXPECT_EQ(web->nodes()[1].point, P::Integer(-2, 2, 0));
  EXPECT_EQ(web->nodes()[1].kind, ForkKind::kLeft);
  EXPECT_TRUE(web->IsIntegral());
}

TEST(WebFromScattering, IdentityCaseMergesNodes) {
  // c = x - y: both forks sit at one point and the gamma segment is a point.
  ParamCollection c({{1, 2}}, {-1}, 2);
  auto web = WebFromScattering(BasisTuple({1}), BasisTuple({2}), c);
  ASSERT_TRUE(web);
  EXPECT_EQ(web->nodes()[0].point, web->nodes()[1].point);
  // Away from the node only the two lines remain.
  EXPECT_EQ(web->ValueAt(P::Doubled(-2, 3, -1)), 1);
  EXPECT_EQ(web->ValueAt(P::Doubled(-2, 5, -3)), 1);
  EXPECT_EQ(web->ValueAt(P::Doubled(-1, 4, -3)), 1);
  EXPECT_EQ(web->ValueAt(P::Doubled(-3, 4, -1)), 1);
}

TEST(WebFromScattering, Vanishing) {
  ParamCollection c({{1, 2}}, {0}, 2);
  EXPECT_FALSE(WebFromScattering(BasisTuple({3}), BasisTuple({1}), c));
}

TEST(WebFromScattering, IdenticalSegmentsAddUp) {
  WebDiagram web;
  web.AddSegment({LineType::kGamma, 2, 0, 4, 1});
  web.AddSegment({LineType::kGamma, 2, 0, 4, 1});
  ASSERT_EQ(web.segments().size(), 1u);
  EXPECT_EQ(web.segments()[0].multiplicity, 2);
  EXPECT_EQ(web.ValueAt(P::Integer(-2, 1, 1)), 2);
}

TEST(BzPoints, Counts) {
  EXPECT_EQ(BzPoints(2).size(), 3u);
  EXPECT_EQ(BzPoints(3).size(), 9u);
  EXPECT_EQ(BzPoints(4).size(), 18u);
  EXPECT_EQ(HexagonCenters(3).size(), 1u);
  EXPECT_EQ(HexagonCenters(4).size(), 3u);
}

TEST(BzBoundary, SizeFourLabels) {
  std::vector<int> a(18);
  for (int k = 0; k < 18; ++k) a[k] = k + 1;
  auto b = Boundary(BzPattern(4, a));
  EXPECT_EQ(b.lower, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(b.left, (std::vector<int>{1, 7, 10, 14, 16, 18}));
  EXPECT_EQ(b.right, (std::vector<int>{18, 17, 15, 13, 9, 6}));
  auto z = Boundary(BzPattern(3));
  EXPECT_EQ(z.lower, std::vector<int>(4, 0));
  EXPECT_EQ(PairSums({1, 2, 3, 4}), (std::vector<int>{3, 7}));
}

TEST(CheckHexagon, Basics) {
  EXPECT_TRUE(CheckHexagon(BzPattern(4)));
  const P center = HexagonCenters(3)[0];
  auto h = HexagonAround(center.a2 / 2, center.b2 / 2, center.c2 / 2);
  BzPattern f(3);
  f.Set(h[0], 1);
  f.Set(h[3], 1);
  EXPECT_TRUE(CheckHexagon(f));
  BzPattern g(3);
  g.Set(h[2], 1);
  EXPECT_FALSE(CheckHexagon(g));
}

TEST(CheckHexagon, FullLinesPass) {
  for (int rank = 3; rank <= 5; ++rank)
    for (int k = -2 * rank; k <= 2 * rank; k += 2) {
      for (LineType t : {LineType::kAlpha, LineType::kBeta, LineType::kGamma}) {
        EXPECT_TRUE(CheckHexagon(LinePattern(rank, t, k)));
      }
    }
}

TEST(RestrictToBz, Basics) {
  EXPECT_EQ(RestrictToBz(WebDiagram(), 3), BzPattern(3));
  WebDiagram half;
  half.AddSegment({LineType::kAlpha, -3, std::nullopt, std::nullopt, 1});
  EXPECT_THROW(RestrictToBz(half, 3), std::invalid_argument);
  WebDiagram line;
  line.AddSegment({LineType::kAlpha, -4, std::nullopt, std::nullopt, 1});
  auto f = RestrictToBz(line, 4);
  for (std::size_t k = 0; k < f.points().size(); ++k)
    EXPECT_EQ(f.values()[k], f.points()[k].a2 == -4 ? 1 : 0);
}

TEST(CountBzPatterns, Fixtures) {
  EXPECT_EQ(CountBzPatterns(DominantWeight({1, 0}), DominantWeight({1, 0}),
                            DominantWeight({2, 0})),
            1);
  EXPECT_EQ(CountBzPatterns(DominantWeight({2, 1, 0}), DominantWeight({2, 1, 0}),
                            DominantWeight({3, 2, 1})),
            2);
  EXPECT_EQ(CountBzPatterns(DominantWeight({2, 1, 0}), DominantWeight({2, 1, 0}),
                            DominantWeight({3, 2, 2})),
            0);
}

TEST(CountBzPatterns, AgreesWithTableauCount) {
  for (int rank : {2, 3})
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (const auto& lam : PartitionsOf(a, rank))
          for (const auto& mu : PartitionsOf(b, rank))
            for (const auto& nu : PartitionsOf(a + b, rank)) {
              auto L = DominantWeight::FromPartition(lam, rank);
              auto M = DominantWeight::FromPartition(mu, rank);
              auto V = DominantWeight::FromPartition(nu, rank);
              EXPECT_EQ(CountBzPatterns(L, M, V),
                        oracles::LrTableauCount(lam, mu, nu))
                  << ToString(lam) << " " << ToString(mu) << " "
                  << ToString(nu);
            }
}

TEST(CountBzPatterns, PatternsSatisfyBoundary) {
  DominantWeight l({3, 1, 0, 0}), m({2, 1, 1, 0}), n({4, 3, 1, 1});
  int seen = 0;
  ForEachBzPattern(l, m, n, [&](const BzPattern& f) {
    ++seen;
    EXPECT_TRUE(CheckHexagon(f));
    auto b = Boundary(f);
    EXPECT_EQ(PairSums(b.left), Labels(l));
    EXPECT_EQ(PairSums(b.right), Labels(m));
    EXPECT_EQ(PairSums(b.lower), Labels(n));
  });
  EXPECT_EQ(seen, oracles::LrTableauCount(l.ToPartition(), m.ToPartition(),
                                          n.ToPartition()));
}

TEST(RestrictToBz, ScatteringWebsAreBzPatterns) {
  const int rank = 3;
  int checked = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& lam : PartitionsOf(a, rank))
        for (const auto& mu : PartitionsOf(b, rank)) {
          auto L = DominantWeight::FromPartition(lam, rank);
          auto M = DominantWeight::FromPartition(mu, rank);
          auto x = ColumnTuple(L), y = ColumnTuple(M);
          if (x.size() == 0 || y.size() == 0) continue;
          ForEachStarTerm(x, y, [&](const StarTerm& t) {
            auto web = WebFromScattering(x, y, t.params);
            ASSERT_TRUE(web);
            auto f = RestrictToBz(*web, rank);
            EXPECT_TRUE(CheckHexagon(f));
            auto nu = ProjectPn(t.result, rank);
            if (!nu) return;
            auto bd = Boundary(f);
            EXPECT_EQ(PairSums(bd.left), Labels(L));
            EXPECT_EQ(PairSums(bd.right), Labels(M));
            EXPECT_EQ(PairSums(bd.lower), Labels(*nu));
            ++checked;
          });
        }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace lrscatter
