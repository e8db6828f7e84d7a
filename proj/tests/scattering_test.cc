#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "lrscatter/oracles.h"
#include "lrscatter/scattering.h"

namespace lrscatter {
namespace {

ParamCollection Params(int rank,
                       std::initializer_list<std::tuple<int, int, int>> l) {
  std::vector<Inversion> keys;
  std::vector<int> values;
  for (auto [i, j, c] : l) {
    keys.push_back({i, j});
    values.push_back(c);
  }
  return ParamCollection(keys, values, rank);
}

// Brute force over [0, S]^{mn}, checking every dominance condition
// c_ij >= c_kl for k <= i < j <= l and applying the word factor by factor.
WeightedTupleSum BruteStar(const BasisTuple& a, const BasisTuple& b) {
  const int m = a.size(), n = b.size();
  const int S = a.Energy() + b.Energy();
  const ReducedWord word = WmnWord(m, n);
  const Permutation w = Evaluate(word);
  std::vector<Inversion> keys = InversionSet(w);
  std::vector<int> v(keys.size(), 0);
  WeightedTupleSum out;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == keys.size()) {
      for (std::size_t p = 0; p < keys.size(); ++p)
        for (std::size_t q = 0; q < keys.size(); ++q) {
          auto [i, j] = keys[p];
          auto [kk, l] = keys[q];
          if (kk <= i && j <= l && v[p] < v[q]) return;
        }
      ParamCollection c(keys, v, m + n);
      if (auto r = ApplyWord(word, c, Concat(a, b))) {
        out.Add(ToLowerEnds(w, *r));
      }
      return;
    }
    for (int x = 0; x <= S; ++x) {
      v[k] = x;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<BasisTuple> AllTuples(int max_len, int max_entry) {
  std::vector<BasisTuple> out{BasisTuple()};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& t : layer)
      for (int e = 0; e <= max_entry; ++e) {
        auto u = t;
        u.push_back(e);
        next.push_back(u);
        out.emplace_back(u);
      }
    layer = std::move(next);
  }
  return out;
}

TEST(ApplyR, Definition) {
  EXPECT_EQ(ApplyR(0, 1, 1), std::make_pair(1, 1));
  EXPECT_EQ(ApplyR(1, 1, 1), std::make_pair(2, 0));
  EXPECT_FALSE(ApplyR(-1, 1, 1));
  EXPECT_FALSE(ApplyR(2, 1, 1));
  EXPECT_EQ(ApplyR(0, 2, 5), std::make_pair(5, 2));
}

TEST(ApplyWord, SingleCrossing) {
  auto r = ApplyWord(ReducedWord({1}, 2), Params(2, {{1, 2, 0}}),
                     BasisTuple({2, 5}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, BasisTuple({5, 2}));
}

TEST(ApplyWord, HandExecutedGoldens) {
  const ReducedWord w121({1, 2, 1}, 3);
  // R_12(0) gives (1,1,3); R_13(4) would leave slot 3 at -3.
  EXPECT_FALSE(ApplyWord(w121, Params(3, {{1, 2, 0}, {1, 3, 4}, {2, 3, 2}}),
                         BasisTuple({1, 1, 3})));
  // (1,1,3) -> (2,0,3) -> (4,0,1) -> (4,1,0).
  auto r = ApplyWord(w121, Params(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 0}}),
                     BasisTuple({1, 1, 3}));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, BasisTuple({4, 1, 0}));
}

TEST(ApplyWord, RejectsLengthMismatch) {
  EXPECT_THROW(ApplyWord(ReducedWord({1}, 2), Params(2, {{1, 2, 0}}),
                         BasisTuple({1})),
               std::invalid_argument);
}

TEST(StarProduct, SmallExample) {
  WeightedTupleSum expect;
  expect.Add(BasisTuple({0, 2}));
  expect.Add(BasisTuple({1, 1}));
  EXPECT_EQ(StarProduct(BasisTuple({1}), BasisTuple({1})), expect);
}

TEST(StarProduct, EmptyFactorIsUnit) {
  WeightedTupleSum expect;
  expect.Add(BasisTuple({1, 2}));
  EXPECT_EQ(StarProduct(BasisTuple(), BasisTuple({1, 2})), expect);
  EXPECT_EQ(StarProduct(BasisTuple({1, 2}), BasisTuple()), expect);
}

TEST(StarProduct, AgreesWithBruteForce) {
  auto tuples = AllTuples(2, 3);
  for (const auto& a : tuples)
    for (const auto& b : tuples) {
      EXPECT_EQ(StarProduct(a, b), BruteStar(a, b))
          << ToString(a) << " * " << ToString(b);
    }
}

TEST(StarProduct, TermsOfIncreasingFactorsIncrease) {
  for (const auto& a : AllTuples(3, 3))
    for (const auto& b : AllTuples(2, 3)) {
      auto prod = StarProduct(a, b);
      if (a.size() == 0 || b.size() == 0) continue;
      if (!a.IsWeaklyIncreasing() || !b.IsWeaklyIncreasing()) {
        EXPECT_TRUE(prod.empty()) << ToString(a) << " * " << ToString(b);
        continue;
      }
      for (const auto& [t, mult] : prod.terms()) {
        EXPECT_TRUE(t.IsWeaklyIncreasing());
        EXPECT_EQ(t.Energy(), a.Energy() + b.Energy());
      }
    }
}

TEST(PieriProduct, MatchesStarProduct) {
  for (const auto& t : AllTuples(3, 4)) {
    if (!t.IsWeaklyIncreasing()) continue;
    for (int x = 0; x <= 4; ++x) {
      EXPECT_EQ(PieriProduct(x, t), StarProduct(BasisTuple({x}), t))
          << x << " * " << ToString(t);
    }
  }
}

TEST(PieriProduct, Examples) {
  WeightedTupleSum expect;
  expect.Add(BasisTuple({0, 2}));
  expect.Add(BasisTuple({1, 1}));
  EXPECT_EQ(PieriProduct(1, BasisTuple({1})), expect);
  // x = 0 only pads with a leading zero.
  WeightedTupleSum pad;
  pad.Add(BasisTuple({0, 1, 3}));
  EXPECT_EQ(PieriProduct(0, BasisTuple({1, 3})), pad);
  EXPECT_THROW(PieriProduct(1, BasisTuple({2, 1})), std::invalid_argument);
}

TEST(ProjectPn, FundamentalWeights) {
  EXPECT_EQ(*ProjectPn(BasisTuple({0, 2}), 2), DominantWeight({1, 1}));
  EXPECT_EQ(*ProjectPn(BasisTuple({1, 1}), 2), DominantWeight({2, 0}));
  EXPECT_EQ(*ProjectPn(BasisTuple({1, 2, 3}), 3), DominantWeight({3, 2, 1}));
  EXPECT_FALSE(ProjectPn(BasisTuple({2, 1}), 3));
  EXPECT_FALSE(ProjectPn(BasisTuple({1, 4}), 3));
  EXPECT_EQ(*ProjectPn(BasisTuple(), 2), DominantWeight({0, 0}));
}

TEST(LrCoefficient, Fixtures) {
  const DominantWeight l21({2, 1, 0});
  EXPECT_EQ(LrCoefficient(l21, l21, DominantWeight({3, 2, 1})), 2);
  EXPECT_EQ(LrCoefficient(DominantWeight({1, 0}), DominantWeight({1, 0}),
                          DominantWeight({1, 1})),
            1);
  EXPECT_EQ(LrCoefficient(DominantWeight({1, 0}), DominantWeight({1, 0}),
                          DominantWeight({2, 0})),
            1);
  EXPECT_EQ(LrCoefficient(l21, l21, DominantWeight({2, 2, 1})), 0);
  EXPECT_THROW(LrCoefficient(l21, DominantWeight({1, 0}), l21),
               std::invalid_argument);
}

TEST(LrCoefficient, AgreesWithTableauCount) {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& lam : PartitionsOf(a, 3))
        for (const auto& mu : PartitionsOf(b, 3))
          for (const auto& nu : PartitionsOf(a + b, 3)) {
            auto L = DominantWeight::FromPartition(lam, 3);
            auto M = DominantWeight::FromPartition(mu, 3);
            auto V = DominantWeight::FromPartition(nu, 3);
            EXPECT_EQ(LrCoefficient(L, M, V),
                      oracles::LrTableauCount(lam, mu, nu))
                << ToString(lam) << " " << ToString(mu) << " " << ToString(nu);
          }
}

TEST(LrExpansion, SumsToDimensionCount) {
  auto e = LrExpansion(DominantWeight({2, 1, 0}), DominantWeight({1, 0, 0}));
  std::map<DominantWeight, std::int64_t> expect = {
      {DominantWeight({3, 1, 0}), 1},
      {DominantWeight({2, 2, 0}), 1},
      {DominantWeight({2, 1, 1}), 1}};
  EXPECT_EQ(e, expect);
}

TEST(ColumnTuple, ConjugateIncreasing) {
  EXPECT_EQ(ColumnTuple(DominantWeight({3, 1, 0})), BasisTuple({1, 1, 2}));
  EXPECT_EQ(ColumnTuple(DominantWeight({0, 0})), BasisTuple());
}

}  // namespace
}  // namespace lrscatter
