#include <random>

#include <gtest/gtest.h>

#include "lrscatter/oracles.h"
#include "lrscatter/scattering.h"

namespace lrscatter {
namespace {

using oracles::LrTableauCount;
using oracles::PieriCoefficient;
using oracles::TensorByPieri;

TEST(Conjugate, Examples) {
  EXPECT_EQ(Partition({3, 1}).Conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition().Conjugate(), Partition());
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(0, 6);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> v(d(rng));
    for (int& x : v) x = d(rng);
    std::sort(v.rbegin(), v.rend());
    Partition p(v);
    EXPECT_EQ(p.Conjugate().Conjugate(), p);
  }
}

TEST(ToColumnWord, Examples) {
  EXPECT_EQ(oracles::ToColumnWord(Partition({2, 1})), (std::vector<int>{1, 2}));
  EXPECT_EQ(oracles::ToColumnWord(Partition({1, 1, 1})), (std::vector<int>{3}));
  EXPECT_TRUE(oracles::ToColumnWord(Partition()).empty());
}

TEST(ToColumnWord, InvertsProjection) {
  for (int len = 0; len <= 3; ++len)
    for (int code = 0; code < (1 << (2 * len)); ++code) {
      std::vector<int> v;
      for (int k = 0; k < len; ++k) v.push_back(1 + ((code >> (2 * k)) & 3));
      if (!std::is_sorted(v.begin(), v.end())) continue;
      auto w = ProjectPn(BasisTuple(v), 4);
      ASSERT_TRUE(w);
      EXPECT_EQ(oracles::ToColumnWord(w->ToPartition()), v);
    }
}

TEST(LrTableauCount, Examples) {
  EXPECT_EQ(LrTableauCount(Partition({1}), Partition({1}), Partition({2})), 1);
  EXPECT_EQ(LrTableauCount(Partition({2, 1}), Partition({2, 1}),
                           Partition({3, 2, 1})),
            2);
  EXPECT_EQ(LrTableauCount(Partition({1}), Partition({1}), Partition({3})), 0);
  EXPECT_EQ(LrTableauCount(Partition({2}), Partition({1}), Partition({1, 1, 1})),
            0);
}

TEST(AddVerticalStrip, Examples) {
  auto s = oracles::AddVerticalStrip(Partition({1}), 1, 3);
  EXPECT_EQ(s, (std::vector<Partition>{Partition({1, 1}), Partition({2})}));
  EXPECT_EQ(oracles::AddVerticalStrip(Partition({1, 1}), 2, 3),
            (std::vector<Partition>{Partition({2, 1, 1}), Partition({2, 2})}));
  EXPECT_EQ(oracles::AddVerticalStrip(Partition({1, 1}), 2, 2),
            (std::vector<Partition>{Partition({2, 2})}));
}

TEST(TensorByPieri, Examples) {
  auto std2 = TensorByPieri(Partition({1}), Partition({1}), 2);
  std::map<Partition, std::int64_t> expect = {{Partition({2}), 1},
                                              {Partition({1, 1}), 1}};
  EXPECT_EQ(std2, expect);
  auto unit = TensorByPieri(Partition({3, 1}), Partition(), 3);
  EXPECT_EQ(unit, (std::map<Partition, std::int64_t>{{Partition({3, 1}), 1}}));
  EXPECT_EQ(PieriCoefficient(Partition({2, 1}), Partition({2, 1}),
                             Partition({3, 2, 1}), 3),
            2);
}

TEST(Oracles, AgreeWithEachOtherAndScattering) {
  for (int rank = 1; rank <= 4; ++rank)
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) {
        if (rank == 4 && a + b > 8) continue;
        for (const auto& lam : PartitionsOf(a, rank))
          for (const auto& mu : PartitionsOf(b, rank)) {
            auto pieri = TensorByPieri(lam, mu, rank);
            for (const auto& nu : PartitionsOf(a + b, rank)) {
              auto tab = LrTableauCount(lam, mu, nu);
              auto it = pieri.find(nu);
              EXPECT_EQ(it == pieri.end() ? 0 : it->second, tab);
              EXPECT_EQ(LrCoefficient(DominantWeight::FromPartition(lam, rank),
                                      DominantWeight::FromPartition(mu, rank),
                                      DominantWeight::FromPartition(nu, rank)),
                        tab)
                  << ToString(lam) << " " << ToString(mu) << " "
                  << ToString(nu);
            }
          }
      }
}

}  // namespace
}  // namespace lrscatter
