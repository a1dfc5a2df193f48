#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "qqsh/perm.hpp"

using namespace qqsh;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> r;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do r.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return r;
}

}  // namespace

TEST(Permutation, ComposeAndInverse) {
  Permutation w({2, 3, 1});
  EXPECT_TRUE(compose(w, w.inverse()).is_identity());
  EXPECT_TRUE(compose(w.inverse(), w).is_identity());
  // (u∘v)(k) = u(v(k))
  Permutation u({2, 1, 3});
  Permutation uv = compose(u, w);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(uv(k), u(w(k)));
  EXPECT_THROW(Permutation({1, 1, 2}), Error);
}

TEST(Permutation, CrossAndShift) {
  Permutation a({2, 1}), b({1, 3, 2});
  EXPECT_EQ(cross(a, b).images(), (std::vector<int>{2, 1, 3, 5, 4}));
  EXPECT_EQ(shift(a, 2).images(), (std::vector<int>{1, 2, 4, 3}));
}

TEST(Permutation, ReducedWordsRebuildThePermutation) {
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& w : all_perms(n)) {
      auto rw = reduced_word(w);
      EXPECT_EQ(static_cast<int>(rw.size()), inversion_count(w));
      EXPECT_EQ(from_word(rw, n), w) << w.to_string();
    }
}

TEST(Permutation, AllReducedWordsOfLongestElement) {
  // longest elements of S3 and S4 have 2 and 16 reduced words
  EXPECT_EQ(all_reduced_words(Permutation({3, 2, 1})).size(), 2u);
  EXPECT_EQ(all_reduced_words(Permutation({4, 3, 2, 1})).size(), 16u);
  EXPECT_EQ(all_reduced_words(Permutation({1, 2, 3})).size(), 1u);
  for (const auto& rw : all_reduced_words(Permutation({4, 3, 2, 1}))) EXPECT_EQ(from_word(rw, 4).images(), (std::vector<int>{4, 3, 2, 1}));
}

TEST(Permutation, InversionsOfChi) {
  Permutation c = chi(2, 3);
  EXPECT_EQ(c.size(), 5);
  EXPECT_EQ(inversion_count(c), 6);
}

TEST(Shuffles, CountAndShape) {
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; i + j <= 7; ++j) {
      auto list = shuffles(i, j);
      EXPECT_EQ(list.size(), oracle::binomial(i + j, i));
      for (const auto& w : list) EXPECT_TRUE(is_shuffle(w, i));
    }
  EXPECT_FALSE(is_shuffle(Permutation({2, 1, 3}), 2));
}

TEST(Shuffles, AdmissiblePairs) {
  // w = [1,3,2] as a (2,1)-shuffle puts x1 at 1, x2 at 3, y1 at 2:
  // positions hold x1 y1 x2, so only (1,2) merges a left letter with a right one.
  EXPECT_EQ(admissible_pairs(Permutation({1, 3, 2}), 2), (std::vector<int>{1}));
  EXPECT_EQ(admissible_pairs(Permutation({1, 2, 3}), 2), (std::vector<int>{2}));
  EXPECT_TRUE(admissible_pairs(Permutation({2, 3, 1}), 2).empty());
}

TEST(Shuffles, MixableCounts) {
  // |mixable (i,j)-shuffles| is the Delannoy number D(i,j)
  auto delannoy = [](int i, int j) {
    std::vector<std::vector<std::uint64_t>> d(static_cast<std::size_t>(i + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(j + 1), 1));
    for (int a = 1; a <= i; ++a)
      for (int b = 1; b <= j; ++b)
        d[a][b] = d[a - 1][b] + d[a][b - 1] + d[a - 1][b - 1];
    return d[i][j];
  };
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) EXPECT_EQ(mixable_shuffles(i, j).size(), delannoy(i, j)) << i << "," << j;
}

TEST(Compositions, CpOfPairs) {
  EXPECT_EQ(cp_shuffle({}, 3), (Composition{1, 1, 1}));
  EXPECT_EQ(cp_shuffle({1}, 3), (Composition{2, 1}));
  EXPECT_EQ(cp_shuffle({2}, 4), (Composition{1, 2, 1}));
  EXPECT_EQ(to_string(Composition{2, 1}), "(2,1)");
}

TEST(Compositions, Refinement) {
  EXPECT_TRUE(is_refinement({1, 2, 2, 3}, {3, 2, 3}));
  EXPECT_FALSE(is_refinement({3, 2, 3}, {1, 2, 2, 3}));
  EXPECT_FALSE(is_refinement({2, 2}, {1, 3}));
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(compositions(n).size(), std::size_t{1} << (n - 1));
  EXPECT_EQ(refinements({3, 2, 3}).size(), 4u * 2u * 4u);
  for (const auto& I : refinements({3, 2, 3})) EXPECT_TRUE(is_refinement(I, {3, 2, 3}));
}

TEST(Compositions, DescentComposition) {
  // partial sums of C(w) are the descents of w
  EXPECT_EQ(descent_composition(Permutation({1, 2, 3})), (Composition{3}));
  EXPECT_EQ(descent_composition(Permutation({3, 2, 1})), (Composition{1, 1, 1}));
  EXPECT_EQ(descent_composition(Permutation({2, 4, 1, 3})), (Composition{2, 2}));
}

TEST(Compositions, ScriptS) {
  // (k,k+1) with w⁻¹(k) < w⁻¹(k+1)
  Permutation w({2, 4, 1, 3});
  EXPECT_EQ(script_S(w), (std::vector<int>{2}));
  EXPECT_EQ(script_S(Permutation({1, 2, 3})), (std::vector<int>{1, 2}));
}
