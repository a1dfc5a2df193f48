#include <gtest/gtest.h>

#include <set>

#include "qqsh/builtins.hpp"
#include "qqsh/rotabaxter.hpp"

using namespace qqsh;

TEST(RotaBaxter, NeedsUnit) {
  ProductContext ctx(make_diagonal_nonunital(2));
  EXPECT_THROW(RotaBaxterAlgebra r(ctx), Error);
}

TEST(RotaBaxter, OperatorPrependsUnit) {
  ProductContext ctx(unitalize(make_diagonal_nonunital(2)));
  RotaBaxterAlgebra R(ctx);
  const BraidedAlgebra& A = ctx.base();
  Word x{A.letter(1), A.letter(2)};
  Word ux{*A.unit(), A.letter(1), A.letter(2)};
  EXPECT_EQ(R.P(Tensor::word(x)), Tensor::word(ux));
  EXPECT_THROW(R.P(Tensor::unit()), Error);
  EXPECT_THROW(R.diamond(Word{}, x), Error);
}

TEST(RotaBaxter, DiamondOnLetters) {
  // a ◊ b = ab ⊗ 1 for one-letter words, the product of A
  ProductContext ctx(unitalize(make_diagonal_nonunital(3)));
  RotaBaxterAlgebra R(ctx);
  const BraidedAlgebra& A = ctx.base();
  EXPECT_EQ(R.diamond(Word{A.letter(1)}, Word{A.letter(2)}), Tensor::letter(A.letter(3)));
  EXPECT_TRUE(R.diamond(Word{A.letter(2)}, Word{A.letter(2)}).is_zero());
  EXPECT_EQ(R.diamond(R.one(), Tensor::word(Word{A.letter(2), A.letter(1)})), Tensor::word(Word{A.letter(2), A.letter(1)}));
}

TEST(RotaBaxter, IdentityAtFixedWeights) {
  BraidedAlgebra U = unitalize(make_diagonal_nonunital(2));
  for (int lam : {0, 1, -2}) EXPECT_TRUE(verify_rb(U, 3, Scalar(lam)).ok()) << lam;
  EXPECT_TRUE(verify_rb(U, 3, Scalar::q()).ok());
}

TEST(RotaBaxter, SymbolicWeight) {
  EXPECT_TRUE(verify_rb(unitalize(make_general_example()), 3).ok());
  EXPECT_TRUE(verify_rb(unitalize(make_hoffman_example()), 3).ok());
}

TEST(RotaBaxter, FlipInDiamondBreaksIdentity) {
  Report r = verify_rb(unitalize(make_diagonal_nonunital(3)), 3, Scalar(1), DiamondBraid::flip);
  EXPECT_FALSE(r.ok());
}

TEST(RotaBaxter, SamplePointsAreDistinct) {
  auto pts = lambda_sample_points(9);
  ASSERT_EQ(pts.size(), 9u);
  std::set<std::string> seen;
  for (const auto& p : pts) seen.insert(p.to_string());
  EXPECT_EQ(seen.size(), 9u);
}

TEST(RotaBaxter, DiamondAlgebraAndBraidedStructure) {
  BraidedAlgebra U = unitalize(make_diagonal_nonunital(2));
  EXPECT_TRUE(verify_diamond_algebra(U, 3, Scalar(1)).ok());
  ProductContext ctx(U);
  EXPECT_TRUE(verify_braided_rb(ctx, 3).ok());
  StarReport s = verify_star_braided_rb(ctx, 3);
  EXPECT_TRUE(s.hypotheses.ok());
  EXPECT_TRUE(s.conclusion.ok());
  EXPECT_TRUE(s.ok());
}

TEST(RotaBaxter, WordTuples) {
  std::vector<Letter> l{{1, 1}, {2, 1}};
  // pairs of nonempty words with total length ≤ 3: (1,1): 4, (1,2): 8, (2,1): 8
  EXPECT_EQ(word_tuples(l, 2, 3).size(), 20u);
}
