#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qqsh/builtins.hpp"
#include "qqsh/products.hpp"
#include "qqsh/suites.hpp"

using namespace qqsh;

namespace {

oracle::IWord idx(const Word& w) {
  oracle::IWord r;
  for (const Letter& l : w) r.push_back(l.index);
  return r;
}

}  // namespace

TEST(Products, FirstProductOnDiagonal) {
  ProductContext ctx(make_diagonal_algebra(6));
  const BraidedAlgebra& A = ctx.base();
  Tensor r = qqsh_inductive(ctx, Word{A.letter(1)}, Word{A.letter(2)});
  EXPECT_EQ(r.to_string(), "e3 + e1⊗e2 + q^2*e2⊗e1");
}

TEST(Products, EmptyWordIsTheUnit) {
  ProductContext ctx(make_diagonal_nonunital(4));
  const BraidedAlgebra& A = ctx.base();
  Word x{A.letter(1), A.letter(3)};
  EXPECT_EQ(qqsh_inductive(ctx, Word{}, x), Tensor::word(x));
  EXPECT_EQ(qqsh_explicit(ctx, x, Word{}), Tensor::word(x));
}

TEST(Products, ExplicitMatchesInductive) {
  for (const BraidedAlgebra& A : {make_diagonal_nonunital(3), make_general_example(), make_hoffman_commutative()})
    EXPECT_TRUE(verify_product_formulas(ProductContext(A), 4).ok()) << A.name();
}

TEST(Products, WeightZeroIsTheQuantumShuffle) {
  ProductContext ctx(make_diagonal_nonunital(3), Scalar(0));
  const BraidedAlgebra& A = ctx.base();
  Tensor x = Tensor::word(Word{A.letter(1), A.letter(2)});
  Tensor y = Tensor::word(Word{A.letter(1)});
  EXPECT_EQ(qqsh_inductive(ctx, x, y), qsh(ctx, x, y));
}

TEST(Products, FlipShuffleCountsAreBinomial) {
  ProductContext ctx(make_flip_algebra(1), Scalar(0));
  const Letter& a = ctx.base().letter(1);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) {
      Word x(static_cast<std::size_t>(i), a), y(static_cast<std::size_t>(j), a);
      Tensor r = qsh(ctx, Tensor::word(x), Tensor::word(y));
      Word all(static_cast<std::size_t>(i + j), a);
      EXPECT_EQ(r.coeff(all), Scalar(static_cast<int>(oracle::binomial(i + j, i))));
    }
}

TEST(Products, HoffmanProductMatchesRecursion) {
  BraidedAlgebra H = make_hoffman_example();
  ProductContext ctx(H);
  auto deg = [&H](int a) { return H.letter(a).degree; };
  oracle::LetterProduct br = [&H](int a, int b) -> std::optional<int> {
    const auto& t = H.product(H.letter(a), H.letter(b));
    if (t.empty()) return std::nullopt;
    return t[0].letter.index;
  };
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j)
      for (const Word& x : all_words(H.generators(), i))
        for (const Word& y : all_words(H.generators(), j)) {
          Tensor r = hoffman_product(ctx, Tensor::word(x), Tensor::word(y));
          EXPECT_EQ(oracle::from_tensor(r), oracle::hoffman(idx(x), idx(y), deg, br)) << to_string(x) << " " << to_string(y);
          EXPECT_EQ(r, qqsh_inductive(ctx, x, y));
        }
}

TEST(Products, HoffmanNeedsHoffmanAlgebra) {
  ProductContext ctx(make_diagonal_nonunital(2));
  EXPECT_THROW(hoffman_product(ctx, Tensor::unit(), Tensor::unit()), Error);
}

TEST(Products, NfoldAgreesWithFold) {
  ProductContext ctx(make_general_example());
  const BraidedAlgebra& A = ctx.base();
  for (const Word& w : all_words(A.generators(), 3)) {
    Tensor fold = Tensor::unit();
    for (const Letter& l : w) fold = qqsh_inductive(ctx, fold, Tensor::letter(l));
    EXPECT_EQ(nfold(ctx, w), fold) << to_string(w);
  }
  EXPECT_EQ(nfold(ctx, Word{}), Tensor::unit());
}

TEST(Products, PowerFormula) {
  ProductContext ctx(make_diagonal_nonunital(6));
  const BraidedAlgebra& A = ctx.base();
  Scalar q = Scalar::q();
  // e1⋈e1⋈e1 = e3 + (2)_q(e1⊗e2 + e2⊗e1) + (3)_q! e1⊗e1⊗e1
  Tensor p = power_formula(ctx, 1, 3);
  EXPECT_EQ(p.coeff(Word{A.letter(3)}), Scalar(1));
  EXPECT_EQ(p.coeff(Word{A.letter(1), A.letter(2)}), Scalar(1) + q + q * q);
  EXPECT_EQ(p.coeff(Word{A.letter(1), A.letter(1), A.letter(1)}), q_factorial(3, q));
  // truncation drops e8 and beyond
  for (const auto& [w, c] : power_formula(ctx, 2, 4))
    for (const Letter& l : w) EXPECT_LE(l.index, 6);
}

TEST(Products, PowerFormulaWithWeight) {
  Scalar lam = Scalar(3);
  ProductContext ctx(make_diagonal_nonunital(6), lam);
  Tensor fold = Tensor::unit();
  for (int k = 1; k <= 3; ++k) {
    fold = qqsh_inductive(ctx, fold, Tensor::letter(ctx.base().letter(2)));
    EXPECT_EQ(power_formula(ctx, 2, k), fold);
  }
}

TEST(Products, CappedAlgebraReportsOverflow) {
  DiagonalOptions o;
  o.unital = false;
  o.capped = true;
  ProductContext ctx(make_diagonal_algebra(3, o));
  try {
    (void)power_formula(ctx, 2, 2);
    FAIL() << "expected a cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap);
  }
}

TEST(Products, Associativity) {
  for (const BraidedAlgebra& A : {make_general_example(), make_hoffman_example(), make_diagonal_algebra(4)})
    EXPECT_TRUE(verify_associativity_random(ProductContext(A), 30, 2, 7).ok()) << A.name();
}

TEST(Products, BialgebraAndBraiding) {
  ProductContext ctx(make_hoffman_example());
  EXPECT_TRUE(verify_bialgebra(ctx, 3).ok());
  EXPECT_TRUE(verify_product_braiding(ctx, 3).ok());
  ProductContext g(make_general_example());
  EXPECT_TRUE(verify_product_braiding(g, 4).ok());
}

TEST(Products, SpanningSet) {
  ProductContext ctx(make_diagonal_nonunital(2));
  const BraidedAlgebra& A = ctx.base();
  auto one = spanning_set(ctx, 1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], Tensor::letter(A.letter(1)));
  EXPECT_EQ(one[1], Tensor::letter(A.letter(2)));
  auto two = spanning_set(ctx, 2);
  ASSERT_EQ(two.size(), 4u);
  EXPECT_EQ(two[1], qqsh_inductive(ctx, Word{A.letter(1)}, Word{A.letter(2)}));
  EXPECT_EQ(spanning_family(ctx, 2).size(), 6u);
}
