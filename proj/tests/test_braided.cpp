#include <gtest/gtest.h>

#include "qqsh/braided.hpp"
#include "qqsh/builtins.hpp"

using namespace qqsh;

namespace {
Tensor w2(const BraidedAlgebra& A, int a, int b, const Scalar& c = 1) { return Tensor::word(Word{A.letter(a), A.letter(b)}, c); }
}  // namespace

TEST(Braided, DiagonalBraidingAndProduct) {
  BraidedAlgebra A = make_diagonal_nonunital(4);
  EXPECT_EQ(apply_sigma_at(A, w2(A, 1, 2), 1), w2(A, 2, 1, Scalar::q(2)));
  EXPECT_EQ(multiply_letters(A, A.letter(1), A.letter(3)), Tensor::letter(A.letter(4)));
  EXPECT_TRUE(multiply_letters(A, A.letter(2), A.letter(3)).is_zero());
  EXPECT_EQ(apply_m_at(A, w2(A, 1, 1), 1), Tensor::letter(A.letter(2)));
}

TEST(Braided, BuiltinsSatisfyAxioms) {
  for (const auto& [name, A] : builtin_algebras()) {
    Report r = verify_braided_algebra(A);
    EXPECT_TRUE(r.ok()) << name << "\n" << r.summary();
    EXPECT_TRUE(verify_yang_baxter(A).ok()) << name;
    EXPECT_TRUE(verify_braiding_invertible(A).ok()) << name;
  }
}

TEST(Braided, BrokenBraidingIsDetected) {
  // σ(e1⊗e2) = e1⊗e2 with the rest of the general table breaks the braid relation
  BraidingSpec b;
  b.kind = BraidingSpec::Kind::general;
  Scalar q = Scalar::q();
  b.table[{1, 1}] = {{1, 1, Scalar(1)}};
  b.table[{1, 2}] = {{2, 1, q}, {1, 2, Scalar(1)}};
  b.table[{2, 1}] = {{1, 2, q}, {2, 1, Scalar(1) - q * q}};
  b.table[{2, 2}] = {{2, 2, Scalar(1)}};
  try {
    make_general_algebra({{1, 1}, {2, 1}}, b, ProductSpec{}, std::nullopt, "broken");
    FAIL() << "accepted a braiding that fails Yang-Baxter";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::spec);
    EXPECT_NE(std::string(e.what()).find("yang-baxter"), std::string::npos);
  }
}

TEST(Braided, IncompatibleProductIsDetected) {
  // flip braiding with a product whose braiding factor does not match the q rule
  DiagonalOptions o;
  o.unital = false;
  o.rule = QRule::table({{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}});
  EXPECT_THROW(make_diagonal_algebra(2, o), Error);
}

TEST(Braided, SpecErrors) {
  EXPECT_THROW(make_diagonal_algebra(0), Error);
  ProductSpec bad;
  bad.table[{1, 1}] = {{1, Scalar(1)}};  // [a,a] would need degree 2
  EXPECT_THROW(make_hoffman_algebra({{1, 1}}, bad), Error);
  EXPECT_THROW(make_hoffman_algebra({{1, 1}}, ProductSpec{}, Scalar(1) + Scalar::q()), Error);
  EXPECT_THROW(builtin_algebra("nope"), Error);
}

TEST(Braided, Unitalization) {
  BraidedAlgebra A = make_diagonal_nonunital(3);
  BraidedAlgebra U = unitalize(A);
  ASSERT_TRUE(U.is_unital());
  const Letter& u = *U.unit();
  for (const Letter& a : A.generators()) {
    EXPECT_EQ(multiply_letters(U, u, a), Tensor::letter(U.letter(a.index)));
    EXPECT_EQ(multiply_letters(U, a, u), Tensor::letter(U.letter(a.index)));
    EXPECT_EQ(apply_sigma_at(U, Tensor::word(Word{u, a}), 1), Tensor::word(Word{a, u}));
  }
  EXPECT_TRUE(verify_braided_algebra(U).ok());
}

TEST(Braided, LiftOfTranspositionIsSigma) {
  BraidedAlgebra A = make_general_example();
  Word x{A.letter(2), A.letter(1)};
  EXPECT_EQ(lift_word(A, Permutation({2, 1}), x), apply_sigma_at(A, Tensor::word(x), 1));
  EXPECT_EQ(lift_word(A, Permutation({1, 2}), x), Tensor::word(x));
}

TEST(Braided, LiftWellDefined) {
  for (int n = 2; n <= 3; ++n) {
    EXPECT_TRUE(verify_lift_well_defined(make_general_example(), n).ok());
    EXPECT_TRUE(verify_lift_well_defined(make_hoffman_example(), n).ok());
  }
}

TEST(Braided, BetaOnDiagonalWords) {
  // β(e1e2 ⊗̲ e3) = q^{1·3+2·3} e3 ⊗̲ e1e2
  BraidedAlgebra A = make_diagonal_nonunital(3);
  MultiTensor b = beta_words(A, Word{A.letter(1), A.letter(2)}, Word{A.letter(3)});
  MultiTensor expect(2);
  expect.add(Slots{Word{A.letter(3)}, Word{A.letter(1), A.letter(2)}}, Scalar::q(9));
  EXPECT_EQ(b, expect);
}

TEST(Braided, BlockFunctorialityAndSigmaPower) {
  for (const BraidedAlgebra& A : {make_diagonal_nonunital(3), make_general_example()}) {
    EXPECT_TRUE(verify_block_functoriality(A, 5, A.generators()).ok()) << A.name();
    EXPECT_TRUE(verify_sigma_m_power(A, 3).ok()) << A.name();
  }
}

TEST(Braided, MPower) {
  BraidedAlgebra A = make_diagonal_nonunital(6);
  Word x{A.letter(1), A.letter(2), A.letter(3)};
  EXPECT_EQ(m_power(A, 2, x), Tensor::letter(A.letter(6)));
  EXPECT_EQ(m_I(A, {1, 2}, x), Tensor::word(Word{A.letter(1), A.letter(5)}));
}
