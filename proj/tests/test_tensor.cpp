#include <gtest/gtest.h>

#include "qqsh/tensor.hpp"

using namespace qqsh;

namespace {
Letter e(int i) { return {i, i}; }
}  // namespace

TEST(Tensor, CancellationRemovesTerms) {
  Tensor t;
  t.add(Word{e(1), e(2)}, Scalar::q());
  t.add(Word{e(1), e(2)}, -Scalar::q());
  EXPECT_TRUE(t.is_zero());
  EXPECT_EQ(t.to_string(), "0");
}

TEST(Tensor, Rendering) {
  Tensor t;
  t.add(Word{e(1), e(1)}, Scalar(1) + Scalar::q());
  t.add(Word{e(2)}, 1);
  t.add(Word{}, Scalar(-2));
  EXPECT_EQ(t.to_string(), "-2 + e2 + (1 + q)*e1⊗e1");
}

TEST(Tensor, LinearOperations) {
  Tensor a = Tensor::letter(e(1));
  Tensor b = Tensor::word(Word{e(2), e(3)}, Scalar::q());
  Tensor s = a + b;
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ((s - b), a);
  EXPECT_EQ((Scalar(2) * a).coeff(Word{e(1)}), Scalar(2));
  EXPECT_TRUE(s.coeff(Word{e(4)}).is_zero());
}

TEST(Tensor, WordHelpers) {
  Word w{e(1), e(2), e(3)};
  EXPECT_EQ(total_degree(w), 6);
  EXPECT_EQ(concat(subword(w, 0, 1), subword(w, 1, 2)), w);
  EXPECT_EQ(to_string(w), "e1⊗e2⊗e3");
  EXPECT_EQ(to_string(Word{}), "1");
}

TEST(MultiTensor, ArityIsEnforced) {
  MultiTensor z(2);
  EXPECT_THROW(z.add(Slots{Word{e(1)}}, 1), Error);
  MultiTensor y(3);
  EXPECT_THROW(z += y, Error);
  EXPECT_THROW(MultiTensor(0), Error);
}

TEST(MultiTensor, DeconcatenationOfWord) {
  Word w{e(1), e(2), e(3)};
  MultiTensor d = deconcat(Tensor::word(w));
  EXPECT_EQ(d.size(), 4u);
  for (std::size_t k = 0; k <= 3; ++k)
    EXPECT_EQ(d.coeff(Slots{subword(w, 0, k), subword(w, k, 3 - k)}), Scalar(1));
}

TEST(MultiTensor, OuterAndFlatten) {
  Tensor x = Tensor::letter(e(1)) + Tensor::letter(e(2));
  Tensor y = Tensor::word(Word{e(3)}, Scalar::q());
  MultiTensor z = outer(x, y);
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(z.coeff(Slots{Word{e(2)}, Word{e(3)}}), Scalar::q());
  Tensor flat = as_tensor(flatten_at(z, 0));
  EXPECT_EQ(flat.coeff(Word{e(1), e(3)}), Scalar::q());
}
