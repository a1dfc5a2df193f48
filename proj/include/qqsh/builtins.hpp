#pragma once

// Named example algebras shared by the CLI, tests and acceptance runs.

#include <string>
#include <utility>
#include <vector>

#include "qqsh/braided.hpp"
#include "qqsh/error.hpp"
#include "qqsh/scalar.hpp"

namespace qqsh {

/// Hoffman algebra on a = e1, b = e2 (degree 1) with a noncommutative
/// bracket [a,b] = c = e3, [b,a] = d = e4 (degree 2); every other bracket is 0.
inline BraidedAlgebra make_hoffman_example(Scalar hq = Scalar::q()) {
  ProductSpec bracket;
  bracket.table[{1, 2}] = {{3, Scalar(1)}};
  bracket.table[{2, 1}] = {{4, Scalar(1)}};
  auto A = make_hoffman_algebra({{1, 1}, {2, 1}, {3, 2}, {4, 2}}, std::move(bracket), std::move(hq));
  return A;
}

/// Hoffman algebra on a = e1, b = e2 (degree 1) with commutative bracket
/// [a,a] = e3, [a,b] = [b,a] = e4, [b,b] = e5 (degree 2).
inline BraidedAlgebra make_hoffman_commutative(Scalar hq = Scalar::q()) {
  ProductSpec bracket;
  bracket.table[{1, 1}] = {{3, Scalar(1)}};
  bracket.table[{1, 2}] = {{4, Scalar(1)}};
  bracket.table[{2, 1}] = {{4, Scalar(1)}};
  bracket.table[{2, 2}] = {{5, Scalar(1)}};
  return make_hoffman_algebra({{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 2}}, std::move(bracket), std::move(hq));
}

/// The two-dimensional non-diagonal braiding
/// σ(e1⊗e1) = e1⊗e1, σ(e1⊗e2) = q e2⊗e1,
/// σ(e2⊗e1) = q e1⊗e2 + (1−q²) e2⊗e1, σ(e2⊗e2) = e2⊗e2,
/// with the trivial product.
inline BraidedAlgebra make_general_example() {
  BraidingSpec b;
  b.kind = BraidingSpec::Kind::general;
  Scalar q = Scalar::q();
  b.table[{1, 1}] = {{1, 1, Scalar(1)}};
  b.table[{1, 2}] = {{2, 1, q}};
  b.table[{2, 1}] = {{1, 2, q}, {2, 1, Scalar(1) - q * q}};
  b.table[{2, 2}] = {{2, 2, Scalar(1)}};
  return make_general_algebra({{1, 1}, {2, 1}}, std::move(b), ProductSpec{}, std::nullopt, "general sigma1");
}

/// The flip braiding (all q_ij = 1) on the truncated diagonal product.
inline BraidedAlgebra make_flip_algebra(int N, bool unital = false) {
  DiagonalOptions o;
  o.unital = unital;
  o.rule = QRule::zero();
  return make_diagonal_algebra(N, o);
}

inline BraidedAlgebra make_diagonal_nonunital(int N) {
  DiagonalOptions o;
  o.unital = false;
  return make_diagonal_algebra(N, o);
}

/// Every named algebra: diagonal N=6 (unital and not), the two Hoffman
/// examples, the general braiding and the flip braiding.
inline std::vector<std::pair<std::string, BraidedAlgebra>> builtin_algebras() {
  std::vector<std::pair<std::string, BraidedAlgebra>> r;
  r.emplace_back("diagonal", make_diagonal_algebra(6));
  r.emplace_back("diagonal-nonunital", make_diagonal_nonunital(6));
  r.emplace_back("hoffman", make_hoffman_example());
  r.emplace_back("hoffman-commutative", make_hoffman_commutative());
  r.emplace_back("general", make_general_example());
  r.emplace_back("flip", make_flip_algebra(6));
  return r;
}

inline BraidedAlgebra builtin_algebra(const std::string& name) {
  for (auto& [n, A] : builtin_algebras())
    if (n == name) return A;
  throw spec_error("unknown built-in algebra '" + name + "'");
}

}  // namespace qqsh
