#pragma once

// The tridendriform operations ≺, ≻, · on T⁺(A) that split ⋈_σ.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qqsh/braided.hpp"
#include "qqsh/error.hpp"
#include "qqsh/products.hpp"
#include "qqsh/report.hpp"
#include "qqsh/rotabaxter.hpp"
#include "qqsh/scalar.hpp"
#include "qqsh/tensor.hpp"

namespace qqsh {

/// ≺, ≻, · and ∗ with the ⋈ calls memoized.
class Tridendriform {
 public:
  explicit Tridendriform(const ProductContext& ctx) : ctx_(ctx), prod_(ctx_.algebra()) {}
  Tridendriform(const Tridendriform&) = delete;
  Tridendriform& operator=(const Tridendriform&) = delete;

  /// (a⊗x) ≺ (b⊗y) = a⊗(x ⋈ (b⊗y))
  Tensor prec(const Word& x, const Word& y) {
    check(x, y);
    Tensor r;
    detail::add_prefixed(r, Word{x[0]}, prod_(subword(x, 1, x.size() - 1), y), 1);
    return r;
  }

  /// (a⊗x) ≻ (b⊗y) = Σ b'⊗((a⊗x)' ⋈ y) with β((a⊗x)⊗̲b) = b'⊗̲(a⊗x)'
  Tensor succ(const Word& x, const Word& y) {
    check(x, y);
    Tensor r;
    Word yt = subword(y, 1, y.size() - 1);
    for (const auto& [s, c] : beta_words(ctx_.algebra(), x, Word{y[0]})) detail::add_prefixed(r, s[0], prod_(s[1], yt), c);
    return r;
  }

  /// (a⊗x) · (b⊗y) = Σ m(a⊗b')⊗(x' ⋈ y) with β(x⊗̲b) = b'⊗̲x'
  Tensor dot(const Word& x, const Word& y) {
    check(x, y);
    const BraidedAlgebra& A = ctx_.algebra();
    Tensor r;
    Word xt = subword(x, 1, x.size() - 1);
    Word yt = subword(y, 1, y.size() - 1);
    for (const auto& [s, c] : beta_words(A, xt, Word{y[0]})) {
      const auto& head = A.product(x[0], s[0][0]);
      if (head.empty()) continue;
      const Tensor& tail = prod_(s[1], yt);
      for (const auto& pt : head) detail::add_prefixed(r, Word{pt.letter}, tail, c * pt.coeff);
    }
    return r;
  }

  /// x ∗ y = x≺y + x≻y + x·y
  Tensor star(const Word& x, const Word& y) {
    Tensor r = prec(x, y);
    r += succ(x, y);
    r += dot(x, y);
    return r;
  }

  const Tensor& qqsh(const Word& x, const Word& y) { return prod_(x, y); }

  enum class Op { prec, succ, dot, star };

  Tensor apply(Op op, const Word& x, const Word& y) {
    switch (op) {
      case Op::prec: return prec(x, y);
      case Op::succ: return succ(x, y);
      case Op::dot: return dot(x, y);
      case Op::star: return star(x, y);
    }
    return {};
  }

  Tensor apply(Op op, const Tensor& x, const Tensor& y) {
    Tensor r;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) r.add(apply(op, a, b), ca * cb);
    return r;
  }

 private:
  static void check(const Word& x, const Word& y) {
    if (x.empty() || y.empty()) throw domain_error("tridendriform operations are defined on T⁺");
  }

  ProductContext ctx_;
  detail::InductiveProduct prod_;
};

namespace detail {

inline void require_t_plus(const Tensor& x) {
  for (const auto& [w, c] : x)
    if (w.empty()) throw domain_error("tridendriform operations are defined on T⁺");
}

}  // namespace detail

inline Tensor tri_prec(const ProductContext& ctx, const Tensor& x, const Tensor& y) {
  detail::require_t_plus(x);
  detail::require_t_plus(y);
  Tridendriform T(ctx);
  return T.apply(Tridendriform::Op::prec, x, y);
}
inline Tensor tri_succ(const ProductContext& ctx, const Tensor& x, const Tensor& y) {
  detail::require_t_plus(x);
  detail::require_t_plus(y);
  Tridendriform T(ctx);
  return T.apply(Tridendriform::Op::succ, x, y);
}
inline Tensor tri_dot(const ProductContext& ctx, const Tensor& x, const Tensor& y) {
  detail::require_t_plus(x);
  detail::require_t_plus(y);
  Tridendriform T(ctx);
  return T.apply(Tridendriform::Op::dot, x, y);
}

/// The seven relations and ∗ = ⋈ on all nonempty generator-word triples
/// (pairs for the splitting) of total length ≤ sample_deg.
inline Report verify_tridendriform(const ProductContext& ctx, int sample_deg) {
  using Op = Tridendriform::Op;
  Report r("tridendriform");
  Tridendriform T(ctx);
  const auto& gens = ctx.base().generators();
  for (const auto& p : word_tuples(gens, 2, sample_deg)) {
    Tensor s = T.star(p[0], p[1]);
    const Tensor& m = T.qqsh(p[0], p[1]);
    r.expect(s == m, "≺ + ≻ + · = ⋈",
             [&] { return to_string(p[0]) + " , " + to_string(p[1]) + ": " + detail::mismatch(s, m); });
  }
  struct Relation {
    const char* name;
    Op l_inner, l_outer;  // (x l_inner y) l_outer z
    Op r_inner, r_outer;  // x r_outer (y r_inner z)
  };
  static const Relation relations[] = {
      {"(x≺y)≺z = x≺(y∗z)", Op::prec, Op::prec, Op::star, Op::prec},
      {"(x≻y)≺z = x≻(y≺z)", Op::succ, Op::prec, Op::prec, Op::succ},
      {"(x∗y)≻z = x≻(y≻z)", Op::star, Op::succ, Op::succ, Op::succ},
      {"(x≻y)·z = x≻(y·z)", Op::succ, Op::dot, Op::dot, Op::succ},
      {"(x≺y)·z = x·(y≻z)", Op::prec, Op::dot, Op::succ, Op::dot},
      {"(x·y)≺z = x·(y≺z)", Op::dot, Op::prec, Op::prec, Op::dot},
      {"(x·y)·z = x·(y·z)", Op::dot, Op::dot, Op::dot, Op::dot},
  };
  for (const auto& t : word_tuples(gens, 3, sample_deg)) {
    Tensor x = Tensor::word(t[0]), z = Tensor::word(t[2]);
    for (const Relation& rel : relations) {
      Tensor lhs = T.apply(rel.l_outer, T.apply(rel.l_inner, t[0], t[1]), z);
      Tensor rhs = T.apply(rel.r_outer, x, T.apply(rel.r_inner, t[1], t[2]));
      r.expect(lhs == rhs, rel.name, [&] {
        return to_string(t[0]) + " , " + to_string(t[1]) + " , " + to_string(t[2]) + ": " + detail::mismatch(lhs, rhs);
      });
    }
  }
  return r;
}

/// On the unitalization with weight 1: x◊P(y) = x≺y, P(x)◊y = x≻y and
/// x◊y = x·y for nonempty words over A of total length ≤ max_total.
inline Report verify_rb_to_tridend(const ProductContext& ctx, int max_total = 4) {
  Report r("Rota-Baxter → tridendriform");
  if (!ctx.lambda().is_one()) throw domain_error("verify_rb_to_tridend: weight 1 only");
  const BraidedAlgebra& A = ctx.base();
  if (A.is_unital()) throw domain_error("verify_rb_to_tridend: expects a non-unital algebra to unitalize");
  BraidedAlgebra U = unitalize(A);
  RotaBaxterAlgebra R{ProductContext(U)};
  Tridendriform T(ctx);
  for (const auto& p : word_tuples(A.generators(), 2, max_total)) {
    Tensor x = Tensor::word(p[0]), y = Tensor::word(p[1]);
    auto witness = [&](const Tensor& a, const Tensor& b) {
      return to_string(p[0]) + " , " + to_string(p[1]) + ": " + detail::mismatch(a, b);
    };
    Tensor a1 = R.diamond(x, R.P(y)), b1 = T.prec(p[0], p[1]);
    r.expect(a1 == b1, "x◊P(y) = x≺y", [&] { return witness(a1, b1); });
    Tensor a2 = R.diamond(R.P(x), y), b2 = T.succ(p[0], p[1]);
    r.expect(a2 == b2, "P(x)◊y = x≻y", [&] { return witness(a2, b2); });
    Tensor a3 = R.diamond(x, y), b3 = T.dot(p[0], p[1]);
    r.expect(a3 == b3, "x◊y = x·y", [&] { return witness(a3, b3); });
  }
  return r;
}

}  // namespace qqsh
