#pragma once

// The Rota-Baxter algebra R_{σ,λ}(A) = (A⊗T(A), ◊_{σ,λ}) with operator P_A,
// held inside T(A) as words of length ≥ 1 whose first letter is the A-factor.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qqsh/braided.hpp"
#include "qqsh/error.hpp"
#include "qqsh/products.hpp"
#include "qqsh/report.hpp"
#include "qqsh/scalar.hpp"
#include "qqsh/tensor.hpp"

namespace qqsh {

/// How ◊ moves the tail of the left factor past the head of the right one.
/// `flip` drops the braiding; it exists only to show the identity needs it.
enum class DiamondBraid { beta, flip };

namespace detail {

inline void require_positive_length(const Tensor& x, const char* what) {
  for (const auto& [w, c] : x)
    if (w.empty()) throw domain_error(std::string(what) + ": empty word in A⊗T(A)");
}

}  // namespace detail

/// ◊_{σ,λ} and P_A over a unital braided algebra, memoizing the ⋈_λ calls.
class RotaBaxterAlgebra {
 public:
  explicit RotaBaxterAlgebra(const ProductContext& ctx, DiamondBraid mode = DiamondBraid::beta)
      : ctx_(ctx), prod_(ctx_.algebra()), mode_(mode) {
    if (!ctx_.base().is_unital()) throw domain_error("Rota-Baxter algebra needs a unital algebra");
  }
  RotaBaxterAlgebra(const RotaBaxterAlgebra&) = delete;
  RotaBaxterAlgebra& operator=(const RotaBaxterAlgebra&) = delete;

  const ProductContext& context() const noexcept { return ctx_; }
  const Scalar& lambda() const noexcept { return ctx_.lambda(); }
  const Letter& unit_letter() const { return *ctx_.base().unit(); }

  /// (a⊗̲x)◊(b⊗̲y) = Σ m(a⊗b')⊗(x'⋈_λ y) with β(x⊗̲b) = b'⊗̲x'.
  Tensor diamond(const Word& x, const Word& y) {
    if (x.empty() || y.empty()) throw domain_error("diamond: empty word in A⊗T(A)");
    const BraidedAlgebra& A = ctx_.base();
    Word xt = subword(x, 1, x.size() - 1);
    Word b{y[0]};
    Word yt = subword(y, 1, y.size() - 1);
    MultiTensor moved(2);
    if (mode_ == DiamondBraid::beta) {
      moved = beta_words(A, xt, b);
    } else {
      moved.add(Slots{b, xt}, 1);
    }
    Tensor r;
    for (const auto& [s, c] : moved) {
      const auto& head = A.product(x[0], s[0][0]);
      if (head.empty()) continue;
      const Tensor& tail = prod_(s[1], yt);
      for (const auto& pt : head) detail::add_prefixed(r, Word{pt.letter}, tail, c * pt.coeff);
    }
    return r;
  }

  Tensor diamond(const Tensor& x, const Tensor& y) {
    detail::require_positive_length(x, "diamond");
    detail::require_positive_length(y, "diamond");
    Tensor r;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) r.add(diamond(a, b), ca * cb);
    return r;
  }

  /// P_A prepends 1_A: a₀⊗̲u ↦ 1_A⊗̲a₀⊗u and a₀⊗̲ν ↦ 1_A⊗̲ν·a₀.
  Tensor P(const Tensor& x) const {
    detail::require_positive_length(x, "P_A");
    Tensor r;
    for (const auto& [w, c] : x) r.add(concat(Word{unit_letter()}, w), c);
    return r;
  }

  /// x ⋆_P y = x◊P(y) + P(x)◊y + λ x◊y.
  Tensor star(const Tensor& x, const Tensor& y) {
    Tensor r = diamond(x, P(y));
    r += diamond(P(x), y);
    r.add(diamond(x, y), lambda());
    return r;
  }

  /// The unit 1_A ⊗ 1 of R.
  Tensor one() const { return Tensor::letter(unit_letter()); }

 private:
  ProductContext ctx_;
  detail::InductiveProduct prod_;
  DiamondBraid mode_;
};

inline Tensor diamond(const ProductContext& ctx, const Tensor& x, const Tensor& y) {
  RotaBaxterAlgebra R(ctx);
  return R.diamond(x, y);
}

inline Tensor P_A(const ProductContext& ctx, const Tensor& x) { return RotaBaxterAlgebra(ctx).P(x); }

inline Tensor star_P(const ProductContext& ctx, const Tensor& x, const Tensor& y) {
  RotaBaxterAlgebra R(ctx);
  return R.star(x, y);
}

/// Nonempty generator words of total length ≤ max_total, split into k parts.
inline std::vector<std::vector<Word>> word_tuples(const std::vector<Letter>& letters, int k, int max_total) {
  std::vector<std::vector<Word>> out;
  std::vector<Word> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    int rest = k - static_cast<int>(cur.size()) - 1;
    for (int n = 1; n <= left - rest; ++n)
      for (const Word& w : all_words(letters, static_cast<std::size_t>(n))) {
        cur.push_back(w);
        self(self, left - n);
        cur.pop_back();
      }
  };
  rec(rec, max_total);
  return out;
}

/// Distinct rationals 0, 1, −1, 2, −2, ... used to pin down a polynomial in λ.
inline std::vector<Scalar> lambda_sample_points(std::size_t count) {
  std::vector<Scalar> r;
  for (int k = 0; r.size() < count; ++k) {
    r.emplace_back(Rational(k));
    if (k > 0 && r.size() < count) r.emplace_back(Rational(-k));
  }
  return r;
}

namespace detail {

/// Runs `check(R, witness_prefix)` for λ fixed, or for symbolic λ at enough
/// distinct rational points to determine a polynomial of degree < points.
template <typename Check>
Report for_lambda(const std::string& name, const BraidedAlgebra& A, const std::optional<Scalar>& lambda,
                  std::size_t points, DiamondBraid mode, Check&& check) {
  Report r(name);
  if (lambda) {
    RotaBaxterAlgebra R(ProductContext(A, *lambda), mode);
    check(R, r, std::string());
    return r;
  }
  r.note("λ symbolic: checked at " + std::to_string(points) + " distinct rational values, above the λ-degree bound");
  for (const Scalar& l : lambda_sample_points(points)) {
    RotaBaxterAlgebra R(ProductContext(A, l), mode);
    check(R, r, "λ=" + l.to_string() + ": ");
  }
  return r;
}

}  // namespace detail

/// P(x)◊P(y) = P(x◊P(y)) + P(P(x)◊y) + λP(x◊y) on all generator-word pairs of
/// total length ≤ sample_deg. With no λ given, λ is symbolic: both sides are
/// polynomials in λ of degree ≤ sample_deg + 2, so agreement at sample_deg + 3
/// distinct values is an exact proof.
inline Report verify_rb(const BraidedAlgebra& A, int sample_deg, const std::optional<Scalar>& lambda = std::nullopt,
                        DiamondBraid mode = DiamondBraid::beta) {
  auto pairs = word_tuples(A.generators(), 2, sample_deg);
  return detail::for_lambda(
      "Rota-Baxter identity", A, lambda, static_cast<std::size_t>(sample_deg) + 3, mode,
      [&](RotaBaxterAlgebra& R, Report& r, const std::string& pre) {
        for (const auto& p : pairs) {
          Tensor x = Tensor::word(p[0]), y = Tensor::word(p[1]);
          Tensor px = R.P(x), py = R.P(y);
          Tensor lhs = R.diamond(px, py);
          Tensor rhs = R.P(R.diamond(x, py));
          rhs += R.P(R.diamond(px, y));
          rhs.add(R.P(R.diamond(x, y)), R.lambda());
          r.expect(lhs == rhs, "P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)", [&] {
            return pre + to_string(p[0]) + " , " + to_string(p[1]) + ": " + detail::mismatch(lhs, rhs);
          });
        }
      });
}

/// ◊ is associative on triples and 1_A⊗1 is a two-sided unit.
inline Report verify_diamond_algebra(const BraidedAlgebra& A, int sample_deg,
                                     const std::optional<Scalar>& lambda = std::nullopt) {
  auto triples = word_tuples(A.generators(), 3, sample_deg);
  auto singles = word_tuples(A.generators(), 1, sample_deg);
  return detail::for_lambda(
      "◊ associative and unital", A, lambda, static_cast<std::size_t>(sample_deg) + 2, DiamondBraid::beta,
      [&](RotaBaxterAlgebra& R, Report& r, const std::string& pre) {
        for (const auto& t : triples) {
          Tensor x = Tensor::word(t[0]), y = Tensor::word(t[1]), z = Tensor::word(t[2]);
          Tensor l = R.diamond(R.diamond(x, y), z);
          Tensor rr = R.diamond(x, R.diamond(y, z));
          r.expect(l == rr, "(x◊y)◊z = x◊(y◊z)", [&] {
            return pre + to_string(t[0]) + " , " + to_string(t[1]) + " , " + to_string(t[2]) + ": " +
                   detail::mismatch(l, rr);
          });
        }
        for (const auto& s : singles) {
          Tensor x = Tensor::word(s[0]);
          Tensor l = R.diamond(R.one(), x), rr = R.diamond(x, R.one());
          r.expect(l == x && rr == x, "1◊x = x = x◊1", [&] { return pre + to_string(s[0]); });
        }
      });
}

namespace detail {

inline MultiTensor apply_P_slot(const RotaBaxterAlgebra& R, const MultiTensor& z, std::size_t slot) {
  return apply_at(z, slot, [&](const Word& w) { return R.P(Tensor::word(w)); });
}

}  // namespace detail

/// β(P⊗̲P) = (P⊗̲P)β on nonempty slot pairs of total length ≤ max_total, and
/// (R, ◊, β) satisfies both braided-algebra identities on triples.
inline Report verify_braided_rb(const ProductContext& ctx, int max_total = 4) {
  Report r("braided Rota-Baxter");
  RotaBaxterAlgebra R(ctx);
  const BraidedAlgebra& A = ctx.base();
  for (const auto& p : word_tuples(A.generators(), 2, max_total)) {
    MultiTensor xy(2);
    xy.add(Slots{p[0], p[1]}, 1);
    MultiTensor pp = detail::apply_P_slot(R, detail::apply_P_slot(R, xy, 0), 1);
    MultiTensor lhs = beta(A, pp);
    MultiTensor b = beta(A, xy);
    MultiTensor rhs = detail::apply_P_slot(R, detail::apply_P_slot(R, b, 0), 1);
    r.expect(lhs == rhs, "β(P⊗̲P) = (P⊗̲P)β",
             [&] { return to_string(p[0]) + " , " + to_string(p[1]) + ": " + detail::mismatch(lhs, rhs); });
  }
  auto mul = [&](const Word& a, const Word& b) { return R.diamond(a, b); };
  for (const auto& t : word_tuples(A.generators(), 3, max_total)) {
    MultiTensor xyz(3);
    xyz.add(Slots{t[0], t[1], t[2]}, 1);
    auto witness = [&](const MultiTensor& a, const MultiTensor& b) {
      return to_string(t[0]) + " , " + to_string(t[1]) + " , " + to_string(t[2]) + ": " + detail::mismatch(a, b);
    };
    MultiTensor l1 = beta(A, multiply_at(xyz, 0, mul));
    MultiTensor r1 = multiply_at(beta(A, beta(A, xyz, 1), 0), 1, mul);
    r.expect(l1 == r1, "β(◊⊗id) = (id⊗◊)β1β2", [&] { return witness(l1, r1); });
    MultiTensor l2 = beta(A, multiply_at(xyz, 1, mul));
    MultiTensor r2 = multiply_at(beta(A, beta(A, xyz, 0), 1), 0, mul);
    r.expect(l2 == r2, "β(id⊗◊) = (◊⊗id)β2β1", [&] { return witness(l2, r2); });
  }
  return r;
}

/// For ⋆_P: first the intertwining hypotheses β(P⊗id) = (id⊗P)β and
/// β(id⊗P) = (P⊗id)β, then the conclusions (Rota-Baxter identity for ⋆_P,
/// associativity, β(P⊗P) = (P⊗P)β and the braided-algebra identities for ⋆_P).
/// Hypotheses and conclusions are reported separately.
struct StarReport {
  Report hypotheses{"⋆_P hypotheses"};
  Report conclusion{"⋆_P conclusion"};
  bool ok() const { return hypotheses.ok() && conclusion.ok(); }
};

inline StarReport verify_star_braided_rb(const ProductContext& ctx, int max_total = 4) {
  StarReport out;
  RotaBaxterAlgebra R(ctx);
  const BraidedAlgebra& A = ctx.base();
  auto pairs = word_tuples(A.generators(), 2, max_total);
  for (const auto& p : pairs) {
    MultiTensor xy(2);
    xy.add(Slots{p[0], p[1]}, 1);
    MultiTensor b = beta(A, xy);
    auto witness = [&](const MultiTensor& a, const MultiTensor& c) {
      return to_string(p[0]) + " , " + to_string(p[1]) + ": " + detail::mismatch(a, c);
    };
    MultiTensor l1 = beta(A, detail::apply_P_slot(R, xy, 0));
    MultiTensor r1 = detail::apply_P_slot(R, b, 1);
    out.hypotheses.expect(l1 == r1, "β(P⊗id) = (id⊗P)β", [&] { return witness(l1, r1); });
    MultiTensor l2 = beta(A, detail::apply_P_slot(R, xy, 1));
    MultiTensor r2 = detail::apply_P_slot(R, b, 0);
    out.hypotheses.expect(l2 == r2, "β(id⊗P) = (P⊗id)β", [&] { return witness(l2, r2); });
  }
  Report& r = out.conclusion;
  // star raises length by one, so products stay within max_total + 1 letters
  for (const auto& p : pairs) {
    Tensor x = Tensor::word(p[0]), y = Tensor::word(p[1]);
    Tensor px = R.P(x), py = R.P(y);
    Tensor lhs = R.star(px, py);
    Tensor rhs = R.P(R.star(x, py));
    rhs += R.P(R.star(px, y));
    rhs.add(R.P(R.star(x, y)), R.lambda());
    r.expect(lhs == rhs, "Rota-Baxter identity for ⋆_P",
             [&] { return to_string(p[0]) + " , " + to_string(p[1]) + ": " + detail::mismatch(lhs, rhs); });
    MultiTensor xy(2);
    xy.add(Slots{p[0], p[1]}, 1);
    MultiTensor pp = detail::apply_P_slot(R, detail::apply_P_slot(R, xy, 0), 1);
    MultiTensor bl = beta(A, pp);
    MultiTensor br = detail::apply_P_slot(R, detail::apply_P_slot(R, beta(A, xy), 0), 1);
    r.expect(bl == br, "β(P⊗P) = (P⊗P)β",
             [&] { return to_string(p[0]) + " , " + to_string(p[1]) + ": " + detail::mismatch(bl, br); });
  }
  auto mul = [&](const Word& a, const Word& b) { return R.star(Tensor::word(a), Tensor::word(b)); };
  for (const auto& t : word_tuples(A.generators(), 3, max_total)) {
    Tensor x = Tensor::word(t[0]), y = Tensor::word(t[1]), z = Tensor::word(t[2]);
    auto names = [&] { return to_string(t[0]) + " , " + to_string(t[1]) + " , " + to_string(t[2]) + ": "; };
    Tensor l = R.star(R.star(x, y), z), rr = R.star(x, R.star(y, z));
    r.expect(l == rr, "⋆_P associative", [&] { return names() + detail::mismatch(l, rr); });
    MultiTensor xyz(3);
    xyz.add(Slots{t[0], t[1], t[2]}, 1);
    MultiTensor l1 = beta(A, multiply_at(xyz, 0, mul));
    MultiTensor r1 = multiply_at(beta(A, beta(A, xyz, 1), 0), 1, mul);
    r.expect(l1 == r1, "β(⋆⊗id) = (id⊗⋆)β1β2", [&] { return names() + detail::mismatch(l1, r1); });
    MultiTensor l2 = beta(A, multiply_at(xyz, 1, mul));
    MultiTensor r2 = multiply_at(beta(A, beta(A, xyz, 0), 1), 0, mul);
    r.expect(l2 == r2, "β(id⊗⋆) = (⋆⊗id)β2β1", [&] { return names() + detail::mismatch(l2, r2); });
  }
  return out;
}

}  // namespace qqsh
