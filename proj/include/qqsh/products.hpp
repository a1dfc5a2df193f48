#pragma once

// The quantum quasi-shuffle product ⋈ on T(A): the inductive recursion, the
// mixable-shuffle expansion and the n-fold formula, plus the quantum shuffle,
// Hoffman's ∗_q with its closed form, the power formula and the bialgebra
// checks.

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qqsh/braided.hpp"
#include "qqsh/error.hpp"
#include "qqsh/perm.hpp"
#include "qqsh/report.hpp"
#include "qqsh/scalar.hpp"
#include "qqsh/tensor.hpp"

namespace qqsh {

/// A braided algebra together with a weight λ; products use (A, λ·m, σ).
class ProductContext {
 public:
  explicit ProductContext(BraidedAlgebra A, Scalar lambda = 1)
      : base_(std::move(A)), scaled_(base_.scaled(lambda)), lambda_(std::move(lambda)) {}

  /// (A, m, σ) as given.
  const BraidedAlgebra& base() const noexcept { return base_; }
  /// (A, λ·m, σ), the algebra every product formula uses.
  const BraidedAlgebra& algebra() const noexcept { return scaled_; }
  const Scalar& lambda() const noexcept { return lambda_; }

 private:
  BraidedAlgebra base_;
  BraidedAlgebra scaled_;
  Scalar lambda_;
};

namespace detail {

/// p ⊗ t for a fixed prefix word.
inline void add_prefixed(Tensor& out, const Word& prefix, const Tensor& t, const Scalar& c) {
  for (const auto& [w, cw] : t) out.add(concat(prefix, w), c * cw);
}

struct WordPairOrder {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    WordOrder o;
    if (o(a.first, b.first)) return true;
    if (o(b.first, a.first)) return false;
    return o(a.second, b.second);
  }
};

/// The inductive recursion on words, memoized over the word pairs it visits.
class InductiveProduct {
 public:
  explicit InductiveProduct(const BraidedAlgebra& A) : A_(A) {}

  const Tensor& operator()(const Word& x, const Word& y) {
    auto key = std::make_pair(x, y);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Tensor r = compute(x, y);
    return memo_.emplace(std::move(key), std::move(r)).first->second;
  }

 private:
  Tensor compute(const Word& x, const Word& y) {
    if (x.empty()) return Tensor::word(y);
    if (y.empty()) return Tensor::word(x);
    Tensor r;
    Word a1{x[0]};
    Word xt = subword(x, 1, x.size() - 1);
    Word b1{y[0]};
    Word yt = subword(y, 1, y.size() - 1);
    // a1 ⊗ (x' ⋈ y)
    detail::add_prefixed(r, a1, (*this)(xt, y), 1);
    // (id ⊗ ⋈)(β_{i,1} ⊗ id)
    MultiTensor bx = beta_words(A_, x, b1);
    for (const auto& [s, c] : bx) {
      Tensor sub = (*this)(s[1], yt);
      detail::add_prefixed(r, s[0], sub, c);
    }
    // (m ⊗ ⋈)(id ⊗ β_{i-1,1} ⊗ id)
    MultiTensor bxt = beta_words(A_, xt, b1);
    for (const auto& [s, c] : bxt) {
      const auto& prod = A_.product(x[0], s[0][0]);
      if (prod.empty()) continue;
      Tensor sub = (*this)(s[1], yt);
      for (const auto& pt : prod) detail::add_prefixed(r, Word{pt.letter}, sub, c * pt.coeff);
    }
    return r;
  }

  const BraidedAlgebra& A_;
  std::map<std::pair<Word, Word>, Tensor, WordPairOrder> memo_;
};

/// Mixable shuffles grouped by permutation: for each w, the compositions
/// cp(S) over S ⊂ 𝒯^w (or S ⊂ 𝒮^w for the full group).
struct GroupedShuffles {
  struct Entry {
    Permutation w;
    std::vector<Composition> comps;
  };
  std::vector<Entry> entries;
};

inline GroupedShuffles group(const std::vector<MixableShuffle>& list, int n, bool full) {
  GroupedShuffles g;
  for (const auto& ms : list) {
    if (g.entries.empty() || !(g.entries.back().w == ms.w)) g.entries.push_back({ms.w, {}});
    g.entries.back().comps.push_back(full ? cp_full(ms.S, n) : cp_shuffle(ms.S, n));
  }
  return g;
}

inline const GroupedShuffles& mixable_table(int i, int j) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, GroupedShuffles> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({i, j});
  if (it == cache.end()) it = cache.emplace(std::make_pair(i, j), group(mixable_shuffles(i, j), i + j, false)).first;
  return it->second;
}

inline const GroupedShuffles& full_table(int n) {
  static std::mutex mu;
  static std::map<int, GroupedShuffles> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, group(barS_n(n), n, true)).first;
  return it->second;
}

inline Tensor expand_grouped(const BraidedAlgebra& A, const GroupedShuffles& g, const Word& z) {
  Tensor r;
  for (const auto& e : g.entries) {
    Tensor lifted = lift_word(A, e.w, z);
    for (const auto& [u, c] : lifted)
      for (const auto& I : e.comps) r.add(m_I(A, I, u), c);
  }
  return r;
}

}  // namespace detail

/// x ⋈ y by the inductive recursion.
inline Tensor qqsh_inductive(const ProductContext& ctx, const Tensor& x, const Tensor& y) {
  detail::InductiveProduct prod(ctx.algebra());
  Tensor r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add(prod(a, b), ca * cb);
  return r;
}

inline Tensor qqsh_inductive(const ProductContext& ctx, const Word& x, const Word& y) {
  detail::InductiveProduct prod(ctx.algebra());
  return prod(x, y);
}

/// x ⋈ y as Σ_{(w,S) ∈ 𝔖̄_{i,j}} m_{cp(S)} ∘ T_w, per pair of words.
inline Tensor qqsh_explicit(const ProductContext& ctx, const Word& x, const Word& y) {
  const auto& g = detail::mixable_table(static_cast<int>(x.size()), static_cast<int>(y.size()));
  return detail::expand_grouped(ctx.algebra(), g, concat(x, y));
}

inline Tensor qqsh_explicit(const ProductContext& ctx, const Tensor& x, const Tensor& y) {
  Tensor r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add(qqsh_explicit(ctx, a, b), ca * cb);
  return r;
}

/// Quantum shuffle: Σ_{w ∈ 𝔖_{i,j}} T_w, ignoring the product.
inline Tensor qsh(const ProductContext& ctx, const Tensor& x, const Tensor& y) {
  Tensor r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Word z = concat(a, b);
      for (const Permutation& w : shuffles(static_cast<int>(a.size()), static_cast<int>(b.size())))
        r.add(lift_word(ctx.algebra(), w, z), ca * cb);
    }
  return r;
}

/// a1 ⋈ ⋯ ⋈ an = Σ_{(w,S) ∈ 𝔖̄_n} m_{cp(S)} ∘ T_w (a1 ⊗ ⋯ ⊗ an).
inline Tensor nfold(const ProductContext& ctx, const Word& letters) {
  if (letters.empty()) return Tensor::unit();
  for (const Letter& l : letters) ctx.algebra().position(l.index);
  return detail::expand_grouped(ctx.algebra(), detail::full_table(static_cast<int>(letters.size())), letters);
}

/// nfold(a1..an) for every n-tuple of generators.
inline std::vector<Tensor> spanning_set(const ProductContext& ctx, int n) {
  std::vector<Tensor> out;
  for (const Word& w : all_words(ctx.base().nonunit_generators(), static_cast<std::size_t>(n)))
    out.push_back(nfold(ctx, w));
  return out;
}

/// spanning_set(k) for 1 ≤ k ≤ n.
inline std::vector<Tensor> spanning_family(const ProductContext& ctx, int n) {
  std::vector<Tensor> out;
  for (int k = 1; k <= n; ++k)
    for (auto& t : spanning_set(ctx, k)) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// Hoffman's ∗_q

namespace detail {

inline void require_hoffman(const ProductContext& ctx) {
  if (ctx.base().kind() != AlgebraKind::hoffman)
    throw domain_error("non-Hoffman context: algebra '" + ctx.base().name() + "'");
}

class HoffmanProduct {
 public:
  explicit HoffmanProduct(const BraidedAlgebra& A) : A_(A), q_(A.hoffman_q()) {}

  const Tensor& operator()(const Word& x, const Word& y) {
    auto key = std::make_pair(x, y);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Tensor r = compute(x, y);
    return memo_.emplace(std::move(key), std::move(r)).first->second;
  }

 private:
  Scalar qpow(int e) const { return q_.pow(static_cast<unsigned>(e)); }

  Tensor compute(const Word& x, const Word& y) {
    if (x.empty()) return Tensor::word(y);
    if (y.empty()) return Tensor::word(x);
    const Letter& a = x[0];
    const Letter& b = y[0];
    Word w1 = subword(x, 1, x.size() - 1);
    Word w2 = subword(y, 1, y.size() - 1);
    Tensor r;
    add_prefixed(r, Word{a}, (*this)(w1, y), 1);
    add_prefixed(r, Word{b}, (*this)(x, w2), qpow(total_degree(x) * b.degree));
    const auto& br = A_.product(a, b);
    if (!br.empty()) {
      Tensor rest = (*this)(w1, w2);
      Scalar f = qpow(total_degree(w1) * b.degree);
      for (const auto& pt : br) add_prefixed(r, Word{pt.letter}, rest, f * pt.coeff);
    }
    return r;
  }

  const BraidedAlgebra& A_;
  Scalar q_;
  std::map<std::pair<Word, Word>, Tensor, WordPairOrder> memo_;
};

}  // namespace detail

/// Hoffman's recursion (a w1) ∗_q (b w2) = a(w1 ∗ b w2) + q^{|a w1||b|} b(a w1 ∗ w2)
/// + q^{|w1||b|} [a,b](w1 ∗ w2).
inline Tensor hoffman_product(const ProductContext& ctx, const Tensor& x, const Tensor& y) {
  detail::require_hoffman(ctx);
  detail::HoffmanProduct prod(ctx.algebra());
  Tensor r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add(prod(a, b), ca * cb);
  return r;
}

/// Which permutation's descents index the inner sum of the closed form.
enum class DescentSource {
  inverse,  // C(w⁻¹): agrees with the n-fold formula
  literal,  // C(w), as the closed form is usually printed
};

/// a1 ∗_q ⋯ ∗_q an = Σ_w q^{Σ_{ι(w)} |a_i||a_j|} Σ_{I ⪰ C} I[a_{w⁻¹(1)} ⊗ ⋯ ⊗ a_{w⁻¹(n)}].
inline Tensor hoffman_nfold_closed(const ProductContext& ctx, const Word& letters,
                                   DescentSource source = DescentSource::inverse) {
  detail::require_hoffman(ctx);
  const BraidedAlgebra& A = ctx.algebra();
  int n = static_cast<int>(letters.size());
  if (n == 0) return Tensor::unit();
  Tensor r;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    Permutation w(img);
    Permutation inv = w.inverse();
    int e = 0;
    for (const auto& [i, j] : inversions(w))
      e += letters[static_cast<std::size_t>(i - 1)].degree * letters[static_cast<std::size_t>(j - 1)].degree;
    Scalar c = A.hoffman_q().pow(static_cast<unsigned>(e));
    Word permuted;
    for (int k = 1; k <= n; ++k) permuted.push_back(letters[static_cast<std::size_t>(inv(k) - 1)]);
    Composition C = descent_composition(source == DescentSource::inverse ? inv : w);
    for (const Composition& I : refinements(C)) r.add(m_I(A, I, permuted), c);
  } while (std::next_permutation(img.begin(), img.end()));
  return r;
}

// ---------------------------------------------------------------------------
// Power formula

/// e_i^{⋈k} = Σ_n Σ_{l1+⋯+ln=k} λ^{k−n} (k)!/((l1)!⋯(ln)!) e_{l1 i} ⊗ ⋯ ⊗ e_{ln i},
/// q-factorials in base q_{ii}. Letters beyond a truncation are 0.
inline Tensor power_formula(const ProductContext& ctx, int i, int k) {
  const BraidedAlgebra& A = ctx.base();
  if (A.kind() != AlgebraKind::diagonal) throw domain_error("power_formula needs a diagonal algebra");
  if (k < 1) throw domain_error("power_formula needs k >= 1");
  const Letter& ei = A.letter(i);
  Scalar base = A.q_of(ei, ei);
  Tensor r;
  for (const Composition& parts : compositions(k)) {
    Word w;
    bool zero = false;
    for (int l : parts) {
      if (!A.has_letter(l * i)) {
        if (A.has_overflow())
          throw cap_error("power_formula: e" + std::to_string(l * i) + " exceeds the algebra's cap");
        zero = true;
        break;
      }
      w.push_back(A.letter(l * i));
    }
    if (zero) continue;
    std::vector<unsigned> up(parts.begin(), parts.end());
    Scalar c = q_multinomial(static_cast<unsigned>(k), up, base) *
               ctx.lambda().pow(static_cast<unsigned>(k - static_cast<int>(parts.size())));
    r.add(w, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bialgebra and braided-algebra structure of T(A)

/// δ(x⋈y) = (⋈⊗̲⋈)(id⊗̲β⊗̲id)(δx ⊗̲ δy) on generator words with
/// |x|+|y| ≤ max_deg, and primitivity of the generators.
inline Report verify_bialgebra(const ProductContext& ctx, int max_deg) {
  Report r("bialgebra");
  const BraidedAlgebra& A = ctx.algebra();
  std::vector<Letter> gens = ctx.base().nonunit_generators();
  for (const Letter& a : gens) {
    MultiTensor d = deconcat(Tensor::letter(a));
    MultiTensor expect(2);
    expect.add(Slots{Word{a}, Word{}}, 1);
    expect.add(Slots{Word{}, Word{a}}, 1);
    r.expect(d == expect, "primitive generator", [&] { return "e" + std::to_string(a.index) + ": " + d.to_string(); });
  }
  detail::InductiveProduct prod(A);
  auto star = [&](const Word& u, const Word& v) { return prod(u, v); };
  for (int total = 0; total <= max_deg; ++total)
    for (int i = 0; i <= total; ++i)
      for (const Word& x : all_words(gens, static_cast<std::size_t>(i)))
        for (const Word& y : all_words(gens, static_cast<std::size_t>(total - i))) {
          MultiTensor lhs = deconcat(prod(x, y));
          MultiTensor four(4);
          for (const auto& [sx, cx] : deconcat(Tensor::word(x)))
            for (const auto& [sy, cy] : deconcat(Tensor::word(y)))
              four.add(Slots{sx[0], sx[1], sy[0], sy[1]}, cx * cy);
          MultiTensor braided = beta(A, four, 1);
          MultiTensor rhs = multiply_at(multiply_at(braided, 2, star), 0, star);
          r.expect(lhs == rhs, "δ(x⋈y) = (⋈⊗̲⋈)(id⊗̲β⊗̲id)(δx⊗̲δy)",
                   [&] { return to_string(x) + " , " + to_string(y) + ": " + detail::mismatch(lhs, rhs); });
        }
  return r;
}

/// β(⋈⊗̲id) = (id⊗̲⋈)β₁β₂ and β(id⊗̲⋈) = (⋈⊗̲id)β₂β₁ on generator words
/// with total length ≤ max_total.
inline Report verify_product_braiding(const ProductContext& ctx, int max_total) {
  Report r("⋈ braiding compatibility");
  const BraidedAlgebra& A = ctx.algebra();
  std::vector<Letter> gens = ctx.base().nonunit_generators();
  detail::InductiveProduct prod(A);
  auto star = [&](const Word& u, const Word& v) { return prod(u, v); };
  for (int total = 0; total <= max_total; ++total)
    for (int i = 0; i <= total; ++i)
      for (int j = 0; i + j <= total; ++j) {
        int k = total - i - j;
        for (const Word& x : all_words(gens, static_cast<std::size_t>(i)))
          for (const Word& y : all_words(gens, static_cast<std::size_t>(j)))
            for (const Word& z : all_words(gens, static_cast<std::size_t>(k))) {
              MultiTensor xyz(3);
              xyz.add(Slots{x, y, z}, 1);
              auto witness = [&](const MultiTensor& l, const MultiTensor& rr) {
                return to_string(x) + " | " + to_string(y) + " | " + to_string(z) + ": " + detail::mismatch(l, rr);
              };
              MultiTensor lhs = beta(A, multiply_at(xyz, 0, star));
              MultiTensor rhs = multiply_at(beta(A, beta(A, xyz, 1), 0), 1, star);
              r.expect(lhs == rhs, "β(⋈⊗̲id) = (id⊗̲⋈)β₁β₂", [&] { return witness(lhs, rhs); });
              MultiTensor lhs2 = beta(A, multiply_at(xyz, 1, star));
              MultiTensor rhs2 = multiply_at(beta(A, beta(A, xyz, 0), 1), 0, star);
              r.expect(lhs2 == rhs2, "β(id⊗̲⋈) = (⋈⊗̲id)β₂β₁", [&] { return witness(lhs2, rhs2); });
            }
      }
  return r;
}

}  // namespace qqsh
