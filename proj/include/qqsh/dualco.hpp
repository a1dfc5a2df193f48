#pragma once

// The dual side: braided coalgebras, the iterated coproduct Δ_{σ,i}, the
// maps Φ1, Φ2, Φ on T(C), pairings and the duality adj(Φ) = ⋈.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qqsh/braided.hpp"
#include "qqsh/error.hpp"
#include "qqsh/matrix.hpp"
#include "qqsh/perm.hpp"
#include "qqsh/products.hpp"
#include "qqsh/report.hpp"
#include "qqsh/scalar.hpp"
#include "qqsh/tensor.hpp"

namespace qqsh {

/// A nondegenerate bilinear form between A and C. Both sides are labeled by
/// the same letters; entry (a, c) is ⟨a, c⟩.
class Pairing {
 public:
  /// ⟨e_a, e_c⟩ = δ_{ac}.
  static Pairing kronecker(const std::vector<Letter>& letters) {
    std::map<IndexPair, Scalar> t;
    for (const Letter& l : letters) t[{l.index, l.index}] = 1;
    return Pairing(letters, std::move(t));
  }

  /// Missing entries are 0. Throws if the table is degenerate or its inverse
  /// leaves the Laurent ring.
  Pairing(std::vector<Letter> letters, std::map<IndexPair, Scalar> table)
      : letters_(std::move(letters)), table_(std::move(table)) {
    std::size_t n = letters_.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (letters_[k].index < 0) throw spec_error("pairing: negative letter index");
      if (static_cast<std::size_t>(letters_[k].index) >= pos_.size())
        pos_.resize(static_cast<std::size_t>(letters_[k].index) + 1, -1);
      pos_[static_cast<std::size_t>(letters_[k].index)] = static_cast<int>(k);
    }
    M_ = Matrix(n, n);
    for (const auto& [p, c] : table_) M_(position(p.first), position(p.second)) = c;
    try {
      inv_ = inverse(M_);
    } catch (const Error& e) {
      throw spec_error(std::string("degenerate pairing: ") + e.what());
    }
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t position(int index) const {
    if (index < 0 || static_cast<std::size_t>(index) >= pos_.size() || pos_[static_cast<std::size_t>(index)] < 0)
      throw domain_error("pairing: unknown letter e" + std::to_string(index));
    return static_cast<std::size_t>(pos_[static_cast<std::size_t>(index)]);
  }
  const Scalar& operator()(const Letter& a, const Letter& c) const {
    return M_(position(a.index), position(c.index));
  }
  const Matrix& matrix() const noexcept { return M_; }
  const Matrix& inverse_matrix() const noexcept { return inv_; }
  const std::map<IndexPair, Scalar>& table() const noexcept { return table_; }

 private:
  std::vector<Letter> letters_;
  std::map<IndexPair, Scalar> table_;
  std::vector<int> pos_;
  Matrix M_;
  Matrix inv_;
};

/// ⟨a1⋯an, c1⋯cn⟩ = ∏⟨ai, ci⟩; words of different lengths pair to 0.
inline Scalar pairing_words(const Pairing& P, const Word& x, const Word& y) {
  if (x.size() != y.size()) return {};
  Scalar r = 1;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Scalar& c = P(x[k], y[k]);
    if (c.is_zero()) return {};
    r *= c;
  }
  return r;
}

inline Scalar pairing_eval(const Pairing& P, const Tensor& x, const Tensor& y) {
  Scalar r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Scalar p = pairing_words(P, a, b);
      if (!p.is_zero()) r += ca * cb * p;
    }
  return r;
}

/// ⟨u⊗̲v, x⊗̲y⟩ = ⟨u,x⟩⟨v,y⟩, extended to equal arities.
inline Scalar pairing_eval2(const Pairing& P, const MultiTensor& z, const MultiTensor& w) {
  if (z.arity() != w.arity()) throw domain_error("pairing_eval2: arity mismatch");
  Scalar r;
  for (const auto& [s, cs] : z)
    for (const auto& [t, ct] : w) {
      Scalar p = 1;
      for (std::size_t k = 0; k < s.size() && !p.is_zero(); ++k) p *= pairing_words(P, s[k], t[k]);
      if (!p.is_zero()) r += cs * ct * p;
    }
  return r;
}

/// A braided coalgebra (C, Δ, τ) on finitely many generators, with an
/// optional counit. The braiding is held as a braided space (zero product) so
/// lifts and β come from `braided`.
class BraidedCoalgebra {
 public:
  BraidedCoalgebra(BraidedAlgebra space, std::map<int, MultiTensor> coproduct,
                   std::optional<std::map<int, Scalar>> counit)
      : space_(std::move(space)), coproduct_(std::move(coproduct)), counit_(std::move(counit)) {
    for (const Letter& l : space_.generators())
      if (!coproduct_.count(l.index)) coproduct_.emplace(l.index, MultiTensor(2));
  }

  const std::vector<Letter>& generators() const noexcept { return space_.generators(); }
  /// The braided space (C, τ).
  const BraidedAlgebra& space() const noexcept { return space_; }
  const MultiTensor& coproduct(const Letter& c) const {
    auto it = coproduct_.find(c.index);
    if (it == coproduct_.end()) throw domain_error("coproduct: unknown letter e" + std::to_string(c.index));
    return it->second;
  }
  bool has_counit() const noexcept { return counit_.has_value(); }
  Scalar counit(const Letter& c) const {
    if (!counit_) throw domain_error("coalgebra has no counit");
    auto it = counit_->find(c.index);
    return it == counit_->end() ? Scalar() : it->second;
  }

 private:
  BraidedAlgebra space_;
  std::map<int, MultiTensor> coproduct_;
  std::optional<std::map<int, Scalar>> counit_;
};

/// Δ applied to slot `slot` of z, which must hold one-letter words there.
inline MultiTensor coproduct_at(const BraidedCoalgebra& C, const MultiTensor& z, std::size_t slot) {
  if (slot >= z.arity()) throw domain_error("coproduct_at: slot out of range");
  MultiTensor r(z.arity() + 1);
  for (const auto& [s, c] : z) {
    if (s[slot].size() != 1) throw domain_error("coproduct_at: slot does not hold a letter");
    for (const auto& [d, cd] : C.coproduct(s[slot][0])) {
      Slots t(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(slot));
      t.push_back(d[0]);
      t.push_back(d[1]);
      t.insert(t.end(), s.begin() + static_cast<std::ptrdiff_t>(slot + 1), s.end());
      r.add(t, c * cd);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Adjoints

/// adj(f) for f: V → V' given by F (column j = f(basis j)), under pairings
/// with Gram matrices P (V×W) and P2 (V'×W'): adj(f) = P⁻¹ Fᵀ P2.
inline Matrix adjoint_matrix(const Matrix& F, const Matrix& P_inv, const Matrix& P2) {
  return P_inv * F.transposed() * P2;
}

namespace detail {

/// X = P⁻¹ M P⁻ᵀ, i.e. the coefficients (d, e) with ⟨a⊗b, Σ X_de d⊗e⟩ = M_ab.
inline Matrix pull_back_pair(const Pairing& P, const Matrix& M) {
  return P.inverse_matrix() * M * P.inverse_matrix().transposed();
}

}  // namespace detail

inline Report verify_braided_coalgebra(const BraidedCoalgebra& C);

/// (C, adj(m), adj(σ)) for a pairing between A and C; validated as a
/// braided coalgebra.
inline BraidedCoalgebra adjoint_coalgebra(const BraidedAlgebra& A, const Pairing& P) {
  if (A.has_overflow()) throw domain_error("adjoint_coalgebra: capped algebras have no finite adjoint");
  const auto& gens = A.generators();
  std::size_t G = gens.size();
  if (P.letters().size() != G) throw spec_error("pairing size does not match the algebra");
  for (const Letter& l : gens) P.position(l.index);
  const Matrix& Pm = P.matrix();
  auto idx = [&](const Letter& l) { return P.position(l.index); };
  std::vector<Letter> by_pos(G);
  for (const Letter& l : gens) by_pos[idx(l)] = l;

  // Δ(c): M(c)_ab = Σ_f m_ab^f ⟨f, c⟩
  std::map<int, MultiTensor> coproduct;
  for (const Letter& c : gens) {
    Matrix M(G, G);
    for (const Letter& a : gens)
      for (const Letter& b : gens)
        for (const auto& pt : A.product(a, b)) M(idx(a), idx(b)) += pt.coeff * Pm(idx(pt.letter), idx(c));
    Matrix X = detail::pull_back_pair(P, M);
    MultiTensor d(2);
    for (std::size_t i = 0; i < G; ++i)
      for (std::size_t j = 0; j < G; ++j) d.add(Slots{Word{by_pos[i]}, Word{by_pos[j]}}, X(i, j));
    coproduct.emplace(c.index, std::move(d));
  }

  // τ(c⊗d): L(c,d)_ab = Σ s_ab^{ef} ⟨e,c⟩⟨f,d⟩
  BraidingSpec tau;
  tau.kind = BraidingSpec::Kind::general;
  for (const Letter& c : gens)
    for (const Letter& d : gens) {
      Matrix L(G, G);
      for (const Letter& a : gens)
        for (const Letter& b : gens)
          for (const auto& t : A.braid(a, b))
            L(idx(a), idx(b)) += t.coeff * Pm(idx(t.left), idx(c)) * Pm(idx(t.right), idx(d));
      Matrix T = detail::pull_back_pair(P, L);
      auto& entry = tau.table[{c.index, d.index}];
      for (std::size_t i = 0; i < G; ++i)
        for (std::size_t j = 0; j < G; ++j)
          if (!T(i, j).is_zero()) entry.emplace_back(by_pos[i].index, by_pos[j].index, T(i, j));
    }
  // keep the diagonal representation when τ is diagonal
  bool diagonal = true;
  for (const auto& [p, terms] : tau.table)
    if (terms.size() > 1 || (terms.size() == 1 && !(std::get<0>(terms[0]) == p.second && std::get<1>(terms[0]) == p.first)))
      diagonal = false;
  if (diagonal) {
    BraidingSpec dt;
    for (const auto& [p, terms] : tau.table) dt.q_of[p] = terms.empty() ? Scalar() : std::get<2>(terms[0]);
    tau = std::move(dt);
  }
  BraidedAlgebra space = BraidedAlgebra::unchecked(gens, std::move(tau), ProductSpec{}, std::nullopt,
                                                   AlgebraKind::general, A.name() + " dual");
  std::optional<std::map<int, Scalar>> counit;
  if (A.unit()) {
    counit.emplace();
    for (const Letter& c : gens) (*counit)[c.index] = Pm(idx(*A.unit()), idx(c));
  }
  BraidedCoalgebra C(std::move(space), std::move(coproduct), std::move(counit));
  Report r = verify_braided_coalgebra(C);
  if (!r.ok())
    throw spec_error("adjoint coalgebra invalid: " + r.violations().front().check + " at " +
                     r.violations().front().witness);
  return C;
}

/// Def. 4.1 on generator pairs, coassociativity, counit laws, YBE for τ.
inline Report verify_braided_coalgebra(const BraidedCoalgebra& C) {
  Report r("braided coalgebra");
  const BraidedAlgebra& S = C.space();
  r.merge(verify_braiding_invertible(S));
  r.merge(verify_yang_baxter(S));
  for (const Letter& c : C.generators()) {
    MultiTensor one(1);
    one.add(Slots{Word{c}}, 1);
    MultiTensor d = coproduct_at(C, one, 0);
    MultiTensor l = coproduct_at(C, d, 0);
    MultiTensor rr = coproduct_at(C, d, 1);
    r.expect(l == rr, "coassociativity", [&] { return "e" + std::to_string(c.index) + ": " + detail::mismatch(l, rr); });
    if (C.has_counit()) {
      Tensor left, right;
      for (const auto& [s, k] : d) {
        left.add(s[1], k * C.counit(s[0][0]));
        right.add(s[0], k * C.counit(s[1][0]));
      }
      Tensor self = Tensor::letter(c);
      r.expect(left == self && right == self, "counit",
               [&] { return "e" + std::to_string(c.index) + ": " + left.to_string() + " ; " + right.to_string(); });
    }
  }
  auto as_word_tensor = [](const MultiTensor& z) {
    Tensor t;
    for (const auto& [s, c] : z) {
      Word w;
      for (const Word& part : s) w.insert(w.end(), part.begin(), part.end());
      t.add(w, c);
    }
    return t;
  };
  for (const Word& w : all_words(C.generators(), 2)) {
    MultiTensor z(2);
    z.add(Slots{Word{w[0]}, Word{w[1]}}, 1);
    // (id⊗Δ)σ = σ1σ2(Δ⊗id)
    Tensor sig = apply_sigma_at(S, Tensor::word(w), 1);
    MultiTensor sz(2);
    for (const auto& [u, c] : sig) sz.add(Slots{Word{u[0]}, Word{u[1]}}, c);
    Tensor lhs = as_word_tensor(coproduct_at(C, sz, 1));
    Tensor rhs = lift_by_word(S, {1, 2}, as_word_tensor(coproduct_at(C, z, 0)));
    r.expect(lhs == rhs, "(id⊗Δ)σ = σ1σ2(Δ⊗id)", [&] { return to_string(w) + ": " + detail::mismatch(lhs, rhs); });
    // (Δ⊗id)σ = σ2σ1(id⊗Δ)
    Tensor lhs2 = as_word_tensor(coproduct_at(C, sz, 0));
    Tensor rhs2 = lift_by_word(S, {2, 1}, as_word_tensor(coproduct_at(C, z, 1)));
    r.expect(lhs2 == rhs2, "(Δ⊗id)σ = σ2σ1(id⊗Δ)", [&] { return to_string(w) + ": " + detail::mismatch(lhs2, rhs2); });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Δ_{σ,i}, m_{β,2} and Φ

/// Δ_{σ,i} = T_{w_i⁻¹} ∘ Δ^{⊗i} on a word of length i, split as (i, i).
inline MultiTensor delta_sigma_i(const BraidedCoalgebra& C, int i, const Word& x) {
  if (i < 1 || x.size() != static_cast<std::size_t>(i)) throw domain_error("delta_sigma_i: word length must be i");
  // Δ^{⊗i} as words of length 2i: c1(1) c1(2) c2(1) c2(2) ...
  Tensor t = Tensor::unit();
  for (const Letter& c : x) {
    Tensor next;
    for (const auto& [w, cw] : t)
      for (const auto& [s, cs] : C.coproduct(c)) {
        Word u = w;
        u.push_back(s[0][0]);
        u.push_back(s[1][0]);
        next.add(u, cw * cs);
      }
    t = std::move(next);
  }
  Permutation winv = w_i_perm(i).inverse();
  MultiTensor r(2);
  for (const auto& [w, c] : t)
    for (const auto& [u, cu] : lift_word(C.space(), winv, w))
      r.add(Slots{subword(u, 0, static_cast<std::size_t>(i)), subword(u, static_cast<std::size_t>(i), static_cast<std::size_t>(i))},
            c * cu);
  return r;
}

/// Product of 𝒯²_β(C): (x1⊗̲y1)(x2⊗̲y2) = Σ x1 x2' ⊗̲ y1' y2 with
/// β(y1⊗̲x2) = x2'⊗̲y1'.
inline MultiTensor m_beta_2(const BraidedAlgebra& space, const MultiTensor& z1, const MultiTensor& z2) {
  if (z1.arity() != 2 || z2.arity() != 2) throw domain_error("m_beta_2: arity must be 2");
  MultiTensor r(2);
  for (const auto& [s, c1] : z1)
    for (const auto& [t, c2] : z2) {
      Scalar c = c1 * c2;
      for (const auto& [b, cb] : beta_words(space, s[1], t[0]))
        r.add(Slots{concat(s[0], b[0]), concat(b[1], t[1])}, c * cb);
    }
  return r;
}

enum class PhiPart { phi1, phi2, phi };

/// φ on a letter: φ1(c) = 1⊗̲c + c⊗̲1, φ2(c) = Δ(c), φ = φ1 + φ2.
inline MultiTensor phi_letter(const BraidedCoalgebra& C, const Letter& c, PhiPart part) {
  MultiTensor r(2);
  if (part != PhiPart::phi2) {
    r.add(Slots{Word{}, Word{c}}, 1);
    r.add(Slots{Word{c}, Word{}}, 1);
  }
  if (part != PhiPart::phi1) r.add(C.coproduct(c));
  return r;
}

/// The algebra map T(C) → 𝒯²_β(C) extending φ (resp. φ1, φ2):
/// Φ(c ⊗ rest) = m_{β,2}(φ(c), Φ(rest)), Φ(1) = 1⊗̲1.
inline MultiTensor phi_word(const BraidedCoalgebra& C, const Word& x, PhiPart part = PhiPart::phi) {
  MultiTensor acc(2);
  acc.add(Slots{Word{}, Word{}}, 1);
  for (std::size_t k = x.size(); k-- > 0;) acc = m_beta_2(C.space(), phi_letter(C, x[k], part), acc);
  return acc;
}

inline MultiTensor phi(const BraidedCoalgebra& C, const Tensor& x, PhiPart part = PhiPart::phi) {
  MultiTensor r(2);
  for (const auto& [w, c] : x) r.add(phi_word(C, w, part), c);
  return r;
}
inline MultiTensor phi1(const BraidedCoalgebra& C, const Tensor& x) { return phi(C, x, PhiPart::phi1); }
inline MultiTensor phi2(const BraidedCoalgebra& C, const Tensor& x) { return phi(C, x, PhiPart::phi2); }

/// Φ on words, memoized.
class PhiCache {
 public:
  explicit PhiCache(const BraidedCoalgebra& C) : C_(C) {}
  const MultiTensor& operator()(const Word& x) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    MultiTensor r(2);
    if (x.empty()) {
      r.add(Slots{Word{}, Word{}}, 1);
    } else {
      MultiTensor rest = (*this)(subword(x, 1, x.size() - 1));
      r = m_beta_2(C_.space(), phi_letter(C_, x[0], PhiPart::phi), rest);
    }
    return memo_.emplace(x, std::move(r)).first->second;
  }

 private:
  const BraidedCoalgebra& C_;
  std::map<Word, MultiTensor, WordOrder> memo_;
};

/// Φ applied to one slot of a MultiTensor, splitting it in two.
inline MultiTensor phi_at(PhiCache& phi_of, const MultiTensor& z, std::size_t slot) {
  if (slot >= z.arity()) throw domain_error("phi_at: slot out of range");
  MultiTensor r(z.arity() + 1);
  for (const auto& [s, c] : z)
    for (const auto& [d, cd] : phi_of(s[slot])) {
      Slots t(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(slot));
      t.push_back(d[0]);
      t.push_back(d[1]);
      t.insert(t.end(), s.begin() + static_cast<std::ptrdiff_t>(slot + 1), s.end());
      r.add(t, c * cd);
    }
  return r;
}

inline MultiTensor phi_at(const BraidedCoalgebra& C, const MultiTensor& z, std::size_t slot) {
  PhiCache cache(C);
  return phi_at(cache, z, slot);
}

// ---------------------------------------------------------------------------
// Verification

/// Φ2 restricted to C^{⊗i} equals Δ_{σ,i}, for 1 ≤ i ≤ max_i; with a counit,
/// also (ε^{⊗i} ⊗ id)Δ_{σ,i} = id.
inline Report verify_phi2_delta(const BraidedCoalgebra& C, int max_i) {
  Report r("Φ2 = Δ_{σ,i}");
  for (int i = 1; i <= max_i; ++i)
    for (const Word& x : all_words(C.generators(), static_cast<std::size_t>(i))) {
      MultiTensor a = phi_word(C, x, PhiPart::phi2);
      MultiTensor b = delta_sigma_i(C, i, x);
      r.expect(a == b, "Φ2 = Δ_{σ,i}", [&] { return to_string(x) + ": " + detail::mismatch(a, b); });
      if (C.has_counit()) {
        Tensor left;
        for (const auto& [s, c] : b) {
          Scalar e = c;
          for (const Letter& l : s[0]) e *= C.counit(l);
          left.add(s[1], e);
        }
        Tensor self = Tensor::word(x);
        r.expect(left == self, "(ε^{⊗i}⊗id)Δ_{σ,i} = id", [&] { return to_string(x) + ": " + detail::mismatch(left, self); });
      }
    }
  return r;
}

/// Coassociativity of Φ and β1β2(Φ⊗̲id) = (id⊗̲Φ)β, β2β1(id⊗̲Φ) = (Φ⊗̲id)β,
/// on words with total length ≤ max_total.
inline Report verify_phi_coalgebra(const BraidedCoalgebra& C, int max_total) {
  Report r("(T(C), Φ, β) braided coalgebra");
  const BraidedAlgebra& S = C.space();
  PhiCache cache(C);
  for (int n = 0; n <= max_total; ++n)
    for (const Word& x : all_words(C.generators(), static_cast<std::size_t>(n))) {
      MultiTensor f = cache(x);
      MultiTensor l = phi_at(cache, f, 0);
      MultiTensor rr = phi_at(cache, f, 1);
      r.expect(l == rr, "(Φ⊗id)Φ = (id⊗Φ)Φ", [&] { return to_string(x) + ": " + detail::mismatch(l, rr); });
    }
  for (int n = 0; n <= max_total; ++n)
    for (int i = 0; i <= n; ++i)
      for (const Word& x : all_words(C.generators(), static_cast<std::size_t>(i)))
        for (const Word& y : all_words(C.generators(), static_cast<std::size_t>(n - i))) {
          MultiTensor xy(2);
          xy.add(Slots{x, y}, 1);
          auto witness = [&](const MultiTensor& a, const MultiTensor& b) {
            return to_string(x) + " | " + to_string(y) + ": " + detail::mismatch(a, b);
          };
          MultiTensor l1 = beta(S, beta(S, phi_at(cache, xy, 0), 1), 0);
          MultiTensor r1 = phi_at(cache, beta(S, xy), 1);
          r.expect(l1 == r1, "β1β2(Φ⊗̲id) = (id⊗̲Φ)β", [&] { return witness(l1, r1); });
          MultiTensor l2 = beta(S, beta(S, phi_at(cache, xy, 1), 0), 1);
          MultiTensor r2 = phi_at(cache, beta(S, xy), 0);
          r.expect(l2 == r2, "β2β1(id⊗̲Φ) = (Φ⊗̲id)β", [&] { return witness(l2, r2); });
        }
  return r;
}

namespace detail {

/// For each letter a, the letters c with ⟨a, c⟩ ≠ 0 (or the transpose).
inline std::map<int, std::vector<std::pair<Letter, Scalar>>> pairing_support(const Pairing& P, bool transpose) {
  std::map<int, std::vector<std::pair<Letter, Scalar>>> r;
  for (const Letter& a : P.letters())
    for (const Letter& c : P.letters()) {
      const Scalar& v = transpose ? P(c, a) : P(a, c);
      if (!v.is_zero()) r[a.index].emplace_back(c, v);
    }
  return r;
}

/// Calls f(w', ⟨w, w'⟩) for every word w' pairing nontrivially with w.
template <typename F>
void for_each_partner(const std::map<int, std::vector<std::pair<Letter, Scalar>>>& support, const Word& w, F&& f) {
  Word cur;
  auto rec = [&](auto&& self, std::size_t k, const Scalar& acc) -> void {
    if (k == w.size()) {
      f(cur, acc);
      return;
    }
    auto it = support.find(w[k].index);
    if (it == support.end()) return;
    for (const auto& [c, v] : it->second) {
      cur.push_back(c);
      self(self, k + 1, acc * v);
      cur.pop_back();
    }
  };
  rec(rec, 0, Scalar(1));
}

}  // namespace detail

/// ⟨x ⋈ y, z⟩ = ⟨x⊗̲y, Φ(z)⟩ for all generator words with |x|+|y| ≤ max_deg
/// and |z| ≤ max_deg (this contains every case |x|+|y| = |z|). Both sides are
/// tabulated sparsely as functions of (x, y, z) and compared.
inline Report verify_duality(const BraidedAlgebra& A, const Pairing& P, const BraidedCoalgebra& C, int max_deg) {
  Report r("duality adj(Φ) = ⋈");
  detail::InductiveProduct prod(A);
  auto fwd = detail::pairing_support(P, false);
  auto back = detail::pairing_support(P, true);
  auto D = static_cast<std::size_t>(max_deg);
  MultiTensor lhs(3), rhs(3);
  std::size_t pairs = 0, zs = 0;
  for (std::size_t n = 0; n <= D; ++n) {
    zs += all_words(C.generators(), n).size();
    for (std::size_t i = 0; i <= n; ++i)
      for (const Word& x : all_words(A.generators(), i))
        for (const Word& y : all_words(A.generators(), n - i)) {
          ++pairs;
          for (const auto& [w, c] : prod(x, y))
            detail::for_each_partner(fwd, w, [&](const Word& z, const Scalar& v) { lhs.add(Slots{x, y, z}, c * v); });
        }
  }
  for (std::size_t n = 0; n <= D; ++n)
    for (const Word& z : all_words(C.generators(), n))
      for (const auto& [s, c] : phi_word(C, z)) {
        if (s[0].size() + s[1].size() > D) continue;
        detail::for_each_partner(back, s[0], [&](const Word& x, const Scalar& vx) {
          Word xs = x;
          detail::for_each_partner(back, s[1], [&](const Word& y, const Scalar& vy) {
            rhs.add(Slots{xs, y, z}, c * vx * vy);
          });
        });
      }
  MultiTensor diff = lhs;
  diff -= rhs;
  for (const auto& [s, c] : diff) {
    (void)c;
    r.fail("⟨x⋈y, z⟩ = ⟨x⊗̲y, Φz⟩", to_string(s[0]) + " , " + to_string(s[1]) + " ; z = " + to_string(s[2]) + ": " +
                                          lhs.coeff(s).to_string() + " vs " + rhs.coeff(s).to_string());
  }
  r.pass(pairs * zs - std::min(pairs * zs, diff.size()));
  return r;
}

/// As above with C = adjoint_coalgebra(A, P).
inline Report verify_duality(const BraidedAlgebra& A, const Pairing& P, int max_deg) {
  return verify_duality(A, P, adjoint_coalgebra(A, P), max_deg);
}

}  // namespace qqsh
