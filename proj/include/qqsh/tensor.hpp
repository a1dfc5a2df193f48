#pragma once

// The free tensor space T(V): basis words, sparse linear combinations of
// words (Tensor) and of k-tuples of words (MultiTensor, the outer tensor
// product T(V) ⊗̲ ... ⊗̲ T(V)).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qqsh/error.hpp"
#include "qqsh/scalar.hpp"

namespace qqsh {

/// A generator letter: index identifies the basis element, degree is the
/// grading weight |a| (0 only for an adjoined unit).
struct Letter {
  int index = 0;
  int degree = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = boost::container::small_vector<Letter, 8>;

inline int total_degree(const Word& w) {
  int d = 0;
  for (const Letter& l : w) d += l.degree;
  return d;
}

/// Canonical word order: shorter words first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

inline Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline Word subword(const Word& w, std::size_t pos, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
              w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "⊗";
    s += "e" + std::to_string(w[k].index);
  }
  return s;
}

/// Sparse linear combination over an ordered basis with Scalar coefficients.
/// Zero coefficients are never stored.
template <typename Key, typename Order>
class LinearCombination {
 public:
  using Map = std::map<Key, Scalar, Order>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;

  void add(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Scalar& factor = Scalar(1)) {
    if (factor.is_zero()) return;
    bool unit = factor.is_one();
    for (const auto& [k, c] : other.terms_) add(k, unit ? c : c * factor);
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, Scalar(-1));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else if (!c.is_one()) {
      for (auto& kv : terms_) kv.second *= c;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator*(const Scalar& c, LinearCombination a) { return a *= c; }
  friend LinearCombination operator*(LinearCombination a, const Scalar& c) { return a *= c; }
  LinearCombination operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const noexcept { return terms_; }

 private:
  Map terms_;
};

/// An element of T(V).
class Tensor : public LinearCombination<Word, WordOrder> {
 public:
  using LinearCombination::LinearCombination;
  Tensor() = default;
  Tensor(const LinearCombination& lc) : LinearCombination(lc) {}  // NOLINT

  static Tensor word(const Word& w, const Scalar& c = Scalar(1)) {
    Tensor t;
    t.add(w, c);
    return t;
  }
  static Tensor letter(const Letter& l, const Scalar& c = Scalar(1)) { return word(Word{l}, c); }
  /// The unit 1 ∈ 𝕂 ⊂ T(V), i.e. the empty word.
  static Tensor unit(const Scalar& c = Scalar(1)) { return word(Word{}, c); }

  /// True when every word has length n.
  bool homogeneous_of_length(std::size_t n) const {
    return std::all_of(begin(), end(), [n](const auto& kv) { return kv.first.size() == n; });
  }

  std::string to_string() const;
};

/// Appends `coeff*basis` to a rendered sum. Multi-term coefficients are
/// parenthesized: `(1 + q)*e1⊗e1`.
inline void render_term(std::string& out, bool first, const Scalar& c, const std::string& basis) {
  const auto& ts = c.terms();
  bool negative = ts.size() == 1 && ts[0].coeff.sign() < 0;
  Scalar mag = negative ? -c : c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (mag.is_one()) {
    out += basis;
  } else if (mag.is_monomial()) {
    out += mag.to_string();
    if (basis != "1") out += "*" + basis;
  } else {
    out += "(" + mag.to_string() + ")";
    if (basis != "1") out += "*" + basis;
  }
}

/// Canonical text: words in canonical order, `e3 + e1⊗e2 + q^2*e2⊗e1`.
inline std::string Tensor::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : *this) {
    render_term(out, first, c, qqsh::to_string(w));
    first = false;
  }
  return out;
}

using Slots = boost::container::small_vector<Word, 4>;

struct SlotsOrder {
  bool operator()(const Slots& a, const Slots& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), WordOrder{});
  }
};

/// An element of T(V) ⊗̲ ... ⊗̲ T(V) with a fixed number of outer factors.
class MultiTensor : public LinearCombination<Slots, SlotsOrder> {
 public:
  explicit MultiTensor(std::size_t arity = 2) : arity_(arity) {
    if (arity == 0) throw domain_error("MultiTensor arity must be at least 1");
  }

  std::size_t arity() const noexcept { return arity_; }

  void add(const Slots& s, const Scalar& c) {
    if (s.size() != arity_) throw domain_error("MultiTensor slot count mismatch");
    LinearCombination::add(s, c);
  }
  void add(const MultiTensor& o, const Scalar& factor = Scalar(1)) {
    check_arity(o);
    LinearCombination::add(o, factor);
  }

  MultiTensor& operator+=(const MultiTensor& o) {
    add(o);
    return *this;
  }
  MultiTensor& operator-=(const MultiTensor& o) {
    add(o, Scalar(-1));
    return *this;
  }
  MultiTensor& operator*=(const Scalar& c) {
    LinearCombination::operator*=(c);
    return *this;
  }
  friend MultiTensor operator+(MultiTensor a, const MultiTensor& b) { return a += b; }
  friend MultiTensor operator-(MultiTensor a, const MultiTensor& b) { return a -= b; }
  friend MultiTensor operator*(const Scalar& c, MultiTensor a) { return a *= c; }

  friend bool operator==(const MultiTensor& a, const MultiTensor& b) {
    return a.arity_ == b.arity_ &&
           static_cast<const LinearCombination&>(a) == static_cast<const LinearCombination&>(b);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : *this) {
      std::string basis;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) basis += " | ";
        basis += qqsh::to_string(s[k]);
      }
      if (s.size() > 1) basis = "[" + basis + "]";
      render_term(out, first, c, basis);
      first = false;
    }
    return out;
  }

 private:
  void check_arity(const MultiTensor& o) const {
    if (o.arity_ != arity_) throw domain_error("MultiTensor arity mismatch");
  }
  std::size_t arity_;
};

// ---------------------------------------------------------------------------
// Operations

/// Bilinear extension of word concatenation; the empty word is the unit.
inline Tensor concat(const Tensor& x, const Tensor& y) {
  Tensor r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add(concat(a, b), ca * cb);
  return r;
}

/// Deconcatenation coproduct δ(a1...an) = Σ_k (a1...ak) ⊗̲ (a_{k+1}...an).
inline MultiTensor deconcat(const Tensor& x) {
  MultiTensor r(2);
  for (const auto& [w, c] : x)
    for (std::size_t k = 0; k <= w.size(); ++k)
      r.add(Slots{subword(w, 0, k), subword(w, k, w.size() - k)}, c);
  return r;
}

/// x ⊗̲ y.
inline MultiTensor outer(const Tensor& x, const Tensor& y) {
  MultiTensor r(2);
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) r.add(Slots{a, b}, ca * cb);
  return r;
}

/// z ⊗̲ y, appending one outer factor.
inline MultiTensor outer(const MultiTensor& z, const Tensor& y) {
  MultiTensor r(z.arity() + 1);
  for (const auto& [s, cs] : z)
    for (const auto& [b, cb] : y) {
      Slots t = s;
      t.push_back(b);
      r.add(t, cs * cb);
    }
  return r;
}

/// Concatenates the words in slots `slot` and `slot + 1` (0-based), lowering
/// the arity by one. A MultiTensor of arity 2 flattens to arity 1.
inline MultiTensor flatten_at(const MultiTensor& z, std::size_t slot) {
  if (z.arity() < 2 || slot + 1 >= z.arity())
    throw domain_error("flatten_at: slot out of range");
  MultiTensor r(z.arity() - 1);
  for (const auto& [s, c] : z) {
    Slots t;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k == slot + 1) continue;
      t.push_back(k == slot ? concat(s[k], s[k + 1]) : s[k]);
    }
    r.add(t, c);
  }
  return r;
}

/// Reads an arity-1 MultiTensor as a Tensor.
inline Tensor as_tensor(const MultiTensor& z) {
  if (z.arity() != 1) throw domain_error("as_tensor: arity must be 1");
  Tensor t;
  for (const auto& [s, c] : z) t.add(s[0], c);
  return t;
}

/// Flattens an arity-2 value z = Σ x ⊗̲ y to Σ x⊗y.
inline Tensor flatten(const MultiTensor& z) {
  if (z.arity() != 2) throw domain_error("flatten: arity must be 2");
  return as_tensor(flatten_at(z, 0));
}

/// Applies a linear map slotwise: f acts on the word in `slot`.
inline MultiTensor apply_at(const MultiTensor& z, std::size_t slot,
                            const std::function<Tensor(const Word&)>& f) {
  if (slot >= z.arity()) throw domain_error("apply_at: slot out of range");
  MultiTensor r(z.arity());
  for (const auto& [s, c] : z) {
    Tensor img = f(s[slot]);
    for (const auto& [w, cw] : img) {
      Slots t = s;
      t[slot] = w;
      r.add(t, c * cw);
    }
  }
  return r;
}

/// Applies a linear map T(V)⊗̲T(V) → MultiTensor(k) to slots (slot, slot+1).
inline MultiTensor apply_pair_at(const MultiTensor& z, std::size_t slot, std::size_t out_arity,
                                 const std::function<MultiTensor(const Word&, const Word&)>& f) {
  if (slot + 1 >= z.arity()) throw domain_error("apply_pair_at: slot out of range");
  MultiTensor r(z.arity() - 2 + out_arity);
  for (const auto& [s, c] : z) {
    MultiTensor img = f(s[slot], s[slot + 1]);
    if (img.arity() != out_arity) throw domain_error("apply_pair_at: arity mismatch");
    for (const auto& [u, cu] : img) {
      Slots t(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(slot));
      t.insert(t.end(), u.begin(), u.end());
      t.insert(t.end(), s.begin() + static_cast<std::ptrdiff_t>(slot + 2), s.end());
      r.add(t, c * cu);
    }
  }
  return r;
}

/// Applies a bilinear product on slots (slot, slot+1), merging them.
inline MultiTensor multiply_at(const MultiTensor& z, std::size_t slot,
                               const std::function<Tensor(const Word&, const Word&)>& f) {
  return apply_pair_at(z, slot, 1, [&](const Word& a, const Word& b) {
    MultiTensor m(1);
    for (const auto& [w, c] : f(a, b)) m.add(Slots{w}, c);
    return m;
  });
}

/// Every word of length n over the given letters, in canonical order.
inline std::vector<Word> all_words(const std::vector<Letter>& letters, std::size_t n) {
  std::vector<Word> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (letters.empty()) return out;
  std::vector<std::size_t> idx(n, 0);
  std::vector<Letter> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  while (true) {
    Word w;
    for (std::size_t k : idx) w.push_back(sorted[k]);
    out.push_back(std::move(w));
    std::size_t p = n;
    while (p > 0) {
      --p;
      if (++idx[p] < sorted.size()) break;
      idx[p] = 0;
      if (p == 0) return out;
    }
  }
}

}  // namespace qqsh
