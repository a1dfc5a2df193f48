#pragma once

// Symmetric-group combinatorics: permutations, reduced words, shuffles,
// admissible pairs, mixable shuffles, compositions and refinements.
//
// Conventions: a permutation is stored in one-line notation with values
// 1..n, images[k-1] = w(k). Composition is (u∘v)(k) = u(v(k)). The braid lift
// of w moves the letter in position k to position w(k).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qqsh/error.hpp"

namespace qqsh {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
        throw domain_error("not a permutation: " + to_string());
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// The adjacent transposition s_k of 𝔖_n.
  static Permutation simple(int k, int n) {
    if (k < 1 || k >= n) throw domain_error("simple transposition out of range");
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(k - 1)], p.images_[static_cast<std::size_t>(k)]);
    return p;
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  /// w(k), 1-based.
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (int k = 1; k <= size(); ++k)
      if ((*this)(k) != k) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int k = 1; k <= size(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(images_[k]);
    }
    return s + "]";
  }

 private:
  std::vector<int> images_;
};

/// (u∘v)(k) = u(v(k)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw domain_error("compose: size mismatch");
  std::vector<int> r(static_cast<std::size_t>(u.size()));
  for (int k = 1; k <= u.size(); ++k) r[static_cast<std::size_t>(k - 1)] = u(v(k));
  return Permutation(std::move(r));
}

/// u × v ∈ 𝔖_{m+n}: u acts on the first m points, v on the last n.
inline Permutation cross(const Permutation& u, const Permutation& v) {
  std::vector<int> r = u.images();
  for (int v_img : v.images()) r.push_back(v_img + u.size());
  return Permutation(std::move(r));
}

/// 1_{𝔖_k} × w.
inline Permutation shift(const Permutation& w, int k) {
  return cross(Permutation::identity(k), w);
}

/// The block swap χ_{ij} ∈ 𝔖_{i+j}: k ↦ j+k for k ≤ i, k ↦ k−i for k > i.
inline Permutation chi(int i, int j) {
  if (i < 0 || j < 0) throw domain_error("chi: negative block size");
  std::vector<int> r;
  for (int k = 1; k <= i + j; ++k) r.push_back(k <= i ? j + k : k - i);
  return Permutation(std::move(r));
}

/// Inversions ι(w) = {(i,j) | i < j, w(i) > w(j)}.
inline std::vector<std::pair<int, int>> inversions(const Permutation& w) {
  std::vector<std::pair<int, int>> r;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) r.emplace_back(i, j);
  return r;
}

inline int inversion_count(const Permutation& w) {
  return static_cast<int>(inversions(w).size());
}

/// A reduced expression w = s_{i1} ⋯ s_{il}, returned as [i1, ..., il].
/// Found by repeatedly peeling off the leftmost right descent.
inline std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> img = w.images();
  std::vector<int> reversed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < img.size(); ++k) {
      if (img[k] > img[k + 1]) {
        // w = (w∘s_k)∘s_k with ℓ(w∘s_k) = ℓ(w) − 1
        std::swap(img[k], img[k + 1]);
        reversed.push_back(static_cast<int>(k) + 1);
        changed = true;
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

/// The permutation s_{i1} ∘ ⋯ ∘ s_{il} in 𝔖_n.
inline Permutation from_word(const std::vector<int>& word, int n) {
  Permutation p = Permutation::identity(n);
  for (int k : word) p = compose(p, Permutation::simple(k, n));
  return p;
}

inline constexpr int kMaxReducedWordWindow = 5;

/// Every reduced expression of w (test utility, n ≤ 5).
inline std::set<std::vector<int>> all_reduced_words(const Permutation& w) {
  if (w.size() > kMaxReducedWordWindow)
    throw domain_error("all_reduced_words: window too large (max 5)");
  std::set<std::vector<int>> out;
  if (w.is_identity()) {
    out.insert(std::vector<int>{});
    return out;
  }
  for (int k = 1; k < w.size(); ++k) {
    if (w(k) > w(k + 1)) {
      Permutation shorter = compose(w, Permutation::simple(k, w.size()));
      for (auto word : all_reduced_words(shorter)) {
        word.push_back(k);
        out.insert(std::move(word));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shuffles and mixable shuffles

/// All (i,j)-shuffles, ordered lexicographically by the image set of the
/// first block {w(1) < ... < w(i)}.
inline std::vector<Permutation> shuffles(int i, int j) {
  if (i < 0 || j < 0) throw domain_error("shuffles: negative block size");
  int n = i + j;
  std::vector<Permutation> out;
  std::vector<int> first(static_cast<std::size_t>(i));
  std::iota(first.begin(), first.end(), 1);
  while (true) {
    std::vector<int> img(first);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int v : first) used[static_cast<std::size_t>(v)] = true;
    for (int v = 1; v <= n; ++v)
      if (!used[static_cast<std::size_t>(v)]) img.push_back(v);
    out.emplace_back(std::move(img));
    // next i-subset in lexicographic order
    int p = i - 1;
    while (p >= 0 && first[static_cast<std::size_t>(p)] == n - i + p + 1) --p;
    if (p < 0) break;
    ++first[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < i; ++q)
      first[static_cast<std::size_t>(q)] = first[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

inline bool is_shuffle(const Permutation& w, int i) {
  for (int k = 1; k < w.size(); ++k) {
    if (k == i) continue;
    if (w(k) > w(k + 1)) return false;
  }
  return true;
}

/// Admissible pairs 𝒯^w of an (i,j)-shuffle, each pair (k,k+1) stored as k:
/// w⁻¹(k) ≤ i < w⁻¹(k+1).
inline std::vector<int> admissible_pairs(const Permutation& w, int i) {
  if (i < 0 || i > w.size() || !is_shuffle(w, i))
    throw domain_error("admissible_pairs: " + w.to_string() + " is not a shuffle for split " +
                       std::to_string(i));
  Permutation inv = w.inverse();
  std::vector<int> r;
  for (int k = 1; k < w.size(); ++k)
    if (inv(k) <= i && i < inv(k + 1)) r.push_back(k);
  return r;
}

/// 𝒮^w = {(k,k+1) | w⁻¹(k) < w⁻¹(k+1)}, stored as k.
inline std::vector<int> script_S(const Permutation& w) {
  Permutation inv = w.inverse();
  std::vector<int> r;
  for (int k = 1; k < w.size(); ++k)
    if (inv(k) < inv(k + 1)) r.push_back(k);
  return r;
}

struct MixableShuffle {
  enum class Context { shuffle, full_group };

  Permutation w;
  std::vector<int> S;  // k for each pair (k,k+1), ascending
  Context context = Context::shuffle;
  int split = 0;  // i, for the (i,j)-shuffle context

  friend bool operator==(const MixableShuffle&, const MixableShuffle&) = default;
};

/// All subsets of `base`, in the order: by size, then lexicographically.
inline std::vector<std::vector<int>> subsets(const std::vector<int>& base) {
  std::vector<std::vector<int>> out;
  std::size_t n = base.size();
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<int> s;
      for (std::size_t k = 0; k < n; ++k)
        if (mask[k]) s.push_back(base[k]);
      out.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return out;
}

/// 𝔖̄_{i,j}: pairs (w,S), w an (i,j)-shuffle and S ⊂ 𝒯^w.
inline std::vector<MixableShuffle> mixable_shuffles(int i, int j) {
  std::vector<MixableShuffle> out;
  for (const Permutation& w : shuffles(i, j))
    for (auto& S : subsets(admissible_pairs(w, i)))
      out.push_back({w, std::move(S), MixableShuffle::Context::shuffle, i});
  return out;
}

/// 𝔖̄_n: pairs (w,S), w ∈ 𝔖_n and S ⊂ 𝒮^w. Permutations in lexicographic
/// order of their one-line notation.
inline std::vector<MixableShuffle> barS_n(int n) {
  std::vector<MixableShuffle> out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    Permutation w(img);
    for (auto& S : subsets(script_S(w)))
      out.push_back({w, std::move(S), MixableShuffle::Context::full_group, 0});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Compositions

using Composition = std::vector<int>;

inline int composition_sum(const Composition& c) {
  return std::accumulate(c.begin(), c.end(), 0);
}

inline std::string to_string(const Composition& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c[k]);
  }
  return s + ")";
}

/// cp(S) for a mixable (i,j)-shuffle: each admissible k contributes a part 2
/// covering positions k, k+1; every other position is a part 1.
inline Composition cp_shuffle(const std::vector<int>& S, int n) {
  Composition c;
  int pos = 1;
  for (int k : S) {
    if (k < pos || k >= n) throw domain_error("cp_shuffle: invalid admissible set");
    for (; pos < k; ++pos) c.push_back(1);
    c.push_back(2);
    pos = k + 2;
  }
  for (; pos <= n; ++pos) c.push_back(1);
  return c;
}

/// cp(S) in 𝔖̄_n: a maximal run of r consecutive k's becomes one part r+1.
inline Composition cp_full(const std::vector<int>& S, int n) {
  Composition c;
  int pos = 1;
  std::size_t t = 0;
  while (pos <= n) {
    if (t < S.size() && S[t] == pos) {
      int run = 0;
      while (t < S.size() && S[t] == pos + run) {
        ++run;
        ++t;
      }
      if (pos + run > n) throw domain_error("cp_full: pair out of range");
      c.push_back(run + 1);
      pos += run + 1;
    } else {
      if (t < S.size() && S[t] < pos) throw domain_error("cp_full: unsorted pair set");
      c.push_back(1);
      ++pos;
    }
  }
  return c;
}

/// C(w): the composition whose partial sums are the descent positions
/// {l | w(l) > w(l+1)}.
inline Composition descent_composition(const Permutation& w) {
  Composition c;
  int last = 0;
  for (int l = 1; l < w.size(); ++l) {
    if (w(l) > w(l + 1)) {
      c.push_back(l - last);
      last = l;
    }
  }
  if (w.size() > 0) c.push_back(w.size() - last);
  return c;
}

/// I ⪰ J: I splits every part of J into consecutive parts.
inline bool is_refinement(const Composition& I, const Composition& J) {
  std::size_t t = 0;
  for (int part : J) {
    int acc = 0;
    while (acc < part && t < I.size()) acc += I[t++];
    if (acc != part) return false;
  }
  return t == I.size();
}

/// All compositions of n, lexicographic.
inline std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (int first = 1; first <= n; ++first)
    for (auto& rest : compositions(n - first)) {
      Composition c{first};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  return out;
}

/// Every I with I ⪰ J.
inline std::vector<Composition> refinements(const Composition& J) {
  std::vector<Composition> out{{}};
  for (int part : J) {
    std::vector<Composition> next;
    for (const auto& prefix : out)
      for (const auto& split : compositions(part)) {
        Composition c = prefix;
        c.insert(c.end(), split.begin(), split.end());
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

/// w_i ∈ 𝔖_{2i}: k ↦ 2k−1 for k ≤ i, i+k ↦ 2k.
inline Permutation w_i_perm(int i) {
  std::vector<int> r;
  for (int k = 1; k <= i; ++k) r.push_back(2 * k - 1);
  for (int k = 1; k <= i; ++k) r.push_back(2 * k);
  return Permutation(std::move(r));
}

/// L(w,i) = (χ_{1,i−1} × 1_{𝔖_{n+1−i}}) ∘ (1_{𝔖_1} × w), for w ∈ 𝔖_n and
/// 1 ≤ i ≤ n+1. Satisfies L(w,i)(1) = i.
inline Permutation L_map(const Permutation& w, int i) {
  int n = w.size();
  if (i < 1 || i > n + 1) throw domain_error("L_map: i out of range");
  return compose(cross(chi(1, i - 1), Permutation::identity(n + 1 - i)), shift(w, 1));
}

}  // namespace qqsh
