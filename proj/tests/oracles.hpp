#pragma once

// Test-side reference computations. They use plain containers and their own
// polynomial type so they share no code paths with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "qqsh/scalar.hpp"
#include "qqsh/tensor.hpp"

namespace oracle {

using IWord = std::vector<int>;
/// Laurent polynomial with integer coefficients: exponent → coefficient.
using Poly = std::map<int, long long>;
using Lin = std::map<IWord, Poly>;

inline void add(Poly& p, int e, long long c) {
  if (c == 0) return;
  if ((p[e] += c) == 0) p.erase(e);
}

inline void add(Lin& out, const IWord& w, int e, long long c) {
  auto& p = out[w];
  add(p, e, c);
  if (p.empty()) out.erase(w);
}

inline void add_scaled(Lin& out, const IWord& prefix, const Lin& t, int e, long long c) {
  for (const auto& [w, p] : t) {
    IWord u = prefix;
    u.insert(u.end(), w.begin(), w.end());
    for (const auto& [pe, pc] : p) add(out, u, pe + e, pc * c);
  }
}

/// Converts a library tensor whose coefficients are integer Laurent
/// polynomials.
inline Lin from_tensor(const qqsh::Tensor& t) {
  Lin r;
  for (const auto& [w, c] : t) {
    IWord u;
    for (const auto& l : w) u.push_back(l.index);
    for (const auto& term : c.terms()) {
      if (denominator(term.coeff) != 1) throw std::runtime_error("non-integer coefficient");
      add(r, u, term.exp, static_cast<long long>(numerator(term.coeff)));
    }
  }
  return r;
}

/// Product of letters as an optional letter index (nullopt = 0).
using LetterProduct = std::function<std::optional<int>(int, int)>;

/// Guo–Keigher mixable shuffle of weight λ, λ tracked as the exponent of a
/// formal variable. Brute force: every way to interleave x and y where some
/// adjacent (x-letter, y-letter) pairs are merged, each merge costing one λ.
inline Lin mixable_shuffle(const IWord& x, const IWord& y, const LetterProduct& m) {
  Lin out;
  IWord cur;
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int merges) {
    if (i == x.size() && j == y.size()) {
      add(out, cur, merges, 1);
      return;
    }
    if (i < x.size()) {
      cur.push_back(x[i]);
      rec(i + 1, j, merges);
      cur.pop_back();
    }
    if (j < y.size()) {
      cur.push_back(y[j]);
      rec(i, j + 1, merges);
      cur.pop_back();
    }
    if (i < x.size() && j < y.size()) {
      if (auto p = m(x[i], y[j])) {
        cur.push_back(*p);
        rec(i + 1, j + 1, merges + 1);
        cur.pop_back();
      }
    }
  };
  rec(0, 0, 0);
  return out;
}

/// Hoffman's q-recursion with letter degrees and a bracket:
/// (a w1)∗(b w2) = a(w1∗bw2) + q^{|aw1||b|} b(aw1∗w2) + q^{|w1||b|}[a,b](w1∗w2).
inline Lin hoffman(const IWord& x, const IWord& y, const std::function<int(int)>& deg, const LetterProduct& bracket) {
  std::map<std::pair<IWord, IWord>, Lin> memo;
  std::function<Lin(const IWord&, const IWord&)> rec = [&](const IWord& u, const IWord& v) -> Lin {
    if (u.empty() || v.empty()) {
      Lin r;
      IWord w = u.empty() ? v : u;
      add(r, w, 0, 1);
      return r;
    }
    auto key = std::make_pair(u, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int a = u[0], b = v[0];
    IWord u1(u.begin() + 1, u.end()), v1(v.begin() + 1, v.end());
    int du1 = 0;
    for (int l : u1) du1 += deg(l);
    int du = du1 + deg(a);
    Lin r;
    add_scaled(r, {a}, rec(u1, v), 0, 1);
    add_scaled(r, {b}, rec(u, v1), du * deg(b), 1);
    if (auto c = bracket(a, b)) add_scaled(r, {*c}, rec(u1, v1), du1 * deg(b), 1);
    memo.emplace(key, r);
    return r;
  };
  return rec(x, y);
}

/// Classical quasi-shuffle (q = 1): (a w1)∗(b w2) = a(w1∗bw2) + b(aw1∗w2) + [a,b](w1∗w2).
inline Lin quasi_shuffle(const IWord& x, const IWord& y, const LetterProduct& bracket) {
  if (x.empty() || y.empty()) {
    Lin r;
    add(r, x.empty() ? y : x, 0, 1);
    return r;
  }
  IWord x1(x.begin() + 1, x.end()), y1(y.begin() + 1, y.end());
  Lin r;
  add_scaled(r, {x[0]}, quasi_shuffle(x1, y, bracket), 0, 1);
  add_scaled(r, {y[0]}, quasi_shuffle(x, y1, bracket), 0, 1);
  if (auto c = bracket(x[0], y[0])) add_scaled(r, {*c}, quasi_shuffle(x1, y1, bracket), 0, 1);
  return r;
}

/// Left fold of a binary product over letters.
inline Lin fold(const std::vector<int>& letters, const std::function<Lin(const IWord&, const IWord&)>& mul) {
  Lin acc;
  add(acc, IWord{}, 0, 1);
  for (int l : letters) {
    Lin next;
    for (const auto& [w, p] : acc) {
      Lin t = mul(w, IWord{l});
      for (const auto& [u, pu] : t)
        for (const auto& [e1, c1] : p)
          for (const auto& [e2, c2] : pu) add(next, u, e1 + e2, c1 * c2);
    }
    acc = std::move(next);
  }
  return acc;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(r) + 1, 1);
    for (int c = 1; c < r; ++c) next[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c - 1)] + row[static_cast<std::size_t>(c)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Brute-force count of (i,j)-shuffles among all permutations of i+j.
inline std::uint64_t count_shuffles(int i, int j) {
  std::vector<int> p(static_cast<std::size_t>(i + j));
  std::iota(p.begin(), p.end(), 1);
  std::uint64_t n = 0;
  do {
    bool ok = true;
    for (int k = 0; k + 1 < i && ok; ++k) ok = p[static_cast<std::size_t>(k)] < p[static_cast<std::size_t>(k + 1)];
    for (int k = i; k + 1 < i + j && ok; ++k) ok = p[static_cast<std::size_t>(k)] < p[static_cast<std::size_t>(k + 1)];
    n += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return n;
}

/// Number of compositions of n refining the composition with the given
/// descent set, counted by brute force over all 2^{n-1} cut sets.
inline std::uint64_t count_refinements(int n, const std::vector<int>& cuts) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    bool ok = true;
    for (int c : cuts) ok = ok && ((mask >> (c - 1)) & 1u);
    count += ok;
  }
  return count;
}

}  // namespace oracle
