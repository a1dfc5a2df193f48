#pragma once

// Named verification suites, as run by `qqsh verify <suite>`.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qqsh/braided.hpp"
#include "qqsh/dualco.hpp"
#include "qqsh/error.hpp"
#include "qqsh/products.hpp"
#include "qqsh/report.hpp"
#include "qqsh/rotabaxter.hpp"
#include "qqsh/tridend.hpp"

namespace qqsh {

struct SuiteConfig {
  int max_degree = 4;
  std::uint64_t seed = 0;
  std::optional<Scalar> lambda;  // unset: λ = 1 for products, symbolic for Rota-Baxter
  std::optional<Pairing> pairing;  // unset: Kronecker
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"braided", "bialgebra", "duality", "rb", "tridend"};
  return names;
}

/// A random tensor: up to `terms` generator words of length ≤ max_len with
/// small integer coefficients. Uses raw engine output so the sequence does not
/// depend on the standard library's distributions.
inline Tensor random_tensor(std::mt19937_64& rng, const std::vector<Letter>& letters, int max_len, int terms) {
  Tensor t;
  for (int k = 0; k < terms; ++k) {
    std::size_t len = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(max_len + 1));
    Word w;
    for (std::size_t p = 0; p < len; ++p) w.push_back(letters[rng() % letters.size()]);
    auto c = static_cast<long long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    t.add(w, Scalar(Rational(c)));
  }
  return t;
}

inline Report verify_associativity_random(const ProductContext& ctx, int triples, int max_len, std::uint64_t seed) {
  Report r("⋈ associativity (random)");
  std::mt19937_64 rng(seed);
  auto letters = ctx.base().nonunit_generators();
  detail::InductiveProduct prod(ctx.algebra());
  auto mul = [&](const Tensor& x, const Tensor& y) {
    Tensor out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) out.add(prod(a, b), ca * cb);
    return out;
  };
  for (int k = 0; k < triples; ++k) {
    Tensor x = random_tensor(rng, letters, max_len, 3);
    Tensor y = random_tensor(rng, letters, max_len, 3);
    Tensor z = random_tensor(rng, letters, max_len, 3);
    Tensor l = mul(mul(x, y), z), rr = mul(x, mul(y, z));
    r.expect(l == rr, "(x⋈y)⋈z = x⋈(y⋈z)", [&] {
      return "x = " + x.to_string() + " ; y = " + y.to_string() + " ; z = " + z.to_string() + ": " +
             detail::mismatch(l, rr);
    });
  }
  return r;
}

/// The inductive recursion and the mixable-shuffle expansion agree on all
/// generator-word pairs with |x|+|y| ≤ max_total.
inline Report verify_product_formulas(const ProductContext& ctx, int max_total) {
  Report r("inductive = explicit");
  detail::InductiveProduct prod(ctx.algebra());
  auto letters = ctx.base().nonunit_generators();
  for (int n = 0; n <= max_total; ++n)
    for (int i = 0; i <= n; ++i)
      for (const Word& x : all_words(letters, static_cast<std::size_t>(i)))
        for (const Word& y : all_words(letters, static_cast<std::size_t>(n - i))) {
          const Tensor& a = prod(x, y);
          Tensor b = qqsh_explicit(ctx, x, y);
          r.expect(a == b, "inductive = explicit",
                   [&] { return to_string(x) + " , " + to_string(y) + ": " + detail::mismatch(a, b); });
        }
  return r;
}

/// Runs one named suite; each entry is one module report.
inline std::vector<Report> run_suite(const std::string& name, const BraidedAlgebra& A, const SuiteConfig& cfg) {
  int d = cfg.max_degree;
  std::vector<Report> out;
  Scalar lambda = cfg.lambda.value_or(Scalar(1));
  if (name == "braided") {
    out.push_back(verify_braided_algebra(A));
    for (int n = 2; n <= std::min(d, 4); ++n) out.push_back(verify_lift_well_defined(A, n));
    out.push_back(verify_block_functoriality(A, std::min(d + 1, 6), A.generators()));
    out.push_back(verify_sigma_m_power(A, std::min(d - 1, 3)));
  } else if (name == "bialgebra") {
    ProductContext ctx(A, lambda);
    out.push_back(verify_product_formulas(ctx, d));
    out.push_back(verify_associativity_random(ctx, 50, 2, cfg.seed));
    out.push_back(verify_bialgebra(ctx, d));
    out.push_back(verify_product_braiding(ctx, d));
  } else if (name == "duality") {
    if (A.has_overflow()) {
      Report r("duality");
      r.skip();
      r.note("capped algebra: no finite adjoint coalgebra");
      out.push_back(r);
      return out;
    }
    Pairing P = cfg.pairing ? *cfg.pairing : Pairing::kronecker(A.generators());
    BraidedCoalgebra C = adjoint_coalgebra(A, P);
    out.push_back(verify_braided_coalgebra(C));
    out.push_back(verify_phi2_delta(C, std::min(d, 3)));
    out.push_back(verify_phi_coalgebra(C, d));
    out.push_back(verify_duality(A, P, C, d));
  } else if (name == "rb") {
    BraidedAlgebra U = A.is_unital() ? A : unitalize(A);
    out.push_back(verify_rb(U, d, cfg.lambda));
    out.push_back(verify_diamond_algebra(U, d, cfg.lambda));
    ProductContext ctx(U, lambda);
    out.push_back(verify_braided_rb(ctx, d));
    StarReport s = verify_star_braided_rb(ctx, d);
    out.push_back(s.hypotheses);
    out.push_back(s.conclusion);
  } else if (name == "tridend") {
    ProductContext ctx(A, lambda);
    out.push_back(verify_tridendriform(ctx, d + 1));
    if (!A.is_unital() && lambda.is_one()) out.push_back(verify_rb_to_tridend(ctx, d));
  } else {
    throw domain_error("unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace qqsh
