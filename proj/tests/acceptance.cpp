// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the time budget. Exit status is the number of failing criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qqsh/qqsh.hpp"

using namespace qqsh;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> info;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      info.push_back("violated: " + what);
    }
  }
  void absorb(const Report& r) {
    if (!r.ok()) {
      ok = false;
      info.push_back(r.summary(3));
    } else {
      info.push_back(r.name() + ": " + std::to_string(r.checked()) + " checks");
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.info.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = secs <= budget_s;
  bool pass = o.ok && in_budget;
  if (!pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, budget_s);
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << "  (" << timing
            << (in_budget ? "" : ", over budget") << ")\n";
  for (const auto& line : o.info) std::cout << "        " << line << "\n";
  std::cout.flush();
}

oracle::LetterProduct letter_product(const BraidedAlgebra& A) {
  return [&A](int a, int b) -> std::optional<int> {
    const auto& t = A.product(A.letter(a), A.letter(b));
    if (t.empty()) return std::nullopt;
    if (t.size() != 1 || !t[0].coeff.is_one()) throw std::runtime_error("oracle expects monomial products");
    return t[0].letter.index;
  };
}

oracle::IWord indices(const Word& w) {
  oracle::IWord r;
  for (const Letter& l : w) r.push_back(l.index);
  return r;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> d;
  for (int l = 1; l < w.size(); ++l)
    if (w(l) > w(l + 1)) d.push_back(l);
  return d;
}

}  // namespace

int main() {
  std::cout << "qqsh acceptance run\n";

  criterion(1, "base case a⋈b = m(a⊗b) + a⊗b + σ(a⊗b) on every built-in algebra", 1, [](Outcome& o) {
    std::size_t pairs = 0;
    for (const auto& [name, A] : builtin_algebras()) {
      ProductContext ctx(A);
      for (const Letter& a : A.nonunit_generators())
        for (const Letter& b : A.nonunit_generators()) {
          Tensor m, id, sigma;
          for (const auto& t : A.product(a, b)) m.add(Word{t.letter}, t.coeff);
          id.add(Word{a, b}, 1);
          for (const auto& t : A.braid(a, b)) sigma.add(Word{t.left, t.right}, t.coeff);
          Tensor lhs = qqsh_inductive(ctx, Word{a}, Word{b});
          Tensor ex = qqsh_explicit(ctx, Word{a}, Word{b});
          o.require(lhs == m + id + sigma && ex == lhs,
                    name + ": e" + std::to_string(a.index) + "⋈e" + std::to_string(b.index) + " = " + lhs.to_string());
          ++pairs;
        }
    }
    o.info.push_back(std::to_string(pairs) + " generator pairs over " + std::to_string(builtin_algebras().size()) +
                     " algebras");
  });

  criterion(2, "explicit = inductive, i+j ≤ 6 (diagonal N=6, Hoffman two-letter bracket)", 60, [](Outcome& o) {
    o.absorb(verify_product_formulas(ProductContext(make_diagonal_nonunital(6)), 6));
    o.absorb(verify_product_formulas(ProductContext(make_hoffman_example()), 6));
  });

  criterion(3, "associativity of ⋈ on 200 seeded random triples, word length ≤ 2", 30, [](Outcome& o) {
    o.absorb(verify_associativity_random(ProductContext(make_diagonal_nonunital(6)), 200, 2, 20240601));
  });

  criterion(4, "nfold = left fold of ⋈ for n ≤ 4 (diagonal N=8)", 60, [](Outcome& o) {
    ProductContext ctx(make_diagonal_nonunital(8));
    auto letters = ctx.base().nonunit_generators();
    std::size_t n_checked = 0;
    for (std::size_t n = 0; n <= 4; ++n)
      for (const Word& w : all_words(letters, n)) {
        Tensor fold = Tensor::unit();
        for (const Letter& l : w) fold = qqsh_inductive(ctx, fold, Tensor::letter(l));
        Tensor direct = nfold(ctx, w);
        o.require(direct == fold, "nfold " + to_string(w));
        ++n_checked;
      }
    o.info.push_back(std::to_string(n_checked) + " tuples");
  });

  criterion(5, "power formula = k-fold product (i ≤ 2, k ≤ 4); coefficient 1+q_ii at k=2", 10, [](Outcome& o) {
    ProductContext ctx(make_diagonal_nonunital(8));
    const BraidedAlgebra& A = ctx.base();
    for (int i = 1; i <= 2; ++i) {
      Tensor fold = Tensor::unit();
      for (int k = 1; k <= 4; ++k) {
        fold = qqsh_inductive(ctx, fold, Tensor::letter(A.letter(i)));
        o.require(power_formula(ctx, i, k) == fold, "e" + std::to_string(i) + "^" + std::to_string(k));
        if (k == 2) {
          Scalar c = power_formula(ctx, i, 2).coeff(Word{A.letter(i), A.letter(i)});
          Scalar expect = Scalar(1) + Scalar::q(i * i);
          o.require(c == expect, "coefficient of e" + std::to_string(i) + "⊗e" + std::to_string(i) + " is " +
                                     c.to_string());
        }
      }
    }
  });

  criterion(6, "flip braiding, symbolic λ: explicit = mixable-shuffle brute force, i+j ≤ 5", 30, [](Outcome& o) {
    // λ is carried by q, which the flip braiding never produces.
    BraidedAlgebra A = make_flip_algebra(5);
    ProductContext ctx(A, Scalar::q());
    auto m = letter_product(A);
    auto letters = A.nonunit_generators();
    std::size_t n_checked = 0;
    for (int n = 0; n <= 5; ++n)
      for (int i = 0; i <= n; ++i)
        for (const Word& x : all_words(letters, static_cast<std::size_t>(i)))
          for (const Word& y : all_words(letters, static_cast<std::size_t>(n - i))) {
            auto got = oracle::from_tensor(qqsh_explicit(ctx, x, y));
            o.require(got == oracle::mixable_shuffle(indices(x), indices(y), m), to_string(x) + " , " + to_string(y));
            ++n_checked;
          }
    o.info.push_back(std::to_string(n_checked) + " word pairs");
  });

  criterion(7, "Hoffman closed n-fold form = iterated recursion (n ≤ 4); q=1 commutative = quasi-shuffle", 30,
            [](Outcome& o) {
              BraidedAlgebra H = make_hoffman_example();
              ProductContext ctx(H);
              auto deg = [&H](int a) { return H.letter(a).degree; };
              auto bracket = letter_product(H);
              auto mul = [&](const oracle::IWord& u, const oracle::IWord& v) { return oracle::hoffman(u, v, deg, bracket); };
              std::size_t lit_mismatch = 0, tuples = 0;
              for (std::size_t n = 1; n <= 4; ++n)
                for (const Word& w : all_words(H.generators(), n)) {
                  auto expect = oracle::fold(indices(w), mul);
                  o.require(oracle::from_tensor(hoffman_nfold_closed(ctx, w)) == expect, "closed form " + to_string(w));
                  lit_mismatch += oracle::from_tensor(hoffman_nfold_closed(ctx, w, DescentSource::literal)) != expect;
                  ++tuples;
                }
              o.info.push_back(std::to_string(tuples) + " tuples; inner sum over I ⪰ C(w⁻¹)");
              o.info.push_back("info: with I ⪰ C(w) instead, " + std::to_string(lit_mismatch) + " tuples disagree");

              BraidedAlgebra K = make_hoffman_commutative(Scalar(1));
              ProductContext kctx(K);
              auto kb = letter_product(K);
              auto qsh = [&](const oracle::IWord& u, const oracle::IWord& v) { return oracle::quasi_shuffle(u, v, kb); };
              for (std::size_t n = 1; n <= 4; ++n)
                for (const Word& w : all_words(K.generators(), n))
                  o.require(oracle::from_tensor(hoffman_nfold_closed(kctx, w)) == oracle::fold(indices(w), qsh),
                            "q=1 quasi-shuffle " + to_string(w));
            });

  criterion(8, "lift independent of reduced word, n ≤ 4 (diagonal, general braiding)", 30, [](Outcome& o) {
    for (const BraidedAlgebra& A : {make_diagonal_nonunital(4), make_general_example()})
      for (int n = 2; n <= 4; ++n) {
        Report r = verify_lift_well_defined(A, n);
        o.require(r.checked() > 0, "lift check ran for n=" + std::to_string(n));
        o.absorb(r);
      }
  });

  criterion(9, "bialgebra compatibility and primitive generators, degree ≤ 4", 60, [](Outcome& o) {
    o.absorb(verify_bialgebra(ProductContext(make_diagonal_nonunital(4)), 4));
    o.absorb(verify_bialgebra(ProductContext(make_general_example()), 4));
  });

  criterion(10, "dual coalgebra: Φ₂ = Δ_σ,i, Φ coalgebra, ⟨x⋈y, z⟩ = ⟨x⊗̲y, Φz⟩ (Kronecker, degree ≤ 4)", 120,
            [](Outcome& o) {
              BraidedAlgebra A = make_diagonal_nonunital(4);
              Pairing P = Pairing::kronecker(A.generators());
              BraidedCoalgebra C = adjoint_coalgebra(A, P);
              o.absorb(verify_braided_coalgebra(C));
              o.absorb(verify_phi2_delta(C, 3));
              o.absorb(verify_phi_coalgebra(C, 4));
              o.absorb(verify_duality(A, P, C, 4));
              BraidedAlgebra G = make_general_example();
              Pairing PG = Pairing::kronecker(G.generators());
              o.absorb(verify_duality(G, PG, adjoint_coalgebra(G, PG), 4));
            });

  criterion(11, "Rota-Baxter (symbolic λ), commutation, star hypotheses, tridendriform relations", 120,
            [](Outcome& o) {
              BraidedAlgebra U = unitalize(make_diagonal_nonunital(4));
              o.absorb(verify_rb(U, 4));
              ProductContext uctx(U);
              o.absorb(verify_braided_rb(uctx, 4));
              StarReport s = verify_star_braided_rb(uctx, 4);
              o.absorb(s.hypotheses);
              o.absorb(s.conclusion);
              ProductContext dctx(make_diagonal_nonunital(6));
              o.absorb(verify_tridendriform(dctx, 5));
              o.absorb(verify_tridendriform(ProductContext(make_hoffman_example()), 5));
              o.absorb(verify_rb_to_tridend(dctx, 4));
            });

  criterion(12, "counting: shuffles, the two listed mixable sets, 2^|𝒮^w| = #{I ⪰ C(w)}", 10, [](Outcome& o) {
    for (int n = 0; n <= 8; ++n)
      for (int i = 0; i <= n; ++i) {
        auto expect = oracle::binomial(n, i);
        o.require(shuffles(i, n - i).size() == expect && oracle::count_shuffles(i, n - i) == expect,
                  "|shuffles(" + std::to_string(i) + "," + std::to_string(n - i) + ")|");
      }
    // both displayed listings are {(1, ∅), (1, {(1,2)}), (s1, ∅)}
    std::set<std::pair<std::vector<int>, std::vector<int>>> listed{{{1, 2}, {}}, {{1, 2}, {1}}, {{2, 1}, {}}};
    auto as_set = [](const std::vector<MixableShuffle>& v) {
      std::set<std::pair<std::vector<int>, std::vector<int>>> s;
      for (const auto& m : v) s.insert({m.w.images(), m.S});
      return s;
    };
    auto s11 = mixable_shuffles(1, 1);
    auto s2 = barS_n(2);
    o.require(s11.size() == 3 && as_set(s11) == listed, "mixable (1,1)-shuffles match the listing");
    o.require(s2.size() == 3 && as_set(s2) == listed, "full mixable set for n=2 matches the listing");

    std::size_t total = 0, bad = 0, bad_inverse = 0;
    std::string first_bad;
    for (int n = 1; n <= 5; ++n) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 1);
      do {
        Permutation w(img);
        std::uint64_t lhs = std::uint64_t{1} << script_S(w).size();
        auto rhs = refinements(descent_composition(w)).size();
        if (rhs != oracle::count_refinements(n, descents(w))) o.require(false, "refinement count for " + w.to_string());
        if (lhs != rhs) {
          if (bad++ == 0) first_bad = w.to_string();
        }
        if (lhs != oracle::count_refinements(n, descents(w.inverse()))) ++bad_inverse;
        ++total;
      } while (std::next_permutation(img.begin(), img.end()));
    }
    o.require(bad == 0, std::to_string(bad) + " of " + std::to_string(total) +
                            " permutations have 2^|𝒮^w| ≠ #{I ⪰ C(w)}, first w = " + first_bad);
    o.info.push_back("info: with C(w⁻¹) in place of C(w), " + std::to_string(bad_inverse) + " of " +
                     std::to_string(total) + " disagree");
  });

  criterion(13, "CLI: verify all exits 0 on shipped specs; product output is byte-identical", 600, [](Outcome& o) {
    const std::string cli = QQSH_CLI_PATH;
    std::vector<std::filesystem::path> specs;
    for (const auto& e : std::filesystem::directory_iterator(QQSH_SPECS_DIR))
      if (e.path().extension() == ".json") specs.push_back(e.path());
    std::sort(specs.begin(), specs.end());
    o.require(!specs.empty(), "specs directory has JSON files");
    for (const auto& p : specs) {
      RunResult r = run("\"" + cli + "\" --algebra \"" + p.string() + "\" verify all");
      o.require(r.status == 0, p.filename().string() + " exit " + std::to_string(r.status));
      o.info.push_back(p.filename().string() + ": exit " + std::to_string(r.status));
    }
    RunResult a = run("\"" + cli + "\" product e1 e2");
    RunResult b = run("\"" + cli + "\" product e1 e2");
    o.require(a.status == 0 && b.status == 0 && a.out == b.out && !a.out.empty(), "product e1 e2 deterministic");
    o.info.push_back("product e1 e2 -> " + a.out.substr(0, a.out.find('\n')));
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures;
}
