// qqsh: command-line front end for quantum quasi-shuffle computations.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 algebra-spec
// error, 4 cap exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qqsh/qqsh.hpp"

namespace {

using namespace qqsh;

constexpr int kHardDegreeCap = 10;

struct Options {
  std::string algebra;
  std::string format = "text";
  int max_degree = 4;
  std::uint64_t seed = 0;
  std::string lambda;
  std::string variant;
};

struct Loaded {
  BraidedAlgebra algebra;
  std::optional<Pairing> pairing;
};

Loaded load(const Options& o) {
  if (o.algebra.empty()) return {make_diagonal_algebra(6), std::nullopt};
  const std::string prefix = "builtin:";
  if (o.algebra.rfind(prefix, 0) == 0) return {builtin_algebra(o.algebra.substr(prefix.size())), std::nullopt};
  AlgebraSpec s = load_algebra_spec(o.algebra);
  return {std::move(s.algebra), std::move(s.pairing)};
}

std::optional<Scalar> parse_lambda(const Options& o) {
  if (o.lambda.empty()) return std::nullopt;
  return Scalar::parse(o.lambda);
}

void require_cap(int n, const std::string& what) {
  if (n > kHardDegreeCap)
    throw cap_error(what + " = " + std::to_string(n) + " exceeds the hard cap " + std::to_string(kHardDegreeCap));
}

bool json_out(const Options& o) { return o.format == "json"; }

void print_tensor(const Options& o, const Tensor& t) {
  if (json_out(o)) {
    std::cout << to_json(t).dump(2) << "\n";
  } else {
    std::cout << t.to_string() << "\n";
  }
}

int max_length(const Tensor& t) {
  int m = 0;
  for (const auto& [w, c] : t) m = std::max(m, static_cast<int>(w.size()));
  return m;
}

int cmd_product(const Options& o, const std::string& xs, const std::string& ys) {
  Loaded L = load(o);
  Tensor x = parse_expression(L.algebra, xs);
  Tensor y = parse_expression(L.algebra, ys);
  require_cap(max_length(x) + max_length(y), "total input length");
  std::optional<Scalar> lam = parse_lambda(o);
  ProductContext ctx(L.algebra, lam.value_or(Scalar(1)));
  std::string v = o.variant.empty() ? "inductive" : o.variant;
  Tensor r;
  if (v == "inductive") {
    r = qqsh_inductive(ctx, x, y);
  } else if (v == "explicit") {
    r = qqsh_explicit(ctx, x, y);
  } else if (v == "shuffle") {
    r = qsh(ctx, x, y);
  } else if (v == "hoffman") {
    r = hoffman_product(ctx, x, y);
  } else {
    throw parse_error("unknown product variant '" + v + "' (inductive|explicit|shuffle|hoffman)");
  }
  print_tensor(o, r);
  return 0;
}

int cmd_mixable(const Options& o, int i, int j) {
  if (i < 0 || j < 0) throw parse_error("mixable: i and j must be nonnegative");
  require_cap(i + j, "i+j");
  auto list = mixable_shuffles(i, j);
  if (json_out(o)) {
    Json a = Json::array();
    for (const auto& m : list) a.push_back(to_json(m));
    std::cout << a.dump(2) << "\n";
    return 0;
  }
  for (const auto& m : list) {
    std::string S = "{";
    for (std::size_t k = 0; k < m.S.size(); ++k)
      S += (k ? "," : "") + std::string("(") + std::to_string(m.S[k]) + "," + std::to_string(m.S[k] + 1) + ")";
    S += "}";
    std::cout << m.w.to_string() << "  S=" << S << "  cp=" << to_string(cp_shuffle(m.S, i + j)) << "\n";
  }
  return 0;
}

int cmd_power(const Options& o, int i, int k) {
  if (i < 1 || k < 1) throw parse_error("power: i and k must be positive");
  require_cap(k, "k");
  Loaded L = load(o);
  std::optional<Scalar> lam = parse_lambda(o);
  ProductContext ctx(L.algebra, lam.value_or(Scalar(1)));
  print_tensor(o, power_formula(ctx, i, k));
  return 0;
}

int cmd_nfold(const Options& o, const std::vector<std::string>& letters) {
  Loaded L = load(o);
  Word w;
  for (const std::string& s : letters) {
    Word part = parse_word(L.algebra, s);
    w.insert(w.end(), part.begin(), part.end());
  }
  require_cap(static_cast<int>(w.size()), "n");
  std::optional<Scalar> lam = parse_lambda(o);
  ProductContext ctx(L.algebra, lam.value_or(Scalar(1)));
  std::string v = o.variant.empty() ? "explicit" : o.variant;
  Tensor r;
  if (v == "explicit") {
    r = nfold(ctx, w);
  } else if (v == "fold") {
    r = Tensor::unit();
    for (const Letter& l : w) r = qqsh_inductive(ctx, r, Tensor::letter(l));
  } else if (v == "hoffman-closed") {
    r = hoffman_nfold_closed(ctx, w, DescentSource::inverse);
  } else if (v == "hoffman-literal") {
    r = hoffman_nfold_closed(ctx, w, DescentSource::literal);
  } else {
    throw parse_error("unknown nfold variant '" + v + "' (explicit|fold|hoffman-closed|hoffman-literal)");
  }
  print_tensor(o, r);
  return 0;
}

int print_reports(const Options& o, const std::vector<Report>& reports, const std::string& title) {
  bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
  if (json_out(o)) {
    Json a = Json::array();
    for (const auto& r : reports) a.push_back(to_json(r));
    std::cout << Json{{"suite", title}, {"ok", ok}, {"reports", std::move(a)}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.summary() << "\n";
    std::cout << title << ": " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

SuiteConfig suite_config(const Options& o, const Loaded& L) {
  SuiteConfig c;
  c.max_degree = o.max_degree;
  c.seed = o.seed;
  c.lambda = parse_lambda(o);
  c.pairing = L.pairing;
  return c;
}

int cmd_dual_check(const Options& o) {
  Loaded L = load(o);
  return print_reports(o, run_suite("duality", L.algebra, suite_config(o, L)), "dual-check");
}

int cmd_verify(const Options& o, const std::string& suite) {
  Loaded L = load(o);
  SuiteConfig c = suite_config(o, L);
  std::vector<Report> all;
  if (suite == "all") {
    for (const std::string& s : suite_names())
      for (auto& r : run_suite(s, L.algebra, c)) all.push_back(std::move(r));
  } else {
    all = run_suite(suite, L.algebra, c);
  }
  return print_reports(o, all, "verify " + suite);
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse:
    case ErrorKind::domain:
      return 2;
    case ErrorKind::spec:
      return 3;
    case ErrorKind::cap:
      return 4;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qqsh: quantum quasi-shuffle products, enumerations and verification suites"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--algebra", o.algebra, "algebra spec JSON path, or builtin:<name>; default diagonal N=6");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", o.max_degree, "verification depth (at most 10)");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--lambda", o.lambda, "weight λ as a scalar; default 1 (symbolic for the rb suite)");
  app.add_option("--variant", o.variant, "product or nfold variant");

  std::string x, y;
  auto* product = app.add_subcommand("product", "x ⋈ y of two expressions");
  product->add_option("x", x)->required();
  product->add_option("y", y)->required();

  int i = 0, j = 0, k = 0;
  auto* mixable = app.add_subcommand("mixable", "list the mixable (i,j)-shuffles (w, S, cp(S))");
  mixable->add_option("i", i)->required();
  mixable->add_option("j", j)->required();

  auto* power = app.add_subcommand("power", "e_i^{⋈k} by the closed formula");
  power->add_option("i", i)->required();
  power->add_option("k", k)->required();

  std::vector<std::string> letters;
  auto* nfold_cmd = app.add_subcommand("nfold", "a1 ⋈ ⋯ ⋈ an");
  nfold_cmd->add_option("letters", letters)->required();

  app.add_subcommand("dual-check", "check adj(Φ) = ⋈ under the spec pairing (Kronecker by default)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite)->check(CLI::IsMember({"all", "braided", "bialgebra", "duality", "rb", "tridend"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (o.max_degree < 0) throw parse_error("--max-degree must be nonnegative");
    require_cap(o.max_degree, "--max-degree");
    if (*product) return cmd_product(o, x, y);
    if (*mixable) return cmd_mixable(o, i, j);
    if (*power) return cmd_power(o, i, k);
    if (*nfold_cmd) return cmd_nfold(o, letters);
    if (app.got_subcommand("dual-check")) return cmd_dual_check(o);
    if (*verify) return cmd_verify(o, suite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
