#pragma once

// JSON serialization, algebra-spec loading and the expression grammar used by
// the command line.
//
// Expression grammar:
//   expr  := term (('+' | '-') term)*
//   term  := [scalar '*'] word | scalar
//   word  := '1' | letter (('⊗' | '.') letter)*
//   letter:= 'e' digits
// A scalar may be parenthesized, e.g. "(1 + q)*e1⊗e2 - q^-1*e3 + 2".

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qqsh/braided.hpp"
#include "qqsh/dualco.hpp"
#include "qqsh/error.hpp"
#include "qqsh/perm.hpp"
#include "qqsh/report.hpp"
#include "qqsh/scalar.hpp"
#include "qqsh/tensor.hpp"

namespace qqsh {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Serialization

inline Json to_json(const Word& w) {
  Json a = Json::array();
  for (const Letter& l : w) a.push_back(Json::array({l.index, l.degree}));
  return a;
}

inline Json to_json(const Tensor& t) {
  Json a = Json::array();
  for (const auto& [w, c] : t) a.push_back(Json{{"word", to_json(w)}, {"coeff", c.to_string()}});
  return a;
}

inline Json to_json(const MultiTensor& z) {
  Json a = Json::array();
  for (const auto& [s, c] : z) {
    Json slots = Json::array();
    for (const Word& w : s) slots.push_back(to_json(w));
    a.push_back(Json{{"slots", std::move(slots)}, {"coeff", c.to_string()}});
  }
  return a;
}

inline Json to_json(const Permutation& w) { return Json(w.images()); }

inline Json to_json(const MixableShuffle& m) {
  Json S = Json::array();
  for (int k : m.S) S.push_back(Json::array({k, k + 1}));
  int n = m.w.size();
  Composition cp = m.context == MixableShuffle::Context::shuffle ? cp_shuffle(m.S, n) : cp_full(m.S, n);
  return Json{{"w", to_json(m.w)}, {"S", std::move(S)}, {"cp", Json(cp)}};
}

inline Json to_json(const Report& r) {
  Json v = Json::array();
  for (const auto& x : r.violations()) v.push_back(Json{{"check", x.check}, {"witness", x.witness}});
  Json j{{"name", r.name()}, {"ok", r.ok()}, {"checked", r.checked()}, {"skipped", r.skipped()}, {"violations", std::move(v)}};
  if (!r.notes().empty()) j["notes"] = r.notes();
  return j;
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw spec_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw spec_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline Scalar as_scalar(const Json& j, const char* what) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
  if (!j.is_string()) throw spec_error(std::string(what) + " must be a scalar string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw spec_error(std::string(what) + ": " + e.what());
  }
}

inline Letter as_letter(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw spec_error("a letter is [index, degree]");
  return {as_int(j[0], "letter index"), as_int(j[1], "letter degree")};
}

inline Word as_word(const Json& j) {
  if (!j.is_array()) throw spec_error("a word is an array of letters");
  Word w;
  for (const Json& l : j) w.push_back(as_letter(l));
  return w;
}

}  // namespace detail

inline Tensor tensor_from_json(const Json& j) {
  if (!j.is_array()) throw spec_error("a tensor is an array of terms");
  Tensor t;
  for (const Json& term : j)
    t.add(detail::as_word(detail::field(term, "word")), detail::as_scalar(detail::field(term, "coeff"), "coeff"));
  return t;
}

inline MultiTensor multitensor_from_json(const Json& j, std::size_t arity) {
  if (!j.is_array()) throw spec_error("a multitensor is an array of terms");
  MultiTensor z(arity);
  for (const Json& term : j) {
    const Json& slots = detail::field(term, "slots");
    if (!slots.is_array() || slots.size() != arity) throw spec_error("slot count mismatch");
    Slots s;
    for (const Json& w : slots) s.push_back(detail::as_word(w));
    z.add(s, detail::as_scalar(detail::field(term, "coeff"), "coeff"));
  }
  return z;
}

// ---------------------------------------------------------------------------
// Algebra specs
//
//   {"kind":"diagonal","N":6,"q_exponent":"product"|"zero"|[[i,j,e],...],
//    "unital":true,"cap":false}
//   {"kind":"hoffman","letters":[[idx,deg],...],"bracket":[[i,j,[[k,"c"],...]],...],"q":"q"}
//   {"kind":"general","generators":[[idx,deg],...],
//    "braiding":[[i,j,[[k,l,"c"],...]],...],"product":[[i,j,[[k,"c"],...]],...],"unit":idx}
// Any spec may carry "pairing": {"pairs": [[a,c,"s"],...]} and "name".

struct AlgebraSpec {
  BraidedAlgebra algebra;
  std::optional<Pairing> pairing;
};

namespace detail {

inline ProductSpec parse_product_table(const Json& j) {
  ProductSpec p;
  if (!j.is_array()) throw spec_error("product table must be an array");
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != 3 || !row[2].is_array())
      throw spec_error("product rows are [i, j, [[k, \"coeff\"], ...]]");
    auto& entry = p.table[{as_int(row[0], "product index"), as_int(row[1], "product index")}];
    for (const Json& t : row[2]) {
      if (!t.is_array() || t.size() != 2) throw spec_error("product terms are [k, \"coeff\"]");
      entry.emplace_back(as_int(t[0], "product index"), as_scalar(t[1], "product coeff"));
    }
  }
  return p;
}

inline BraidingSpec parse_braiding_table(const Json& j) {
  BraidingSpec b;
  b.kind = BraidingSpec::Kind::general;
  if (!j.is_array()) throw spec_error("braiding table must be an array");
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != 3 || !row[2].is_array())
      throw spec_error("braiding rows are [i, j, [[k, l, \"coeff\"], ...]]");
    auto& entry = b.table[{as_int(row[0], "braiding index"), as_int(row[1], "braiding index")}];
    for (const Json& t : row[2]) {
      if (!t.is_array() || t.size() != 3) throw spec_error("braiding terms are [k, l, \"coeff\"]");
      entry.emplace_back(as_int(t[0], "braiding index"), as_int(t[1], "braiding index"),
                         as_scalar(t[2], "braiding coeff"));
    }
  }
  return b;
}

inline std::vector<Letter> parse_letters(const Json& j) {
  if (!j.is_array() || j.empty()) throw spec_error("letters must be a nonempty array");
  std::vector<Letter> r;
  for (const Json& l : j) r.push_back(as_letter(l));
  return r;
}

}  // namespace detail

inline Pairing pairing_from_json(const Json& j, const std::vector<Letter>& letters) {
  const Json& pairs = detail::field(j, "pairs");
  if (!pairs.is_array()) throw spec_error("pairing.pairs must be an array");
  std::map<IndexPair, Scalar> t;
  for (const Json& row : pairs) {
    if (!row.is_array() || row.size() != 3) throw spec_error("pairing rows are [a, c, \"scalar\"]");
    t[{detail::as_int(row[0], "pairing index"), detail::as_int(row[1], "pairing index")}] =
        detail::as_scalar(row[2], "pairing value");
  }
  return Pairing(letters, std::move(t));
}

inline Json to_json(const Pairing& P) {
  Json pairs = Json::array();
  for (const auto& [k, v] : P.table())
    if (!v.is_zero()) pairs.push_back(Json::array({k.first, k.second, v.to_string()}));
  return Json{{"pairs", std::move(pairs)}};
}

inline AlgebraSpec algebra_from_json(const Json& j) {
  if (!j.is_object()) throw spec_error("algebra spec must be a JSON object");
  std::string kind = detail::field(j, "kind").get<std::string>();
  auto build = [&]() -> BraidedAlgebra {
    if (kind == "diagonal") {
      DiagonalOptions o;
      int N = detail::as_int(detail::field(j, "N"), "N");
      if (j.contains("unital")) o.unital = j.at("unital").get<bool>();
      if (j.contains("cap")) o.capped = j.at("cap").get<bool>();
      if (j.contains("q_exponent")) {
        const Json& e = j.at("q_exponent");
        if (e.is_string() && e.get<std::string>() == "product") {
          o.rule = QRule::product();
        } else if (e.is_string() && e.get<std::string>() == "zero") {
          o.rule = QRule::zero();
        } else if (e.is_array()) {
          std::map<IndexPair, int> t;
          for (const Json& row : e) {
            if (!row.is_array() || row.size() != 3) throw spec_error("q_exponent rows are [i, j, e]");
            t[{detail::as_int(row[0], "index"), detail::as_int(row[1], "index")}] = detail::as_int(row[2], "exponent");
          }
          o.rule = QRule::table(std::move(t));
        } else {
          throw spec_error("q_exponent must be \"product\", \"zero\" or a table");
        }
      }
      return make_diagonal_algebra(N, o);
    }
    if (kind == "hoffman") {
      Scalar hq = j.contains("q") ? detail::as_scalar(j.at("q"), "q") : Scalar::q();
      ProductSpec bracket = j.contains("bracket") ? detail::parse_product_table(j.at("bracket")) : ProductSpec{};
      return make_hoffman_algebra(detail::parse_letters(detail::field(j, "letters")), std::move(bracket), hq);
    }
    if (kind == "general") {
      std::optional<int> unit;
      if (j.contains("unit") && !j.at("unit").is_null()) unit = detail::as_int(j.at("unit"), "unit");
      ProductSpec p = j.contains("product") ? detail::parse_product_table(j.at("product")) : ProductSpec{};
      std::string name = j.contains("name") ? j.at("name").get<std::string>() : "general";
      return make_general_algebra(detail::parse_letters(detail::field(j, "generators")),
                                  detail::parse_braiding_table(detail::field(j, "braiding")), std::move(p), unit,
                                  name);
    }
    throw spec_error("unknown algebra kind '" + kind + "'");
  };
  try {
    AlgebraSpec spec{build(), std::nullopt};
    if (j.contains("pairing")) spec.pairing = pairing_from_json(j.at("pairing"), spec.algebra.generators());
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw spec_error(std::string("malformed algebra spec: ") + e.what());
  }
}

inline AlgebraSpec load_algebra_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_error("cannot open algebra spec '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw spec_error("algebra spec '" + path + "' is not valid JSON: " + e.what());
  }
  return algebra_from_json(j);
}

// ---------------------------------------------------------------------------
// Expressions

namespace detail {

/// Splits at top-level '+' / '-', keeping the sign with each term. A sign
/// after '^', '*' or '/' belongs to the number that follows.
inline std::vector<std::pair<bool, std::string>> split_terms(std::string_view s) {
  std::vector<std::pair<bool, std::string>> out;
  int depth = 0;
  bool negative = false;
  std::string cur;
  auto flush = [&] {
    std::size_t a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) {
      if (!cur.empty() || !out.empty()) throw parse_error("empty term in expression");
      cur.clear();
      return;
    }
    std::size_t b = cur.find_last_not_of(" \t");
    out.emplace_back(negative, cur.substr(a, b - a + 1));
    cur.clear();
  };
  char prev = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw parse_error("unbalanced ')' in expression");
    if (depth == 0 && (c == '+' || c == '-') && prev != '^' && prev != '*' && prev != '/') {
      if (cur.find_first_not_of(" \t") != std::string::npos) {
        flush();
        negative = false;
      }
      if (c == '-') negative = !negative;
      prev = c;
      continue;
    }
    cur += c;
    if (c != ' ' && c != '\t') prev = c;
  }
  if (depth != 0) throw parse_error("unbalanced '(' in expression");
  if (cur.find_first_not_of(" \t") == std::string::npos) throw parse_error("expression ends without a term");
  flush();
  return out;
}

/// Parses "1" or "e1⊗e2.e3"; nullopt when the text is not a word.
inline std::optional<std::vector<int>> parse_word_indices(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t");
  std::size_t b = s.find_last_not_of(" \t");
  if (a == std::string_view::npos) return std::nullopt;
  s = s.substr(a, b - a + 1);
  if (s == "1") return std::vector<int>{};
  std::vector<int> idx;
  std::size_t pos = 0;
  static const std::string_view tensor_sign = "⊗";
  while (true) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size() || s[pos] != 'e') return std::nullopt;
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || pos - start > 6) return std::nullopt;
    idx.push_back(std::stoi(std::string(s.substr(start, pos - start))));
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos == s.size()) return idx;
    if (s[pos] == '.') {
      ++pos;
    } else if (s.substr(pos, tensor_sign.size()) == tensor_sign) {
      pos += tensor_sign.size();
    } else {
      return std::nullopt;
    }
  }
}

}  // namespace detail

/// Parses an expression into a Tensor over the generators of A.
inline Tensor parse_expression(const BraidedAlgebra& A, std::string_view text) {
  Tensor t;
  for (const auto& [negative, term] : detail::split_terms(text)) {
    Scalar coeff = 1;
    std::optional<std::vector<int>> word;
    // coefficient * word, split at the last top-level '*'
    int depth = 0;
    std::size_t star = std::string::npos;
    for (std::size_t k = 0; k < term.size(); ++k) {
      if (term[k] == '(') ++depth;
      if (term[k] == ')') --depth;
      if (depth == 0 && term[k] == '*') star = k;
    }
    if (star != std::string::npos) word = detail::parse_word_indices(std::string_view(term).substr(star + 1));
    if (word) {
      coeff = Scalar::parse(term.substr(0, star));
    } else if ((word = detail::parse_word_indices(term))) {
      coeff = 1;
    } else {
      if (term.find('e') != std::string::npos) throw parse_error("cannot parse term '" + term + "'");
      coeff = Scalar::parse(term);
      word = std::vector<int>{};
    }
    Word w;
    for (int i : *word) {
      if (!A.has_letter(i)) throw parse_error("unknown generator e" + std::to_string(i) + " in '" + term + "'");
      w.push_back(A.letter(i));
    }
    t.add(w, negative ? -coeff : coeff);
  }
  return t;
}

/// Parses a single word (no coefficients), e.g. "e1⊗e2" or "1".
inline Word parse_word(const BraidedAlgebra& A, std::string_view text) {
  auto idx = detail::parse_word_indices(text);
  if (!idx) throw parse_error("not a word: '" + std::string(text) + "'");
  Word w;
  for (int i : *idx) {
    if (!A.has_letter(i)) throw parse_error("unknown generator e" + std::to_string(i));
    w.push_back(A.letter(i));
  }
  return w;
}

}  // namespace qqsh
