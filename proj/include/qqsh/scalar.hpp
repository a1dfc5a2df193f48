#pragma once

// Exact coefficients: rationals and Laurent polynomials in a single formal
// parameter q, plus q-integer / q-factorial / q-multinomial combinatorics.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "qqsh/error.hpp"

namespace qqsh {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Shared constants; constructing a Rational from an int normalizes, which
/// is costly on hot paths.
inline const Rational& rational_one() {
  static const Rational one(1);
  return one;
}

inline bool is_one(const Rational& r) { return r == rational_one(); }

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

/// Laurent polynomial in q with rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so structural
/// equality is mathematical equality.
class Scalar {
 public:
  struct Term {
    int exp;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };
  using Terms = boost::container::small_vector<Term, 2>;

  Scalar() = default;
  Scalar(int c) {  // NOLINT: implicit by design of a ring element
    if (c == 1)
      terms_.push_back({0, rational_one()});
    else if (c != 0)
      terms_.push_back({0, Rational(c)});
  }
  Scalar(const Rational& c) {  // NOLINT
    if (!c.is_zero()) terms_.push_back({0, c});
  }

  static Scalar monomial(const Rational& c, int exp) {
    Scalar s;
    if (!c.is_zero()) s.terms_.push_back({exp, c});
    return s;
  }
  static Scalar q(int exp = 1) { return monomial(rational_one(), exp); }

  /// Builds from arbitrary (exp, coeff) pairs; duplicates are summed.
  static Scalar from_terms(std::vector<std::pair<int, Rational>> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Scalar s;
    for (auto& [e, c] : raw) {
      if (!s.terms_.empty() && s.terms_.back().exp == e)
        s.terms_.back().coeff += c;
      else
        s.terms_.push_back({e, std::move(c)});
      if (s.terms_.back().coeff.is_zero()) s.terms_.pop_back();
    }
    return s;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].exp == 0 && qqsh::is_one(terms_[0].coeff);
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
  }
  int min_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.back().exp; }

  /// Coefficient of q^exp.
  Rational coeff(int exp) const {
    for (const auto& t : terms_)
      if (t.exp == exp) return t.coeff;
    return 0;
  }

  /// Substitution q := 1.
  Rational eval_at_one() const {
    Rational sum = 0;
    for (const auto& t : terms_) sum += t.coeff;
    return sum;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    Terms out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->exp < a->exp) {
        out.push_back(*b++);
      } else {
        Rational c = a->coeff + b->coeff;
        if (!c.is_zero()) out.push_back({a->exp, std::move(c)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) return a.times_monomial(b.terms_[0]);
    if (a.is_monomial()) return b.times_monomial(a.terms_[0]);
    std::vector<std::pair<int, Rational>> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) raw.emplace_back(x.exp + y.exp, x.coeff * y.coeff);
    return from_terms(std::move(raw));
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Multiplies by q^shift.
  Scalar shifted(int shift) const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.exp += shift;
    return r;
  }

  Scalar pow(unsigned n) const {
    Scalar result = 1;
    Scalar base = *this;
    while (n != 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return result;
  }

  /// Exact division by an invertible element (a nonzero monomial).
  Scalar divided_by_monomial(const Scalar& d) const {
    if (!d.is_monomial()) throw domain_error("non-invertible scalar: " + d.to_string());
    Scalar r;
    const auto& m = d.terms_[0];
    for (const auto& t : terms_) r.terms_.push_back({t.exp - m.exp, t.coeff / m.coeff});
    return r;
  }

  /// Inverse of a nonzero monomial.
  Scalar inverse() const { return Scalar(1).divided_by_monomial(*this); }

  /// Canonical text: ascending exponents, e.g. `1 + 2*q + q^2`, `q^-1`,
  /// `1 - q^2`, `-1/2*q`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = t.coeff.sign() < 0;
      Rational mag = negative ? Rational(-t.coeff) : t.coeff;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string qpart;
      if (t.exp == 1)
        qpart = "q";
      else if (t.exp != 0)
        qpart = "q^" + std::to_string(t.exp);
      if (qpart.empty()) {
        out += qqsh::to_string(mag);
      } else if (qqsh::is_one(mag)) {
        out += qpart;
      } else {
        out += qqsh::to_string(mag) + "*" + qpart;
      }
    }
    return out;
  }

  /// Parses the canonical text form (and minor variations: arbitrary term
  /// order, repeated exponents, optional spaces, an enclosing pair of
  /// parentheses).
  static Scalar parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  Scalar times_monomial(const Term& m) const {
    Scalar r = *this;
    bool unit = qqsh::is_one(m.coeff);
    for (auto& t : r.terms_) {
      t.exp += m.exp;
      if (!unit) t.coeff *= m.coeff;
    }
    return r;
  }

  Terms terms_;
};

namespace detail {

inline void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline BigInt parse_unsigned(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw parse_error("expected digits in '" + std::string(s) + "'");
  return BigInt(std::string(s.substr(start, pos - start)));
}

inline int parse_signed_int(std::string_view s, std::size_t& pos) {
  skip_spaces(s, pos);
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  skip_spaces(s, pos);
  BigInt v = parse_unsigned(s, pos);
  if (v > 1000000) throw parse_error("exponent out of range in '" + std::string(s) + "'");
  int e = v.convert_to<int>();
  return neg ? -e : e;
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  std::string_view s = text;
  std::size_t pos = 0;
  detail::skip_spaces(s, pos);
  std::size_t end = s.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  if (end > pos + 1 && s[pos] == '(' && s[end - 1] == ')') {
    s = s.substr(pos + 1, end - pos - 2);
    pos = 0;
  } else {
    s = s.substr(0, end);
  }

  std::vector<std::pair<int, Rational>> raw;
  bool expect_term = true;
  bool negative = false;
  while (true) {
    detail::skip_spaces(s, pos);
    if (pos >= s.size()) break;
    char c = s[pos];
    if (c == '+' || c == '-') {
      negative = (c == '-') != negative;
      expect_term = true;
      ++pos;
      continue;
    }
    if (!expect_term) throw parse_error("expected '+' or '-' in scalar '" + std::string(text) + "'");
    Rational coeff = 1;
    int exp = 0;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = detail::parse_unsigned(s, pos);
      BigInt den = 1;
      detail::skip_spaces(s, pos);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        detail::skip_spaces(s, pos);
        den = detail::parse_unsigned(s, pos);
        if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
      }
      coeff = Rational(num, den);
      have_number = true;
      detail::skip_spaces(s, pos);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        detail::skip_spaces(s, pos);
        if (pos >= s.size() || s[pos] != 'q')
          throw parse_error("expected 'q' after '*' in '" + std::string(text) + "'");
      }
    }
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exp = 1;
      detail::skip_spaces(s, pos);
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exp = detail::parse_signed_int(s, pos);
      }
    } else if (!have_number) {
      throw parse_error("unexpected character '" + std::string(1, c) + "' in scalar '" +
                        std::string(text) + "'");
    }
    raw.emplace_back(exp, negative ? Rational(-coeff) : coeff);
    negative = false;
    expect_term = false;
  }
  if (expect_term) {
    if (raw.empty()) throw parse_error("empty scalar");
    throw parse_error("dangling sign in scalar '" + std::string(text) + "'");
  }
  return from_terms(std::move(raw));
}

// ---------------------------------------------------------------------------
// Polynomial division and q-combinatorics

/// Quotient and remainder of Laurent polynomials after normalizing both to
/// ordinary polynomials with nonzero constant term.
struct DivisionResult {
  Scalar quotient;
  Scalar remainder;
};

/// Long division of `a` by `b` as polynomials in q (both must have
/// nonnegative exponents); `b` must be nonzero.
inline DivisionResult poly_divmod(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw domain_error("division by zero polynomial");
  if (a.min_exp() < 0 || b.min_exp() < 0) throw domain_error("poly_divmod expects polynomials");
  // dense working copy, index = exponent
  std::vector<Rational> rem(static_cast<std::size_t>(a.is_zero() ? 1 : a.max_exp() + 1), 0);
  for (const auto& t : a.terms()) rem[static_cast<std::size_t>(t.exp)] = t.coeff;
  int db = b.max_exp();
  const Rational lead = b.terms().back().coeff;
  std::vector<std::pair<int, Rational>> quot;
  for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
    const Rational c = rem[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational f = c / lead;
    quot.emplace_back(d - db, f);
    for (const auto& t : b.terms()) rem[static_cast<std::size_t>(d - db + t.exp)] -= f * t.coeff;
  }
  std::vector<std::pair<int, Rational>> r;
  for (std::size_t e = 0; e < rem.size(); ++e)
    if (rem[e] != 0) r.emplace_back(static_cast<int>(e), rem[e]);
  return {Scalar::from_terms(std::move(quot)), Scalar::from_terms(std::move(r))};
}

/// Exact quotient a / b in the Laurent ring; throws when b does not divide a.
inline Scalar divide_exact(const Scalar& a, const Scalar& b, const char* what = "inexact division") {
  if (b.is_zero()) throw domain_error("non-invertible scalar: 0");
  if (a.is_zero()) return {};
  int sa = a.min_exp();
  int sb = b.min_exp();
  DivisionResult d = poly_divmod(a.shifted(-sa), b.shifted(-sb));
  if (!d.remainder.is_zero()) throw domain_error(what);
  return d.quotient.shifted(sa - sb);
}

/// (n)_base = 1 + base + ... + base^{n-1}; (0)_base = 1.
inline Scalar q_integer(unsigned n, const Scalar& base) {
  if (n == 0) return 1;
  Scalar sum;
  Scalar power = 1;
  for (unsigned k = 0; k < n; ++k) {
    sum += power;
    power *= base;
  }
  return sum;
}

/// (n)_base! = (1)_base (2)_base ... (n)_base.
inline Scalar q_factorial(unsigned n, const Scalar& base) {
  Scalar r = 1;
  for (unsigned k = 1; k <= n; ++k) r *= q_integer(k, base);
  return r;
}

/// (k)_base! / prod (l_t)_base!, by exact division; a nonzero remainder is a
/// self-check failure.
inline Scalar q_multinomial(unsigned k, const std::vector<unsigned>& parts, const Scalar& base) {
  unsigned sum = 0;
  for (unsigned p : parts) sum += p;
  if (sum != k) throw domain_error("q_multinomial: parts do not sum to k");
  Scalar denom = 1;
  for (unsigned p : parts) denom *= q_factorial(p, base);
  return divide_exact(q_factorial(k, base), denom, "non-polynomial q-multinomial");
}

}  // namespace qqsh
