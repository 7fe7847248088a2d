#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "curvesi/error.hpp"

namespace curvesi {

using BigInt = boost::multiprecision::cpp_int;

/// x^ex y^ey z^ez with x = tr(a), y = tr(b), z = tr(ab).
struct Monomial {
  std::uint32_t ex = 0, ey = 0, ez = 0;

  std::uint32_t degree() const { return ex + ey + ez; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Lexicographic order on exponents with x > y > z, higher powers first:
/// `a` precedes `b` in canonical printing order iff term_before(a, b).
inline bool term_before(const Monomial& a, const Monomial& b) {
  if (a.ex != b.ex) return a.ex > b.ex;
  if (a.ey != b.ey) return a.ey > b.ey;
  return a.ez > b.ez;
}

/// Sparse integer polynomial in x, y, z. Terms are kept sorted in canonical
/// order with no zero coefficients, so equality is structural.
class TracePolynomial {
 public:
  using Term = std::pair<Monomial, BigInt>;

  TracePolynomial() = default;

  static TracePolynomial constant(BigInt c) {
    TracePolynomial p;
    if (c != 0) p.terms_.emplace_back(Monomial{}, std::move(c));
    return p;
  }
  static TracePolynomial x() { return monomial({1, 0, 0}); }
  static TracePolynomial y() { return monomial({0, 1, 0}); }
  static TracePolynomial z() { return monomial({0, 0, 1}); }
  static TracePolynomial monomial(Monomial m, BigInt c = 1) {
    TracePolynomial p;
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
  }

  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static TracePolynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return term_before(l.first, r.first); });
    TracePolynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(const Monomial& m) const {
    for (const auto& [mono, c] : terms_)
      if (mono == m) return c;
    return 0;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  /// Multiplies by x^ex y^ey z^ez in place; monomial orders are multiplicative
  /// so the term order is preserved.
  TracePolynomial& shift(const Monomial& m) {
    for (auto& t : terms_) {
      t.first.ex += m.ex;
      t.first.ey += m.ey;
      t.first.ez += m.ez;
    }
    return *this;
  }

  TracePolynomial operator-() const {
    TracePolynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  friend TracePolynomial operator+(const TracePolynomial& l, const TracePolynomial& r) { return merge(l, r, 1); }
  friend TracePolynomial operator-(const TracePolynomial& l, const TracePolynomial& r) { return merge(l, r, -1); }

  friend TracePolynomial operator*(const TracePolynomial& l, const TracePolynomial& r) {
    std::vector<Term> out;
    out.reserve(l.terms_.size() * r.terms_.size());
    for (const auto& [ml, cl] : l.terms_)
      for (const auto& [mr, cr] : r.terms_)
        out.emplace_back(Monomial{ml.ex + mr.ex, ml.ey + mr.ey, ml.ez + mr.ez}, cl * cr);
    return from_terms(std::move(out));
  }

  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

  /// Exact evaluation; T is BigInt, an integer type, or a floating type.
  template <class T>
  T evaluate(const T& x0, const T& y0, const T& z0) const {
    T total = T(0);
    for (const auto& [m, c] : terms_) {
      T v = coefficient_as<T>(c);
      for (std::uint32_t i = 0; i < m.ex; ++i) v *= x0;
      for (std::uint32_t i = 0; i < m.ey; ++i) v *= y0;
      for (std::uint32_t i = 0; i < m.ez; ++i) v *= z0;
      total += v;
    }
    return total;
  }

  /// Canonical text: "c*x^i*y^j*z^k" terms joined by " + " / " - ",
  /// unit exponents and coefficients omitted.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      const BigInt mag = negative ? BigInt(-c) : c;
      std::string body;
      if (mag != 1 || m.degree() == 0) body = mag.str();
      auto factor = [&](char var, std::uint32_t e) {
        if (e == 0) return;
        if (!body.empty()) body += '*';
        body += var;
        if (e > 1) body += '^' + std::to_string(e);
      };
      factor('x', m.ex);
      factor('y', m.ey);
      factor('z', m.ez);
      out += body;
    }
    return out;
  }

  /// Parses the canonical grammar in any term order. Accepts ASCII '-' and
  /// U+2212 as minus; whitespace between tokens is ignored.
  static TracePolynomial parse(std::string_view text);

 private:
  template <class T>
  static T coefficient_as(const BigInt& c) {
    if constexpr (std::is_same_v<T, BigInt>)
      return c;
    else if constexpr (std::is_floating_point_v<T>)
      return c.convert_to<T>();
    else
      return static_cast<T>(c);
  }

  static TracePolynomial merge(const TracePolynomial& l, const TracePolynomial& r, int sign) {
    TracePolynomial out;
    out.terms_.reserve(l.terms_.size() + r.terms_.size());
    auto i = l.terms_.begin(), j = r.terms_.begin();
    while (i != l.terms_.end() || j != r.terms_.end()) {
      if (j == r.terms_.end() || (i != l.terms_.end() && term_before(i->first, j->first))) {
        out.terms_.push_back(*i++);
      } else if (i == l.terms_.end() || term_before(j->first, i->first)) {
        out.terms_.emplace_back(j->first, sign > 0 ? j->second : BigInt(-j->second));
        ++j;
      } else {
        BigInt c = sign > 0 ? BigInt(i->second + j->second) : BigInt(i->second - j->second);
        if (c != 0) out.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

inline TracePolynomial TracePolynomial::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN in UTF-8
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(text[i]))) s.push_back(text[i]);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial text");
  if (s == "0") return {};

  std::vector<Term> terms;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos) + " in '" + s + "'");
  };
  auto read_uint = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string_view(s).substr(start, pos - start);
  };

  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    if (pos >= s.size()) fail("dangling sign");

    BigInt coeff = 1;
    Monomial m;
    bool have_factor = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (have_factor) {
        if (s[pos] != '*') fail("expected '*'");
        ++pos;
      }
      const char c = pos < s.size() ? s[pos] : '\0';
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (have_factor) fail("coefficient must lead the term");
        coeff = BigInt(std::string(read_uint()));
      } else if (c == 'x' || c == 'y' || c == 'z') {
        ++pos;
        std::uint32_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = static_cast<std::uint32_t>(std::stoul(std::string(read_uint())));
        }
        (c == 'x' ? m.ex : c == 'y' ? m.ey : m.ez) += e;
      } else {
        fail("unexpected character");
      }
      have_factor = true;
    }
    if (!have_factor) fail("empty term");
    terms.emplace_back(m, sign * coeff);
  }
  return from_terms(std::move(terms));
}

}  // namespace curvesi
