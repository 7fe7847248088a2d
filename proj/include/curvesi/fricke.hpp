#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "curvesi/polynomial.hpp"
#include "curvesi/words.hpp"

namespace curvesi {

/// Fricke trace polynomials by term rewriting with the SL(2) trace identities
///
///   tr(U V) + tr(U V^-1) = tr(U) tr(V),   tr(V U V^-1) = tr(U),   tr(I) = 2.
///
/// Rules, applied to the canonical rotation of a cyclically reduced word:
///   bases   "" -> 2, a -> x, b -> y
///   inverse tr(u A) = x tr(u) - tr(u a)       (likewise B with y)
///   square  tr(u a a) = x tr(u a) - tr(u)     (likewise bb with y)
///   (ab)^k  tr = z tr((ab)^(k-1)) - tr((ab)^(k-2))
/// The inverse rule is applied to whichever of w, w^-1 has fewer capitals, so
/// (min capital count, length) strictly decreases along every branch.
///
/// The memo table is per engine; use one engine per thread.
class FrickeEngine {
 public:
  explicit FrickeEngine(bool memoize = true, std::size_t memo_limit = std::size_t{1} << 18)
      : memoize_(memoize), memo_limit_(memo_limit) {}

  /// Trace polynomial of any letter sequence (reduced internally).
  TracePolynomial trace(std::span<const Letter> word) { return trace(cyclic_reduce(free_reduce(word))); }

  TracePolynomial trace(const CyclicWord& w) {
    if (w.empty()) return TracePolynomial::constant(2);
    if (w.size() == 1) return is_x(w[0]) ? TracePolynomial::x() : TracePolynomial::y();

    const CyclicWord fwd = least_rotation_word(w);
    const CyclicWord bwd = least_rotation_word(invert(w));
    const std::string key = (bwd < fwd ? bwd : fwd).str();
    if (memoize_) {
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    const std::size_t caps_fwd = capital_count(fwd), caps_bwd = capital_count(bwd);
    const CyclicWord& r = (caps_bwd < caps_fwd || (caps_bwd == caps_fwd && bwd < fwd)) ? bwd : fwd;
    TracePolynomial result = rewrite(r);

    if (memoize_) {
      if (memo_.size() >= memo_limit_) memo_.clear();
      memo_.emplace(key, result);
    }
    return result;
  }

  std::size_t memo_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  static bool is_x(Letter l) { return l == Letter::a || l == Letter::A; }

  static std::size_t capital_count(const CyclicWord& w) {
    std::size_t c = 0;
    for (Letter l : w.letters()) c += is_capital(l);
    return c;
  }

  // Cyclic subword of r of length len starting at offset.
  static Letters cyclic_slice(const CyclicWord& r, std::size_t offset, std::size_t len) {
    Letters out(len);
    for (std::size_t k = 0; k < len; ++k) out[k] = r[(offset + k) % r.size()];
    return out;
  }

  TracePolynomial rewrite(const CyclicWord& r) {
    const std::size_t n = r.size();

    for (Letter cap : {Letter::A, Letter::B}) {
      for (std::size_t i = 0; i < n; ++i) {
        if (r[i] != cap) continue;
        // r rotated to u . cap
        Letters u = cyclic_slice(r, i + 1, n - 1);
        Letters ul = u;
        ul.push_back(inverse(cap));
        TracePolynomial t = trace(std::span<const Letter>(u));
        t.shift(cap == Letter::A ? Monomial{1, 0, 0} : Monomial{0, 1, 0});
        return t - trace(std::span<const Letter>(ul));
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (r[i] != r[(i + 1) % n]) continue;
      // r rotated to u . l . l
      const Letter l = r[i];
      Letters u = cyclic_slice(r, i + 2, n - 2);
      Letters ul = u;
      ul.push_back(l);
      TracePolynomial t = trace(std::span<const Letter>(ul));
      t.shift(l == Letter::a ? Monomial{1, 0, 0} : Monomial{0, 1, 0});
      return t - trace(std::span<const Letter>(u));
    }

    // positive with no repeated letter: (ab)^k
    TracePolynomial prev = TracePolynomial::constant(2), cur = TracePolynomial::z();
    for (std::size_t k = 1; k < n / 2; ++k) {
      TracePolynomial next = cur;
      next.shift({0, 0, 1});
      next = next - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

  bool memoize_;
  std::size_t memo_limit_;
  std::unordered_map<std::string, TracePolynomial> memo_;
};

inline TracePolynomial trace_polynomial(std::span<const Letter> word) {
  thread_local FrickeEngine engine;
  return engine.trace(word);
}

inline TracePolynomial trace_polynomial(std::string_view word) { return trace_polynomial(parse_letters(word)); }

/// Second, independent route: multiply out the word in the trace algebra.
/// Generic SL(2) pairs satisfy A^2 = xA - I, B^2 = yB - I and
/// AB + BA = yA + xB + (z - xy)I, so every product is P + QA + RB + S AB with
/// P, Q, R, S in Z[x, y, z], and tr(P + QA + RB + S AB) = 2P + xQ + yR + zS.
inline TracePolynomial trace_polynomial_by_algebra(std::span<const Letter> word) {
  using P = TracePolynomial;
  const P one = P::constant(1);
  auto times = [](P p, Monomial m) { return p.shift(m); };
  const Monomial X{1, 0, 0}, Y{0, 1, 0}, Z{0, 0, 1};

  std::array<P, 4> m{one, P{}, P{}, P{}};  // coefficients of I, A, B, AB
  auto right_a = [&](const std::array<P, 4>& e) {
    const auto& [p, q, r, s] = e;
    // BA = yA + xB + (z - xy)I - AB,  ABA = zA - yI + B
    return std::array<P, 4>{r * (P::z() - P::monomial({1, 1, 0})) - q - times(s, Y),
                            p + times(q, X) + times(r, Y) + times(s, Z), times(r, X) + s, -r};
  };
  auto right_b = [&](const std::array<P, 4>& e) {
    const auto& [p, q, r, s] = e;
    // B^2 = yB - I,  AB^2 = yAB - A
    return std::array<P, 4>{-r, -s, p + times(r, Y), q + times(s, Y)};
  };

  for (Letter l : word) {
    std::array<P, 4> next;
    switch (l) {
      case Letter::a: next = right_a(m); break;
      case Letter::b: next = right_b(m); break;
      case Letter::A: {  // A^-1 = xI - A
        auto t = right_a(m);
        for (std::size_t k = 0; k < 4; ++k) next[k] = times(m[k], X) - t[k];
        break;
      }
      case Letter::B: {  // B^-1 = yI - B
        auto t = right_b(m);
        for (std::size_t k = 0; k < 4; ++k) next[k] = times(m[k], Y) - t[k];
        break;
      }
    }
    m = std::move(next);
  }
  return m[0] + m[0] + times(m[1], X) + times(m[2], Y) + times(m[3], Z);
}

enum class TraceRelation { different, equal, negated };

/// Trace-squared equality as polynomials: P1 == P2 or P1 == -P2.
inline TraceRelation trace_relation(const TracePolynomial& p1, const TracePolynomial& p2) {
  if (p1 == p2) return TraceRelation::equal;
  if (p1 == -p2) return TraceRelation::negated;
  return TraceRelation::different;
}

inline bool trace_equivalent(std::span<const Letter> w1, std::span<const Letter> w2) {
  return trace_relation(trace_polynomial(w1), trace_polynomial(w2)) != TraceRelation::different;
}

inline bool trace_equivalent(std::string_view w1, std::string_view w2) {
  return trace_equivalent(parse_letters(w1), parse_letters(w2));
}

}  // namespace curvesi
