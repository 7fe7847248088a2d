#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvesi/error.hpp"

namespace curvesi {

/// Generators of F2 and their inverses. The enumerator order a < b < A < B is
/// the canonical letter order used for every lexicographic comparison.
enum class Letter : std::uint8_t { a = 0, b = 1, A = 2, B = 3 };

inline constexpr std::array<Letter, 4> kAlphabet = {Letter::a, Letter::b, Letter::A, Letter::B};

constexpr Letter inverse(Letter l) { return static_cast<Letter>((static_cast<unsigned>(l) + 2u) & 3u); }

constexpr bool is_capital(Letter l) { return l == Letter::A || l == Letter::B; }

constexpr char to_char(Letter l) { return "abAB"[static_cast<unsigned>(l)]; }

inline Letter parse_letter(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    default: break;
  }
  throw Error(ErrorCode::InvalidLetter, std::string("character '") + c + "' is not one of a, b, A, B");
}

using Letters = std::vector<Letter>;

inline Letters parse_letters(std::string_view text) {
  Letters out;
  out.reserve(text.size());
  for (char c : text) out.push_back(parse_letter(c));
  return out;
}

inline std::string to_string(std::span<const Letter> letters) {
  std::string s;
  s.reserve(letters.size());
  for (Letter l : letters) s.push_back(to_char(l));
  return s;
}

/// A freely reduced word: no adjacent pair l, inverse(l).
class FreeWord {
 public:
  FreeWord() = default;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::string str() const { return to_string(letters_); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  explicit FreeWord(Letters letters) : letters_(std::move(letters)) {}
  friend FreeWord free_reduce(std::span<const Letter>);

  Letters letters_;
};

inline bool is_cyclically_reduced(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (w[i + 1] == inverse(w[i])) return false;
  return n < 2 || w.front() != inverse(w.back());
}

/// A cyclically reduced word, regarded as a necklace (conjugacy class of F2).
/// The stored rotation is whatever the producer chose; `canonical` fixes one.
class CyclicWord {
 public:
  CyclicWord() = default;

  /// Throws NotCyclicallyReduced if `letters` is not cyclically reduced.
  static CyclicWord from_letters(Letters letters) {
    if (!is_cyclically_reduced(letters))
      throw Error(ErrorCode::NotCyclicallyReduced, to_string(letters));
    return CyclicWord(std::move(letters));
  }

  static CyclicWord parse(std::string_view text) { return from_letters(parse_letters(text)); }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  /// Index taken modulo the length; accepts negative offsets.
  Letter at_cyclic(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(letters_.size());
    return letters_[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  std::string str() const { return to_string(letters_); }

  CyclicWord rotate(std::size_t k) const {
    if (letters_.empty()) return *this;
    Letters out(letters_.size());
    std::rotate_copy(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k % letters_.size()),
                     letters_.end(), out.begin());
    return CyclicWord(std::move(out));
  }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& l, const CyclicWord& r) { return l.letters_ <=> r.letters_; }

 private:
  explicit CyclicWord(Letters letters) : letters_(std::move(letters)) {}

  Letters letters_;
};

inline FreeWord free_reduce(std::span<const Letter> letters) {
  Letters stack;
  stack.reserve(letters.size());
  for (Letter l : letters) {
    if (!stack.empty() && stack.back() == inverse(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return FreeWord(std::move(stack));
}

inline CyclicWord cyclic_reduce(const FreeWord& w) {
  auto s = w.letters();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo] == inverse(s[hi - 1])) {
    ++lo;
    --hi;
  }
  return CyclicWord::from_letters(Letters(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                          s.begin() + static_cast<std::ptrdiff_t>(hi)));
}

/// Free and cyclic reduction of arbitrary text over {a,b,A,B}.
inline CyclicWord cyclic_word_from_text(std::string_view text) {
  return cyclic_reduce(free_reduce(parse_letters(text)));
}

inline CyclicWord invert(const CyclicWord& w) {
  auto s = w.letters();
  Letters out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = inverse(s[s.size() - 1 - i]);
  return CyclicWord::from_letters(std::move(out));
}

/// Start index of the lexicographically least rotation (two-pointer scan, O(n)).
inline std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter x = s[(i + k) % n];
    const Letter y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

/// Smallest rotational period p (p divides n and rotation by p fixes the word).
inline std::size_t rotational_period(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  const std::size_t p = n - pi[n - 1];
  return n % p == 0 ? p : n;
}

inline bool is_primitive(const CyclicWord& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "primitivity is undefined for the identity");
  return rotational_period(w.letters()) == w.size();
}

/// Canonical representative of a conjugacy class (optionally also modulo
/// inversion): the least rotation under a < b < A < B.
struct ClassKey {
  CyclicWord representative;
  bool inversion_quotiented = false;

  std::string str() const { return representative.str(); }
  std::size_t size() const { return representative.size(); }

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend auto operator<=>(const ClassKey& l, const ClassKey& r) {
    if (auto c = l.representative <=> r.representative; c != 0) return c;
    return l.inversion_quotiented <=> r.inversion_quotiented;
  }
};

inline CyclicWord least_rotation_word(const CyclicWord& w) { return w.rotate(least_rotation(w.letters())); }

inline ClassKey canonical(const CyclicWord& w, bool quotient_inversion) {
  CyclicWord best = least_rotation_word(w);
  if (quotient_inversion) {
    CyclicWord inv = least_rotation_word(invert(w));
    if (inv < best) best = std::move(inv);
  }
  return ClassKey{std::move(best), quotient_inversion};
}

/// Number of distinct cyclic words the class of `key` stands for.
inline std::size_t orbit_size(const ClassKey& key) {
  if (key.representative.empty()) return 1;
  const std::size_t p = rotational_period(key.representative.letters());
  return key.inversion_quotiented ? 2 * p : p;
}

/// Number of cyclically reduced words of length L: trace of the L-th power of
/// the 4x4 transfer matrix (eigenvalues 3, -1, 1, 1).
constexpr std::uint64_t cyclically_reduced_word_count(unsigned L) {
  std::uint64_t p3 = 1;
  for (unsigned i = 0; i < L; ++i) p3 *= 3;
  if (L == 0) return 1;
  return L % 2 == 0 ? p3 + 3 : p3 + 1;
}

namespace detail {

// Fredricksen-Kessler-Maiorana necklace generation restricted to reduced
// words. Every prefix of a reduced necklace is a reduced prenecklace, so
// pruning branches that create an adjacent inverse pair loses nothing.
class NecklaceGenerator {
 public:
  NecklaceGenerator(std::size_t length, bool quotient_inversion, const std::function<void(const ClassKey&)>& emit)
      : n_(length), q_(quotient_inversion), emit_(emit), a_(length + 1, Letter::a) {}

  void run_from(std::span<const Letter> prefix) {
    if (prefix.size() > n_) return;
    std::size_t p = 1;
    for (std::size_t t = 1; t <= prefix.size(); ++t) {
      const Letter c = prefix[t - 1];
      if (t > 1 && c == inverse(a_[t - 1])) return;
      if (c < a_[t - p]) return;
      if (c != a_[t - p]) p = t;
      a_[t] = c;
    }
    generate(prefix.size() + 1, p);
  }

 private:
  void generate(std::size_t t, std::size_t p) {
    if (t > n_) {
      if (n_ % p != 0) return;
      if (n_ >= 2 && a_[n_] == inverse(a_[1])) return;
      Letters w(a_.begin() + 1, a_.end());
      CyclicWord cw = CyclicWord::from_letters(std::move(w));
      if (q_) {
        CyclicWord inv = least_rotation_word(invert(cw));
        if (inv < cw) return;
      }
      emit_(ClassKey{std::move(cw), q_});
      return;
    }
    const Letter lo = a_[t - p];
    for (unsigned c = static_cast<unsigned>(lo); c < 4; ++c) {
      const Letter l = static_cast<Letter>(c);
      if (t > 1 && l == inverse(a_[t - 1])) continue;
      a_[t] = l;
      generate(t + 1, l == lo ? p : t);
    }
  }

  std::size_t n_;
  bool q_;
  const std::function<void(const ClassKey&)>& emit_;
  Letters a_;  // 1-based; a_[0] = a is the FKM sentinel
};

}  // namespace detail

/// Emits every conjugacy class of cyclically reduced words of length exactly
/// L (L >= 1) once, in lexicographic order of canonical representatives.
/// Restricting to classes whose representative starts with `prefix` splits
/// the enumeration into disjoint lexicographic ranges.
inline void enumerate_classes(std::size_t L, bool quotient_inversion, const std::function<void(const ClassKey&)>& emit,
                              std::span<const Letter> prefix = {}) {
  if (L == 0) return;
  detail::NecklaceGenerator gen(L, quotient_inversion, emit);
  gen.run_from(prefix);
}

inline std::vector<ClassKey> list_classes(std::size_t L, bool quotient_inversion) {
  std::vector<ClassKey> out;
  enumerate_classes(L, quotient_inversion, [&](const ClassKey& k) { out.push_back(k); });
  return out;
}

/// All reduced words of length `depth` in lexicographic order; used as
/// chunk prefixes for splitting an enumeration into independent ranges.
inline std::vector<Letters> reduced_prefixes(std::size_t depth) {
  std::vector<Letters> out{Letters{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Letters> next;
    for (const auto& p : out)
      for (Letter l : kAlphabet) {
        if (!p.empty() && l == inverse(p.back())) continue;
        Letters q = p;
        q.push_back(l);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace curvesi
