#pragma once

// Brute-force helpers shared by the test suites. Deliberately naive: they
// work on plain strings and never call the library's enumeration code.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace support {

inline char inv(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

inline int rank(char c) { return std::string("abAB").find(c); }

inline bool less_word(const std::string& l, const std::string& r) {
  return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end(),
                                      [](char x, char y) { return rank(x) < rank(y); });
}

inline bool cyclically_reduced(const std::string& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (w[i + 1] == inv(w[i])) return false;
  return n < 2 || w.front() != inv(w.back());
}

/// Every string over {a,b,A,B} of length n, cyclically reduced or not.
inline std::vector<std::string> all_strings(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : std::string("abAB")) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::string> cyclically_reduced_words(std::size_t n) {
  std::vector<std::string> out;
  for (auto& s : all_strings(n))
    if (cyclically_reduced(s)) out.push_back(s);
  return out;
}

inline std::string rotate(const std::string& w, std::size_t k) { return w.substr(k) + w.substr(0, k); }

inline std::string least_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t k = 1; k < w.size(); ++k)
    if (less_word(rotate(w, k), best)) best = rotate(w, k);
  return best;
}

inline std::string inverse_word(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = inv(c);
  return out;
}

inline std::string reversed(const std::string& w) { return std::string(w.rbegin(), w.rend()); }

inline std::string swap_case(const std::string& w, char lower) {
  std::string out = w;
  for (char& c : out)
    if (c == lower || c == inv(lower)) c = inv(c);
  return out;
}

inline bool primitive(const std::string& w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w.size() % k == 0 && rotate(w, k) == w) return false;
  return true;
}

/// Canonical representatives of the primitive classes of length n.
inline std::vector<std::string> primitive_classes(std::size_t n) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  for (const auto& w : cyclically_reduced_words(n)) {
    const std::string c = least_rotation(w);
    if (primitive(c) && seen.insert(c).second) out.push_back(c);
  }
  return out;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  std::string w;
  for (std::size_t n = len(rng); w.size() < n;) w.push_back("abAB"[letter(rng)]);
  return w;
}

}  // namespace support
