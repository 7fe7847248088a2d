#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curvesi/error.hpp"
#include "curvesi/lce.hpp"
#include "curvesi/words.hpp"

namespace curvesi {

/// Cyclic order of the four edge germs around the single vertex of the
/// ribbon graph dual to the octagon gluing. It determines the surface.
class RibbonOrder {
 public:
  constexpr RibbonOrder(Letter first, Letter second, Letter third, Letter fourth)
      : cycle_{first, second, third, fourth}, pos_{} {
    std::array<bool, 4> seen{};
    for (std::uint8_t i = 0; i < 4; ++i) {
      const auto idx = static_cast<unsigned>(cycle_[i]);
      if (seen[idx]) throw Error(ErrorCode::InvalidRibbonOrder, "each letter must appear exactly once");
      seen[idx] = true;
      pos_[idx] = i;
    }
  }

  constexpr const std::array<Letter, 4>& cycle() const { return cycle_; }

  /// +1 iff, walking the cycle forward from `from`, `p` is met before `q`.
  /// Requires three distinct letters.
  constexpr int sign(Letter from, Letter p, Letter q) const {
    const unsigned o = pos_[static_cast<unsigned>(from)];
    const unsigned dp = (pos_[static_cast<unsigned>(p)] + 4 - o) & 3u;
    const unsigned dq = (pos_[static_cast<unsigned>(q)] + 4 - o) & 3u;
    return dp < dq ? 1 : -1;
  }

  constexpr RibbonOrder reversed() const { return RibbonOrder(cycle_[3], cycle_[2], cycle_[1], cycle_[0]); }

  std::string str() const { return to_string(cycle_); }

  friend constexpr bool operator==(const RibbonOrder&, const RibbonOrder&) = default;

 private:
  std::array<Letter, 4> cycle_;
  std::array<std::uint8_t, 4> pos_;
};

inline constexpr RibbonOrder kTorus{Letter::a, Letter::b, Letter::A, Letter::B};
inline constexpr RibbonOrder kPants{Letter::a, Letter::A, Letter::b, Letter::B};

enum class Surface { torus, pants };

inline constexpr std::array<Surface, 2> kSurfaces = {Surface::torus, Surface::pants};

constexpr const RibbonOrder& ribbon_order(Surface s) { return s == Surface::torus ? kTorus : kPants; }

constexpr std::string_view surface_name(Surface s) { return s == Surface::torus ? "torus" : "pants"; }

inline Surface parse_surface(std::string_view name) {
  if (name == "torus") return Surface::torus;
  if (name == "pants") return Surface::pants;
  throw Error(ErrorCode::ParseError, "unknown surface '" + std::string(name) + "' (expected torus or pants)");
}

/// Purely periodic reduced ray period^infinity: a boundary point of the
/// universal-cover tree.
class Ray {
 public:
  explicit Ray(Letters period) : period_(std::move(period)) {
    if (period_.empty()) throw Error(ErrorCode::EmptyWord, "ray period must be nonempty");
    if (!is_cyclically_reduced(period_))
      throw Error(ErrorCode::NotCyclicallyReduced, "ray period " + to_string(period_));
  }

  Letter letter_at(std::size_t k) const { return period_[k % period_.size()]; }
  std::span<const Letter> period() const { return period_; }
  std::size_t period_length() const { return period_.size(); }

  friend bool operator==(const Ray&, const Ray&) = default;

 private:
  Letters period_;
};

/// Ray w_i w_{i+1} ... (indices mod n).
inline Ray forward_ray(const CyclicWord& w, std::size_t i) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "forward ray of the identity");
  const std::size_t n = w.size();
  Letters p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = w[(i + k) % n];
  return Ray(std::move(p));
}

/// Ray inverse(w_{i-1}) inverse(w_{i-2}) ... (indices mod n).
inline Ray backward_ray(const CyclicWord& w, std::size_t i) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "backward ray of the identity");
  const std::size_t n = w.size();
  Letters p(n);
  for (std::size_t k = 0; k < n; ++k)
    p[k] = inverse(w.at_cyclic(static_cast<std::ptrdiff_t>(i) - 1 - static_cast<std::ptrdiff_t>(k)));
  return Ray(std::move(p));
}

namespace detail {

// Cyclic boundary order of three rays given a comparator that answers
// letter(h, k) and common_prefix(h1, h2). The three pairwise common prefixes
// form an ultrametric triple: the two smallest agree, and if the largest
// exceeds them, that pair continues together past the split.
template <class Rays, class Handle>
int orient_by(const RibbonOrder& o, const Rays& rays, Handle r1, Handle r2, Handle r3) {
  const std::size_t l12 = rays.common_prefix(r1, r2);
  const std::size_t l13 = rays.common_prefix(r1, r3);
  const std::size_t l23 = rays.common_prefix(r2, r3);
  const std::size_t k = std::min({l12, l13, l23});

  if (l12 == k && l13 == k && l23 == k)
    return o.sign(rays.letter(r1, k), rays.letter(r2, k), rays.letter(r3, k));

  int parity = 1;
  Handle u = r1, v = r2;
  std::size_t m = l12;
  if (l13 > k) {
    u = r1, v = r3, m = l13, parity = -1;
  } else if (l23 > k) {
    u = r2, v = r3, m = l23, parity = 1;
  }
  const Letter back = inverse(rays.letter(u, m - 1));
  return parity * o.sign(rays.letter(u, m), rays.letter(v, m), back);
}

class NaiveRays {
 public:
  Letter letter(const Ray* r, std::size_t k) const { return r->letter_at(k); }

  // Two periodic rays with periods p, q agreeing on p + q letters are equal.
  std::size_t common_prefix(const Ray* r, const Ray* s) const {
    const std::size_t equal_after = r->period_length() + s->period_length();
    const std::size_t bound = 2 * std::max(r->period_length(), s->period_length()) + 4;
    for (std::size_t k = 0;; ++k) {
      if (k >= equal_after) throw Error(ErrorCode::IndistinctRays, "orient needs pairwise distinct rays");
      if (k > bound) throw Error(ErrorCode::DivergenceBound, "rays failed to diverge within the safety cutoff");
      if (r->letter_at(k) != s->letter_at(k)) return k;
    }
  }
};

}  // namespace detail

/// +1 iff walking the boundary circle positively from r1 one meets r2 before r3.
inline int orient(const RibbonOrder& o, const Ray& r1, const Ray& r2, const Ray& r3) {
  return detail::orient_by(o, detail::NaiveRays{}, &r1, &r2, &r3);
}

/// The 2n rays of a primitive cyclic word: handle i < n is omega_i (forward
/// from position i), handle n + i is alpha_i (backward from position i).
/// `Comparator` selects direct letter walking or the suffix-array
/// accelerator. Both produce identical answers.
enum class Comparator { naive, suffix_array };

class StrandSystem {
 public:
  explicit StrandSystem(const CyclicWord& w, Comparator cmp = Comparator::naive) : word_(w), cmp_(cmp) {
    if (w.empty()) throw Error(ErrorCode::EmptyWord, "strand system of the identity");
    if (!is_primitive(w)) throw Error(ErrorCode::NonPrimitive, w.str());
    if (cmp_ == Comparator::suffix_array) build_index();
  }

  std::size_t size() const { return word_.size(); }
  const CyclicWord& word() const { return word_; }

  std::size_t omega(std::size_t i) const { return i; }
  std::size_t alpha(std::size_t i) const { return word_.size() + i; }

  Letter letter(std::size_t h, std::size_t k) const {
    const std::size_t n = word_.size();
    if (h < n) return word_[(h + k) % n];
    const std::size_t i = h - n;
    return inverse(word_.at_cyclic(static_cast<std::ptrdiff_t>(i) - 1 - static_cast<std::ptrdiff_t>(k % n)));
  }

  Ray ray(std::size_t h) const {
    const std::size_t n = word_.size();
    return h < n ? forward_ray(word_, h) : backward_ray(word_, h - n);
  }

  // All strands have period n, so distinct strands differ within n letters.
  std::size_t common_prefix(std::size_t h1, std::size_t h2) const {
    const std::size_t n = word_.size();
    std::size_t k = 0;
    if (cmp_ == Comparator::suffix_array) {
      k = std::min(index_.lce(text_start(h1), text_start(h2)), n);
    } else {
      const std::size_t bound = 2 * n + 4;
      while (k < n && letter(h1, k) == letter(h2, k)) {
        ++k;
        if (k > bound) throw Error(ErrorCode::DivergenceBound, "strands failed to diverge");
      }
    }
    if (k >= n) throw Error(ErrorCode::IndistinctRays, "strands coincide in " + word_.str());
    return k;
  }

  int orient(const RibbonOrder& o, std::size_t h1, std::size_t h2, std::size_t h3) const {
    return detail::orient_by(o, *this, h1, h2, h3);
  }

  /// Chords {alpha_i, omega_i} and {alpha_j, omega_j} separate each other.
  bool linked(const RibbonOrder& o, std::size_t i, std::size_t j) const {
    return orient(o, alpha(i), alpha(j), omega(i)) != orient(o, alpha(i), omega(j), omega(i));
  }

  /// Number of germs the two strands share at the basepoint (0, 1 or 2).
  std::size_t shared_germs(std::size_t i, std::size_t j) const {
    const Letter gi[2] = {letter(omega(i), 0), letter(alpha(i), 0)};
    const Letter gj[2] = {letter(omega(j), 0), letter(alpha(j), 0)};
    std::size_t s = 0;
    for (Letter x : gi)
      for (Letter y : gj) s += (x == y);
    return s;
  }

 private:
  // Text: w w # v v, where v is the inverse word so that alpha_i starts at
  // offset (n - i) mod n of the second block.
  std::size_t text_start(std::size_t h) const {
    const std::size_t n = word_.size();
    if (h < n) return h;
    const std::size_t i = h - n;
    return 2 * n + 1 + (n - i) % n;
  }

  void build_index() {
    const std::size_t n = word_.size();
    std::vector<std::uint32_t> text;
    text.reserve(4 * n + 1);
    for (int rep = 0; rep < 2; ++rep)
      for (std::size_t k = 0; k < n; ++k) text.push_back(static_cast<std::uint32_t>(word_[k]) + 1);
    text.push_back(0);
    for (int rep = 0; rep < 2; ++rep)
      for (std::size_t k = 0; k < n; ++k) text.push_back(static_cast<std::uint32_t>(inverse(word_[n - 1 - k])) + 1);
    index_ = LceIndex(text);
  }

  CyclicWord word_;
  Comparator cmp_;
  LceIndex index_;
};

inline bool linked(const RibbonOrder& o, const CyclicWord& w, std::size_t i, std::size_t j) {
  return StrandSystem(w).linked(o, i, j);
}

/// Raw count of linked strand pairs i < j. A crossing whose two axes share a
/// tree segment with m edges is seen from m + 1 index pairs.
inline std::size_t linked_pair_count(const CyclicWord& w, const RibbonOrder& o,
                                     Comparator cmp = Comparator::naive) {
  const StrandSystem strands(w, cmp);
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) count += strands.linked(o, i, j);
  return count;
}

/// Minimal self-intersection number of a primitive class.
///
/// Every crossing of the closed geodesic is a pair of crossing axes whose
/// intersection in the tree is a segment. The pair is visible from each vertex
/// of that segment; index pairs at an interior vertex share both germs, at an
/// end vertex one germ, and a one-vertex segment shares none. Weighting linked
/// pairs by 2 - shared counts every crossing exactly twice.
inline std::size_t self_intersection(const CyclicWord& w, const RibbonOrder& o,
                                     Comparator cmp = Comparator::naive) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "self-intersection of the identity");
  const StrandSystem strands(w, cmp);
  std::size_t doubled = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const std::size_t shared = strands.shared_germs(i, j);
      if (shared < 2 && strands.linked(o, i, j)) doubled += 2 - shared;
    }
  if (doubled % 2 != 0) throw Error(ErrorCode::Internal, "odd crossing weight for " + w.str());
  return doubled / 2;
}

inline std::size_t self_intersection(const CyclicWord& w, Surface s, Comparator cmp = Comparator::naive) {
  return self_intersection(w, ribbon_order(s), cmp);
}

}  // namespace curvesi
