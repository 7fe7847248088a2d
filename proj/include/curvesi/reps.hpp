#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "curvesi/error.hpp"
#include "curvesi/polynomial.hpp"
#include "curvesi/words.hpp"

namespace curvesi {

/// 128-bit integer whose arithmetic throws Overflow instead of wrapping.
class Checked128 {
 public:
  using Raw = __int128;

  constexpr Checked128() = default;
  constexpr Checked128(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Checked128 from_raw(Raw v) {
    Checked128 c;
    c.v_ = v;
    return c;
  }

  constexpr Raw raw() const { return v_; }

  friend Checked128 operator+(Checked128 l, Checked128 r) {
    Raw out;
    if (__builtin_add_overflow(l.v_, r.v_, &out)) overflow();
    return from_raw(out);
  }
  friend Checked128 operator-(Checked128 l, Checked128 r) {
    Raw out;
    if (__builtin_sub_overflow(l.v_, r.v_, &out)) overflow();
    return from_raw(out);
  }
  friend Checked128 operator*(Checked128 l, Checked128 r) {
    Raw out;
    if (__builtin_mul_overflow(l.v_, r.v_, &out)) overflow();
    return from_raw(out);
  }
  Checked128 operator-() const { return Checked128(0) - *this; }
  Checked128& operator+=(Checked128 r) { return *this = *this + r; }
  Checked128& operator*=(Checked128 r) { return *this = *this * r; }

  friend constexpr bool operator==(Checked128, Checked128) = default;
  friend constexpr auto operator<=>(Checked128 l, Checked128 r) { return l.v_ <=> r.v_; }

  std::string str() const {
    if (v_ == 0) return "0";
    Raw v = v_;
    const bool neg = v < 0;
    std::string s;
    while (v != 0) {
      const int digit = static_cast<int>(v % 10);
      s.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
      v /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
  }

  static Checked128 parse(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer");
    const bool neg = text.front() == '-';
    if (neg) text.remove_prefix(1);
    if (text.empty()) throw Error(ErrorCode::ParseError, "bare minus sign");
    Checked128 v;
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad digit in integer");
      v = v * Checked128(10) + Checked128(c - '0');
    }
    return neg ? -v : v;
  }

  BigInt to_big() const {
    const bool neg = v_ < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v_ + 1)) + 1 : static_cast<unsigned __int128>(v_);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return neg ? BigInt(-out) : out;
  }

 private:
  [[noreturn]] static void overflow() { throw Error(ErrorCode::Overflow, "128-bit trace arithmetic overflowed"); }

  Raw v_ = 0;
};

template <class T>
struct Mat2 {
  T a{}, b{}, c{}, d{};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  /// Inverse of a determinant-1 matrix.
  Mat2 unimodular_inverse() const { return {d, -b, -c, a}; }
};

template <class T>
struct TracePoint {
  T x{}, y{}, z{};
  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

template <class T>
struct MatrixPair {
  Mat2<T> A, B;
};

/// Integer parameters (x, v, w) of an exact representation.
struct RepParams {
  std::int64_t x = 0, v = 0, w = 0;
  friend bool operator==(const RepParams&, const RepParams&) = default;
};

/// A = [[x, -1], [1, 0]], B = [[1, v], [w, vw + 1]]; realizes the trace point
/// (x, vw + 2, x + v - w).
template <class T = BigInt>
std::pair<MatrixPair<T>, TracePoint<T>> matrices_for_params(const RepParams& p) {
  const T x(p.x), v(p.v), w(p.w);
  MatrixPair<T> m{{x, T(-1), T(1), T(0)}, {T(1), v, w, v * w + T(1)}};
  TracePoint<T> point{x, v * w + T(2), x + v - w};
  return {m, point};
}

template <class T>
T trace_at(std::span<const Letter> word, const MatrixPair<T>& m) {
  const Mat2<T> Ainv = m.A.unimodular_inverse(), Binv = m.B.unimodular_inverse();
  Mat2<T> acc = Mat2<T>::identity();
  for (Letter l : word) {
    switch (l) {
      case Letter::a: acc = acc * m.A; break;
      case Letter::b: acc = acc * m.B; break;
      case Letter::A: acc = acc * Ainv; break;
      case Letter::B: acc = acc * Binv; break;
    }
  }
  return acc.trace();
}

inline constexpr RepParams kFingerprintParams1{3, 2, 1};  // trace point (3, 4, 4)
inline constexpr RepParams kFingerprintParams2{4, 3, 1};  // trace point (4, 5, 6)

/// Squared traces at two fixed integer trace points. Words with equal Fricke
/// polynomials up to sign have equal fingerprints.
struct Fingerprint {
  Checked128 first, second;

  friend constexpr bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend constexpr auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

class Fingerprinter {
 public:
  explicit Fingerprinter(RepParams p1 = kFingerprintParams1, RepParams p2 = kFingerprintParams2)
      : m1_(matrices_for_params<Checked128>(p1).first), m2_(matrices_for_params<Checked128>(p2).first) {}

  Fingerprint operator()(std::span<const Letter> word) const {
    const Checked128 t1 = trace_at(word, m1_), t2 = trace_at(word, m2_);
    return {t1 * t1, t2 * t2};
  }

 private:
  MatrixPair<Checked128> m1_, m2_;
};

inline Fingerprint fingerprint(std::span<const Letter> word) { return Fingerprinter{}(word); }

/// 2 arccosh(|tr| / 2): translation length of a hyperbolic element.
inline double length_from_trace(double tr) {
  const double t = std::fabs(tr);
  if (!(t > 2.0)) throw Error(ErrorCode::NonHyperbolic, "|trace| = " + std::to_string(t) + " <= 2");
  return 2.0 * std::acosh(t / 2.0);
}

/// Real trace of a word at a real trace point. Uses complex matrices
/// A = [[x, -1], [1, 0]], B = [[0, q], [-1/q, y]] with q + 1/q = z, which exist
/// for every (x, y, z); the trace is a real polynomial value.
inline double real_trace_at(std::span<const Letter> word, const TracePoint<double>& p) {
  using C = std::complex<long double>;
  const long double z = p.z;
  const C q = (C(z) + std::sqrt(C(z * z - 4.0L))) / C(2.0L);
  const MatrixPair<C> m{{C(p.x), C(-1), C(1), C(0)}, {C(0), q, C(-1) / q, C(p.y)}};
  return static_cast<double>(trace_at(word, m).real());
}

inline double geodesic_length(std::span<const Letter> word, const TracePoint<double>& p) {
  return length_from_trace(real_trace_at(word, p));
}

}  // namespace curvesi
