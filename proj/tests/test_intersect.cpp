#include <gtest/gtest.h>

#include <set>

#include "curvesi/intersect.hpp"
#include "oracle/hyperbolic_oracle.hpp"
#include "support.hpp"

using namespace curvesi;

namespace {

const std::string kW1 = "aaabaaBAbAABabaB";
const std::string kW2 = "aaabaBaabaBAAbAB";

Ray ray(const char* period) { return Ray(parse_letters(period)); }

std::size_t si(const std::string& w, Surface s) { return self_intersection(CyclicWord::parse(w), s); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Internal;
}

}  // namespace

TEST(Rays, ForwardAndBackward) {
  EXPECT_EQ(to_string(forward_ray(CyclicWord::parse("ab"), 0).period()), "ab");
  EXPECT_EQ(to_string(forward_ray(CyclicWord::parse("aB"), 1).period()), "Ba");
  EXPECT_EQ(to_string(forward_ray(CyclicWord::parse("a"), 0).period()), "a");
  EXPECT_EQ(to_string(backward_ray(CyclicWord::parse("ab"), 0).period()), "BA");
  EXPECT_EQ(to_string(backward_ray(CyclicWord::parse("ab"), 1).period()), "AB");
  EXPECT_EQ(to_string(backward_ray(CyclicWord::parse("aB"), 0).period()), "bA");
  EXPECT_EQ(ray("ab").letter_at(5), Letter::b);
}

TEST(Orient, DistinctFirstLetters) {
  EXPECT_EQ(orient(kPants, ray("B"), ray("A"), ray("a")), -1);
  EXPECT_EQ(orient(kTorus, ray("b"), ray("A"), ray("a")), 1);
}

TEST(Orient, SharedPrefix) {
  EXPECT_EQ(orient(kTorus, ray("ab"), ray("aB"), ray("ba")), -1);
}

TEST(Orient, AlternatingAndReversal) {
  const std::vector<Ray> rays = {ray("ab"), ray("aB"), ray("ba"), ray("aab"), ray("AB"), ray("bbA")};
  for (const RibbonOrder& o : {kTorus, kPants})
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t j = 0; j < rays.size(); ++j)
        for (std::size_t k = 0; k < rays.size(); ++k) {
          if (i == j || j == k || i == k) continue;
          const int s = orient(o, rays[i], rays[j], rays[k]);
          EXPECT_EQ(orient(o, rays[j], rays[i], rays[k]), -s);
          EXPECT_EQ(orient(o, rays[i], rays[k], rays[j]), -s);
          EXPECT_EQ(orient(o, rays[j], rays[k], rays[i]), s);
          EXPECT_EQ(orient(o.reversed(), rays[i], rays[j], rays[k]), -s);
        }
}

TEST(Orient, Errors) {
  EXPECT_EQ(code_of([] { orient(kTorus, ray("ab"), ray("abab"), ray("b")); }), ErrorCode::IndistinctRays);
  EXPECT_EQ(code_of([] { Ray(Letters{}); }), ErrorCode::EmptyWord);
  EXPECT_EQ(code_of([] { ray("aA"); }), ErrorCode::NotCyclicallyReduced);
  EXPECT_EQ(code_of([] { RibbonOrder(Letter::a, Letter::a, Letter::b, Letter::B); }), ErrorCode::InvalidRibbonOrder);
}

TEST(Linked, Examples) {
  EXPECT_FALSE(linked(kPants, CyclicWord::parse("ab"), 0, 1));
  EXPECT_TRUE(linked(kPants, CyclicWord::parse("aB"), 0, 1));
  EXPECT_FALSE(linked(kTorus, CyclicWord::parse("aB"), 0, 1));
  EXPECT_EQ(code_of([] { linked(kTorus, CyclicWord::parse("abab"), 0, 1); }), ErrorCode::NonPrimitive);
}

TEST(SelfIntersection, SmallValues) {
  EXPECT_EQ(si("a", Surface::torus), 0u);
  EXPECT_EQ(si("a", Surface::pants), 0u);
  EXPECT_EQ(si("ab", Surface::pants), 0u);
  EXPECT_EQ(si("aB", Surface::pants), 1u);
  EXPECT_EQ(si("ab", Surface::torus), 0u);
  EXPECT_EQ(si("aB", Surface::torus), 0u);
  EXPECT_EQ(si("abAB", Surface::torus), 0u);  // boundary curve
  EXPECT_EQ(si("abAB", Surface::pants), oracle::pants().count("abAB").double_points);
  EXPECT_EQ(si("aab", Surface::torus), 0u);
  EXPECT_EQ(code_of([] { si("abab", Surface::torus); }), ErrorCode::NonPrimitive);
  EXPECT_EQ(code_of([] { self_intersection(CyclicWord(), Surface::pants); }), ErrorCode::EmptyWord);
}

// The two long trace-equivalent words. Values are those produced by the
// ribbon orders (a,b,A,B) for the torus and (a,A,b,B) for the pants, and are
// confirmed by the geometric oracle below.
TEST(SelfIntersection, LongPair) {
  EXPECT_EQ(si(kW1, Surface::pants), 34u);
  EXPECT_EQ(si(kW1, Surface::torus), 15u);
  EXPECT_EQ(si(kW2, Surface::pants), 32u);
  EXPECT_EQ(si(kW2, Surface::torus), 19u);
}

TEST(SelfIntersection, GeometricOracleOnLongPair) {
  for (const std::string& w : {kW1, kW2}) {
    const auto p = oracle::pants().count(w);
    const auto t = oracle::torus().count(w);
    EXPECT_EQ(p.interleaving_pairs, linked_pair_count(CyclicWord::parse(w), kPants)) << w;
    EXPECT_EQ(t.interleaving_pairs, linked_pair_count(CyclicWord::parse(w), kTorus)) << w;
    EXPECT_EQ(p.double_points, si(w, Surface::pants)) << w;
    EXPECT_EQ(t.double_points, si(w, Surface::torus)) << w;
  }
}

// Published maxima over words of length L: torus (L-1)(L-3)/4 for odd L and
// (L-2)^2/4 for even L; pants (L^2-1)/4 for odd L and L^2/4+L/2-1 for even L.
// The even pants maximum is attained only by the power (aB)^(L/2), so
// primitive words of length 4 or more stay strictly below it.
TEST(SelfIntersection, MaximaOverShortWords) {
  for (std::size_t L = 2; L <= 9; ++L) {
    std::size_t max_t = 0, max_p = 0;
    for (const auto& w : support::primitive_classes(L)) {
      max_t = std::max(max_t, si(w, Surface::torus));
      max_p = std::max(max_p, si(w, Surface::pants));
    }
    EXPECT_EQ(max_t, L % 2 ? (L - 1) * (L - 3) / 4 : (L - 2) * (L - 2) / 4) << L;
    if (L % 2)
      EXPECT_EQ(max_p, (L * L - 1) / 4) << L;
    else if (L == 2)
      EXPECT_EQ(max_p, 1u);
    else
      EXPECT_LT(max_p, L * L / 4 + L / 2 - 1) << L;
  }
}

TEST(StrandSystem, RaysPairwiseDistinct) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& w : support::primitive_classes(n)) {
      const StrandSystem s(CyclicWord::parse(w));
      std::set<Letters> seen;
      for (std::size_t h = 0; h < 2 * n; ++h) {
        const Ray r = s.ray(h);
        Letters unrolled;
        for (std::size_t k = 0; k < 2 * n; ++k) unrolled.push_back(r.letter_at(k));
        ASSERT_TRUE(seen.insert(unrolled).second) << w << " handle " << h;
        ASSERT_EQ(s.letter(h, 3 * n + 1), r.letter_at(3 * n + 1));
      }
      for (std::size_t i = 0; i < n; ++i) ASSERT_NE(s.letter(s.omega(i), 0), s.letter(s.alpha(i), 0));
    }
}

TEST(StrandSystem, SuffixArrayMatchesNaive) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& w : support::primitive_classes(n)) {
      const CyclicWord cw = CyclicWord::parse(w);
      const StrandSystem a(cw, Comparator::naive), b(cw, Comparator::suffix_array);
      for (std::size_t h1 = 0; h1 < 2 * n; ++h1)
        for (std::size_t h2 = 0; h2 < 2 * n; ++h2)
          if (h1 != h2) ASSERT_EQ(a.common_prefix(h1, h2), b.common_prefix(h1, h2)) << w;
      for (const RibbonOrder& o : {kTorus, kPants}) {
        ASSERT_EQ(linked_pair_count(cw, o, Comparator::naive), linked_pair_count(cw, o, Comparator::suffix_array));
        ASSERT_EQ(self_intersection(cw, o, Comparator::naive), self_intersection(cw, o, Comparator::suffix_array));
      }
    }
  for (const std::string& w : {kW1, kW2})
    for (const RibbonOrder& o : {kTorus, kPants})
      EXPECT_EQ(self_intersection(CyclicWord::parse(w), o, Comparator::suffix_array),
                self_intersection(CyclicWord::parse(w), o));
}

TEST(StrandSystem, LinkedAgreesWithRayOrient) {
  for (const auto& w : support::primitive_classes(5)) {
    const CyclicWord cw = CyclicWord::parse(w);
    const StrandSystem s(cw);
    for (std::size_t i = 0; i < cw.size(); ++i)
      for (std::size_t j = 0; j < cw.size(); ++j) {
        if (i == j) continue;
        const Ray ai = backward_ray(cw, i), aj = backward_ray(cw, j), oi = forward_ray(cw, i), oj = forward_ray(cw, j);
        const bool expect = orient(kPants, ai, aj, oi) != orient(kPants, ai, oj, oi);
        ASSERT_EQ(s.linked(kPants, i, j), expect) << w;
        ASSERT_EQ(s.linked(kPants, i, j), s.linked(kPants, j, i)) << w;
      }
  }
}
