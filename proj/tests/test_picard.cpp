#include <gtest/gtest.h>

#include <set>

#include "triblock/picard.hpp"
#include "triblock/weyl.hpp"

using namespace triblock;

namespace {

// Box search over all coordinate vectors with |a_i| <= bound, checked directly.
std::set<std::vector<integer>> box_search(SurfaceId s, CurveKind kind, integer bound) {
  const int n = s.picard_rank();
  std::set<std::vector<integer>> out;
  std::vector<integer> v(n, -bound);
  for (;;) {
    // K = -3l + sum l_i, so D.K = -3a0 - sum ai
    integer sq = v[0] * v[0], dk = -3 * v[0];
    for (int i = 1; i < n; ++i) {
      sq -= v[i] * v[i];
      dk -= v[i];
    }
    const bool hit = kind == CurveKind::MinusOne ? (sq == -1 && dk == -1) : (sq == -2 && dk == 0);
    if (hit) out.insert(v);
    int i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

std::set<std::vector<integer>> as_set(const std::vector<DivisorClass>& v) {
  std::set<std::vector<integer>> out;
  for (const auto& d : v) out.insert(d.coords());
  return out;
}

}  // namespace

TEST(Picard, SurfaceInvariants) {
  for (int r = 0; r <= 8; ++r) {
    const auto s = SurfaceId::plane_blowup(r);
    EXPECT_EQ(s.k_squared(), 9 - r);
    EXPECT_EQ(self_intersection(canonical_class(s)), 9 - r);
    EXPECT_EQ(s.k0_rank(), r + 3);
    EXPECT_EQ(SurfaceId::parse(s.name()), s);
  }
  const auto q = SurfaceId::quadric();
  EXPECT_EQ(self_intersection(canonical_class(q)), 8);
  EXPECT_EQ(q.k0_rank(), 4);
  EXPECT_EQ(SurfaceId::parse("P1xP1"), q);
  EXPECT_EQ(SurfaceId::parse("X0"), SurfaceId::plane_blowup(0));
  EXPECT_THROW(SurfaceId::parse("X9"), user_error);
  EXPECT_THROW(SurfaceId::parse("banana"), user_error);
}

TEST(Picard, IntersectionForm) {
  const auto s = SurfaceId::plane_blowup(5);
  EXPECT_EQ(self_intersection(ell(s, 0)), 1);
  for (int i = 1; i <= 5; ++i) {
    EXPECT_EQ(self_intersection(ell(s, i)), -1);
    EXPECT_EQ(intersect(ell(s, i), canonical_class(s)), -1);
    EXPECT_EQ(intersect(ell(s, 0), ell(s, i)), 0);
  }
  const auto q = SurfaceId::quadric();
  const auto f1 = DivisorClass::basis(q, 0), f2 = DivisorClass::basis(q, 1);
  EXPECT_EQ(self_intersection(f1), 0);
  EXPECT_EQ(intersect(f1, f2), 1);
  EXPECT_EQ(canonical_class(q), -2 * f1 - 2 * f2);
  EXPECT_THROW(intersect(ell(s, 1), f1), user_error);
}

TEST(Picard, OmegaIsCanonicalOfTheSmallerSurface) {
  const auto s = SurfaceId::plane_blowup(8);
  for (int p = 0; p <= 8; ++p) {
    EXPECT_EQ(self_intersection(omega(s, p)), 9 - p);
    EXPECT_EQ(omega(s, p), embed(canonical_class(SurfaceId::plane_blowup(p)), s));
  }
}

TEST(Picard, EmbedPreservesIntersections) {
  const auto a = SurfaceId::plane_blowup(3), b = SurfaceId::plane_blowup(7);
  const auto d1 = 2 * ell(a, 0) - ell(a, 1) - ell(a, 3), d2 = ell(a, 0) - ell(a, 2);
  EXPECT_EQ(intersect(embed(d1, b), embed(d2, b)), intersect(d1, d2));
  EXPECT_THROW(embed(ell(b, 7), a), user_error);
}

TEST(Picard, ClassCountsMatchBoxSearch) {
  const integer minus_one[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  const integer roots[] = {0, 0, 2, 8, 20, 40, 72, 126, 240};
  for (int r = 0; r <= 8; ++r) {
    const auto s = SurfaceId::plane_blowup(r);
    const auto m = enumerate_classes(s, CurveKind::MinusOne);
    const auto rt = enumerate_classes(s, CurveKind::Root);
    EXPECT_EQ(static_cast<integer>(m.size()), minus_one[r]) << "r=" << r;
    EXPECT_EQ(static_cast<integer>(rt.size()), roots[r]) << "r=" << r;
    if (r <= 6) {
      EXPECT_EQ(as_set(m), box_search(s, CurveKind::MinusOne, 3)) << "r=" << r;
      EXPECT_EQ(as_set(rt), box_search(s, CurveKind::Root, 3)) << "r=" << r;
    }
  }
}

TEST(Picard, ClassesFormWeylOrbits) {
  // For r >= 3 the (-1)-classes are one orbit; roots are one orbit from r = 4 (A2+A1 on X3).
  for (int r = 3; r <= 8; ++r) {
    const auto s = SurfaceId::plane_blowup(r);
    EXPECT_EQ(as_set(class_orbit(ell(s, r))), as_set(enumerate_classes(s, CurveKind::MinusOne))) << r;
    auto orbit = as_set(class_orbit(ell(s, 1) - ell(s, 2)));
    if (r == 3) {
      EXPECT_EQ(orbit.size(), 6u);
      for (const auto& v : class_orbit(ell(s, 0) - ell(s, 1) - ell(s, 2) - ell(s, 3))) orbit.insert(v.coords());
    }
    EXPECT_EQ(orbit, as_set(enumerate_classes(s, CurveKind::Root))) << r;
  }
}

TEST(Picard, DoubledBoundIsStable) {
  for (int r : {6, 7, 8}) {
    const auto s = SurfaceId::plane_blowup(r);
    for (auto kind : {CurveKind::MinusOne, CurveKind::Root}) {
      const auto b = class_search_bound(s);
      EXPECT_EQ(enumerate_classes_bounded(s, kind, b), enumerate_classes_bounded(s, kind, 2 * b));
    }
  }
}

TEST(Picard, QuadricClasses) {
  const auto q = SurfaceId::quadric();
  EXPECT_TRUE(enumerate_classes(q, CurveKind::MinusOne).empty());
  EXPECT_EQ(enumerate_classes(q, CurveKind::Root).size(), 2u);
}
