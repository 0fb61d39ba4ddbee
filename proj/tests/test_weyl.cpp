#include <gtest/gtest.h>

#include <random>
#include <set>

#include "triblock/weyl.hpp"

using namespace triblock;

namespace {

LatticeAutomorphism random_element(SurfaceId s, std::mt19937& rng, int len) {
  const auto gens = simple_reflections(s);
  auto g = LatticeAutomorphism::identity(s);
  if (gens.empty()) return g;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int i = 0; i < len; ++i) g = gens[pick(rng)] * g;
  return g;
}

// Subsets of pairwise disjoint (-1)-classes, by plain recursion over sorted indices.
std::size_t brute_disjoint(const std::vector<DivisorClass>& cls, std::size_t start, std::vector<std::size_t>& cur,
                           int m) {
  if (static_cast<int>(cur.size()) == m) return 1;
  std::size_t n = 0;
  for (std::size_t i = start; i < cls.size(); ++i) {
    bool ok = true;
    for (auto j : cur) ok = ok && intersect(cls[i], cls[j]) == 0;
    if (!ok) continue;
    cur.push_back(i);
    n += brute_disjoint(cls, i + 1, cur, m);
    cur.pop_back();
  }
  return n;
}

}  // namespace

TEST(Weyl, ReflectionsAreInvolutions) {
  for (int r = 3; r <= 8; ++r) {
    const auto s = SurfaceId::plane_blowup(r);
    for (const auto& g : simple_reflections(s)) {
      EXPECT_TRUE(g.preserves_form());
      EXPECT_EQ(g * g, LatticeAutomorphism::identity(s));
    }
  }
  EXPECT_THROW(LatticeAutomorphism::reflection(ell(SurfaceId::plane_blowup(3), 1)), user_error);
}

TEST(Weyl, GroupOrderOnX3) {
  // W(A2 x A1) has order 12
  const auto s = SurfaceId::plane_blowup(3);
  const auto gens = simple_reflections(s);
  std::vector<LatticeAutomorphism> seen{LatticeAutomorphism::identity(s)};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& g : gens) {
      auto h = g * seen[i];
      if (std::find(seen.begin(), seen.end(), h) == seen.end()) seen.push_back(h);
    }
  EXPECT_EQ(seen.size(), 12u);
}

TEST(Weyl, EquivarianceOnCatalog) {
  std::mt19937 rng(2024);
  const auto ids = catalog_ids();
  std::uniform_int_distribution<std::size_t> pick_id(0, ids.size() - 1);
  std::uniform_int_distribution<int> len(0, 3), side(0, 1), idx(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = build(ids[pick_id(rng)]);
    const auto g = random_element(c.surface(), rng, 6);
    BraidWord w;
    for (int i = len(rng); i > 0; --i) w.push_back({side(rng) ? Side::Left : Side::Right, idx(rng)});
    EXPECT_EQ(apply_to_collection(g, apply_word(c, w)), apply_word(apply_to_collection(g, c), w));
    const auto a = c.flatten(), b = apply_to_collection(g, c).flatten();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(chi(a[i], a[j]), chi(b[i], b[j]));
  }
}

TEST(Weyl, NormalFormIgnoresTwistAndMemberOrder) {
  std::mt19937 rng(5);
  for (const auto& id : {"5", "6.1", "7.2", "8.4"}) {
    const auto c = build(id);
    const auto s = c.surface();
    std::uniform_int_distribution<int> v(-3, 3);
    for (int t = 0; t < 10; ++t) {
      std::vector<integer> d(s.picard_rank());
      for (auto& x : d) x = v(rng);
      auto bs = twist(c, DivisorClass(s, d)).blocks();
      for (auto& b : bs) {
        auto m = b.members();
        std::shuffle(m.begin(), m.end(), rng);
        b = Block(m);
      }
      EXPECT_EQ(NormalizedCollection::of(BlockCollection(s, bs)), NormalizedCollection::of(c)) << id;
    }
    EXPECT_FALSE(NormalizedCollection::of(apply_word(c, "R1")) == NormalizedCollection::of(c));
    // the key decodes to an equivalent collection
    const auto n = NormalizedCollection::of(c);
    EXPECT_TRUE(equivalent_up_to_twist(c, n.collection()).has_value());
  }
}

TEST(Weyl, SmallOrbits) {
  EXPECT_EQ(orbit_count(build("1")), 1u);
  EXPECT_EQ(orbit_count(build("2")), 1u);
  EXPECT_EQ(orbit_count(build("3")), 1u);
  EXPECT_EQ(orbit_count(build("5")), 20u);
  EXPECT_EQ(orbit_count(build("6.1")), 240u);
}

TEST(Weyl, OrbitCountIndependentOfThreads) {
  const auto c = build("7.1");
  EXPECT_EQ(orbit_count(c, {1}), orbit_count(c, {3}));
}

TEST(Weyl, DisjointSetsMatchRecursion) {
  for (int r = 2; r <= 7; ++r) {
    const auto s = SurfaceId::plane_blowup(r);
    const auto cls = enumerate_classes(s, CurveKind::MinusOne);
    for (int m = 1; m <= std::min(r, 4); ++m) {
      std::vector<std::size_t> cur;
      EXPECT_EQ(count_disjoint_sets(s, m), brute_disjoint(cls, 0, cur, m)) << r << " " << m;
    }
  }
  std::vector<std::size_t> cur;
  const auto x6 = SurfaceId::plane_blowup(6);
  EXPECT_EQ(count_disjoint_sets(x6, 6), brute_disjoint(enumerate_classes(x6, CurveKind::MinusOne), 0, cur, 6));
  EXPECT_EQ(count_disjoint_sets(SurfaceId::plane_blowup(3), 3), 2u);
  EXPECT_EQ(count_disjoint_sets(x6, 6), 72u);
  EXPECT_EQ(count_disjoint_sets(x6, 6, 2), 72u);
}

TEST(Weyl, Binomial) {
  EXPECT_EQ(binomial(9, 8), 9);
  EXPECT_EQ(binomial(8, 5), 56);
  EXPECT_EQ(binomial(2, 1), 2);
  EXPECT_EQ(binomial(5, 0), 1);
}

TEST(Weyl, CData) {
  EXPECT_EQ(c_value("6.1"), 3);
  EXPECT_EQ(c_value("8.3"), 1);
  EXPECT_TRUE(verify_C("6.1"));
  EXPECT_TRUE(verify_C("5"));
  EXPECT_TRUE(verify_C("3"));
  EXPECT_THROW(verify_C("7.1"), user_error);
}
