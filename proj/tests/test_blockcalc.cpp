#include <gtest/gtest.h>

#include <boost/rational.hpp>

#include "triblock/catalog.hpp"

using namespace triblock;

namespace {

// Determinant over Q by plain elimination.
rational rational_det(std::vector<std::vector<rational>> m) {
  const std::size_t n = m.size();
  rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == rational(0)) ++p;
    if (p == n) return rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// rank, c1 and ch2 span K0 (x) Q, so completeness is det = +-1 after the unimodular change to chi(O,-).
rational k0_det(const BlockCollection& c) {
  std::vector<std::vector<rational>> m;
  const auto o = structure_sheaf(c.surface());
  for (const auto& e : c.flatten()) {
    std::vector<rational> row{rational(e.rank())};
    for (auto v : e.c1().coords()) row.emplace_back(v);
    row.emplace_back(chi(o, e));
    m.push_back(row);
  }
  return rational_det(m);
}

// K0 mutation, sign fixed by positivity of the new class.
KClass sheaf_sign(KClass v) {
  if (v.rank() < 0 || (v.rank() == 0 && degree(v) < 0)) v = -1 * v;
  return v;
}

std::vector<KClass> sorted_members(const Block& b) { return b.sorted().members(); }

std::vector<BraidWord> words_up_to(int len, int m) {
  std::vector<BraidWord> out{{}};
  std::vector<BraidWord> layer{{}};
  for (int l = 0; l < len; ++l) {
    std::vector<BraidWord> next;
    for (const auto& w : layer)
      for (auto side : {Side::Left, Side::Right})
        for (int i = 1; i < m; ++i) {
          auto x = w;
          x.push_back({side, i});
          next.push_back(x);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Blocks, ValidationRejectsBadBlocks) {
  const auto s = SurfaceId::plane_blowup(3);
  EXPECT_NO_THROW(validate_block({torsion_class(ell(s, 1), 0), torsion_class(ell(s, 2), 0)}));
  // same curve twice is not orthogonal
  EXPECT_THROW(validate_block({torsion_class(ell(s, 1), 0), torsion_class(ell(s, 1), 1)}), validation_error);
  // unequal rank
  EXPECT_THROW(validate_block({structure_sheaf(s), torsion_class(ell(s, 1), 0)}), validation_error);
  EXPECT_THROW(validate_block({}), validation_error);
  EXPECT_THROW(validate_block({KClass(1, ell(s, 0), 0)}), validation_error);
}

TEST(Blocks, CollectionValidation) {
  const auto t = tau0();
  EXPECT_NO_THROW(validate_collection(t));
  EXPECT_TRUE(is_complete(t));
  // reversed order is not semiorthogonal
  auto bs = t.blocks();
  std::reverse(bs.begin(), bs.end());
  EXPECT_THROW(validate_collection(BlockCollection(t.surface(), bs)), validation_error);
  // dropping a block keeps a valid but incomplete collection
  bs = t.blocks();
  bs.pop_back();
  BlockCollection two(t.surface(), bs);
  EXPECT_NO_THROW(validate_collection(two));
  EXPECT_FALSE(is_complete(two));
}

TEST(Blocks, CompletenessMatchesRationalDeterminant) {
  for (const auto& id : catalog_ids()) {
    const auto c = build(id);
    const auto d = k0_det(c);
    EXPECT_TRUE(d == rational(1) || d == rational(-1)) << id;
    EXPECT_EQ(is_complete(c), true);
    EXPECT_EQ(static_cast<int>(c.flatten().size()), c.surface().k0_rank());
  }
}

TEST(Blocks, MutationMatchesK0Formula) {
  for (const auto& id : catalog_ids()) {
    const auto c = build(id);
    for (int i = 1; i < static_cast<int>(c.size()); ++i) {
      const Block& e = c[i - 1];
      const Block& f = c[i];
      const integer x = chi(e[0], f[0]);
      KClass se(0, DivisorClass::zero(c.surface()), 0), sf = se;
      for (const auto& v : e) se += v;
      for (const auto& v : f) sf += v;

      const auto l = block_mutation(c, i, Side::Left).collection;
      std::vector<KClass> want;
      for (const auto& v : f) want.push_back(sheaf_sign(v - x * se));
      std::sort(want.begin(), want.end());
      EXPECT_EQ(sorted_members(l[i - 1]), want) << id << " L" << i;
      EXPECT_EQ(l[i], e);

      const auto r = block_mutation(c, i, Side::Right).collection;
      want.clear();
      for (const auto& v : e) want.push_back(sheaf_sign(v - x * sf));
      std::sort(want.begin(), want.end());
      EXPECT_EQ(r[i - 1], f);
      EXPECT_EQ(sorted_members(r[i]), want) << id << " R" << i;
    }
  }
}

TEST(Blocks, ZeroChiIsATransposition) {
  // two orthogonal torsion sheaves after O
  const auto s = SurfaceId::plane_blowup(2);
  const auto c = make_collection(
      s, {{structure_sheaf(s)}, {torsion_class(ell(s, 1), 0)}, {torsion_class(ell(s, 2), 0)}});
  const auto r = block_mutation(c, 2, Side::Right);
  EXPECT_TRUE(r.type.trivial);
  EXPECT_EQ(r.collection[1], c[2]);
  EXPECT_EQ(r.collection[2], c[1]);
}

TEST(Blocks, InversesAndBraidRelations) {
  for (const auto& id : catalog_ids()) {
    const auto c = build(id);
    EXPECT_EQ(apply_word(c, "R1 L1"), c) << id;
    EXPECT_EQ(apply_word(c, "L1 R1"), c) << id;
    EXPECT_EQ(apply_word(c, "R2 L2"), c) << id;
    EXPECT_EQ(apply_word(c, "L2 R2"), c) << id;
    EXPECT_EQ(apply_word(c, "R1 R2 R1"), apply_word(c, "R2 R1 R2")) << id;
    EXPECT_EQ(apply_word(c, "L1 L2 L1"), apply_word(c, "L2 L1 L2")) << id;
    const auto w = parse_word("R1 L2 R2 R1");
    EXPECT_EQ(apply_word(apply_word(c, w), inverse(w)), c);
  }
}

TEST(Blocks, DivisionAlongShortWords) {
  for (const auto& id : catalog_ids()) {
    const auto c = build(id);
    const auto eq = *equation_for(c.surface(), {c.type()[0], c.type()[1], c.type()[2]});
    for (const auto& w : words_up_to(4, 3)) {
      std::vector<MutationType> types;
      const auto d = apply_word(c, w, &types);
      for (const auto& t : types) {
        EXPECT_EQ(t.kind, MutationKind::Division) << id << " " << format_word(w);
        EXPECT_FALSE(t.trivial);
      }
      const auto t = d.type();
      const auto r = d.ranks();
      EXPECT_TRUE(check_weighted({t[0], t[1], t[2]}, eq.coeff, {r[0], r[1], r[2]})) << id << " " << format_word(w);
      EXPECT_TRUE(is_complete(d));
    }
  }
}

TEST(Blocks, HelixShift) {
  for (const auto& id : catalog_ids()) {
    const auto c = build(id);
    const auto k = canonical_class(c.surface());
    const auto h = helix_shift(c, 1);
    EXPECT_EQ(h[0], c[1]);
    EXPECT_EQ(helix_shift(h, -1), c);
    // three shifts twist everything by -K
    EXPECT_EQ(helix_shift(c, 3), twist(c, -k)) << id;
    EXPECT_EQ(apply_word(c, "R1 R2"), h);
  }
}

TEST(Blocks, DualBasisAndPairings) {
  for (const auto& id : catalog_ids()) {
    const auto c = build(id);
    const auto a = c.flatten();
    const auto d = dual_basis(c);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(chi(a[i], d[j]), i == j ? 1 : 0);
    EXPECT_EQ(pairing(Additive::Rank, Additive::Rank, c), rational(0)) << id;
    EXPECT_EQ(pairing(Additive::Rank, Additive::Degree, c), rational(0)) << id;
    EXPECT_EQ(pairing(Additive::Degree, Additive::Rank, c), rational(0)) << id;
  }
}

TEST(Blocks, AbcIdentity) {
  for (const auto& id : catalog_ids()) {
    const auto c = build(id);
    const auto v = abc(c);
    const integer al = c[0].size(), be = c[1].size(), ga = c[2].size();
    // a^2/alpha + b^2/beta + c^2/gamma = abc, cleared of denominators
    EXPECT_EQ(v.a * v.a * be * ga + v.b * v.b * al * ga + v.c * v.c * al * be, v.a * v.b * v.c * al * be * ga) << id;
    EXPECT_EQ(v.c, chi(c[0][0], c[1][0]));
  }
}

TEST(Blocks, WordParsing) {
  EXPECT_EQ(format_word(parse_word("R1,L2  R*")), "R1 L2 R1 R2 R3");
  EXPECT_EQ(format_word(parse_word("L*")), "L3 L2 L1");
  EXPECT_EQ(format_word(inverse(parse_word("R1 L2"))), "R2 L1");
  EXPECT_THROW(parse_word("Q1"), user_error);
  EXPECT_THROW(parse_word("R0"), user_error);
  EXPECT_THROW(apply_word(tau0(), "R3"), user_error);
}

TEST(Blocks, TwistEquivalence) {
  const auto c = build("7.1");
  const auto s = c.surface();
  const auto d = 2 * ell(s, 0) - ell(s, 3) + ell(s, 5);
  const auto t = twist(c, d);
  auto found = equivalent_up_to_twist(c, t);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found, d);
  EXPECT_FALSE(equivalent_up_to_twist(c, apply_word(c, "R1")).has_value());
}
