#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triblock/blockcalc.hpp"
#include "triblock/markov.hpp"

namespace triblock {

inline BlockCollection tau0() {
  const auto s = SurfaceId::plane_blowup(0);
  const auto h = ell(s, 0);
  return make_collection(s, {{line_bundle(-h)}, {structure_sheaf(s)}, {line_bundle(h)}});
}

// (O, {O(f1), O(f2)}, O(f1+f2)) of type (1,2,1).
inline BlockCollection quadric_standard() {
  const auto s = SurfaceId::quadric();
  const auto f1 = DivisorClass::basis(s, 0), f2 = DivisorClass::basis(s, 1);
  return make_collection(s, {{structure_sheaf(s)}, {line_bundle(f1), line_bundle(f2)}, {line_bundle(f1 + f2)}});
}

// O_{l_i}(m) for i = from..to inclusive.
inline Block torsion_block(SurfaceId s, int from, int to, integer m) {
  if (s.is_quadric() || from < 1 || from > to || to > s.blowups())
    throw user_error("torsion block needs 1 <= from <= to <= r");
  std::vector<KClass> members;
  for (int i = from; i <= to; ++i) members.push_back(torsion_class(ell(s, i), m));
  return validate_block(std::move(members));
}

// A member the construction is expected to produce.
struct ExpectedMember {
  std::string label;
  integer rank = 1;
  DivisorClass c1;
  std::optional<integer> ch2x2;
  std::optional<rational> mu;
};

using ExpectedBlocks = std::vector<std::vector<ExpectedMember>>;

struct CatalogStage {
  std::string word;
  ExpectedBlocks expected;  // empty: nothing stated for this stage
};

struct CatalogEntry {
  std::string id;
  SurfaceId surface;
  std::string seed_text;
  BlockCollection seed;
  std::vector<CatalogStage> stages;
  int merge_index = 0;  // 0: already three blocks
  ExpectedBlocks expected;
  // Words that must reproduce the same final collection.
  std::vector<std::string> equivalent_words;
  // Word taking the first minimum solution to the second one (group IV).
  std::string second_solution_word;

  std::string full_word() const {
    std::string w;
    for (const auto& st : stages) {
      if (!w.empty() && !st.word.empty()) w += ' ';
      w += st.word;
    }
    return w;
  }
};

namespace detail {

struct CatalogBuilder {
  SurfaceId s;
  explicit CatalogBuilder(int r) : s(SurfaceId::plane_blowup(r)) {}

  DivisorClass L() const { return ell(s, 0); }
  DivisorClass l(int i) const { return ell(s, i); }
  DivisorClass w(int p) const { return omega(s, p); }
  DivisorClass sum(int from, int to) const {
    auto d = DivisorClass::zero(s);
    for (int i = from; i <= to; ++i) d += l(i);
    return d;
  }

  static ExpectedMember line(const DivisorClass& d) { return {"", 1, d, std::nullopt, std::nullopt}; }
  static ExpectedMember bundle(std::string label, integer r, const DivisorClass& d, rational mu) {
    return {std::move(label), r, d, std::nullopt, mu};
  }
  ExpectedMember torsion(int i, integer m) const { return {"", 0, l(i), 2 * m + 1, std::nullopt}; }

  std::vector<ExpectedMember> lines(const std::vector<DivisorClass>& ds) const {
    std::vector<ExpectedMember> out;
    for (const auto& d : ds) out.push_back(line(d));
    return out;
  }
  std::vector<ExpectedMember> lines(int from, int to, const std::function<DivisorClass(int)>& f) const {
    std::vector<ExpectedMember> out;
    for (int i = from; i <= to; ++i) out.push_back(line(f(i)));
    return out;
  }
  std::vector<ExpectedMember> torsions(int from, int to, integer m) const {
    std::vector<ExpectedMember> out;
    for (int i = from; i <= to; ++i) out.push_back(torsion(i, m));
    return out;
  }

  Block pulled(const Block& b) const { return embed(BlockCollection(b.surface(), {b}), s)[0]; }

  BlockCollection collection(std::vector<Block> blocks) const {
    BlockCollection c(s, std::move(blocks));
    validate_collection(c);
    return c;
  }
};

inline BlockCollection pullback(const BlockCollection& c, SurfaceId s) { return embed(c, s); }

}  // namespace detail

namespace detail {

inline BlockCollection run_entry(const CatalogEntry& e) {
  BlockCollection c = e.seed;
  for (const auto& st : e.stages) {
    try {
      c = apply_word(c, st.word);
    } catch (const std::exception& err) {
      throw invariant_violation("catalog " + e.id + ", step '" + st.word + "': " + err.what());
    }
  }
  if (e.merge_index > 0) c = merge_blocks(c, e.merge_index);
  return c;
}

inline std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;
  // Some seeds are pullbacks of entries defined earlier in the list.
  auto prior = [&out](const std::string& id) {
    for (const auto& e : out)
      if (e.id == id) return run_entry(e);
    throw invariant_violation("catalog seed refers to unknown entry " + id);
  };
  const rational half(1, 2), three_halves(3, 2), four_thirds(4, 3);

  {
    CatalogEntry e;
    e.id = "1";
    e.surface = SurfaceId::plane_blowup(0);
    e.seed_text = "(O(-l), O, O(l))";
    e.seed = tau0();
    CatalogBuilder b(0);
    e.expected = {b.lines({-b.L()}), b.lines({DivisorClass::zero(b.s)}), b.lines({b.L()})};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "2";
    e.surface = SurfaceId::quadric();
    e.seed_text = "(O, {O(f1), O(f2)}, O(f1+f2))";
    e.seed = quadric_standard();
    e.stages = {{"L2 L1", {}}};
    const auto s = e.surface;
    const auto f1 = DivisorClass::basis(s, 0), f2 = DivisorClass::basis(s, 1);
    e.expected = {{CatalogBuilder::line(-f1 - f2)},
                  {CatalogBuilder::line(DivisorClass::zero(s))},
                  {CatalogBuilder::line(f1), CatalogBuilder::line(f2)}};
    out.push_back(e);
  }
  {
    CatalogBuilder b(3);
    CatalogEntry e;
    e.id = "3";
    e.surface = b.s;
    e.seed_text = "(O(-l), O, O(l), L[1..3])";
    auto t = pullback(tau0(), b.s);
    e.seed = b.collection({t[0], t[1], t[2], torsion_block(b.s, 1, 3, 0)});
    const auto two = 2 * b.L();
    e.stages = {{"R*",
                 {b.lines({DivisorClass::zero(b.s)}), b.lines({b.L()}), b.torsions(1, 3, 0),
                  b.lines({two - b.sum(1, 3)})}},
                {"R3", {}}};
    e.merge_index = 2;
    e.expected = {b.lines({DivisorClass::zero(b.s)}), b.lines({b.L(), two - b.sum(1, 3)}),
                  b.lines({two - b.l(2) - b.l(3), two - b.l(1) - b.l(3), two - b.l(1) - b.l(2)})};
    out.push_back(e);
  }
  {
    CatalogBuilder b(4);
    CatalogEntry e;
    e.id = "4";
    e.surface = b.s;
    e.seed_text = "(O(-l), O, O(l), L[1..4])";
    auto t = pullback(tau0(), b.s);
    e.seed = b.collection({t[0], t[1], t[2], torsion_block(b.s, 1, 4, 0)});
    const auto w4 = b.w(4);
    e.stages = {{"R*",
                 {b.lines({DivisorClass::zero(b.s)}), b.lines({b.L()}), b.torsions(1, 4, 0),
                  b.lines({-w4 - b.L()})}},
                {"R3",
                 {b.lines({DivisorClass::zero(b.s)}), b.lines({b.L()}), b.lines({-w4 - b.L()}),
                  b.lines(1, 4, [&](int i) { return b.l(i) - w4 - b.L(); })}},
                {"L2", {}}};
    e.merge_index = 3;
    auto g = b.lines({b.L()});
    for (auto& m : b.lines(1, 4, [&](int i) { return b.l(i) - w4 - b.L(); })) g.push_back(m);
    e.expected = {b.lines({DivisorClass::zero(b.s)}), {CatalogBuilder::bundle("F", 2, -w4, rational(5, 2))}, g};
    e.second_solution_word = "R1 R2 R2";
    out.push_back(e);
  }
  {
    CatalogBuilder b(5);
    CatalogEntry e;
    e.id = "5";
    e.surface = b.s;
    e.seed_text = "(L[4..5](-1), tau3)";
    auto t3 = pullback(prior("3"), b.s);
    e.seed = b.collection({torsion_block(b.s, 4, 5, -1), t3[0], t3[1], t3[2]});
    e.stages = {{"R1", {}}, {"R*", {}}};
    e.merge_index = 3;
    const auto two = 2 * b.L();
    e.expected = {b.lines({b.l(4), b.l(5)}), b.lines({b.L(), two - b.sum(1, 3)}),
                  b.lines({-b.w(5), two - b.l(1) - b.l(2), two - b.l(2) - b.l(3), two - b.l(1) - b.l(3)})};
    out.push_back(e);
  }
  {
    CatalogBuilder b(6);
    CatalogEntry e;
    e.id = "6.1";
    e.surface = b.s;
    e.seed_text = "(L[4..6](-1), tau3)";
    auto t3 = pullback(prior("3"), b.s);
    e.seed = b.collection({torsion_block(b.s, 4, 6, -1), t3[0], t3[1], t3[2]});
    e.stages = {{"R1 L3", {}}, {"R*", {}}};
    e.merge_index = 3;
    e.expected = {b.lines(4, 6, [&](int i) { return b.l(i); }),
                  b.lines(1, 3, [&](int i) { return b.L() - b.l(i); }),
                  b.lines({-b.w(6), b.L(), 2 * b.L() - b.sum(1, 3)})};
    out.push_back(e);
  }
  {
    CatalogBuilder b(6);
    CatalogEntry e;
    e.id = "6.2";
    e.surface = b.s;
    e.seed_text = "(L[1..6](-1), tau0)";
    auto t = pullback(tau0(), b.s);
    e.seed = b.collection({torsion_block(b.s, 1, 6, -1), t[0], t[1], t[2]});
    e.stages = {{"R2 R1", {}}, {"R* R*", {}}};
    e.merge_index = 2;
    e.expected = {{CatalogBuilder::bundle("T6", 2, b.L(), three_halves)},
                  b.lines({b.L(), -b.w(6)}),
                  b.lines(1, 6, [&](int i) { return b.l(i) - b.w(6); })};
    out.push_back(e);
  }
  {
    CatalogBuilder b(7);
    CatalogEntry e;
    e.id = "7.1";
    e.surface = b.s;
    e.seed_text = "(O(-l), O, O(l), L[1..7])";
    auto t = pullback(tau0(), b.s);
    e.seed = b.collection({t[0], t[1], t[2], torsion_block(b.s, 1, 7, 0)});
    e.stages = {{"R1 L3 L*",
                 {b.lines({b.L() + b.w(7)}), b.lines({DivisorClass::zero(b.s)}),
                  {CatalogBuilder::bundle("T7", 2, b.L(), three_halves)},
                  b.lines(1, 7, [&](int i) { return b.L() - b.l(i); })}},
                {"R1 R*", {}}};
    e.merge_index = 3;
    auto g = b.lines({-b.w(7)});
    for (auto& m : b.lines(1, 7, [&](int i) { return b.L() - b.l(i); })) g.push_back(m);
    e.expected = {{CatalogBuilder::bundle("E7", 2, b.L() + b.w(7), half)},
                  {CatalogBuilder::bundle("T7", 2, b.L(), three_halves)},
                  g};
    e.equivalent_words = {"R1 L3 L3 L2 R*"};
    out.push_back(e);
  }
  {
    CatalogBuilder b(7);
    CatalogEntry e;
    e.id = "7.2";
    e.surface = b.s;
    e.seed_text = "(L[4..7](-1), tau3)";
    auto t3 = pullback(prior("3"), b.s);
    e.seed = b.collection({torsion_block(b.s, 4, 7, -1), t3[0], t3[1], t3[2]});
    e.stages = {{"R1 L3 L*",
                 {b.lines({b.L() + b.w(7), b.w(7) - b.L() - b.w(3)}), b.lines({DivisorClass::zero(b.s)}),
                  b.lines(4, 7, [&](int i) { return b.l(i); }),
                  b.lines(1, 3, [&](int i) { return b.L() - b.l(i); })}},
                {"R1 R*", {}}};
    e.merge_index = 3;
    auto g = b.lines({-b.w(7)});
    for (auto& m : b.lines(1, 3, [&](int i) { return b.L() - b.l(i); })) g.push_back(m);
    e.expected = {{CatalogBuilder::bundle("E7", 2, b.L() + b.w(7), half),
                   CatalogBuilder::bundle("E'7", 2, b.w(7) - b.L() - b.w(3), half)},
                  b.lines(4, 7, [&](int i) { return b.l(i); }),
                  g};
    out.push_back(e);
  }
  {
    CatalogBuilder b(7);
    CatalogEntry e;
    e.id = "7.3";
    e.surface = b.s;
    e.seed_text = "(L[7..7](-1), tau6.1)";
    auto t = pullback(prior("6.1"), b.s);
    e.seed = b.collection({torsion_block(b.s, 7, 7, -1), t[0], t[1], t[2]});
    e.stages = {{"R1", {}}, {"R*", {}}};
    e.merge_index = 3;
    auto g = b.lines({b.L(), 2 * b.L() - b.sum(1, 3)});
    for (auto& m : b.lines(4, 7, [&](int i) { return b.l(i) - b.w(7); })) g.push_back(m);
    e.expected = {{CatalogBuilder::bundle("E''7", 3, b.sum(4, 7), four_thirds)},
                  b.lines(1, 3, [&](int i) { return b.L() - b.l(i); }),
                  g};
    out.push_back(e);
  }
  {
    CatalogBuilder b(8);
    CatalogEntry e;
    e.id = "8.1";
    e.surface = b.s;
    e.seed_text = "(O(-2l), O(-l), O, L[1..8])";
    auto t = twist(pullback(tau0(), b.s), -b.L());
    e.seed = b.collection({t[0], t[1], t[2], torsion_block(b.s, 1, 8, 0)});
    e.stages = {{"R1 L3 L*",
                 {b.lines({b.w(8)}), b.lines({-b.L()}),
                  {CatalogBuilder::bundle("T(-2)", 2, -b.L(), rational(-3, 2))},
                  b.lines(1, 8, [&](int i) { return -b.l(i); })}},
                {"L1 L2", {}}};
    e.merge_index = 3;
    auto g = b.lines({b.w(8)});
    for (auto& m : b.lines(1, 8, [&](int i) { return -b.l(i); })) g.push_back(m);
    e.expected = {{CatalogBuilder::bundle("E8", 3, 2 * b.w(8) - b.L(), rational(-5, 3))},
                  {CatalogBuilder::bundle("F8", 3, b.w(8) - b.L(), rational(-4, 3))},
                  g};
    out.push_back(e);
  }
  {
    CatalogBuilder b(8);
    CatalogEntry e;
    e.id = "8.2";
    e.surface = b.s;
    e.seed_text = "(L[4..8](-1), tau3)";
    auto t3 = pullback(prior("3"), b.s);
    e.seed = b.collection({torsion_block(b.s, 4, 8, -1), t3[0], t3[1], t3[2]});
    e.stages = {{"L3 L3",
                 {b.torsions(4, 8, -1), b.lines({DivisorClass::zero(b.s)}),
                  {CatalogBuilder::bundle("T8", 2, b.L(), three_halves),
                   CatalogBuilder::bundle("T'8", 2, -b.w(3) - b.L(), three_halves)},
                  b.lines(1, 3, [&](int i) { return b.L() - b.l(i); })}},
                {"R1 R1 R*", {}}};
    e.merge_index = 3;
    auto g = b.lines(4, 8, [&](int i) { return b.l(i) - b.w(8); });
    for (auto& m : b.lines(1, 3, [&](int i) { return b.L() - b.l(i); })) g.push_back(m);
    e.expected = {{CatalogBuilder::bundle("E'8", 4, b.sum(4, 8), rational(5, 4))},
                  {CatalogBuilder::bundle("T8", 2, b.L(), three_halves),
                   CatalogBuilder::bundle("T'8", 2, -b.w(3) - b.L(), three_halves)},
                  g};
    out.push_back(e);
  }
  {
    CatalogBuilder b(8);
    CatalogEntry e;
    e.id = "8.3";
    e.surface = b.s;
    e.seed_text = "(L[7..8](-1), tau6.1)";
    auto t = pullback(prior("6.1"), b.s);
    e.seed = b.collection({torsion_block(b.s, 7, 8, -1), t[0], t[1], t[2]});
    e.stages = {{"R1 L3", {}}, {"R*", {}}};
    e.merge_index = 3;
    auto g = b.lines(4, 6, [&](int i) { return b.l(i) - b.w(8); });
    for (auto& m : b.lines(1, 3, [&](int i) { return b.L() - b.l(i); })) g.push_back(m);
    e.expected = {{CatalogBuilder::bundle("s*E''7", 3, b.sum(4, 7), four_thirds),
                   CatalogBuilder::bundle("E''8", 3, b.sum(4, 6) + b.l(8), four_thirds)},
                  {CatalogBuilder::bundle("T8", 2, b.L(), three_halves),
                   CatalogBuilder::bundle("T'8", 2, -b.w(3) - b.L(), three_halves),
                   CatalogBuilder::bundle("T''8", 2, b.w(6) - b.w(3), three_halves)},
                  g};
    out.push_back(e);
  }
  {
    CatalogBuilder b(8);
    CatalogEntry e;
    e.id = "8.4";
    e.surface = b.s;
    e.seed_text = "(tau3, L[4..8])";
    auto t3 = pullback(prior("3"), b.s);
    e.seed = b.collection({t3[0], t3[1], t3[2], torsion_block(b.s, 4, 8, 0)});
    e.stages = {{"L2 R1 L3 R*", {}}};
    e.merge_index = 3;
    std::vector<ExpectedMember> f;
    for (int i = 4; i <= 8; ++i)
      f.push_back(CatalogBuilder::bundle("F" + std::to_string(i) + "8", 2, -b.w(3) - b.l(i), rational(5, 2)));
    auto g = b.lines({b.L(), 2 * b.L() - b.sum(1, 3)});
    for (auto& m : b.lines(1, 3, [&](int i) { return b.L() - b.l(i) - b.w(8); })) g.push_back(m);
    e.expected = {{CatalogBuilder::bundle("E'''8", 5, -2 * b.w(3), rational(12, 5))}, f, g};
    e.second_solution_word = "L2 L1 L1";
    out.push_back(e);
  }
  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> all = detail::make_catalog();
  return all;
}

inline std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : equations()) ids.push_back(e.id);
  return ids;
}

inline const CatalogEntry& catalog_entry(std::string_view id) {
  if (!id.empty() && (id[0] == 'x' || id[0] == 'X')) id.remove_prefix(1);
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw user_error("no catalog entry '" + std::string(id) + "'");
}

inline BlockCollection build(std::string_view id, int solution = 0) {
  static std::mutex mu;
  static std::map<std::string, BlockCollection> cache;
  const auto& e = catalog_entry(id);
  BlockCollection base;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e.id);
    if (it == cache.end()) it = cache.emplace(e.id, detail::run_entry(e)).first;
    base = it->second;
  }
  if (solution == 0) return base;
  if (solution != 1 || e.second_solution_word.empty())
    throw user_error("equation " + e.id + " has no minimum solution #" + std::to_string(solution));
  return apply_word(base, e.second_solution_word);
}

struct CatalogCheck {
  std::string what;
  bool ok = false;
  std::string detail;
};

struct EntryReport {
  std::string id;
  std::vector<CatalogCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CatalogCheck& c) { return c.ok; });
  }
};

namespace detail {

inline std::string describe(const KClass& k) {
  std::ostringstream os;
  os << k;
  return os.str();
}

// Matches expected members against blocks, ignoring order inside a block.
inline void match_blocks(const BlockCollection& c, const ExpectedBlocks& expected, const std::string& where,
                         std::vector<CatalogCheck>& out) {
  if (expected.empty()) return;
  out.push_back({where + ": block lengths", c.size() == expected.size(), ""});
  if (c.size() != expected.size()) return;
  for (std::size_t bi = 0; bi < expected.size(); ++bi) {
    const auto& blk = c[bi];
    bool sizes = blk.size() == expected[bi].size();
    out.push_back({where + ": block " + std::to_string(bi + 1) + " has " + std::to_string(expected[bi].size()) +
                       " members",
                   sizes, "found " + std::to_string(blk.size())});
    std::vector<bool> used(blk.size(), false);
    for (const auto& em : expected[bi]) {
      std::string name = em.label.empty() ? "member" : em.label;
      std::ostringstream want;
      want << "r=" << em.rank << " c1=" << em.c1;
      if (em.ch2x2) want << " 2ch2=" << *em.ch2x2;
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < blk.size() && !hit; ++k) {
        if (used[k]) continue;
        const auto& m = blk[k];
        if (m.rank() == em.rank && m.c1() == em.c1 && (!em.ch2x2 || m.ch2x2() == *em.ch2x2)) hit = k;
      }
      out.push_back({where + ": block " + std::to_string(bi + 1) + " contains " + name + " " + want.str(),
                     hit.has_value(), ""});
      if (!hit) continue;
      used[*hit] = true;
      if (em.mu) {
        const auto sl = slope(blk[*hit]);
        out.push_back({where + ": mu(" + name + ") = " + to_string(*em.mu), !sl.infinite && sl.value == *em.mu,
                       "found " + sl.str()});
      }
    }
  }
}

}  // namespace detail

inline EntryReport verify_entry(std::string_view id) {
  const auto& e = catalog_entry(id);
  EntryReport rep;
  rep.id = e.id;
  auto& checks = rep.checks;
  const auto& eq = equation(e.id);

  BlockCollection c = e.seed;
  checks.push_back({"seed is complete", is_complete(c), ""});
  try {
    for (std::size_t i = 0; i < e.stages.size(); ++i) {
      c = apply_word(c, e.stages[i].word);
      detail::match_blocks(c, e.stages[i].expected, "after '" + e.stages[i].word + "'", checks);
    }
    if (e.merge_index > 0) c = merge_blocks(c, e.merge_index);
  } catch (const std::exception& err) {
    checks.push_back({"construction runs", false, err.what()});
    return rep;
  }
  for (const auto& alt : e.equivalent_words) {
    BlockCollection a = apply_word(e.seed, alt);
    if (e.merge_index > 0) a = merge_blocks(a, e.merge_index);
    checks.push_back({"word '" + alt + "' gives the same collection", a == c, ""});
  }

  auto check_minimum = [&](const BlockCollection& col, const Solution& want, const std::string& tag) {
    validate_collection(col);
    checks.push_back({tag + "validates", true, ""});
    checks.push_back({tag + "is complete", is_complete(col), ""});
    bool positive = true;
    for (integer r : col.ranks()) positive = positive && r > 0;
    checks.push_back({tag + "all ranks positive", positive, ""});
    const auto t = col.type();
    const Weights w{t[0], t[1], t[2]};
    const Solution got{col.ranks()[0], col.ranks()[1], col.ranks()[2]};
    checks.push_back({tag + "type " + to_string(Solution{w[0], w[1], w[2]}) + " matches equation " + eq.id,
                      w == eq.weights(), ""});
    checks.push_back({tag + "ranks " + to_string(got) + " = minimum solution " + to_string(want), got == want, ""});
    checks.push_back({tag + "Markov-type equation holds", check_weighted(w, eq.coeff, got), ""});
    auto r = abc(col);
    checks.push_back({tag + "abc identity (" + std::to_string(r.a) + "," + std::to_string(r.b) + "," +
                          std::to_string(r.c) + ")",
                      r.a > 0 && r.b > 0 && r.c > 0, ""});
  };

  const auto mins = minimum_solutions(eq);
  checks.push_back({"built collection equals build()", c == build(e.id), ""});
  try {
    check_minimum(c, mins[0], "");
    detail::match_blocks(c, e.expected, "final", checks);
    if (!e.second_solution_word.empty()) {
      checks.push_back({"two minimum solutions", mins.size() == 2, ""});
      check_minimum(build(e.id, 1), mins.at(1), "second solution via '" + e.second_solution_word + "': ");
    }
  } catch (const std::exception& err) {
    checks.push_back({"final checks run", false, err.what()});
  }
  return rep;
}

}  // namespace triblock
