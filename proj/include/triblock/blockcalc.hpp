#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "triblock/kclass.hpp"

namespace triblock {

// Members share rank and degree and are mutually orthogonal under chi.
class Block {
 public:
  Block() = default;
  explicit Block(std::vector<KClass> members) : members_(std::move(members)) {}

  const std::vector<KClass>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const KClass& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  integer rank() const { return members_.front().rank(); }
  integer degree() const { return triblock::degree(members_.front()); }
  const SurfaceId& surface() const { return members_.front().surface(); }

  // Members in lexicographic order; blocks are unordered for equivalence purposes.
  Block sorted() const {
    auto m = members_;
    std::sort(m.begin(), m.end());
    return Block(std::move(m));
  }

  friend bool operator==(const Block&, const Block&) = default;

 private:
  std::vector<KClass> members_;
};

inline Block validate_block(std::vector<KClass> members) {
  if (members.empty()) throw validation_error("empty block");
  const auto s = members.front().surface();
  const auto k = canonical_class(s);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& e = members[i];
    if (!(e.surface() == s)) throw validation_error("block members live on different surfaces");
    if (!is_exceptional(e))
      throw validation_error("member " + std::to_string(i + 1) + " is not an exceptional class");
  }
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].rank() != members[0].rank()) throw validation_error("ranks differ inside a block");
    if (degree(members[i]) != degree(members[0])) throw validation_error("degrees differ inside a block");
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if (chi(members[i], members[j]) != 0)
        throw validation_error("nonzero chi between block members " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1));
      const auto c = members[i].c1() - members[j].c1();
      if (self_intersection(c) != -2 || intersect(c, k) != 0)
        throw validation_error("c1 difference inside a block is not a root");
    }
  return Block(std::move(members));
}

// Common value chi(E_j, F_k) over all members.
inline integer chi_block(const Block& e, const Block& f) {
  const integer v = chi(e[0], f[0]);
  for (const auto& a : e)
    for (const auto& b : f)
      if (chi(a, b) != v) throw validation_error("not a two-block exceptional collection");
  return v;
}

class BlockCollection {
 public:
  BlockCollection() = default;
  BlockCollection(SurfaceId s, std::vector<Block> blocks) : surface_(s), blocks_(std::move(blocks)) {}

  const SurfaceId& surface() const { return surface_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<Block>& blocks() { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  std::vector<int> type() const {
    std::vector<int> t;
    for (const auto& b : blocks_) t.push_back(static_cast<int>(b.size()));
    return t;
  }
  std::vector<integer> ranks() const {
    std::vector<integer> r;
    for (const auto& b : blocks_) r.push_back(b.rank());
    return r;
  }
  std::vector<KClass> flatten() const {
    std::vector<KClass> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  friend bool operator==(const BlockCollection&, const BlockCollection&) = default;

 private:
  SurfaceId surface_;
  std::vector<Block> blocks_;
};

inline std::ostream& operator<<(std::ostream& os, const BlockCollection& c) {
  os << c.surface() << ' ';
  for (std::size_t i = 0; i < c.size(); ++i) {
    os << (i ? " | " : "");
    for (std::size_t j = 0; j < c[i].size(); ++j) os << (j ? " " : "") << c[i][j];
  }
  return os;
}

// Throws validation_error naming the first violated invariant.
inline void validate_collection(const BlockCollection& c) {
  if (c.size() == 0) throw validation_error("collection has no blocks");
  for (std::size_t i = 0; i < c.size(); ++i) {
    try {
      validate_block(c[i].members());
    } catch (const validation_error& e) {
      throw validation_error("block " + std::to_string(i + 1) + ": " + e.what());
    }
    if (!(c[i].surface() == c.surface())) throw validation_error("block on the wrong surface");
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      for (const auto& a : c[j])
        for (const auto& b : c[i])
          if (chi(a, b) != 0)
            throw validation_error("not semiorthogonal: chi(block " + std::to_string(j + 1) + ", block " +
                                   std::to_string(i + 1) + ") != 0");
      chi_block(c[i], c[j]);
    }
}

inline BlockCollection make_collection(SurfaceId s, const std::vector<std::vector<KClass>>& blocks) {
  std::vector<Block> bs;
  for (const auto& b : blocks) bs.emplace_back(b);
  BlockCollection c(s, std::move(bs));
  validate_collection(c);
  return c;
}

namespace detail {

using boost::multiprecision::cpp_int;

// Fraction-free Gaussian elimination.
inline cpp_int bareiss_determinant(std::vector<std::vector<cpp_int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  cpp_int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

// Coordinates (rank, c1, chi(O,E)) form an integral basis of numerical K0.
inline std::vector<integer> k0_coordinates(const KClass& e) {
  std::vector<integer> row{e.rank()};
  for (integer v : e.c1().coords()) row.push_back(v);
  row.push_back(chi(structure_sheaf(e.surface()), e));
  return row;
}

inline bool is_complete(const std::vector<KClass>& classes) {
  if (classes.empty()) return false;
  const auto s = classes.front().surface();
  if (static_cast<int>(classes.size()) != s.k0_rank()) return false;
  std::vector<std::vector<detail::cpp_int>> m;
  for (const auto& e : classes) {
    std::vector<detail::cpp_int> row;
    for (integer v : k0_coordinates(e)) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  const auto d = detail::bareiss_determinant(std::move(m));
  return d == 1 || d == -1;
}

inline bool is_complete(const BlockCollection& c) { return is_complete(c.flatten()); }

enum class Side { Left, Right };
enum class MutationKind { Division, Recoil, Extension };

struct MutationType {
  MutationKind kind = MutationKind::Division;
  bool trivial = false;
  friend bool operator==(const MutationType&, const MutationType&) = default;
};

inline std::string to_string(MutationKind k) {
  switch (k) {
    case MutationKind::Division: return "division";
    case MutationKind::Recoil: return "recoil";
    case MutationKind::Extension: return "extension";
  }
  return "?";
}

struct MutationResult {
  BlockCollection collection;
  MutationType type;
};

namespace detail {

inline KClass block_sum(const Block& b) {
  KClass s(0, DivisorClass::zero(b.surface()), 0);
  for (const auto& e : b) s += e;
  return s;
}

inline void check_sheaf(const KClass& e) {
  ensure(e.rank() > 0 || (e.rank() == 0 && degree(e) == 1),
         "mutation produced a class that is not a sheaf class");
}

}  // namespace detail

// i is 1-based and mutates the pair of blocks (i, i+1).
inline MutationResult block_mutation(const BlockCollection& c, int i, Side side, bool revalidate = true) {
  const int m = static_cast<int>(c.size());
  if (i < 1 || i >= m)
    throw user_error("mutation index " + std::to_string(i) + " out of range for " + std::to_string(m) +
                     " blocks");
  const Block& e = c[i - 1];
  const Block& f = c[i];
  const integer x = chi_block(e, f);
  const integer alpha = static_cast<integer>(e.size());
  const integer beta = static_cast<integer>(f.size());
  MutationType type;
  std::vector<KClass> moved;

  if (x == 0) {
    type = {MutationKind::Recoil, true};
    moved = side == Side::Left ? f.members() : e.members();
  } else if (side == Side::Left) {
    const KClass sum = detail::block_sum(e);
    const bool division = x > 0 && alpha * x * e.rank() > f.rank();
    type.kind = division ? MutationKind::Division : (x > 0 ? MutationKind::Recoil : MutationKind::Extension);
    for (const auto& fj : f) moved.push_back(division ? x * sum - fj : fj - x * sum);
  } else {
    const KClass sum = detail::block_sum(f);
    const bool division = x > 0 && e.rank() <= beta * x * f.rank();
    type.kind = division ? MutationKind::Division : (x > 0 ? MutationKind::Recoil : MutationKind::Extension);
    for (const auto& ei : e) moved.push_back(division ? x * sum - ei : ei - x * sum);
  }
  for (const auto& v : moved) detail::check_sheaf(v);

  auto blocks = c.blocks();
  if (side == Side::Left) {
    blocks[i - 1] = Block(std::move(moved));
    blocks[i] = e;
  } else {
    blocks[i - 1] = f;
    blocks[i] = Block(std::move(moved));
  }
  BlockCollection out(c.surface(), std::move(blocks));
  if (revalidate) {
    try {
      validate_collection(out);
    } catch (const validation_error& err) {
      throw invariant_violation(std::string("mutation broke the collection: ") + err.what());
    }
  }
  return {std::move(out), type};
}

struct Move {
  Side side = Side::Right;
  int index = 1;
  friend bool operator==(const Move&, const Move&) = default;
};

using BraidWord = std::vector<Move>;

// Whitespace or comma separated tokens, applied left to right: "R1 L2 R*".
// R* applies R1, R2, R3 in turn; L* applies L3, L2, L1.
inline BraidWord parse_word(std::string_view text) {
  BraidWord w;
  std::size_t p = 0;
  auto is_sep = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == ','; };
  while (p < text.size()) {
    if (is_sep(text[p])) {
      ++p;
      continue;
    }
    std::size_t q = p;
    while (q < text.size() && !is_sep(text[q])) ++q;
    const std::string tok(text.substr(p, q - p));
    p = q;
    if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R'))
      throw user_error("bad braid word token '" + tok + "'");
    const Side side = tok[0] == 'L' ? Side::Left : Side::Right;
    if (tok == "R*") {
      for (int k = 1; k <= 3; ++k) w.push_back({Side::Right, k});
      continue;
    }
    if (tok == "L*") {
      for (int k = 3; k >= 1; --k) w.push_back({Side::Left, k});
      continue;
    }
    int idx = 0;
    for (std::size_t k = 1; k < tok.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(tok[k])) || idx > 1000)
        throw user_error("bad braid word token '" + tok + "'");
      idx = idx * 10 + (tok[k] - '0');
    }
    if (idx < 1) throw user_error("bad braid word token '" + tok + "'");
    w.push_back({side, idx});
  }
  return w;
}

inline std::string format_word(const BraidWord& w) {
  std::string s;
  for (const auto& mv : w) {
    if (!s.empty()) s += ' ';
    s += (mv.side == Side::Left ? 'L' : 'R');
    s += std::to_string(mv.index);
  }
  return s;
}

inline BraidWord inverse(const BraidWord& w) {
  BraidWord out(w.rbegin(), w.rend());
  for (auto& mv : out) mv.side = mv.side == Side::Left ? Side::Right : Side::Left;
  return out;
}

inline BlockCollection apply_word(BlockCollection c, const BraidWord& w, std::vector<MutationType>* types = nullptr) {
  for (const auto& mv : w) {
    auto r = block_mutation(c, mv.index, mv.side);
    if (types) types->push_back(r.type);
    c = std::move(r.collection);
  }
  return c;
}

inline BlockCollection apply_word(const BlockCollection& c, std::string_view w) {
  return apply_word(c, parse_word(w));
}

inline BlockCollection twist(const BlockCollection& c, const DivisorClass& d) {
  std::vector<Block> bs;
  for (const auto& b : c.blocks()) {
    std::vector<KClass> m;
    for (const auto& e : b) m.push_back(twist(e, d));
    bs.emplace_back(std::move(m));
  }
  return BlockCollection(c.surface(), std::move(bs));
}

inline BlockCollection embed(const BlockCollection& c, SurfaceId into) {
  std::vector<Block> bs;
  for (const auto& b : c.blocks()) {
    std::vector<KClass> m;
    for (const auto& e : b) m.push_back(embed(e, into));
    bs.emplace_back(std::move(m));
  }
  BlockCollection out(into, std::move(bs));
  validate_collection(out);
  return out;
}

// Joins blocks i and i+1 (1-based); they must be orthogonal both ways.
inline BlockCollection merge_blocks(const BlockCollection& c, int i) {
  if (i < 1 || i >= static_cast<int>(c.size())) throw user_error("merge index out of range");
  const Block& a = c[i - 1];
  const Block& b = c[i];
  for (const auto& x : a)
    for (const auto& y : b)
      if (chi(x, y) != 0 || chi(y, x) != 0)
        throw validation_error("blocks " + std::to_string(i) + " and " + std::to_string(i + 1) +
                               " are not orthogonal");
  auto bs = c.blocks();
  std::vector<KClass> joined = a.members();
  joined.insert(joined.end(), b.begin(), b.end());
  bs[i - 1] = Block(std::move(joined));
  bs.erase(bs.begin() + i);
  BlockCollection out(c.surface(), std::move(bs));
  validate_collection(out);
  return out;
}

// k > 0 moves the first block to the end twisted by -K; k < 0 the reverse.
// Each step is checked against R1 R2 .. R(m-1) or L(m-1) .. L1.
inline BlockCollection helix_shift(const BlockCollection& c, int k) {
  const int m = static_cast<int>(c.size());
  if (m < 2) throw user_error("helix shift needs at least two blocks");
  const auto kc = canonical_class(c.surface());
  BraidWord fwd;
  for (int i = 1; i < m; ++i) fwd.push_back({Side::Right, i});
  BlockCollection cur = c;
  for (; k != 0; k += (k > 0 ? -1 : 1)) {
    auto bs = cur.blocks();
    if (k > 0) {
      Block first = bs.front();
      bs.erase(bs.begin());
      bs.push_back(twist(BlockCollection(c.surface(), {first}), -kc)[0]);
    } else {
      Block last = bs.back();
      bs.pop_back();
      bs.insert(bs.begin(), twist(BlockCollection(c.surface(), {last}), kc)[0]);
    }
    BlockCollection next(c.surface(), std::move(bs));
    ensure(apply_word(cur, k > 0 ? fwd : inverse(fwd)) == next, "helix shift disagrees with block mutations");
    cur = std::move(next);
  }
  return cur;
}

// Dual classes with chi(A_i, dual[j]) = delta_ij, by iterated left mutation.
inline std::vector<KClass> dual_basis(const BlockCollection& c) {
  if (!is_complete(c)) throw user_error("dual basis needs a complete collection");
  const auto a = c.flatten();
  const std::size_t n = a.size();
  std::vector<KClass> dual;
  for (std::size_t j = 0; j < n; ++j) {
    KClass x = a[j];
    for (std::size_t k = j; k-- > 0;) x -= chi(a[k], x) * a[k];
    dual.push_back(x);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ensure(chi(a[i], dual[j]) == (i == j ? 1 : 0), "dual basis is not dual");
  // The last block pairs with its own twist by K (Serre duality).
  const auto kc = canonical_class(c.surface());
  const std::size_t last = n - c.blocks().back().size();
  for (std::size_t j = last; j < n; ++j) ensure(dual[j] == twist(a[j], kc), "last block dual is not G(K)");
  return dual;
}

enum class Additive { Rank, Degree };

inline integer evaluate(Additive s, const KClass& e) { return s == Additive::Rank ? e.rank() : degree(e); }

inline rational pairing(Additive s, Additive t, const BlockCollection& c) {
  const auto a = c.flatten();
  const auto d = dual_basis(c);
  rational v(0);
  for (std::size_t i = 0; i < a.size(); ++i) v += evaluate(s, a[i]) * evaluate(t, d[i]);
  return v;
}

struct InterblockChi {
  integer a = 0, b = 0, c = 0;
  friend bool operator==(const InterblockChi&, const InterblockChi&) = default;
};

// a = chi(F,G), b = chi(G(K),E), c = chi(E,F) on a complete (E,F,G).
inline InterblockChi abc(const BlockCollection& col) {
  if (col.size() != 3 || !is_complete(col)) throw user_error("abc needs a complete 3-block collection");
  const auto kc = canonical_class(col.surface());
  const Block& e = col[0];
  const Block& f = col[1];
  const Block& g = col[2];
  const BlockCollection gk = twist(BlockCollection(col.surface(), {g}), kc);
  InterblockChi r{chi_block(f, g), chi_block(gk[0], e), chi_block(e, f)};
  const integer al = e.size(), be = f.size(), ga = g.size();
  const integer x = e.rank(), y = f.rank(), z = g.rank();
  const integer k2 = col.surface().k_squared();
  ensure(r.c * r.c * al * be == z * z * k2 * ga, "closed form for c fails");
  ensure(r.a * r.a * be * ga == x * x * k2 * al, "closed form for a fails");
  ensure(r.b * r.b * al * ga == y * y * k2 * be, "closed form for b fails");
  const rational lhs = rational(r.a * r.a, al) + rational(r.b * r.b, be) + rational(r.c * r.c, ga);
  ensure(lhs == rational(r.a * r.b * r.c), "a^2/alpha + b^2/beta + c^2/gamma != abc");
  return r;
}

// D with twist(c1, D) == c2 up to reordering inside blocks.
inline std::optional<DivisorClass> equivalent_up_to_twist(const BlockCollection& c1, const BlockCollection& c2) {
  if (!(c1.surface() == c2.surface()) || c1.type() != c2.type() || c1.ranks() != c2.ranks()) return std::nullopt;
  for (integer r : c1.ranks())
    if (r <= 0) return std::nullopt;
  auto sorted = [](const BlockCollection& c) {
    std::vector<Block> bs;
    for (const auto& b : c.blocks()) bs.push_back(b.sorted());
    return BlockCollection(c.surface(), std::move(bs));
  };
  const auto target = sorted(c2);
  const KClass& anchor = c1[0][0];
  const integer r = anchor.rank();
  for (const auto& cand : c2[0]) {
    const auto diff = cand.c1() - anchor.c1();
    std::vector<integer> d;
    bool ok = true;
    for (integer v : diff.coords()) {
      if (v % r != 0) {
        ok = false;
        break;
      }
      d.push_back(v / r);
    }
    if (!ok) continue;
    DivisorClass dc(c1.surface(), std::move(d));
    if (sorted(twist(c1, dc)) == target) return dc;
  }
  return std::nullopt;
}

}  // namespace triblock
