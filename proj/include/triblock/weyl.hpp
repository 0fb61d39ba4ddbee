#pragma once

#include <algorithm>
#include <bitset>
#include <functional>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

#include "triblock/blockcalc.hpp"
#include "triblock/catalog.hpp"
#include "triblock/markov.hpp"

namespace triblock {

// Integer matrix on Picard coordinates; column j is the image of basis vector j.
class LatticeAutomorphism {
 public:
  LatticeAutomorphism() = default;
  LatticeAutomorphism(SurfaceId s, std::vector<std::vector<integer>> m) : surface_(s), m_(std::move(m)) {
    const std::size_t n = s.picard_rank();
    bool square = m_.size() == n;
    for (const auto& row : m_) square = square && row.size() == n;
    if (!square) throw user_error("automorphism matrix has the wrong shape");
    ensure(preserves_form(), "matrix does not preserve the intersection form");
    ensure(apply(canonical_class(s)) == canonical_class(s), "matrix does not fix K");
  }

  static LatticeAutomorphism identity(SurfaceId s) {
    const std::size_t n = s.picard_rank();
    std::vector<std::vector<integer>> m(n, std::vector<integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return LatticeAutomorphism(s, std::move(m));
  }

  // s(x) = x + (x.a) a for a root a.
  static LatticeAutomorphism reflection(const DivisorClass& root) {
    const auto s = root.surface();
    if (self_intersection(root) != -2 || intersect(root, canonical_class(s)) != 0)
      throw user_error("reflection needs a root");
    const std::size_t n = s.picard_rank();
    std::vector<std::vector<integer>> m(n, std::vector<integer>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = DivisorClass::basis(s, static_cast<int>(j));
      const auto img = e + intersect(e, root) * root;
      for (std::size_t i = 0; i < n; ++i) m[i][j] = img[i];
    }
    return LatticeAutomorphism(s, std::move(m));
  }

  static LatticeAutomorphism quadric_swap() {
    return LatticeAutomorphism(SurfaceId::quadric(), {{0, 1}, {1, 0}});
  }

  const SurfaceId& surface() const { return surface_; }
  const std::vector<std::vector<integer>>& matrix() const { return m_; }

  DivisorClass apply(const DivisorClass& d) const {
    if (!(d.surface() == surface_)) throw user_error("incompatible lattices");
    std::vector<integer> out(m_.size(), 0);
    for (std::size_t i = 0; i < m_.size(); ++i)
      for (std::size_t j = 0; j < m_.size(); ++j) out[i] += m_[i][j] * d[j];
    return DivisorClass(surface_, std::move(out));
  }

  // (a * b)(x) = a(b(x))
  friend LatticeAutomorphism operator*(const LatticeAutomorphism& a, const LatticeAutomorphism& b) {
    const std::size_t n = a.m_.size();
    std::vector<std::vector<integer>> m(n, std::vector<integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) m[i][j] += a.m_[i][k] * b.m_[k][j];
    return LatticeAutomorphism(a.surface_, std::move(m));
  }

  bool preserves_form() const {
    const int n = surface_.picard_rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto ei = DivisorClass::basis(surface_, i), ej = DivisorClass::basis(surface_, j);
        if (intersect(apply(ei), apply(ej)) != intersect(ei, ej)) return false;
      }
    return true;
  }

  friend bool operator==(const LatticeAutomorphism&, const LatticeAutomorphism&) = default;

 private:
  SurfaceId surface_;
  std::vector<std::vector<integer>> m_;
};

inline std::vector<DivisorClass> simple_roots(SurfaceId s) {
  std::vector<DivisorClass> roots;
  if (s.is_quadric()) return roots;
  const int r = s.blowups();
  if (r >= 3) roots.push_back(ell(s, 0) - ell(s, 1) - ell(s, 2) - ell(s, 3));
  for (int i = 1; i < r; ++i) roots.push_back(ell(s, i) - ell(s, i + 1));
  return roots;
}

// Generators of the Weyl group; the swap for the quadric, none for P2 and X1.
inline std::vector<LatticeAutomorphism> simple_reflections(SurfaceId s) {
  if (s.is_quadric()) return {LatticeAutomorphism::quadric_swap()};
  std::vector<LatticeAutomorphism> out;
  for (const auto& a : simple_roots(s)) out.push_back(LatticeAutomorphism::reflection(a));
  return out;
}

inline KClass apply(const LatticeAutomorphism& g, const KClass& e) {
  return KClass(e.rank(), g.apply(e.c1()), e.ch2x2());
}

inline BlockCollection apply_to_collection(const LatticeAutomorphism& g, const BlockCollection& c,
                                           bool revalidate = true) {
  if (!(g.surface() == c.surface())) throw user_error("automorphism and collection live on different surfaces");
  std::vector<Block> bs;
  for (const auto& b : c.blocks()) {
    std::vector<KClass> m;
    for (const auto& e : b) m.push_back(apply(g, e));
    bs.emplace_back(std::move(m));
  }
  BlockCollection out(c.surface(), std::move(bs));
  if (revalidate) {
    try {
      validate_collection(out);
    } catch (const validation_error& err) {
      throw invariant_violation(std::string("Weyl image is not a collection: ") + err.what());
    }
  }
  return out;
}

// Closure of one class under the generators.
inline std::vector<DivisorClass> class_orbit(const DivisorClass& d) {
  const auto gens = simple_reflections(d.surface());
  std::vector<DivisorClass> seen{d};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& g : gens) {
      auto img = g.apply(seen[i]);
      if (std::find(seen.begin(), seen.end(), img) == seen.end()) seen.push_back(img);
    }
  std::sort(seen.begin(), seen.end());
  return seen;
}

// Twist-normal form: c1 of all members after twisting so that an anchor in block 1
// has coordinates in [0, r1), members sorted inside blocks, minimised over anchors.
class NormalizedCollection {
 public:
  using Key = std::vector<std::int32_t>;

  NormalizedCollection() = default;

  static NormalizedCollection of(const BlockCollection& c) {
    NormalizedCollection n;
    n.surface_ = c.surface();
    n.type_ = c.type();
    n.ranks_ = c.ranks();
    for (integer r : n.ranks_)
      if (r <= 0) throw user_error("twist-normal form needs positive ranks");
    Key raw;
    for (const auto& b : c.blocks())
      for (const auto& e : b)
        for (integer v : e.c1().coords()) raw.push_back(static_cast<std::int32_t>(v));
    n.key_ = n.normalize(raw);
    return n;
  }

  const Key& key() const { return key_; }
  const SurfaceId& surface() const { return surface_; }

  // Rebuilds the representative; 2ch2 follows from exceptionality.
  BlockCollection collection() const { return to_collection(key_); }

  BlockCollection to_collection(const Key& k) const {
    const std::size_t p = surface_.picard_rank();
    std::vector<Block> bs;
    std::size_t pos = 0;
    for (std::size_t b = 0; b < type_.size(); ++b) {
      std::vector<KClass> m;
      for (int j = 0; j < type_[b]; ++j) {
        std::vector<integer> c(k.begin() + pos, k.begin() + pos + p);
        pos += p;
        m.push_back(exceptional_class(ranks_[b], DivisorClass(surface_, std::move(c))));
      }
      bs.emplace_back(std::move(m));
    }
    return BlockCollection(surface_, std::move(bs));
  }

  Key apply(const LatticeAutomorphism& g, const Key& k) const {
    const std::size_t p = surface_.picard_rank();
    const auto& m = g.matrix();
    Key out(k.size());
    for (std::size_t base = 0; base < k.size(); base += p)
      for (std::size_t i = 0; i < p; ++i) {
        integer v = 0;
        for (std::size_t j = 0; j < p; ++j) v += m[i][j] * k[base + j];
        out[base + i] = static_cast<std::int32_t>(v);
      }
    return normalize(out);
  }

  Key normalize(const Key& raw) const {
    const std::size_t p = surface_.picard_rank();
    const integer r1 = ranks_[0];
    Key best, cur(raw.size());
    std::vector<integer> d(p);
    for (int a = 0; a < type_[0]; ++a) {
      for (std::size_t i = 0; i < p; ++i) {
        const integer v = raw[a * p + i];
        // floor division
        const integer q = v >= 0 ? v / r1 : -((-v + r1 - 1) / r1);
        d[i] = -q;
      }
      std::size_t pos = 0;
      for (std::size_t b = 0; b < type_.size(); ++b) {
        const std::size_t begin = pos;
        for (int j = 0; j < type_[b]; ++j, pos += p)
          for (std::size_t i = 0; i < p; ++i)
            cur[pos + i] = static_cast<std::int32_t>(raw[pos + i] + ranks_[b] * d[i]);
        sort_members(cur, begin, pos, p);
      }
      if (best.empty() || cur < best) best = cur;
    }
    return best;
  }

  friend bool operator==(const NormalizedCollection& a, const NormalizedCollection& b) {
    return a.surface_ == b.surface_ && a.type_ == b.type_ && a.ranks_ == b.ranks_ && a.key_ == b.key_;
  }

 private:
  static void sort_members(Key& k, std::size_t begin, std::size_t end, std::size_t p) {
    const std::size_t n = (end - begin) / p;
    if (n < 2) return;
    std::vector<std::vector<std::int32_t>> rows;
    for (std::size_t j = 0; j < n; ++j)
      rows.emplace_back(k.begin() + begin + j * p, k.begin() + begin + (j + 1) * p);
    std::sort(rows.begin(), rows.end());
    for (std::size_t j = 0; j < n; ++j) std::copy(rows[j].begin(), rows[j].end(), k.begin() + begin + j * p);
  }

  SurfaceId surface_;
  std::vector<int> type_;
  std::vector<integer> ranks_;
  Key key_;
};

namespace detail {

struct KeyHash {
  std::size_t operator()(const NormalizedCollection::Key& k) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline unsigned clamp_threads(unsigned t) { return t == 0 ? 1u : t; }

}  // namespace detail

struct OrbitOptions {
  unsigned threads = 1;
};

// Number of twist classes in the Weyl orbit of a minimum collection.
inline std::size_t orbit_count(const BlockCollection& c, OrbitOptions opt = {}) {
  validate_collection(c);
  if (c.size() != 3 || !is_complete(c)) throw user_error("orbit count needs a complete 3-block collection");
  const auto start = NormalizedCollection::of(c);
  const auto gens = simple_reflections(c.surface());
  using Key = NormalizedCollection::Key;
  std::unordered_set<Key, detail::KeyHash> seen{start.key()};
  std::vector<Key> frontier{start.key()};
  const unsigned threads = detail::clamp_threads(opt.threads);
  while (!frontier.empty()) {
    std::vector<std::vector<Key>> images(frontier.size());
    auto work = [&](std::size_t from, std::size_t to) {
      for (std::size_t i = from; i < to; ++i)
        for (const auto& g : gens) images[i].push_back(start.apply(g, frontier[i]));
    };
    if (threads == 1 || frontier.size() < 64) {
      work(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (std::size_t from = 0; from < frontier.size(); from += chunk)
        pool.emplace_back(work, from, std::min(frontier.size(), from + chunk));
      for (auto& t : pool) t.join();
    }
    std::vector<Key> next;
    for (auto& imgs : images)
      for (auto& k : imgs)
        if (seen.insert(k).second) next.push_back(std::move(k));
    frontier = std::move(next);
  }
  return seen.size();
}

// m-element sets of pairwise disjoint (-1)-classes.
inline std::size_t count_disjoint_sets(SurfaceId s, int m, unsigned threads = 1) {
  if (m < 1) throw user_error("set size must be at least 1");
  const auto curves = enumerate_classes(s, CurveKind::MinusOne);
  const std::size_t n = curves.size();
  ensure(n <= 256, "too many (-1)-classes for the bitset");
  using Bits = std::bitset<256>;
  std::vector<Bits> later(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (intersect(curves[i], curves[j]) == 0) later[i].set(j);

  std::function<std::size_t(const Bits&, int)> extend = [&](const Bits& cand, int need) -> std::size_t {
    if (need == 0) return 1;
    if (static_cast<int>(cand.count()) < need) return 0;
    std::size_t total = 0;
    for (std::size_t v = cand._Find_first(); v < n; v = cand._Find_next(v)) total += extend(cand & later[v], need - 1);
    return total;
  };

  std::vector<std::size_t> per_root(n, 0);
  auto work = [&](std::size_t from, std::size_t step) {
    for (std::size_t v = from; v < n; v += step) per_root[v] = extend(later[v], m - 1);
  };
  threads = detail::clamp_threads(threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& t : pool) t.join();
  }
  std::size_t total = 0;
  for (auto c : per_root) total += c;
  return total;
}

inline integer binomial(integer n, integer k) {
  if (k < 0 || k > n) return 0;
  integer r = 1;
  for (integer i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// N * C(n, k) = N' * #{disjoint sets of size set_size}.
struct RecursionCase {
  std::string id;
  integer n = 0;         // length of the distinguished block
  integer k = 0;         // part split off from it
  int set_size = 0;      // size of the disjoint curve sets
  std::string reference; // equation whose N plays N'
};

inline std::vector<RecursionCase> recursion_cases() {
  return {{"8.1", 9, 8, 8, "1"}, {"7.1", 8, 7, 7, "1"}, {"8.2", 8, 5, 5, "3"}, {"3", 2, 1, 3, "1"},
          {"6.2", 2, 1, 6, "1"}};
}

struct RecursionResult {
  RecursionCase rc;
  std::size_t n_value = 0, n_reference = 0, sets = 0;
  integer lhs = 0, rhs = 0;
  bool ok() const { return lhs == rhs; }
};

// N for one equation, summed over its minimum solutions.
inline std::size_t orbit_total(std::string_view id, OrbitOptions opt = {}) {
  const auto& eq = equation(id);
  std::size_t total = 0;
  for (std::size_t i = 0; i < minimum_solutions(eq).size(); ++i)
    total += orbit_count(build(eq.id, static_cast<int>(i)), opt);
  return total;
}

inline RecursionResult recursion_check(const RecursionCase& rc, OrbitOptions opt = {}) {
  RecursionResult r;
  r.rc = rc;
  r.n_value = orbit_total(rc.id, opt);
  r.n_reference = orbit_total(rc.reference, opt);
  r.sets = count_disjoint_sets(equation(rc.id).surface, rc.set_size, opt.threads);
  r.lhs = static_cast<integer>(r.n_value) * binomial(rc.n, rc.k);
  r.rhs = static_cast<integer>(r.n_reference) * static_cast<integer>(r.sets);
  return r;
}

// Number of twist classes of minimum collections in one braid orbit.
inline int c_value(std::string_view id) {
  static const std::pair<const char*, int> table[] = {
      {"1", 1},   {"2", 1},   {"3", 1},   {"4", 2},   {"5", 2},   {"6.1", 3}, {"6.2", 1},
      {"7.1", 2}, {"7.2", 2}, {"7.3", 1}, {"8.1", 1}, {"8.2", 1}, {"8.3", 1}, {"8.4", 2}};
  const auto& eq = equation(id);
  for (const auto& [k, v] : table)
    if (eq.id == k) return v;
  throw invariant_violation("no C value for equation " + eq.id);
}

inline bool verify_C(std::string_view id) {
  const auto& eq = equation(id);
  if (c_value(eq.id) == 1) return true;
  if (eq.id == "6.1") {
    const auto c = build("6.1");
    const BlockCollection shifts[3] = {c, helix_shift(c, 1), helix_shift(c, 2)};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (equivalent_up_to_twist(shifts[i], shifts[j])) return false;
    return true;
  }
  if (eq.id == "5") {
    const auto c = build("5");
    const auto d = apply_word(c, "R1 R2 R2");
    if (d.type() != c.type() || d.ranks() != c.ranks()) return false;
    return !equivalent_up_to_twist(c, d).has_value();
  }
  throw user_error("C for equation " + eq.id + " is taken as data, not verified");
}

struct OrbitRow {
  std::string id;
  SurfaceId surface;
  Weights type{};
  std::vector<std::size_t> per_solution;
  std::size_t n = 0;
  int c = 1;
  std::size_t orbits = 0;
};

inline OrbitRow orbit_row(std::string_view id, OrbitOptions opt = {}) {
  const auto& eq = equation(id);
  OrbitRow row;
  row.id = eq.id;
  row.surface = eq.surface;
  row.type = eq.weights();
  for (std::size_t i = 0; i < minimum_solutions(eq).size(); ++i)
    row.per_solution.push_back(orbit_count(build(eq.id, static_cast<int>(i)), opt));
  for (auto v : row.per_solution) row.n += v;
  row.c = c_value(eq.id);
  if (row.n % row.c != 0) throw invariant_violation("N is not divisible by C for equation " + eq.id);
  row.orbits = row.n / row.c;
  return row;
}

inline std::vector<OrbitRow> orbit_table(OrbitOptions opt = {}) {
  std::vector<OrbitRow> rows;
  for (const auto& eq : equations()) rows.push_back(orbit_row(eq.id, opt));
  return rows;
}

}  // namespace triblock
