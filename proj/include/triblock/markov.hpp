#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triblock/picard.hpp"

namespace triblock {

using Solution = std::array<integer, 3>;
using Weights = std::array<integer, 3>;

// alpha x^2 + beta y^2 + gamma z^2 = coeff xyz, coeff^2 = K^2 alpha beta gamma.
struct MarkovEquation {
  std::string id;
  integer alpha = 0, beta = 0, gamma = 0;
  integer ksq = 0;
  integer coeff = 0;
  SurfaceId surface;

  Weights weights() const { return {alpha, beta, gamma}; }
  friend bool operator==(const MarkovEquation&, const MarkovEquation&) = default;
};

inline std::string to_string(const Solution& s) {
  return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + ")";
}

inline std::string equation_text(const MarkovEquation& eq) {
  const char* v[3] = {"x^2", "y^2", "z^2"};
  std::string s;
  const auto w = eq.weights();
  for (int i = 0; i < 3; ++i) {
    if (i) s += "+";
    if (w[i] != 1) s += std::to_string(w[i]);
    s += v[i];
  }
  return s + "=" + std::to_string(eq.coeff) + "xyz";
}

namespace detail {

inline std::optional<integer> exact_sqrt(integer n) {
  if (n < 0) return std::nullopt;
  integer r = static_cast<integer>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

// Numbering of the known equations by (alpha, beta, gamma, K^2).
struct EquationLabel {
  const char* id;
  integer a, b, c, k;
};

inline constexpr EquationLabel kLabels[] = {
    {"1", 1, 1, 1, 9},   {"2", 1, 1, 2, 8},   {"3", 1, 2, 3, 6},   {"4", 1, 1, 5, 5},   {"5", 2, 2, 4, 4},
    {"6.1", 3, 3, 3, 3}, {"6.2", 1, 2, 6, 3}, {"7.1", 1, 1, 8, 2}, {"7.2", 2, 4, 4, 2}, {"7.3", 1, 3, 6, 2},
    {"8.1", 1, 1, 9, 1}, {"8.2", 1, 2, 8, 1}, {"8.3", 2, 3, 6, 1}, {"8.4", 1, 5, 5, 1},
};

}  // namespace detail

// Exhaustive search over alpha <= beta <= gamma, alpha+beta+gamma+K^2 = 12, K^2 in 1..9.
inline std::vector<MarkovEquation> enumerate_equations() {
  std::vector<MarkovEquation> found;
  for (integer k = 1; k <= 9; ++k) {
    const integer n = 12 - k;
    for (integer a = 1; a <= n; ++a)
      for (integer b = a; a + b <= n; ++b) {
        const integer c = n - a - b;
        if (c < b) continue;
        auto root = detail::exact_sqrt(k * a * b * c);
        if (!root) continue;
        MarkovEquation eq{"", a, b, c, k, *root,
                          k == 8 ? SurfaceId::quadric() : SurfaceId::plane_blowup(static_cast<int>(9 - k))};
        for (const auto& l : detail::kLabels)
          if (l.a == a && l.b == b && l.c == c && l.k == k) eq.id = l.id;
        ensure(!eq.id.empty(), "unlabelled equation found");
        found.push_back(eq);
      }
  }
  std::vector<MarkovEquation> out;
  for (const auto& l : detail::kLabels)
    for (const auto& eq : found)
      if (eq.id == l.id) out.push_back(eq);
  ensure(out.size() == found.size(), "duplicate equation labels");
  return out;
}

inline const std::vector<MarkovEquation>& equations() {
  static const std::vector<MarkovEquation> all = enumerate_equations();
  return all;
}

// Accepts "8.4" or "x8.4".
inline const MarkovEquation& equation(std::string_view id) {
  if (!id.empty() && (id[0] == 'x' || id[0] == 'X')) id.remove_prefix(1);
  for (const auto& eq : equations())
    if (eq.id == id) return eq;
  throw user_error("unknown equation '" + std::string(id) + "'");
}

// Equation for a collection of the given block lengths on a surface.
inline std::optional<MarkovEquation> equation_for(SurfaceId s, std::array<integer, 3> type) {
  std::sort(type.begin(), type.end());
  for (const auto& eq : equations())
    if (eq.surface == s && eq.weights() == type) return eq;
  return std::nullopt;
}

inline bool check_weighted(const Weights& w, integer coeff, const Solution& s) {
  return w[0] * s[0] * s[0] + w[1] * s[1] * s[1] + w[2] * s[2] * s[2] == coeff * s[0] * s[1] * s[2];
}

inline bool check_solution(const MarkovEquation& eq, const Solution& s) {
  if (s[0] <= 0 || s[1] <= 0 || s[2] <= 0) return false;
  return check_weighted(eq.weights(), eq.coeff, s);
}

// Second root of the quadratic in variable v.
inline Solution mutate_weighted(const Weights& w, integer coeff, Solution s, int v) {
  if (v < 0 || v > 2) throw user_error("variable index must be 0, 1 or 2");
  const integer others = s[(v + 1) % 3] * s[(v + 2) % 3];
  ensure((coeff * others) % w[v] == 0, "solution mutation is not integral");
  s[v] = coeff * others / w[v] - s[v];
  ensure(s[v] > 0, "mutation leaves positive octant");
  return s;
}

inline Solution mutate_solution(const MarkovEquation& eq, const Solution& s, int v) {
  if (!check_solution(eq, s)) throw user_error(to_string(s) + " does not solve equation " + eq.id);
  auto out = mutate_weighted(eq.weights(), eq.coeff, s, v);
  ensure(check_solution(eq, out), "mutated triple is not a solution");
  return out;
}

// All solutions with x+y+z <= bound, sorted lexicographically.
inline constexpr integer default_sum_bound = 200;

inline std::vector<Solution> enumerate_solutions(const MarkovEquation& eq, integer sum_bound = default_sum_bound) {
  std::vector<Solution> out;
  const integer a = eq.alpha, b = eq.beta, g = eq.gamma;
  for (integer x = 1; x + 2 <= sum_bound; ++x)
    for (integer y = 1; x + y + 1 <= sum_bound; ++y) {
      // g z^2 - coeff x y z + (a x^2 + b y^2) = 0
      const integer p = eq.coeff * x * y;
      const integer disc = p * p - 4 * g * (a * x * x + b * y * y);
      auto root = detail::exact_sqrt(disc);
      if (!root) continue;
      for (integer num : {p - *root, p + *root}) {
        if (num <= 0 || num % (2 * g) != 0) continue;
        const integer z = num / (2 * g);
        if (x + y + z <= sum_bound) out.push_back({x, y, z});
        if (*root == 0) break;
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Solutions of minimal x+y+z, listed by z ascending then y descending.
inline std::vector<Solution> minimum_solutions(const MarkovEquation& eq) {
  for (integer sum = 3;; ++sum) {
    std::vector<Solution> out;
    for (integer x = 1; x <= sum - 2; ++x)
      for (integer y = 1; x + y <= sum - 1; ++y) {
        const Solution s{x, y, sum - x - y};
        if (check_solution(eq, s)) out.push_back(s);
      }
    if (!out.empty()) {
      std::sort(out.begin(), out.end(), [](const Solution& l, const Solution& r) {
        if (l[2] != r[2]) return l[2] < r[2];
        return l[1] > r[1];
      });
      return out;
    }
    ensure(sum < 1000, "no minimum solution found");
  }
}

inline integer solution_sum(const Solution& s) { return s[0] + s[1] + s[2]; }

struct ReductionStep {
  int var = 0;
  Solution result{};
};

inline std::string variable_name(int v) { return std::string(1, "xyz"[v]); }

// Greedy descent: at every nonminimum solution exactly one mutation lowers the sum.
inline std::vector<ReductionStep> reduce_to_minimum(const MarkovEquation& eq, Solution s) {
  if (!check_solution(eq, s)) throw user_error(to_string(s) + " does not solve equation " + eq.id);
  std::vector<ReductionStep> path;
  for (;;) {
    int down = -1, count = 0;
    for (int v = 0; v < 3; ++v)
      if (solution_sum(mutate_solution(eq, s, v)) < solution_sum(s)) {
        down = v;
        ++count;
      }
    if (count == 0) break;
    ensure(count == 1, "more than one sum-decreasing mutation at " + to_string(s));
    s = mutate_solution(eq, s, down);
    path.push_back({down, s});
  }
  const auto mins = minimum_solutions(eq);
  ensure(std::find(mins.begin(), mins.end(), s) != mins.end(), "descent stopped at a nonminimum solution");
  return path;
}

struct SolutionGraph {
  struct Edge {
    std::size_t from = 0, to = 0;
    int var = 0;
  };
  std::string equation;
  integer sum_bound = 0;
  std::vector<Solution> nodes;
  std::vector<Edge> edges;
  std::vector<std::size_t> minima;

  std::size_t loop_count() const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.from == e.to; }));
  }

  std::vector<std::size_t> component_ids() const {
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : edges) parent[find(e.from)] = find(e.to);
    std::vector<std::size_t> ids(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) ids[i] = find(i);
    return ids;
  }

  std::size_t component_count() const {
    auto ids = component_ids();
    std::sort(ids.begin(), ids.end());
    return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
  }

  // No cycles once loops are ignored.
  bool is_forest() const { return edges.size() - loop_count() + component_count() == nodes.size(); }
};

inline SolutionGraph build_solution_graph(const MarkovEquation& eq, integer sum_bound = default_sum_bound) {
  if (sum_bound < solution_sum(minimum_solutions(eq).front()))
    throw user_error("sum bound " + std::to_string(sum_bound) + " is below the minimum solution sum");
  SolutionGraph g;
  g.equation = eq.id;
  g.sum_bound = sum_bound;
  g.nodes = enumerate_solutions(eq, sum_bound);
  std::map<Solution, std::size_t> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i]] = i;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (int v = 0; v < 3; ++v) {
      auto it = index.find(mutate_solution(eq, g.nodes[i], v));
      if (it != index.end() && it->second >= i) g.edges.push_back({i, it->second, v});
    }
  for (const auto& m : minimum_solutions(eq)) {
    auto it = index.find(m);
    if (it != index.end()) g.minima.push_back(it->second);
  }
  return g;
}

enum class EquationGroup { I, II, III, IV };

inline std::string to_string(EquationGroup g) {
  switch (g) {
    case EquationGroup::I: return "I";
    case EquationGroup::II: return "II";
    case EquationGroup::III: return "III";
    case EquationGroup::IV: return "IV";
  }
  return "?";
}

// x_i = scale[i] * u[perm[i]] turns eq into the representative equation in u.
struct GroupWitness {
  EquationGroup group = EquationGroup::I;
  std::string representative;
  std::array<int, 3> perm{0, 1, 2};
  std::array<integer, 3> scale{1, 1, 1};
};

inline Solution to_representative(const GroupWitness& w, const Solution& s) {
  Solution u{};
  for (int i = 0; i < 3; ++i) {
    ensure(s[i] % w.scale[i] == 0, "solution not divisible by the group scaling");
    u[w.perm[i]] = s[i] / w.scale[i];
  }
  return u;
}

inline Solution from_representative(const GroupWitness& w, const Solution& u) {
  Solution s{};
  for (int i = 0; i < 3; ++i) s[i] = w.scale[i] * u[w.perm[i]];
  return s;
}

namespace detail {

// Substitution works iff w_i s_i^2 = lam w'_{p(i)} and coeff s0 s1 s2 = lam coeff'.
inline bool substitution_works(const MarkovEquation& eq, const MarkovEquation& rep, const std::array<int, 3>& p,
                               const std::array<integer, 3>& s) {
  const auto w = eq.weights(), wr = rep.weights();
  // lam = coeff s0 s1 s2 / coeff', compare cross-multiplied
  const integer num = eq.coeff * s[0] * s[1] * s[2];
  for (int i = 0; i < 3; ++i)
    if (w[i] * s[i] * s[i] * rep.coeff != num * wr[p[i]]) return false;
  return true;
}

}  // namespace detail

inline GroupWitness equation_group(const MarkovEquation& eq) {
  static const std::pair<EquationGroup, const char*> reps[] = {
      {EquationGroup::I, "1"}, {EquationGroup::II, "2"}, {EquationGroup::III, "3"}, {EquationGroup::IV, "4"}};
  for (const auto& [grp, rid] : reps) {
    const auto& rep = equation(rid);
    std::array<int, 3> p{0, 1, 2};
    do {
      for (integer s0 = 1; s0 <= 6; ++s0)
        for (integer s1 = 1; s1 <= 6; ++s1)
          for (integer s2 = 1; s2 <= 6; ++s2) {
            const std::array<integer, 3> s{s0, s1, s2};
            if (std::gcd(std::gcd(s0, s1), s2) != 1) continue;
            if (detail::substitution_works(eq, rep, p, s)) return {grp, rid, p, s};
          }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  throw invariant_violation("equation " + eq.id + " fits no group");
}

}  // namespace triblock
