#include <gtest/gtest.h>

#include <map>

#include "triblock/markov.hpp"

using namespace triblock;

namespace {

std::vector<Solution> brute_force(const MarkovEquation& eq, integer bound) {
  std::vector<Solution> out;
  for (integer x = 1; x <= bound; ++x)
    for (integer y = 1; x + y <= bound; ++y)
      for (integer z = 1; x + y + z <= bound; ++z)
        if (eq.alpha * x * x + eq.beta * y * y + eq.gamma * z * z == eq.coeff * x * y * z) out.push_back({x, y, z});
  return out;
}

}  // namespace

TEST(Markov, TableRows) {
  const auto& eqs = equations();
  ASSERT_EQ(eqs.size(), 14u);
  const char* ids[] = {"1", "2", "3", "4", "5", "6.1", "6.2", "7.1", "7.2", "7.3", "8.1", "8.2", "8.3", "8.4"};
  const integer coeffs[] = {3, 4, 6, 5, 8, 9, 6, 4, 8, 6, 3, 4, 6, 5};
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    EXPECT_EQ(eqs[i].id, ids[i]);
    EXPECT_EQ(eqs[i].coeff, coeffs[i]) << eqs[i].id;
    EXPECT_EQ(eqs[i].coeff * eqs[i].coeff, eqs[i].ksq * eqs[i].alpha * eqs[i].beta * eqs[i].gamma);
    EXPECT_EQ(eqs[i].alpha + eqs[i].beta + eqs[i].gamma, eqs[i].surface.k0_rank());
  }
  EXPECT_EQ(equation_text(equation("6.2")), "x^2+2y^2+6z^2=6xyz");
  EXPECT_EQ(equation("x8.4").id, "8.4");
  EXPECT_THROW(equation("9"), user_error);
}

TEST(Markov, MinimumSolutions) {
  const std::map<std::string, std::vector<Solution>> want = {
      {"1", {{1, 1, 1}}}, {"2", {{1, 1, 1}}}, {"3", {{1, 1, 1}}}, {"4", {{1, 2, 1}, {2, 1, 1}}},
      {"5", {{1, 1, 1}}}, {"6.1", {{1, 1, 1}}}, {"6.2", {{2, 1, 1}}}, {"7.1", {{2, 2, 1}}},
      {"7.2", {{2, 1, 1}}}, {"7.3", {{3, 1, 1}}}, {"8.1", {{3, 3, 1}}}, {"8.2", {{4, 2, 1}}},
      {"8.3", {{3, 2, 1}}}, {"8.4", {{5, 2, 1}, {5, 1, 2}}}};
  for (const auto& eq : equations()) EXPECT_EQ(minimum_solutions(eq), want.at(eq.id)) << eq.id;
}

TEST(Markov, EnumerationMatchesBruteForce) {
  for (const auto& eq : equations()) EXPECT_EQ(enumerate_solutions(eq, 60), brute_force(eq, 60)) << eq.id;
}

TEST(Markov, MutationsAreInvolutions) {
  for (const auto& eq : equations())
    for (const auto& s : enumerate_solutions(eq, 200))
      for (int v = 0; v < 3; ++v) {
        const auto m = mutate_solution(eq, s, v);
        EXPECT_TRUE(check_solution(eq, m));
        EXPECT_EQ(mutate_solution(eq, m, v), s);
      }
}

TEST(Markov, Reduction) {
  const auto& eq = equation("1");
  const auto path = reduce_to_minimum(eq, {2, 5, 29});
  ASSERT_FALSE(path.empty());
  EXPECT_EQ(path.back().result, (Solution{1, 1, 1}));
  EXPECT_TRUE(reduce_to_minimum(eq, {1, 1, 1}).empty());
  EXPECT_THROW(reduce_to_minimum(eq, {1, 1, 4}), user_error);
  for (const auto& e : equations())
    for (const auto& s : enumerate_solutions(e, 200)) {
      auto p = reduce_to_minimum(e, s);
      const auto end = p.empty() ? s : p.back().result;
      const auto mins = minimum_solutions(e);
      EXPECT_NE(std::find(mins.begin(), mins.end(), end), mins.end());
    }
}

TEST(Markov, GraphShapes) {
  EXPECT_THROW(build_solution_graph(equation("8.4"), 7), user_error);
  EXPECT_NO_THROW(build_solution_graph(equation("8.4"), 8));
  const auto g1 = build_solution_graph(equation("1"), 100);
  EXPECT_EQ(g1.loop_count(), 0u);
  EXPECT_TRUE(g1.is_forest());
  EXPECT_EQ(g1.component_count(), 1u);

  const auto g2 = build_solution_graph(equation("2"), 100);
  ASSERT_EQ(g2.loop_count(), 1u);
  for (const auto& e : g2.edges)
    if (e.from == e.to) {
      EXPECT_EQ(g2.nodes[e.from], (Solution{1, 1, 1}));
    }

  const auto g84 = build_solution_graph(equation("8.4"), 100);
  EXPECT_EQ(g84.component_count(), 2u);
  EXPECT_EQ(g84.minima.size(), 2u);
}

TEST(Markov, GroupsMapSolutionsToRepresentatives) {
  std::map<std::string, int> per_group;
  for (const auto& eq : equations()) {
    const auto w = equation_group(eq);
    ++per_group[to_string(w.group)];
    const auto& rep = equation(w.representative);
    for (const auto& s : enumerate_solutions(eq, 150)) {
      const auto u = to_representative(w, s);
      EXPECT_TRUE(check_solution(rep, u)) << eq.id;
      EXPECT_EQ(from_representative(w, u), s);
    }
  }
  EXPECT_EQ(per_group.size(), 4u);
}
