#pragma once

#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "triblock/blockcalc.hpp"
#include "triblock/markov.hpp"
#include "triblock/weyl.hpp"

namespace triblock {

using ordered_json = nlohmann::ordered_json;

struct Provenance {
  std::string seed;
  std::string word;
};

struct CollectionDocument {
  BlockCollection collection;
  std::optional<Provenance> provenance;
};

inline ordered_json to_json(const KClass& e) {
  ordered_json j;
  j["rank"] = e.rank();
  j["c1"] = e.c1().coords();
  j["ch2x2"] = e.ch2x2();
  return j;
}

inline ordered_json to_json(const CollectionDocument& doc) {
  ordered_json j;
  j["surface"] = doc.collection.surface().name();
  ordered_json blocks = ordered_json::array();
  for (const auto& b : doc.collection.blocks()) {
    ordered_json members = ordered_json::array();
    for (const auto& e : b) members.push_back(to_json(e));
    blocks.push_back(members);
  }
  j["blocks"] = blocks;
  if (doc.provenance) {
    j["provenance"]["seed"] = doc.provenance->seed;
    j["provenance"]["word"] = doc.provenance->word;
  }
  return j;
}

inline std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Parses without validating; validate_collection reports what is wrong.
inline CollectionDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw user_error(std::string("malformed JSON: ") + e.what());
  }
  try {
    const auto s = SurfaceId::parse(j.at("surface").get<std::string>());
    std::vector<Block> blocks;
    for (const auto& jb : j.at("blocks")) {
      std::vector<KClass> members;
      for (const auto& jm : jb)
        members.emplace_back(jm.at("rank").get<integer>(),
                             DivisorClass(s, jm.at("c1").get<std::vector<integer>>()),
                             jm.at("ch2x2").get<integer>());
      if (members.empty()) throw user_error("empty block in document");
      blocks.emplace_back(std::move(members));
    }
    CollectionDocument doc{BlockCollection(s, std::move(blocks)), std::nullopt};
    if (j.contains("provenance"))
      doc.provenance = Provenance{j["provenance"].value("seed", ""), j["provenance"].value("word", "")};
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw user_error(std::string("bad collection document: ") + e.what());
  }
}

inline std::string solutions_text(const std::vector<Solution>& sols) {
  std::string s;
  for (std::size_t i = 0; i < sols.size(); ++i) s += (i ? " " : "") + to_string(sols[i]);
  return s;
}

inline ordered_json equations_json() {
  ordered_json rows = ordered_json::array();
  for (const auto& eq : equations()) {
    ordered_json r;
    r["id"] = eq.id;
    r["surface"] = eq.surface.name();
    r["alpha"] = eq.alpha;
    r["beta"] = eq.beta;
    r["gamma"] = eq.gamma;
    r["ksq"] = eq.ksq;
    r["coeff"] = eq.coeff;
    ordered_json mins = ordered_json::array();
    for (const auto& m : minimum_solutions(eq)) mins.push_back(m);
    r["minimum_solutions"] = mins;
    rows.push_back(r);
  }
  return rows;
}

inline std::string equations_text() {
  std::ostringstream os;
  os << std::left << std::setw(5) << "eq" << std::setw(9) << "surface" << std::setw(24) << "equation" << "minimum\n";
  for (const auto& eq : equations())
    os << std::setw(5) << eq.id << std::setw(9) << eq.surface.name() << std::setw(24) << equation_text(eq)
       << solutions_text(minimum_solutions(eq)) << "\n";
  return os.str();
}

inline std::string graph_dot(const SolutionGraph& g) {
  std::ostringstream os;
  os << "graph \"x" << g.equation << "\" {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const bool minimum = std::find(g.minima.begin(), g.minima.end(), i) != g.minima.end();
    os << "  n" << i << " [label=\"" << to_string(g.nodes[i]) << "\"" << (minimum ? ", shape=doublecircle" : "")
       << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -- n" << e.to << " [label=\"" << variable_name(e.var) << "\"];\n";
  os << "}\n";
  return os.str();
}

inline ordered_json graph_json(const SolutionGraph& g) {
  ordered_json j;
  j["equation"] = g.equation;
  j["sum_bound"] = g.sum_bound;
  ordered_json nodes = ordered_json::array();
  for (const auto& n : g.nodes) nodes.push_back(n);
  j["nodes"] = nodes;
  j["minima"] = g.minima;
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["var"] = variable_name(e.var);
    edges.push_back(je);
  }
  j["edges"] = edges;
  j["loops"] = g.loop_count();
  j["components"] = g.component_count();
  return j;
}

inline std::string type_text(const Weights& w) { return to_string(Solution{w[0], w[1], w[2]}); }

inline std::string orbit_table_text(const std::vector<OrbitRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "eq" << std::setw(9) << "surface" << std::setw(9) << "type" << std::right
     << std::setw(8) << "N" << std::setw(4) << "C" << std::setw(9) << "orbits" << "\n";
  for (const auto& r : rows)
    os << std::left << std::setw(5) << r.id << std::setw(9) << r.surface.name() << std::setw(9) << type_text(r.type)
       << std::right << std::setw(8) << r.n << std::setw(4) << r.c << std::setw(9) << r.orbits << "\n";
  return os.str();
}

inline ordered_json orbit_table_json(const std::vector<OrbitRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["id"] = r.id;
    j["surface"] = r.surface.name();
    j["type"] = r.type;
    j["per_solution"] = r.per_solution;
    j["N"] = r.n;
    j["C"] = r.c;
    j["orbits"] = r.orbits;
    out.push_back(j);
  }
  return out;
}

}  // namespace triblock
