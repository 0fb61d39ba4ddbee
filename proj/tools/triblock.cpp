// Command-line front end for the triblock library.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "triblock/triblock.hpp"

using namespace triblock;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw user_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw user_error("cannot write " + path);
  out << text;
}

unsigned default_threads() {
  if (const char* env = std::getenv("TRIBLOCK_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
    throw user_error("TRIBLOCK_THREADS must be a positive integer");
  }
  return 1;
}

struct Check {
  std::string what;
  bool ok;
  std::string detail;
};

void print_checks(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    std::cout << (c.ok ? "ok   " : "FAIL ") << c.what << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
}

// Returns true if the document is a valid collection.
bool verify_document(const CollectionDocument& doc) {
  std::vector<Check> checks;
  const auto& c = doc.collection;
  try {
    validate_collection(c);
    checks.push_back({"collection validates", true, ""});
  } catch (const validation_error& e) {
    checks.push_back({"collection validates", false, e.what()});
    print_checks(checks);
    return false;
  }
  const bool complete = is_complete(c);
  checks.push_back({"complete (determinant +-1)", complete, ""});
  if (complete && c.size() == 3) {
    const auto t = c.type();
    const auto r = c.ranks();
    const Weights w{t[0], t[1], t[2]};
    auto eq = equation_for(c.surface(), w);
    checks.push_back({"type matches an equation", eq.has_value(), ""});
    if (eq) {
      checks.push_back({"ranks " + to_string(Solution{r[0], r[1], r[2]}) + " solve equation " + eq->id,
                        check_weighted(w, eq->coeff, {r[0], r[1], r[2]}), ""});
      auto v = abc(c);
      checks.push_back({"abc = (" + std::to_string(v.a) + "," + std::to_string(v.b) + "," + std::to_string(v.c) + ")",
                        v.a > 0 && v.b > 0 && v.c > 0, ""});
    }
  }
  print_checks(checks);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional 3-block collections on del Pezzo surfaces"};
  app.require_subcommand(1);

  bool json = false;
  std::string out_path;
  std::string eq_id, doc_path, word, surface_name;
  std::vector<integer> xyz;
  integer sum_bound = default_sum_bound;
  std::string format = "dot";
  std::string kind = "minus-one";
  int solution = 0, set_size = 0;
  bool report = false, check_recursion = false, count_only = false;
  unsigned threads = 0;

  auto* equations_cmd = app.add_subcommand("equations", "Markov-type equations and their minimum solutions");
  equations_cmd->add_flag("--json", json, "JSON output");

  auto* reduce_cmd = app.add_subcommand("reduce", "Descend from a solution to a minimum one");
  reduce_cmd->add_option("eq", eq_id, "equation id, e.g. 8.4")->required();
  reduce_cmd->add_option("xyz", xyz, "solution x y z")->required()->expected(3);
  reduce_cmd->add_flag("--json", json, "JSON output");

  auto* graph_cmd = app.add_subcommand("graph", "Solution graph of an equation");
  graph_cmd->add_option("eq", eq_id, "equation id")->required();
  graph_cmd->add_option("--sum-bound", sum_bound, "largest x+y+z")->capture_default_str();
  graph_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  graph_cmd->add_option("-o,--output", out_path, "output file");

  auto* verify_cmd = app.add_subcommand("verify", "Validate a collection document");
  verify_cmd->add_option("file", doc_path, "collection JSON")->required();

  auto* mutate_cmd = app.add_subcommand("mutate", "Apply a braid word to a collection document");
  mutate_cmd->add_option("file", doc_path, "collection JSON")->required();
  mutate_cmd->add_option("word", word, "moves applied left to right, e.g. \"R1 L2\"")->required();
  mutate_cmd->add_option("-o,--output", out_path, "output file");

  auto* catalog_cmd = app.add_subcommand("catalog", "Export a minimum collection");
  catalog_cmd->add_option("eq", eq_id, "equation id")->required();
  catalog_cmd->add_option("--solution", solution, "index of the minimum solution")->capture_default_str();
  catalog_cmd->add_flag("--report", report, "print the construction checks instead");
  catalog_cmd->add_option("-o,--output", out_path, "output file");

  auto* orbits_cmd = app.add_subcommand("orbits", "Weyl orbit table");
  orbits_cmd->add_option("--eq", eq_id, "equation id or all")->default_val("all");
  orbits_cmd->add_flag("--check-recursion", check_recursion, "also run the counting recursion checks");
  orbits_cmd->add_option("--threads", threads, "worker threads (default: TRIBLOCK_THREADS or 1)");
  orbits_cmd->add_flag("--json", json, "JSON output");

  auto* curves_cmd = app.add_subcommand("curves", "Enumerate (-1)-classes or roots");
  curves_cmd->add_option("surface", surface_name, "P2, X1..X8 or Q")->required();
  curves_cmd->add_option("--kind", kind, "minus-one or root")
      ->check(CLI::IsMember({"minus-one", "root"}))
      ->capture_default_str();
  curves_cmd->add_flag("--count", count_only, "print only the number of classes");

  auto* sets_cmd = app.add_subcommand("disjoint-sets", "Count sets of pairwise disjoint (-1)-classes");
  sets_cmd->add_option("surface", surface_name, "X1..X8")->required();
  sets_cmd->add_option("m", set_size, "set size")->required();
  sets_cmd->add_option("--threads", threads, "worker threads (default: TRIBLOCK_THREADS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*equations_cmd) {
      write_output("", json ? dump(equations_json()) : equations_text());
    } else if (*reduce_cmd) {
      const auto& eq = equation(eq_id);
      const Solution s{xyz[0], xyz[1], xyz[2]};
      const auto path = reduce_to_minimum(eq, s);
      if (json) {
        ordered_json j = ordered_json::array();
        for (const auto& st : path) j.push_back({{"var", variable_name(st.var)}, {"result", st.result}});
        write_output("", dump(j));
      } else if (path.empty()) {
        std::cout << to_string(s) << " already minimum\n";
      } else {
        std::cout << to_string(s);
        for (const auto& st : path) std::cout << " -" << variable_name(st.var) << "-> " << to_string(st.result);
        std::cout << "\n";
      }
    } else if (*graph_cmd) {
      const auto g = build_solution_graph(equation(eq_id), sum_bound);
      write_output(out_path, format == "dot" ? graph_dot(g) : dump(graph_json(g)));
    } else if (*verify_cmd) {
      const auto doc = parse_document(read_file(doc_path));
      if (!verify_document(doc)) return 2;
    } else if (*mutate_cmd) {
      auto doc = parse_document(read_file(doc_path));
      validate_collection(doc.collection);
      const auto w = parse_word(word);
      doc.collection = apply_word(doc.collection, w);
      if (!doc.provenance) doc.provenance = Provenance{"", ""};
      auto& pw = doc.provenance->word;
      pw += (pw.empty() ? "" : " ") + format_word(w);
      write_output(out_path, dump(to_json(doc)));
    } else if (*catalog_cmd) {
      const auto& entry = catalog_entry(eq_id);
      if (report) {
        const auto rep = verify_entry(entry.id);
        for (const auto& c : rep.checks)
          std::cout << (c.ok ? "ok   " : "FAIL ") << c.what << (c.ok || c.detail.empty() ? "" : ": " + c.detail)
                    << "\n";
        if (!rep.ok()) return 3;
      } else {
        std::string w = entry.full_word();
        if (solution > 0) w += (w.empty() ? "" : " ") + entry.second_solution_word;
        CollectionDocument doc{build(entry.id, solution), Provenance{entry.seed_text, w}};
        write_output(out_path, dump(to_json(doc)));
      }
    } else if (*orbits_cmd) {
      OrbitOptions opt{threads ? threads : default_threads()};
      std::vector<OrbitRow> rows;
      if (eq_id == "all")
        rows = orbit_table(opt);
      else
        rows.push_back(orbit_row(eq_id, opt));
      if (json) {
        ordered_json j;
        j["rows"] = orbit_table_json(rows);
        if (check_recursion) {
          j["recursion"] = ordered_json::array();
          for (const auto& rc : recursion_cases()) {
            const auto r = recursion_check(rc, opt);
            j["recursion"].push_back({{"id", rc.id}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ok", r.ok()}});
          }
        }
        write_output("", dump(j));
      } else {
        std::cout << orbit_table_text(rows);
        if (check_recursion) {
          std::cout << "\nrecursion N*C(n,k) = N'*sets\n";
          for (const auto& rc : recursion_cases()) {
            const auto r = recursion_check(rc, opt);
            std::cout << std::left << std::setw(5) << rc.id << r.n_value << "*C(" << rc.n << "," << rc.k
                      << ") = " << r.n_reference << "*" << r.sets << "  " << r.lhs << " " << (r.ok() ? "==" : "!=")
                      << " " << r.rhs << "\n";
          }
        }
      }
    } else if (*curves_cmd) {
      const auto s = SurfaceId::parse(surface_name);
      const auto cls = enumerate_classes(s, kind == "root" ? CurveKind::Root : CurveKind::MinusOne);
      if (count_only) {
        std::cout << cls.size() << "\n";
      } else {
        for (const auto& d : cls) std::cout << d << "\n";
      }
    } else if (*sets_cmd) {
      const auto s = SurfaceId::parse(surface_name);
      std::cout << count_disjoint_sets(s, set_size, threads ? threads : default_threads()) << "\n";
    }
  } catch (const user_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_violation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
