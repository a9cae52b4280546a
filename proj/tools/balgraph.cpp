#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "balgraph/balance.hpp"
#include "balgraph/canon.hpp"
#include "balgraph/cayley.hpp"
#include "balgraph/census.hpp"
#include "balgraph/exact_cover.hpp"
#include "balgraph/graph6.hpp"
#include "balgraph/planar.hpp"

using namespace balgraph;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

int vertex_cap() {
  const char* env = std::getenv("BALGRAPH_MAX_VERTICES");
  if (!env || !*env) return kMaxVertices;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw GraphError(std::string("BALGRAPH_MAX_VERTICES: bad value '") + env + "'");
  return static_cast<int>(std::min<long>(v, kMaxVertices));
}

void check_cap(int n, const std::string& what) {
  const int cap = vertex_cap();
  if (n > cap) throw SizeLimitError(what + " has " + std::to_string(n) + " vertices, above the cap of " + std::to_string(cap));
}

std::vector<Graph> read_graphs(const std::string& path) {
  std::vector<Graph> gs;
  if (path.empty() || path == "-") {
    gs = read_graph6_stream(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open '" + path + "'");
    gs = read_graph6_stream(in);
  }
  for (std::size_t i = 0; i < gs.size(); ++i) check_cap(gs[i].order(), "input graph " + std::to_string(i + 1));
  return gs;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw GraphError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

json vertices_json(const std::vector<Vertex>& vs) { return json(vs); }

json balance_json(const Graph& g) {
  json j;
  j["graph6"] = to_graph6(g);
  j["vertices"] = g.order();
  j["canonical"] = canonical_form(g).hex();
  if (!is_connected(g)) {
    const bool ok = is_balanced_any(g);
    j["balanced"] = ok;
    j["reason"] = ok ? "balanced" : "unbalanced_component";
    j["connected"] = false;
    return j;
  }
  const BalanceReport r = is_balanced(g);
  j["balanced"] = r.balanced;
  if (const auto* bc = std::get_if<BadCycle>(&r.reason)) {
    j["reason"] = "bad_cycle";
    j["witness"] = vertices_json(bc->cycle.vertices);
  } else if (const auto* nb = std::get_if<NotBipartite>(&r.reason)) {
    j["reason"] = "not_bipartite";
    j["witness"] = vertices_json(nb->walk.walk);
  } else {
    j["reason"] = "balanced";
    if (auto lt = recognize_lt_cycle(g)) j["lt_cycle"] = {{"l", lt->l}, {"t", lt->t}};
  }
  return j;
}

json report_json(const VerificationReport& r) {
  json j;
  j["groups"] = r.groups;
  j["instances"] = r.instances;
  j["balanced"] = r.balanced;
  j["recognized"] = r.recognized;
  j["counterexamples"] = r.counterexamples.size();
  json list = json::array();
  for (const auto& c : r.counterexamples) list.push_back({{"group", c.group}, {"set", c.set}, {"detail", c.detail}});
  j["details"] = list;
  return j;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

// Balanced (l,t)-cycles used by the divisibility run. Those over the vertex
// cap are handled on their biadjacency matrix, with balance read off the twin
// quotient.
json divisibility_lt_grid(bool& failed) {
  json rows = json::array();
  for (int l : {2, 8, 12, 16, 20})
    for (int t = 1; t <= 4; ++t) {
      const int k = l == 2 ? t : 2 * t;
      json row{{"l", l}, {"t", t}, {"vertices", l * t}, {"degree", k}};
      if (l * t <= vertex_cap()) {
        const DivisibilityReport r = verify_divisibility(lt_cycle({l, t}));
        row["balanced"] = r.balanced;
        row["cover_size"] = r.cover_size;
        row["holds"] = r.balanced && r.holds;
        row["route"] = "graph";
      } else {
        // Side 0 holds the even cycle positions, side 1 the odd ones.
        const int half = l / 2;
        ZeroOneMatrix a(half * t, half * t);
        for (int i = 0; i < half; ++i)
          for (int x = 0; x < t; ++x)
            for (int y = 0; y < t; ++y) {
              a.set(i * t + x, i * t + y, true);
              a.set(i * t + x, ((i + half - 1) % half) * t + y, true);
            }
        // The twin quotient of the (l,t)-cycle is C_l (K_2 when l = 2).
        const bool balanced = is_balanced(l == 2 ? complete_graph(2) : cycle_graph(l)).balanced;
        const auto cover = exact_cover(a);
        const int size = cover ? cover->size() : 0;
        row["balanced"] = balanced;
        row["cover_size"] = size;
        row["holds"] = balanced && cover && is_exact_cover(a, cover->columns) && size * k * 2 == l * t;
        row["route"] = "matrix";
      }
      if (!row["holds"].get<bool>()) failed = true;
      rows.push_back(row);
    }
  return rows;
}

int cmd_balance_check(const std::string& file) {
  for (const Graph& g : read_graphs(file)) std::cout << balance_json(g).dump() << "\n";
  return kExitOk;
}

int cmd_gen_lt(int l, int t) {
  const LtSpec spec{l, t};
  if (!spec.valid()) throw GraphError("gen lt-cycle: (l,t) = (" + std::to_string(l) + "," + std::to_string(t) + ") is not valid");
  check_cap(l * t, "(l,t)-cycle");
  std::cout << to_graph6(lt_cycle(spec)) << "\n";
  return kExitOk;
}

int cmd_gen_cayley(const std::string& group, const std::string& set) {
  const AbelianGroup g = AbelianGroup::parse(group);
  check_cap(g.order(), "Cayley graph");
  const ConnectionSet s = ConnectionSet::parse(g, set);
  std::cout << to_graph6(cayley_graph(g, s)) << "\n";
  return kExitOk;
}

int cmd_census(int d, bool balanced_only, int mod, int res, int jobs, const std::string& out, bool json_only) {
  check_cap(d, "census");
  CensusTask task;
  task.vertices = d;
  task.mod = mod;
  task.res = res;
  task.jobs = jobs;
  if (d < 6) throw GraphError("census: --vertices must be at least 6, got " + std::to_string(d));
  const auto start = std::chrono::steady_clock::now();
  const CensusReport r = run_census(task);
  const long long ms = elapsed_ms(start);
  Output o(out);
  if (!json_only)
    for (const CensusGraph& g : r.graphs)
      if (!balanced_only || g.balanced) o.stream() << to_graph6(g.graph) << "\n";
  json j{{"d", r.d}, {"total", r.total}, {"balanced", r.balanced}};
  if (mod > 1) j["partition"] = {{"mod", mod}, {"res", res}};
  j["elapsed_ms"] = ms;
  std::cout << j.dump() << std::endl;
  return kExitOk;
}

int cmd_verify_main(int max_order, int jobs) {
  check_cap(max_order, "group order bound");
  const VerificationReport r = verify_main_theorem(max_order, jobs);
  json j{{"max_order", max_order}};
  j.update(report_json(r));
  std::cout << j.dump() << "\n";
  return r.ok() ? kExitOk : kExitCounterexample;
}

int cmd_verify_circulant(int max_n) {
  check_cap(max_n, "circulant order bound");
  const VerificationReport r = verify_circulant_lemmas(max_n);
  json j{{"max_n", max_n}};
  j.update(report_json(r));
  std::cout << j.dump() << "\n";
  return r.ok() ? kExitOk : kExitCounterexample;
}

int cmd_verify_divisibility(const std::string& file, int census_max) {
  bool failed = false;
  json j;
  json graphs = json::array();
  if (!file.empty()) {
    for (const Graph& g : read_graphs(file)) {
      const DivisibilityReport r = verify_divisibility(g);
      json row{{"graph6", to_graph6(g)}, {"degree", r.degree}, {"vertices", r.vertices}, {"balanced", r.balanced},
               {"cover_size", r.cover_size}, {"holds", r.holds}};
      if (!r.holds) {
        failed = true;
        std::cerr << "COUNTEREXAMPLE divisibility " << to_graph6(g) << "\n";
      }
      graphs.push_back(row);
    }
    j["graphs"] = graphs;
  } else {
    j["lt_cycles"] = divisibility_lt_grid(failed);
    json census = json::array();
    for (int d = 6; d <= census_max; d += 2) {
      check_cap(d, "census");
      const CensusReport rep = count_balanced_cubic(d);
      long long holds = 0;
      for (const CensusGraph& g : rep.graphs) {
        if (!g.balanced) continue;
        const DivisibilityReport r = verify_divisibility(g.graph);
        if (r.holds && r.cover_size * 3 * 2 == d) {
          ++holds;
        } else {
          failed = true;
          std::cerr << "COUNTEREXAMPLE divisibility " << to_graph6(g.graph) << "\n";
        }
      }
      census.push_back({{"d", d}, {"balanced", rep.balanced}, {"holds", holds}});
    }
    j["census"] = census;
  }
  j["ok"] = !failed;
  std::cout << j.dump() << "\n";
  return failed ? kExitCounterexample : kExitOk;
}

int cmd_verify_planar(int max_n, int census_max) {
  check_cap(max_n, "planar bound");
  const BatageljResult br = batagelj_enumerate(max_n);
  long long passed = 0;
  bool failed = false;
  for (const EmbeddedGraph& eg : br.graphs) {
    const PlanarCheck c = verify_sv_claims(eg);
    if (c.ok()) {
      ++passed;
    } else {
      failed = true;
      std::cerr << "COUNTEREXAMPLE planar " << to_graph6(eg.graph()) << ": " << c.failures.front() << "\n";
    }
  }
  long long planar_balanced = 0;
  long long census_balanced = 0;
  for (int d = 6; d <= census_max; d += 2) {
    check_cap(d, "census");
    for (const CensusGraph& g : count_balanced_cubic(d).graphs) {
      if (!g.balanced) continue;
      ++census_balanced;
      if (planarity_test(g.graph)) {
        ++planar_balanced;
        failed = true;
        std::cerr << "COUNTEREXAMPLE planar balanced census graph " << to_graph6(g.graph) << "\n";
      }
    }
  }
  json j{{"max_n", max_n},
         {"graphs", br.graphs.size()},
         {"passed", passed},
         {"census_max", census_max},
         {"census_balanced", census_balanced},
         {"census_balanced_planar", planar_balanced},
         {"ok", !failed}};
  std::cout << j.dump() << "\n";
  return failed ? kExitCounterexample : kExitOk;
}

int cmd_verify_conjectures(int d) {
  check_cap(d, "census");
  const CensusReport census = count_balanced_cubic(d);
  const ConjectureReport twins = check_conjecture_twins(census);
  const ConjectureReport cons = check_conjecture_consequences(census);
  json violations = json::array();
  for (const auto* r : {&twins, &cons})
    for (const auto& v : r->violations) {
      violations.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
      std::cerr << "CONJECTURE VIOLATION d=" << d << " " << v.graph6 << ": " << v.detail << "\n";
    }
  json j{{"d", d},
         {"balanced", census.balanced},
         {"with_twins", twins.with_twins},
         {"vertex_transitive", cons.vertex_transitive},
         {"violations", violations}};
  std::cout << j.dump() << "\n";
  return violations.empty() ? kExitOk : kExitCounterexample;
}

int cmd_planar_batagelj(int max_n, bool embedding) {
  check_cap(max_n, "planar bound");
  const BatageljResult br = batagelj_enumerate(max_n);
  std::map<int, long long> per_order;
  for (const EmbeddedGraph& eg : br.graphs) {
    ++per_order[eg.graph().order()];
    if (embedding) std::cout << "# " << to_graph6(eg.graph()) << "\n" << eg.to_text();
    else std::cout << to_graph6(eg.graph()) << "\n";
  }
  json counts = json::object();
  for (const auto& [n, c] : per_order) counts[std::to_string(n)] = c;
  json j{{"max_n", max_n}, {"graphs", br.graphs.size()}, {"by_order", counts}, {"applications", br.applications},
         {"rejected", br.rejected}};
  std::cout << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced bipartite graph toolkit"};
  app.require_subcommand(1);

  std::string file;
  int l = 0, t = 0, d = 0, mod = 1, res = 0, jobs = 1, bound = 0, census_max = 18;
  std::string group, set, out;
  bool balanced_only = false, json_only = false, embedding = false;

  auto* balance = app.add_subcommand("balance", "Balance checks")->require_subcommand(1);
  auto* check = balance->add_subcommand("check", "Check graph6 graphs from FILE or stdin");
  check->add_option("file", file, "graph6 file (default stdin)");

  auto* gen = app.add_subcommand("gen", "Constructions")->require_subcommand(1);
  auto* gen_lt = gen->add_subcommand("lt-cycle", "The (l,t)-cycle");
  gen_lt->add_option("--l", l, "cycle length")->required();
  gen_lt->add_option("--t", t, "blow-up size")->required();
  auto* gen_cay = gen->add_subcommand("cayley", "Cayley graph of an abelian group");
  gen_cay->add_option("--group", group, "invariant factors, e.g. 2x4")->required();
  gen_cay->add_option("--set", set, "connection set, e.g. (0,1),(0,3) or 1,7")->required();

  auto* census = app.add_subcommand("census", "Connected cubic bipartite graphs on d vertices");
  census->add_option("--vertices", d, "d")->required();
  census->add_flag("--balanced", balanced_only, "emit balanced graphs only");
  census->add_option("--mod", mod, "partition modulus");
  census->add_option("--res", res, "partition residue");
  census->add_option("--jobs", jobs, "worker threads");
  census->add_option("--out", out, "graph6 output file");
  census->add_flag("--json", json_only, "print the summary only");

  auto* verify = app.add_subcommand("verify", "Theorem checks")->require_subcommand(1);
  auto* v_main = verify->add_subcommand("main-abelian", "Classification over abelian Cayley graphs");
  v_main->add_option("--max-order", bound, "largest group order")->required();
  v_main->add_option("--jobs", jobs, "worker threads");
  auto* v_circ = verify->add_subcommand("circulant", "Circulant lemmas");
  v_circ->add_option("--max-n", bound, "largest order")->required();
  auto* v_div = verify->add_subcommand("divisibility", "Exact-cover divisibility");
  v_div->add_option("file", file, "graph6 file; default runs the built-in suite");
  v_div->add_option("--census-max", census_max, "largest census order in the built-in suite");
  auto* v_planar = verify->add_subcommand("planar", "Planar cubic bipartite claims");
  v_planar->add_option("--max-n", bound, "largest order")->required();
  v_planar->add_option("--census-max", census_max, "largest census order for the planarity cross-check");
  auto* v_conj = verify->add_subcommand("conjectures", "Twin and girth conjectures on the census");
  v_conj->add_option("--vertices", d, "d")->required();

  auto* planar = app.add_subcommand("planar", "Planar generation")->require_subcommand(1);
  auto* batagelj = planar->add_subcommand("batagelj", "Generate from the cube by the two operations");
  batagelj->add_option("--max-n", bound, "largest order")->required();
  batagelj->add_flag("--embedding", embedding, "print rotation systems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_balance_check(file);
    if (*gen_lt) return cmd_gen_lt(l, t);
    if (*gen_cay) return cmd_gen_cayley(group, set);
    if (*census) return cmd_census(d, balanced_only, mod, res, jobs, out, json_only);
    if (*v_main) return cmd_verify_main(bound, jobs);
    if (*v_circ) return cmd_verify_circulant(bound);
    if (*v_div) return cmd_verify_divisibility(file, census_max);
    if (*v_planar) return cmd_verify_planar(bound, census_max);
    if (*v_conj) return cmd_verify_conjectures(d);
    if (*batagelj) return cmd_planar_batagelj(bound, embedding);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
