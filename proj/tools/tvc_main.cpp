// Command-line front end: instance generation, solving with any registered
// algorithm, and batch benchmarking with machine-readable reports.
//
// Exit codes: 0 ok, 1 usage/parse/numerical failure, 2 resource guard,
// 3 instance-class mismatch, 4 verification failure.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tvc/generators.hpp"
#include "tvc/io.hpp"
#include "tvc/reductions.hpp"
#include "tvc/solve.hpp"

namespace {

using nlohmann::json;

struct GenArgs {
  std::string family, out, graph = "k4";
  int n = 4, T = 5, d = 2, universe = 6, sets = 6;
  double p = 0.4, density = 0.5;
  std::uint64_t seed = 1;
};

int run_gen(const GenArgs& a) {
  tvc::TemporalGraph g(1, 1, {{}});
  json params;
  if (a.family == "random") {
    g = tvc::gen_random(a.n, a.T, a.p, a.seed);
    params = {{"n", a.n}, {"T", a.T}, {"p", a.p}};
  } else if (a.family == "always-matching") {
    g = tvc::gen_always_matching(a.n, a.T, a.seed);
    params = {{"n", a.n}, {"T", a.T}};
  } else if (a.family == "always-degree-d") {
    g = tvc::gen_always_degree(a.n, a.T, a.d, a.p, a.seed);
    params = {{"n", a.n}, {"T", a.T}, {"d", a.d}, {"p", a.p}};
  } else if (a.family == "always-star") {
    g = tvc::gen_always_star(a.n, a.T, a.p, a.seed);
    params = {{"n", a.n}, {"T", a.T}, {"p", a.p}};
  } else if (a.family == "single-edge") {
    g = tvc::gen_single_edge(a.T, a.density, a.seed);
    params = {{"T", a.T}, {"density", a.density}};
  } else if (a.family == "star-from-setcover") {
    g = tvc::set_cover_to_star_tvc(tvc::gen_set_cover(a.universe, a.sets, a.p, a.seed));
    params = {{"universe", a.universe}, {"sets", a.sets}, {"p", a.p}};
  } else if (a.family == "star-from-hittingset") {
    g = tvc::hitting_set_to_star_tvc(tvc::gen_hitting_set(a.universe, a.sets, a.p, a.seed));
    params = {{"universe", a.universe}, {"sets", a.sets}, {"p", a.p}};
  } else if (a.family == "cubic-2tvc") {
    g = tvc::cubic_to_2tvc_instance(tvc::named_cubic_graph(a.graph));
    params = {{"graph", a.graph}};
  } else {
    throw CLI::ValidationError("gen", "unknown family '" + a.family + "'");
  }
  std::ofstream out(a.out);
  if (!out) throw std::runtime_error("cannot open " + a.out);
  tvc::serialize_instance(g, out);
  json manifest = {{"generator", a.family}, {"params", params}, {"seed", a.seed}};
  std::ofstream mf(a.out + ".manifest.json");
  mf << manifest.dump(2) << "\n";
  return 0;
}

tvc::TemporalGraph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return tvc::parse_instance(in);
}

struct SolveArgs {
  std::string instance, algo, dump_lp;
  std::optional<int> delta;
  std::uint64_t seed = 1;
  double gamma = 4.0;
  bool oracle = false, verify = true, override_guard = false;
};

int run_solve(const SolveArgs& a) {
  tvc::TemporalGraph g = load_instance(a.instance);
  if (!a.dump_lp.empty()) {
    std::ofstream lp(a.dump_lp);
    lp << tvc::lp_to_text(tvc::build_tvc_lp(g));
  }
  tvc::SolveOptions opt;
  opt.seed = a.seed;
  opt.gamma = a.gamma;
  opt.with_oracle = a.oracle;
  opt.override_guard = a.override_guard;
  tvc::SolveReport r = tvc::run_algorithm(a.algo, g, a.delta, opt);
  r.instance_id = a.instance;
  std::cout << tvc::report_to_json(r).dump() << "\n";
  return (a.verify && !r.verified) ? 4 : 0;
}

struct BenchArgs {
  std::string manifest, csv;
  int jobs = 0;
  bool oracle = false;
};

struct Cell {
  std::string path;
  std::string algo;
  std::optional<int> delta;
};

int run_bench(const BenchArgs& a) {
  std::ifstream mf(a.manifest);
  if (!mf) throw std::runtime_error("cannot open " + a.manifest);
  json man;
  mf >> man;

  std::optional<int> default_delta;
  if (man.contains("delta")) default_delta = man["delta"].get<int>();
  const std::uint64_t seed = man.value("seed", 1);
  const bool oracle = a.oracle || man.value("oracle", false);
  std::vector<Cell> cells;
  for (const auto& inst : man.value("instances", json::array())) {
    std::string path;
    std::optional<int> delta = default_delta;
    if (inst.is_string()) {
      path = inst.get<std::string>();
    } else {
      path = inst.at("path").get<std::string>();
      if (inst.contains("delta")) delta = inst["delta"].get<int>();
    }
    for (const auto& algo : man.value("algos", json::array()))
      cells.push_back({path, algo.get<std::string>(), delta});
  }

  int jobs = a.jobs;
  if (jobs <= 0) {
    const char* env = std::getenv("TVC_JOBS");
    jobs = env ? std::max(1, std::atoi(env)) : 1;
  }

  std::vector<json> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
      const Cell& c = cells[i];
      json row;
      try {
        tvc::TemporalGraph g = load_instance(c.path);
        tvc::SolveOptions opt;
        opt.seed = seed;
        opt.with_oracle = oracle;
        tvc::SolveReport r = tvc::run_algorithm(c.algo, g, c.delta, opt);
        r.instance_id = c.path;
        row = tvc::report_to_json(r);
        row["status"] = r.verified ? "ok" : "verification-failed";
      } catch (const tvc::guard_error& e) {
        row = {{"instance", c.path}, {"algorithm", c.algo}, {"status", "guard"}, {"error", e.what()}};
      } catch (const tvc::instance_class_error& e) {
        row = {{"instance", c.path}, {"algorithm", c.algo}, {"status", "class"}, {"error", e.what()}};
      } catch (const std::exception& e) {
        row = {{"instance", c.path}, {"algorithm", c.algo}, {"status", "error"}, {"error", e.what()}};
      }
      rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const auto& row : rows) std::cout << row.dump() << "\n";

  // per-algorithm summary
  struct Agg {
    std::size_t cells = 0, failed = 0;
    double max_ratio = 0, total_ms = 0;
    bool any_ratio = false;
  };
  std::map<std::string, Agg> agg;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Agg& s = agg[cells[i].algo];
    ++s.cells;
    const json& row = rows[i];
    if (row.value("status", "") != "ok") ++s.failed;
    if (row.contains("ratio")) {
      s.max_ratio = std::max(s.max_ratio, row["ratio"].get<double>());
      s.any_ratio = true;
    }
    if (row.contains("wall_ms")) s.total_ms += row["wall_ms"].get<double>();
  }
  std::ostringstream csv;
  csv << "algorithm,cells,failed,max_ratio,total_wall_ms\n";
  for (const auto& [algo, s] : agg) {
    csv << algo << ',' << s.cells << ',' << s.failed << ',';
    if (s.any_ratio) csv << s.max_ratio;
    csv << ',' << s.total_ms << "\n";
  }
  if (a.csv.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(a.csv);
    out << csv.str();
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal vertex cover solvers and instance tooling"};
  app.require_subcommand(1);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "generate an instance file plus manifest");
  gen->add_option("family", ga.family,
                  "random | always-matching | always-degree-d | always-star | single-edge | "
                  "star-from-setcover | star-from-hittingset | cubic-2tvc")
      ->required();
  gen->add_option("--out", ga.out, "output instance path")->required();
  gen->add_option("--seed", ga.seed, "generator seed");
  gen->add_option("--n", ga.n, "vertex count");
  gen->add_option("--T", ga.T, "lifetime");
  gen->add_option("--p", ga.p, "edge probability");
  gen->add_option("--density", ga.density, "single-edge slot density");
  gen->add_option("--d", ga.d, "max snapshot degree");
  gen->add_option("--universe", ga.universe, "set-cover universe size");
  gen->add_option("--sets", ga.sets, "set-cover family size");
  gen->add_option("--graph", ga.graph, "cubic graph name for cubic-2tvc");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "solve one instance, print a JSON report");
  solve->add_option("instance", sa.instance, "instance file")->required();
  std::string algo_help = "one of:";
  for (const auto& name : tvc::algorithm_names()) algo_help += " " + name;
  solve->add_option("--algo", sa.algo, algo_help)->required();
  int delta_raw = 0;
  auto* dopt = solve->add_option("--delta", delta_raw, "window length (default: lifetime)");
  solve->add_option("--seed", sa.seed, "seed for randomized algorithms");
  solve->add_option("--gamma", sa.gamma, "rounding repetition factor (>= 4)");
  solve->add_flag("--oracle", sa.oracle, "also run the brute-force oracle and emit the ratio");
  solve->add_flag("--verify,!--no-verify", sa.verify, "exit 4 when verification fails (default)");
  solve->add_flag("--override-guard", sa.override_guard, "bypass the DP size guard");
  solve->add_option("--dump-lp", sa.dump_lp, "write the TVC LP relaxation in LP format");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "run a manifest of instances x algorithms");
  bench->add_option("--manifest", ba.manifest, "JSON manifest")->required();
  bench->add_option("--jobs", ba.jobs, "worker threads (default: $TVC_JOBS or 1)");
  bench->add_option("--csv", ba.csv, "write the CSV summary here instead of stdout");
  bench->add_flag("--oracle", ba.oracle, "brute-force oracle column for every cell");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(ga);
    if (solve->parsed()) {
      if (dopt->count()) sa.delta = delta_raw;
      return run_solve(sa);
    }
    if (bench->parsed()) return run_bench(ba);
  } catch (const tvc::guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const tvc::instance_class_error& e) {
    std::cerr << "instance class: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
