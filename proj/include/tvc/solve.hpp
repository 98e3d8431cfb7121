#pragma once

// Algorithm registry and the SolveReport record the CLI and benchmarks emit.
// The verified flag is always recomputed by the core checkers, never trusted
// from a solver.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "approx.hpp"
#include "core.hpp"
#include "exact.hpp"
#include "io.hpp"
#include "lp.hpp"

namespace tvc {

struct SolveReport {
  std::string instance_id;
  std::string algorithm;
  int delta = 0;
  std::size_t size = 0;
  TemporalVertexSet cover;
  double wall_ms = 0;
  bool verified = false;
  std::optional<std::size_t> optimum_known;
  std::optional<double> ratio; // only with optimum_known
};

inline const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {
      "dp",     "dp-pruned",   "dp-star", "brute",    "greedy",   "freq",
      "edge-greedy", "d-approx", "lp-round", "flexible", "disjoint", "tvc-exact"};
  return names;
}

// disjoint covers are checked per block: each restriction must be a TVC of
// the restricted temporal graph
inline bool is_disjoint_window_cover(const TemporalGraph& g, const WindowSpec& w,
                                     const TemporalVertexSet& s) {
  const int T = g.lifetime(), delta = w.delta();
  for (Slot lo = 1; lo <= T; lo += delta) {
    const Slot hi = std::min(lo + delta - 1, T);
    if (!is_temporal_vertex_cover(g.restrict(lo, hi), s.restrict(lo, hi))) return false;
  }
  return true;
}

struct SolveOptions {
  std::uint64_t seed = 1;
  double gamma = 4.0;
  bool with_oracle = false;
  bool override_guard = false;
  DpStats* stats = nullptr;
};

inline SolveReport run_algorithm(const std::string& algo, const TemporalGraph& g,
                                 std::optional<int> delta_opt, const SolveOptions& opt = {}) {
  const int T = g.lifetime();
  const bool tvc_mode = (algo == "lp-round" || algo == "tvc-exact");
  const int delta = tvc_mode ? T : delta_opt.value_or(T);
  WindowSpec w(delta, T);

  SolveReport r;
  r.algorithm = algo;
  r.delta = delta;
  const auto t0 = std::chrono::steady_clock::now();
  if (algo == "dp")
    r.cover = dp_sw_tvc(g, w, opt.stats, opt.override_guard);
  else if (algo == "dp-pruned")
    r.cover = dp_sw_tvc_pruned(g, w, opt.stats, opt.override_guard);
  else if (algo == "dp-star")
    r.cover = dp_always_star(g, w, opt.stats);
  else if (algo == "brute")
    r.cover = brute_force_sw_tvc(g, w);
  else if (algo == "greedy")
    r.cover = greedy_sw_tvc(g, w);
  else if (algo == "freq")
    r.cover = frequency_approx(g, w);
  else if (algo == "edge-greedy")
    r.cover = single_edge_greedy(g, w);
  else if (algo == "d-approx")
    r.cover = d_approx(g, w);
  else if (algo == "lp-round")
    r.cover = randomized_rounding_tvc(g, opt.gamma, opt.seed);
  else if (algo == "flexible")
    r.cover = solve_flexible(g, w);
  else if (algo == "disjoint")
    r.cover = solve_disjoint(g, w);
  else if (algo == "tvc-exact")
    r.cover = solve_tvc_exact(g, opt.override_guard);
  else
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.size = r.cover.size();

  if (tvc_mode)
    r.verified = is_temporal_vertex_cover(g, r.cover);
  else if (algo == "flexible")
    r.verified = is_flexible_sw_tvc(g, w, r.cover);
  else if (algo == "disjoint")
    r.verified = is_disjoint_window_cover(g, w, r.cover);
  else
    r.verified = is_sw_tvc(g, w, r.cover);

  if (opt.with_oracle) {
    const std::size_t best = brute_force_sw_tvc(g, w).size();
    r.optimum_known = best;
    r.ratio = best == 0 ? 1.0 : static_cast<double>(r.size) / static_cast<double>(best);
  }
  return r;
}

inline nlohmann::json report_to_json(const SolveReport& r, bool include_wall = true) {
  nlohmann::json j = solution_to_json(r.cover);
  j["instance"] = r.instance_id;
  j["algorithm"] = r.algorithm;
  j["delta"] = r.delta;
  j["verified"] = r.verified;
  if (include_wall) j["wall_ms"] = r.wall_ms;
  if (r.optimum_known) j["optimum_known"] = *r.optimum_known;
  if (r.ratio) j["ratio"] = *r.ratio;
  return j;
}

} // namespace tvc
