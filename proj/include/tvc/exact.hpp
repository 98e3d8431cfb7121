#pragma once

// Exact solvers.
//
// The sliding-window dynamic program works on f(t; A_1..A_delta), the
// cheapest cover of the first t+delta-1 slots whose appearances at slots
// t..t+delta-1 are exactly the tuple. Transition:
//
//   f(t; A_1..A_delta) = |A_delta| + min over X of f(t-1; X, A_1..A_{delta-1})
//
// with infeasible tuples (the tuple does not temporally cover its own window)
// pinned to infinity, base case f(1; .) = sum |A_i| when feasible, and the
// answer the minimum over the last layer. One engine runs the recursion over
// arbitrary per-slot candidate lists; the full solver feeds it every subset
// of V (the state index then coincides with the packed n*delta-bit tuple,
// A_1 in the low bits), the pruned and always-star variants feed it the
// restricted lists.

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "approx.hpp"
#include "bits.hpp"
#include "core.hpp"
#include "setcover.hpp"

namespace tvc {

// ---------------------------------------------------------------------------
// static minimum vertex cover, branch and bound

namespace detail {

struct VcSolver {
  int n;
  std::vector<char> adj; // n*n matrix
  std::vector<int> deg;
  std::vector<Vertex> best, cur;

  bool at(int u, int v) const { return adj[u * n + v]; }

  void drop(int v) {
    for (int u = 0; u < n; ++u)
      if (at(v, u)) {
        adj[v * n + u] = adj[u * n + v] = 0;
        --deg[u];
      }
    deg[v] = 0;
  }

  int matching_bound() const {
    std::vector<char> used(n, 0);
    int lb = 0;
    for (int u = 0; u < n; ++u) {
      if (used[u]) continue;
      for (int v = u + 1; v < n; ++v)
        if (!used[v] && at(u, v)) {
          used[u] = used[v] = 1;
          ++lb;
          break;
        }
    }
    return lb;
  }

  void search() {
    // degree-1 reduction: the neighbor of a pendant vertex is always safe
    auto undo_state = std::tuple{adj, deg, cur.size()};
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < n && !changed; ++v)
        if (deg[v] == 1) {
          int u = 0;
          while (!at(v, u)) ++u;
          cur.push_back(u);
          drop(u);
          changed = true;
        }
    }
    int maxdeg = 0, pick = -1;
    for (int v = 0; v < n; ++v)
      if (deg[v] > maxdeg) {
        maxdeg = deg[v];
        pick = v;
      }
    if (pick < 0) {
      if (cur.size() < best.size()) best = cur;
    } else if (cur.size() + matching_bound() < best.size()) {
      { // branch 1: pick in the cover
        auto saved = std::tuple{adj, deg, cur.size()};
        cur.push_back(pick);
        drop(pick);
        search();
        std::tie(adj, deg, std::ignore) = saved;
        cur.resize(std::get<2>(saved));
      }
      { // branch 2: all neighbors of pick in the cover
        auto saved = std::tuple{adj, deg, cur.size()};
        for (int u = 0; u < n; ++u)
          if (at(pick, u)) {
            cur.push_back(u);
            drop(u);
          }
        search();
        std::tie(adj, deg, std::ignore) = saved;
        cur.resize(std::get<2>(saved));
      }
    }
    std::tie(adj, deg, std::ignore) = undo_state;
    cur.resize(std::get<2>(undo_state));
  }
};

} // namespace detail

// Minimum-cardinality vertex cover of a simple static graph, returned sorted.
inline std::vector<Vertex> static_vertex_cover_exact(const std::vector<Edge>& edges, int n) {
  detail::VcSolver s;
  s.n = n;
  s.adj.assign(static_cast<std::size_t>(n) * n, 0);
  s.deg.assign(n, 0);
  for (Edge e : edges) {
    e = make_edge(e.first, e.second);
    if (e.second >= n || e.first < 0) throw std::invalid_argument("endpoint out of range");
    if (!s.adj[e.first * n + e.second]) {
      s.adj[e.first * n + e.second] = s.adj[e.second * n + e.first] = 1;
      ++s.deg[e.first];
      ++s.deg[e.second];
    }
  }
  for (int v = 0; v < n; ++v)
    if (s.deg[v] > 0) s.best.push_back(v);
  s.search();
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

inline std::vector<Vertex> static_vertex_cover_exact(const StaticGraph& g) {
  return static_vertex_cover_exact(g.edges, g.n);
}

// ---------------------------------------------------------------------------
// brute-force oracle

namespace detail {

template <std::size_t K>
struct BruteKernel {
  using Mask = std::array<std::uint64_t, K>;

  static void or_into(Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < K; ++i) a[i] |= b[i];
  }
  static bool covers(const Mask& have, const Mask& need) {
    for (std::size_t i = 0; i < K; ++i)
      if (need[i] & ~have[i]) return false;
    return true;
  }
  static int missing(const Mask& have, const Mask& need) {
    int c = 0;
    for (std::size_t i = 0; i < K; ++i) c += std::popcount(need[i] & ~have[i]);
    return c;
  }

  int N = 0;
  Mask need{};
  std::vector<Mask> am;     // per-appearance coverage
  std::vector<Mask> suffix; // OR of am[i..N-1]
  int max_gain = 0;
  std::vector<int> chosen;

  void finish_setup() {
    suffix.assign(N + 1, Mask{});
    for (int i = N - 1; i >= 0; --i) {
      suffix[i] = suffix[i + 1];
      or_into(suffix[i], am[i]);
      max_gain = std::max(max_gain, missing(Mask{}, am[i]));
    }
  }

  bool rec(int start, int remaining, const Mask& acc) {
    if (remaining == 0) return covers(acc, need);
    int miss = missing(acc, need);
    if (max_gain == 0 || miss > remaining * max_gain) return false;
    for (int i = start; i + remaining <= N; ++i) {
      Mask reach = acc;
      or_into(reach, suffix[i]);
      if (!covers(reach, need)) return false; // later suffixes only shrink
      Mask nxt = acc;
      or_into(nxt, am[i]);
      chosen.push_back(i);
      if (rec(i + 1, remaining - 1, nxt)) return true;
      chosen.pop_back();
    }
    return false;
  }

  // first (lexicographically smallest) appearance-index list of minimum size
  std::vector<int> solve() {
    for (int c = 0; c <= N; ++c) {
      chosen.clear();
      if (rec(0, c, Mask{})) return chosen;
    }
    throw std::logic_error("brute force: full appearance set failed to cover");
  }
};

template <std::size_t K>
std::vector<int> brute_force_indices(const TemporalGraph& g, const WindowSpec& w) {
  const int n = g.vertex_count(), T = g.lifetime(), W = w.window_count(T);
  DemandIndex dx(g, w);
  BruteKernel<K> kern;
  kern.N = n * T;
  for (int i = 0; i < dx.total; ++i) kern.need[i >> 6] |= std::uint64_t{1} << (i & 63);
  kern.am.assign(kern.N, {});
  std::vector<EdgeId> ids;
  for (Slot s = 1; s <= T; ++s)
    for (Vertex v = 0; v < n; ++v) {
      auto& mask = kern.am[(s - 1) * n + v]; // appearance order (t, v)
      ids.clear();
      g.incident_ids(v, s, ids);
      for (EdgeId id : ids) {
        const Edge e = g.edges()[id];
        for (int t = std::max(1, s - w.delta() + 1); t <= std::min(W, s); ++t) {
          int d = dx.id(e, t);
          mask[d >> 6] |= std::uint64_t{1} << (d & 63);
        }
      }
    }
  kern.finish_setup();
  return kern.solve();
}

} // namespace detail

// Minimum SW-TVC by enumeration over all temporal vertex subsets in
// increasing cardinality, ties broken by lexicographic order of the sorted
// appearance lists. Independent oracle; guarded at nT <= 24.
inline TemporalVertexSet brute_force_sw_tvc(const TemporalGraph& g, const WindowSpec& w) {
  const int n = g.vertex_count(), T = g.lifetime();
  if (n * T > 24)
    throw guard_error("brute force refuses nT = " + std::to_string(n * T) + " > 24");
  detail::DemandIndex dx(g, w);
  std::vector<int> idx;
  if (dx.total <= 64)
    idx = detail::brute_force_indices<1>(g, w);
  else if (dx.total <= 128)
    idx = detail::brute_force_indices<2>(g, w);
  else
    idx = detail::brute_force_indices<5>(g, w);
  std::vector<VertexAppearance> items;
  for (int a : idx) items.push_back({a % n, a / n + 1});
  TemporalVertexSet out = TemporalVertexSet::of(g, std::move(items));
  if (!is_sw_tvc(g, w, out)) throw std::logic_error("brute force produced an invalid cover");
  return out;
}

// ---------------------------------------------------------------------------
// dynamic programming engine

struct Candidate {
  std::vector<Vertex> verts;
};

// Strict coverage needs the edge active at the appearance's slot; flexible
// coverage accepts any slot of the window.
enum class WindowCoverage { active_slot, any_slot };

struct DpStats {
  std::vector<std::size_t> candidates_per_slot;
  std::size_t max_states_per_step = 0;
  std::size_t steps = 0;
  bool capture_final = false;   // request: copy the last layer into final_costs
  std::vector<int> final_costs; // layout: mixed radix, earliest slot least significant
};

namespace detail {

inline constexpr int kInfCost = std::numeric_limits<int>::max() / 4;

inline TemporalVertexSet dp_over_candidates(const TemporalGraph& g, const WindowSpec& w,
                                            const std::vector<std::span<const Candidate>>& cands,
                                            bool assert_full_tuple, std::uint64_t state_cap,
                                            DpStats* stats,
                                            WindowCoverage rule = WindowCoverage::active_slot) {
  const int T = g.lifetime(), delta = w.delta();
  if (delta > T)
    throw std::out_of_range("window length " + std::to_string(delta) +
                            " exceeds the graph lifetime " + std::to_string(T));
  const int W = T - delta + 1;
  const int m = static_cast<int>(g.edge_count());

  std::vector<std::uint64_t> radix(T);
  for (int s = 0; s < T; ++s) {
    radix[s] = cands[s].size();
    if (radix[s] == 0) throw std::invalid_argument("slot with empty candidate list");
  }

  // guard: dense layer tables and parent logs must stay affordable
  std::uint64_t max_layer = 0, parent_entries = 0;
  for (int t = 1; t <= W; ++t) {
    unsigned __int128 L = 1;
    for (int i = 0; i < delta; ++i) {
      L *= radix[t - 1 + i];
      if (L > state_cap)
        throw guard_error("dp table needs more than " + std::to_string(state_cap) +
                          " states per layer (estimate >= " + std::to_string(state_cap) +
                          "); instance refused");
    }
    max_layer = std::max<std::uint64_t>(max_layer, static_cast<std::uint64_t>(L));
    if (t >= 2) parent_entries += static_cast<std::uint64_t>(L) / radix[t + delta - 2];
  }
  if (parent_entries > 400'000'000ull)
    throw guard_error("dp reconstruction log estimate " + std::to_string(parent_entries * 4) +
                      " bytes; instance refused");

  if (stats) {
    stats->candidates_per_slot.assign(radix.begin(), radix.end());
    stats->max_states_per_step = max_layer;
    stats->steps = W;
  }

  // per-(slot, candidate) coverage over underlying edge ids; under the
  // flexible rule a vertex covers its whole incidence regardless of slot
  std::vector<DynBits> incident_any;
  if (rule == WindowCoverage::any_slot) {
    incident_any.assign(g.vertex_count(), DynBits(m));
    for (EdgeId id = 0; id < m; ++id) {
      incident_any[g.edges()[id].first].set(id);
      incident_any[g.edges()[id].second].set(id);
    }
  }
  std::vector<std::vector<DynBits>> cover(T);
  std::vector<DynBits> slot_all(T, DynBits(m));
  std::vector<EdgeId> ids;
  for (Slot s = 1; s <= T; ++s) {
    for (const Edge& e : g.snapshot(s)) slot_all[s - 1].set(g.edge_id(e));
    cover[s - 1].reserve(cands[s - 1].size());
    for (const Candidate& c : cands[s - 1]) {
      DynBits b(m);
      for (Vertex v : c.verts) {
        if (rule == WindowCoverage::any_slot) {
          b.or_with(incident_any[v]);
        } else {
          ids.clear();
          g.incident_ids(v, s, ids);
          for (EdgeId id : ids) b.set(id);
        }
      }
      cover[s - 1].push_back(std::move(b));
    }
  }
  auto window_mask = [&](int t) {
    DynBits b(m);
    for (int i = 0; i < delta; ++i) b.or_with(slot_all[t - 1 + i]);
    return b;
  };

  std::vector<int> layer, next_layer;
  std::vector<std::vector<std::uint32_t>> parent_logs;
  std::vector<std::uint64_t> prefix_counts, layer_sizes;

  std::uint64_t L1 = 1;
  for (int i = 0; i < delta; ++i) L1 *= radix[i];
  layer.assign(L1, kInfCost);
  layer_sizes.push_back(L1);
  {
    DynBits need = window_mask(1);
    std::vector<DynBits> acc(delta, DynBits(m));
    bool any = false;
    auto rec = [&](auto&& self, int depth, std::uint64_t idx, std::uint64_t stride,
                   int cost) -> void {
      const int s = depth; // 0-based slot
      const auto& cv = cover[s];
      if (depth == delta - 1) {
        const DynBits& base = depth ? acc[depth - 1] : acc[0];
        for (std::uint64_t c = 0; c < radix[s]; ++c) {
          bool ok = depth ? DynBits::covers_or(need, base, cv[c]) : cv[c].covers(need);
          if (ok) {
            layer[idx + stride * c] = cost + static_cast<int>(cands[s][c].verts.size());
            any = true;
          }
        }
        return;
      }
      for (std::uint64_t c = 0; c < radix[s]; ++c) {
        acc[depth] = depth ? acc[depth - 1] : DynBits(m);
        acc[depth].or_with(cv[c]);
        self(self, depth + 1, idx + stride * c, stride * radix[s],
             cost + static_cast<int>(cands[s][c].verts.size()));
      }
    };
    rec(rec, 0, 0, 1, 0);
    if (!any) throw std::logic_error("dp: no feasible tuple in the first window");
    if (assert_full_tuple && layer[L1 - 1] >= kInfCost)
      throw std::logic_error("dp: all-vertices tuple infeasible at t=1");
  }

  for (int t = 2; t <= W; ++t) {
    const std::uint64_t r_prev = radix[t - 2];
    const std::uint64_t prefix_count = layer_sizes.back() / r_prev;
    std::vector<int> gmin(prefix_count, kInfCost);
    std::vector<std::uint32_t> argx(prefix_count, 0);
    for (std::uint64_t q = 0; q < prefix_count; ++q) {
      const std::uint64_t base = q * r_prev;
      int bv = kInfCost;
      std::uint32_t bx = 0;
      for (std::uint64_t x = 0; x < r_prev; ++x)
        if (layer[base + x] < bv) {
          bv = layer[base + x];
          bx = static_cast<std::uint32_t>(x);
        }
      gmin[q] = bv;
      argx[q] = bx;
    }
    parent_logs.push_back(std::move(argx));
    prefix_counts.push_back(prefix_count);

    const std::uint64_t last_r = radix[t + delta - 2];
    const std::uint64_t Lt = prefix_count * last_r;
    next_layer.assign(Lt, kInfCost);
    layer_sizes.push_back(Lt);

    DynBits need = window_mask(t);
    std::vector<DynBits> acc(delta, DynBits(m));
    bool any = false;
    auto rec = [&](auto&& self, int depth, std::uint64_t idx) -> void {
      const int s = t - 1 + depth; // 0-based slot index
      const auto& cv = cover[s];
      if (depth == delta - 1) {
        const int base_cost = gmin[idx]; // idx holds the full prefix index here
        const DynBits& base = depth ? acc[depth - 1] : acc[0];
        for (std::uint64_t c = 0; c < last_r; ++c) {
          bool ok = depth ? DynBits::covers_or(need, base, cv[c]) : cv[c].covers(need);
          if (ok && base_cost < kInfCost) {
            next_layer[idx + prefix_count * c] =
                base_cost + static_cast<int>(cands[s][c].verts.size());
            any = true;
          }
        }
        return;
      }
      std::uint64_t stride = 1;
      for (int i = 0; i < depth; ++i) stride *= radix[t - 1 + i];
      for (std::uint64_t c = 0; c < radix[s]; ++c) {
        acc[depth] = depth ? acc[depth - 1] : DynBits(m);
        acc[depth].or_with(cv[c]);
        self(self, depth + 1, idx + stride * c);
      }
    };
    rec(rec, 0, 0);
    if (!any) throw std::logic_error("dp: no feasible tuple at step " + std::to_string(t));
    if (assert_full_tuple && next_layer[Lt - 1] >= kInfCost)
      throw std::logic_error("dp: all-vertices tuple infeasible at t=" + std::to_string(t));
    layer.swap(next_layer);
  }

  if (stats && stats->capture_final) stats->final_costs = layer;

  // answer and reconstruction
  std::uint64_t best_idx = 0;
  int best_cost = kInfCost;
  for (std::uint64_t i = 0; i < layer.size(); ++i)
    if (layer[i] < best_cost) {
      best_cost = layer[i];
      best_idx = i;
    }

  std::vector<std::vector<Vertex>> chosen(T + 1);
  std::uint64_t rem = best_idx;
  for (int d = 0; d < delta; ++d) {
    const std::uint64_t r = radix[W - 1 + d];
    chosen[W + d] = cands[W - 1 + d][rem % r].verts;
    rem /= r;
  }
  std::uint64_t idx = best_idx;
  for (int t = W; t >= 2; --t) {
    const std::uint64_t pc = prefix_counts[t - 2];
    const std::uint64_t q = idx % pc;
    const std::uint32_t x = parent_logs[t - 2][q];
    chosen[t - 1] = cands[t - 2][x].verts;
    idx = x + radix[t - 2] * q;
  }

  std::vector<VertexAppearance> items;
  for (Slot s = 1; s <= T; ++s)
    for (Vertex v : chosen[s]) items.push_back({v, s});
  if (static_cast<int>(items.size()) != best_cost)
    throw std::logic_error("dp: reconstructed cover size disagrees with table cost");
  return TemporalVertexSet::of(g, std::move(items));
}

inline std::vector<Candidate> all_subsets(int n) {
  std::vector<Candidate> pool(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < pool.size(); ++mask)
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) pool[mask].verts.push_back(v);
  return pool;
}

// subsets of `base` with cardinality <= cap, by cardinality then lexicographic
inline std::vector<Candidate> bounded_subsets(const std::vector<Vertex>& base, int cap) {
  std::vector<Candidate> out;
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      out.push_back({cur});
      return;
    }
    for (std::size_t i = start; i + remaining <= base.size(); ++i) {
      cur.push_back(base[i]);
      self(self, i + 1, remaining - 1);
      cur.pop_back();
    }
  };
  for (int c = 0; c <= cap && c <= static_cast<int>(base.size()); ++c) rec(rec, 0, c);
  return out;
}

} // namespace detail

// Exact SW-TVC over the full 2^{n*delta} state space. Refuses when
// n(delta+1) > 26 unless override_guard is set.
inline TemporalVertexSet dp_sw_tvc(const TemporalGraph& g, const WindowSpec& w,
                                   DpStats* stats = nullptr, bool override_guard = false) {
  const int n = g.vertex_count();
  const std::uint64_t exponent = static_cast<std::uint64_t>(n) * (w.delta() + 1);
  if (!override_guard && exponent > 26)
    throw guard_error("dp_sw_tvc refuses n(delta+1) = " + std::to_string(exponent) +
                      " > 26 (table estimate 2^" + std::to_string(n * w.delta()) +
                      " states); set the override to force");
  if (n > 20)
    throw guard_error("dp_sw_tvc cannot enumerate 2^" + std::to_string(n) +
                      " subsets per slot");
  std::vector<Candidate> pool = detail::all_subsets(n);
  std::vector<std::span<const Candidate>> per_slot(g.lifetime(), std::span(pool));
  return detail::dp_over_candidates(g, w, per_slot, /*assert_full_tuple=*/true,
                                    std::uint64_t{1} << (override_guard ? 30 : 26), stats);
}

// Bounded-vertex-cover refinement: per-slot candidates are subsets of the active
// endpoints with cardinality at most the snapshot's vertex cover number.
inline TemporalVertexSet dp_sw_tvc_pruned(const TemporalGraph& g, const WindowSpec& w,
                                          DpStats* stats = nullptr, bool override_guard = false) {
  const int T = g.lifetime();
  std::vector<std::vector<Candidate>> lists(T);
  for (Slot t = 1; t <= T; ++t) {
    auto snap = g.snapshot(t);
    std::vector<Vertex> endpoints;
    for (const Edge& e : snap) {
      endpoints.push_back(e.first);
      endpoints.push_back(e.second);
    }
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
    const int vc = static_cast<int>(
        static_vertex_cover_exact(std::vector<Edge>(snap.begin(), snap.end()), g.vertex_count())
            .size());
    lists[t - 1] = detail::bounded_subsets(endpoints, vc);
    if (!override_guard && lists[t - 1].size() > (std::size_t{1} << 20))
      throw guard_error("dp_sw_tvc_pruned candidate list for slot " + std::to_string(t) +
                        " has " + std::to_string(lists[t - 1].size()) + " entries; refused");
  }
  std::vector<std::span<const Candidate>> per_slot(T);
  for (int i = 0; i < T; ++i) per_slot[i] = lists[i];
  return detail::dp_over_candidates(g, w, per_slot, /*assert_full_tuple=*/false,
                                    std::uint64_t{1} << (override_guard ? 30 : 26), stats);
}

// Always-star specialization: one binary choice per slot, the star center (for
// single-edge snapshots the smaller endpoint serves as center).
inline TemporalVertexSet dp_always_star(const TemporalGraph& g, const WindowSpec& w,
                                        DpStats* stats = nullptr) {
  const int T = g.lifetime();
  std::vector<std::vector<Candidate>> lists(T);
  for (Slot t = 1; t <= T; ++t) {
    auto snap = g.snapshot(t);
    lists[t - 1].push_back({});
    if (snap.empty()) continue;
    // center candidates shrink edge by edge; distinct edges leave at most one
    Vertex a = snap[0].first, b = snap[0].second;
    for (const Edge& e : snap) {
      bool ea = (e.first == a || e.second == a);
      bool eb = (e.first == b || e.second == b);
      if (!ea && !eb) throw instance_class_error("snapshot " + std::to_string(t) + " is not a star");
      if (!ea) a = b;
      if (!eb) b = a;
    }
    Vertex center = (a == b) ? a : std::min(a, b); // single edge: smaller endpoint
    lists[t - 1].push_back({{center}});
  }
  std::vector<std::span<const Candidate>> per_slot(T);
  for (int i = 0; i < T; ++i) per_slot[i] = lists[i];
  return detail::dp_over_candidates(g, w, per_slot, /*assert_full_tuple=*/false,
                                    std::uint64_t{1} << 26, stats);
}

// ---------------------------------------------------------------------------
// whole-lifetime and alternative models

// Exact TVC: the delta = T special case of the DP when it fits, otherwise
// exact set cover on the single-window reduction.
inline TemporalVertexSet solve_tvc_exact(const TemporalGraph& g, bool override_guard = false) {
  if (g.edge_count() == 0) return {};
  const int T = g.lifetime();
  const std::uint64_t exponent = static_cast<std::uint64_t>(g.vertex_count()) * (T + 1);
  if (exponent <= 26) return dp_sw_tvc(g, WindowSpec(T, T), nullptr, override_guard);
  SetCoverInstance sc = sw_tvc_to_set_cover(g, WindowSpec(T, T));
  if (sc.universe_size > 4096 || sc.sets.size() > 16384)
    throw guard_error("tvc-exact: dp needs 2^" + std::to_string(exponent) +
                      " work and the set-cover instance has " + std::to_string(sc.sets.size()) +
                      " sets over " + std::to_string(sc.universe_size) + " elements; refused");
  std::vector<VertexAppearance> items;
  for (int i : set_cover_exact(sc)) items.push_back(sc.origins[i]);
  return TemporalVertexSet::of(g, std::move(items));
}

// Block construction for Flexible SW-TVC: one static vertex cover per
// delta-multiple slot, over the edge union of D_i = [(i-1)d+1, (i+1)d-1].
// Always feasible. It is NOT always optimal: one appearance inside the
// overlap D_i ∩ D_{i+1} can serve two blocks (single edge active only at
// slot 3 with T=4, delta=2 has a flexible cover of size 1, the blocks give
// 2), so the exact solver below only uses this beyond its DP guard.
inline TemporalVertexSet flexible_block_cover(const TemporalGraph& g, const WindowSpec& w) {
  const int T = g.lifetime(), delta = w.delta();
  const int k = T / delta;
  std::vector<VertexAppearance> items;
  for (int i = 1; i <= k; ++i) {
    const Slot lo = (i - 1) * delta + 1;
    const Slot hi = std::min((i + 1) * delta - 1, T);
    std::vector<Edge> uni;
    for (Slot s = lo; s <= hi; ++s) {
      auto snap = g.snapshot(s);
      uni.insert(uni.end(), snap.begin(), snap.end());
    }
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    for (Vertex v : static_vertex_cover_exact(uni, g.vertex_count()))
      items.push_back({v, i * delta});
  }
  TemporalVertexSet out = TemporalVertexSet::of(g, std::move(items));
  if (!is_flexible_sw_tvc(g, w, out))
    throw std::logic_error("flexible block construction failed its own certificate");
  return out;
}

// Optimal Flexible SW-TVC: the sliding-window recursion carries over with
// the relaxed per-window coverage predicate, so the same tuple DP computes
// the optimum. Falls back to the block construction when the state space
// exceeds the DP guard.
inline TemporalVertexSet solve_flexible(const TemporalGraph& g, const WindowSpec& w) {
  const int n = g.vertex_count();
  if (static_cast<std::uint64_t>(n) * (w.delta() + 1) > 26 || n > 20)
    return flexible_block_cover(g, w);
  std::vector<Candidate> pool = detail::all_subsets(n);
  std::vector<std::span<const Candidate>> per_slot(g.lifetime(), std::span(pool));
  TemporalVertexSet out =
      detail::dp_over_candidates(g, w, per_slot, /*assert_full_tuple=*/true,
                                 std::uint64_t{1} << 26, nullptr, WindowCoverage::any_slot);
  if (!is_flexible_sw_tvc(g, w, out))
    throw std::logic_error("flexible dp failed its own certificate");
  return out;
}

// Disjoint-window model: independent TVC per consecutive delta-block.
inline TemporalVertexSet solve_disjoint(const TemporalGraph& g, const WindowSpec& w) {
  const int T = g.lifetime(), delta = w.delta();
  const int k = (T + delta - 1) / delta;
  std::vector<VertexAppearance> items;
  for (int i = 1; i <= k; ++i) {
    const Slot lo = (i - 1) * delta + 1;
    const Slot hi = std::min(i * delta, T);
    for (const auto& a : solve_tvc_exact(g.restrict(lo, hi)))
      items.push_back({a.vertex, a.slot + lo - 1});
  }
  return TemporalVertexSet::of(g, std::move(items));
}

} // namespace tvc
