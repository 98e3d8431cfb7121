#pragma once

// Approximation algorithms: the set-cover pipeline over (edge, window)
// demands, the frequency-based rule, the O(T) single-edge greedy, and the
// per-edge d-approximation.

#include <algorithm>
#include <vector>

#include "core.hpp"
#include "setcover.hpp"

namespace tvc {

namespace detail {

// element ids of the demand universe {(e,t) : e in E[W_t]}, ordered by
// (window start, edge lexicographic)
struct DemandIndex {
  std::vector<std::vector<Edge>> window_edges; // per window, sorted
  std::vector<int> offsets;                    // element id base per window
  int total = 0;

  DemandIndex(const TemporalGraph& g, const WindowSpec& w) {
    const int W = w.window_count(g.lifetime());
    window_edges.reserve(W);
    offsets.reserve(W);
    for (int t = 1; t <= W; ++t) {
      offsets.push_back(total);
      window_edges.push_back(g.window_edges(w, t));
      total += static_cast<int>(window_edges.back().size());
    }
  }

  int id(const Edge& e, int t) const { // t = window start, 1-based
    const auto& we = window_edges[t - 1];
    auto it = std::lower_bound(we.begin(), we.end(), e);
    return offsets[t - 1] + static_cast<int>(it - we.begin());
  }
};

} // namespace detail

// Reduction to Set Cover: universe {(e,t) : e in E[W_t]}, one set per vertex
// appearance (v,s) holding the demands it temporally covers. Appearances with
// empty coverage are dropped; set order is (s, v).
inline SetCoverInstance sw_tvc_to_set_cover(const TemporalGraph& g, const WindowSpec& w) {
  const int T = g.lifetime();
  const int W = w.window_count(T);
  detail::DemandIndex dx(g, w);
  SetCoverInstance sc;
  sc.universe_size = dx.total;
  std::vector<EdgeId> ids;
  for (Slot s = 1; s <= T; ++s) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      ids.clear();
      g.incident_ids(v, s, ids);
      if (ids.empty()) continue;
      std::vector<int> elems;
      for (EdgeId id : ids) {
        const Edge e = g.edges()[id];
        for (int t = std::max(1, s - w.delta() + 1); t <= std::min(W, s); ++t)
          elems.push_back(dx.id(e, t));
      }
      std::sort(elems.begin(), elems.end());
      sc.sets.push_back(std::move(elems));
      sc.origins.push_back({v, s});
    }
  }
  return sc;
}

// greedy set cover composed with the demand mapping back; ratio H_{n*delta}
inline TemporalVertexSet greedy_sw_tvc(const TemporalGraph& g, const WindowSpec& w) {
  SetCoverInstance sc = sw_tvc_to_set_cover(g, w);
  std::vector<VertexAppearance> items;
  for (int i : greedy_set_cover(sc)) items.push_back(sc.origins[i]);
  return TemporalVertexSet::of(g, items);
}

// max over edges and windows of |lambda(e) ∩ W_t|
inline int delta_frequency(const TemporalGraph& g, const WindowSpec& w) {
  int k = 0;
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.edge_count()); ++id) {
    const auto& lam = g.labels(id);
    std::size_t i = 0;
    for (std::size_t j = 0; j < lam.size(); ++j) {
      while (lam[j] - lam[i] > w.delta() - 1) ++i;
      k = std::max(k, static_cast<int>(j - i + 1));
    }
  }
  return k;
}

// frequency rule: take every set containing the lowest-id uncovered demand
// (at most 2k sets per pick), giving a 2k- and hence 2*delta-approximation
inline TemporalVertexSet frequency_approx(const TemporalGraph& g, const WindowSpec& w) {
  SetCoverInstance sc = sw_tvc_to_set_cover(g, w);
  std::vector<std::vector<int>> covering(sc.universe_size);
  for (int i = 0; i < static_cast<int>(sc.sets.size()); ++i)
    for (int e : sc.sets[i]) covering[e].push_back(i);
  std::vector<char> covered(sc.universe_size, 0), chosen(sc.sets.size(), 0);
  std::vector<VertexAppearance> items;
  for (int e = 0; e < static_cast<int>(sc.universe_size); ++e) {
    if (covered[e]) continue;
    for (int i : covering[e]) {
      if (chosen[i]) continue;
      chosen[i] = 1;
      items.push_back(sc.origins[i]);
      for (int e2 : sc.sets[i]) covered[e2] = 1;
    }
  }
  return TemporalVertexSet::of(g, items);
}

struct IntervalFamily {
  struct Interval {
    int lo, hi;       // on [1, T-delta+1]
    Slot source_slot; // the active slot i the interval came from
  };
  std::vector<Interval> intervals;
};

namespace detail {

inline Edge require_single_edge(const TemporalGraph& g) {
  if (g.edge_count() != 1)
    throw instance_class_error("underlying graph has " + std::to_string(g.edge_count()) +
                               " edges, expected exactly one");
  return g.edges()[0];
}

// O(T) scan: inspect each window right to left, marking
// inactive slots so no slot is ever revisited.
inline std::vector<Slot> min_window_cover_slots(const std::vector<Slot>& lam, int T, int delta) {
  std::vector<char> act(T + 1, 0), marked(T + 1, 0);
  for (Slot t : lam) act[t] = 1;
  std::vector<Slot> picks;
  const Slot W = T - delta + 1;
  Slot t = 1;
  while (t <= W) {
    Slot found = 0;
    for (Slot r = t + delta - 1; r >= t; --r) {
      if (marked[r]) break; // everything below r in this window is inactive too
      if (act[r]) {
        found = r;
        break;
      }
      marked[r] = 1;
    }
    if (found) {
      picks.push_back(found);
      t = found + 1;
    } else {
      ++t;
    }
  }
  return picks;
}

} // namespace detail

// Interval view of a single-edge instance: one interval
// I_i = [i-delta+1, i] ∩ [1, T-delta+1] per active slot i, holding the
// start slots of the windows containing i.
inline IntervalFamily single_edge_to_intervals(const TemporalGraph& g, const WindowSpec& w) {
  const Edge e = detail::require_single_edge(g);
  const int W = w.window_count(g.lifetime());
  IntervalFamily fam;
  for (Slot i : g.labels(e))
    fam.intervals.push_back({std::max(1, i - w.delta() + 1), std::min(i, W), i});
  return fam;
}

// Exact minimum SW-TVC on single-edge temporal graphs, appearances on the
// smaller endpoint.
inline TemporalVertexSet single_edge_greedy(const TemporalGraph& g, const WindowSpec& w) {
  const Edge e = detail::require_single_edge(g);
  std::vector<VertexAppearance> items;
  for (Slot r : detail::min_window_cover_slots(g.labels(e), g.lifetime(), w.delta()))
    items.push_back({e.first, r});
  return TemporalVertexSet::of(g, items);
}

// Solve every single-edge temporal subgraph optimally and take
// the union; a d-approximation for always degree-at-most-d temporal graphs.
inline TemporalVertexSet d_approx(const TemporalGraph& g, const WindowSpec& w) {
  std::vector<VertexAppearance> items;
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.edge_count()); ++id) {
    const Edge e = g.edges()[id];
    for (Slot r : detail::min_window_cover_slots(g.labels(id), g.lifetime(), w.delta()))
      items.push_back({e.first, r});
  }
  return TemporalVertexSet::of(g, items);
}

} // namespace tvc
