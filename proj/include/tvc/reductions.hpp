#pragma once

// Constructive reductions, used both as instance generators and as
// cross-validation oracles: Set Cover / Hitting Set to star TVC and back,
// the empty-slot padding that lifts delta to delta+1, the 4-subdivision of
// cubic graphs, and the lifetime-2 construction whose 2-window optimum
// equals the subdivision's vertex cover number.

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "core.hpp"
#include "setcover.hpp"

namespace tvc {

struct HittingSetInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<int>> sets; // element ids < universe_size, nonempty

  void validate() const {
    std::vector<char> hit(universe_size, 0);
    for (const auto& s : sets) {
      if (s.empty()) throw std::invalid_argument("hitting set instance with an empty set");
      for (int e : s) {
        if (e < 0 || static_cast<std::size_t>(e) >= universe_size)
          throw std::invalid_argument("set element out of range");
        hit[e] = 1;
      }
    }
    for (char c : hit)
      if (!c) throw std::invalid_argument("sets do not cover the universe");
  }
};

// Star on universe_size+1 vertices, center = id universe_size, T = #sets;
// slot i activates the leaves of set C_i. Optimal TVC size = optimal cover.
inline TemporalGraph set_cover_to_star_tvc(const SetCoverInstance& sc) {
  sc.validate();
  const int n = static_cast<int>(sc.universe_size);
  const Vertex center = n;
  std::vector<std::vector<Edge>> slots(sc.sets.size());
  for (std::size_t i = 0; i < sc.sets.size(); ++i)
    for (int j : sc.sets[i]) slots[i].push_back({j, center});
  return TemporalGraph(n + 1, static_cast<int>(sc.sets.size()), std::move(slots));
}

// Converse direction: C_i = leaves active at slot i. Leaves are numbered by
// ascending vertex id; a single-edge star takes its larger endpoint as
// center, matching set_cover_to_star_tvc's layout.
inline SetCoverInstance star_tvc_to_set_cover(const TemporalGraph& g) {
  if (g.edge_count() == 0) throw instance_class_error("edgeless graph is not a star");
  Vertex a = g.edges()[0].first, b = g.edges()[0].second;
  for (const Edge& e : g.edges()) {
    bool ea = (e.first == a || e.second == a);
    bool eb = (e.first == b || e.second == b);
    if (!ea && !eb) throw instance_class_error("underlying graph is not a star");
    if (!ea) a = b;
    if (!eb) b = a;
  }
  const Vertex center = (a == b) ? a : std::max(a, b);
  std::vector<Vertex> leaves;
  for (const Edge& e : g.edges()) leaves.push_back(e.first == center ? e.second : e.first);
  std::sort(leaves.begin(), leaves.end());
  std::vector<int> leaf_index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < leaves.size(); ++i) leaf_index[leaves[i]] = static_cast<int>(i);

  SetCoverInstance sc;
  sc.universe_size = leaves.size();
  for (Slot t = 1; t <= g.lifetime(); ++t) {
    std::vector<int> set;
    for (const Edge& e : g.snapshot(t))
      set.push_back(leaf_index[e.first == center ? e.second : e.first]);
    std::sort(set.begin(), set.end());
    sc.sets.push_back(std::move(set));
  }
  return sc;
}

// Star on #sets+1 vertices, T = universe size; at slot i the leaves are the
// sets containing element i. Optimal TVC size = optimal hitting set size.
inline TemporalGraph hitting_set_to_star_tvc(const HittingSetInstance& hs) {
  hs.validate();
  const int m = static_cast<int>(hs.sets.size());
  const Vertex center = m;
  std::vector<std::vector<Edge>> slots(hs.universe_size);
  for (int j = 0; j < m; ++j)
    for (int elem : hs.sets[j]) slots[elem].push_back({j, center});
  return TemporalGraph(m + 1, static_cast<int>(hs.universe_size), std::move(slots));
}

// One edgeless slot after every full block of delta original slots (none
// after the final, possibly partial, block); the (delta+1)-window optimum of
// the padded graph equals the delta-window optimum of the original.
inline std::pair<TemporalGraph, WindowSpec> pad_delta_increase(const TemporalGraph& g,
                                                               const WindowSpec& w) {
  const int T = g.lifetime(), delta = w.delta();
  const int pads = (T - 1) / delta;
  std::vector<std::vector<Edge>> slots;
  slots.reserve(T + pads);
  for (Slot s = 1; s <= T; ++s) {
    auto snap = g.snapshot(s);
    slots.emplace_back(snap.begin(), snap.end());
    if (s % delta == 0 && s < T) slots.emplace_back();
  }
  // T == delta inserts no pad; one trailing pad then makes the widened
  // window fit the lifetime (the single window still sees every slot)
  if (static_cast<int>(slots.size()) < delta + 1) slots.emplace_back();
  const int padded_lifetime = static_cast<int>(slots.size());
  TemporalGraph padded(g.vertex_count(), padded_lifetime, std::move(slots));
  return {std::move(padded), WindowSpec(delta + 1, padded.lifetime())};
}

inline Slot padded_slot(Slot original, int delta) { return original + (original - 1) / delta; }
inline bool is_padding_slot(Slot padded, int delta) { return padded % (delta + 1) == 0; }

// Drops appearances at padding slots and maps the rest back to the original
// slot numbering.
inline TemporalVertexSet strip_padding(const TemporalVertexSet& padded_cover, int delta,
                                       const TemporalGraph& original) {
  std::vector<VertexAppearance> items;
  for (const auto& a : padded_cover) {
    if (is_padding_slot(a.slot, delta)) continue;
    items.push_back({a.vertex, a.slot - (a.slot - 1) / (delta + 1)});
  }
  return TemporalVertexSet::of(original, std::move(items));
}

// Subdivide every edge of a cubic graph 4 times; edge of rank r gets the
// fresh path vertices n+4r .. n+4r+3 in path order.
inline StaticGraph subdivide4(const StaticGraph& g) {
  for (int d : g.degrees())
    if (d != 3) throw instance_class_error("subdivide4 expects a cubic graph");
  const int m = static_cast<int>(g.edges.size());
  std::vector<Edge> out;
  for (int r = 0; r < m; ++r) {
    const auto [u, v] = g.edges[r];
    const Vertex a = g.n + 4 * r;
    out.push_back({u, a});
    out.push_back({a, a + 1});
    out.push_back({a + 1, a + 2});
    out.push_back({a + 2, a + 3});
    out.push_back({a + 3, v});
  }
  return StaticGraph(g.n + 4 * m, std::move(out));
}

// Lifetime-2 hard instance: H = subdivide4(g), R = degree-3 vertices of H,
// snapshot 1 = H minus the edges whose both ends sit at BFS distance exactly
// 2 from R, snapshot 2 = H - R. Its exact 2-window TVC size equals tau(H).
inline TemporalGraph cubic_to_2tvc_instance(const StaticGraph& g) {
  const StaticGraph h = subdivide4(g);
  const auto deg = h.degrees();
  std::vector<int> dist(h.n, -1);
  std::queue<Vertex> bfs;
  for (Vertex v = 0; v < h.n; ++v)
    if (deg[v] == 3) {
      dist[v] = 0;
      bfs.push(v);
    }
  std::vector<std::vector<Vertex>> adj(h.n);
  for (const auto& [u, v] : h.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  while (!bfs.empty()) {
    Vertex v = bfs.front();
    bfs.pop();
    for (Vertex u : adj[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        bfs.push(u);
      }
  }
  std::vector<std::vector<Edge>> slots(2);
  for (const Edge& e : h.edges) {
    if (!(dist[e.first] == 2 && dist[e.second] == 2)) slots[0].push_back(e);
    if (deg[e.first] != 3 && deg[e.second] != 3) slots[1].push_back(e);
  }
  return TemporalGraph(h.n, 2, std::move(slots));
}

// The 7-vertex pattern whose induced subgraphs make up every snapshot
// component of the construction above: a center with three length-2 legs.
inline StaticGraph psi_graph() {
  return StaticGraph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

namespace detail {

// induced-subgraph isomorphism by backtracking; both sides are <= 7 vertices
inline bool embeds_induced(const std::vector<std::vector<char>>& small, int ns,
                           const std::vector<std::vector<char>>& big, int nb) {
  if (ns > nb) return false;
  std::vector<int> map(ns, -1);
  std::vector<char> used(nb, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == ns) return true;
    for (int w = 0; w < nb; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (small[v][u] != big[w][map[u]]) ok = false;
      if (!ok) continue;
      used[w] = 1;
      map[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

} // namespace detail

// Do all connected components of the static graph embed as induced
// subgraphs of psi?
inline bool components_embed_in_psi(const StaticGraph& g) {
  const StaticGraph psi = psi_graph();
  std::vector<std::vector<char>> pad(psi.n, std::vector<char>(psi.n, 0));
  for (const auto& [u, v] : psi.edges) pad[u][v] = pad[v][u] = 1;

  std::vector<std::vector<Vertex>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<int> comp(g.n, -1);
  for (Vertex s = 0; s < g.n; ++s) {
    if (comp[s] >= 0 || adj[s].empty()) continue; // isolated vertices embed trivially
    std::vector<Vertex> verts;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = s;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      verts.push_back(v);
      for (Vertex u : adj[v])
        if (comp[u] < 0) {
          comp[u] = s;
          q.push(u);
        }
    }
    if (verts.size() > 7) return false;
    std::sort(verts.begin(), verts.end());
    std::vector<std::vector<char>> cad(verts.size(), std::vector<char>(verts.size(), 0));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = 0; j < verts.size(); ++j)
        cad[i][j] = std::binary_search(adj[verts[i]].begin(), adj[verts[i]].end(), verts[j]);
    if (!detail::embeds_induced(cad, static_cast<int>(verts.size()), pad, psi.n)) return false;
  }
  return true;
}

// Every snapshot's components embed in psi (the always-X membership check
// of the cubic-subdivision instances).
inline bool is_always_psi(const TemporalGraph& g) {
  for (Slot t = 1; t <= g.lifetime(); ++t) {
    auto snap = g.snapshot(t);
    StaticGraph s(g.vertex_count(), std::vector<Edge>(snap.begin(), snap.end()));
    if (!components_embed_in_psi(s)) return false;
  }
  return true;
}

} // namespace tvc
