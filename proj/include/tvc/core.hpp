#pragma once

// Temporal-graph data model: a static underlying graph plus per-slot active
// edge sets, vertex appearances, sliding windows, and the cover checkers that
// every solver is verified against. Slots are 1-based everywhere in the API;
// internal storage is 0-based.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvc {

using Vertex = int;
using Slot = int;                       // 1..T
using Edge = std::pair<Vertex, Vertex>; // normalized u < v
using EdgeId = int;                     // index into TemporalGraph::edges()

inline Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("self-loop edge (" + std::to_string(a) + ")");
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Error taxonomy shared by the solvers and the CLI (exit codes 2/3/4).
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct instance_class_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VertexAppearance {
  Vertex vertex;
  Slot slot;
  // canonical (t, v) order, also the solution JSON order
  friend auto operator<=>(const VertexAppearance& a, const VertexAppearance& b) {
    return std::pair{a.slot, a.vertex} <=> std::pair{b.slot, b.vertex};
  }
  friend bool operator==(const VertexAppearance&, const VertexAppearance&) = default;
};

class WindowSpec {
public:
  WindowSpec(int delta, int lifetime) : delta_(delta) {
    if (delta < 1 || delta > lifetime)
      throw std::out_of_range("window length " + std::to_string(delta) +
                              " outside [1, lifetime=" + std::to_string(lifetime) + "]");
  }
  int delta() const { return delta_; }
  // number of windows W_1 .. W_{T-delta+1}
  int window_count(int lifetime) const { return lifetime - delta_ + 1; }

private:
  int delta_;
};

class TemporalGraph {
public:
  // slots[i] holds the edges active at slot i+1; edges are normalized and
  // deduplicated per slot, endpoints must be < n.
  TemporalGraph(int n, int lifetime, std::vector<std::vector<Edge>> slots)
      : n_(n), lifetime_(lifetime), slots_(std::move(slots)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (lifetime < 1) throw std::invalid_argument("lifetime must be >= 1");
    if (static_cast<int>(slots_.size()) != lifetime)
      throw std::invalid_argument("slot sequence length != lifetime");
    for (auto& es : slots_) {
      for (auto& e : es) {
        e = make_edge(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
          throw std::invalid_argument("edge endpoint out of range");
      }
      std::sort(es.begin(), es.end());
      if (std::adjacent_find(es.begin(), es.end()) != es.end())
        throw std::invalid_argument("duplicate edge within a slot");
    }
    build_index();
  }

  int vertex_count() const { return n_; }
  int lifetime() const { return lifetime_; }

  // underlying edge set E = union of all snapshots, sorted
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> snapshot(Slot t) const {
    check_slot(t);
    return slots_[t - 1];
  }

  EdgeId edge_id(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<EdgeId>(it - edges_.begin());
  }

  // lambda(e): sorted activity slots; empty for unknown edges
  const std::vector<Slot>& labels(const Edge& e) const {
    static const std::vector<Slot> none;
    EdgeId id = edge_id(e);
    return id < 0 ? none : labels_[id];
  }
  const std::vector<Slot>& labels(EdgeId id) const { return labels_[id]; }

  bool active(const Edge& e, Slot t) const {
    check_slot(t);
    const auto& lam = labels(e);
    return std::binary_search(lam.begin(), lam.end(), t);
  }

  // E[W_t] = union of snapshots over the window starting at t
  std::vector<Edge> window_edges(const WindowSpec& w, Slot t) const {
    if (t < 1 || t > w.window_count(lifetime_))
      throw std::out_of_range("window start " + std::to_string(t) + " out of range");
    std::vector<Edge> out;
    for (Slot s = t; s < t + w.delta(); ++s)
      out.insert(out.end(), slots_[s - 1].begin(), slots_[s - 1].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // appends the edge ids of E_t incident to v
  void incident_ids(Vertex v, Slot t, std::vector<EdgeId>& out) const {
    check_slot(t);
    const auto& inc = incidence_[t - 1];
    auto lo = std::lower_bound(inc.begin(), inc.end(), std::pair{v, -1});
    for (; lo != inc.end() && lo->first == v; ++lo) out.push_back(lo->second);
  }

  // (G,lambda)|_[i,j] with slots re-indexed from 1
  TemporalGraph restrict(Slot i, Slot j) const {
    if (i < 1 || j > lifetime_ || i > j)
      throw std::out_of_range("restriction [" + std::to_string(i) + "," + std::to_string(j) +
                              "] out of range");
    std::vector<std::vector<Edge>> sub(slots_.begin() + (i - 1), slots_.begin() + j);
    return TemporalGraph(n_, j - i + 1, std::move(sub));
  }

private:
  void check_slot(Slot t) const {
    if (t < 1 || t > lifetime_)
      throw std::out_of_range("slot " + std::to_string(t) + " outside [1," +
                              std::to_string(lifetime_) + "]");
  }

  void build_index() {
    edges_.clear();
    for (const auto& es : slots_) edges_.insert(edges_.end(), es.begin(), es.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    labels_.assign(edges_.size(), {});
    incidence_.assign(lifetime_, {});
    for (Slot t = 1; t <= lifetime_; ++t) {
      auto& inc = incidence_[t - 1];
      for (const Edge& e : slots_[t - 1]) {
        EdgeId id = edge_id(e);
        labels_[id].push_back(t);
        inc.push_back({e.first, id});
        inc.push_back({e.second, id});
      }
      std::sort(inc.begin(), inc.end());
    }
  }

  int n_;
  int lifetime_;
  std::vector<std::vector<Edge>> slots_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Slot>> labels_;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> incidence_; // per slot, sorted
};

// Convenience constructor from an explicit labeling.
inline TemporalGraph graph_from_labels(int n, int lifetime,
                                       const std::vector<std::pair<Edge, std::vector<Slot>>>& lam) {
  std::vector<std::vector<Edge>> slots(lifetime);
  for (const auto& [e, ts] : lam)
    for (Slot t : ts) {
      if (t < 1 || t > lifetime) throw std::invalid_argument("label outside lifetime");
      slots[t - 1].push_back(e);
    }
  return TemporalGraph(n, lifetime, std::move(slots));
}

class TemporalVertexSet {
public:
  TemporalVertexSet() = default;

  // validates against the hosting graph's dimensions, sorts and deduplicates
  TemporalVertexSet(std::vector<VertexAppearance> items, int n, int lifetime)
      : items_(std::move(items)) {
    for (const auto& a : items_) {
      if (a.vertex < 0 || a.vertex >= n)
        throw std::invalid_argument("appearance vertex " + std::to_string(a.vertex) +
                                    " out of range");
      if (a.slot < 1 || a.slot > lifetime)
        throw std::invalid_argument("appearance slot " + std::to_string(a.slot) + " out of range");
    }
    normalize();
  }

  static TemporalVertexSet of(const TemporalGraph& g, std::vector<VertexAppearance> items) {
    return TemporalVertexSet(std::move(items), g.vertex_count(), g.lifetime());
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<VertexAppearance>& appearances() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(Vertex v, Slot t) const {
    return std::binary_search(items_.begin(), items_.end(), VertexAppearance{v, t});
  }

  // S|_[i,j], re-indexed so slot i becomes 1 (pairs with TemporalGraph::restrict)
  TemporalVertexSet restrict(Slot i, Slot j) const {
    TemporalVertexSet out;
    for (const auto& a : items_)
      if (a.slot >= i && a.slot <= j) out.items_.push_back({a.vertex, a.slot - i + 1});
    return out;
  }

  friend bool operator==(const TemporalVertexSet&, const TemporalVertexSet&) = default;

private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  std::vector<VertexAppearance> items_;
};

// TVC check: every underlying edge temporally covered at least once.
inline bool is_temporal_vertex_cover(const TemporalGraph& g, const TemporalVertexSet& s) {
  std::vector<char> covered(g.edge_count(), 0);
  std::vector<EdgeId> ids;
  for (const auto& a : s) {
    ids.clear();
    g.incident_ids(a.vertex, a.slot, ids);
    for (EdgeId id : ids) covered[id] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace detail {

// Shared walk for the two sliding-window checkers: for every window in which
// the edge is active there must be a hit slot inside the window.
inline bool windows_hit(const std::vector<Slot>& lam, const std::vector<Slot>& hits, int T,
                        int delta) {
  std::size_t ai = 0, hi = 0;
  for (Slot t = 1; t + delta - 1 <= T; ++t) {
    while (ai < lam.size() && lam[ai] < t) ++ai;
    while (hi < hits.size() && hits[hi] < t) ++hi;
    bool active = ai < lam.size() && lam[ai] <= t + delta - 1;
    if (active && !(hi < hits.size() && hits[hi] <= t + delta - 1)) return false;
  }
  return true;
}

} // namespace detail

// SW-TVC check: in every window, every edge of E[W_t] is temporally covered
// by an appearance of S inside that window.
inline bool is_sw_tvc(const TemporalGraph& g, const WindowSpec& w, const TemporalVertexSet& s) {
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.edge_count()); ++id) {
    const Edge e = g.edges()[id];
    const auto& lam = g.labels(id);
    std::vector<Slot> hits;
    for (Slot t : lam)
      if (s.contains(e.first, t) || s.contains(e.second, t)) hits.push_back(t);
    if (!detail::windows_hit(lam, hits, g.lifetime(), w.delta())) return false;
  }
  return true;
}

// Flexible check: coverage may happen at any slot of the window, active or not.
inline bool is_flexible_sw_tvc(const TemporalGraph& g, const WindowSpec& w,
                               const TemporalVertexSet& s) {
  std::vector<std::vector<Slot>> slots_of(g.vertex_count());
  for (const auto& a : s) slots_of[a.vertex].push_back(a.slot);
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.edge_count()); ++id) {
    const Edge e = g.edges()[id];
    std::vector<Slot> hits;
    std::merge(slots_of[e.first].begin(), slots_of[e.first].end(), slots_of[e.second].begin(),
               slots_of[e.second].end(), std::back_inserter(hits));
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (!detail::windows_hit(g.labels(id), hits, g.lifetime(), w.delta())) return false;
  }
  return true;
}

// Plain static graph, used by the vertex-cover solver and the constructions.
struct StaticGraph {
  int n = 0;
  std::vector<Edge> edges;

  StaticGraph() = default;
  StaticGraph(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    for (auto& e : edges) {
      e = make_edge(e.first, e.second);
      if (e.first < 0 || e.second >= n) throw std::invalid_argument("endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) ++deg[u], ++deg[v];
    return deg;
  }
};

} // namespace tvc
