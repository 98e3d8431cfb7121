#pragma once

// Test-side oracles, all plain enumeration: they must stay independent of
// the solver code paths they check.

#include <optional>
#include <vector>

#include "tvc/core.hpp"

namespace tvctest {

// Smallest index combination (increasing cardinality, lexicographic) passing
// the predicate; nullopt if none of any size does.
template <typename Check>
std::optional<std::vector<int>> min_combination(int n, Check&& ok) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) return ok(cur);
    for (int i = start; i + remaining <= n; ++i) {
      cur.push_back(i);
      if (self(self, i + 1, remaining - 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  for (int c = 0; c <= n; ++c) {
    cur.clear();
    if (rec(rec, 0, c)) return cur;
  }
  return std::nullopt;
}

inline tvc::TemporalVertexSet appearance_subset(const tvc::TemporalGraph& g,
                                                const std::vector<int>& idx) {
  const int n = g.vertex_count();
  std::vector<tvc::VertexAppearance> items;
  for (int a : idx) items.push_back({a % n, a / n + 1}); // index = (t-1)*n + v
  return tvc::TemporalVertexSet::of(g, std::move(items));
}

// minimum flexible SW-TVC by enumeration with the flexible checker
inline tvc::TemporalVertexSet brute_force_flexible(const tvc::TemporalGraph& g,
                                                   const tvc::WindowSpec& w) {
  const int N = g.vertex_count() * g.lifetime();
  auto best = min_combination(N, [&](const std::vector<int>& idx) {
    return tvc::is_flexible_sw_tvc(g, w, appearance_subset(g, idx));
  });
  return appearance_subset(g, *best);
}

// minimum set cover size by enumeration over set-index combinations
inline std::size_t min_set_cover_size(std::size_t universe,
                                      const std::vector<std::vector<int>>& sets) {
  auto best = min_combination(static_cast<int>(sets.size()), [&](const std::vector<int>& idx) {
    std::vector<char> hit(universe, 0);
    for (int i : idx)
      for (int e : sets[i]) hit[e] = 1;
    for (char c : hit)
      if (!c) return false;
    return true;
  });
  return best->size();
}

// minimum hitting set size by enumeration over element combinations
inline std::size_t min_hitting_set_size(std::size_t universe,
                                        const std::vector<std::vector<int>>& sets) {
  auto best = min_combination(static_cast<int>(universe), [&](const std::vector<int>& idx) {
    for (const auto& s : sets) {
      bool hit = false;
      for (int e : s)
        for (int i : idx) hit = hit || (e == i);
      if (!hit) return false;
    }
    return true;
  });
  return best->size();
}

// minimum subfamily covering the union of all intervals (integer points)
inline std::size_t min_interval_cover_size(const std::vector<std::pair<int, int>>& intervals) {
  int lo = 1 << 30, hi = -(1 << 30);
  for (auto [a, b] : intervals) {
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  }
  std::vector<char> needed(std::max(0, hi - lo + 1), 0);
  for (auto [a, b] : intervals)
    for (int x = a; x <= b; ++x) needed[x - lo] = 1;
  auto best = min_combination(static_cast<int>(intervals.size()),
                              [&](const std::vector<int>& idx) {
                                std::vector<char> got(needed.size(), 0);
                                for (int i : idx)
                                  for (int x = intervals[i].first; x <= intervals[i].second; ++x)
                                    got[x - lo] = 1;
                                return got == needed;
                              });
  return best->size();
}

// static minimum vertex cover by subset enumeration (tiny n only)
inline std::size_t min_vertex_cover_size(const std::vector<tvc::Edge>& edges, int n) {
  auto best = min_combination(n, [&](const std::vector<int>& idx) {
    for (const auto& [u, v] : edges) {
      bool hit = false;
      for (int x : idx) hit = hit || x == u || x == v;
      if (!hit) return false;
    }
    return true;
  });
  return best->size();
}

} // namespace tvctest
