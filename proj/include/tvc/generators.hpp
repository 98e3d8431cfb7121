#pragma once

// Seeded instance generators for the CLI families and the test corpora.
// Everything is a pure function of its parameters and seed.

#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"
#include "reductions.hpp"
#include "rng.hpp"
#include "setcover.hpp"

namespace tvc {

// every (pair, slot) active independently with probability p
inline TemporalGraph gen_random(int n, int T, double p, std::uint64_t seed) {
  auto rng = stream_rng(seed);
  std::vector<std::vector<Edge>> slots(T);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Slot t = 1; t <= T; ++t)
        if (coin(rng, p)) slots[t - 1].push_back({u, v});
  return TemporalGraph(n, T, std::move(slots));
}

// per slot: a random partial matching
inline TemporalGraph gen_always_matching(int n, int T, std::uint64_t seed) {
  auto rng = stream_rng(seed);
  std::vector<std::vector<Edge>> slots(T);
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (Slot t = 1; t <= T; ++t) {
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
    for (int i = 0; i + 1 < n; i += 2)
      if (coin(rng, 0.6)) slots[t - 1].push_back(make_edge(perm[i], perm[i + 1]));
  }
  return TemporalGraph(n, T, std::move(slots));
}

// per slot: random edges accepted while both endpoint degrees stay <= d
inline TemporalGraph gen_always_degree(int n, int T, int d, double p, std::uint64_t seed) {
  auto rng = stream_rng(seed);
  std::vector<std::vector<Edge>> slots(T);
  std::vector<int> deg(n);
  for (Slot t = 1; t <= T; ++t) {
    std::fill(deg.begin(), deg.end(), 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (deg[u] < d && deg[v] < d && coin(rng, p)) {
          slots[t - 1].push_back({u, v});
          ++deg[u];
          ++deg[v];
        }
  }
  return TemporalGraph(n, T, std::move(slots));
}

// per slot: empty, or a star with a random center and random leaves
inline TemporalGraph gen_always_star(int n, int T, double p, std::uint64_t seed) {
  auto rng = stream_rng(seed);
  std::vector<std::vector<Edge>> slots(T);
  for (Slot t = 1; t <= T; ++t) {
    Vertex c = static_cast<Vertex>(uniform_int(rng, 0, n - 1));
    for (Vertex v = 0; v < n; ++v)
      if (v != c && coin(rng, p)) slots[t - 1].push_back(make_edge(c, v));
  }
  return TemporalGraph(n, T, std::move(slots));
}

// one edge, each slot active with the given density, at least one label
inline TemporalGraph gen_single_edge(int T, double density, std::uint64_t seed) {
  auto rng = stream_rng(seed);
  std::vector<std::vector<Edge>> slots(T);
  bool any = false;
  for (Slot t = 1; t <= T; ++t)
    if (coin(rng, density)) {
      slots[t - 1].push_back({0, 1});
      any = true;
    }
  if (!any) slots[uniform_int(rng, 0, T - 1)].push_back({0, 1});
  return TemporalGraph(2, T, std::move(slots));
}

// random set-cover instance; missing elements are patched into random sets
inline SetCoverInstance gen_set_cover(int universe, int nsets, double p, std::uint64_t seed) {
  auto rng = stream_rng(seed);
  SetCoverInstance sc;
  sc.universe_size = universe;
  sc.sets.assign(nsets, {});
  for (auto& s : sc.sets)
    for (int e = 0; e < universe; ++e)
      if (coin(rng, p)) s.push_back(e);
  for (int e = 0; e < universe; ++e) {
    bool hit = false;
    for (const auto& s : sc.sets) hit = hit || std::binary_search(s.begin(), s.end(), e);
    if (!hit) {
      auto& s = sc.sets[uniform_int(rng, 0, nsets - 1)];
      s.insert(std::lower_bound(s.begin(), s.end(), e), e);
    }
  }
  return sc;
}

inline HittingSetInstance gen_hitting_set(int universe, int nsets, double p, std::uint64_t seed) {
  auto rng = stream_rng(seed);
  HittingSetInstance hs;
  hs.universe_size = universe;
  hs.sets.assign(nsets, {});
  for (auto& s : hs.sets) {
    for (int e = 0; e < universe; ++e)
      if (coin(rng, p)) s.push_back(e);
    if (s.empty()) s.push_back(static_cast<int>(uniform_int(rng, 0, universe - 1)));
  }
  // hitting-set instances additionally need every element used somewhere
  for (int e = 0; e < universe; ++e) {
    bool hit = false;
    for (const auto& s : hs.sets) hit = hit || std::binary_search(s.begin(), s.end(), e);
    if (!hit) {
      auto& s = hs.sets[uniform_int(rng, 0, nsets - 1)];
      s.insert(std::lower_bound(s.begin(), s.end(), e), e);
    }
  }
  return hs;
}

inline StaticGraph named_cubic_graph(const std::string& name) {
  if (name == "k4") return StaticGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "k33")
    return StaticGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  if (name == "prism")
    return StaticGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "petersen")
    return StaticGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                            {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  throw std::invalid_argument("unknown cubic graph '" + name + "' (k4, k33, prism, petersen)");
}

} // namespace tvc
