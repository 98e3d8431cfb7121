#pragma once

// Set-cover machinery shared by the approximation pipeline, the reductions,
// and the exact TVC backend: the instance type, the classic greedy, and a
// small branch-and-bound exact solver.

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "bits.hpp"
#include "core.hpp"

namespace tvc {

struct SetCoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<int>> sets; // element ids < universe_size, sorted
  // set i originated from origins[i] when produced by a reduction; empty otherwise
  std::vector<VertexAppearance> origins;

  void validate() const {
    std::vector<char> hit(universe_size, 0);
    for (const auto& s : sets)
      for (int e : s) {
        if (e < 0 || static_cast<std::size_t>(e) >= universe_size)
          throw std::invalid_argument("set element out of range");
        hit[e] = 1;
      }
    for (char c : hit)
      if (!c) throw std::invalid_argument("sets do not cover the universe");
  }
};

// Greedy: repeatedly take the set covering the most uncovered elements,
// ties to the lowest index. Returns chosen set indices in pick order.
inline std::vector<int> greedy_set_cover(const SetCoverInstance& sc) {
  std::vector<char> covered(sc.universe_size, 0);
  std::size_t remaining = sc.universe_size;
  std::vector<int> chosen;
  while (remaining > 0) {
    int best = -1;
    std::size_t best_gain = 0;
    for (int i = 0; i < static_cast<int>(sc.sets.size()); ++i) {
      std::size_t gain = 0;
      for (int e : sc.sets[i]) gain += !covered[e];
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best < 0) throw infeasible_error("universe not coverable by the given sets");
    chosen.push_back(best);
    for (int e : sc.sets[best])
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
  }
  return chosen;
}

namespace detail {

struct SetCoverBnb {
  const SetCoverInstance& sc;
  int u;                            // universe size
  std::vector<DynBits> masks;       // per alive set
  std::vector<int> alive;           // original indices of alive sets
  std::vector<std::vector<int>> covering; // element -> alive-set positions
  DynBits full;
  std::vector<int> best;
  std::vector<int> cur;
  std::uint64_t nodes = 0, node_cap;

  explicit SetCoverBnb(const SetCoverInstance& inst, std::uint64_t cap)
      : sc(inst), u(static_cast<int>(inst.universe_size)), full(u), node_cap(cap) {
    for (int e = 0; e < u; ++e) full.set(e);
    // drop dominated sets (subset of another); keep lowest index among equals
    std::vector<DynBits> all;
    all.reserve(sc.sets.size());
    for (const auto& s : sc.sets) {
      DynBits b(u);
      for (int e : s) b.set(e);
      all.push_back(std::move(b));
    }
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
      bool dominated = false;
      for (int j = 0; j < static_cast<int>(all.size()) && !dominated; ++j) {
        if (i == j) continue;
        if (all[j].covers(all[i]) && (all[i] != all[j] || j < i)) dominated = true;
      }
      if (!dominated) {
        alive.push_back(i);
        masks.push_back(all[i]);
      }
    }
    covering.assign(u, {});
    for (int p = 0; p < static_cast<int>(masks.size()); ++p)
      for (int e = 0; e < u; ++e)
        if (masks[p].test(e)) covering[e].push_back(p);
    for (int e = 0; e < u; ++e)
      if (covering[e].empty()) throw infeasible_error("universe not coverable by the given sets");
  }

  // packing bound: greedily pick elements no two of which share a set
  int lower_bound(const DynBits& covered) const {
    DynBits blocked = covered;
    int lb = 0;
    for (int e = 0; e < u; ++e) {
      if (blocked.test(e)) continue;
      ++lb;
      for (int p : covering[e]) blocked.or_with(masks[p]);
    }
    return lb;
  }

  void run(DynBits covered, int depth) {
    if (++nodes > node_cap)
      throw guard_error("set-cover branch and bound exceeded " + std::to_string(node_cap) +
                        " nodes");
    if (covered.covers(full)) {
      best = cur;
      return;
    }
    if (depth + lower_bound(covered) >= static_cast<int>(best.size())) return;
    // branch on the uncovered element with the fewest usable sets
    int elem = -1, fewest = std::numeric_limits<int>::max();
    for (int e = 0; e < u; ++e) {
      if (covered.test(e)) continue;
      int c = static_cast<int>(covering[e].size());
      if (c < fewest) {
        fewest = c;
        elem = e;
      }
    }
    std::vector<std::pair<int, int>> order; // (-gain, pos): larger gain first, ties lower pos
    for (int p : covering[elem]) order.push_back({-gain_of(p, covered), p});
    std::sort(order.begin(), order.end());
    for (auto [neg, p] : order) {
      DynBits next = covered;
      next.or_with(masks[p]);
      cur.push_back(alive[p]);
      run(std::move(next), depth + 1);
      cur.pop_back();
    }
  }

  int gain_of(int p, const DynBits& covered) const { return covered.missing_from(masks[p]); }
};

} // namespace detail

// Exact minimum set cover; returns chosen original set indices (sorted).
inline std::vector<int> set_cover_exact(const SetCoverInstance& sc,
                                        std::uint64_t node_cap = 50'000'000) {
  if (sc.universe_size == 0) return {};
  detail::SetCoverBnb bnb(sc, node_cap);
  // greedy warm start gives the initial upper bound
  bnb.best = greedy_set_cover(sc);
  bnb.run(detail::DynBits(static_cast<int>(sc.universe_size)), 0);
  std::vector<int> out = bnb.best;
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace tvc
