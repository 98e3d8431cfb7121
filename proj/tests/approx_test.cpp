#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "tvc/approx.hpp"
#include "tvc/exact.hpp"
#include "tvc/generators.hpp"

using namespace tvc;

namespace {

TemporalGraph single_edge_graph(int T, std::vector<Slot> labels) {
  return graph_from_labels(2, T, {{{0, 1}, std::move(labels)}});
}

double harmonic(int k) {
  double h = 0;
  for (int i = 1; i <= k; ++i) h += 1.0 / i;
  return h;
}

} // namespace

TEST_CASE("set-cover reduction shape") {
  auto g = single_edge_graph(3, {1, 3});
  auto sc = sw_tvc_to_set_cover(g, WindowSpec(2, 3));
  CHECK(sc.universe_size == 2); // (uv,1) and (uv,2)
  REQUIRE(sc.sets.size() == 4); // (u,1),(v,1),(u,3),(v,3)
  CHECK(sc.origins[0] == VertexAppearance{0, 1});
  CHECK(sc.sets[0] == std::vector<int>{0});
  CHECK(sc.origins[2] == VertexAppearance{0, 3});
  CHECK(sc.sets[2] == std::vector<int>{1});

  auto h = single_edge_graph(3, {2});
  auto sch = sw_tvc_to_set_cover(h, WindowSpec(2, 3));
  REQUIRE(sch.sets.size() == 2);
  CHECK(sch.sets[0] == std::vector<int>{0, 1}); // slot 2 lies in both windows

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = gen_random(4, 4, 0.4, seed + 100);
    WindowSpec w(2, 4);
    for (const auto& set : sw_tvc_to_set_cover(r, w).sets)
      CHECK(set.size() <= static_cast<std::size_t>(r.vertex_count() * w.delta()));
  }
}

TEST_CASE("greedy set cover picks the best set, lowest index on ties") {
  SetCoverInstance sc;
  sc.universe_size = 4;
  sc.sets = {{0, 1, 2}, {0, 3}, {3}};
  CHECK(greedy_set_cover(sc) == std::vector<int>{0, 1});

  SetCoverInstance one;
  one.universe_size = 3;
  one.sets = {{0, 1, 2}};
  CHECK(greedy_set_cover(one) == std::vector<int>{0});

  SetCoverInstance tie;
  tie.universe_size = 1;
  tie.sets = {{0}, {0}};
  CHECK(greedy_set_cover(tie) == std::vector<int>{0});

  SetCoverInstance bad;
  bad.universe_size = 2;
  bad.sets = {{0}};
  CHECK_THROWS_AS(greedy_set_cover(bad), infeasible_error);
}

TEST_CASE("greedy sw-tvc stays within the harmonic ratio") {
  auto g = single_edge_graph(3, {1, 3});
  WindowSpec w(2, 3);
  auto cover = greedy_sw_tvc(g, w);
  CHECK(is_sw_tvc(g, w, cover));
  CHECK(cover.size() == 2);
  CHECK(greedy_sw_tvc(single_edge_graph(3, {2}), w).size() == 1);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto r = gen_random(2 + seed % 3, 1 + seed % 5, 0.3 + 0.1 * (seed % 3), seed + 500);
    const int T = r.lifetime();
    WindowSpec wr(1 + static_cast<int>(seed) % T, T);
    auto approx = greedy_sw_tvc(r, wr);
    CHECK(is_sw_tvc(r, wr, approx));
    auto opt = brute_force_sw_tvc(r, wr).size();
    CHECK(approx.size() <= std::ceil(harmonic(r.vertex_count() * wr.delta()) * opt) + 1e-9);
  }
}

TEST_CASE("delta frequency") {
  CHECK(delta_frequency(single_edge_graph(5, {1, 2, 5}), WindowSpec(2, 5)) == 2);
  CHECK(delta_frequency(single_edge_graph(3, {1, 3}), WindowSpec(2, 3)) == 1);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen_random(3, 5, 0.5, seed + 900);
    for (int delta = 1; delta <= 5; ++delta) CHECK(delta_frequency(g, WindowSpec(delta, 5)) <= delta);
  }
}

TEST_CASE("frequency rule is a 2k-approximation") {
  auto g1 = single_edge_graph(1, {1});
  auto f1 = frequency_approx(g1, WindowSpec(1, 1));
  CHECK(f1.size() == 2); // takes both endpoints

  auto g2 = single_edge_graph(3, {2});
  WindowSpec w2(2, 3);
  CHECK(frequency_approx(g2, w2).size() == 2);
  CHECK(brute_force_sw_tvc(g2, w2).size() == 1);

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto r = gen_random(2 + seed % 3, 1 + seed % 5, 0.35, seed + 700);
    const int T = r.lifetime();
    WindowSpec w(1 + static_cast<int>(seed) % T, T);
    auto approx = frequency_approx(r, w);
    CHECK(is_sw_tvc(r, w, approx));
    const std::size_t opt = brute_force_sw_tvc(r, w).size();
    CHECK(approx.size() <= std::size_t{2} * delta_frequency(r, w) * opt);
  }
}

TEST_CASE("interval construction for single-edge graphs") {
  auto fam = single_edge_to_intervals(single_edge_graph(5, {1, 2, 5}), WindowSpec(2, 5));
  REQUIRE(fam.intervals.size() == 3);
  CHECK((fam.intervals[0].lo == 1 && fam.intervals[0].hi == 1));
  CHECK((fam.intervals[1].lo == 1 && fam.intervals[1].hi == 2));
  CHECK((fam.intervals[2].lo == 4 && fam.intervals[2].hi == 4));

  auto tiny = single_edge_to_intervals(single_edge_graph(1, {1}), WindowSpec(1, 1));
  CHECK((tiny.intervals[0].lo == 1 && tiny.intervals[0].hi == 1));
  auto late = single_edge_to_intervals(single_edge_graph(3, {3}), WindowSpec(3, 3));
  CHECK((late.intervals[0].lo == 1 && late.intervals[0].hi == 1));

  auto two = gen_always_matching(4, 2, 5);
  if (two.edge_count() != 1)
    CHECK_THROWS_AS(single_edge_to_intervals(two, WindowSpec(1, 2)), instance_class_error);
}

TEST_CASE("single-edge greedy traces and optimality") {
  auto g = single_edge_graph(5, {1, 2, 5});
  WindowSpec w(2, 5);
  auto s = single_edge_greedy(g, w);
  CHECK(s == TemporalVertexSet::of(g, {{0, 2}, {0, 5}}));

  auto g2 = single_edge_graph(3, {1, 3});
  CHECK(single_edge_greedy(g2, WindowSpec(2, 3)) == TemporalVertexSet::of(g2, {{0, 1}, {0, 3}}));
  auto g3 = single_edge_graph(3, {2});
  CHECK(single_edge_greedy(g3, WindowSpec(2, 3)) == TemporalVertexSet::of(g3, {{0, 2}}));

  // exhaustive over label sets for small T, every delta
  for (int T = 1; T <= 6; ++T)
    for (int bits = 1; bits < (1 << T); ++bits) {
      std::vector<Slot> lam;
      for (int t = 1; t <= T; ++t)
        if (bits >> (t - 1) & 1) lam.push_back(t);
      auto e = single_edge_graph(T, lam);
      for (int delta = 1; delta <= T; ++delta) {
        WindowSpec wd(delta, T);
        auto mine = single_edge_greedy(e, wd);
        CHECK(is_sw_tvc(e, wd, mine));
        CHECK(mine.size() == brute_force_sw_tvc(e, wd).size());
      }
    }
}

TEST_CASE("interval covering view agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = gen_single_edge(4 + seed % 6, 0.45, seed + 300);
    const int T = g.lifetime();
    WindowSpec w(1 + static_cast<int>(seed) % T, T);
    auto fam = single_edge_to_intervals(g, w);
    std::vector<std::pair<int, int>> iv;
    for (const auto& i : fam.intervals) iv.push_back({i.lo, i.hi});
    CHECK(tvctest::min_interval_cover_size(iv) == brute_force_sw_tvc(g, w).size());
  }
}

TEST_CASE("d-approximation") {
  auto match = graph_from_labels(4, 2, {{{0, 1}, {1}}, {{2, 3}, {2}}});
  WindowSpec w2(2, 2);
  auto cover = d_approx(match, w2);
  CHECK(is_sw_tvc(match, w2, cover));
  CHECK(cover.size() == 2);
  CHECK(cover.size() == brute_force_sw_tvc(match, w2).size());

  auto single = single_edge_graph(3, {1, 3});
  CHECK(d_approx(single, WindowSpec(2, 3)).size() == 2);

  // triangle: per-edge picks (0,1),(0,1),(1,1) collapse to two appearances,
  // within the d=2 bound over the optimum 2
  auto k3 = graph_from_labels(3, 1, {{{0, 1}, {1}}, {{0, 2}, {1}}, {{1, 2}, {1}}});
  auto k3cover = d_approx(k3, WindowSpec(1, 1));
  CHECK(is_sw_tvc(k3, WindowSpec(1, 1), k3cover));
  CHECK(k3cover.size() == 2);
  CHECK(brute_force_sw_tvc(k3, WindowSpec(1, 1)).size() == 2);
  CHECK(k3cover.size() <= 2 * brute_force_sw_tvc(k3, WindowSpec(1, 1)).size());

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int d = 1 + static_cast<int>(seed % 3);
    auto g = gen_always_degree(4, 4, d, 0.5, seed + 40);
    for (Slot t = 1; t <= 4; ++t) { // generator honors its degree bound
      std::vector<int> deg(4, 0);
      for (const auto& [u, v] : g.snapshot(t)) {
        CHECK(++deg[u] <= d);
        CHECK(++deg[v] <= d);
      }
    }
    WindowSpec w(1 + static_cast<int>(seed) % 4, 4);
    auto approx = d_approx(g, w);
    CHECK(is_sw_tvc(g, w, approx));
    int dmax = 0;
    for (Slot t = 1; t <= 4; ++t) {
      std::vector<int> deg(4, 0);
      for (const auto& [u, v] : g.snapshot(t)) {
        dmax = std::max(dmax, ++deg[u]);
        dmax = std::max(dmax, ++deg[v]);
      }
    }
    const std::size_t opt = brute_force_sw_tvc(g, w).size();
    CHECK(approx.size() <= static_cast<std::size_t>(std::max(1, dmax)) * opt);
    if (dmax <= 1) CHECK(approx.size() == opt);
  }
}

TEST_CASE("set-cover reduction preserves the optimum on small instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen_random(3, 4, 0.35, seed + 1200);
    const int T = g.lifetime();
    WindowSpec w(1 + static_cast<int>(seed) % T, T);
    auto sc = sw_tvc_to_set_cover(g, w);
    if (sc.universe_size > 12) continue;
    CHECK(tvctest::min_set_cover_size(sc.universe_size, sc.sets) ==
          brute_force_sw_tvc(g, w).size());
  }
}
