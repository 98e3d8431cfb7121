#pragma once

// The TVC integer program's LP relaxation, a dense two-phase simplex, and
// the randomized-rounding approximation.
//
//   minimize   sum x_vt
//   subject to sum over t in lambda(uv) of (x_ut + x_vt) >= 1   for uv in E
//              x_vt >= 0
//
// Rounding picks (v,t) with probability x*_vt, repeated ceil(gamma ln n)
// times; the union is returned when it covers, otherwise the trivial
// one-appearance-per-edge cover.

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "rng.hpp"

namespace tvc {

struct TvcLinearProgram {
  int num_vertices = 0;
  int lifetime = 0;
  std::vector<std::vector<int>> constraints; // one per edge: the variable ids, coeff 1
  std::vector<Edge> constraint_edges;

  int var_count() const { return num_vertices * lifetime; }
  int var_id(Vertex v, Slot t) const { return v * lifetime + (t - 1); }
  VertexAppearance var_appearance(int id) const { return {id / lifetime, id % lifetime + 1}; }
};

struct FractionalSolution {
  std::vector<double> values; // clamped to [0,1]
  double objective_value = 0;
};

inline TvcLinearProgram build_tvc_lp(const TemporalGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("LP needs at least one edge");
  TvcLinearProgram lp;
  lp.num_vertices = g.vertex_count();
  lp.lifetime = g.lifetime();
  for (const Edge& e : g.edges()) {
    std::vector<int> row;
    for (Slot t : g.labels(e)) {
      row.push_back(lp.var_id(e.first, t));
      row.push_back(lp.var_id(e.second, t));
    }
    lp.constraints.push_back(std::move(row));
    lp.constraint_edges.push_back(e);
  }
  return lp;
}

namespace detail {

// Two-phase primal simplex on the dense tableau, Bland's rule throughout
// (lowest-index entering column, lowest-basis-index ratio ties), which keeps
// it deterministic and cycle-free. Columns: structurals, surplus, artificial.
class Simplex {
public:
  Simplex(const TvcLinearProgram& lp, double eps) : eps_(eps) {
    nx_ = lp.var_count();
    m_ = static_cast<int>(lp.constraints.size());
    cols_ = nx_ + 2 * m_;
    tab_.assign(m_, std::vector<double>(cols_ + 1, 0.0));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (int j : lp.constraints[i]) tab_[i][j] += 1.0;
      tab_[i][nx_ + i] = -1.0;      // surplus
      tab_[i][nx_ + m_ + i] = 1.0;  // artificial
      tab_[i][cols_] = 1.0;         // rhs
      basis_[i] = nx_ + m_ + i;
    }
  }

  std::vector<double> solve() {
    // phase 1: minimize the artificials
    std::vector<double> cost(cols_, 0.0);
    for (int j = nx_ + m_; j < cols_; ++j) cost[j] = 1.0;
    run(cost, cols_);
    if (objective(cost) > 1e-7) throw numerical_error("simplex: phase 1 left residual");
    drive_out_artificials();
    // phase 2: minimize the structural sum, artificials locked out
    std::vector<double> cost2(cols_, 0.0);
    for (int j = 0; j < nx_; ++j) cost2[j] = 1.0;
    run(cost2, nx_ + m_);
    std::vector<double> x(nx_, 0.0);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < nx_) x[basis_[i]] = tab_[i][cols_];
    return x;
  }

private:
  double objective(const std::vector<double>& cost) const {
    double z = 0;
    for (int i = 0; i < m_; ++i) z += cost[basis_[i]] * tab_[i][cols_];
    return z;
  }

  void pivot(int r, int c) {
    auto& row = tab_[r];
    const double inv = 1.0 / row[c];
    for (double& v : row) v *= inv;
    row[c] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r || std::abs(tab_[i][c]) < eps_) continue;
      const double f = tab_[i][c];
      for (int j = 0; j <= cols_; ++j) tab_[i][j] -= f * row[j];
      tab_[i][c] = 0.0;
    }
    basis_[r] = c;
  }

  void run(const std::vector<double>& cost, int usable_cols) {
    for (int iter = 0;; ++iter) {
      if (iter > iter_cap_) throw numerical_error("simplex: iteration cap exceeded");
      // reduced costs from scratch each pivot keeps the arithmetic simple
      int enter = -1;
      for (int j = 0; j < usable_cols && enter < 0; ++j) {
        double rc = cost[j];
        for (int i = 0; i < m_; ++i) rc -= cost[basis_[i]] * tab_[i][j];
        if (rc < -1e-9) enter = j;
      }
      if (enter < 0) return;
      int leave = -1;
      double best = 0;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= eps_) continue;
        const double ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave < 0 || ratio < best - 1e-12 ||
            (ratio < best + 1e-12 && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) throw numerical_error("simplex: unbounded direction");
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (int i = m_ - 1; i >= 0; --i) {
      if (basis_[i] < nx_ + m_) continue;
      int c = -1;
      for (int j = 0; j < nx_ + m_ && c < 0; ++j)
        if (std::abs(tab_[i][j]) > eps_) c = j;
      if (c >= 0) {
        pivot(i, c);
      } else { // redundant row
        tab_.erase(tab_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
      }
    }
  }

  double eps_;
  int nx_ = 0, m_ = 0, cols_ = 0;
  int iter_cap_ = 200000;
  std::vector<std::vector<double>> tab_;
  std::vector<int> basis_;
};

} // namespace detail

inline FractionalSolution solve_lp(const TvcLinearProgram& lp, double tol = 1e-9) {
  detail::Simplex simplex(lp, 1e-9);
  FractionalSolution sol;
  sol.values = simplex.solve();
  // any x > 1 can be cut back to 1 without losing feasibility
  for (double& v : sol.values) v = std::min(1.0, std::max(0.0, v));
  for (const auto& row : lp.constraints) {
    double lhs = 0;
    for (int j : row) lhs += sol.values[j];
    if (lhs < 1.0 - tol) throw numerical_error("LP solution violates a cover constraint");
  }
  for (double v : sol.values) sol.objective_value += v;
  return sol;
}

// LP-format dump for cross-checking with external solvers.
inline std::string lp_to_text(const TvcLinearProgram& lp) {
  std::ostringstream out;
  auto name = [&](int id) {
    auto a = lp.var_appearance(id);
    return "x_" + std::to_string(a.vertex) + "_" + std::to_string(a.slot);
  };
  out << "Minimize\n obj:";
  for (int j = 0; j < lp.var_count(); ++j) out << (j ? " + " : " ") << name(j);
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    out << " e" << i << ":";
    bool first = true;
    for (int j : lp.constraints[i]) {
      out << (first ? " " : " + ") << name(j);
      first = false;
    }
    out << " >= 1\n";
  }
  out << "End\n";
  return out.str();
}

// One appearance per edge: the smaller endpoint at the first active slot.
inline TemporalVertexSet trivial_cover(const TemporalGraph& g) {
  std::vector<VertexAppearance> items;
  for (const Edge& e : g.edges()) items.push_back({e.first, g.labels(e).front()});
  return TemporalVertexSet::of(g, std::move(items));
}

// Randomized rounding with ceil(gamma ln n) independent experiments and the
// trivial-cover fallback; output is always a feasible TVC.
inline TemporalVertexSet randomized_rounding_tvc(const TemporalGraph& g, double gamma,
                                                 std::uint64_t seed) {
  if (gamma < 4.0) throw std::invalid_argument("randomized rounding requires gamma >= 4");
  if (g.edge_count() == 0) return {};
  const int n = g.vertex_count();
  const TvcLinearProgram lp = build_tvc_lp(g);
  const FractionalSolution frac = solve_lp(lp);
  const int reps = n <= 1 ? 1 : std::max(1, static_cast<int>(std::ceil(gamma * std::log(n))));
  std::vector<VertexAppearance> items;
  for (int rep = 0; rep < reps; ++rep) {
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(rep));
    for (int j = 0; j < lp.var_count(); ++j)
      if (uniform01(rng) < frac.values[j]) items.push_back(lp.var_appearance(j));
  }
  TemporalVertexSet rounded = TemporalVertexSet::of(g, std::move(items));
  if (is_temporal_vertex_cover(g, rounded)) return rounded;
  return trivial_cover(g);
}

} // namespace tvc
