#include "mmslab/vertex_enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "mmslab/errors.hpp"

namespace mms {

namespace {

struct TreeSearch {
  std::size_t m, n;
  std::span<const double> supply, demand;
  std::vector<std::pair<std::size_t, std::size_t>> tight;
  std::vector<std::size_t> chosen;
  std::size_t nodes = 0, max_nodes;
  bool complete = true;
  std::set<std::vector<std::tuple<std::size_t, std::size_t, long long>>> seen;
  VertexEnumeration* out;

  std::size_t find(std::vector<std::size_t>& parent, std::size_t x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  void emit() {
    // Unique flow on the spanning tree by repeated leaf elimination.
    const std::size_t V = m + n;
    std::vector<double> residual(V);
    for (std::size_t i = 0; i < m; ++i) residual[i] = supply[i];
    for (std::size_t j = 0; j < n; ++j) residual[m + j] = demand[j];
    std::vector<std::vector<std::size_t>> inc(V);
    for (std::size_t e = 0; e < chosen.size(); ++e) {
      inc[tight[chosen[e]].first].push_back(e);
      inc[m + tight[chosen[e]].second].push_back(e);
    }
    std::vector<std::size_t> degree(V);
    for (std::size_t x = 0; x < V; ++x) degree[x] = inc[x].size();
    std::vector<char> done(chosen.size(), 0);
    std::vector<double> flow(chosen.size(), 0.0);
    std::vector<std::size_t> stack;
    for (std::size_t x = 0; x < V; ++x)
      if (degree[x] == 1) stack.push_back(x);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      if (degree[x] != 1) continue;
      std::size_t e = *std::find_if(inc[x].begin(), inc[x].end(), [&](std::size_t k) { return !done[k]; });
      done[e] = 1;
      flow[e] = residual[x];
      std::size_t y = x < m ? m + tight[chosen[e]].second : tight[chosen[e]].first;
      residual[y] -= flow[e];
      residual[x] = 0.0;
      degree[x] = 0;
      if (--degree[y] == 1) stack.push_back(y);
    }
    const double tol = 1e-12;
    std::vector<std::tuple<std::size_t, std::size_t, long long>> key;
    std::vector<Atom> plan;
    for (std::size_t e = 0; e < chosen.size(); ++e) {
      if (flow[e] < -tol) return;
      if (flow[e] > tol) {
        auto [i, j] = tight[chosen[e]];
        plan.push_back({i, j, flow[e]});
        key.emplace_back(i, j, std::llround(flow[e] * 1e9));
      }
    }
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    std::sort(plan.begin(), plan.end(),
              [](const Atom& a, const Atom& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    out->plans.push_back(std::move(plan));
  }

  void dfs(std::size_t next, std::vector<std::size_t> parent) {
    if (++nodes > max_nodes) {
      complete = false;
      return;
    }
    const std::size_t need = m + n - 1;
    if (chosen.size() == need) {
      emit();
      return;
    }
    if (tight.size() - next < need - chosen.size()) return;
    auto [i, j] = tight[next];
    std::size_t ri = find(parent, i), rj = find(parent, m + j);
    if (ri != rj) {
      auto with = parent;
      with[ri] = rj;
      chosen.push_back(next);
      dfs(next + 1, std::move(with));
      chosen.pop_back();
      if (!complete) return;
    }
    dfs(next + 1, std::move(parent));
  }
};

}  // namespace

VertexEnumeration enumerate_optimal_vertices(std::span<const double> supply, std::span<const double> demand,
                                             std::span<const double> cost, std::span<const double> u,
                                             std::span<const double> v, std::size_t max_nodes) {
  const std::size_t m = supply.size(), n = demand.size();
  VertexEnumeration res;
  TreeSearch search{m, n, supply, demand, {}, {}, 0, max_nodes, true, {}, &res};
  double cmax = 0.0;
  for (double c : cost) cmax = std::max(cmax, std::abs(c));
  const double tol = 1e-9 * std::max(1.0, cmax);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(cost[i * n + j] - u[i] - v[j]) <= tol) search.tight.emplace_back(i, j);
  std::vector<std::size_t> parent(m + n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  search.dfs(0, parent);
  res.complete = search.complete;
  return res;
}

std::vector<Coupling> optimal_couplings(const FiniteSpace& space, const Measure& mu0, const Measure& mu1,
                                        const W2Result& exact, std::size_t max_points, bool* complete) {
  const auto& rows = exact.rows;
  const auto& cols = exact.cols;
  if (rows.size() + cols.size() > max_points)
    throw BudgetExceeded("vertex enumeration: supports exceed the exhaustive point budget");
  if (exact.u.size() != rows.size() || exact.v.size() != cols.size())
    throw ValidationError("vertex enumeration: needs an exact w2 result with duals");
  const std::size_t m = rows.size(), n = cols.size();
  std::vector<double> s(m), d(n), c(m * n);
  for (std::size_t a = 0; a < m; ++a) s[a] = mu0.mass[rows[a]];
  for (std::size_t b = 0; b < n; ++b) d[b] = mu1.mass[cols[b]];
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double dist = space.distance(rows[a], cols[b]);
      c[a * n + b] = dist * dist;
    }
  auto vert = enumerate_optimal_vertices(s, d, c, exact.u, exact.v);
  if (complete) *complete = vert.complete;
  std::vector<Coupling> out;
  for (const auto& plan : vert.plans) {
    Coupling cp{space.size(), {}};
    for (const auto& a : plan) cp.atoms.push_back({rows[a.from], cols[a.to], a.mass});
    out.push_back(std::move(cp));
  }
  return out;
}

}  // namespace mms
