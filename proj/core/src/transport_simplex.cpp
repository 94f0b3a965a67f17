#include "mmslab/transport_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mmslab/errors.hpp"

namespace mms {

namespace {

class NetworkSimplex {
 public:
  NetworkSimplex(std::span<const double> s, std::span<const double> d, std::span<const double> c,
                 const TransportOptions& opt)
      : m_(s.size()), n_(d.size()), cost_(c), opt_(opt) {
    double cmax = 0.0;
    for (double x : c) cmax = std::max(cmax, std::abs(x));
    eps_ = opt.reduced_cost_tol * (cmax > 0.0 ? cmax : 1.0);
    mass_tol_ = 1e-15 * std::max(1.0, std::accumulate(s.begin(), s.end(), 0.0));
    initial_basis(s, d);
    adj_.resize(m_ + n_);
    for (std::size_t k = 0; k < cells_.size(); ++k) link(k);
    u_.resize(m_);
    v_.resize(n_);
    parent_.resize(m_ + n_);
    seen_.resize(m_ + n_);
    queue_.reserve(m_ + n_);
  }

  TransportSolution run() {
    const std::size_t budget = opt_.max_pivots ? opt_.max_pivots : 50 * (m_ * n_ + m_ + n_);
    std::size_t streak = 0;
    bool bland = false;
    TransportSolution sol;
    const std::size_t block = std::max<std::size_t>(16, static_cast<std::size_t>(std::sqrt(double(m_ * n_))));
    std::size_t cursor = 0;
    for (;;) {
      potentials();
      std::size_t enter = kNone;
      if (bland) {
        for (std::size_t k = 0; k < m_ * n_; ++k)
          if (reduced(k) < -eps_) { enter = k; break; }
      } else {
        double best = -eps_;
        std::size_t scanned = 0, total = m_ * n_;
        while (scanned < total) {
          std::size_t stop = std::min(total, scanned + block);
          for (; scanned < stop; ++scanned) {
            std::size_t k = cursor;
            cursor = cursor + 1 == total ? 0 : cursor + 1;
            double rc = reduced(k);
            if (rc < best) { best = rc; enter = k; }
          }
          if (enter != kNone) break;
        }
      }
      if (enter == kNone) break;
      if (sol.pivots >= budget) throw BudgetExceeded("transport: pivot budget exhausted");
      bool degenerate = pivot(enter / n_, enter % n_, bland);
      ++sol.pivots;
      if (degenerate) {
        ++sol.degenerate_pivots;
        if (++streak > m_ + n_) bland = true;
      } else {
        streak = 0;
        bland = false;
      }
    }
    potentials();
    sol.u = u_;
    sol.v = v_;
    std::vector<std::size_t> order(cells_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return key(cells_[a]) < key(cells_[b]);
    });
    for (std::size_t k : order) {
      const Cell& cl = cells_[k];
      sol.basis.push_back({cl.i, cl.j, cl.flow});
      if (cl.flow > 0.0) {
        sol.plan.push_back({cl.i, cl.j, cl.flow});
        sol.cost += cl.flow * cost_[cl.i * n_ + cl.j];
      }
    }
    return sol;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  struct Cell {
    std::size_t i, j;
    double flow;
  };

  std::size_t key(const Cell& c) const { return c.i * n_ + c.j; }
  double reduced(std::size_t k) const { return cost_[k] - u_[k / n_] - v_[k % n_]; }

  void initial_basis(std::span<const double> s, std::span<const double> d) {
    // North-west corner rule; always yields a spanning tree of m + n - 1 cells.
    std::vector<double> r(s.begin(), s.end()), c(d.begin(), d.end());
    std::size_t i = 0, j = 0;
    for (;;) {
      double x = std::min(r[i], c[j]);
      cells_.push_back({i, j, x});
      r[i] -= x;
      c[j] -= x;
      if (i == m_ - 1 && j == n_ - 1) break;
      if (i == m_ - 1) ++j;
      else if (j == n_ - 1) ++i;
      else if (r[i] <= c[j]) ++i;
      else ++j;
    }
  }

  void link(std::size_t k) {
    adj_[cells_[k].i].push_back(k);
    adj_[m_ + cells_[k].j].push_back(k);
  }
  void unlink(std::size_t k) {
    for (std::size_t node : {cells_[k].i, m_ + cells_[k].j}) {
      auto& a = adj_[node];
      a.erase(std::find(a.begin(), a.end(), k));
    }
  }

  void potentials() {
    std::fill(seen_.begin(), seen_.end(), 0);
    queue_.clear();
    queue_.push_back(0);
    seen_[0] = 1;
    u_[0] = 0.0;
    for (std::size_t h = 0; h < queue_.size(); ++h) {
      std::size_t node = queue_[h];
      for (std::size_t k : adj_[node]) {
        const Cell& cl = cells_[k];
        std::size_t other = node < m_ ? m_ + cl.j : cl.i;
        if (seen_[other]) continue;
        seen_[other] = 1;
        double cij = cost_[cl.i * n_ + cl.j];
        if (node < m_) v_[cl.j] = cij - u_[cl.i];
        else u_[cl.i] = cij - v_[cl.j];
        queue_.push_back(other);
      }
    }
  }

  // Returns true when the pivot moved zero mass.
  bool pivot(std::size_t ei, std::size_t ej, bool bland) {
    // Tree path from row ei to column ej.
    std::fill(seen_.begin(), seen_.end(), 0);
    queue_.clear();
    queue_.push_back(ei);
    seen_[ei] = 1;
    const std::size_t target = m_ + ej;
    for (std::size_t h = 0; h < queue_.size() && !seen_[target]; ++h) {
      std::size_t node = queue_[h];
      for (std::size_t k : adj_[node]) {
        const Cell& cl = cells_[k];
        std::size_t other = node < m_ ? m_ + cl.j : cl.i;
        if (seen_[other]) continue;
        seen_[other] = 1;
        parent_[other] = k;
        queue_.push_back(other);
      }
    }
    // Walk back from the column: signs alternate -, +, -, ...
    path_.clear();
    for (std::size_t node = target; node != ei;) {
      std::size_t k = parent_[node];
      path_.push_back(k);
      node = node < m_ ? m_ + cells_[k].j : cells_[k].i;
    }
    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < path_.size(); p += 2) theta = std::min(theta, cells_[path_[p]].flow);
    std::size_t leave = kNone;
    for (std::size_t p = 0; p < path_.size(); p += 2) {
      std::size_t k = path_[p];
      if (cells_[k].flow <= theta + mass_tol_) {
        if (leave == kNone) leave = k;
        else if (bland && key(cells_[k]) < key(cells_[leave])) leave = k;
      }
    }
    for (std::size_t p = 0; p < path_.size(); ++p) {
      Cell& cl = cells_[path_[p]];
      cl.flow += (p % 2 == 0) ? -theta : theta;
      if (cl.flow < 0.0) cl.flow = 0.0;
    }
    unlink(leave);
    cells_[leave] = {ei, ej, theta};
    link(leave);
    return theta <= mass_tol_;
  }

  std::size_t m_, n_;
  std::span<const double> cost_;
  TransportOptions opt_;
  double eps_ = 0.0, mass_tol_ = 0.0;
  std::vector<Cell> cells_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<double> u_, v_;
  std::vector<std::size_t> parent_, queue_, path_;
  std::vector<char> seen_;
};

}  // namespace

TransportSolution solve_transport(std::span<const double> supply, std::span<const double> demand,
                                  std::span<const double> cost, const TransportOptions& options) {
  const std::size_t m = supply.size(), n = demand.size();
  if (m == 0 || n == 0) throw ValidationError("transport: empty marginal");
  if (cost.size() != m * n) throw ValidationError("transport: cost matrix has wrong size");
  double ss = 0.0, sd = 0.0;
  for (double x : supply) {
    if (!(x >= 0.0)) throw ValidationError("transport: negative or NaN supply");
    ss += x;
  }
  for (double x : demand) {
    if (!(x >= 0.0)) throw ValidationError("transport: negative or NaN demand");
    sd += x;
  }
  if (std::abs(ss - sd) > 1e-9 * std::max(1.0, std::max(ss, sd)))
    throw ValidationError("transport: mass mismatch between marginals");
  NetworkSimplex solver(supply, demand, cost, options);
  return solver.run();
}

}  // namespace mms
