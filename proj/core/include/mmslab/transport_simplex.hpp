#pragma once

// Exact solver for the dense transportation problem
//
//   min sum_ij c_ij x_ij  s.t.  sum_j x_ij = s_i,  sum_i x_ij = d_j,  x >= 0
//
// by the primal network simplex on the bipartite spanning-tree basis
// (m + n - 1 basic cells, degenerate zeros included). Pricing is block search
// (most negative reduced cost within a block of cells); after a long streak of
// degenerate pivots the solver falls back to Bland's rule (first improving
// cell, lowest-index leaving cell) until a non-degenerate pivot occurs.

#include <cstddef>
#include <span>
#include <vector>

namespace mms {

struct Atom {
  std::size_t from = 0, to = 0;
  double mass = 0.0;
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct TransportOptions {
  /// Reduced costs above -tol * max|c| count as non-improving.
  double reduced_cost_tol = 1e-12;
  /// 0 selects 50 * (m*n + m + n).
  std::size_t max_pivots = 0;
};

struct TransportSolution {
  double cost = 0.0;
  /// Positive-flow cells in row-major order.
  std::vector<Atom> plan;
  /// Optimal duals: c_ij - u_i - v_j >= 0, with equality on the basis.
  std::vector<double> u, v;
  /// Final basis (m + n - 1 cells), row-major order.
  std::vector<Atom> basis;
  std::size_t pivots = 0;
  std::size_t degenerate_pivots = 0;
};

/// `cost` is row-major m x n. Supplies and demands must be nonnegative with
/// equal totals (relative 1e-9); otherwise ValidationError. Exceeding the pivot
/// budget throws BudgetExceeded.
TransportSolution solve_transport(std::span<const double> supply, std::span<const double> demand,
                                  std::span<const double> cost, const TransportOptions& options = {});

}  // namespace mms
