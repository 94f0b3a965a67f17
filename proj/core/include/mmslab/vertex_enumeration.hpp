#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mmslab/transport.hpp"

namespace mms {

struct VertexEnumeration {
  /// Distinct optimal vertex plans (as index pairs into supply/demand).
  std::vector<std::vector<Atom>> plans;
  /// False when the search budget ran out before the face was exhausted.
  bool complete = true;
};

/// Enumerates every vertex of the optimal face of a transportation LP, given
/// optimal duals (u, v). A vertex is a spanning tree of tight cells
/// (c_ij - u_i - v_j ~ 0) whose unique tree flow is nonnegative.
VertexEnumeration enumerate_optimal_vertices(std::span<const double> supply, std::span<const double> demand,
                                             std::span<const double> cost, std::span<const double> u,
                                             std::span<const double> v, std::size_t max_nodes = 1u << 22);

/// Same, for a w2 exact result; plans come back as space-indexed Couplings.
/// Throws BudgetExceeded when the supports have more than `max_points` points combined.
std::vector<Coupling> optimal_couplings(const FiniteSpace& space, const Measure& mu0, const Measure& mu1,
                                        const W2Result& exact, std::size_t max_points = 12,
                                        bool* complete = nullptr);

}  // namespace mms
