#pragma once

// Computable surrogate for the pointed measured Gromov-Hausdorff distance:
//
//   D(A, B) = sum_k 2^{-k} min(1, inf_corr [distortion_k + measure_gap_k]),  k = 1..|radii|
//
// where the infimum runs over correspondences covering both R_k-balls around
// the basepoints. Small balls (<= exhaustive_limit points each) are searched
// exhaustively; larger ones are annealed, so the result is an upper bound with
// a certificate. Balls above max_ball_points are first quantized to a greedy
// delta-net with Voronoi-aggregated weights.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmslab/space.hpp"

namespace mms {

struct Correspondence {
  /// (point of A, point of B)
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Half the largest |d_A(x,x') - d_B(y,y')| over pairs inside both open
/// R-balls. Throws ValidationError unless those pairs cover both balls and
/// contain (base_A, base_B).
double distortion(const PointedSpace& a, const PointedSpace& b, const Correspondence& corr, double R);

/// Optimal transport with teleportation between the R-ball measures, glued
/// through corr: moving mass from x to y costs
///   d_Z(x, y) = min over (x', y') in corr of d_A(x, x') + d_B(y', y),
/// and creating or destroying a unit of mass costs 1. Same coverage
/// requirements as distortion().
double measure_gap(const PointedSpace& a, const PointedSpace& b, const Correspondence& corr, double R);

enum class PmghMode { automatic, exhaustive, anneal };

struct PmghOptions {
  std::vector<double> radii{1.0, 2.0, 4.0, 8.0};
  PmghMode mode = PmghMode::automatic;
  std::size_t proposals = 10000;
  double cooling = 0.99;
  std::size_t cooling_every = 10;
  std::size_t restarts = 2;
  std::uint64_t seed = 1;
  std::size_t max_ball_points = 120;
  std::size_t exhaustive_limit = 9;
  std::size_t exhaustive_nodes = std::size_t{1} << 22;
  /// Worker threads for restarts; 0 selects hardware concurrency.
  std::size_t threads = 1;
};

struct PmghTerm {
  double radius = 0.0;
  double weight = 0.0;
  double distortion = 0.0;
  double measure_gap = 0.0;
  /// min(1, distortion + measure_gap)
  double term = 0.0;
  std::size_t ball_a = 0, ball_b = 0;
  /// Net spacing used for quantization; 0 when the balls were used as is.
  double net_spacing = 0.0;
  bool exhaustive = false;
  /// Pairs between net/ball points, as indices of the input spaces.
  Correspondence certificate;
};

struct PmghEstimate {
  double value = 0.0;
  std::vector<PmghTerm> terms;
  /// Set when every term was solved exhaustively on unquantized balls.
  std::optional<double> lower_bound;
};

/// Inputs are expected to be normalized (see normalize_at). Symmetric in
/// (a, b) by construction. Throws BudgetExceeded in exhaustive mode when a
/// ball exceeds exhaustive_limit or the node budget runs out; automatic mode
/// keeps the annealed bound for such terms instead.
PmghEstimate pmgh_distance(const PointedSpace& a, const PointedSpace& b, const PmghOptions& options = {});

enum class Trend { decreasing, increasing, constant, none };
std::string to_string(Trend trend);

struct ConvergenceTable {
  std::vector<double> values;
  Trend trend = Trend::none;
};

/// D(X_i, target) per member with a monotone-trend flag (tolerance 1e-12).
ConvergenceTable convergence_diagnostic(const std::vector<PointedSpace>& sequence, const PointedSpace& target,
                                        const PmghOptions& options = {});

Trend classify_trend(const std::vector<double>& values);

}  // namespace mms
