#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmslab/space.hpp"

namespace mms {

struct LineCandidate {
  /// Chain points ordered by parameter; includes the basepoint.
  std::vector<std::size_t> chain;
  std::vector<double> params;
  /// Half the distance between the chain ends.
  double half_length = 0.0;
  /// max |d(p_s, p_t) - |s - t|| over chain pairs
  double eps_line = 0.0;
  std::size_t center = 0;
};

struct LineOptions {
  std::size_t max_candidates = 64;
  std::size_t max_chain = 101;
};

/// Searches for an eps-additive chain through the base reaching distance
/// about L on both sides. Ends p, q are taken from the shell |d(., base) - L|
/// <= h with q the most additive partner of p; interior points minimize
/// |d(z,p) - (T+s)| + |d(z,q) - (T-s)| on an even grid of s. Returns the
/// candidate with the smallest eps_line, or nothing when it exceeds eps.
std::optional<LineCandidate> detect_line(const PointedSpace& space, double L, double eps,
                                         const LineOptions& options = {});

struct SplitOptions {
  /// Half-width of the slab |b| <= window that is analyzed; 0 selects T/2.
  double window = 0.0;
  std::size_t metric_pairs = 20000;
  std::size_t max_bins = 10;
  std::size_t max_fibers = 20;
  std::uint64_t seed = 1;
};

struct SplitResult {
  double T = 0.0;
  double window = 0.0;
  /// Slab points and their line coordinate b and quotient projection.
  std::vector<std::size_t> points;
  std::vector<double> b;
  std::vector<std::size_t> projection;
  /// Fibers of the central slice with the averaged transverse metric and the
  /// pushforward measure per unit line length.
  PointedSpace quotient;
  double delta_metric = 0.0;
  double delta_measure = 0.0;
};

/// Factorizes along a detected line with the line coordinate
///   b(x) = (d(x, p)^2 - d(x, q)^2) / (4T),  p, q the chain ends, T = d(p,q)/2,
/// which is exact on products with a line factor, and the transverse metric
/// d'(x, y)^2 = max(0, d(x,y)^2 - (b(x) - b(y))^2). Throws ValidationError when
/// T < 2 * window.
SplitResult split(const PointedSpace& space, const LineCandidate& line, const SplitOptions& options = {});

struct DimensionConfig {
  double N = 1.0;
  /// Blow-up radius of the first stage; later stages use radius 1.
  double radius = 0.25;
  double window = 8.0;
  double line_length = 2.0;
  double tol_line = 0.05;
  LineOptions line;
  SplitOptions split;
};

struct DimensionStage {
  bool line_found = false;
  double eps_line = 0.0;
  double delta_metric = 0.0;
  double delta_measure = 0.0;
  std::size_t points = 0;
  std::size_t quotient_points = 0;
  std::string note;
};

struct DimensionResult {
  std::size_t n = 0;
  std::vector<DimensionStage> stages;
  std::size_t remainder_points = 0;
  bool inconclusive = false;
};

/// Repeats blowup -> detect_line -> split on the quotient until no line is
/// found, the quotient is a single point, or floor(N) lines were factored.
/// n <= floor(N) is enforced (std::logic_error otherwise).
DimensionResult euclidean_dimension(const PointedSpace& space, const DimensionConfig& config);

/// Declared resolution, or the largest nearest-neighbour gap over up to 256
/// evenly strided points when none is declared.
double effective_resolution(const FiniteSpace& space);

}  // namespace mms
