#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "mmslab/space.hpp"

namespace mms {

struct Violation {
  enum class Kind { diagonal, asymmetry, negative_distance, triangle, negative_weight, zero_mass, non_finite };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  /// Size of the violation (e.g. d(i,j) - d(i,k) - d(k,j) for triangle).
  double amount = 0.0;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every FiniteSpace invariant by brute force: zero diagonal and
/// symmetry exactly, triangle inequality up to `triangle_tol`. O(n^3).
ValidationReport validate(const FiniteSpace& space, double triangle_tol = 1e-9);

/// (X, d/r, m, base).
PointedSpace rescale(const PointedSpace& space, double r);

enum class BallMode { open, closed };

/// Ball membership with a relative slack of 1e-12, so that points lying on
/// the sphere are classified the same way in isometric copies whose distances
/// differ only by rounding.
inline bool in_ball(double d, double r, BallMode mode = BallMode::open) {
  return mode == BallMode::open ? d < r * (1.0 - 1e-12) : d <= r * (1.0 + 1e-12);
}

/// m(B_r(center)).
double ball_mass(const FiniteSpace& space, std::size_t center, double r, BallMode mode = BallMode::open);

/// Sum over the open ball B_r(base) of (1 - d(y, base)/r) w(y).
double normalization_sum(const PointedSpace& space, double r);

struct Normalized {
  PointedSpace space;
  double constant = 1.0;
};

/// Scales weights by c = 1 / normalization_sum(space, r) so that, after
/// rescale(., r), the unit-ball normalization identity holds. Measure only;
/// the metric is untouched.
Normalized normalize_at(const PointedSpace& space, double r);

/// Keeps the points with d(., base) < r (open) or <= r (closed), with the
/// restricted ambient metric (not the induced path metric).
PointedSpace ball_restrict(const PointedSpace& space, double r, BallMode mode = BallMode::open);

/// Points of the ball, in index order.
std::vector<std::size_t> ball_points(const FiniteSpace& space, std::size_t center, double r,
                                     BallMode mode = BallMode::open);

/// Cartesian product with metric sqrt(d_a^2 + d_b^2) and weights w_a * w_b.
/// Point (i, j) gets index i * b.size() + j.
FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b,
                    std::size_t max_points = std::size_t{1} << 22);

}  // namespace mms
