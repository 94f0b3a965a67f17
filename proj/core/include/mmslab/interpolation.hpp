#pragma once

#include <cstddef>
#include <memory>

#include "mmslab/nearest.hpp"
#include "mmslab/space.hpp"

namespace mms {

/// Discrete geodesic selection: interp(i, j, t) is the sample point closest to
/// the ideal point at fraction t of a geodesic from i to j.
///
/// With a coordinate GeodesicModel the ideal point is computed in embedding
/// coordinates and rounded to the nearest sample (k-d tree, lowest index on
/// ties). Without one, the point k minimizing
///   |d(i,k) - t d(i,j)| + |d(k,j) - (1-t) d(i,j)|
/// is chosen by a linear scan, which follows shortest-path midpoints on graphs.
class Interpolator {
 public:
  explicit Interpolator(const FiniteSpace& space);

  std::size_t operator()(std::size_t i, std::size_t j, double t) const;

  /// Declared accuracy eps_geo in the space's current metric units.
  double accuracy() const { return accuracy_; }
  bool uses_coordinates() const { return static_cast<bool>(tree_); }

 private:
  const FiniteSpace* space_;
  std::shared_ptr<const KdTree> tree_;
  double accuracy_ = 0.0;
};

}  // namespace mms
