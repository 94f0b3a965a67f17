#include "mmslab/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mmslab/errors.hpp"

namespace mms {

Interpolator::Interpolator(const FiniteSpace& space) : space_(&space) {
  if (space.size() == 0) throw ValidationError("interpolator: empty space");
  if (space.has_coords() && space.geodesics()) {
    std::vector<double> pts;
    pts.reserve(space.size() * space.coord_dim());
    for (std::size_t i = 0; i < space.size(); ++i) {
      auto c = space.coords(i);
      pts.insert(pts.end(), c.begin(), c.end());
    }
    tree_ = std::make_shared<KdTree>(space.coord_dim(), pts);
  }
  if (space.resolution() > 0.0) {
    double dim = space.has_coords() ? static_cast<double>(space.coord_dim()) : 1.0;
    accuracy_ = space.resolution() * std::sqrt(dim);
  } else {
    // Unknown spacing: twice the largest nearest-neighbour gap.
    double gap = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      double nn = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < space.size(); ++k)
        if (k != i) nn = std::min(nn, space.distance(i, k));
      if (std::isfinite(nn)) gap = std::max(gap, nn);
    }
    accuracy_ = 2.0 * gap;
  }
}

std::size_t Interpolator::operator()(std::size_t i, std::size_t j, double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("interpolate: t outside [0,1]");
  if (t == 0.0 || i == j) return i;
  if (t == 1.0) return j;
  const FiniteSpace& X = *space_;
  if (tree_) {
    std::vector<double> q(X.coord_dim());
    X.geodesics()->point_between(X.coords(i), X.coords(j), t, q);
    return tree_->nearest(q);
  }
  const double dij = X.distance(i, j);
  std::size_t best = i;
  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < X.size(); ++k) {
    double score = std::abs(X.distance(i, k) - t * dij) + std::abs(X.distance(k, j) - (1.0 - t) * dij);
    if (score < best_score - 1e-12 * std::max(1.0, dij)) {
      best_score = score;
      best = k;
    }
  }
  return best;
}

}  // namespace mms
