#include "mmslab/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mmslab/errors.hpp"

namespace mms {

DenseMetric::DenseMetric(std::size_t n, std::vector<double> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n_ * n_) throw ValidationError("dense metric: expected n*n entries");
}

CoordinateMetric::CoordinateMetric(std::size_t dim, std::vector<double> params, DistanceFn fn,
                                   std::string kind)
    : dim_(dim), params_(std::move(params)), fn_(std::move(fn)), kind_(std::move(kind)) {
  if (dim_ == 0 || params_.size() % dim_ != 0)
    throw ValidationError("coordinate metric: parameter array is not a multiple of dim");
}

double CoordinateMetric::distance(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return fn_(params(i), params(j));
}

void LinearGeodesics::point_between(std::span<const double> a, std::span<const double> b, double t,
                                    std::span<double> out) const {
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = (1.0 - t) * a[k] + t * b[k];
}

FiniteSpace::FiniteSpace(std::shared_ptr<const MetricKernel> kernel, std::vector<double> weights)
    : kernel_(std::move(kernel)), weights_(std::move(weights)) {
  if (!kernel_) throw ValidationError("space: null metric kernel");
  if (kernel_->size() != weights_.size())
    throw ValidationError("space: weight count does not match metric size");
}

double FiniteSpace::total_mass() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

std::string FiniteSpace::id(std::size_t i) const {
  return ids_.empty() ? std::to_string(i) : ids_[i];
}

FiniteSpace FiniteSpace::with_weights(std::vector<double> weights) const {
  if (weights.size() != size()) throw ValidationError("space: weight count mismatch");
  FiniteSpace out = *this;
  out.weights_ = std::move(weights);
  return out;
}

FiniteSpace FiniteSpace::with_ids(std::vector<std::string> ids) const {
  if (!ids.empty() && ids.size() != size()) throw ValidationError("space: id count mismatch");
  FiniteSpace out = *this;
  out.ids_ = std::move(ids);
  return out;
}

FiniteSpace FiniteSpace::with_coords(std::size_t dim, std::vector<double> coords) const {
  if (coords.size() != dim * size()) throw ValidationError("space: coordinate count mismatch");
  FiniteSpace out = *this;
  out.coord_dim_ = dim;
  out.coords_ = std::move(coords);
  return out;
}

FiniteSpace FiniteSpace::with_geodesics(std::shared_ptr<const GeodesicModel> model) const {
  FiniteSpace out = *this;
  out.geodesics_ = std::move(model);
  return out;
}

FiniteSpace FiniteSpace::with_resolution(double h) const {
  FiniteSpace out = *this;
  out.resolution_ = h;
  return out;
}

FiniteSpace FiniteSpace::scaled(double factor) const {
  FiniteSpace out = *this;
  out.scale_ *= factor;
  out.resolution_ *= factor;
  return out;
}

FiniteSpace FiniteSpace::subset(std::span<const std::size_t> points) const {
  FiniteSpace out;
  out.kernel_ = kernel_;
  out.scale_ = scale_;
  out.geodesics_ = geodesics_;
  out.resolution_ = resolution_;
  out.coord_dim_ = coord_dim_;
  out.index_.reserve(points.size());
  out.weights_.reserve(points.size());
  for (std::size_t p : points) {
    if (p >= size()) throw ValidationError("space: subset index out of range");
    out.index_.push_back(kernel_index(p));
    out.weights_.push_back(weights_[p]);
    if (!ids_.empty()) out.ids_.push_back(ids_[p]);
    if (coord_dim_ > 0) {
      auto c = coords(p);
      out.coords_.insert(out.coords_.end(), c.begin(), c.end());
    }
  }
  return out;
}

PointedSpace make_pointed(FiniteSpace space, std::size_t base) {
  if (base >= space.size()) throw ValidationError("pointed space: base index out of range");
  if (!(space.weight(base) > 0.0))
    throw ValidationError("pointed space: base point must lie in the support");
  return PointedSpace{std::move(space), base};
}

FiniteSpace from_matrix(std::size_t n, std::vector<double> metric, std::vector<double> weights) {
  return FiniteSpace(std::make_shared<DenseMetric>(n, std::move(metric)), std::move(weights));
}

namespace {

double euclidean(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

}  // namespace

FiniteSpace from_euclidean(std::size_t dim, std::vector<double> coords, std::vector<double> weights) {
  auto kernel = std::make_shared<CoordinateMetric>(dim, coords, euclidean, "euclidean");
  return FiniteSpace(kernel, std::move(weights))
      .with_coords(dim, std::move(coords))
      .with_geodesics(std::make_shared<LinearGeodesics>());
}

double diameter(const FiniteSpace& space, std::span<const std::size_t> points) {
  std::vector<std::size_t> all;
  if (points.empty()) {
    all.resize(space.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    points = all;
  }
  double d = 0.0;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      d = std::max(d, space.distance(points[a], points[b]));
  return d;
}

std::vector<std::size_t> support(const FiniteSpace& space) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.in_support(i)) out.push_back(i);
  return out;
}

}  // namespace mms
