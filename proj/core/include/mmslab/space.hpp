#pragma once

// Finite metric measure spaces.
//
// A FiniteSpace is an immutable view onto a shared metric kernel: restricting
// to a ball or rescaling the metric never copies distances, it only composes an
// index map and a scale factor. Large grid samples therefore carry a lazily
// evaluated coordinate metric instead of an n x n matrix.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mms {

/// Distance oracle over points 0..size()-1.
class MetricKernel {
 public:
  virtual ~MetricKernel() = default;
  virtual std::size_t size() const = 0;
  virtual double distance(std::size_t i, std::size_t j) const = 0;
  /// "matrix", "euclidean", or a model-specific tag; used by serialization.
  virtual std::string kind() const = 0;
};

/// Row-major dense matrix.
class DenseMetric final : public MetricKernel {
 public:
  DenseMetric(std::size_t n, std::vector<double> data);
  std::size_t size() const override { return n_; }
  double distance(std::size_t i, std::size_t j) const override { return data_[i * n_ + j]; }
  std::string kind() const override { return "matrix"; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Distance computed on demand from per-point parameters.
class CoordinateMetric final : public MetricKernel {
 public:
  using DistanceFn = std::function<double(std::span<const double>, std::span<const double>)>;

  CoordinateMetric(std::size_t dim, std::vector<double> params, DistanceFn fn, std::string kind);
  std::size_t size() const override { return params_.size() / dim_; }
  double distance(std::size_t i, std::size_t j) const override;
  std::string kind() const override { return kind_; }
  std::span<const double> params(std::size_t i) const { return {params_.data() + i * dim_, dim_}; }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<double> params_;
  DistanceFn fn_;
  std::string kind_;
};

/// Ideal geodesic points in embedding coordinates. Interpolators round these
/// to the nearest sample point.
class GeodesicModel {
 public:
  virtual ~GeodesicModel() = default;
  virtual void point_between(std::span<const double> a, std::span<const double> b, double t,
                             std::span<double> out) const = 0;
  virtual std::string name() const = 0;
};

/// Straight-line interpolation; exact for Euclidean and normed spaces.
class LinearGeodesics final : public GeodesicModel {
 public:
  void point_between(std::span<const double> a, std::span<const double> b, double t,
                     std::span<double> out) const override;
  std::string name() const override { return "linear"; }
};

class FiniteSpace {
 public:
  FiniteSpace() = default;
  FiniteSpace(std::shared_ptr<const MetricKernel> kernel, std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double distance(std::size_t i, std::size_t j) const {
    return scale_ * kernel_->distance(kernel_index(i), kernel_index(j));
  }
  double weight(std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }
  double total_mass() const;
  bool in_support(std::size_t i) const { return weights_[i] > 0.0; }

  std::string id(std::size_t i) const;
  bool has_ids() const { return !ids_.empty(); }

  /// Embedding coordinates ("coordinate tags"). They keep their original units
  /// under rescale; only nearest-point queries and 1-D ordering use them.
  bool has_coords() const { return coord_dim_ > 0; }
  std::size_t coord_dim() const { return coord_dim_; }
  std::span<const double> coords(std::size_t i) const {
    return {coords_.data() + i * coord_dim_, coord_dim_};
  }

  const std::shared_ptr<const GeodesicModel>& geodesics() const { return geodesics_; }

  /// Sample spacing in current metric units; 0 when unknown.
  double resolution() const { return resolution_; }
  double scale() const { return scale_; }
  const MetricKernel& kernel() const { return *kernel_; }
  const std::shared_ptr<const MetricKernel>& kernel_ptr() const { return kernel_; }

  // Builders returning modified copies.
  FiniteSpace with_weights(std::vector<double> weights) const;
  FiniteSpace with_ids(std::vector<std::string> ids) const;
  FiniteSpace with_coords(std::size_t dim, std::vector<double> coords) const;
  FiniteSpace with_geodesics(std::shared_ptr<const GeodesicModel> model) const;
  FiniteSpace with_resolution(double h) const;
  FiniteSpace scaled(double factor) const;
  /// Sub-space on the listed points, in the listed order.
  FiniteSpace subset(std::span<const std::size_t> points) const;

 private:
  std::size_t kernel_index(std::size_t i) const { return index_.empty() ? i : index_[i]; }

  std::shared_ptr<const MetricKernel> kernel_;
  std::vector<std::size_t> index_;
  double scale_ = 1.0;
  std::vector<double> weights_;
  std::vector<std::string> ids_;
  std::size_t coord_dim_ = 0;
  std::vector<double> coords_;
  std::shared_ptr<const GeodesicModel> geodesics_;
  double resolution_ = 0.0;
};

/// Space with a reference point in the support.
struct PointedSpace {
  FiniteSpace space;
  std::size_t base = 0;
};

/// Throws ValidationError unless base indexes a positive-weight point.
PointedSpace make_pointed(FiniteSpace space, std::size_t base);

FiniteSpace from_matrix(std::size_t n, std::vector<double> metric, std::vector<double> weights);
FiniteSpace from_euclidean(std::size_t dim, std::vector<double> coords, std::vector<double> weights);

/// Largest pairwise distance over the listed points (all points when empty).
double diameter(const FiniteSpace& space, std::span<const std::size_t> points = {});

/// Support indices {i : w(i) > 0}.
std::vector<std::size_t> support(const FiniteSpace& space);

}  // namespace mms
