#include "mmslab/space_ops.hpp"

#include <algorithm>
#include <cmath>

#include "mmslab/errors.hpp"

namespace mms {

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::diagonal: return "diagonal";
    case Violation::Kind::asymmetry: return "asymmetry";
    case Violation::Kind::negative_distance: return "negative_distance";
    case Violation::Kind::triangle: return "triangle";
    case Violation::Kind::negative_weight: return "negative_weight";
    case Violation::Kind::zero_mass: return "zero_mass";
    case Violation::Kind::non_finite: return "non_finite";
  }
  return "unknown";
}

ValidationReport validate(const FiniteSpace& space, double triangle_tol) {
  ValidationReport report;
  auto& out = report.violations;
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    double w = space.weight(i);
    if (!std::isfinite(w)) out.push_back({Violation::Kind::non_finite, i, i, i, w});
    else if (w < 0.0) out.push_back({Violation::Kind::negative_weight, i, i, i, w});
  }
  if (!(space.total_mass() > 0.0)) out.push_back({Violation::Kind::zero_mass, 0, 0, 0, space.total_mass()});

  for (std::size_t i = 0; i < n; ++i) {
    double dii = space.distance(i, i);
    if (dii != 0.0) out.push_back({Violation::Kind::diagonal, i, i, i, dii});
    for (std::size_t j = i + 1; j < n; ++j) {
      double dij = space.distance(i, j), dji = space.distance(j, i);
      if (!std::isfinite(dij) || !std::isfinite(dji))
        out.push_back({Violation::Kind::non_finite, i, j, j, dij});
      else if (dij != dji)
        out.push_back({Violation::Kind::asymmetry, i, j, j, dij - dji});
      if (dij < 0.0) out.push_back({Violation::Kind::negative_distance, i, j, j, dij});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double dij = space.distance(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        double excess = dij - space.distance(i, k) - space.distance(k, j);
        if (excess > triangle_tol) out.push_back({Violation::Kind::triangle, i, j, k, excess});
      }
    }
  return report;
}

PointedSpace rescale(const PointedSpace& space, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw ValidationError("rescale: r must be positive");
  return PointedSpace{space.space.scaled(1.0 / r), space.base};
}

std::vector<std::size_t> ball_points(const FiniteSpace& space, std::size_t center, double r,
                                     BallMode mode) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    double d = space.distance(center, i);
    if (in_ball(d, r, mode)) out.push_back(i);
  }
  return out;
}

double ball_mass(const FiniteSpace& space, std::size_t center, double r, BallMode mode) {
  double m = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    double d = space.distance(center, i);
    if (in_ball(d, r, mode)) m += space.weight(i);
  }
  return m;
}

double normalization_sum(const PointedSpace& space, double r) {
  double s = 0.0;
  const auto& X = space.space;
  for (std::size_t i = 0; i < X.size(); ++i) {
    double d = X.distance(space.base, i);
    if (in_ball(d, r)) s += (1.0 - d / r) * X.weight(i);
  }
  return s;
}

Normalized normalize_at(const PointedSpace& space, double r) {
  if (!(r > 0.0)) throw ValidationError("normalize_at: r must be positive");
  double s = normalization_sum(space, r);
  if (!(s > 0.0) || !std::isfinite(s))
    throw ValidationError("normalize_at: degenerate normalization sum (base outside support?)");
  double c = 1.0 / s;
  std::vector<double> w(space.space.weights().begin(), space.space.weights().end());
  for (double& x : w) x *= c;
  return Normalized{PointedSpace{space.space.with_weights(std::move(w)), space.base}, c};
}

PointedSpace ball_restrict(const PointedSpace& space, double r, BallMode mode) {
  auto pts = ball_points(space.space, space.base, r, mode);
  std::size_t base = 0;
  bool found = false;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (pts[k] == space.base) { base = k; found = true; }
  if (!found) throw ValidationError("ball_restrict: ball does not contain the base point");
  return PointedSpace{space.space.subset(pts), base};
}

namespace {

class ProductMetric final : public MetricKernel {
 public:
  ProductMetric(FiniteSpace a, FiniteSpace b) : a_(std::move(a)), b_(std::move(b)) {}
  std::size_t size() const override { return a_.size() * b_.size(); }
  double distance(std::size_t i, std::size_t j) const override {
    const std::size_t nb = b_.size();
    return std::hypot(a_.distance(i / nb, j / nb), b_.distance(i % nb, j % nb));
  }
  std::string kind() const override { return "product"; }

 private:
  FiniteSpace a_, b_;
};

class ProductGeodesics final : public GeodesicModel {
 public:
  ProductGeodesics(std::shared_ptr<const GeodesicModel> a, std::size_t dim_a,
                   std::shared_ptr<const GeodesicModel> b)
      : a_(std::move(a)), b_(std::move(b)), dim_a_(dim_a) {}
  void point_between(std::span<const double> x, std::span<const double> y, double t,
                     std::span<double> out) const override {
    a_->point_between(x.first(dim_a_), y.first(dim_a_), t, out.first(dim_a_));
    b_->point_between(x.subspan(dim_a_), y.subspan(dim_a_), t, out.subspan(dim_a_));
  }
  std::string name() const override { return a_->name() + "x" + b_->name(); }

 private:
  std::shared_ptr<const GeodesicModel> a_, b_;
  std::size_t dim_a_;
};

}  // namespace

FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b, std::size_t max_points) {
  if (a.size() == 0 || b.size() == 0) throw ValidationError("product: empty factor");
  if (a.size() > max_points / b.size()) throw BudgetExceeded("product: point budget exceeded");
  const std::size_t na = a.size(), nb = b.size();
  std::vector<double> w(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) w[i * nb + j] = a.weight(i) * b.weight(j);
  FiniteSpace out(std::make_shared<ProductMetric>(a, b), std::move(w));
  if (a.has_ids() || b.has_ids()) {
    std::vector<std::string> ids;
    ids.reserve(na * nb);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) ids.push_back(a.id(i) + "x" + b.id(j));
    out = out.with_ids(std::move(ids));
  }
  if (a.has_coords() && b.has_coords()) {
    const std::size_t dim = a.coord_dim() + b.coord_dim();
    std::vector<double> c;
    c.reserve(na * nb * dim);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        auto ca = a.coords(i), cb = b.coords(j);
        c.insert(c.end(), ca.begin(), ca.end());
        c.insert(c.end(), cb.begin(), cb.end());
      }
    out = out.with_coords(dim, std::move(c));
    if (a.geodesics() && b.geodesics())
      out = out.with_geodesics(std::make_shared<ProductGeodesics>(a.geodesics(), a.coord_dim(), b.geodesics()));
  }
  return out.with_resolution(std::max(a.resolution(), b.resolution()));
}

}  // namespace mms
