#pragma once

// Sampled model spaces with known ground truth.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mmslab/space.hpp"

namespace mms {

enum class ModelKind { euclidean_grid, lp_plane, sphere, cone, cylinder, weighted_segment, graph };

std::string to_string(ModelKind kind);
/// Throws ValidationError on an unknown name.
ModelKind model_kind_from_string(const std::string& name);
std::vector<ModelKind> all_model_kinds();

struct ModelSpec {
  ModelKind kind = ModelKind::euclidean_grid;
  /// euclidean-grid dimension
  std::size_t dim = 1;
  /// Sample spacing.
  double h = 0.01;
  /// Per-axis interval for grids, lp planes and the weighted segment;
  /// cap/sector radius for sphere and cone (lo ignored).
  double lo = 0.0, hi = 1.0;
  /// lp-plane exponent; infinity for the max norm.
  double p = 2.0;
  /// Total cone angle in (0, 2 pi].
  double cone_angle = 4.71238898038469;
  /// Cylinder circumference and axis length (0 gives a circle).
  double circumference = 1.0;
  double axis_length = 10.0;
  /// weighted-segment density |x|^a
  double weight_exponent = 1.0;
  /// graph: node count and connection radius in the unit square
  std::size_t nodes = 200;
  double connect_radius = 0.15;
  std::uint64_t seed = 1;
};

/// Parses "kind[:token,...]" where a token is "<n>d" (grid dimension) or
/// key=value with key in {h, lo, hi, p, angle, circumference, axis, a, nodes,
/// radius, seed}. Example: "euclidean-grid:2d,h=0.02,lo=-1,hi=1".
ModelSpec parse_model_spec(const std::string& text);

/// Deterministic sample for the spec. Grid kinds place points at integer
/// multiples of h whenever lo is a multiple of h, so the base is exactly the
/// origin for symmetric extents. Kinds with computable geodesics carry
/// coordinates and a GeodesicModel; the graph kind relies on the metric
/// interpolator.
PointedSpace make_model(const ModelSpec& spec);

struct GroundTruth {
  std::string kind;
  std::string tangent;  ///< tangent at generic points
  double doubling_exponent = 0.0;
  std::string curvature;  ///< known CD parameters, or "unknown"
  std::string notes;
};

GroundTruth ground_truth(const ModelSpec& spec);

/// c_n = n (n+1) Gamma(n/2) / (2 pi^{n/2}): the density making
/// integral over B_1(0) of (1 - |x|) c_n dx equal to 1 (c_1 = 1, c_2 = c_3 = 3/pi).
double euclidean_normalization_constant(std::size_t n);

/// Comparison target for tangent matching: make(resolution, window) returns
/// a sample normalized at radius 1 and restricted to the open window ball.
struct TangentModel {
  std::string name;
  std::function<PointedSpace(double resolution, double window)> make;
};

/// Lattice h Z^n with weights c_n h^n. When the window would hold more than
/// max_points lattice points the spacing is coarsened to fit.
TangentModel euclidean_model(std::size_t n, std::size_t max_points = 60000);
/// Lattice h Z^2 under the lp norm (p = infinity allowed).
TangentModel lp_model(double p, std::size_t max_points = 60000);
/// Circle of the given circumference, about circumference / resolution points.
TangentModel circle_model(double circumference);
TangentModel singleton_model();

}  // namespace mms
