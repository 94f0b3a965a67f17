#pragma once

#include <cstddef>
#include <vector>

#include "mmslab/interpolation.hpp"
#include "mmslab/space.hpp"
#include "mmslab/transport_simplex.hpp"

namespace mms {

/// Nonnegative masses indexed by the points of a space.
struct Measure {
  std::vector<double> mass;

  double total() const;
  std::vector<std::size_t> support() const;
  std::size_t size() const { return mass.size(); }

  static Measure dirac(std::size_t n, std::size_t at);
  /// Restriction of the space's measure to `points`, normalized to mass 1.
  static Measure uniform_on(const FiniteSpace& space, const std::vector<std::size_t>& points);
};

/// Transport plan between two measures on the same space; atoms are indexed
/// by space points and sorted by (from, to).
struct Coupling {
  std::size_t points = 0;
  std::vector<Atom> atoms;

  Measure first_marginal() const;
  Measure second_marginal() const;
  /// sum gamma_ij d(i,j)^2
  double cost(const FiniteSpace& space) const;
};

enum class Solver { exact, entropic };

struct W2Options {
  Solver solver = Solver::exact;
  /// Entropic regularization, relative to the largest squared distance.
  double entropic_reg = 1e-3;
  std::size_t entropic_max_iter = 10000;
  double entropic_tol = 1e-8;
  TransportOptions lp;
};

struct W2Result {
  /// Squared transport cost W_2^2.
  double cost = 0.0;
  double distance() const;
  Coupling plan;
  /// LP diagnostics (exact mode) / Sinkhorn iterations and marginal error (entropic mode).
  std::size_t iterations = 0;
  double marginal_error = 0.0;
  /// Exact mode only: optimal duals over the supports, for vertex enumeration.
  std::vector<std::size_t> rows, cols;
  std::vector<double> u, v;
};

/// Quadratic optimal transport between probability measures on `space`.
/// Throws ValidationError on size or mass mismatch (masses must be 1 within 1e-9).
W2Result w2(const FiniteSpace& space, const Measure& mu0, const Measure& mu1, const W2Options& options = {});

/// Monotone (quantile) coupling along 1-D coordinates; the exact optimum on
/// the line. Throws ValidationError when the space has no 1-D coordinates.
W2Result monotone_1d(const FiniteSpace& space, const Measure& mu0, const Measure& mu1);

/// mu_t: the plan's mass pushed along interp(i, j, t).
Measure interpolate(const FiniteSpace& space, const Interpolator& interp, const Coupling& plan, double t);

struct GeodesicPath {
  std::size_t from = 0, to = 0;
  double mass = 0.0;
  /// max over sampled s < t of |d(p_s, p_t) - |s - t| d(p_0, p_1)|
  double defect = 0.0;
  bool within_tolerance = true;
};

/// Discrete optimal geodesic plan: one interpolation path per coupling atom.
struct GeodesicPlan {
  std::vector<GeodesicPath> paths;
  double accuracy = 0.0;  ///< declared eps_geo
  double worst_defect = 0.0;
  std::size_t flagged = 0;  ///< paths failing the eps_geo check

  /// Point of path k at time t.
  std::size_t at(const Interpolator& interp, std::size_t k, double t) const;
  /// (e_t)_# pi
  Measure evaluate(const FiniteSpace& space, const Interpolator& interp, double t) const;
  /// (e_0, e_1)_# pi
  Coupling endpoints(std::size_t points) const;
};

/// Lifts a coupling to a GeodesicPlan, checking each path for geodesy on
/// `samples` + 1 equally spaced times.
GeodesicPlan geodesic_plan(const FiniteSpace& space, const Interpolator& interp, const Coupling& plan,
                           std::size_t samples = 8);

}  // namespace mms
