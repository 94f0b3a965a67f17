#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mmslab/space.hpp"

namespace mms {

/// Which points serve as ball centers. Explicit centers win; otherwise all
/// support points are used when there are at most `budget`, and a seeded
/// uniform sample of `budget` support points beyond that.
struct CenterPolicy {
  std::vector<std::size_t> explicit_centers;
  std::size_t budget = 256;
  std::uint64_t seed = 1;
};

/// One sampled instance of the iterated doubling bound
///   m(B_R(a)) <= m(B_r(x)) * C(R)^(log2(R/r) + 2),  r <= R, x in B_R(a).
struct IteratedCheck {
  std::size_t a = 0, x = 0;
  double r = 0.0, R = 0.0;
  double lhs = 0.0, rhs = 0.0;
  bool holds() const { return lhs <= rhs * (1.0 + 1e-12); }
};

struct DoublingProfile {
  std::vector<double> radii;
  /// max over centers of m(B_{2r}(x)) / m(B_r(x)), per radius.
  std::vector<double> ratios;
  /// Running maximum of ratios: C(R) as a non-decreasing step function.
  std::vector<double> envelope;
  std::vector<std::size_t> centers;
  std::vector<IteratedCheck> iterated;
  std::size_t iterated_violations = 0;

  /// C(R): envelope value at the largest profiled radius <= R (the first
  /// radius when R is below the profiled range).
  double envelope_at(double R) const;
};

/// Doubling ratios on the given increasing radii, with `iterated_samples`
/// random (a, x, r, R) checks of the iterated bound drawn from the same radii.
DoublingProfile doubling_profile(const FiniteSpace& space, const std::vector<double>& radii,
                                 const CenterPolicy& centers = {}, std::size_t iterated_samples = 0);

}  // namespace mms
