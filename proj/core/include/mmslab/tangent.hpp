#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mmslab/models.hpp"
#include "mmslab/pmgh.hpp"
#include "mmslab/space.hpp"

namespace mms {

struct BlowupMember {
  double radius = 0.0;
  /// (X, d/r, c_r m, x) restricted to the open window ball.
  PointedSpace space;
  /// c_r
  double normalization = 1.0;
  /// Sample spacing in rescaled units (h / r); 0 when unknown.
  double relative_resolution = 0.0;
  bool usable = true;
};

struct BlowupSequence {
  double window = 8.0;
  std::vector<BlowupMember> members;
  std::vector<std::string> warnings;

  std::vector<std::size_t> usable() const;
};

struct BlowupOptions {
  double window = 8.0;
  /// Members with relative resolution above this are unusable; above half of it they draw a warning.
  double max_relative_resolution = 0.5;
};

/// rescale, normalize at radius 1, restrict to the window, per radius. Radii
/// must be in (0, 1] and strictly decreasing; the base must be in the support.
BlowupSequence blowup(const PointedSpace& space, const std::vector<double>& radii, const BlowupOptions& options = {});

struct ModelMatch {
  std::string model;
  /// D per usable member, in sequence order.
  std::vector<double> values;
  double final_value = 0.0;
  Trend trend = Trend::none;
};

struct TangentMatch {
  std::vector<ModelMatch> matches;  ///< sorted by final value (ascending)
  std::string best;
  /// second best final value / best final value (infinity when best is 0)
  double margin = 0.0;
};

/// Compares each usable member with each model built at the member's relative
/// resolution and the sequence window. Throws ValidationError when no member
/// is usable.
TangentMatch match_tangent(const BlowupSequence& seq, const std::vector<TangentModel>& models,
                           const PmghOptions& pmgh = {});

struct IteratedTangentOptions {
  double window = 8.0;
  /// Distance from y to the re-pointed base y'.
  double offset = 1.0;
  std::vector<double> inner_radii{1.0, 0.5, 0.25};
  /// Relative tolerance for "matched resolution" between inner and original members.
  double resolution_match = 0.01;
  PmghOptions pmgh;
};

struct IteratedComparison {
  double inner_radius = 0.0;
  double original_radius = 0.0;
  double value = 0.0;
};

struct IteratedTangentReport {
  /// Radius of the original member used as the tangent approximation Y.
  double tangent_radius = 0.0;
  std::size_t yprime = 0;  ///< index in Y
  double yprime_offset = 0.0;
  std::vector<IteratedComparison> comparisons;
  double min_value = 0.0;
  IteratedComparison best;
};

/// Takes the usable member with the finest relative resolution as Y (windowed
/// at window + 2 offset so the inner window around y' is complete), re-points
/// it at the sample point whose distance from y is closest to the offset,
/// normalizes there, blows up again and reports the smallest D between an
/// inner member and an original member of matching resolution (all originals
/// when none matches).
IteratedTangentReport iterated_tangent_check(const PointedSpace& space, const std::vector<double>& radii,
                                             const IteratedTangentOptions& options = {});

}  // namespace mms
