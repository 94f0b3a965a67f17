#include "mmslab/tangent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mmslab/errors.hpp"
#include "mmslab/space_ops.hpp"

namespace mms {

std::vector<std::size_t> BlowupSequence::usable() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].usable) out.push_back(i);
  return out;
}

namespace {

BlowupMember make_member(const PointedSpace& space, double r, double window, double max_rel) {
  BlowupMember m;
  m.radius = r;
  Normalized nz = normalize_at(rescale(space, r), 1.0);
  m.normalization = nz.constant;
  m.space = ball_restrict(nz.space, window);
  m.relative_resolution = m.space.space.resolution();
  m.usable = !(m.relative_resolution > max_rel);
  return m;
}

}  // namespace

BlowupSequence blowup(const PointedSpace& space, const std::vector<double>& radii, const BlowupOptions& o) {
  if (radii.empty()) throw ValidationError("blowup: no radii");
  if (!(o.window > 0.0)) throw ValidationError("blowup: window must be positive");
  if (space.base >= space.space.size() || !space.space.in_support(space.base))
    throw ValidationError("blowup: base outside the support");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] <= 1.0)) throw ValidationError("blowup: radii must lie in (0, 1]");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw ValidationError("blowup: radii must be strictly decreasing");
  }
  BlowupSequence seq;
  seq.window = o.window;
  for (double r : radii) {
    seq.members.push_back(make_member(space, r, o.window, o.max_relative_resolution));
    const auto& m = seq.members.back();
    std::ostringstream msg;
    if (!m.usable) {
      msg << "r=" << r << ": relative resolution " << m.relative_resolution << " exceeds "
          << o.max_relative_resolution << "; member unusable";
      seq.warnings.push_back(msg.str());
    } else if (m.relative_resolution > 0.5 * o.max_relative_resolution) {
      msg << "r=" << r << ": relative resolution " << m.relative_resolution << " is coarse";
      seq.warnings.push_back(msg.str());
    }
  }
  return seq;
}

TangentMatch match_tangent(const BlowupSequence& seq, const std::vector<TangentModel>& models,
                           const PmghOptions& pmgh) {
  auto use = seq.usable();
  if (use.empty()) throw ValidationError("match_tangent: no usable blow-up member");
  if (models.empty()) throw ValidationError("match_tangent: no models");
  TangentMatch out;
  for (const auto& model : models) {
    ModelMatch mm;
    mm.model = model.name;
    for (auto i : use) {
      const auto& m = seq.members[i];
      PointedSpace target = model.make(m.relative_resolution, seq.window);
      mm.values.push_back(pmgh_distance(m.space, target, pmgh).value);
    }
    mm.final_value = mm.values.back();
    mm.trend = classify_trend(mm.values);
    out.matches.push_back(std::move(mm));
  }
  std::stable_sort(out.matches.begin(), out.matches.end(),
                   [](const ModelMatch& a, const ModelMatch& b) { return a.final_value < b.final_value; });
  out.best = out.matches.front().model;
  if (out.matches.size() > 1) {
    double b = out.matches[0].final_value, s = out.matches[1].final_value;
    out.margin = b > 0.0 ? s / b : std::numeric_limits<double>::infinity();
  }
  return out;
}

IteratedTangentReport iterated_tangent_check(const PointedSpace& space, const std::vector<double>& radii,
                                             const IteratedTangentOptions& o) {
  if (!(o.offset >= 0.0) || o.offset >= o.window) throw ValidationError("iterated tangent: offset outside the window");
  BlowupSequence orig = blowup(space, radii, {o.window});
  auto use = orig.usable();
  if (use.empty()) throw ValidationError("iterated tangent: no usable blow-up member");

  // Finest relative resolution = largest radius among usable members.
  const BlowupMember& first = orig.members[use.front()];
  IteratedTangentReport rep;
  rep.tangent_radius = first.radius;
  // The slack beyond window + offset absorbs the rounding of y' to a sample point.
  PointedSpace Y = ball_restrict(normalize_at(rescale(space, first.radius), 1.0).space, o.window + 2.0 * o.offset);

  std::size_t yp = Y.base;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < Y.space.size(); ++i) {
    if (!Y.space.in_support(i)) continue;
    double gap = std::abs(Y.space.distance(Y.base, i) - o.offset);
    if (gap < best - 1e-12) {
      best = gap;
      yp = i;
    }
  }
  rep.yprime = yp;
  rep.yprime_offset = Y.space.distance(Y.base, yp);
  PointedSpace Yp = normalize_at(make_pointed(Y.space, yp), 1.0).space;
  BlowupSequence inner = blowup(Yp, o.inner_radii, {o.window});

  rep.min_value = std::numeric_limits<double>::infinity();
  for (auto i : inner.usable()) {
    const auto& im = inner.members[i];
    std::vector<std::size_t> targets;
    for (auto j : use) {
      double a = im.relative_resolution, b = orig.members[j].relative_resolution;
      if (std::abs(a - b) <= o.resolution_match * std::max(a, b)) targets.push_back(j);
    }
    if (targets.empty()) targets = use;
    for (auto j : targets) {
      IteratedComparison c{im.radius, orig.members[j].radius,
                           pmgh_distance(im.space, orig.members[j].space, o.pmgh).value};
      rep.comparisons.push_back(c);
      if (c.value < rep.min_value) {
        rep.min_value = c.value;
        rep.best = c;
      }
    }
  }
  if (rep.comparisons.empty()) throw ValidationError("iterated tangent: no usable inner member");
  return rep;
}

}  // namespace mms
