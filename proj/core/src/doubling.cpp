#include "mmslab/doubling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mmslab/errors.hpp"
#include "mmslab/space_ops.hpp"

namespace mms {

double DoublingProfile::envelope_at(double R) const {
  if (envelope.empty()) return 1.0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < radii.size(); ++i)
    if (radii[i] <= R) k = i;
  return envelope[k];
}

namespace {

std::vector<std::size_t> pick_centers(const FiniteSpace& space, const CenterPolicy& policy) {
  if (!policy.explicit_centers.empty()) {
    for (auto c : policy.explicit_centers)
      if (c >= space.size() || !space.in_support(c))
        throw ValidationError("doubling_profile: center outside the support");
    return policy.explicit_centers;
  }
  auto supp = support(space);
  if (supp.size() <= policy.budget) return supp;
  std::mt19937_64 rng(policy.seed);
  std::vector<std::size_t> out;
  std::sample(supp.begin(), supp.end(), std::back_inserter(out), policy.budget, rng);
  return out;
}

}  // namespace

DoublingProfile doubling_profile(const FiniteSpace& space, const std::vector<double>& radii,
                                 const CenterPolicy& policy, std::size_t iterated_samples) {
  if (radii.empty()) throw ValidationError("doubling_profile: no radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw ValidationError("doubling_profile: radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw ValidationError("doubling_profile: radii must be increasing");
  }
  DoublingProfile prof;
  prof.radii = radii;
  prof.centers = pick_centers(space, policy);
  prof.ratios.assign(radii.size(), 1.0);

  std::vector<double> dist(space.size());
  for (std::size_t c : prof.centers) {
    for (std::size_t i = 0; i < space.size(); ++i) dist[i] = space.distance(c, i);
    for (std::size_t k = 0; k < radii.size(); ++k) {
      double small = 0.0, big = 0.0;
      for (std::size_t i = 0; i < space.size(); ++i) {
        if (in_ball(dist[i], radii[k])) small += space.weight(i);
        if (in_ball(dist[i], 2.0 * radii[k])) big += space.weight(i);
      }
      // small > 0 because c is in the support
      prof.ratios[k] = std::max(prof.ratios[k], big / small);
    }
  }
  prof.envelope.resize(radii.size());
  double run = 1.0;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    run = std::max(run, prof.ratios[k]);
    prof.envelope[k] = run;
  }

  if (iterated_samples > 0) {
    std::mt19937_64 rng(policy.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> pick_center(0, prof.centers.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_radius(0, radii.size() - 1);
    for (std::size_t s = 0; s < iterated_samples; ++s) {
      std::size_t i = pick_radius(rng), j = pick_radius(rng);
      double r = radii[std::min(i, j)], R = radii[std::max(i, j)];
      std::size_t a = prof.centers[pick_center(rng)];
      auto ball = ball_points(space, a, R);
      std::vector<std::size_t> cand;
      for (auto p : ball)
        if (space.in_support(p)) cand.push_back(p);
      std::uniform_int_distribution<std::size_t> pick_x(0, cand.size() - 1);
      std::size_t x = cand[pick_x(rng)];
      IteratedCheck chk{a, x, r, R, ball_mass(space, a, R), 0.0};
      chk.rhs = ball_mass(space, x, r) * std::pow(prof.envelope_at(R), std::log2(R / r) + 2.0);
      if (!chk.holds()) ++prof.iterated_violations;
      prof.iterated.push_back(chk);
    }
  }
  return prof;
}

}  // namespace mms
