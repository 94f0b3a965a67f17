#include "mmslab/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mmslab/errors.hpp"
#include "mmslab/sigma.hpp"
#include "mmslab/space_ops.hpp"
#include "mmslab/vertex_enumeration.hpp"

namespace mms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> densities(const FiniteSpace& space, const Measure& mu, const char* which) {
  std::vector<double> rho(space.size(), 0.0);
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (mu.mass[i] <= 0.0) continue;
    if (!space.in_support(i))
      throw ValidationError(std::string("cdstar_check: ") + which + " charges a zero-weight point (no density)");
    rho[i] = mu.mass[i] / space.weight(i);
  }
  return rho;
}

// Rows for one coupling; the geodesic plan is rebuilt per coupling.
struct PlanRows {
  std::vector<CdRow> rows;
  double worst = kInf;
  GeodesicPlan geo;
};

PlanRows evaluate_plan(const FiniteSpace& space, const Interpolator& interp, const Coupling& plan,
                       const std::vector<double>& rho0, const std::vector<double>& rho1, const CdOptions& o,
                       const std::vector<double>& nprimes) {
  PlanRows out;
  out.geo = geodesic_plan(space, interp, plan, o.geodesic_samples);
  for (double t : o.t_grid) {
    Measure mu_t = out.geo.evaluate(space, interp, t);
    for (double np : nprimes) {
      CdRow row;
      row.t = t;
      row.n_prime = np;
      RenyiEnergy e = renyi_energy(space, mu_t, np);
      row.lhs = e.energy;
      row.singular_mass = e.singular_mass;
      double rhs = 0.0;
      for (const auto& a : plan.atoms) {
        double theta = space.distance(a.from, a.to);
        double s0 = sigma(o.K, np, 1.0 - t, theta);
        double s1 = sigma(o.K, np, t, theta);
        if (std::isinf(s0) || std::isinf(s1)) {
          rhs = -kInf;
          break;
        }
        rhs -= a.mass * (s0 * std::pow(rho0[a.from], -1.0 / np) + s1 * std::pow(rho1[a.to], -1.0 / np));
      }
      row.rhs = rhs;
      row.slack = rhs - row.lhs;
      out.worst = std::min(out.worst, row.slack);
      out.rows.push_back(row);
    }
  }
  return out;
}

}  // namespace

RenyiEnergy renyi_energy(const FiniteSpace& space, const Measure& mu, double n_prime) {
  if (mu.size() != space.size()) throw ValidationError("renyi_energy: measure size mismatch");
  if (!(n_prime >= 1.0)) throw ValidationError("renyi_energy: N' must be >= 1");
  RenyiEnergy r;
  const double p = 1.0 - 1.0 / n_prime;
  for (std::size_t i = 0; i < space.size(); ++i) {
    double m = mu.mass[i];
    if (m <= 0.0) continue;
    double w = space.weight(i);
    if (w <= 0.0) {
      r.singular_mass += m;
      continue;
    }
    // rho^p w = m^p w^{1-p}; written this way to keep tiny weights accurate.
    r.energy -= std::pow(m, p) * std::pow(w, 1.0 - p);
    r.support_measure += w;
  }
  return r;
}

std::string to_string(CdReport::Verdict v) {
  switch (v) {
    case CdReport::Verdict::holds: return "holds";
    case CdReport::Verdict::violated: return "violated";
    case CdReport::Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

CdReport cdstar_check(const FiniteSpace& space, const Measure& mu0, const Measure& mu1, const CdOptions& o) {
  if (mu0.size() != space.size() || mu1.size() != space.size())
    throw ValidationError("cdstar_check: measure size mismatch");
  if (!(o.N >= 1.0)) throw ValidationError("cdstar_check: N must be >= 1");
  for (double t : o.t_grid)
    if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("cdstar_check: t outside [0,1]");
  std::vector<double> nprimes = o.n_prime_grid;
  if (nprimes.empty()) nprimes = {o.N, o.N + 1.0, 2.0 * o.N};
  for (double np : nprimes)
    if (!(np >= o.N)) throw ValidationError("cdstar_check: N' below N");

  const auto rho0 = densities(space, mu0, "mu0");
  const auto rho1 = densities(space, mu1, "mu1");

  CdReport rep;
  rep.K = o.K;
  rep.N = o.N;
  if (o.tolerance) {
    rep.tolerance = *o.tolerance;
  } else {
    std::vector<std::size_t> pts = mu0.support();
    for (auto j : mu1.support())
      if (mu0.mass[j] <= 0.0) pts.push_back(j);
    rep.tolerance = 5.0 * space.resolution() * diameter(space, pts);
  }

  W2Result exact = w2(space, mu0, mu1);
  rep.transport_cost = exact.cost;
  Interpolator interp(space);

  PlanRows best = evaluate_plan(space, interp, exact.plan, rho0, rho1, o, nprimes);
  if (o.exhaustive && best.worst < -rep.tolerance) {
    bool complete = true;
    auto plans = optimal_couplings(space, mu0, mu1, exact, 12, &complete);
    rep.enumeration_complete = complete;
    rep.plans_examined = 1;
    for (const auto& c : plans) {
      if (c.atoms == exact.plan.atoms) continue;
      ++rep.plans_examined;
      PlanRows cand = evaluate_plan(space, interp, c, rho0, rho1, o, nprimes);
      if (cand.worst > best.worst) best = std::move(cand);
    }
  }

  rep.rows = std::move(best.rows);
  rep.geodesic_defect = best.geo.worst_defect;
  rep.flagged_paths = best.geo.flagged;
  if (rep.rows.empty()) {
    rep.verdict = CdReport::Verdict::inconclusive;
    rep.note = "empty (t, N') grid";
    return rep;
  }
  rep.worst = *std::min_element(rep.rows.begin(), rep.rows.end(),
                                [](const CdRow& a, const CdRow& b) { return a.slack < b.slack; });
  if (std::isnan(rep.worst.slack)) {
    rep.verdict = CdReport::Verdict::inconclusive;
    rep.note = "non-finite slack";
  } else if (rep.worst.slack >= -rep.tolerance) {
    rep.verdict = CdReport::Verdict::holds;
    rep.note = "tolerance is the discretization convention 5*h*diam unless overridden";
  } else {
    rep.verdict = CdReport::Verdict::violated;
    rep.note = o.exhaustive
                   ? (rep.enumeration_complete ? "every vertex-optimal plan violates at the reported grid point"
                                               : "vertex enumeration incomplete; best plan found violates")
                   : "the computed optimal plan violates; another optimal plan may satisfy the inequality";
  }
  if (rep.flagged_paths > 0) rep.note += "; some interpolation paths exceed the geodesic accuracy";
  return rep;
}

ProlongReport prolongability_experiment(const FiniteSpace& space, std::size_t x0, double R,
                                        const ProlongOptions& o) {
  if (x0 >= space.size() || !space.in_support(x0)) throw ValidationError("prolongability: x0 not in support");
  if (!(R > 0.0)) throw ValidationError("prolongability: R must be positive");
  if (!(o.N >= 1.0)) throw ValidationError("prolongability: N must be >= 1");

  ProlongReport rep;
  rep.center = x0;
  rep.radius = R;
  auto ball = ball_points(space, x0, R);
  Measure mu0 = Measure::uniform_on(space, ball);
  for (auto i : ball) rep.ball_mass += space.weight(i);

  // Every plan to a Dirac is the trivial one.
  Coupling plan{space.size(), {}};
  for (auto i : ball)
    if (mu0.mass[i] > 0.0) plan.atoms.push_back({i, x0, mu0.mass[i]});
  Interpolator interp(space);
  GeodesicPlan geo = geodesic_plan(space, interp, plan, 2);
  const double rho0_pow = std::pow(rep.ball_mass, 1.0 / o.N);  // rho_0^{-1/N}

  for (double t : o.t_grid) {
    if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("prolongability: t outside [0,1]");
    ProlongRow row;
    row.t = t;
    Measure mu_t = geo.evaluate(space, interp, t);
    double m_e = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i)
      if (mu_t.mass[i] > 0.0) m_e += space.weight(i);
    row.ratio = m_e / rep.ball_mass;
    row.entropy = renyi_energy(space, mu_t, o.N).energy;
    row.jensen_bound = -std::pow(m_e, 1.0 / o.N);
    double rhs = 0.0;
    for (const auto& a : plan.atoms) {
      double s = sigma(o.K, o.N, 1.0 - t, space.distance(a.from, a.to));
      if (std::isinf(s)) {
        rhs = -kInf;
        break;
      }
      rhs -= a.mass * s * rho0_pow;
    }
    row.rhs = rhs;
    rep.rows.push_back(row);
  }

  std::vector<double> grid = o.coverage_grid;
  if (grid.empty())
    for (int k = 1; k < 100; ++k) grid.push_back(k / 100.0);
  std::vector<char> covered(space.size(), 0);
  for (double t : grid) {
    if (t <= 0.0) continue;
    for (std::size_t k = 0; k < geo.paths.size(); ++k) covered[geo.at(interp, k, t)] = 1;
  }
  double cov = 0.0;
  for (auto i : ball)
    if (covered[i]) cov += space.weight(i);
  rep.coverage = cov / rep.ball_mass;
  return rep;
}

}  // namespace mms
