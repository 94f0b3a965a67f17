#include "mmslab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "mmslab/errors.hpp"

namespace mms {

double Measure::total() const { return std::accumulate(mass.begin(), mass.end(), 0.0); }

std::vector<std::size_t> Measure::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mass.size(); ++i)
    if (mass[i] > 0.0) out.push_back(i);
  return out;
}

Measure Measure::dirac(std::size_t n, std::size_t at) {
  if (at >= n) throw ValidationError("dirac: index out of range");
  Measure m{std::vector<double>(n, 0.0)};
  m.mass[at] = 1.0;
  return m;
}

Measure Measure::uniform_on(const FiniteSpace& space, const std::vector<std::size_t>& points) {
  Measure m{std::vector<double>(space.size(), 0.0)};
  double total = 0.0;
  for (auto p : points) total += space.weight(p);
  if (!(total > 0.0)) throw ValidationError("uniform_on: set has zero reference mass");
  for (auto p : points) m.mass[p] = space.weight(p) / total;
  return m;
}

Measure Coupling::first_marginal() const {
  Measure m{std::vector<double>(points, 0.0)};
  for (const auto& a : atoms) m.mass[a.from] += a.mass;
  return m;
}

Measure Coupling::second_marginal() const {
  Measure m{std::vector<double>(points, 0.0)};
  for (const auto& a : atoms) m.mass[a.to] += a.mass;
  return m;
}

double Coupling::cost(const FiniteSpace& space) const {
  double c = 0.0;
  for (const auto& a : atoms) {
    double d = space.distance(a.from, a.to);
    c += a.mass * d * d;
  }
  return c;
}

double W2Result::distance() const { return std::sqrt(std::max(0.0, cost)); }

namespace {

constexpr double kMassTol = 1e-9;

void check_marginals(const FiniteSpace& space, const Measure& mu0, const Measure& mu1) {
  if (mu0.size() != space.size() || mu1.size() != space.size())
    throw ValidationError("transport: measure size does not match the space");
  for (const Measure* mu : {&mu0, &mu1}) {
    for (double x : mu->mass)
      if (!(x >= 0.0)) throw ValidationError("transport: negative or NaN mass");
    if (std::abs(mu->total() - 1.0) > kMassTol)
      throw ValidationError("transport: marginal is not a probability measure (mass mismatch)");
  }
}

W2Result solve_exact(const FiniteSpace& space, const Measure& mu0, const Measure& mu1,
                     const TransportOptions& lp) {
  W2Result res;
  res.rows = mu0.support();
  res.cols = mu1.support();
  const std::size_t m = res.rows.size(), n = res.cols.size();
  std::vector<double> s(m), d(n), c(m * n);
  for (std::size_t a = 0; a < m; ++a) s[a] = mu0.mass[res.rows[a]];
  for (std::size_t b = 0; b < n; ++b) d[b] = mu1.mass[res.cols[b]];
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double dist = space.distance(res.rows[a], res.cols[b]);
      c[a * n + b] = dist * dist;
    }
  auto sol = solve_transport(s, d, c, lp);
  res.cost = sol.cost;
  res.iterations = sol.pivots;
  res.u = std::move(sol.u);
  res.v = std::move(sol.v);
  res.plan.points = space.size();
  for (const auto& at : sol.plan) res.plan.atoms.push_back({res.rows[at.from], res.cols[at.to], at.mass});
  std::sort(res.plan.atoms.begin(), res.plan.atoms.end(),
            [](const Atom& x, const Atom& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });
  return res;
}

W2Result solve_entropic(const FiniteSpace& space, const Measure& mu0, const Measure& mu1,
                        const W2Options& opt) {
  W2Result res;
  auto rows = mu0.support(), cols = mu1.support();
  const std::size_t m = rows.size(), n = cols.size();
  std::vector<double> c(m * n);
  double cmax = 0.0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double dist = space.distance(rows[a], cols[b]);
      c[a * n + b] = dist * dist;
      cmax = std::max(cmax, c[a * n + b]);
    }
  const double eps = opt.entropic_reg * (cmax > 0.0 ? cmax : 1.0);
  std::vector<double> loga(m), logb(n), f(m, 0.0), g(n, 0.0);
  for (std::size_t a = 0; a < m; ++a) loga[a] = std::log(mu0.mass[rows[a]]);
  for (std::size_t b = 0; b < n; ++b) logb[b] = std::log(mu1.mass[cols[b]]);

  auto update_f = [&] {
    for (std::size_t a = 0; a < m; ++a) {
      double mx = -std::numeric_limits<double>::infinity();
      for (std::size_t b = 0; b < n; ++b) mx = std::max(mx, (g[b] - c[a * n + b]) / eps);
      double s = 0.0;
      for (std::size_t b = 0; b < n; ++b) s += std::exp((g[b] - c[a * n + b]) / eps - mx);
      f[a] = eps * (loga[a] - mx - std::log(s));
    }
  };
  auto update_g = [&] {
    for (std::size_t b = 0; b < n; ++b) {
      double mx = -std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < m; ++a) mx = std::max(mx, (f[a] - c[a * n + b]) / eps);
      double s = 0.0;
      for (std::size_t a = 0; a < m; ++a) s += std::exp((f[a] - c[a * n + b]) / eps - mx);
      g[b] = eps * (logb[b] - mx - std::log(s));
    }
  };
  auto row_error = [&] {
    double err = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
      double r = 0.0;
      for (std::size_t b = 0; b < n; ++b) r += std::exp((f[a] + g[b] - c[a * n + b]) / eps);
      err += std::abs(r - mu0.mass[rows[a]]);
    }
    return err;
  };

  std::size_t it = 0;
  double err = std::numeric_limits<double>::infinity();
  while (it < opt.entropic_max_iter) {
    update_f();
    update_g();
    ++it;
    if (it % 10 == 0 || it == opt.entropic_max_iter) {
      err = row_error();
      if (err <= opt.entropic_tol) break;
    }
  }
  if (!std::isfinite(err)) err = row_error();
  res.iterations = it;
  res.marginal_error = err;
  res.plan.points = space.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double p = std::exp((f[a] + g[b] - c[a * n + b]) / eps);
      if (p > 0.0) {
        res.plan.atoms.push_back({rows[a], cols[b], p});
        res.cost += p * c[a * n + b];
      }
    }
  return res;
}

}  // namespace

W2Result w2(const FiniteSpace& space, const Measure& mu0, const Measure& mu1, const W2Options& options) {
  check_marginals(space, mu0, mu1);
  if (options.solver == Solver::entropic) return solve_entropic(space, mu0, mu1, options);
  return solve_exact(space, mu0, mu1, options.lp);
}

W2Result monotone_1d(const FiniteSpace& space, const Measure& mu0, const Measure& mu1) {
  if (!space.has_coords() || space.coord_dim() != 1)
    throw ValidationError("monotone_1d: space does not carry 1-D coordinates");
  check_marginals(space, mu0, mu1);
  auto by_coord = [&](std::vector<std::size_t> idx) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return space.coords(a)[0] < space.coords(b)[0];
    });
    return idx;
  };
  auto xs = by_coord(mu0.support()), ys = by_coord(mu1.support());
  W2Result res;
  res.plan.points = space.size();
  std::size_t a = 0, b = 0;
  double ra = xs.empty() ? 0.0 : mu0.mass[xs[0]], rb = ys.empty() ? 0.0 : mu1.mass[ys[0]];
  while (a < xs.size() && b < ys.size()) {
    double q = std::min(ra, rb);
    if (q > 0.0) {
      res.plan.atoms.push_back({xs[a], ys[b], q});
      double d = space.distance(xs[a], ys[b]);
      res.cost += q * d * d;
    }
    ra -= q;
    rb -= q;
    if (ra <= rb) {
      if (++a < xs.size()) ra = mu0.mass[xs[a]];
    } else {
      if (++b < ys.size()) rb = mu1.mass[ys[b]];
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, double> merged;
  for (const auto& at : res.plan.atoms) merged[{at.from, at.to}] += at.mass;
  res.plan.atoms.clear();
  for (const auto& [k, v] : merged) res.plan.atoms.push_back({k.first, k.second, v});
  return res;
}

Measure interpolate(const FiniteSpace& space, const Interpolator& interp, const Coupling& plan, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("interpolate: t outside [0,1]");
  Measure mu{std::vector<double>(space.size(), 0.0)};
  for (const auto& a : plan.atoms) mu.mass[interp(a.from, a.to, t)] += a.mass;
  return mu;
}

std::size_t GeodesicPlan::at(const Interpolator& interp, std::size_t k, double t) const {
  return interp(paths[k].from, paths[k].to, t);
}

Measure GeodesicPlan::evaluate(const FiniteSpace& space, const Interpolator& interp, double t) const {
  Measure mu{std::vector<double>(space.size(), 0.0)};
  for (std::size_t k = 0; k < paths.size(); ++k) mu.mass[at(interp, k, t)] += paths[k].mass;
  return mu;
}

Coupling GeodesicPlan::endpoints(std::size_t points) const {
  Coupling c{points, {}};
  for (const auto& p : paths) c.atoms.push_back({p.from, p.to, p.mass});
  return c;
}

GeodesicPlan geodesic_plan(const FiniteSpace& space, const Interpolator& interp, const Coupling& plan,
                           std::size_t samples) {
  if (samples < 1) samples = 1;
  GeodesicPlan gp;
  gp.accuracy = interp.accuracy();
  std::vector<std::size_t> pts(samples + 1);
  for (const auto& a : plan.atoms) {
    GeodesicPath path{a.from, a.to, a.mass, 0.0, true};
    const double len = space.distance(a.from, a.to);
    for (std::size_t s = 0; s <= samples; ++s) pts[s] = interp(a.from, a.to, double(s) / double(samples));
    for (std::size_t s = 0; s <= samples; ++s)
      for (std::size_t t = s + 1; t <= samples; ++t) {
        double expect = double(t - s) / double(samples) * len;
        path.defect = std::max(path.defect, std::abs(space.distance(pts[s], pts[t]) - expect));
      }
    path.within_tolerance = path.defect <= gp.accuracy + 1e-12;
    if (!path.within_tolerance) ++gp.flagged;
    gp.worst_defect = std::max(gp.worst_defect, path.defect);
    gp.paths.push_back(path);
  }
  return gp;
}

}  // namespace mms
