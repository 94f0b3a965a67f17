// Acceptance suite: one line per criterion, "[PASS]" or "[FAIL]", with the
// measured quantities and wall time. Exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "mmslab/curvature.hpp"
#include "mmslab/doubling.hpp"
#include "mmslab/models.hpp"
#include "mmslab/pmgh.hpp"
#include "mmslab/sigma.hpp"
#include "mmslab/space_ops.hpp"
#include "mmslab/splitting.hpp"
#include "mmslab/tangent.hpp"
#include "mmslab/transport.hpp"

using namespace mms;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED(" << what << ")";
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " exception: " << e.what();
  }
  const double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(el < budget_s, "runtime");
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s (%.2f s / %.0f s):%s\n", o.pass ? "PASS" : "FAIL", id, name, el, budget_s,
              o.detail.str().c_str());
  std::fflush(stdout);
}

PointedSpace grid(std::size_t dim, double h, double lo, double hi) {
  ModelSpec s;
  s.dim = dim;
  s.h = h;
  s.lo = lo;
  s.hi = hi;
  return make_model(s);
}

std::vector<std::size_t> where(const FiniteSpace& X, double a, double b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < X.size(); ++i)
    if (X.coords(i)[0] >= a && X.coords(i)[0] <= b) out.push_back(i);
  return out;
}

std::vector<double> simplex_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::vector<double> v(n);
  double s = 0.0;
  for (auto& x : v) s += (x = u(rng));
  for (auto& x : v) x /= s;
  return v;
}

oracle::Pointed plain(const PointedSpace& ps) {
  oracle::Pointed o;
  const auto n = ps.space.size();
  o.d.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    o.w.push_back(ps.space.weight(i));
    for (std::size_t j = 0; j < n; ++j) o.d[i][j] = ps.space.distance(i, j);
  }
  o.base = ps.base;
  return o;
}

void sigma_suite(Outcome& o) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> K(-30, 30), N(1, 12), t(0, 1), th(0, 4);
  double worst = 0.0;
  std::size_t mismatched_inf = 0, infinite = 0;
  for (int i = 0; i < 10000; ++i) {
    double k = i % 10 == 0 ? 0.0 : K(rng), n = N(rng), tt = t(rng), x = i % 10 == 1 ? 0.0 : th(rng);
    double got = sigma(k, n, tt, x), want = oracle::sigma(k, n, tt, x);
    if (std::isinf(want) || std::isinf(got)) {
      infinite += std::isinf(want);
      mismatched_inf += std::isinf(want) != std::isinf(got);
    } else {
      worst = std::max(worst, std::abs(got - want));
    }
  }
  std::size_t bad_flips = 0;
  for (int i = 0; i < 200; ++i) {
    double n = N(rng), x = 0.2 + th(rng), crit = n * std::numbers::pi * std::numbers::pi;
    bad_flips += !std::isfinite(sigma((crit - 1e-9) / (x * x), n, 0.5, x));
    bad_flips += !std::isinf(sigma((crit + 1e-9) / (x * x), n, 0.5, x));
  }
  o.detail << " max|err| = " << worst << " over 10^4 draws (" << infinite << " infinite), boundary flips wrong = "
           << bad_flips;
  o.require(worst <= 1e-12, "error");
  o.require(mismatched_inf == 0, "finiteness");
  o.require(bad_flips == 0, "boundary");
}

void w2_oracles(Outcome& o) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst_small = 0.0, worst_line = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4, dim = 1 + rng() % 3;
    std::vector<double> xy((m + n) * dim);
    for (auto& v : xy) v = u(rng);
    auto X = from_euclidean(dim, xy, std::vector<double>(m + n, 1.0));
    auto a = simplex_point(rng, m), b = simplex_point(rng, n);
    Measure mu0{std::vector<double>(m + n, 0.0)}, mu1{std::vector<double>(m + n, 0.0)};
    std::copy(a.begin(), a.end(), mu0.mass.begin());
    std::copy(b.begin(), b.end(), mu1.mass.begin() + m);
    std::vector<double> c(m * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = std::pow(X.distance(i, m + j), 2);
    worst_small = std::max(worst_small, std::abs(w2(X, mu0, mu1).cost - oracle::brute_transport(a, b, c)));
  }
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = 2 + rng() % 199;
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    auto X = from_euclidean(1, x, std::vector<double>(n, 1.0));
    auto a = simplex_point(rng, n), b = simplex_point(rng, n);
    worst_line = std::max(worst_line, std::abs(w2(X, Measure{a}, Measure{b}).cost - oracle::quantile_w2(x, a, b)));
  }
  o.detail << " max gap vs basis enumeration = " << worst_small << " (500 instances), vs quantile formula = "
           << worst_line << " (100 instances)";
  o.require(worst_small <= 1e-9, "small");
  o.require(worst_line <= 1e-9, "line");
}

void cd_segment(Outcome& o) {
  double prev_deficit = -1.0;
  for (double h : {0.02, 0.01, 0.005}) {
    auto ps = grid(1, h, 0, 1);
    auto& X = ps.space;
    CdOptions c;
    c.n_prime_grid = {1, 2};
    auto rep =
        cdstar_check(X, Measure::uniform_on(X, where(X, 0, 0.5 - 1e-9)), Measure::uniform_on(X, where(X, 0.5 + 1e-9, 1)), c);
    const double diam = 1.0, deficit = std::max(0.0, -rep.worst.slack);
    o.detail << " h=" << h << ": worst slack " << rep.worst.slack << " (" << to_string(rep.verdict) << ");";
    o.require(rep.worst.slack >= -5 * h * diam, "slack bound");
    // order check on the deficit, with a round-off floor
    if (prev_deficit >= 0.0) o.require(deficit <= std::max(prev_deficit / 1.5, 1e-12), "refinement order");
    prev_deficit = deficit;
  }
}

void cd_diameter(Outcome& o) {
  auto ps = grid(1, 0.01, 0, 4);
  auto& X = ps.space;
  CdOptions c;
  c.K = 10;
  c.N = 1;
  auto rep = cdstar_check(X, Measure::uniform_on(X, where(X, 0, 0.02)), Measure::uniform_on(X, where(X, 3.98, 4)), c);
  o.detail << " verdict " << to_string(rep.verdict) << ", worst RHS " << rep.worst.rhs;
  o.require(rep.verdict == CdReport::Verdict::violated, "verdict");
  o.require(std::isinf(rep.worst.rhs) && rep.worst.rhs < 0, "rhs");
}

void cd_scaling(Outcome& o) {
  double worst = 0.0;
  std::size_t rows = 0;
  auto check = [&](const FiniteSpace& X, const Measure& a, const Measure& b, double K, double N) {
    CdOptions c;
    c.K = K;
    c.N = N;
    auto base = cdstar_check(X, a, b, c);
    for (double lam : {0.5, 3.0}) {
      c.K = K / (lam * lam);
      auto sc = cdstar_check(X.scaled(lam), a, b, c);
      if (sc.rows.size() != base.rows.size()) {
        worst = INFINITY;
        continue;
      }
      for (std::size_t k = 0; k < sc.rows.size(); ++k, ++rows) {
        double x = base.rows[k].slack, y = sc.rows[k].slack;
        if (std::isinf(x) || std::isinf(y))
          worst = std::max(worst, x == y ? 0.0 : INFINITY);
        else
          worst = std::max(worst, std::abs(x - y));
      }
    }
  };
  auto seg = grid(1, 0.01, 0, 1);
  auto& S = seg.space;
  for (double K : {-3.0, 0.0, 2.0, 40.0})
    check(S, Measure::uniform_on(S, where(S, 0, 0.3)), Measure::uniform_on(S, where(S, 0.45, 1)), K, 2);
  auto sq = grid(2, 0.05, 0, 1);
  auto& Q = sq.space;
  check(Q, Measure::uniform_on(Q, where(Q, 0, 0.25)), Measure::uniform_on(Q, where(Q, 0.6, 1)), 1.0, 3);
  o.detail << " max |slack difference| = " << worst << " over " << rows << " entries, lambda in {0.5, 3}";
  o.require(worst <= 1e-9, "covariance");
}

void prolong(Outcome& o) {
  auto ps = grid(2, 0.02, -0.7, 0.7);
  ProlongOptions p;
  p.N = 2;
  auto rep = prolongability_experiment(ps.space, ps.base, 0.6, p);
  for (const auto& r : rep.rows) {
    double want = (1 - r.t) * (1 - r.t);
    o.detail << " t=" << r.t << ": " << r.ratio << " vs " << want << ";";
    o.require(std::abs(r.ratio - want) <= 0.05, "ratio");
  }
  o.detail << " coverage " << rep.coverage;
  o.require(rep.coverage >= 0.95, "coverage");
}

void doubling(Outcome& o) {
  struct Case {
    std::size_t n;
    double h, half;
    std::vector<double> radii;
  };
  // interior envelope: balls of radius >= 10h around the center, 2r inside the grid
  for (const Case& c : {Case{1, 0.01, 1.0, {0.1, 0.2, 0.4}}, Case{2, 0.02, 1.0, {0.2, 0.4}},
                        Case{3, 0.05, 1.2, {0.5}}}) {
    auto ps = grid(c.n, c.h, -c.half, c.half);
    CenterPolicy pol;
    pol.explicit_centers = {ps.base};
    auto p = doubling_profile(ps.space, c.radii, pol);
    const double target = std::pow(2.0, static_cast<double>(c.n)), env = p.envelope.back();
    o.detail << " R^" << c.n << ": envelope " << env << " vs " << target << ";";
    o.require(std::abs(env - target) <= 0.05 * target, "envelope");
  }
  // iterated bound on every center with dyadic radii
  std::size_t samples = 0, violations = 0;
  for (const Case& c : {Case{1, 0.01, 1.0, {}}, Case{2, 0.05, 1.0, {}}, Case{3, 0.2, 1.0, {}}}) {
    auto ps = grid(c.n, c.h, -c.half, c.half);
    std::vector<double> radii;
    for (double r = c.h; r <= 2 * c.half; r *= 2) radii.push_back(r);
    CenterPolicy pol;
    pol.budget = ps.space.size();
    pol.seed = 7;
    auto p = doubling_profile(ps.space, radii, pol, 1000);
    samples += p.iterated.size();
    violations += p.iterated_violations;
  }
  o.detail << " iterated bound: " << violations << " violations in " << samples << " samples";
  o.require(violations == 0 && samples == 3000, "iterated");
}

PointedSpace relabel(const PointedSpace& ps, std::mt19937_64& rng) {
  const auto n = ps.space.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<double> d(n * n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = ps.space.weight(perm[i]);
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = ps.space.distance(perm[i], perm[j]);
  }
  return make_pointed(from_matrix(n, d, w), std::find(perm.begin(), perm.end(), ps.base) - perm.begin());
}

void pmgh(Outcome& o) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1.6), w(0.1, 1.0);
  PmghOptions ex;
  ex.mode = PmghMode::exhaustive;
  double worst_iso = 0.0;
  bool symmetric = true;
  for (int rep = 0; rep < 50; ++rep) {
    std::size_t n = 2 + rng() % 8;
    std::vector<double> xy(2 * n), wt(n);
    for (auto& v : xy) v = u(rng);
    for (auto& v : wt) v = w(rng);
    auto A = normalize_at(make_pointed(from_euclidean(2, xy, wt), rng() % n), 1.0).space;
    auto B = relabel(A, rng);
    auto ab = pmgh_distance(A, B, ex).value, ba = pmgh_distance(B, A, ex).value;
    worst_iso = std::max(worst_iso, ab);
    symmetric = symmetric && ab == ba;
  }
  // symmetry also on unrelated pairs, including annealed ones
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t n = 3 + rng() % 30, m = 3 + rng() % 30;
    auto make = [&](std::size_t k) {
      std::vector<double> xy(2 * k), wt(k);
      for (auto& v : xy) v = u(rng);
      for (auto& v : wt) v = w(rng);
      return normalize_at(make_pointed(from_euclidean(2, xy, wt), 0), 1.0).space;
    };
    auto A = make(n), B = make(m);
    symmetric = symmetric && pmgh_distance(A, B).value == pmgh_distance(B, A).value;
  }
  auto A = normalize_at(make_pointed(from_matrix(2, {0, 1, 1, 0}, {1, 1}), 0), 1.0).space;
  auto B = normalize_at(make_pointed(from_matrix(2, {0, 1.2, 1.2, 0}, {1, 1}), 0), 1.0).space;
  double two = pmgh_distance(A, B, ex).value, brute = oracle::brute_pmgh(plain(A), plain(B), ex.radii);
  o.detail << " isomorphic pairs max D = " << worst_iso << " (50 pairs); two-point D = " << two << " vs brute force "
           << brute << "; symmetric " << (symmetric ? "yes" : "no");
  o.require(worst_iso <= 1e-12, "isomorphic");
  o.require(std::abs(two - brute) <= 1e-12, "two-point");
  o.require(symmetric, "symmetry");
}

void tangents(Outcome& o) {
  const std::vector<double> radii{0.125, 0.0625, 0.03125};
  auto plane = grid(2, 0.01, -1.5, 1.5);
  auto m = match_tangent(blowup(plane, radii), {euclidean_model(1), euclidean_model(2), euclidean_model(3)});
  double d1 = 0, d2 = 0, d3 = 0;
  for (const auto& x : m.matches) {
    if (x.model == euclidean_model(1).name) d1 = x.final_value;
    if (x.model == euclidean_model(2).name) d2 = x.final_value;
    if (x.model == euclidean_model(3).name) d3 = x.final_value;
  }
  o.detail << " plane: D to R^1/R^2/R^3 = " << d1 << "/" << d2 << "/" << d3 << ";";
  o.require(d2 < 0.1, "R^2 value");
  o.require(d1 >= 2 * d2 && d3 >= 2 * d2, "margin");

  ModelSpec l;
  l.kind = ModelKind::lp_plane;
  l.p = std::numeric_limits<double>::infinity();
  l.h = 0.01;
  l.lo = -1.5;
  l.hi = 1.5;
  auto lm = match_tangent(blowup(make_model(l), radii), {euclidean_model(2), lp_model(l.p)});
  double de = 0, dl = 0;
  for (const auto& x : lm.matches) (x.model == euclidean_model(2).name ? de : dl) = x.final_value;
  o.detail << " l-infinity plane: D to R^2 = " << de << ", to l-infinity model = " << dl;
  o.require(de >= 2 * dl, "l-infinity margin");
}

void splitting(Outcome& o) {
  ModelSpec c;
  c.kind = ModelKind::cylinder;
  c.circumference = 1;
  c.axis_length = 10;
  c.h = 0.05;
  auto cyl = make_model(c);
  auto line = detect_line(cyl, 5.0, 0.05);
  o.require(line.has_value(), "no line");
  if (!line) return;
  auto sp = split(cyl, *line);
  auto q = normalize_at(sp.quotient, 1.0).space;
  double d = pmgh_distance(q, circle_model(1.0).make(c.h, 8.0)).value;
  o.detail << " eps_line " << line->eps_line << ", delta_metric " << sp.delta_metric << ", delta_measure "
           << sp.delta_measure << ", quotient " << sp.quotient.space.size() << " points at D = " << d
           << " from the circle";
  o.require(line->eps_line <= 0.05, "eps_line");
  o.require(sp.delta_metric <= 0.15, "delta_metric");
  o.require(d <= 0.15, "quotient");
}

void dimension(Outcome& o) {
  for (std::size_t d = 1; d <= 3; ++d) {
    auto X = grid(d, d == 1 ? 0.01 : d == 2 ? 0.02 : 0.1, -2.5, 2.5);
    DimensionConfig c;
    c.N = static_cast<double>(d);
    auto r = euclidean_dimension(X, c);
    o.detail << " R^" << d << " -> " << r.n << ";";
    o.require(r.n == d, "dimension");
  }
  // n <= floor(N) over the model corpus and a range of N
  std::size_t runs = 0, over = 0;
  std::vector<ModelSpec> corpus;
  for (auto k : all_model_kinds()) {
    ModelSpec s;
    s.kind = k;
    s.dim = 2;
    s.h = 0.05;
    s.lo = -2;
    s.hi = 2;
    s.axis_length = 6;
    s.nodes = 150;
    s.connect_radius = 0.2;
    corpus.push_back(s);
  }
  for (std::size_t dim : {1u, 3u}) {
    ModelSpec s;
    s.dim = dim;
    s.h = dim == 1 ? 0.02 : 0.15;
    s.lo = -2.5;
    s.hi = 2.5;
    corpus.push_back(s);
  }
  for (const auto& s : corpus) {
    auto X = make_model(s);
    for (double N : {1.0, 1.5, 2.0, 2.9, 4.0}) {
      DimensionConfig c;
      c.N = N;
      auto r = euclidean_dimension(X, c);
      ++runs;
      over += r.n > static_cast<std::size_t>(std::floor(N));
    }
  }
  o.detail << " n <= floor(N) in " << runs - over << "/" << runs << " corpus runs";
  o.require(over == 0, "floor(N)");
}

void iterated(Outcome& o) {
  auto plane = grid(2, 0.01, -1.5, 1.5);
  auto rep = iterated_tangent_check(plane, {0.125, 0.0625, 0.03125});
  o.detail << " tangent radius " << rep.tangent_radius << ", y' at offset " << rep.yprime_offset << ", min D = "
           << rep.min_value << " (inner radius " << rep.best.inner_radius << " vs original " << rep.best.original_radius
           << ")";
  o.require(rep.min_value <= 0.15, "value");
}

}  // namespace

int main() {
  criterion(1, "sigma coefficients vs 50-digit evaluator", 1, sigma_suite);
  criterion(2, "W2 exact LP vs brute-force and quantile oracles", 30, w2_oracles);
  criterion(3, "CD*(0,1) on the unit segment under refinement", 120, cd_segment);
  criterion(4, "diameter obstruction K=10 on [0,4]", 10, cd_diameter);
  criterion(5, "scaling covariance of CD* slack tables", 60, cd_scaling);
  criterion(6, "prolongability on a planar disc", 120, prolong);
  criterion(7, "doubling envelopes and iterated bound", 60, doubling);
  criterion(8, "pmGH surrogate: isomorphism, brute force, symmetry", 60, pmgh);
  criterion(9, "tangent identification (plane, l-infinity plane)", 600, tangents);
  criterion(10, "splitting the cylinder", 300, splitting);
  criterion(11, "Euclidean dimension by iterated splitting", 900, dimension);
  criterion(12, "tangents of tangents", 600, iterated);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
