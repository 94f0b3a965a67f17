#include "mmslab/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "mmslab/errors.hpp"
#include "mmslab/space_ops.hpp"
#include "mmslab/tangent.hpp"
#include "mmslab/transport_simplex.hpp"

namespace mms {

double effective_resolution(const FiniteSpace& s) {
  if (s.resolution() > 0.0) return s.resolution();
  if (s.size() < 2) return 0.0;
  const std::size_t stride = std::max<std::size_t>(1, s.size() / 256);
  double h = 0.0;
  for (std::size_t i = 0; i < s.size(); i += stride) {
    double nn = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) nn = std::min(nn, s.distance(i, j));
    h = std::max(h, nn);
  }
  return h;
}

namespace {

double chain_defect(const FiniteSpace& s, const std::vector<std::size_t>& z, const std::vector<double>& t) {
  double e = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) e = std::max(e, std::abs(s.distance(z[i], z[j]) - std::abs(t[i] - t[j])));
  return e;
}

}  // namespace

std::optional<LineCandidate> detect_line(const PointedSpace& ps, double L, double eps, const LineOptions& o) {
  if (!(L > 0.0)) throw ValidationError("detect_line: L must be positive");
  const FiniteSpace& X = ps.space;
  const std::size_t n = X.size();
  const double h = effective_resolution(X);
  const double band = std::max(h, 1e-9 * L);

  std::vector<double> db(n);
  for (std::size_t i = 0; i < n; ++i) db[i] = X.distance(ps.base, i);
  std::vector<std::size_t> near;  // points that can lie on the chain
  for (std::size_t i = 0; i < n; ++i)
    if (db[i] <= L + 2.0 * band && X.in_support(i)) near.push_back(i);

  std::vector<std::pair<double, std::size_t>> shell;
  for (auto i : near)
    if (std::abs(db[i] - L) <= band) shell.emplace_back(std::abs(db[i] - L), i);
  std::stable_sort(shell.begin(), shell.end(), [](const auto& a, const auto& b) { return a.first < b.first - 1e-12; });
  if (shell.size() > o.max_candidates) shell.resize(o.max_candidates);

  std::optional<LineCandidate> best;
  std::vector<double> dp(n), dq(n);
  for (const auto& [gap, p] : shell) {
    std::size_t q = p;
    double qbest = std::numeric_limits<double>::infinity();
    for (const auto& [g2, x] : shell) {
      if (x == p) continue;
      double c = std::abs(X.distance(p, x) - db[p] - db[x]);
      if (c < qbest - 1e-12) {
        qbest = c;
        q = x;
      }
    }
    // Candidates may come from a truncated shell; widen the partner search.
    for (auto x : near) {
      if (x == p || std::abs(db[x] - L) > band) continue;
      double c = std::abs(X.distance(p, x) - db[p] - db[x]);
      if (c < qbest - 1e-12) {
        qbest = c;
        q = x;
      }
    }
    if (q == p) continue;
    const double T = 0.5 * X.distance(p, q);
    if (2.0 * T < 2.0 * (L - band)) continue;
    for (auto x : near) {
      dp[x] = X.distance(p, x);
      dq[x] = X.distance(q, x);
    }
    std::size_t m = static_cast<std::size_t>(std::llround(2.0 * T / std::max(h, 1e-12)));
    m = std::clamp<std::size_t>(m, 2, std::max<std::size_t>(2, o.max_chain - 1));
    std::vector<std::size_t> chain{ps.base};
    for (std::size_t k = 0; k <= m; ++k) {
      double s = -T + 2.0 * T * static_cast<double>(k) / static_cast<double>(m);
      std::size_t z = near.front();
      double zb = std::numeric_limits<double>::infinity();
      for (auto x : near) {
        double c = std::abs(dp[x] - (T + s)) + std::abs(dq[x] - (T - s));
        if (c < zb - 1e-12) {
          zb = c;
          z = x;
        }
      }
      chain.push_back(z);
    }
    chain.push_back(p);
    chain.push_back(q);
    std::sort(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    for (auto x : chain) {
      dp[x] = X.distance(p, x);
      dq[x] = X.distance(q, x);
    }
    std::sort(chain.begin(), chain.end(), [&](std::size_t a, std::size_t b) {
      double sa = dp[a] - dq[a], sb = dp[b] - dq[b];
      return sa < sb || (sa == sb && a < b);
    });
    std::vector<double> params;
    for (auto x : chain) params.push_back(0.5 * (dp[x] - dq[x]));
    double e = chain_defect(X, chain, params);
    if (!best || e < best->eps_line - 1e-15) {
      best = LineCandidate{chain, params, T, e, ps.base};
      if (e <= 1e-12) break;
    }
  }
  if (!best || best->eps_line > eps) return std::nullopt;
  return best;
}

SplitResult split(const PointedSpace& ps, const LineCandidate& line, const SplitOptions& o) {
  const FiniteSpace& X = ps.space;
  if (line.chain.size() < 2) throw ValidationError("split: line chain too short");
  const std::size_t p = line.chain.front(), q = line.chain.back();
  SplitResult out;
  out.T = 0.5 * X.distance(p, q);
  out.window = o.window > 0.0 ? o.window : 0.5 * out.T;
  if (!(out.T > 0.0) || out.T < 2.0 * out.window) throw ValidationError("split: line too short for the window");
  const double h = effective_resolution(X);
  const double T = out.T, w = out.window;

  auto bcoord = [&](std::size_t x) {
    double a = X.distance(x, p), c = X.distance(x, q);
    return (a * a - c * c) / (4.0 * T);
  };
  for (std::size_t x = 0; x < X.size(); ++x) {
    double b = bcoord(x);
    if (std::abs(b) <= w * (1.0 + 1e-12)) {
      out.points.push_back(x);
      out.b.push_back(b);
    }
  }
  auto dprime = [&](std::size_t x, double bx, std::size_t y, double by) {
    double d = X.distance(x, y);
    return std::sqrt(std::max(0.0, d * d - (bx - by) * (bx - by)));
  };

  // Fibers: cluster the central slice |b| <= 1.5h by transverse distance.
  std::vector<std::size_t> slice;
  for (std::size_t k = 0; k < out.points.size(); ++k)
    if (std::abs(out.b[k]) <= 1.5 * h * (1.0 + 1e-9)) slice.push_back(k);
  std::stable_sort(slice.begin(), slice.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(out.b[a]) < std::abs(out.b[b]) - 1e-12;
  });
  const double tol = 0.5 * h;
  std::vector<std::vector<std::size_t>> fibers;  // slab positions
  for (auto k : slice) {
    std::size_t joined = SIZE_MAX;
    for (std::size_t f = 0; f < fibers.size(); ++f) {
      std::size_t r = fibers[f].front();
      if (dprime(out.points[k], out.b[k], out.points[r], out.b[r]) <= tol * (1.0 + 1e-9)) {
        joined = f;
        break;
      }
    }
    if (joined == SIZE_MAX) fibers.push_back({k});
    else fibers[joined].push_back(k);
  }
  const std::size_t nf = fibers.size();
  if (nf == 0) throw ValidationError("split: empty central slice");

  std::vector<double> D(nf * nf, 0.0);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t g = f + 1; g < nf; ++g) {
      double s = 0.0;
      for (auto a : fibers[f])
        for (auto c : fibers[g]) s += dprime(out.points[a], out.b[a], out.points[c], out.b[c]);
      D[f * nf + g] = D[g * nf + f] = s / static_cast<double>(fibers[f].size() * fibers[g].size());
    }

  out.projection.resize(out.points.size());
  std::vector<double> mass(nf, 0.0);
  std::size_t base_fiber = 0;
  for (std::size_t k = 0; k < out.points.size(); ++k) {
    std::size_t bestf = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < nf; ++f) {
      std::size_t r = fibers[f].front();
      double d = dprime(out.points[k], out.b[k], out.points[r], out.b[r]);
      if (d < bd - 1e-12) {
        bd = d;
        bestf = f;
      }
    }
    out.projection[k] = bestf;
    mass[bestf] += X.weight(out.points[k]) / (2.0 * w);
    if (out.points[k] == ps.base) base_fiber = bestf;
  }
  if (!(mass[base_fiber] > 0.0)) mass[base_fiber] = std::numeric_limits<double>::min();
  out.quotient = make_pointed(from_matrix(nf, D, mass).with_resolution(h), base_fiber);

  // Metric defect on sampled slab pairs.
  const std::size_t ns = out.points.size();
  auto defect = [&](std::size_t i, std::size_t j) {
    double d = X.distance(out.points[i], out.points[j]);
    double db = out.b[i] - out.b[j];
    double dq = D[out.projection[i] * nf + out.projection[j]];
    return std::sqrt(std::abs(d * d - db * db - dq * dq));
  };
  if (ns * (ns - 1) / 2 <= o.metric_pairs) {
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t j = i + 1; j < ns; ++j) out.delta_metric = std::max(out.delta_metric, defect(i, j));
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> U(0, ns - 1);
    for (std::size_t k = 0; k < o.metric_pairs; ++k) out.delta_metric = std::max(out.delta_metric, defect(U(rng), U(rng)));
  }

  // Measure defect: W1 between the (fiber group, b bin) histogram and the
  // product of its fiber marginal with uniform length, relative to total mass.
  const std::size_t nb = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::floor(2.0 * w / std::max(3.0 * h, 1e-12))), 1, o.max_bins);
  std::vector<std::size_t> centers{base_fiber}, group(nf, 0);
  {
    std::vector<double> md(nf);
    for (std::size_t f = 0; f < nf; ++f) md[f] = D[base_fiber * nf + f];
    while (centers.size() < std::min(o.max_fibers, nf)) {
      std::size_t next = static_cast<std::size_t>(std::max_element(md.begin(), md.end()) - md.begin());
      if (md[next] <= 0.0) break;
      centers.push_back(next);
      for (std::size_t f = 0; f < nf; ++f) md[f] = std::min(md[f], D[next * nf + f]);
    }
    for (std::size_t f = 0; f < nf; ++f) {
      double bd = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < centers.size(); ++c)
        if (D[centers[c] * nf + f] < bd - 1e-12) {
          bd = D[centers[c] * nf + f];
          group[f] = c;
        }
    }
  }
  const std::size_t ng = centers.size(), cells = ng * nb;
  std::vector<double> actual(cells, 0.0), fiber_mass(ng, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < ns; ++k) {
    double m = X.weight(out.points[k]);
    auto bin = std::min(nb - 1, static_cast<std::size_t>(std::floor((out.b[k] + w) / (2.0 * w) * static_cast<double>(nb))));
    std::size_t g = group[out.projection[k]];
    actual[g * nb + bin] += m;
    fiber_mass[g] += m;
    total += m;
  }
  if (total > 0.0) {
    std::vector<double> expected(cells);
    for (std::size_t g = 0; g < ng; ++g)
      for (std::size_t k = 0; k < nb; ++k) expected[g * nb + k] = fiber_mass[g] / static_cast<double>(nb);
    std::vector<double> cost(cells * cells);
    const double bw = 2.0 * w / static_cast<double>(nb);
    for (std::size_t i = 0; i < cells; ++i)
      for (std::size_t j = 0; j < cells; ++j) {
        double dg = D[centers[i / nb] * nf + centers[j / nb]];
        double dbin = bw * (static_cast<double>(i % nb) - static_cast<double>(j % nb));
        cost[i * cells + j] = std::hypot(dg, dbin);
      }
    out.delta_measure = solve_transport(actual, expected, cost).cost / total;
  }
  return out;
}

DimensionResult euclidean_dimension(const PointedSpace& space, const DimensionConfig& c) {
  if (!(c.N >= 1.0)) throw ValidationError("euclidean_dimension: N must be >= 1");
  const auto budget = static_cast<std::size_t>(std::floor(c.N));
  DimensionResult res;
  PointedSpace current = space;
  for (std::size_t stage = 0; res.n < budget; ++stage) {
    const double r = stage == 0 ? c.radius : 1.0;
    BlowupSequence seq = blowup(current, {r}, {c.window, std::numeric_limits<double>::infinity()});
    const PointedSpace& member = seq.members.front().space;
    DimensionStage st;
    st.points = member.space.size();
    if (member.space.size() <= 1) {
      st.note = "single point";
      res.stages.push_back(st);
      break;
    }
    auto line = detect_line(member, c.line_length, c.tol_line, c.line);
    if (!line) {
      st.note = "no line within tolerance";
      res.stages.push_back(st);
      break;
    }
    st.line_found = true;
    st.eps_line = line->eps_line;
    SplitResult sp;
    try {
      sp = split(member, *line, c.split);
    } catch (const ValidationError& e) {
      st.note = e.what();
      res.inconclusive = true;
      res.stages.push_back(st);
      break;
    }
    st.delta_metric = sp.delta_metric;
    st.delta_measure = sp.delta_measure;
    st.quotient_points = sp.quotient.space.size();
    res.stages.push_back(st);
    ++res.n;
    if (res.n > budget) throw std::logic_error("euclidean_dimension: factored more lines than floor(N)");
    current = sp.quotient;
    if (current.space.size() <= 1) break;
  }
  res.remainder_points = current.space.size();
  if (res.n > budget) throw std::logic_error("euclidean_dimension: factored more lines than floor(N)");
  return res;
}

}  // namespace mms
