#pragma once
// Reference implementations used only by tests. Each one is deliberately
// naive and shares no code with the library.
#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

// Distortion coefficient in 50-digit arithmetic; +inf encoded as infinity().
inline double sigma(double K, double N, double t, double theta) {
  big k(K), n(N), tt(t), th(theta);
  big kt2 = k * th * th;
  big pi = boost::math::constants::pi<big>();
  if (kt2 >= n * pi * pi) return std::numeric_limits<double>::infinity();
  if (kt2 == 0) return t;
  if (kt2 > 0) {
    big a = th * sqrt(k / n);
    return static_cast<double>(sin(tt * a) / sin(a));
  }
  big a = th * sqrt(-k / n);
  return static_cast<double>(sinh(tt * a) / sinh(a));
}

// Minimum-cost transport by enumerating every spanning-tree basis of the
// bipartite supply/demand graph and solving its flow by leaf peeling.
inline double brute_transport(const std::vector<double>& s, const std::vector<double>& d,
                              const std::vector<double>& cost) {
  const std::size_t m = s.size(), n = d.size(), cells = m * n, k = m + n - 1;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::vector<double> rs(s), cd(d), flow(cells, 0.0);
    std::vector<bool> used(k, false);
    bool ok = true;
    for (std::size_t step = 0; step < k && ok; ++step) {
      // find a row or column touched by exactly one unused chosen cell
      bool found = false;
      for (std::size_t node = 0; node < m + n && !found; ++node) {
        std::size_t cnt = 0, which = 0;
        for (std::size_t a = 0; a < k; ++a) {
          if (used[a]) continue;
          std::size_t r = pick[a] / n, c = pick[a] % n;
          if ((node < m && r == node) || (node >= m && c == node - m)) ++cnt, which = a;
        }
        if (cnt != 1) continue;
        std::size_t r = pick[which] / n, c = pick[which] % n;
        double f = node < m ? rs[r] : cd[c];
        flow[pick[which]] = f;
        rs[r] -= f;
        cd[c] -= f;
        used[which] = true;
        found = true;
      }
      ok = found;
    }
    if (ok) {
      double tol = 1e-12, total = 0.0;
      for (std::size_t i = 0; i < m; ++i) ok = ok && std::abs(rs[i]) < tol;
      for (std::size_t j = 0; j < n; ++j) ok = ok && std::abs(cd[j]) < tol;
      for (std::size_t c = 0; c < cells; ++c) {
        ok = ok && flow[c] >= -tol;
        total += flow[c] * cost[c];
      }
      if (ok) best = std::min(best, total);
    }
    // next k-combination of cells
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == cells - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

// min c.x subject to A x <= b, x >= 0, by enumerating all vertices
// (choices of n active constraints among the m + n).
inline double brute_lp_min(const std::vector<double>& c, const std::vector<std::vector<double>>& A,
                           const std::vector<double>& b) {
  const std::size_t n = c.size(), m = A.size();
  std::vector<std::vector<long double>> rows;
  std::vector<long double> rhs;
  for (std::size_t i = 0; i < m; ++i) {
    rows.emplace_back(A[i].begin(), A[i].end());
    rhs.push_back(b[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {  // -x_j <= 0
    std::vector<long double> r(n, 0.0L);
    r[j] = -1.0L;
    rows.push_back(r);
    rhs.push_back(0.0L);
  }
  const std::size_t total = rows.size();
  long double best = std::numeric_limits<long double>::infinity();
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::vector<std::vector<long double>> M(n, std::vector<long double>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) M[r][j] = rows[pick[r]][j];
      M[r][n] = rhs[pick[r]];
    }
    bool singular = false;
    for (std::size_t col = 0; col < n && !singular; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < n; ++r)
        if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
      if (std::abs(M[piv][col]) < 1e-14L) {
        singular = true;
        break;
      }
      std::swap(M[piv], M[col]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col) continue;
        long double f = M[r][col] / M[col][col];
        for (std::size_t j = col; j <= n; ++j) M[r][j] -= f * M[col][j];
      }
    }
    if (!singular) {
      std::vector<long double> x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = M[j][n] / M[j][j];
      bool feasible = true;
      for (std::size_t r = 0; r < total && feasible; ++r) {
        long double lhs = 0.0L;
        for (std::size_t j = 0; j < n; ++j) lhs += rows[r][j] * x[j];
        feasible = lhs <= rhs[r] + 1e-12L;
      }
      if (feasible) {
        long double v = 0.0L;
        for (std::size_t j = 0; j < n; ++j) v += c[j] * x[j];
        best = std::min(best, v);
      }
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return static_cast<double>(best);
}

// Transport with teleportation: move x -> y at cost dz[x][y], create or
// destroy a unit of mass at cost 1.
inline double teleport_ot(const std::vector<double>& mu, const std::vector<double>& nu,
                          const std::vector<std::vector<double>>& dz) {
  const std::size_t p = mu.size(), q = nu.size();
  // cost = sum g (dz - 2) + |mu| + |nu|
  std::vector<double> c(p * q);
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) c[i * q + j] = dz[i][j] - 2.0;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<double> r(p * q, 0.0);
    for (std::size_t j = 0; j < q; ++j) r[i * q + j] = 1.0;
    A.push_back(r);
    b.push_back(mu[i]);
  }
  for (std::size_t j = 0; j < q; ++j) {
    std::vector<double> r(p * q, 0.0);
    for (std::size_t i = 0; i < p; ++i) r[i * q + j] = 1.0;
    A.push_back(r);
    b.push_back(nu[j]);
  }
  double base = std::accumulate(mu.begin(), mu.end(), 0.0) + std::accumulate(nu.begin(), nu.end(), 0.0);
  return base + std::min(0.0, brute_lp_min(c, A, b));
}

// Riemann sum of (1 - |x|) over the unit ball on a lattice of spacing h,
// which tends to omega_n / (n + 1).
inline double cone_integral(std::size_t n, double h) {
  const long k = static_cast<long>(std::ceil(1.0 / h));
  double sum = 0.0;
  std::vector<long> idx(n, -k);
  for (;;) {
    double r2 = 0.0;
    for (long v : idx) r2 += (v * h) * (v * h);
    if (r2 < 1.0) sum += 1.0 - std::sqrt(r2);
    std::size_t a = 0;
    while (a < n && idx[a] == k) idx[a++] = -k;
    if (a == n) break;
    ++idx[a];
  }
  return sum * std::pow(h, static_cast<double>(n));
}

// W2^2 on the line as the integral of |F^-1(s) - G^-1(s)|^2 over s in [0,1],
// merging the two quantile step functions.
inline double quantile_w2(const std::vector<double>& x, const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<std::size_t> ord(x.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
  std::vector<double> xs, ca, cb;
  double sa = 0.0, sb = 0.0;
  for (auto i : ord) {
    xs.push_back(x[i]);
    ca.push_back(sa += a[i]);
    cb.push_back(sb += b[i]);
  }
  double total = 0.0, s = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < xs.size()) {
    double next = std::min(ca[i], cb[j]);
    total += (next - s) * (xs[i] - xs[j]) * (xs[i] - xs[j]);
    s = next;
    if (ca[i] <= next) ++i;
    if (cb[j] <= next) ++j;
  }
  return total;
}

// Small pointed space as plain data.
struct Pointed {
  std::vector<std::vector<double>> d;
  std::vector<double> w;
  std::size_t base = 0;
};

// sum_k 2^{-k} min(1, min over covering relations of distortion + teleport
// OT), enumerating every relation that contains the base pair.
inline double brute_pmgh(const Pointed& a, const Pointed& b, const std::vector<double>& radii) {
  double value = 0.0;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double R = radii[k];
    std::vector<std::size_t> ba, bb;
    for (std::size_t i = 0; i < a.w.size(); ++i)
      if (a.d[a.base][i] < R * (1 - 1e-12)) ba.push_back(i);
    for (std::size_t j = 0; j < b.w.size(); ++j)
      if (b.d[b.base][j] < R * (1 - 1e-12)) bb.push_back(j);
    const std::size_t p = ba.size(), q = bb.size(), cells = p * q;
    double best = std::numeric_limits<double>::infinity();
    for (unsigned long mask = 0; mask < (1ul << cells); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      std::vector<bool> ca(p, false), cb(q, false);
      bool has_base = false;
      for (std::size_t c = 0; c < cells; ++c) {
        if (!(mask >> c & 1ul)) continue;
        std::size_t x = c / q, y = c % q;
        rel.push_back({ba[x], bb[y]});
        ca[x] = cb[y] = true;
        has_base = has_base || (ba[x] == a.base && bb[y] == b.base);
      }
      if (!has_base || std::find(ca.begin(), ca.end(), false) != ca.end() ||
          std::find(cb.begin(), cb.end(), false) != cb.end())
        continue;
      double dist = 0.0;
      for (auto [x, y] : rel)
        for (auto [x2, y2] : rel) dist = std::max(dist, 0.5 * std::abs(a.d[x][x2] - b.d[y][y2]));
      std::vector<std::vector<double>> dz(p, std::vector<double>(q, std::numeric_limits<double>::infinity()));
      for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < q; ++y)
          for (auto [x2, y2] : rel) dz[x][y] = std::min(dz[x][y], a.d[ba[x]][x2] + b.d[y2][bb[y]]);
      std::vector<double> mu, nu;
      for (auto i : ba) mu.push_back(a.w[i]);
      for (auto j : bb) nu.push_back(b.w[j]);
      best = std::min(best, dist + teleport_ot(mu, nu, dz));
    }
    value += std::ldexp(1.0, -static_cast<int>(k + 1)) * std::min(1.0, best);
  }
  return value;
}

}  // namespace oracle
