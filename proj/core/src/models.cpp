#include "mmslab/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include "mmslab/errors.hpp"
#include "mmslab/space_io.hpp"
#include "mmslab/space_ops.hpp"

namespace mms {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> axis_values(double lo, double hi, double h) {
  if (!(h > 0.0) || !(hi >= lo)) throw ValidationError("model: need h > 0 and hi >= lo");
  std::vector<double> v;
  const double k0 = lo / h;
  if (std::abs(k0 - std::round(k0)) < 1e-9) {
    long long a = std::llround(k0), b = static_cast<long long>(std::floor(hi / h + 1e-9));
    for (long long k = a; k <= b; ++k) v.push_back(static_cast<double>(k) * h);
  } else {
    auto m = static_cast<std::size_t>(std::floor((hi - lo) / h + 1e-9));
    for (std::size_t k = 0; k <= m; ++k) v.push_back(lo + static_cast<double>(k) * h);
  }
  return v;
}

// Cartesian product of identical axes, last coordinate fastest.
std::vector<double> lattice(const std::vector<double>& axis, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= axis.size();
  std::vector<double> coords(total * n);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t p = 0; p < total; ++p) {
    for (std::size_t k = 0; k < n; ++k) coords[p * n + k] = axis[idx[k]];
    for (std::size_t k = n; k-- > 0;) {
      if (++idx[k] < axis.size()) break;
      idx[k] = 0;
    }
  }
  return coords;
}

std::size_t nearest_supported(const FiniteSpace& s, std::span<const double> target) {
  std::size_t best = SIZE_MAX;
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.in_support(i)) continue;
    auto c = s.coords(i);
    double d = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) d += (c[k] - target[k]) * (c[k] - target[k]);
    if (d < bd - 1e-15) {
      bd = d;
      best = i;
    }
  }
  if (best == SIZE_MAX) throw ValidationError("model: empty support");
  return best;
}

double lp_norm(std::span<const double> a, std::span<const double> b, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
  }
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::pow(std::abs(a[k] - b[k]), p);
  return std::pow(s, 1.0 / p);
}

class SlerpGeodesics final : public GeodesicModel {
 public:
  void point_between(std::span<const double> a, std::span<const double> b, double t,
                     std::span<double> out) const override {
    double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    double cx = a[1] * b[2] - a[2] * b[1], cy = a[2] * b[0] - a[0] * b[2], cz = a[0] * b[1] - a[1] * b[0];
    double theta = std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
    if (theta < 1e-12) {
      for (int k = 0; k < 3; ++k) out[k] = a[k];
      return;
    }
    double s = std::sin(theta);
    double wa = std::sin((1.0 - t) * theta) / s, wb = std::sin(t * theta) / s;
    for (int k = 0; k < 3; ++k) out[k] = wa * a[k] + wb * b[k];
  }
  std::string name() const override { return "slerp"; }
};

double great_circle(std::span<const double> a, std::span<const double> b) {
  double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  double cx = a[1] * b[2] - a[2] * b[1], cy = a[2] * b[0] - a[0] * b[2], cz = a[0] * b[1] - a[1] * b[0];
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
}

// Cone of total angle alpha, points given by (r, theta) in the unrolled sector.
double cone_distance(double r1, double t1, double r2, double t2, double alpha) {
  double dt = std::abs(t1 - t2);
  dt = std::min(dt, alpha - dt);
  if (dt >= kPi) return r1 + r2;
  return std::sqrt(std::max(0.0, r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(dt)));
}

class ConeGeodesics final : public GeodesicModel {
 public:
  explicit ConeGeodesics(double alpha) : alpha_(alpha), s_(alpha / (2.0 * kPi)) {}

  void point_between(std::span<const double> a, std::span<const double> b, double t,
                     std::span<double> out) const override {
    auto [r1, t1] = polar(a);
    auto [r2, t2] = polar(b);
    double dt = t2 - t1;
    if (dt > alpha_ / 2) dt -= alpha_;
    if (dt < -alpha_ / 2) dt += alpha_;
    if (std::abs(dt) >= kPi || r1 == 0.0 || r2 == 0.0) {
      // through the apex
      double along = t * (r1 + r2);
      if (along <= r1)
        embed(r1 - along, t1, out);
      else
        embed(along - r1, t2, out);
      return;
    }
    double x = (1.0 - t) * r1 + t * r2 * std::cos(dt), y = t * r2 * std::sin(dt);
    embed(std::hypot(x, y), t1 + std::atan2(y, x), out);
  }
  std::string name() const override { return "cone"; }

  void embed(double r, double theta, std::span<double> out) const {
    double psi = theta / s_;
    out[0] = r * s_ * std::cos(psi);
    out[1] = r * s_ * std::sin(psi);
    out[2] = r * std::sqrt(std::max(0.0, 1.0 - s_ * s_));
  }

 private:
  std::pair<double, double> polar(std::span<const double> c) const {
    double r = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    double psi = std::atan2(c[1], c[0]);
    if (psi < 0) psi += 2.0 * kPi;
    return {r, std::fmod(psi * s_, alpha_)};
  }

  double alpha_, s_;
};

class CylinderGeodesics final : public GeodesicModel {
 public:
  explicit CylinderGeodesics(double circumference) : c_(circumference), rad_(circumference / (2.0 * kPi)) {}

  void point_between(std::span<const double> a, std::span<const double> b, double t,
                     std::span<double> out) const override {
    double ua = angle(a), ub = angle(b);
    double du = ub - ua;
    if (du > c_ / 2) du -= c_;
    if (du < -c_ / 2) du += c_;
    double u = ua + t * du;
    out[0] = (1.0 - t) * a[0] + t * b[0];
    out[1] = rad_ * std::cos(2.0 * kPi * u / c_);
    out[2] = rad_ * std::sin(2.0 * kPi * u / c_);
  }
  std::string name() const override { return "cylinder"; }

 private:
  double angle(std::span<const double> p) const {
    double psi = std::atan2(p[2], p[1]);
    if (psi < 0) psi += 2.0 * kPi;
    return psi * c_ / (2.0 * kPi);
  }
  double c_, rad_;
};

PointedSpace euclidean_grid(const ModelSpec& s) {
  if (s.dim == 0) throw ValidationError("euclidean-grid: dimension must be >= 1");
  auto axis = axis_values(s.lo, s.hi, s.h);
  auto coords = lattice(axis, s.dim);
  std::size_t n = coords.size() / s.dim;
  std::vector<double> w(n, std::pow(s.h, static_cast<double>(s.dim)));
  FiniteSpace X = from_euclidean(s.dim, std::move(coords), std::move(w)).with_resolution(s.h);
  std::vector<double> center(s.dim, 0.5 * (s.lo + s.hi));
  return make_pointed(X, nearest_supported(X, center));
}

PointedSpace lp_plane(const ModelSpec& s) {
  if (!(s.p >= 1.0)) throw ValidationError("lp-plane: p must be >= 1");
  auto axis = axis_values(s.lo, s.hi, s.h);
  auto coords = lattice(axis, 2);
  std::size_t n = coords.size() / 2;
  const double p = s.p;
  auto kernel = std::make_shared<CoordinateMetric>(
      2, coords, [p](std::span<const double> a, std::span<const double> b) { return lp_norm(a, b, p); }, "lp");
  FiniteSpace X = FiniteSpace(kernel, std::vector<double>(n, s.h * s.h))
                      .with_coords(2, std::move(coords))
                      .with_geodesics(std::make_shared<LinearGeodesics>())
                      .with_resolution(s.h);
  std::vector<double> center(2, 0.5 * (s.lo + s.hi));
  return make_pointed(X, nearest_supported(X, center));
}

PointedSpace sphere(const ModelSpec& s) {
  if (!(s.h > 0.0)) throw ValidationError("sphere: h must be positive");
  const double cap = (s.hi > 0.0 && s.hi < kPi) ? s.hi : kPi;
  const double limit = std::min(cap, kPi - 0.25 * s.h);
  const long long K = static_cast<long long>(std::ceil(cap / s.h));
  std::vector<double> xyz, w;
  for (long long i = -K; i <= K; ++i)
    for (long long j = -K; j <= K; ++j) {
      double u = static_cast<double>(i) * s.h, v = static_cast<double>(j) * s.h;
      double rho = std::hypot(u, v);
      if (rho > limit * (1.0 + 1e-12)) continue;
      double phi = std::atan2(v, u);
      xyz.insert(xyz.end(), {std::sin(rho) * std::cos(phi), std::sin(rho) * std::sin(phi), std::cos(rho)});
      w.push_back(s.h * s.h * (rho > 0.0 ? std::sin(rho) / rho : 1.0));
    }
  auto kernel = std::make_shared<CoordinateMetric>(3, xyz, great_circle, "sphere");
  FiniteSpace X = FiniteSpace(kernel, std::move(w))
                      .with_coords(3, std::move(xyz))
                      .with_geodesics(std::make_shared<SlerpGeodesics>())
                      .with_resolution(s.h);
  std::vector<double> pole{0.0, 0.0, 1.0};
  return make_pointed(X, nearest_supported(X, pole));
}

PointedSpace cone(const ModelSpec& s) {
  const double alpha = s.cone_angle;
  if (!(alpha > 0.0 && alpha <= 2.0 * kPi + 1e-12)) throw ValidationError("cone: angle must lie in (0, 2 pi]");
  if (!(s.h > 0.0) || !(s.hi > 0.0)) throw ValidationError("cone: need h > 0 and radius hi > 0");
  auto geo = std::make_shared<ConeGeodesics>(alpha);
  const long long K = static_cast<long long>(std::ceil(s.hi / s.h));
  std::vector<double> params, xyz;
  std::size_t apex = 0;
  for (long long i = -K; i <= K; ++i)
    for (long long j = -K; j <= K; ++j) {
      double x = static_cast<double>(i) * s.h, y = static_cast<double>(j) * s.h;
      double r = std::hypot(x, y);
      if (r > s.hi * (1.0 + 1e-12)) continue;
      double theta = std::atan2(y, x);
      if (theta < 0) theta += 2.0 * kPi;
      if (r > 0.0 && theta >= alpha - 1e-12) continue;
      if (r == 0.0) {
        theta = 0.0;
        apex = params.size() / 2;
      }
      params.insert(params.end(), {r, theta});
      double e[3];
      geo->embed(r, theta, e);
      xyz.insert(xyz.end(), e, e + 3);
    }
  std::size_t n = params.size() / 2;
  auto kernel = std::make_shared<CoordinateMetric>(
      2, std::move(params),
      [alpha](std::span<const double> a, std::span<const double> b) {
        return cone_distance(a[0], a[1], b[0], b[1], alpha);
      },
      "cone");
  FiniteSpace X = FiniteSpace(kernel, std::vector<double>(n, s.h * s.h))
                      .with_coords(3, std::move(xyz))
                      .with_geodesics(geo)
                      .with_resolution(s.h);
  return make_pointed(X, apex);
}

PointedSpace cylinder(const ModelSpec& s) {
  const double C = s.circumference;
  if (!(C > 0.0) || !(s.h > 0.0) || s.axis_length < 0.0)
    throw ValidationError("cylinder: need circumference > 0, h > 0, axis length >= 0");
  auto axial = s.axis_length > 0.0 ? axis_values(-0.5 * s.axis_length, 0.5 * s.axis_length, s.h)
                                   : std::vector<double>{0.0};
  const std::size_t m = std::max<std::size_t>(3, static_cast<std::size_t>(std::llround(C / s.h)));
  const double du = C / static_cast<double>(m), rad = C / (2.0 * kPi);
  std::vector<double> params, xyz;
  for (double a : axial)
    for (std::size_t j = 0; j < m; ++j) {
      double u = static_cast<double>(j) * du;
      params.insert(params.end(), {a, u});
      xyz.insert(xyz.end(), {a, rad * std::cos(2.0 * kPi * u / C), rad * std::sin(2.0 * kPi * u / C)});
    }
  std::size_t n = params.size() / 2;
  auto kernel = std::make_shared<CoordinateMetric>(
      2, std::move(params),
      [C](std::span<const double> a, std::span<const double> b) {
        double d = std::fmod(std::abs(a[1] - b[1]), C);
        d = std::min(d, C - d);
        return std::hypot(a[0] - b[0], d);
      },
      "cylinder");
  const double wa = s.axis_length > 0.0 ? s.h : 1.0;
  FiniteSpace X = FiniteSpace(kernel, std::vector<double>(n, wa * du))
                      .with_coords(3, std::move(xyz))
                      .with_geodesics(std::make_shared<CylinderGeodesics>(C))
                      .with_resolution(std::max(s.h, du));
  std::vector<double> target{0.0, rad, 0.0};
  return make_pointed(X, nearest_supported(X, target));
}

PointedSpace weighted_segment(const ModelSpec& s) {
  if (!(s.weight_exponent >= 0.0)) throw ValidationError("weighted-segment: exponent must be >= 0");
  auto x = axis_values(s.lo, s.hi, s.h);
  std::vector<double> w;
  for (double v : x) w.push_back(s.h * std::pow(std::abs(v), s.weight_exponent));
  FiniteSpace X = from_euclidean(1, x, std::move(w)).with_resolution(s.h);
  std::vector<double> center{0.5 * (s.lo + s.hi)};
  return make_pointed(X, nearest_supported(X, center));
}

PointedSpace graph(const ModelSpec& s) {
  if (s.nodes < 2 || !(s.connect_radius > 0.0)) throw ValidationError("graph: need >= 2 nodes and radius > 0");
  const std::size_t n = s.nodes;
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<double> xy(2 * n);
  for (auto& v : xy) v = U(rng);
  auto dist = [&](std::size_t i, std::size_t j) { return std::hypot(xy[2 * i] - xy[2 * j], xy[2 * i + 1] - xy[2 * j + 1]); };
  std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(i, j) < s.connect_radius) edges.emplace_back(i, j, dist(i, j));
  // Euclidean minimum spanning tree edges keep the graph connected.
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, SIZE_MAX);
  std::vector<char> in(n, 0);
  key[0] = 0.0;
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t u = SIZE_MAX;
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v] && (u == SIZE_MAX || key[v] < key[u])) u = v;
    in[u] = 1;
    if (parent[u] != SIZE_MAX && dist(u, parent[u]) >= s.connect_radius) edges.emplace_back(parent[u], u, dist(u, parent[u]));
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v] && dist(u, v) < key[v]) {
        key[v] = dist(u, v);
        parent[v] = u;
      }
  }
  auto metric = shortest_path_closure(n, edges);
  FiniteSpace X = from_matrix(n, std::move(metric), std::vector<double>(n, 1.0 / static_cast<double>(n)))
                      .with_coords(2, xy)
                      .with_resolution(s.connect_radius);
  std::vector<double> center{0.5, 0.5};
  return make_pointed(X, nearest_supported(X, center));
}

double unit_ball_volume(std::size_t n) {
  double h = 0.5 * static_cast<double>(n);
  return std::pow(kPi, h) / std::tgamma(h + 1.0);
}

PointedSpace finish_model(const PointedSpace& raw, double window) {
  return ball_restrict(normalize_at(raw, 1.0).space, window);
}

}  // namespace

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::euclidean_grid: return "euclidean-grid";
    case ModelKind::lp_plane: return "lp-plane";
    case ModelKind::sphere: return "sphere";
    case ModelKind::cone: return "cone";
    case ModelKind::cylinder: return "cylinder";
    case ModelKind::weighted_segment: return "weighted-segment";
    case ModelKind::graph: return "graph";
  }
  return "?";
}

std::vector<ModelKind> all_model_kinds() {
  return {ModelKind::euclidean_grid, ModelKind::lp_plane, ModelKind::sphere,          ModelKind::cone,
          ModelKind::cylinder,       ModelKind::weighted_segment, ModelKind::graph};
}

ModelKind model_kind_from_string(const std::string& name) {
  for (auto k : all_model_kinds())
    if (to_string(k) == name) return k;
  throw ValidationError("unknown model kind: " + name);
}

ModelSpec parse_model_spec(const std::string& text) {
  ModelSpec s;
  auto colon = text.find(':');
  s.kind = model_kind_from_string(text.substr(0, colon));
  if (colon == std::string::npos) return s;
  std::stringstream ss(text.substr(colon + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto eq = tok.find('=');
    try {
      if (eq == std::string::npos) {
        if (tok.back() != 'd') throw ValidationError("bad model token: " + tok);
        s.dim = std::stoul(tok.substr(0, tok.size() - 1));
        continue;
      }
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      double v = (val == "inf") ? std::numeric_limits<double>::infinity() : std::stod(val);
      if (key == "h") s.h = v;
      else if (key == "lo") s.lo = v;
      else if (key == "hi") s.hi = v;
      else if (key == "p") s.p = v;
      else if (key == "angle") s.cone_angle = v;
      else if (key == "circumference") s.circumference = v;
      else if (key == "axis") s.axis_length = v;
      else if (key == "a") s.weight_exponent = v;
      else if (key == "nodes") s.nodes = static_cast<std::size_t>(v);
      else if (key == "radius") s.connect_radius = v;
      else if (key == "seed") s.seed = static_cast<std::uint64_t>(v);
      else throw ValidationError("unknown model parameter: " + key);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ValidationError*>(&e)) throw;
      throw ValidationError("bad model token: " + tok);
    }
  }
  return s;
}

PointedSpace make_model(const ModelSpec& s) {
  switch (s.kind) {
    case ModelKind::euclidean_grid: return euclidean_grid(s);
    case ModelKind::lp_plane: return lp_plane(s);
    case ModelKind::sphere: return sphere(s);
    case ModelKind::cone: return cone(s);
    case ModelKind::cylinder: return cylinder(s);
    case ModelKind::weighted_segment: return weighted_segment(s);
    case ModelKind::graph: return graph(s);
  }
  throw ValidationError("unknown model kind");
}

GroundTruth ground_truth(const ModelSpec& s) {
  GroundTruth g;
  g.kind = to_string(s.kind);
  switch (s.kind) {
    case ModelKind::euclidean_grid: {
      auto n = std::to_string(s.dim);
      g.tangent = "R^" + n;
      g.doubling_exponent = static_cast<double>(s.dim);
      g.curvature = "CD(0," + n + ")";
      g.notes = "tangent fails only at boundary points";
      break;
    }
    case ModelKind::lp_plane:
      g.tangent = s.p == 2.0 ? "R^2" : "the lp plane itself (self-similar)";
      g.doubling_exponent = 2.0;
      g.curvature = s.p == 2.0 ? "CD(0,2)" : "unknown; not infinitesimally Hilbertian";
      g.notes = "distinguishable from R^2 by metric distortion";
      break;
    case ModelKind::sphere:
      g.tangent = "R^2";
      g.doubling_exponent = 2.0;
      g.curvature = "CD(1,2)";
      g.notes = "smooth at every point; sampled on an azimuthal-equidistant grid";
      break;
    case ModelKind::cone:
      g.tangent = "R^2 off the apex; the cone itself at the apex";
      g.doubling_exponent = 2.0;
      g.curvature = "CD(0,2)";
      g.notes = "the apex is the exceptional (measure-zero) point";
      break;
    case ModelKind::cylinder:
      g.tangent = s.axis_length > 0.0 ? "R^2" : "R^1";
      g.doubling_exponent = s.axis_length > 0.0 ? 2.0 : 1.0;
      g.curvature = s.axis_length > 0.0 ? "CD(0,2)" : "CD(0,1)";
      g.notes = "contains the axis as a line; splits off R with a circle factor";
      break;
    case ModelKind::weighted_segment:
      g.tangent = "R^1";
      g.doubling_exponent = 1.0;
      g.curvature = "CD(0," + std::to_string(1.0 + s.weight_exponent) + ") on each half-line";
      g.notes = "density vanishes at 0 when a > 0";
      break;
    case ModelKind::graph:
      g.tangent = "none (discrete)";
      g.doubling_exponent = 0.0;
      g.curvature = "unknown";
      g.notes = "shortest-path metric; blow-ups degenerate below the edge scale";
      break;
  }
  return g;
}

double euclidean_normalization_constant(std::size_t n) {
  if (n == 0) throw ValidationError("dimension must be >= 1");
  return static_cast<double>(n + 1) / unit_ball_volume(n);
}

TangentModel euclidean_model(std::size_t n, std::size_t max_points) {
  if (n == 0) throw ValidationError("euclidean model: dimension must be >= 1");
  TangentModel m;
  m.name = "R^" + std::to_string(n);
  m.make = [n, max_points](double h, double W) {
    const double vol = unit_ball_volume(n);
    const double dn = static_cast<double>(n);
    if (vol * std::pow(W / h, dn) > static_cast<double>(max_points))
      h = W * std::pow(vol / static_cast<double>(max_points), 1.0 / dn);
    const long long K = static_cast<long long>(std::ceil(W / h));
    std::vector<double> axis;
    for (long long k = -K; k <= K; ++k) axis.push_back(static_cast<double>(k) * h);
    auto full = lattice(axis, n);
    std::vector<double> coords;
    for (std::size_t p = 0; p < full.size() / n; ++p) {
      double r2 = 0.0;
      for (std::size_t k = 0; k < n; ++k) r2 += full[p * n + k] * full[p * n + k];
      if (in_ball(std::sqrt(r2), W)) coords.insert(coords.end(), full.begin() + p * n, full.begin() + (p + 1) * n);
    }
    std::size_t count = coords.size() / n;
    double w = euclidean_normalization_constant(n) * std::pow(h, dn);
    FiniteSpace X = from_euclidean(n, std::move(coords), std::vector<double>(count, w)).with_resolution(h);
    std::vector<double> origin(n, 0.0);
    return finish_model(make_pointed(X, nearest_supported(X, origin)), W);
  };
  return m;
}

TangentModel lp_model(double p, std::size_t max_points) {
  TangentModel m;
  m.name = std::isinf(p) ? "l_inf^2" : "l_" + std::to_string(p) + "^2";
  m.make = [p, max_points](double h, double W) {
    if (4.0 * (W / h) * (W / h) > static_cast<double>(max_points))
      h = 2.0 * W / std::sqrt(static_cast<double>(max_points));
    ModelSpec s;
    s.kind = ModelKind::lp_plane;
    s.p = p;
    s.h = h;
    double K = std::ceil(W / h);
    s.lo = -K * h;
    s.hi = K * h;
    return finish_model(lp_plane(s), W);
  };
  return m;
}

TangentModel circle_model(double circumference) {
  TangentModel m;
  m.name = "circle(" + std::to_string(circumference) + ")";
  m.make = [circumference](double h, double W) {
    ModelSpec s;
    s.kind = ModelKind::cylinder;
    s.circumference = circumference;
    s.axis_length = 0.0;
    s.h = h;
    return finish_model(cylinder(s), W);
  };
  return m;
}

TangentModel singleton_model() {
  TangentModel m;
  m.name = "point";
  m.make = [](double, double) {
    return make_pointed(from_matrix(1, {0.0}, {1.0}).with_resolution(0.0), 0);
  };
  return m;
}

}  // namespace mms
