#include <doctest.h>

#include <algorithm>
#include <random>

#include "../oracles.hpp"
#include "mmslab/errors.hpp"
#include "mmslab/pmgh.hpp"
#include "mmslab/space_ops.hpp"

using namespace mms;

namespace {
PointedSpace two_point(double gap, double w0 = 1, double w1 = 1) {
  return make_pointed(from_matrix(2, {0, gap, gap, 0}, {w0, w1}), 0);
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

PointedSpace random_space(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0, 1.5), w(0.2, 1.0);
  std::vector<double> xy(2 * n), wt(n);
  for (auto& v : xy) v = u(rng);
  for (auto& v : wt) v = w(rng);
  return make_pointed(from_euclidean(2, xy, wt), 0);
}

// Same space with points permuted; returns the relabeled copy and where the base went.
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
  std::size_t base = std::find(perm.begin(), perm.end(), ps.base) - perm.begin();
  return make_pointed(from_matrix(n, d, w), base);
}
}  // namespace

TEST_CASE("distortion examples") {
  auto A = two_point(1.0), B = two_point(1.2);
  Correspondence full{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  Correspondence id{{{0, 0}, {1, 1}}};
  CHECK(distortion(A, A, id, 2.0) == 0.0);
  CHECK(distortion(A, B, id, 2.0) == doctest::Approx(0.1));
  CHECK(distortion(A, B, full, 2.0) == doctest::Approx(0.6));
  CHECK_THROWS_AS(distortion(A, B, Correspondence{{{0, 0}}}, 2.0), ValidationError);
  CHECK_THROWS_AS(distortion(A, B, Correspondence{{{1, 1}, {0, 1}, {1, 0}}}, 2.0), ValidationError);
  // outside the ball coverage is not required
  CHECK(distortion(A, B, Correspondence{{{0, 0}}}, 1.0) == 0.0);
}

TEST_CASE("measure gap examples") {
  Correspondence id{{{0, 0}, {1, 1}}};
  auto A = two_point(1.0, 0.5, 0.5), B = two_point(1.0, 0.6, 0.4);
  CHECK(measure_gap(A, A, id, 2.0) == doctest::Approx(0.0));
  CHECK(measure_gap(A, B, id, 2.0) == doctest::Approx(0.1));
  // unnormalized copy: the gap is the mass defect inside the ball
  auto C = two_point(1.0, 0.5 * 0.7, 0.5 * 0.7);
  CHECK(measure_gap(A, C, id, 2.0) == doctest::Approx(0.3));
  CHECK(measure_gap(A, C, id, 1.0) == doctest::Approx(0.15));
}

TEST_CASE("measure gap matches the brute-force teleport LP") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    auto A = random_space(rng, 3), B = random_space(rng, 3);
    Correspondence c{{{0, 0}, {1, 2}, {2, 1}, {1, 1}}};
    auto a = plain(A), b = plain(B);
    std::vector<std::vector<double>> dz(3, std::vector<double>(3, 1e300));
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y)
        for (auto [x2, y2] : c.pairs) dz[x][y] = std::min(dz[x][y], a.d[x][x2] + b.d[y2][y]);
    CHECK(measure_gap(A, B, c, 10.0) == doctest::Approx(oracle::teleport_ot(a.w, b.w, dz)).epsilon(1e-9));
  }
}

TEST_CASE("two-point gap example equals brute force in both orders") {
  auto A = normalize_at(two_point(1.0), 1.0).space, B = normalize_at(two_point(1.2), 1.0).space;
  PmghOptions o;
  o.mode = PmghMode::exhaustive;
  auto ab = pmgh_distance(A, B, o), ba = pmgh_distance(B, A, o);
  double expect = oracle::brute_pmgh(plain(A), plain(B), o.radii);
  CHECK(ab.value == doctest::Approx(expect).epsilon(1e-12));
  CHECK(ab.value == ba.value);
  REQUIRE(ab.lower_bound.has_value());
  CHECK(*ab.lower_bound == doctest::Approx(ab.value));
}

TEST_CASE("exhaustive search equals brute force on small random pairs") {
  std::mt19937_64 rng(21);
  PmghOptions o;
  o.mode = PmghMode::exhaustive;
  o.radii = {0.5, 1.0};
  for (int rep = 0; rep < 12; ++rep) {
    auto A = normalize_at(random_space(rng, 3), 1.0).space;
    auto B = normalize_at(random_space(rng, 2 + rng() % 2), 1.0).space;
    auto e = pmgh_distance(A, B, o);
    CHECK(e.value == doctest::Approx(oracle::brute_pmgh(plain(A), plain(B), o.radii)).epsilon(1e-9));
    CHECK(e.value == pmgh_distance(B, A, o).value);
  }
}

TEST_CASE("isomorphic copies are at distance zero") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 10; ++rep) {
    auto A = normalize_at(random_space(rng, 7), 1.0).space;
    auto B = relabel(A, rng);
    PmghOptions o;
    o.mode = PmghMode::exhaustive;
    CHECK(pmgh_distance(A, B, o).value == doctest::Approx(0.0).epsilon(1e-12));
    o.mode = PmghMode::anneal;
    CHECK(pmgh_distance(A, B, o).value < 1e-9);
  }
}

TEST_CASE("identical inputs give zero and the estimate is in [0, 1]") {
  std::mt19937_64 rng(2);
  auto A = normalize_at(random_space(rng, 30), 1.0).space;
  auto B = normalize_at(random_space(rng, 30), 1.0).space;
  CHECK(pmgh_distance(A, A).value == 0.0);
  auto e = pmgh_distance(A, B);
  CHECK(e.value >= 0.0);
  CHECK(e.value <= 1.0);
  CHECK(e.value == pmgh_distance(B, A).value);
  CHECK(e.terms.size() == 4);
  CHECK(e.terms[0].weight == 0.5);
}

TEST_CASE("relaxed triangle inequality on random triples") {
  std::mt19937_64 rng(13);
  PmghOptions o;
  o.radii = {0.5, 1.0};
  for (int rep = 0; rep < 8; ++rep) {
    auto A = normalize_at(random_space(rng, 4), 1.0).space;
    auto B = normalize_at(random_space(rng, 4), 1.0).space;
    auto C = normalize_at(random_space(rng, 4), 1.0).space;
    double ac = pmgh_distance(A, C, o).value, ab = pmgh_distance(A, B, o).value, bc = pmgh_distance(B, C, o).value;
    CHECK(ac <= 2 * (ab + bc) + 1e-12);
  }
}

TEST_CASE("exhaustive mode refuses large balls") {
  std::mt19937_64 rng(4);
  auto A = normalize_at(random_space(rng, 12), 1.0).space;
  PmghOptions o;
  o.mode = PmghMode::exhaustive;
  o.radii = {8.0};
  auto B = relabel(A, rng);
  CHECK_THROWS_AS(pmgh_distance(A, B, o), BudgetExceeded);
}

TEST_CASE("trend classification") {
  CHECK(classify_trend({0.5, 0.3, 0.1}) == Trend::decreasing);
  CHECK(classify_trend({0.1, 0.3}) == Trend::increasing);
  CHECK(classify_trend({0.2, 0.2, 0.2}) == Trend::constant);
  CHECK(classify_trend({0.1, 0.3, 0.1}) == Trend::none);
  auto A = two_point(1.0), B = two_point(1.5);
  auto t = convergence_diagnostic({A, A, A}, A);
  CHECK(t.trend == Trend::constant);
  CHECK(t.values == std::vector<double>{0, 0, 0});
  CHECK(convergence_diagnostic({A, B, A, B}, A).trend == Trend::none);
}
