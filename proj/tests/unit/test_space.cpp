#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "mmslab/errors.hpp"
#include "mmslab/space.hpp"
#include "mmslab/space_io.hpp"
#include "mmslab/space_ops.hpp"

using namespace mms;

namespace {
FiniteSpace path3() { return from_matrix(3, {0, 1, 2, 1, 0, 1, 2, 1, 0}, {1, 2, 1}); }
}  // namespace

TEST_CASE("validate flags each invariant") {
  CHECK(validate(path3()).ok());
  auto bad = from_matrix(3, {0, 1, 5, 1, 0, 1, 5, 1, 0}, {1, 1, 1});
  auto rep = validate(bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().kind == Violation::Kind::triangle);
  CHECK(rep.violations.front().amount == doctest::Approx(3.0));
  CHECK_FALSE(validate(from_matrix(2, {0, 1, 2, 0}, {1, 1})).ok());
  CHECK_FALSE(validate(from_matrix(2, {0, 1, 1, 0}, {1, -1})).ok());
  CHECK_FALSE(validate(from_matrix(2, {0, 1, 1, 0}, {0, 0})).ok());
}

TEST_CASE("views compose without copying the kernel") {
  auto X = path3();
  auto Y = X.scaled(2.0).subset(std::vector<std::size_t>{2, 0});
  CHECK(Y.kernel_ptr() == X.kernel_ptr());
  CHECK(Y.size() == 2);
  CHECK(Y.distance(0, 1) == 4.0);
  CHECK(Y.weight(0) == 1.0);
  CHECK(X.scaled(3.0).scaled(0.5).distance(0, 1) == doctest::Approx(1.5));
}

TEST_CASE("balls are open by default, with sphere points excluded") {
  auto X = path3();
  CHECK(ball_points(X, 0, 1.0) == std::vector<std::size_t>{0});
  CHECK(ball_points(X, 0, 1.0, BallMode::closed) == std::vector<std::size_t>{0, 1});
  CHECK(ball_mass(X, 1, 1.5) == 4.0);
  // rounding noise on the sphere does not change membership
  CHECK_FALSE(in_ball(1.0 - 1e-15, 1.0));
  CHECK(in_ball(1.0 + 1e-15, 1.0, BallMode::closed));
}

TEST_CASE("normalization makes the cone integral one after rescaling") {
  auto ps = make_pointed(from_euclidean(1, {-0.5, -0.25, 0, 0.25, 0.5}, {1, 1, 1, 1, 1}), 2);
  const double r = 0.4;
  auto n = normalize_at(ps, r);
  auto scaled = rescale(n.space, r);
  CHECK(normalization_sum(scaled, 1.0) == doctest::Approx(1.0));
  CHECK(n.constant == doctest::Approx(1.0 / (1.0 + 2 * (1 - 0.25 / 0.4))));
  auto ball = ball_restrict(scaled, 1.0);
  CHECK(ball.space.size() == 3);
  CHECK(ball.space.distance(ball.base, 0) == doctest::Approx(0.625));
}

TEST_CASE("product metric and weights") {
  auto a = from_matrix(2, {0, 3, 3, 0}, {1, 2});
  auto b = from_matrix(2, {0, 4, 4, 0}, {5, 7});
  auto p = product(a, b);
  CHECK(p.size() == 4);
  CHECK(p.distance(0, 3) == doctest::Approx(5.0));
  CHECK(p.weight(3) == 14.0);
  CHECK(validate(p).ok());
}

TEST_CASE("make_pointed rejects a base outside the support") {
  CHECK_THROWS_AS(make_pointed(from_matrix(2, {0, 1, 1, 0}, {0, 1}), 0), ValidationError);
  CHECK_THROWS_AS(make_pointed(path3(), 7), ValidationError);
}

TEST_CASE("json round trip and graph closure") {
  nlohmann::json j = {{"points", {"a", "b", "c", "d"}},
                      {"metric", {{"kind", "graph"}, {"edges", {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 1.0}, {0, 3, 10.0}}}}},
                      {"weights", {1, 1, 2, 1}},
                      {"base", 1}};
  auto ps = space_from_json(j);
  CHECK(ps.base == 1);
  CHECK(ps.space.distance(0, 3) == 4.0);
  CHECK(ps.space.id(2) == "c");
  auto back = space_from_json(space_to_json(ps));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) CHECK(back.space.distance(i, k) == ps.space.distance(i, k));

  nlohmann::json e = {{"metric", {{"kind", "euclidean"}, {"coords", {{0, 0}, {3, 4}}}}}, {"weights", {1, 1}}};
  auto eu = space_from_json(e);
  CHECK(eu.space.distance(0, 1) == 5.0);
  CHECK(eu.space.has_coords());
  CHECK(space_to_json(eu)["metric"]["kind"] == "euclidean");
}

TEST_CASE("malformed spaces are rejected") {
  nlohmann::json tri = {{"metric", {{"kind", "matrix"}, {"data", {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}}}},
                        {"weights", {1, 1, 1}}};
  CHECK_THROWS_AS(space_from_json(tri), ValidationError);
  nlohmann::json disc = {{"metric", {{"kind", "graph"}, {"edges", {{0, 1, 1.0}}}}}, {"weights", {1, 1, 1}}};
  CHECK_THROWS_AS(space_from_json(disc), ValidationError);
  nlohmann::json short_w = {{"metric", {{"kind", "matrix"}, {"data", {{0, 1}, {1, 0}}}}}, {"weights", {1}}};
  CHECK_THROWS_AS(space_from_json(short_w), ValidationError);
}

TEST_CASE("measure files") {
  auto dir = std::filesystem::temp_directory_path() / "mmslab_measure_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "a.json") << "[0.25, 0.75, 0]";
    std::ofstream(dir / "b.csv") << "0.5\n0.5\n0\n";
    std::ofstream(dir / "c.csv") << "2,1\n";
  }
  CHECK(load_measure(dir / "a.json", 3) == std::vector<double>{0.25, 0.75, 0});
  CHECK(load_measure(dir / "b.csv", 3) == std::vector<double>{0.5, 0.5, 0});
  CHECK(load_measure(dir / "c.csv", 3) == std::vector<double>{0, 0, 1});
  CHECK_THROWS_AS(load_measure(dir / "a.json", 4), ValidationError);
  std::filesystem::remove_all(dir);
}
