#include <doctest.h>

#include "mmslab/errors.hpp"
#include "mmslab/models.hpp"
#include "mmslab/space_ops.hpp"
#include "mmslab/tangent.hpp"

using namespace mms;

namespace {
PointedSpace line_grid(double h, double half) {
  ModelSpec s;
  s.h = h;
  s.lo = -half;
  s.hi = half;
  return make_model(s);
}
}  // namespace

TEST_CASE("blow-up members are rescaled, normalized and windowed") {
  auto X = line_grid(0.01, 1.0);
  auto seq = blowup(X, {0.5, 0.25, 0.125}, {4.0});
  REQUIRE(seq.members.size() == 3);
  for (const auto& m : seq.members) {
    CHECK(m.relative_resolution == doctest::Approx(0.01 / m.radius));
    CHECK(normalization_sum(m.space, 1.0) == doctest::Approx(1.0));
    for (std::size_t i = 0; i < m.space.space.size(); ++i) CHECK(m.space.space.distance(m.space.base, i) < 4.0);
  }
  CHECK(seq.usable().size() == 3);
}

TEST_CASE("coarse members are flagged unusable") {
  auto X = line_grid(0.1, 1.0);
  auto seq = blowup(X, {1.0, 0.1}, {4.0, 0.5});
  CHECK(seq.members[0].usable);
  CHECK_FALSE(seq.members[1].usable);
  CHECK_FALSE(seq.warnings.empty());
}

TEST_CASE("blow-up argument checks") {
  auto X = line_grid(0.1, 1.0);
  CHECK_THROWS_AS(blowup(X, {}), ValidationError);
  CHECK_THROWS_AS(blowup(X, {0.5, 0.5}), ValidationError);
  CHECK_THROWS_AS(blowup(X, {2.0}), ValidationError);
}

TEST_CASE("a line grid has the line as tangent") {
  auto X = line_grid(0.005, 1.0);
  auto seq = blowup(X, {0.25, 0.125}, {4.0});
  auto m = match_tangent(seq, {euclidean_model(1), euclidean_model(2), singleton_model()});
  CHECK(m.best == euclidean_model(1).name);
  CHECK(m.matches.front().final_value < 0.1);
  CHECK(m.margin >= 2.0);
}

TEST_CASE("iterated tangent of a line grid") {
  auto X = line_grid(0.005, 1.0);
  IteratedTangentOptions o;
  o.window = 4;
  auto rep = iterated_tangent_check(X, {0.25, 0.125, 0.0625}, o);
  CHECK_FALSE(rep.comparisons.empty());
  CHECK(rep.min_value < 0.15);
  CHECK(rep.yprime_offset == doctest::Approx(1.0).epsilon(0.05));
}
