#include <doctest.h>

#include <stdexcept>

#include "mmslab/errors.hpp"
#include "mmslab/models.hpp"
#include "mmslab/pmgh.hpp"
#include "mmslab/space_ops.hpp"
#include "mmslab/splitting.hpp"

using namespace mms;

TEST_CASE("a planar grid contains a line and splits off a segment") {
  ModelSpec s;
  s.dim = 2;
  s.h = 0.1;
  s.lo = -3;
  s.hi = 3;
  auto X = make_model(s);
  auto line = detect_line(X, 2.0, 0.05);
  REQUIRE(line.has_value());
  CHECK(line->eps_line <= 0.05);
  CHECK(line->half_length == doctest::Approx(2.0).epsilon(0.06));
  auto sp = split(X, *line);
  CHECK(sp.delta_metric <= 0.15);
  CHECK(sp.quotient.space.size() > 5);
  CHECK(sp.points.size() == sp.b.size());
  // the quotient of a plane is a line: every triple is additive
  auto& Q = sp.quotient.space;
  for (std::size_t i = 0; i + 2 < Q.size(); ++i) {
    double a = Q.distance(i, i + 1), b = Q.distance(i + 1, i + 2), c = Q.distance(i, i + 2);
    CHECK(std::max({a, b, c}) * 2 == doctest::Approx(a + b + c).epsilon(1e-6));
  }
}

TEST_CASE("a circle has no line of length two") {
  ModelSpec s;
  s.kind = ModelKind::cylinder;
  s.axis_length = 0;
  s.circumference = 1;
  s.h = 0.02;
  CHECK_FALSE(detect_line(make_model(s), 2.0, 0.05).has_value());
}

TEST_CASE("split needs a line longer than the window") {
  ModelSpec s;
  s.h = 0.1;
  s.lo = -3;
  s.hi = 3;
  auto X = make_model(s);
  auto line = detect_line(X, 1.0, 0.05);
  REQUIRE(line);
  SplitOptions o;
  o.window = 2.0;
  CHECK_THROWS_AS(split(X, *line, o), ValidationError);
  CHECK_THROWS_AS(detect_line(X, 0.0, 0.05), ValidationError);
}

TEST_CASE("dimension never exceeds floor(N)") {
  ModelSpec s;
  s.dim = 2;
  s.h = 0.04;
  s.lo = -2.5;
  s.hi = 2.5;
  auto X = make_model(s);
  DimensionConfig c;
  c.N = 1.7;
  auto r = euclidean_dimension(X, c);
  CHECK(r.n == 1);
  c.N = 2;
  CHECK(euclidean_dimension(X, c).n == 2);
  c.N = 0.5;
  CHECK_THROWS_AS(euclidean_dimension(X, c), ValidationError);
}

TEST_CASE("a single point has dimension zero") {
  auto X = make_pointed(from_matrix(1, {0}, {1}), 0);
  DimensionConfig c;
  c.N = 3;
  auto r = euclidean_dimension(X, c);
  CHECK(r.n == 0);
  CHECK(r.remainder_points == 1);
}
