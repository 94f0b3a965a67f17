#include <doctest.h>

#include "mmslab/doubling.hpp"
#include "mmslab/errors.hpp"
#include "mmslab/models.hpp"

using namespace mms;

TEST_CASE("doubling ratio of a line grid is two at interior radii") {
  ModelSpec s;
  s.h = 0.01;
  s.lo = -1;
  s.hi = 1;
  auto ps = make_model(s);
  CenterPolicy c;
  c.explicit_centers = {ps.base};
  auto p = doubling_profile(ps.space, {0.1, 0.2, 0.4}, c, 200);
  for (double r : p.ratios) CHECK(r == doctest::Approx(2.0).epsilon(0.06));
  CHECK(p.iterated_violations == 0);
  CHECK(p.iterated.size() == 200);
  CHECK(p.envelope_at(0.3) == p.envelope[1]);
  CHECK(p.envelope_at(0.01) == p.envelope[0]);
}

TEST_CASE("envelope is a running maximum") {
  auto X = from_matrix(3, {0, 1, 3, 1, 0, 2, 3, 2, 0}, {1, 5, 1});
  auto p = doubling_profile(X, {0.6, 1.2, 2.5});
  for (std::size_t k = 1; k < p.envelope.size(); ++k) CHECK(p.envelope[k] >= p.envelope[k - 1]);
  CHECK(p.envelope[0] == doctest::Approx(6.0));
}

TEST_CASE("doubling argument checks") {
  auto X = from_matrix(2, {0, 1, 1, 0}, {1, 1});
  CHECK_THROWS_AS(doubling_profile(X, {}), ValidationError);
  CHECK_THROWS_AS(doubling_profile(X, {1.0, 0.5}), ValidationError);
  CHECK_THROWS_AS(doubling_profile(X, {-1.0}), ValidationError);
}
