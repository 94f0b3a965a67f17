#include <doctest.h>

#include <cmath>

#include "mmslab/models.hpp"
#include "mmslab/serialize.hpp"
#include "mmslab/transport.hpp"

using namespace mms;

TEST_CASE("non-finite numbers are written as strings") {
  CHECK(number(INFINITY) == "inf");
  CHECK(number(-INFINITY) == "-inf");
  CHECK(number(NAN) == "nan");
  CHECK(number(0.5) == 0.5);
}

TEST_CASE("model spec json round trip") {
  auto s = parse_model_spec("cone:h=0.05,angle=2,hi=1.5");
  auto back = model_spec_from_json(to_json(s));
  CHECK(back.kind == s.kind);
  CHECK(back.cone_angle == s.cone_angle);
  CHECK(back.hi == s.hi);
  CHECK(back.h == s.h);
}

TEST_CASE("w2 result json carries the plan") {
  auto X = from_euclidean(1, {0, 1}, {1, 1});
  auto j = to_json(w2(X, Measure::dirac(2, 0), Measure::dirac(2, 1)));
  CHECK(j["cost"] == 1.0);
  CHECK(j["plan"].size() == 1);
}
