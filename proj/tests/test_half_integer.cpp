#include <doctest.h>

#include "mfhc/half_integer.hpp"
#include "mfhc/rational.hpp"

using namespace mfhc;

TEST_CASE("half-integer parsing and formatting") {
  CHECK(parse_half_integer("3/2").twice == 3);
  CHECK(parse_half_integer("-1/2").twice == -1);
  CHECK(parse_half_integer("2").twice == 4);
  CHECK(parse_half_integer("-3").twice == -6);
  CHECK(parse_half_integer("4/2").twice == 4);
  CHECK(HalfInteger::from_twice(3).str() == "3/2");
  CHECK(HalfInteger::from_twice(-1).str() == "-1/2");
  CHECK(HalfInteger::whole(2).str() == "2");
  CHECK_THROWS_AS(parse_half_integer("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_half_integer("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_half_integer("3/4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_half_integer(""), std::invalid_argument);
}

TEST_CASE("half-integer parity and arithmetic") {
  const HalfInteger k = parse_half_integer("3/2");
  CHECK(!k.is_integral());
  CHECK(k.is_strictly_half());
  CHECK((k + 2).str() == "7/2");
  CHECK((k - 2).str() == "-1/2");
  CHECK((-k).twice == -3);
  CHECK(HalfInteger::whole(2).is_integral());
  CHECK_THROWS_AS(k.as_int(), std::domain_error);
  CHECK(half_integer_to_rational(k) == make_rational(3, 2));
}
