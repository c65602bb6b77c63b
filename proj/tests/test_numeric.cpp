#include <doctest.h>

#include "mbc/numeric.hpp"
#include "mbc/errors.hpp"
#include "mbc/ratio.hpp"

using namespace mbc;

TEST_CASE("parse_exact accepts fractions, integers and decimals") {
  CHECK(parse_exact("3/2") == make_exact(3, 2));
  CHECK(parse_exact("6/4") == make_exact(3, 2));
  CHECK(parse_exact("7") == make_exact(7));
  CHECK(parse_exact("1.49") == make_exact(149, 100));
  CHECK(parse_exact("0.125") == make_exact(1, 8));
  CHECK(parse_exact(".5") == make_exact(1, 2));
  CHECK(parse_exact("-0.5") == make_exact(-1, 2));
  CHECK_THROWS_AS(parse_exact("1/0"), DomainError);
  CHECK_THROWS_AS(parse_exact("abc"), DomainError);
  CHECK_THROWS_AS(parse_exact("1.2.3"), DomainError);
  CHECK_THROWS_AS(parse_exact(""), DomainError);
}

TEST_CASE("formatting") {
  CHECK(format_exact(make_exact(6, 4)) == "3/2");
  CHECK(format_exact(make_exact(2)) == "2/1");
  CHECK(format_shortest(1.5) == "1.5");
  CHECK(format_shortest(1.0) == "1");
  CHECK(format_17g(0.1) == "0.10000000000000001");
  const double third = 1.0 / 3.0;
  CHECK(std::stod(format_shortest(third)) == third);
}

TEST_CASE("floor, ceil and rational gcd") {
  CHECK(floor_exact(make_exact(7, 2)) == 3);
  CHECK(ceil_exact(make_exact(7, 2)) == 4);
  CHECK(floor_exact(make_exact(-7, 2)) == -4);
  CHECK(ceil_exact(make_exact(-7, 2)) == -3);
  CHECK(floor_exact(make_exact(4)) == 4);
  CHECK(gcd_exact(make_exact(1, 8), make_exact(149, 100)) == make_exact(1, 200));
  CHECK(gcd_exact(make_exact(3, 2), make_exact(1)) == make_exact(1, 2));
}

TEST_CASE("unwinnable sorts above every finite ratio") {
  const auto inf = Ratio<Exact>::unwinnable();
  CHECK(inf > Ratio<Exact>(make_exact(1000000)));
  CHECK(Ratio<Exact>(make_exact(1, 2)) < Ratio<Exact>(make_exact(2, 3)));
  CHECK(inf == Ratio<Exact>::unwinnable());
  CHECK(inf != Ratio<Exact>(make_exact(0)));
  CHECK_THROWS_AS(inf.value(), UnwinnableError);
  CHECK(inf.to_string() == "inf");
  CHECK(Ratio<double>(1e300) < Ratio<double>::unwinnable());
}
