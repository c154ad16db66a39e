#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hartop/rational.hpp"
#include "support.hpp"

using hartop::ComplexRational;

TEST_CASE("parse_rational accepts integers and fractions in canonical form") {
  CHECK(hartop::parse_rational("7") == 7);
  CHECK(hartop::parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK(hartop::rational_to_string(hartop::parse_rational("10/5")) == "2");
  CHECK(hartop::rational_to_string(hartop::parse_rational("-2/6")) == "-1/3");
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "a", "1/-2", " 1", "1//2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(hartop::parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("complex arithmetic matches hand-computed values") {
  const ComplexRational a(mpq_class(1, 2), -3);
  const ComplexRational b(2, mpq_class(1, 3));
  // (1/2 - 3i)(2 + i/3) = 1 + i/6 - 6i + 1 = 2 - 35/6 i
  CHECK(a * b == ComplexRational(2, mpq_class(-35, 6)));
  CHECK(a + b == ComplexRational(mpq_class(5, 2), mpq_class(-8, 3)));
  CHECK(a.norm() == mpq_class(37, 4));
  CHECK(a.to_string() == "1/2-3i");
  CHECK(ComplexRational::i().to_string() == "i");
  CHECK((-ComplexRational::i()).to_string() == "-i");
  CHECK(ComplexRational(0).to_string() == "0");
  CHECK_THROWS_AS(ComplexRational(0).inverse(), std::domain_error);
}

TEST_CASE("field laws hold on random values") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = testing::random_coefficient(rng);
    const auto b = testing::random_coefficient(rng);
    const auto c = testing::random_coefficient(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).re() == a.norm());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(hartop::pow(a, 3) == a * a * a);
    CHECK(hartop::pow(a, 0) == ComplexRational(1));
  }
}
