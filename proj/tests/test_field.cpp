#include "doctest.h"
#include "liealg/field.hpp"
#include "support.hpp"

using liealg::Error;
using liealg::ErrorCode;
using liealg::Scalar;

TEST_CASE("rational addition is exact") {
  CHECK(Scalar::fraction(1, 2) + Scalar::fraction(1, 3) == Scalar::fraction(5, 6));
}

TEST_CASE("i squared is minus one") {
  Scalar i = Scalar::imag_unit();
  CHECK(i * i == Scalar(-1));
}

TEST_CASE("inverse of 1+i") {
  Scalar z = Scalar::parse("1+1*i");
  Scalar w = z.inv();
  CHECK(w == Scalar::parse("1/2-1/2*i"));
  CHECK(z * w == Scalar(1));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Scalar().inv(), Error);
  try {
    (void)(Scalar(1) / Scalar());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK_THROWS_AS(Scalar::fraction(1, 0), Error);
}

TEST_CASE("canonical form") {
  Scalar a = Scalar::fraction(2, -4);
  CHECK(a.re() == mpq_class(-1, 2));
  CHECK(a.re().get_den() == 2);
  CHECK(Scalar::fraction(0, 7).re().get_den() == 1);
  CHECK(Scalar::fraction(3, 6) == Scalar::fraction(1, 2));
}

TEST_CASE("rendering") {
  CHECK(Scalar(3).to_string() == "3");
  CHECK(Scalar::fraction(-3, 4).to_string() == "-3/4");
  CHECK(Scalar(mpq_class(1, 2), mpq_class(-1, 3)).to_string() == "1/2-1/3*i");
  CHECK(Scalar(mpq_class(0), mpq_class(2)).to_string() == "0+2*i");
  CHECK(Scalar().to_string() == "0");
}

TEST_CASE("parsing accepts shorthand forms") {
  CHECK(Scalar::parse("i") == Scalar::imag_unit());
  CHECK(Scalar::parse("-i") == -Scalar::imag_unit());
  CHECK(Scalar::parse("2/3*i") == Scalar(mpq_class(0), mpq_class(2, 3)));
  CHECK(Scalar::parse(" -5 ") == Scalar(-5));
  CHECK(Scalar::parse("+7/14") == Scalar::fraction(1, 2));
}

TEST_CASE("malformed scalars are parse errors") {
  for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1+*i", "1//2", "1+2", "2*j", "1.5"}) {
    CAPTURE(bad);
    try {
      (void)Scalar::parse(bad);
      FAIL("expected parse failure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    Scalar a = liealg::testing::random_scalar(rng);
    Scalar b = liealg::testing::random_scalar(rng);
    Scalar c = liealg::testing::random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
    CHECK(Scalar::parse(a.to_string()) == a);
  }
}

TEST_CASE("exact square roots") {
  Scalar root;
  CHECK(liealg::gaussian_sqrt(Scalar(4), root));
  CHECK(root == Scalar(2));
  CHECK(liealg::gaussian_sqrt(Scalar(-1), root));
  CHECK(root * root == Scalar(-1));
  CHECK(liealg::gaussian_sqrt(Scalar::parse("2*i"), root));
  CHECK(root == Scalar::parse("1+1*i"));
  CHECK(liealg::gaussian_sqrt(Scalar::fraction(9, 4), root));
  CHECK(root == Scalar::fraction(3, 2));
  CHECK_FALSE(liealg::gaussian_sqrt(Scalar(2), root));
  CHECK_FALSE(liealg::gaussian_sqrt(Scalar::imag_unit(), root));

  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    Scalar a = liealg::testing::random_scalar(rng);
    REQUIRE(liealg::gaussian_sqrt(a * a, root));
    CHECK(root * root == a * a);
  }
}
