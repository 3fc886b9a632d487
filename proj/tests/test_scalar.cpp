#include <catch_amalgamated.hpp>

#include "steiner/scalar.hpp"

using namespace steiner;

TEST_CASE("rational arithmetic stays in lowest terms") {
  Scalar a = Scalar::rational(3, 4);
  Scalar b = Scalar::rational(1, 4);
  CHECK((a + b).str() == "1");
  CHECK(Scalar::rational(-2, 6).str() == "-1/3");
  CHECK(Scalar::rational(2, -6).str() == "-1/3");
  CHECK((a * b).str() == "3/16");
  CHECK((a / b).str() == "3");
  CHECK((-a).str() == "-3/4");
  CHECK(a.inverse().str() == "4/3");
}

TEST_CASE("modular arithmetic over a fixed odd prime") {
  Field fp = Field::prime(1000003);
  Scalar x = Scalar::modular(7, fp);
  Scalar y = Scalar::modular(1000000, fp);  // -3 mod p
  CHECK((x + y).residue() == 4);
  CHECK((x * y).residue() == (7ull * 1000000ull) % 1000003ull);
  Scalar third = fp.from_rat(BigRat(7, 3));
  CHECK((third * Scalar::modular(3, fp)).residue() == 7);
  CHECK((x / x).is_one());
  CHECK_THROWS_AS(Scalar::modular(1, fp) / Scalar::modular(0, fp), DomainError);
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(Field::prime(2), DomainError);
  CHECK_THROWS_AS(Field::prime(9), DomainError);
  CHECK_THROWS_AS(Field::prime(1ull << 62), DomainError);
  CHECK_NOTHROW(Field::prime(65537));
  CHECK_NOTHROW(Field::prime((1ull << 61) - 1));  // Mersenne prime below the cap
}

TEST_CASE("mixed-field operations are rejected, not coerced") {
  Field fp = Field::prime(101);
  Scalar a = Scalar::rational(1, 2);
  Scalar b = Scalar::modular(3, fp);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * b, FieldMismatch);
  Field fq = Field::prime(103);
  CHECK_THROWS_AS(Scalar::modular(1, fp) + Scalar::modular(1, fq), FieldMismatch);
}

TEST_CASE("strict rational grammar") {
  CHECK(parse_rational("3") == BigRat(3));
  CHECK(parse_rational("-4/7") == BigRat(-4, 7));
  CHECK(parse_rational("0") == BigRat(0));
  CHECK(parse_rational("+5/10") == BigRat(1, 2));
  CHECK_THROWS_AS(parse_rational("4/"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("3.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(" 3"), ParseError);
  CHECK_THROWS_AS(parse_rational("3 "), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("--3"), ParseError);
}

TEST_CASE("serialization round trip") {
  for (const char* s : {"0", "1", "-1", "3", "-4/7", "22/7", "123456789123456789/2"}) {
    CHECK(rational_str(parse_rational(s)) == s);
  }
}
