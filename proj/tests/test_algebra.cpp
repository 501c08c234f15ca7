#include "support.hpp"

#include "hhc/errors.hpp"
#include "hhc/serialize.hpp"

#include <doctest.h>

using namespace hhc;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("rational scalars stay reduced") {
  Field Q = Field::rationals();
  Scalar a = Scalar::parse(Q, "6/4"), b = Scalar::parse(Q, "-1/6");
  CHECK((a + b).str() == "4/3");
  CHECK((a * b).str() == "-1/4");
  CHECK((a / b).str() == "-9");
  CHECK((a - a).is_zero());
  CHECK(Scalar::parse(Q, "-0").is_zero());
}

TEST_CASE("rational scalars overflow into big integers and come back") {
  Field Q = Field::rationals();
  Scalar big = Scalar::parse(Q, "9223372036854775807");
  Scalar sq = big * big;
  CHECK(sq.str() == "85070591730234615847396907784232501249");
  Scalar back = sq / big;
  CHECK(back == big);
  CHECK((sq - sq).is_zero());
  Scalar tiny = Scalar::parse(Q, "1/9223372036854775807");
  CHECK((tiny * tiny * sq).str() == "1");
}

TEST_CASE("prime field arithmetic") {
  Field F = Field::prime(5);
  Scalar a(F, 3), b(F, 4);
  CHECK((a + b).str() == "2");
  CHECK((a * b).str() == "2");
  CHECK((a / b).str() == "2");
  CHECK(Scalar::parse(F, "1/2").str() == "3");
  CHECK(Scalar(F, -1).str() == "4");
  CHECK(kind_of([&] { Scalar::parse(F, "1/5"); }) == ErrorKind::ParseError);
}

TEST_CASE("field names parse") {
  CHECK(Field::parse("Q").characteristic() == 0);
  CHECK(Field::parse("Fp:7").characteristic() == 7);
  CHECK(Field::parse("F3").characteristic() == 3);
  CHECK(kind_of([] { Field::parse("Fp:6"); }) == ErrorKind::NonPrimeCharacteristic);
  CHECK(kind_of([] { Field::parse("R"); }) == ErrorKind::ParseError);
}

TEST_CASE("truncated polynomial algebra") {
  Algebra A = truncated_polynomial_algebra(Field::rationals(), 3);
  CHECK(A.dim() == 3);
  CHECK(A.label(2) == "x^2");
  CHECK(A.product(1, 1) == Terms{{2, Scalar::one(A.field())}});
  CHECK(A.product(1, 2).empty());
  CHECK(A.degree(2) == 2);

  Algebra K = truncated_polynomial_algebra(Field::rationals(), std::nullopt, 4);
  CHECK(K.dim() == 5);
  CHECK(K.truncation() == 4);
  CHECK(kind_of([] { truncated_polynomial_algebra(Field::rationals(), std::nullopt); }) == ErrorKind::MissingTruncation);
}

TEST_CASE("algebra validation rejects bad tables") {
  Field Q = Field::rationals();
  Scalar one = Scalar::one(Q);
  AlgebraDescriptor d{Q, {"1", "a", "b"}, "1", {}, std::nullopt, std::nullopt};
  for (int i = 0; i < 3; ++i) {
    d.mul.push_back({0, i, {{i, one}}});
    if (i) d.mul.push_back({i, 0, {{i, one}}});
  }
  CHECK_NOTHROW(make_algebra(d));

  AlgebraDescriptor bad = d;
  bad.mul.push_back({1, 1, {{2, one}}});
  bad.mul.push_back({2, 1, {{1, one}}});
  CHECK(kind_of([&] { make_algebra(bad); }) == ErrorKind::NonAssociative);

  AlgebraDescriptor unit = d;
  unit.unit = "a";
  CHECK(kind_of([&] { make_algebra(unit); }) == ErrorKind::BadUnit);

  AlgebraDescriptor graded = d;
  graded.mul.push_back({1, 1, {{2, one}}});
  graded.grading = std::vector<int>{0, 1, 1};
  CHECK(kind_of([&] { make_algebra(graded); }) == ErrorKind::GradingViolation);
  graded.grading = std::vector<int>{0, 1, 2};
  CHECK_NOTHROW(make_algebra(graded));
}

TEST_CASE("algebra JSON round trip") {
  Algebra A = truncated_polynomial_algebra(Field::prime(3), 3);
  std::string text = dump_algebra(A);
  Algebra B = parse_algebra(text);
  CHECK(dump_algebra(B) == text);
  CHECK(B.field().characteristic() == 3);
  CHECK(kind_of([] { parse_algebra("{\"basis\": 3}"); }) == ErrorKind::ParseError);
}
