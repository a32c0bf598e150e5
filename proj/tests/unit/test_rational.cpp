#include <doctest.h>

#include "vexf/errors.hpp"
#include "vexf/linalg.hpp"
#include "vexf/rational.hpp"

using namespace vexf;

TEST_CASE("rational literals parse to canonical values") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK(to_string(parse_rational(" 0/5 ")) == "0");
  CHECK(to_string(parse_rational("123456789012345678901234567890/3")) == "41152263004115226300411522630");
}

TEST_CASE("malformed rational literals are rejected") {
  for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "a", "1/-2", "--1", "1e3"}) {
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("vectors parse from comma-separated literals") {
  const Vec v = parse_vector("1, -2/4,3");
  REQUIRE(v.size() == 3);
  CHECK(v(1) == Rational(-1, 2));
  CHECK(to_string(v) == "(1,-1/2,3)");
  CHECK_THROWS_AS(parse_vector("1,,2"), ParseError);
}

TEST_CASE("sub_mul subtracts a product in place") {
  Rational a(5, 3);
  sub_mul(a, Rational(1, 2), Rational(2, 3));
  CHECK(a == Rational(4, 3));
  long b = 10;
  sub_mul(b, 2L, 3L);
  CHECK(b == 4);
}

TEST_CASE("lexicographic order and row utilities") {
  CHECK(lex_less(from_ints({0, 5}), from_ints({1, 0})));
  CHECK_FALSE(lex_less(from_ints({1, 0}), from_ints({1, 0})));
  Mat m = stack_rows({from_ints({1, 0}), from_ints({0, 1}), from_ints({1, 0})}, 2);
  const Mat u = sorted_unique_rows(m);
  REQUIRE(u.rows() == 2);
  CHECK(u.row(0) == from_ints({0, 1}).transpose());
}

TEST_CASE("exact rank and unique solutions") {
  Mat m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK(exact_rank(m) == 2);
  Mat a(2, 2);
  a << 2, 1, 1, 3;
  const auto x = solve_unique(a, Vec(from_ints({3, 4})));
  REQUIRE(x);
  CHECK((*x)(0) == Rational(1));
  CHECK((*x)(1) == Rational(1));
  CHECK_FALSE(solve_unique(m, Vec(from_ints({1, 1, 1}))));
}

TEST_CASE("reduce_row_echelon yields the reduced form and its pivot columns") {
  MatrixX<Rational> m(2, 3);
  m << 0, 2, 4, 1, 1, 1;
  const auto pivots = reduce_row_echelon(m);
  CHECK(pivots == std::vector<Index>{0, 1});
  CHECK(m(1, 2) == 2);
  CHECK(m(0, 2) == -1);
}
