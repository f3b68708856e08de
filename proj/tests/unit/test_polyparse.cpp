#include "gkm/polyparse.hpp"

#include <doctest.h>

using namespace gkm;

TEST_SUITE("polyparse") {
  TEST_CASE("round trip through printing") {
    for (const char* text : {"x^2 - 3*x*y + 2*y^2", "2*x^3*y - 6*x^2*y^2 + 4*x*y^3", "-3", "x + y"}) {
      CHECK(parse_graded(text, 2).to_string() == text);
    }
  }

  TEST_CASE("expressions") {
    CHECK(parse_graded("(x - y)*(x + y)", 2).to_string() == "x^2 - y^2");
    CHECK(parse_graded("-(x)^2", 2).to_string() == "-x^2");
    CHECK(parse_graded("2*3*x", 2).to_string() == "6*x");
    CHECK(parse_graded("x1*x3", 4).to_string() == "x1*x3");
    CHECK(parse_graded("0", 2, Ring::integers(), 3).degree() == 3);
    CHECK(parse_graded("3*x + y", 2, Ring::mod(2)).to_string() == "x + y");
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(parse_polynomial("x +", 2), ExpressionError);
    CHECK_THROWS_AS(parse_polynomial("q", 2), ExpressionError);
    CHECK_THROWS_AS(parse_polynomial("(x", 2), ExpressionError);
    CHECK_THROWS_AS(parse_polynomial("x^-1", 2), ExpressionError);
    CHECK_THROWS_AS(parse_graded("x + 1", 2), ExpressionError);
  }

  TEST_CASE("class expressions broadcast polynomials") {
    std::map<std::string, SparseClass> classes;
    classes["a"] = {parse_polynomial("x", 2), parse_polynomial("y", 2)};
    const auto v = evaluate_class_expression("a*a - x*a + 1", 2, 2, classes);
    REQUIRE(v.size() == 2);
    CHECK(to_graded(v[0], 2, Ring::integers()).to_string() == "1");
    CHECK(v[1] == parse_polynomial("y^2 - x*y + 1", 2));
    CHECK_THROWS_AS(evaluate_class_expression("b", 2, 2, classes), ExpressionError);
  }
}
