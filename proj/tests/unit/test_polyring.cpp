#include "gkm/polyring.hpp"

#include "gkm/polyparse.hpp"
#include "random_graphs.hpp"

#include <doctest.h>

using namespace gkm;

namespace {

GradedPoly random_poly(std::mt19937_64& rng, Ring ring, std::size_t k, int d, int bound = 4) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  IntVector c(monomial_count(k, d));
  for (auto& x : c) x = pick(rng);
  return GradedPoly::from_coeffs(ring, k, d, std::move(c));
}

GradedPoly zz(std::string_view text, std::size_t k = 2) { return parse_graded(text, k); }

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("graded lex monomial order") {
    const auto& m = monomials(2, 2);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == Exponent{2, 0});
    CHECK(m[1] == Exponent{1, 1});
    CHECK(m[2] == Exponent{0, 2});
    CHECK(monomial_count(3, 2) == 6);
    CHECK(monomial_count(2, -1) == 0);
    CHECK(monomial_index(3, {0, 1, 1}) == 4);
    CHECK(variable_name(2, 1) == "y");
    CHECK(variable_name(4, 3) == "x4");
  }

  TEST_CASE("printing") {
    const Ring z = Ring::integers();
    CHECK(GradedPoly::from_coeffs(z, 2, 2, {1, -3, 2}).to_string() == "x^2 - 3*x*y + 2*y^2");
    CHECK(GradedPoly::constant(z, 2, -3).to_string() == "-3");
    CHECK(GradedPoly(z, 2, 3).to_string() == "0");
    CHECK(GradedPoly::from_coeffs(Ring::mod(2), 2, 1, {3, -1}).to_string() == "x + y");
  }

  TEST_CASE("arithmetic") {
    const auto a = zz("x - y");
    const auto b = zz("x + y");
    CHECK(a * b == zz("x^2 - y^2"));
    CHECK(a + b == zz("2*x"));
    CHECK(a - b == zz("-2*y"));
    CHECK(a.scaled(3) == zz("3*x - 3*y"));
    CHECK_THROWS_AS(a + zz("x^2"), std::invalid_argument);
    CHECK_THROWS_AS(a + reduce_mod_p(b, 2), RingMismatch);
  }

  TEST_CASE("division by a linear form round-trips") {
    std::mt19937_64 rng(17);
    for (Ring ring : {Ring::integers(), Ring::mod(2), Ring::mod(3), Ring::mod(5)}) {
      for (int t = 0; t < 100; ++t) {
        const std::size_t k = 1 + t % 3;
        const int d = t % 4;
        Weight w = testing::random_weight(rng, k, 3);
        if (linear_from_weight(w, ring).is_zero()) continue;
        const auto f = random_poly(rng, ring, k, d);
        const auto q = divide_by_linear(f * linear_from_weight(w, ring), w);
        REQUIRE(q);
        CHECK(*q == f);
      }
    }
  }

  TEST_CASE("division failures") {
    CHECK_FALSE(divide_by_linear(zz("x^2 + y^2"), Weight{1, 1}));
    CHECK_FALSE(divide_by_linear(zz("x"), Weight{2, 0}));
    CHECK(*divide_by_linear(zz("2*x"), Weight{2, 0}) == GradedPoly::constant(Ring::integers(), 2, 1));
    CHECK_THROWS(divide_by_linear(reduce_mod_p(zz("x"), 2), Weight{2, 0}));
    CHECK_FALSE(divide_by_linear(zz("3"), Weight{1, 0}));
    CHECK(divide_by_linear(GradedPoly(Ring::integers(), 2, 0), Weight{1, 0})->degree() == -1);
  }

  TEST_CASE("reduction is a ring homomorphism") {
    std::mt19937_64 rng(19);
    for (std::uint64_t p : {2, 3, 7}) {
      for (int t = 0; t < 50; ++t) {
        const auto a = random_poly(rng, Ring::integers(), 2, t % 3, 20);
        const auto b = random_poly(rng, Ring::integers(), 2, t % 2, 20);
        CHECK(reduce_mod_p(a * b, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p));
        const auto c = random_poly(rng, Ring::integers(), 2, t % 3, 20);
        CHECK(reduce_mod_p(a + c, p) == reduce_mod_p(a, p) + reduce_mod_p(c, p));
      }
    }
  }

  TEST_CASE("congruence modulo a weight") {
    CHECK(congruent_mod_weight(zz("x^2 - 3*x*y + 2*y^2"), zz("x^2 + 3*x*y + 2*y^2"), Weight{0, 2}));
    CHECK_FALSE(congruent_mod_weight(zz("x"), GradedPoly(Ring::integers(), 2, 1), Weight{1, -1}));
    const auto f = reduce_mod_p(zz("x + y"), 2);
    const auto g = reduce_mod_p(zz("x + 3*y"), 2);
    CHECK(congruent_mod_weight(f, g, Weight{0, 2}));
    CHECK_FALSE(congruent_mod_weight(f, reduce_mod_p(zz("x"), 2), Weight{0, 2}));
  }

  TEST_CASE("weights") {
    CHECK(Weight{-2, 4}.normalized() == Weight{2, -4});
    CHECK(Weight{0, -3}.normalized() == Weight{0, 3});
    CHECK(Weight{-4, 6}.content() == 2);
    CHECK(Weight{4, 6}.divisible_by(2));
    CHECK_FALSE(Weight{4, 5}.divisible_by(2));
    CHECK(weight_congruent(Weight{1, 1}, Weight{1, -1}, Weight{0, 2}));
    CHECK_FALSE(weight_congruent(Weight{1, 1}, Weight{1, 0}, Weight{0, 2}));
    CHECK(linearly_independent(Weight{1, 0}, Weight{1, 2}));
    CHECK_FALSE(linearly_independent(Weight{1, 2}, Weight{-2, -4}));
    CHECK(Weight{1, -2}.to_string() == "(1,-2)");
  }

  TEST_CASE("total products") {
    const Ring z2 = Ring::mod(2);
    auto s = PolySeries::one(z2, 2);
    for (const Weight& w : {Weight{1, 0}, Weight{0, 2}, Weight{1, -1}, Weight{1, -2}})
      s = s * PolySeries::one_plus_linear(w, z2);
    CHECK(s.component(1).to_string() == "x + y");
    CHECK(s.component(4).is_zero());
    CHECK(s.component(7).is_zero());
    CHECK(s.component(-1).degree() == -1);
  }

  TEST_CASE("ring validation") {
    CHECK_THROWS_AS(Ring::mod(6), NotPrimeError);
    CHECK(Ring::mod(5).name() == "Z_5");
    CHECK(Ring::integers().name() == "Z");
  }
}
