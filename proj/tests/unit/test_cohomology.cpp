#include "gkm/cohomology.hpp"
#include "gkm/fixtures.hpp"

#include "classes.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

#include <doctest.h>

using namespace gkm;

namespace {

GradedPoly z2(std::string_view text, int zero_degree = 0) { return parse_graded(text, 2, Ring::mod(2), zero_degree); }

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("ranks of the 4-valent example") {
    const auto g = fixtures::paper8();
    std::vector<std::size_t> ranks;
    for (int d = 0; d <= 8; d += 2) ranks.push_back(compute_h_z(g, d).rank());
    CHECK(ranks == std::vector<std::size_t>{1, 2, 5, 8, 12});
    CHECK(free_generator_counts(ranks, 2) == std::vector<long>{1, 0, 2, 0, 1});
    const auto h0 = compute_h_z(g, 0);
    REQUIRE(h0.rank() == 1);
    const auto values = h0.basis_values();
    for (const auto& f : values[0]) CHECK(f.to_string() == "1");
  }

  TEST_CASE("generators are classes and satisfy the relation") {
    const auto g = fixtures::paper8();
    const auto a = testing::paper8_generators(g);
    for (const auto& c : a) CHECK(membership_z(g, c));
    CHECK(a[1] * a[2] == -a[3] + a[1].times(parse_graded("2*x*y", 2)));
    CHECK(a[0] * a[0] == a[0]);
    CHECK_FALSE(membership_z(g, testing::class_from(g, {"x", "0", "0", "0"}, 1)));
    for (const auto& c : a) CHECK(compute_h_z(g, c.degree()).lattice().contains(flatten(c.values)));
  }

  TEST_CASE("odd and negative degrees") {
    const auto g = fixtures::paper8();
    CHECK_THROWS_AS(compute_h_z(g, 3), DegreeError);
    CHECK_THROWS_AS(compute_h_z(g, -2), DegreeError);
    CHECK_THROWS_AS(compute_h_modp(g, 5, 2), DegreeError);
    CHECK_THROWS_AS(compute_h_modp(g, 2, 4), NotPrimeError);
  }

  TEST_CASE("degree zero counts components") {
    const auto g = fixtures::paper8();
    CHECK(compute_h_modp(g, 0, 3).rank() == 1);
    const GkmGraph two(1, {"a", "b", "c", "d"}, {{0, 1, {1}}, {2, 3, {2}}});
    CHECK(two.component_count() == 2);
    CHECK(compute_h_z(two, 0).rank() == 2);
    CHECK(compute_h_modp(two, 0, 2).rank() == 2);
  }

  TEST_CASE("rank and dimension differ for the product with a divisible weight") {
    for (std::int64_t p : {2, 3, 5}) {
      const auto g = fixtures::product({{1, 0}, {0, 1}, {1, p}});
      CHECK(compute_h_z(g, 2).rank() == 5);
      CHECK(compute_h_modp(g, 2, static_cast<std::uint64_t>(p)).rank() == 6);
      const auto r = psi_image_ranks(g, 2, static_cast<std::uint64_t>(p));
      CHECK(r.image == 5);
    }
  }

  TEST_CASE("single-edge graphs") {
    for (std::int64_t a : {1, 2, 3, 5}) {
      const auto g = fixtures::sphere({a, 0});
      for (int d = 0; d <= 3; ++d) {
        // {(f, g) : f = g mod a x}: g free, f - g in (a x)
        const std::size_t expected = monomial_count(2, d) + monomial_count(2, d - 1);
        CHECK(compute_h_z(g, 2 * d).rank() == expected);
        CHECK(testing::oracle_rank_z(g, d) == expected);
      }
      for (std::uint64_t p : {2, 3, 5}) {
        const bool divides = a % static_cast<std::int64_t>(p) == 0;
        // over Z_p with p | a the edge condition is equality
        CHECK(compute_h_modp(g, 2, p).rank() == (divides ? 2u : 3u));
        if (!divides) continue;
        const auto xi = psi(g, testing::class_from(g, {std::to_string(a) + "*x", "0"}, 1), p);
        CHECK(xi.vertex[0].is_zero());
        CHECK(xi.vertex[1].is_zero());
        REQUIRE(xi.b_part.size() == 1);
        CHECK(xi.b_part[0].to_string() == "1");
        CHECK(product_modp(g, xi, xi).is_zero());
      }
    }
  }

  TEST_CASE("psi on the generators") {
    const auto g = fixtures::paper8();
    const auto a = testing::paper8_generators(g);
    const auto p1 = psi(g, a[0], 2);
    for (const auto& f : p1.vertex) CHECK(f.to_string() == "1");
    CHECK(p1.b_edges == std::vector<EdgeId>{1, 5});
    for (const auto& f : p1.b_part) CHECK(f.is_zero());
    // 2xy vanishes mod 2 but the 2y-edges join 0 to 2xy: quotient x on both
    const auto p3 = psi(g, a[2], 2);
    for (const auto& f : p3.vertex) CHECK(f.is_zero());
    for (const auto& f : p3.b_part) CHECK(f == z2("x"));
    const auto p2 = psi(g, a[1], 2);
    CHECK(p2.vertex[0] == z2("x^2 + x*y"));
    CHECK(p2.vertex[1] == z2("x^2 + x*y"));
    CHECK(p2.vertex[2].is_zero());
    CHECK(p2.vertex[3].is_zero());
    CHECK(p2.b_part[0] == z2("x"));
    CHECK(p2.b_part[1].is_zero());
    CHECK_THROWS_AS(psi(g, testing::class_from(g, {"x", "0", "0", "0"}, 1), 2), PsiError);
  }

  TEST_CASE("unit and products") {
    const auto g = fixtures::paper8();
    const auto a = testing::paper8_generators(g);
    const auto unit = psi(g, GraphClassZ::constant(g, 1), 2);
    for (const auto& c : a) {
      const auto pc = psi(g, c, 2);
      CHECK(product_modp(g, unit, pc) == pc);
      CHECK(product_modp(g, pc, unit) == pc);
    }
  }

  TEST_CASE("psi is additive and multiplicative") {
    std::mt19937_64 rng(31);
    const auto g = fixtures::paper8();
    for (std::uint64_t p : {2, 3}) {
      for (int t = 0; t < 10; ++t) {
        const auto a = testing::random_class(rng, g, 1 + t % 2);
        const auto b = testing::random_class(rng, g, 1);
        const auto c = testing::random_class(rng, g, 1 + t % 2);
        CHECK(psi(g, a * b, p) == product_modp(g, psi(g, a, p), psi(g, b, p)));
        CHECK(psi(g, a + c, p) == psi(g, a, p) + psi(g, c, p));
      }
    }
  }

  TEST_CASE("psi at p = 2 ignores orientation and sign conventions") {
    std::mt19937_64 rng(37);
    const auto g = fixtures::product({{1, 0}, {0, 1}, {1, 2}});
    for (int t = 0; t < 10; ++t) {
      const auto a = testing::random_class(rng, g, 1 + t % 3);
      auto conv = Conventions::defaults(g);
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        conv.flip_orientation[e] = (rng() & 1) != 0;
        conv.flip_sign[e] = (rng() & 1) != 0;
      }
      CHECK(psi(g, a, 2, conv) == psi(g, a, 2));
    }
  }

  TEST_CASE("image of psi") {
    const auto g = fixtures::paper8();
    const auto a = testing::paper8_generators(g);
    const auto target = psi(g, a[1], 2);
    const auto pre = psi_image_contains(g, target);
    REQUIRE(pre);
    CHECK(membership_z(g, *pre));
    CHECK(psi(g, *pre, 2) == target);

    // vertex part (x + y) everywhere with b_part 1 on both divisible edges
    auto sw2 = GraphClassModP::zero(g, 2, 1);
    for (auto& f : sw2.vertex) f = z2("x + y");
    for (auto& f : sw2.b_part) f = z2("1");
    CHECK_FALSE(psi_image_contains(g, sw2));
    for (auto& f : sw2.b_part) f = z2("0", 0);
    const auto pre2 = psi_image_contains(g, sw2);
    REQUIRE(pre2);
    CHECK(psi(g, *pre2, 2) == sw2);
  }

  TEST_CASE("ranks agree with independent eliminations") {
    std::mt19937_64 rng(41);
    std::vector<GkmGraph> graphs{fixtures::paper8(), fixtures::product({{1, 0}, {0, 1}, {1, 2}}),
                                 fixtures::polygon2n_x_edge(2), fixtures::sphere({3, 0})};
    for (int t = 0; t < 6; ++t) graphs.push_back(testing::random_gkm_graph(rng));
    for (const auto& g : graphs) {
      for (int d = 0; d <= 2; ++d) {
        CHECK(compute_h_z(g, 2 * d).rank() == testing::oracle_rank_z(g, d));
        for (std::uint64_t p : {2, 3})
          CHECK(compute_h_modp(g, 2 * d, p).rank() == testing::oracle_dim_fp(g, d, static_cast<std::int64_t>(p)));
      }
    }
  }

  TEST_CASE("flatten round trip") {
    const auto g = fixtures::paper8();
    const auto a = testing::paper8_generators(g)[1];
    const auto flat = flatten(a.values);
    CHECK(unflatten(flat, Ring::integers(), 2, 4, 2) == a.values);
  }
}
