#include "gkm/fixtures.hpp"
#include "gkm/thom.hpp"

#include "random_graphs.hpp"

#include <doctest.h>

#include <map>

using namespace gkm;

namespace {

// Product connection of the 2n-gon times an edge: vertical edges go to
// vertical edges, polygon edges follow the polygon.
Connection polygon_product_connection(const GkmGraph& g, std::size_t sides) {
  auto layer = [&](VertexId v) { return v / sides; };
  std::vector<StarMap> maps(g.oriented_count());
  for (std::size_t i = 0; i < g.oriented_count(); ++i) {
    const auto along = OrientedEdge::from_index(i);
    const VertexId s = g.source(along), t = g.target(along);
    const bool vertical = layer(s) != layer(t);
    for (const auto& f : g.star(s)) {
      OrientedEdge img = along.bar();
      if (f != along) {
        for (const auto& h : g.star(t)) {
          if (h == along.bar()) continue;
          const bool h_vertical = layer(g.target(h)) != layer(t);
          const bool f_vertical = layer(g.target(f)) != layer(s);
          if (vertical) {
            if (!f_vertical && g.target(h) % sides == g.target(f) % sides) img = h;
          } else if (h_vertical == f_vertical) {
            img = h;
          }
        }
      }
      maps[i].push_back(img);
    }
  }
  return Connection(maps);
}

std::size_t sum_of_lengths(const std::vector<ConnectionPath>& paths) {
  std::size_t total = 0;
  for (const auto& p : paths) total += p.length();
  return total;
}

GraphClassZ sum(const GkmGraph& g, const std::vector<GraphClassZ>& classes, int poly_degree) {
  auto out = GraphClassZ::zero(g, poly_degree);
  for (const auto& c : classes) out = out + c;
  return out;
}

}  // namespace

TEST_SUITE("thom") {
  TEST_CASE("paths of the polygon times an edge") {
    for (std::size_t n : {2, 3, 4}) {
      const auto g = fixtures::polygon2n_x_edge(n);
      const auto c = polygon_product_connection(g, 2 * n);
      REQUIRE(is_compatible_connection(g, c));
      const auto paths = connection_paths(g, c);
      std::size_t polygons = 0, squares = 0;
      for (const auto& p : paths) {
        if (p.length() == 2 * n) ++polygons;
        if (p.length() == 4) ++squares;
      }
      // for n = 2 the polygons are squares too
      if (n == 2) CHECK(squares == 2 * n + 2);
      else {
        CHECK(polygons == 2);
        CHECK(squares == 2 * n);
      }
      CHECK(paths.size() == 2 * n + 2);
      CHECK(2 * sum_of_lengths(paths) == 6 * g.vertex_count());
    }
  }

  TEST_CASE("a twisted edge gives one path crossing it twice") {
    const auto g = fixtures::polygon2n_x_edge(2);
    const auto base = polygon_product_connection(g, 4);
    std::vector<StarMap> maps;
    for (std::size_t i = 0; i < g.oriented_count(); ++i) maps.push_back(base.map(OrientedEdge::from_index(i)));
    // swap the two normal images along edge 0 (a0 -> a1, label x) and its reverse
    for (const auto along : {g.forward(0), g.forward(0).bar()}) {
      auto& m = maps[along.index()];
      std::vector<std::size_t> normal;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (g.star(g.source(along))[j] != along) normal.push_back(j);
      REQUIRE(normal.size() == 2);
      std::swap(m[normal[0]], m[normal[1]]);
    }
    const Connection twisted(maps);
    REQUIRE(is_compatible_connection(g, twisted));
    std::size_t through = 0;
    for (const auto& p : connection_paths(g, twisted)) {
      std::size_t uses = 0;
      for (const auto& e : p.edges) uses += e.edge == 0 ? 1 : 0;
      if (uses > 0) {
        ++through;
        CHECK(uses == 2);
      }
    }
    CHECK(through == 1);
  }

  TEST_CASE("path invariants on random graphs") {
    std::mt19937_64 rng(61);
    std::vector<GkmGraph> graphs{fixtures::product({{1, 0}, {0, 1}, {1, 1}}),
                                 fixtures::product({{1, 0}, {0, 1}, {1, 2}})};
    for (int t = 0; t < 10; ++t) graphs.push_back(testing::random_3valent_orientable(rng));
    for (const auto& g : graphs) {
      const auto c = *orientable_connection(g);
      const auto paths = connection_paths(g, c);
      std::map<OrientedEdge, int> normal_count;
      std::size_t pairs = 0;
      for (const auto& p : paths) {
        CHECK(p == ConnectionPath::canonical(p.edges));
        CHECK(p == ConnectionPath::canonical(p.reversed().edges));
        pairs += p.length() * (p == ConnectionPath{p.reversed().edges} ? 1 : 2);
        for (std::size_t j = 0; j < p.length(); ++j) {
          const auto a = p.edges[(j + p.length() - 1) % p.length()];
          CHECK(next_path_edge(g, c, a, p.edges[j]) == p.edges[(j + 1) % p.length()]);
        }
        for (const auto& f : p.normal_edges(g)) ++normal_count[f];
      }
      CHECK(pairs == 6 * g.vertex_count());
      for (std::size_t i = 0; i < g.oriented_count(); ++i) CHECK(normal_count[OrientedEdge::from_index(i)] == 1);
    }
  }

  TEST_CASE("Thom classes are classes") {
    std::mt19937_64 rng(67);
    std::vector<GkmGraph> graphs{fixtures::product({{1, 0}, {0, 1}, {1, 1}}), fixtures::polygon2n_x_edge(3)};
    for (int t = 0; t < 8; ++t) graphs.push_back(testing::random_3valent_orientable(rng));
    for (const auto& g : graphs) {
      const auto c = *orientable_connection(g);
      for (const auto& p : connection_paths(g, c)) {
        const auto th = thom_class_of_path(g, c, p);
        CHECK(th.degree() == 2);
        CHECK(membership_z(g, th));
        CHECK(thom_class_of_path(g, c, p, true) == -th);
        // another representative of the same cycle
        std::vector<OrientedEdge> rotated(p.edges.begin() + 1, p.edges.end());
        rotated.push_back(p.edges.front());
        const auto other = thom_class_of_path(g, c, ConnectionPath{rotated});
        CHECK((other == th || other == -th));
        const auto rev = thom_class_of_path(g, c, p.reversed());
        CHECK((rev == th || rev == -th));
      }
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto th = thom_class_of_edge(g, c, e);
        CHECK(membership_z(g, th));
        for (VertexId v = 0; v < g.vertex_count(); ++v)
          if (v != g.edge(e).u && v != g.edge(e).v) CHECK(th.values[v].is_zero());
      }
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto th = thom_class_of_vertex(g, v);
        CHECK(membership_z(g, th));
        for (VertexId u = 0; u < g.vertex_count(); ++u)
          if (u != v) CHECK(th.values[u].is_zero());
      }
    }
  }

  TEST_CASE("sums reproduce the Stiefel-Whitney components") {
    for (const auto& g : {fixtures::product({{1, 0}, {0, 1}, {1, 1}}), fixtures::product({{1, 0}, {0, 1}, {1, 2}}),
                          fixtures::polygon2n_x_edge(2)}) {
      const auto r = verify_sw3valent(g);
      CHECK(r.degree2);
      CHECK(r.degree4);
      CHECK(r.degree6);
      CHECK(r.connection_independent);
      const auto sw = total_sw(g);
      CHECK(psi(g, sum(g, r.vertex_classes, 3), 2) == sw.component(6));
      CHECK(sw.component(6).is_zero() == false);
    }
    // an even label puts an edge into E(G, 2)
    const auto even = fixtures::product({{1, 0}, {0, 1}, {2, 2}});
    CHECK_FALSE(total_sw(even).component(2).b_part.empty());
    CHECK(verify_sw3valent(even).all_equal());
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(verify_sw3valent(fixtures::paper8()), PreconditionError);
    CHECK_THROWS_AS(thom_class_of_vertex(fixtures::paper8(), 0), PreconditionError);
    const auto g = fixtures::product({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(verify_sw3valent(g), PreconditionError);
  }
}
