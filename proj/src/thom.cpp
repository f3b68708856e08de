#include "gkm/thom.hpp"

#include <algorithm>
#include <set>

namespace gkm {

ConnectionPath ConnectionPath::canonical(std::vector<OrientedEdge> cycle) {
  std::vector<OrientedEdge> rev;
  for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) rev.push_back(it->bar());
  std::vector<OrientedEdge> best = cycle;
  for (auto* seq : {&cycle, &rev})
    for (std::size_t r = 0; r < seq->size(); ++r) {
      std::vector<OrientedEdge> cand(seq->begin() + static_cast<std::ptrdiff_t>(r), seq->end());
      cand.insert(cand.end(), seq->begin(), seq->begin() + static_cast<std::ptrdiff_t>(r));
      if (cand < best) best = std::move(cand);
    }
  return {std::move(best)};
}

ConnectionPath ConnectionPath::reversed() const {
  std::vector<OrientedEdge> rev;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) rev.push_back(it->bar());
  return {std::move(rev)};
}

std::vector<OrientedEdge> ConnectionPath::normal_edges(const GkmGraph& g) const {
  if (g.valence() != 3) throw PreconditionError("normal edges are defined for 3-valent graphs");
  std::vector<OrientedEdge> out;
  const std::size_t l = edges.size();
  for (std::size_t j = 0; j < l; ++j) {
    const OrientedEdge prev_bar = edges[(j + l - 1) % l].bar();
    const OrientedEdge cur = edges[j];
    for (const auto& f : g.star(g.source(cur)))
      if (f != prev_bar && f != cur) out.push_back(f);
  }
  return out;
}

OrientedEdge next_path_edge(const GkmGraph& g, const Connection& c, OrientedEdge a, OrientedEdge b) {
  return c.apply(g, b, a.bar());
}

std::vector<ConnectionPath> connection_paths(const GkmGraph& g, const Connection& c) {
  std::set<ConnectionPath> found;
  std::set<std::pair<OrientedEdge, OrientedEdge>> seen;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const auto& in : g.star(v))
      for (const auto& out : g.star(v)) {
        if (in == out) continue;
        const OrientedEdge a = in.bar();  // arrives at v
        if (seen.count({a, out})) continue;
        std::vector<OrientedEdge> cycle;
        OrientedEdge x = a, y = out;
        do {
          seen.insert({x, y});
          cycle.push_back(x);
          const OrientedEdge z = next_path_edge(g, c, x, y);
          x = y;
          y = z;
        } while (!(x == a && y == out));
        found.insert(ConnectionPath::canonical(std::move(cycle)));
      }
  return {found.begin(), found.end()};
}

namespace {

GradedPoly linear(const Weight& w) { return linear_from_weight(w, Ring::integers()); }

void require_3valent_t2(const GkmGraph& g) {
  if (g.valence() != 3) throw PreconditionError("Thom classes need a 3-valent graph");
  if (g.torus_rank() != 2) throw PreconditionError("Thom classes need torus rank 2");
}

GraphClassZ checked(const GkmGraph& g, GraphClassZ cls, const std::string& what) {
  if (!membership_z(g, cls)) throw ThomError(what + " fails an edge congruence");
  return cls;
}

}  // namespace

GraphClassZ thom_class_of_path(const GkmGraph& g, const Connection& c, const ConnectionPath& path,
                               bool negate_initial) {
  require_3valent_t2(g);
  const auto normals = path.normal_edges(g);
  const std::size_t l = normals.size();
  for (std::size_t j = 0; j < l; ++j)
    if (next_path_edge(g, c, path.edges[j], path.edges[(j + 1) % l]) != path.edges[(j + 2) % l])
      throw std::invalid_argument("not a connection path for this connection");
  {
    auto sorted = normals;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ThomError("an oriented edge is normal to the path twice");
  }
  const std::size_t start = static_cast<std::size_t>(std::min_element(normals.begin(), normals.end()) - normals.begin());

  // beta(f_j) == beta(f_{j-1}) mod alpha(e_{j-1}); f_j = nabla_{e_{j-1}}(f_{j-1})
  std::vector<Weight> beta(l);
  beta[start] = negate_initial ? -g.label(normals[start]) : g.label(normals[start]);
  for (std::size_t step = 1; step < l; ++step) {
    const std::size_t j = (start + step) % l;
    const std::size_t prev = (j + l - 1) % l;
    const int eps = transport_sign(g, path.edges[prev], normals[prev], normals[j]);
    const bool prev_positive = beta[prev] == g.label(normals[prev]);
    beta[j] = (eps > 0) == prev_positive ? g.label(normals[j]) : -g.label(normals[j]);
  }
  const std::size_t last = (start + l - 1) % l;
  if (!weight_congruent(beta[start], beta[last], g.label(path.edges[last])))
    throw ThomError("wrap-around congruence fails; the graph is not orientable for this connection");

  GraphClassZ out = GraphClassZ::zero(g, 1);
  for (std::size_t j = 0; j < l; ++j) out.values[g.source(normals[j])] += linear(beta[j]);
  return checked(g, std::move(out), "Thom class of a connection path");
}

GraphClassZ thom_class_of_edge(const GkmGraph& g, const Connection& c, EdgeId e) {
  require_3valent_t2(g);
  const OrientedEdge fwd = g.forward(e);
  GradedPoly at_i = GradedPoly::constant(Ring::integers(), 2, 1);
  GradedPoly at_t = at_i;
  for (const auto& l : g.star(g.source(fwd))) {
    if (l == fwd) continue;
    const OrientedEdge image = c.apply(g, fwd, l);
    const int eps = transport_sign(g, fwd, l, image);
    at_i = at_i * linear(g.label(l));
    at_t = at_t * linear(eps > 0 ? g.label(image) : -g.label(image));
  }
  GraphClassZ out = GraphClassZ::zero(g, 2);
  out.values[g.source(fwd)] = at_i;
  out.values[g.target(fwd)] = at_t;
  return checked(g, std::move(out), "Thom class of edge " + std::to_string(e));
}

GraphClassZ thom_class_of_vertex(const GkmGraph& g, VertexId v) {
  if (g.valence() != 3) throw PreconditionError("Thom classes need a 3-valent graph");
  GradedPoly prod = GradedPoly::constant(Ring::integers(), g.torus_rank(), 1);
  for (const auto& e : g.star(v)) prod = prod * linear(g.label(e));
  GraphClassZ out = GraphClassZ::zero(g, 3);
  out.values[v] = prod;
  return checked(g, std::move(out), "Thom class of vertex " + g.vertex_name(v));
}

std::optional<Connection> orientable_connection(const GkmGraph& g, std::size_t search_limit) {
  if (auto c = find_connection(g); c && is_orientable(g, *c)) return c;
  for (auto& c : enumerate_connections(g, search_limit))
    if (is_orientable(g, c)) return std::move(c);
  return std::nullopt;
}

namespace {

GraphClassZ sum(const GkmGraph& g, int poly_degree, const std::vector<GraphClassZ>& classes) {
  GraphClassZ total = GraphClassZ::zero(g, poly_degree);
  for (const auto& c : classes) total = total + c;
  return total;
}

struct LowDegreeCheck {
  bool degree2 = false;
  bool degree4 = false;
};

LowDegreeCheck compare_low(const GkmGraph& g, const Connection& c, const TotalSwClass& sw,
                           std::vector<ConnectionPath>* paths_out, std::vector<GraphClassZ>* path_out,
                           std::vector<GraphClassZ>* edge_out) {
  const auto paths = connection_paths(g, c);
  std::vector<GraphClassZ> path_classes, edge_classes;
  for (const auto& path : paths) path_classes.push_back(thom_class_of_path(g, c, path));
  for (EdgeId e = 0; e < g.edge_count(); ++e) edge_classes.push_back(thom_class_of_edge(g, c, e));
  LowDegreeCheck out;
  out.degree2 = psi(g, sum(g, 1, path_classes), 2) == sw.component(2);
  out.degree4 = psi(g, sum(g, 2, edge_classes), 2) == sw.component(4);
  if (paths_out) *paths_out = paths;
  if (path_out) *path_out = std::move(path_classes);
  if (edge_out) *edge_out = std::move(edge_classes);
  return out;
}

}  // namespace

Sw3ValentReport verify_sw3valent(const GkmGraph& g) {
  if (g.valence() != 3) throw PreconditionError("verify_sw3valent needs a 3-valent graph, got valence " +
                                                std::to_string(g.valence()));
  if (g.torus_rank() != 2) throw PreconditionError("verify_sw3valent needs torus rank 2");
  auto conn = orientable_connection(g);
  if (!conn) throw PreconditionError("no orientable compatible connection found");

  Sw3ValentReport report;
  report.connection = *conn;
  const TotalSwClass sw = total_sw(g);
  const auto low = compare_low(g, *conn, sw, &report.paths, &report.path_classes, &report.edge_classes);
  report.degree2 = low.degree2;
  report.degree4 = low.degree4;
  for (VertexId v = 0; v < g.vertex_count(); ++v) report.vertex_classes.push_back(thom_class_of_vertex(g, v));
  report.degree6 = psi(g, sum(g, 3, report.vertex_classes), 2) == sw.component(6);

  const auto all = enumerate_connections(g, 9);
  if (all.size() <= 8) {
    for (const auto& c : all) {
      if (!is_orientable(g, c)) continue;
      ++report.connections_checked;
      const auto other = compare_low(g, c, sw, nullptr, nullptr, nullptr);
      if (other.degree2 != low.degree2 || other.degree4 != low.degree4) report.connection_independent = false;
    }
  }
  return report;
}

}  // namespace gkm
