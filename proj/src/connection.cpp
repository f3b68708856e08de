#include "gkm/connection.hpp"

#include <algorithm>
#include <deque>

namespace gkm {

OrientedEdge Connection::apply(const GkmGraph& g, OrientedEdge along, OrientedEdge f) const {
  if (g.source(f) != g.source(along)) throw std::invalid_argument("connection applied outside the star");
  return maps_.at(along.index()).at(g.star_position(f));
}

bool label_compatible(const GkmGraph& g, OrientedEdge e, OrientedEdge f, OrientedEdge fp) {
  const Weight& mod = g.label(e);
  return weight_congruent(g.label(f), g.label(fp), mod) || weight_congruent(g.label(f), -g.label(fp), mod);
}

bool is_compatible_connection(const GkmGraph& g, const Connection& c) {
  for (std::size_t i = 0; i < g.oriented_count(); ++i) {
    const auto e = OrientedEdge::from_index(i);
    const auto& m = c.map(e);
    const auto& from = g.star(g.source(e));
    const auto& to = g.star(g.target(e));
    if (m.size() != from.size()) return false;
    std::vector<OrientedEdge> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    std::vector<OrientedEdge> expected = to;
    std::sort(expected.begin(), expected.end());
    if (sorted != expected) return false;
    if (c.apply(g, e, e) != e.bar()) return false;
    for (const auto& f : from) {
      const auto img = c.apply(g, e, f);
      if (c.apply(g, e.bar(), img) != f) return false;
      if (f != e && !label_compatible(g, e, f, img)) return false;
    }
  }
  return true;
}

namespace {

void matchings(const std::vector<OrientedEdge>& left, const std::vector<OrientedEdge>& right,
               const std::vector<std::vector<bool>>& allowed, std::size_t i, std::vector<bool>& used,
               std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (i == left.size()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (used[j] || !allowed[i][j]) continue;
    used[j] = true;
    cur[i] = j;
    matchings(left, right, allowed, i + 1, used, cur, out, limit);
    used[j] = false;
    if (out.size() >= limit) return;
  }
}

}  // namespace

std::vector<StarMap> compatible_bijections(const GkmGraph& g, OrientedEdge e, std::size_t limit) {
  const auto& from = g.star(g.source(e));
  const auto& to = g.star(g.target(e));
  std::vector<OrientedEdge> left, right;
  for (const auto& f : from)
    if (f != e) left.push_back(f);
  for (const auto& f : to)
    if (f != e.bar()) right.push_back(f);
  std::vector<std::vector<bool>> allowed(left.size(), std::vector<bool>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) allowed[i][j] = label_compatible(g, e, left[i], right[j]);

  std::vector<std::vector<std::size_t>> found;
  std::vector<bool> used(right.size(), false);
  std::vector<std::size_t> cur(left.size());
  matchings(left, right, allowed, 0, used, cur, found, limit);

  std::vector<StarMap> out;
  out.reserve(found.size());
  for (const auto& match : found) {
    StarMap m(from.size());
    std::size_t li = 0;
    for (std::size_t pos = 0; pos < from.size(); ++pos) {
      if (from[pos] == e) m[pos] = e.bar();
      else m[pos] = right[match[li++]];
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

StarMap invert(const GkmGraph& g, OrientedEdge e, const StarMap& m) {
  StarMap inv(m.size());
  const auto& from = g.star(g.source(e));
  for (std::size_t pos = 0; pos < m.size(); ++pos) inv[g.star_position(m[pos])] = from[pos];
  return inv;
}

Connection assemble(const GkmGraph& g, const std::vector<const StarMap*>& per_edge) {
  std::vector<StarMap> maps(g.oriented_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const OrientedEdge fwd = g.forward(e);
    maps[fwd.index()] = *per_edge[e];
    maps[fwd.bar().index()] = invert(g, fwd, *per_edge[e]);
  }
  return Connection(std::move(maps));
}

}  // namespace

std::optional<Connection> find_connection(const GkmGraph& g) {
  std::vector<StarMap> chosen;
  chosen.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto options = compatible_bijections(g, g.forward(e), 1);
    if (options.empty()) return std::nullopt;
    chosen.push_back(std::move(options.front()));
  }
  std::vector<const StarMap*> ptrs;
  for (const auto& m : chosen) ptrs.push_back(&m);
  return assemble(g, ptrs);
}

std::vector<Connection> enumerate_connections(const GkmGraph& g, std::size_t limit) {
  std::vector<std::vector<StarMap>> options;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    options.push_back(compatible_bijections(g, g.forward(e)));
    if (options.back().empty()) return {};
  }
  std::vector<Connection> out;
  std::vector<std::size_t> odometer(g.edge_count(), 0);
  while (out.size() < limit) {
    std::vector<const StarMap*> ptrs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) ptrs.push_back(&options[e][odometer[e]]);
    out.push_back(assemble(g, ptrs));
    // last edge varies fastest
    std::size_t pos = g.edge_count();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < options[pos].size()) break;
      odometer[pos] = 0;
      if (pos == 0) return out;
    }
    if (g.edge_count() == 0) break;
  }
  return out;
}

int transport_sign(const GkmGraph& g, OrientedEdge e, OrientedEdge f, OrientedEdge image) {
  const Weight& mod = g.label(e);
  const bool plus = weight_congruent(g.label(f), g.label(image), mod);
  const bool minus = weight_congruent(g.label(f), -g.label(image), mod);
  if (plus == minus)
    throw AmbiguousSign("edge " + std::to_string(e.edge) + ": sign of " + std::to_string(f.edge) + " -> " +
                        std::to_string(image.edge) + (plus ? " is ambiguous" : " does not exist"));
  return plus ? 1 : -1;
}

EtaAssignment eta(const GkmGraph& g, const Connection& c) {
  EtaAssignment out{std::vector<int>(g.oriented_count(), 0)};
  for (std::size_t i = 0; i < g.oriented_count(); ++i) {
    const auto e = OrientedEdge::from_index(i);
    int prod = 1;
    for (const auto& f : g.star(g.source(e))) {
      if (f == e) continue;
      prod *= transport_sign(g, e, f, c.apply(g, e, f));
    }
    out.sign[i] = -prod;
  }
  return out;
}

bool is_orientable(const GkmGraph& g, const Connection& c) {
  const auto signs = eta(g, c);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (signs[g.forward(e)] * signs[g.forward(e).bar()] != 1) return false;

  // With eta(e) == eta(bar e), every closed path is trivial iff eta is a
  // coboundary: phi(t(e)) == phi(i(e)) * eta(e) along a spanning forest.
  std::vector<int> phi(g.vertex_count(), 0);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (phi[root] != 0) continue;
    phi[root] = 1;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const auto& e : g.star(v)) {
        const VertexId w = g.target(e);
        const int expected = phi[v] * signs[e];
        if (phi[w] == 0) {
          phi[w] = expected;
          queue.push_back(w);
        } else if (phi[w] != expected) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace gkm
