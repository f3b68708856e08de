#include "gkm/gkmgraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace gkm {

using nlohmann::json;

std::string OrientedEdge::to_string() const { return std::to_string(edge) + (reversed ? "-" : "+"); }

GkmGraph::GkmGraph(std::size_t torus_rank, std::vector<std::string> vertices, std::vector<Edge> edges)
    : torus_rank_(torus_rank), names_(std::move(vertices)), edges_(std::move(edges)) {
  if (torus_rank_ == 0) throw GraphError("torus_rank must be at least 1");
  std::map<std::string, VertexId> seen;
  for (VertexId v = 0; v < names_.size(); ++v)
    if (!seen.emplace(names_[v], v).second) throw GraphError("vertices[" + std::to_string(v) + "]: duplicate name '" + names_[v] + "'");

  stars_.assign(names_.size(), {});
  positions_.assign(2 * edges_.size(), 0);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    const std::string where = "edges[" + std::to_string(e) + "]";
    if (edge.u >= names_.size() || edge.v >= names_.size()) throw GraphError(where + ": vertex index out of range");
    if (edge.u == edge.v) throw GraphError(where + ": loop at vertex '" + names_[edge.u] + "'");
    if (edge.label.rank() != torus_rank_)
      throw GraphError(where + ": label has length " + std::to_string(edge.label.rank()) + ", expected " +
                       std::to_string(torus_rank_));
    edge.label = edge.label.normalized();
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    for (bool rev : {false, true}) {
      const OrientedEdge oe{e, rev};
      auto& star = stars_[source(oe)];
      positions_[oe.index()] = star.size();
      star.push_back(oe);
    }
  }
  if (!names_.empty()) {
    valence_ = stars_[0].size();
    for (VertexId v = 1; v < names_.size(); ++v)
      if (stars_[v].size() != valence_)
        throw GraphError("vertex '" + names_[v] + "' has valence " + std::to_string(stars_[v].size()) +
                         ", expected " + std::to_string(valence_));
  }
}

VertexId GkmGraph::vertex_index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw GraphError("unknown vertex '" + std::string(name) + "'");
  return static_cast<VertexId>(it - names_.begin());
}

VertexId GkmGraph::source(OrientedEdge e) const {
  const auto& edge = edges_.at(e.edge);
  const VertexId lo = std::min(edge.u, edge.v), hi = std::max(edge.u, edge.v);
  return e.reversed ? hi : lo;
}

VertexId GkmGraph::target(OrientedEdge e) const { return source(e.bar()); }

std::size_t GkmGraph::component_count() const {
  std::vector<VertexId> parent(names_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t count = names_.size();
  for (const auto& e : edges_) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

// ---- JSON --------------------------------------------------------------

GkmGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw GraphError(std::string("malformed JSON: ") + err.what());
  }
  try {
    if (!doc.is_object()) throw GraphError("top level: expected an object");
    for (const char* key : {"torus_rank", "vertices", "edges"})
      if (!doc.contains(key)) throw GraphError(std::string("top level: missing key '") + key + "'");
    const auto k = doc.at("torus_rank").get<std::int64_t>();
    if (k < 1) throw GraphError("torus_rank: must be at least 1");
    auto names = doc.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, VertexId> index;
    for (VertexId v = 0; v < names.size(); ++v) index.emplace(names[v], v);

    std::vector<Edge> edges;
    const auto& arr = doc.at("edges");
    if (!arr.is_array()) throw GraphError("edges: expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& item = arr[i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!item.is_object() || !item.contains("u") || !item.contains("v") || !item.contains("label"))
        throw GraphError(where + ": expected {\"u\", \"v\", \"label\"}");
      Edge e;
      for (const char* end : {"u", "v"}) {
        const auto name = item.at(end).get<std::string>();
        auto it = index.find(name);
        if (it == index.end()) throw GraphError(where + "." + end + ": unknown vertex '" + name + "'");
        (std::string_view(end) == "u" ? e.u : e.v) = it->second;
      }
      e.label = Weight(item.at("label").get<std::vector<std::int64_t>>());
      if (e.label.rank() != static_cast<std::size_t>(k))
        throw GraphError(where + ".label: length " + std::to_string(e.label.rank()) + ", expected " +
                         std::to_string(k));
      if (e.u == e.v) throw GraphError(where + ": loop at vertex '" + names[e.u] + "'");
      edges.push_back(std::move(e));
    }
    return GkmGraph(static_cast<std::size_t>(k), std::move(names), std::move(edges));
  } catch (const json::exception& err) {
    throw GraphError(std::string("bad graph description: ") + err.what());
  }
}

std::string graph_to_json(const GkmGraph& g) {
  json doc;
  doc["torus_rank"] = g.torus_rank();
  doc["vertices"] = g.vertex_names();
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"u", g.vertex_name(e.u)}, {"v", g.vertex_name(e.v)}, {"label", e.label.coords}});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

// ---- conventions ---------------------------------------------------------

Conventions Conventions::defaults(const GkmGraph& g) {
  return {std::vector<bool>(g.edge_count(), false), std::vector<bool>(g.edge_count(), false)};
}

OrientedEdge Conventions::oriented(EdgeId e) const {
  return {e, e < flip_orientation.size() && flip_orientation[e]};
}

Weight Conventions::lift(const GkmGraph& g, EdgeId e) const {
  const Weight& w = g.label(e);
  return (e < flip_sign.size() && flip_sign[e]) ? -w : w;
}

bool Conventions::is_default() const {
  auto none = [](const std::vector<bool>& v) { return std::none_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return none(flip_orientation) && none(flip_sign);
}

// ---- validators ----------------------------------------------------------

CheckReport validate_gkm(const GkmGraph& g) {
  CheckReport report;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.label(e).is_zero()) {
      report.passed = false;
      report.violations.push_back({g.edge(e).u, e, e, "zero label"});
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& star = g.star(v);
    for (std::size_t a = 0; a < star.size(); ++a)
      for (std::size_t b = a + 1; b < star.size(); ++b)
        if (!linearly_independent(g.label(star[a]), g.label(star[b]))) {
          report.passed = false;
          report.violations.push_back({v, star[a].edge, star[b].edge,
                                       "labels " + g.label(star[a]).to_string() + " and " +
                                           g.label(star[b]).to_string() + " are linearly dependent"});
        }
  }
  return report;
}

CheckReport check_coprimality(const GkmGraph& g) {
  CheckReport report;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& star = g.star(v);
    for (std::size_t a = 0; a < star.size(); ++a)
      for (std::size_t b = a + 1; b < star.size(); ++b) {
        const auto common = std::gcd(g.label(star[a]).content(), g.label(star[b]).content());
        if (common != 1) {
          report.passed = false;
          report.violations.push_back({v, star[a].edge, star[b].edge,
                                       "contents share the factor " + std::to_string(common)});
        }
      }
  }
  return report;
}

bool EdgeSetP::contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

std::size_t EdgeSetP::position(EdgeId e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) throw std::out_of_range("edge not in E(p)");
  return static_cast<std::size_t>(it - edges.begin());
}

EdgeSetP edges_div_p(const GkmGraph& g, std::uint64_t p) {
  require_prime(p);
  EdgeSetP out{p, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.label(e).divisible_by(p)) out.edges.push_back(e);
  return out;
}

bool is_effective(const GkmGraph& g) {
  IntMatrix m(g.edge_count(), g.torus_rank());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (std::size_t i = 0; i < g.torus_rank(); ++i) m(e, i) = static_cast<long>(g.label(e).coords[i]);
  return rank(m) == g.torus_rank();
}

}  // namespace gkm
