#pragma once

#include "gkm/polyring.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gkm {

using VertexId = std::size_t;
using EdgeId = std::size_t;

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An edge with a direction. The forward direction of every edge runs from
/// its lower vertex index to its higher one.
struct OrientedEdge {
  EdgeId edge = 0;
  bool reversed = false;

  OrientedEdge bar() const { return {edge, !reversed}; }
  std::size_t index() const { return 2 * edge + (reversed ? 1 : 0); }
  static OrientedEdge from_index(std::size_t i) { return {i / 2, (i % 2) == 1}; }

  auto operator<=>(const OrientedEdge&) const = default;
  std::string to_string() const;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight label;  // sign-normalised

  bool operator==(const Edge&) const = default;
};

class GkmGraph {
public:
  GkmGraph() = default;
  /// Validates structure: names unique, endpoints in range, label lengths,
  /// no loops, constant valence.
  GkmGraph(std::size_t torus_rank, std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t torus_rank() const { return torus_rank_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t oriented_count() const { return 2 * edges_.size(); }
  std::size_t valence() const { return valence_; }

  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  VertexId vertex_index(std::string_view name) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Weight& label(EdgeId e) const { return edges_.at(e).label; }
  const Weight& label(OrientedEdge e) const { return edges_.at(e.edge).label; }

  VertexId source(OrientedEdge e) const;
  VertexId target(OrientedEdge e) const;
  OrientedEdge forward(EdgeId e) const { return {e, false}; }
  /// Oriented edges starting at v, by edge id.
  const std::vector<OrientedEdge>& star(VertexId v) const { return stars_.at(v); }
  /// Position of e in star(source(e)).
  std::size_t star_position(OrientedEdge e) const { return positions_.at(e.index()); }

  std::size_t component_count() const;

  bool operator==(const GkmGraph&) const = default;

private:
  std::size_t torus_rank_ = 0;
  std::size_t valence_ = 0;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<OrientedEdge>> stars_;
  std::vector<std::size_t> positions_;
};

/// Reads the JSON graph format:
/// {"torus_rank": k, "vertices": [...], "edges": [{"u":..,"v":..,"label":[..]}, ...]}
GkmGraph parse_graph(std::string_view text);
std::string graph_to_json(const GkmGraph& g);

/// Per-edge choices that the mod-p constructions depend on: which endpoint is
/// initial and which sign lifts the label. Defaults are the forward
/// orientation and the sign-normalised label.
struct Conventions {
  std::vector<bool> flip_orientation;
  std::vector<bool> flip_sign;

  static Conventions defaults(const GkmGraph& g);
  OrientedEdge oriented(EdgeId e) const;
  Weight lift(const GkmGraph& g, EdgeId e) const;
  bool is_default() const;
};

struct PairViolation {
  VertexId vertex = 0;
  EdgeId first = 0;
  EdgeId second = 0;
  std::string reason;
};

struct CheckReport {
  bool passed = true;
  std::vector<PairViolation> violations;
};

/// Adjacent labels pairwise linearly independent over Q, labels nonzero.
CheckReport validate_gkm(const GkmGraph& g);

/// Adjacent labels have coprime contents.
CheckReport check_coprimality(const GkmGraph& g);

struct EdgeSetP {
  std::uint64_t p = 0;
  std::vector<EdgeId> edges;  // ascending

  bool contains(EdgeId e) const;
  std::size_t position(EdgeId e) const;
};

EdgeSetP edges_div_p(const GkmGraph& g, std::uint64_t p);

/// Labels span Q^k.
bool is_effective(const GkmGraph& g);

}  // namespace gkm
