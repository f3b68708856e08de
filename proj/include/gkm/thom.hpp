#pragma once

#include "gkm/charclasses.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/connection.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gkm {

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ThomError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Closed path e_1..e_l with nabla_{e_i}(bar e_{i-1}) = e_{i+1}, stored as the
/// lexicographically least rotation of itself or of its reversal.
struct ConnectionPath {
  std::vector<OrientedEdge> edges;

  std::size_t length() const { return edges.size(); }
  static ConnectionPath canonical(std::vector<OrientedEdge> cycle);
  ConnectionPath reversed() const;
  /// f_j: the edge at i(e_j) that is neither bar e_{j-1} nor e_j (3-valent).
  std::vector<OrientedEdge> normal_edges(const GkmGraph& g) const;

  bool operator==(const ConnectionPath&) const = default;
  auto operator<=>(const ConnectionPath&) const = default;
};

/// Successor of the adjacent pair (a, b): (b, nabla_b(bar a)).
OrientedEdge next_path_edge(const GkmGraph& g, const Connection& c, OrientedEdge a, OrientedEdge b);

/// All connection paths, each once, sorted.
std::vector<ConnectionPath> connection_paths(const GkmGraph& g, const Connection& c);

/// Th(c) in H^2_T(G; Z). beta starts at the sign-normalised lift of the least
/// normal edge, negated if requested.
GraphClassZ thom_class_of_path(const GkmGraph& g, const Connection& c, const ConnectionPath& path,
                               bool negate_initial = false);

/// Th(e) in H^4_T(G; Z) for the forward orientation of e.
GraphClassZ thom_class_of_edge(const GkmGraph& g, const Connection& c, EdgeId e);

/// Th(v) in H^6_T(G; Z).
GraphClassZ thom_class_of_vertex(const GkmGraph& g, VertexId v);

/// find_connection's result if it is orientable, else the first orientable
/// one among up to `search_limit` enumerated connections.
std::optional<Connection> orientable_connection(const GkmGraph& g, std::size_t search_limit = 4096);

struct Sw3ValentReport {
  Connection connection;
  std::vector<ConnectionPath> paths;
  std::vector<GraphClassZ> path_classes;
  std::vector<GraphClassZ> edge_classes;
  std::vector<GraphClassZ> vertex_classes;
  /// Psi of the three sums against the SW components in degrees 2, 4, 6.
  bool degree2 = false;
  bool degree4 = false;
  bool degree6 = false;
  /// The same comparison repeated over every orientable connection when at
  /// most 8 compatible connections exist (true when not attempted).
  bool connection_independent = true;
  std::size_t connections_checked = 0;

  bool all_equal() const { return degree2 && degree4 && degree6; }
};

Sw3ValentReport verify_sw3valent(const GkmGraph& g);

}  // namespace gkm
