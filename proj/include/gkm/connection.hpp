#pragma once

#include "gkm/gkmgraph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gkm {

class AmbiguousSign : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A local bijection E_{i(e)} -> E_{t(e)}, indexed by position in star(i(e)).
using StarMap = std::vector<OrientedEdge>;

/// Per oriented edge e, a bijection nabla_e: E_{i(e)} -> E_{t(e)}.
class Connection {
public:
  Connection() = default;
  explicit Connection(std::vector<StarMap> maps) : maps_(std::move(maps)) {}

  /// nabla_along(f), f in star(source(along)).
  OrientedEdge apply(const GkmGraph& g, OrientedEdge along, OrientedEdge f) const;
  const StarMap& map(OrientedEdge along) const { return maps_.at(along.index()); }

  bool operator==(const Connection&) const = default;

private:
  std::vector<StarMap> maps_;
};

/// alpha(f) == +-alpha(f') mod alpha(e).
bool label_compatible(const GkmGraph& g, OrientedEdge e, OrientedEdge f, OrientedEdge fp);

/// Checks nabla_e(e) = bar e, nabla_{bar e} = nabla_e^{-1}, bijectivity and
/// the congruence condition.
bool is_compatible_connection(const GkmGraph& g, const Connection& c);

/// All compatible local bijections for the oriented edge e, lexicographic.
std::vector<StarMap> compatible_bijections(const GkmGraph& g, OrientedEdge e, std::size_t limit = SIZE_MAX);

/// Lexicographically minimal compatible connection, if any.
std::optional<Connection> find_connection(const GkmGraph& g);

std::vector<Connection> enumerate_connections(const GkmGraph& g, std::size_t limit);

/// eta(e) = -prod_{f in E_{i(e)} \ {e}} eps_f, stored by oriented index.
struct EtaAssignment {
  std::vector<int> sign;
  int operator[](OrientedEdge e) const { return sign.at(e.index()); }
};

/// The unique eps with alpha(f) == eps * alpha(nabla_e f) mod alpha(e),
/// for the sign-normalised lifts. Throws AmbiguousSign if both or neither hold.
int transport_sign(const GkmGraph& g, OrientedEdge e, OrientedEdge f, OrientedEdge image);

EtaAssignment eta(const GkmGraph& g, const Connection& c);

bool is_orientable(const GkmGraph& g, const Connection& c);

}  // namespace gkm
