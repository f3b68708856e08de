#pragma once

#include "gkm/gkmgraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gkm::fixtures {

/// The 8-dimensional 4-valent T^2 example with double edges {x, 2y},
/// {x+y, x+2y}, {x, 2y}, {x-y, x-2y} around a square. Vertices start at the
/// lower right and run counterclockwise: LR, UR, UL, LL.
GkmGraph paper8();

/// Single edge between two vertices.
GkmGraph sphere(const Weight& w);

/// Product of single-edge graphs: the cube graph on {0,1}^m, edges in
/// direction j labelled w_j.
GkmGraph product(const std::vector<Weight>& weights);

/// 2n-gon with alternating labels (1,0), (0,1) times an edge labelled (1,1).
GkmGraph polygon2n_x_edge(std::size_t n);

/// Resolves "paper8", "sphere(2,0)", "product(1,0;0,1;1,3)", "polygon2n_x_edge(3)".
GkmGraph by_name(std::string_view name);

std::vector<std::string> names();

}  // namespace gkm::fixtures

namespace gkm {

/// "fixtures:<name>" or a path to a JSON graph file.
GkmGraph load_graph(const std::string& source);

}  // namespace gkm
