#pragma once

#include "gkm/cohomology.hpp"
#include "gkm/connection.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

class NoConnection : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Components of the combinatorial total Stiefel-Whitney class, p = 2,
/// indexed by polynomial degree 0..valence.
struct TotalSwClass {
  std::vector<GraphClassModP> components;

  /// Component in cohomological degree `degree`; DegreeError unless even and in 0..2n.
  const GraphClassModP& component(int degree) const;
  int top_degree() const { return 2 * (static_cast<int>(components.size()) - 1); }
};

/// Sign and bijection choices for one edge of E(G, 2). Signs are +-1 factors
/// applied to the sign-normalised labels; `star_signs` follows star(i(e)) and
/// includes e itself, `bar_sign` is the sign used for bar e at t(e).
struct SwEdgeChoice {
  StarMap bijection;
  std::vector<int> star_signs;
  int bar_sign = 1;
};

/// f_e as polynomials of degree d - 1 over Z_2, d = 0..valence, for the
/// forward orientation of e.
std::vector<GradedPoly> sw_edge_part(const GkmGraph& g, EdgeId e, const SwEdgeChoice& choice);

/// The default choice: bijection from find_connection (or a local search),
/// all signs +1.
SwEdgeChoice default_sw_choice(const GkmGraph& g, EdgeId e);

TotalSwClass total_sw(const GkmGraph& g);

struct IndependenceReport {
  bool independent = true;
  std::size_t choices_checked = 0;
  bool exhaustive = true;
};

/// Recomputes f_e over all compatible bijections and sign lifts, or over
/// `trials` random ones when there are more than `exhaustive_limit`.
IndependenceReport sw_choice_independence(const GkmGraph& g, EdgeId e, std::size_t trials, std::uint64_t seed,
                                          std::size_t exhaustive_limit = 4096);

struct SpinVerdict {
  bool equivariant_spin = false;
  bool spin = false;
  /// Per vertex: sum of adjacent labels reduced mod 2 (degree 1 over Z_2).
  std::vector<GradedPoly> vertex_sums;
  /// Per e in E(G, 2), ascending: the integer quotient of condition (b).
  std::vector<EdgeId> b_edges;
  std::vector<Int> b_values;
};

SpinVerdict spin_check(const GkmGraph& g);

struct ObstructionReport {
  bool obstructed = false;
  std::optional<int> failing_degree;  // cohomological
  TotalSwClass sw;
  /// Per polynomial degree d: a preimage of the degree-2d component, if any.
  std::vector<std::optional<GraphClassZ>> preimages;
  static constexpr const char* note = "PASSES means no obstruction was found; it does not prove realizability";
  std::string verdict() const { return obstructed ? "OBSTRUCTED" : "PASSES"; }
};

ObstructionReport realizability_obstruction(const GkmGraph& g);

}  // namespace gkm
