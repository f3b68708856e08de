#pragma once

#include "gkm/connection.hpp"
#include "gkm/exactalg.hpp"
#include "gkm/gkmgraph.hpp"
#include "gkm/polyring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gkm {

/// Tuple of integer polynomials indexed by vertices, all of polynomial
/// degree `poly_degree` (cohomological degree 2 * poly_degree).
struct GraphClassZ {
  int poly_degree = 0;
  std::vector<GradedPoly> values;

  static GraphClassZ zero(const GkmGraph& g, int poly_degree);
  static GraphClassZ constant(const GkmGraph& g, const Int& c);

  int degree() const { return 2 * poly_degree; }
  bool is_zero() const;
  GraphClassZ operator+(const GraphClassZ& o) const;
  GraphClassZ operator-(const GraphClassZ& o) const;
  GraphClassZ operator-() const;
  /// Componentwise product.
  GraphClassZ operator*(const GraphClassZ& o) const;
  /// Product with a polynomial from H*(BT).
  GraphClassZ times(const GradedPoly& f) const;
  bool operator==(const GraphClassZ& o) const;
};

/// Element of H*_T(G; Z_p) + B*(G, p): vertex values of polynomial degree d
/// and one polynomial of degree d - 1 per edge in E(G, p), in ascending edge
/// order.
struct GraphClassModP {
  std::uint64_t p = 2;
  int poly_degree = 0;
  std::vector<GradedPoly> vertex;
  std::vector<EdgeId> b_edges;
  std::vector<GradedPoly> b_part;

  static GraphClassModP zero(const GkmGraph& g, std::uint64_t p, int poly_degree);

  int degree() const { return 2 * poly_degree; }
  bool is_zero() const;
  GraphClassModP operator+(const GraphClassModP& o) const;
  bool operator==(const GraphClassModP& o) const;
};

/// Basis of one graded piece of graph cohomology, as coefficient vectors in
/// the concatenated monomial coordinates of all vertices.
struct CohomLattice {
  Ring ring;
  int poly_degree = 0;
  std::size_t nvars = 0;
  std::size_t nvertices = 0;
  std::vector<IntVector> basis;

  int degree() const { return 2 * poly_degree; }
  std::size_t rank() const { return basis.size(); }
  std::vector<std::vector<GradedPoly>> basis_values() const;
  /// Integer lattice view (only meaningful over Z).
  LatticeBasis lattice() const;
};

class DegreeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

IntVector flatten(const std::vector<GradedPoly>& values);
std::vector<GradedPoly> unflatten(std::span<const Int> coords, Ring ring, std::size_t nvars,
                                  std::size_t nvertices, int poly_degree);

/// H^{degree}_T(G; Z), degree even.
CohomLattice compute_h_z(const GkmGraph& g, int degree);

/// H^{degree}_T(G; Z_p): RREF basis over F_p.
CohomLattice compute_h_modp(const GkmGraph& g, int degree, std::uint64_t p);

bool membership_z(const GkmGraph& g, const GraphClassZ& cls);
bool membership_modp(const GkmGraph& g, const std::vector<GradedPoly>& values);

class PsiError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

GraphClassModP psi(const GkmGraph& g, const GraphClassZ& cls, std::uint64_t p,
                   const Conventions& conv);
GraphClassModP psi(const GkmGraph& g, const GraphClassZ& cls, std::uint64_t p);

/// (f, g)(f', g') = (f f', f g' + f' g), f evaluated at i(e).
GraphClassModP product_modp(const GkmGraph& g, const GraphClassModP& a, const GraphClassModP& b,
                            const Conventions& conv);
GraphClassModP product_modp(const GkmGraph& g, const GraphClassModP& a, const GraphClassModP& b);

/// Some f in H_T(G; Z) with psi(f) == target, or nullopt.
std::optional<GraphClassZ> psi_image_contains(const GkmGraph& g, const GraphClassModP& target,
                                              const Conventions& conv);
std::optional<GraphClassZ> psi_image_contains(const GkmGraph& g, const GraphClassModP& target);

struct PsiImageRanks {
  std::size_t image = 0;         // dim of psi(H^{2d}(Z)) in H(Z_p) + B
  std::size_t vertex_image = 0;  // dim of its projection to H(Z_p)
};
PsiImageRanks psi_image_ranks(const GkmGraph& g, int degree, std::uint64_t p);

/// Generator counts per polynomial degree that a free module over a
/// polynomial ring in `nvars` variables would need to have the given ranks.
/// A negative entry means the ranks are not those of a free module.
std::vector<long> free_generator_counts(const std::vector<std::size_t>& ranks, std::size_t nvars);

}  // namespace gkm
