#include "gkm/cohomology.hpp"

#include <algorithm>

namespace gkm {

namespace {

void require_same_shape(const std::vector<GradedPoly>& a, const std::vector<GradedPoly>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("graph classes on different vertex sets");
}

std::vector<GradedPoly> zip(const std::vector<GradedPoly>& a, const std::vector<GradedPoly>& b, bool subtract) {
  require_same_shape(a, b);
  std::vector<GradedPoly> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(subtract ? a[i] - b[i] : a[i] + b[i]);
  return out;
}

}  // namespace

GraphClassZ GraphClassZ::zero(const GkmGraph& g, int poly_degree) {
  GraphClassZ c;
  c.poly_degree = poly_degree;
  c.values.assign(g.vertex_count(), GradedPoly(Ring::integers(), g.torus_rank(), poly_degree));
  return c;
}

GraphClassZ GraphClassZ::constant(const GkmGraph& g, const Int& value) {
  GraphClassZ c;
  c.values.assign(g.vertex_count(), GradedPoly::constant(Ring::integers(), g.torus_rank(), value));
  return c;
}

bool GraphClassZ::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const GradedPoly& f) { return f.is_zero(); });
}

GraphClassZ GraphClassZ::operator+(const GraphClassZ& o) const { return {poly_degree, zip(values, o.values, false)}; }
GraphClassZ GraphClassZ::operator-(const GraphClassZ& o) const { return {poly_degree, zip(values, o.values, true)}; }

GraphClassZ GraphClassZ::operator-() const {
  GraphClassZ c{poly_degree, {}};
  for (const auto& f : values) c.values.push_back(-f);
  return c;
}

GraphClassZ GraphClassZ::operator*(const GraphClassZ& o) const {
  require_same_shape(values, o.values);
  GraphClassZ c{poly_degree + o.poly_degree, {}};
  for (std::size_t i = 0; i < values.size(); ++i) c.values.push_back(values[i] * o.values[i]);
  return c;
}

GraphClassZ GraphClassZ::times(const GradedPoly& f) const {
  GraphClassZ c{poly_degree + f.degree(), {}};
  for (const auto& v : values) c.values.push_back(v * f);
  return c;
}

bool GraphClassZ::operator==(const GraphClassZ& o) const { return poly_degree == o.poly_degree && values == o.values; }

GraphClassModP GraphClassModP::zero(const GkmGraph& g, std::uint64_t p, int poly_degree) {
  const Ring r = Ring::mod(p);
  GraphClassModP c;
  c.p = p;
  c.poly_degree = poly_degree;
  c.vertex.assign(g.vertex_count(), GradedPoly(r, g.torus_rank(), poly_degree));
  c.b_edges = edges_div_p(g, p).edges;
  c.b_part.assign(c.b_edges.size(), GradedPoly(r, g.torus_rank(), poly_degree - 1));
  return c;
}

bool GraphClassModP::is_zero() const {
  auto z = [](const GradedPoly& f) { return f.is_zero(); };
  return std::all_of(vertex.begin(), vertex.end(), z) && std::all_of(b_part.begin(), b_part.end(), z);
}

GraphClassModP GraphClassModP::operator+(const GraphClassModP& o) const {
  if (p != o.p || b_edges != o.b_edges) throw RingMismatch("adding classes over different primes");
  GraphClassModP c = *this;
  c.vertex = zip(vertex, o.vertex, false);
  c.b_part = zip(b_part, o.b_part, false);
  return c;
}

bool GraphClassModP::operator==(const GraphClassModP& o) const {
  return p == o.p && poly_degree == o.poly_degree && vertex == o.vertex && b_edges == o.b_edges &&
         b_part == o.b_part;
}

IntVector flatten(const std::vector<GradedPoly>& values) {
  IntVector out;
  for (const auto& f : values) out.insert(out.end(), f.coeffs().begin(), f.coeffs().end());
  return out;
}

std::vector<GradedPoly> unflatten(std::span<const Int> coords, Ring ring, std::size_t nvars, std::size_t nvertices,
                                  int poly_degree) {
  const std::size_t m = monomial_count(nvars, poly_degree);
  if (coords.size() != m * nvertices) throw std::invalid_argument("unflatten: wrong coordinate count");
  std::vector<GradedPoly> out;
  for (std::size_t q = 0; q < nvertices; ++q)
    out.push_back(GradedPoly::from_coeffs(ring, nvars, poly_degree,
                                          IntVector(coords.begin() + q * m, coords.begin() + (q + 1) * m)));
  return out;
}

std::vector<std::vector<GradedPoly>> CohomLattice::basis_values() const {
  std::vector<std::vector<GradedPoly>> out;
  for (const auto& v : basis) out.push_back(unflatten(v, ring, nvars, nvertices, poly_degree));
  return out;
}

LatticeBasis CohomLattice::lattice() const {
  return LatticeBasis::from_generators(nvertices * monomial_count(nvars, poly_degree), basis);
}

namespace {

int poly_degree_of(int degree) {
  if (degree < 0 || degree % 2 != 0)
    throw DegreeError("cohomological degree must be even and non-negative, got " + std::to_string(degree));
  return degree / 2;
}

// Rows (e, mu): coefficient of mu in f_{i(e)} - f_{t(e)}, forward orientation.
IntMatrix difference_matrix(const GkmGraph& g, int d) {
  const std::size_t m = monomial_count(g.torus_rank(), d);
  IntMatrix out(g.edge_count() * m, g.vertex_count() * m);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (std::size_t mu = 0; mu < m; ++mu) {
      out(e * m + mu, g.edge(e).u * m + mu) = 1;
      out(e * m + mu, g.edge(e).v * m + mu) = -1;
    }
  return out;
}

// Block diagonal: block e multiplies a degree d-1 polynomial by l_{lift(e)}.
IntMatrix label_matrix(const GkmGraph& g, int d, const Conventions& conv) {
  const std::size_t k = g.torus_rank();
  const std::size_t m = monomial_count(k, d);
  const auto& lower = monomials(k, d - 1);
  IntMatrix out(g.edge_count() * m, g.edge_count() * lower.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Weight w = conv.lift(g, e);
    for (std::size_t nu = 0; nu < lower.size(); ++nu)
      for (std::size_t i = 0; i < k; ++i) {
        if (w.coords[i] == 0) continue;
        Exponent up = lower[nu];
        ++up[i];
        out(e * m + monomial_index(k, up), e * lower.size() + nu) += w.coords[i];
      }
  }
  return out;
}

}  // namespace

CohomLattice compute_h_z(const GkmGraph& g, int degree) {
  const int d = poly_degree_of(degree);
  CohomLattice out{Ring::integers(), d, g.torus_rank(), g.vertex_count(), {}};
  const auto conv = Conventions::defaults(g);
  const LatticeBasis lat = kernel_into_cokernel(difference_matrix(g, d), label_matrix(g, d, conv));
  for (std::size_t i = 0; i < lat.rank(); ++i) out.basis.push_back(lat.vector(i));
  return out;
}

CohomLattice compute_h_modp(const GkmGraph& g, int degree, std::uint64_t p) {
  const Ring ring = Ring::mod(p);
  const int d = poly_degree_of(degree);
  const std::size_t unknowns = g.vertex_count() * monomial_count(g.torus_rank(), d);
  const auto conv = Conventions::defaults(g);
  IntMatrix lab = label_matrix(g, d, conv);
  for (std::size_t i = 0; i < lab.rows(); ++i)
    for (std::size_t j = 0; j < lab.cols(); ++j) lab(i, j) = -lab(i, j);
  const auto ker = modp_kernel(hstack(difference_matrix(g, d), lab), p);
  std::vector<ModVector> projected;
  for (const auto& v : ker) projected.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(unknowns));
  CohomLattice out{ring, d, g.torus_rank(), g.vertex_count(), {}};
  for (const auto& v : modp_span_basis(std::move(projected), p)) {
    IntVector row;
    for (auto x : v) row.emplace_back(static_cast<unsigned long>(x));
    out.basis.push_back(std::move(row));
  }
  return out;
}

namespace {

bool satisfies_congruences(const GkmGraph& g, const std::vector<GradedPoly>& values) {
  if (values.size() != g.vertex_count()) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (!congruent_mod_weight(values[ed.u], values[ed.v], ed.label)) return false;
  }
  return true;
}

}  // namespace

bool membership_z(const GkmGraph& g, const GraphClassZ& cls) {
  for (const auto& f : cls.values)
    if (!f.ring().is_integers() || f.degree() != cls.poly_degree) return false;
  return satisfies_congruences(g, cls.values);
}

bool membership_modp(const GkmGraph& g, const std::vector<GradedPoly>& values) {
  for (const auto& f : values)
    if (f.ring().is_integers()) return false;
  return satisfies_congruences(g, values);
}

GraphClassModP psi(const GkmGraph& g, const GraphClassZ& cls, std::uint64_t p, const Conventions& conv) {
  if (!membership_z(g, cls)) throw PsiError("psi: argument is not in H_T(G; Z)");
  GraphClassModP out;
  out.p = p;
  out.poly_degree = cls.poly_degree;
  for (const auto& f : cls.values) out.vertex.push_back(reduce_mod_p(f, p));
  out.b_edges = edges_div_p(g, p).edges;
  for (EdgeId e : out.b_edges) {
    const OrientedEdge o = conv.oriented(e);
    const auto q = divide_by_linear(cls.values[g.source(o)] - cls.values[g.target(o)], conv.lift(g, e));
    if (!q) throw PsiError("psi: difference along edge " + std::to_string(e) + " is not divisible");
    out.b_part.push_back(reduce_mod_p(*q, p));
  }
  return out;
}

GraphClassModP psi(const GkmGraph& g, const GraphClassZ& cls, std::uint64_t p) {
  return psi(g, cls, p, Conventions::defaults(g));
}

GraphClassModP product_modp(const GkmGraph& g, const GraphClassModP& a, const GraphClassModP& b,
                            const Conventions& conv) {
  if (a.p != b.p || a.b_edges != b.b_edges) throw RingMismatch("product of classes over different primes");
  GraphClassModP out;
  out.p = a.p;
  out.poly_degree = a.poly_degree + b.poly_degree;
  out.b_edges = a.b_edges;
  require_same_shape(a.vertex, b.vertex);
  for (std::size_t q = 0; q < a.vertex.size(); ++q) out.vertex.push_back(a.vertex[q] * b.vertex[q]);
  for (std::size_t j = 0; j < a.b_edges.size(); ++j) {
    const VertexId i = g.source(conv.oriented(a.b_edges[j]));
    out.b_part.push_back(a.vertex[i] * b.b_part[j] + b.vertex[i] * a.b_part[j]);
  }
  return out;
}

GraphClassModP product_modp(const GkmGraph& g, const GraphClassModP& a, const GraphClassModP& b) {
  return product_modp(g, a, b, Conventions::defaults(g));
}

std::optional<GraphClassZ> psi_image_contains(const GkmGraph& g, const GraphClassModP& target,
                                              const Conventions& conv) {
  const std::size_t k = g.torus_rank();
  const int d = target.poly_degree;
  const std::size_t m = monomial_count(k, d);
  const std::size_t ml = monomial_count(k, d - 1);
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  const auto pset = edges_div_p(g, target.p);
  if (target.vertex.size() != nv || target.b_edges != pset.edges) throw std::invalid_argument("psi target has wrong shape");

  // unknowns: f (nv*m), then g_e (ne*ml)
  // rows: edge equations (ne*m), vertex congruences (nv*m), b congruences (|E_p|*ml)
  const std::size_t cols = nv * m + ne * ml;
  const std::size_t cong = nv * m + pset.edges.size() * ml;
  IntMatrix sys(ne * m + cong, cols);
  IntMatrix slack(ne * m + cong, cong);
  IntVector rhs(ne * m + cong, 0);

  const auto& lower = monomials(k, d - 1);
  for (EdgeId e = 0; e < ne; ++e) {
    const OrientedEdge o = conv.oriented(e);
    for (std::size_t mu = 0; mu < m; ++mu) {
      sys(e * m + mu, g.source(o) * m + mu) += 1;
      sys(e * m + mu, g.target(o) * m + mu) -= 1;
    }
    const Weight w = conv.lift(g, e);
    for (std::size_t nu = 0; nu < ml; ++nu)
      for (std::size_t i = 0; i < k; ++i) {
        if (w.coords[i] == 0) continue;
        Exponent up = lower[nu];
        ++up[i];
        sys(e * m + monomial_index(k, up), nv * m + e * ml + nu) -= w.coords[i];
      }
  }
  std::size_t row = ne * m;
  std::size_t s = 0;
  const Int pz(static_cast<unsigned long>(target.p));
  for (std::size_t q = 0; q < nv; ++q)
    for (std::size_t mu = 0; mu < m; ++mu, ++row, ++s) {
      sys(row, q * m + mu) = 1;
      slack(row, s) = pz;
      rhs[row] = target.vertex[q].coeff(mu);
    }
  for (std::size_t j = 0; j < pset.edges.size(); ++j)
    for (std::size_t nu = 0; nu < ml; ++nu, ++row, ++s) {
      sys(row, nv * m + pset.edges[j] * ml + nu) = 1;
      slack(row, s) = pz;
      rhs[row] = target.b_part[j].coeff(nu);
    }

  const auto sol = solve_with_image(sys, slack, rhs);
  if (!sol) return std::nullopt;
  GraphClassZ out{d, unflatten(std::span<const Int>(sol->data(), nv * m), Ring::integers(), k, nv, d)};
  return out;
}

std::optional<GraphClassZ> psi_image_contains(const GkmGraph& g, const GraphClassModP& target) {
  return psi_image_contains(g, target, Conventions::defaults(g));
}

PsiImageRanks psi_image_ranks(const GkmGraph& g, int degree, std::uint64_t p) {
  const auto h = compute_h_z(g, degree);
  std::vector<ModVector> full, vertex_only;
  for (const auto& values : h.basis_values()) {
    const auto image = psi(g, GraphClassZ{h.poly_degree, values}, p);
    ModVector v;
    for (const auto& f : image.vertex)
      for (const auto& c : f.coeffs()) v.push_back(mod_reduce(c, p));
    vertex_only.push_back(v);
    for (const auto& f : image.b_part)
      for (const auto& c : f.coeffs()) v.push_back(mod_reduce(c, p));
    full.push_back(std::move(v));
  }
  return {modp_span_basis(std::move(full), p).size(), modp_span_basis(std::move(vertex_only), p).size()};
}

std::vector<long> free_generator_counts(const std::vector<std::size_t>& ranks, std::size_t nvars) {
  std::vector<long> gens;
  for (std::size_t d = 0; d < ranks.size(); ++d) {
    long expected = 0;
    for (std::size_t j = 0; j < d; ++j)
      expected += gens[j] * static_cast<long>(monomial_count(nvars, static_cast<int>(d - j)));
    gens.push_back(static_cast<long>(ranks[d]) - expected);
  }
  return gens;
}

}  // namespace gkm
