#include "gkm/charclasses.hpp"

#include <random>

namespace gkm {

const GraphClassModP& TotalSwClass::component(int degree) const {
  if (degree < 0 || degree % 2 != 0 || degree / 2 >= static_cast<int>(components.size()))
    throw DegreeError("no Stiefel-Whitney component in degree " + std::to_string(degree));
  return components[degree / 2];
}

namespace {

Weight signed_label(const GkmGraph& g, OrientedEdge e, int sign) { return sign > 0 ? g.label(e) : -g.label(e); }

}  // namespace

std::vector<GradedPoly> sw_edge_part(const GkmGraph& g, EdgeId e, const SwEdgeChoice& choice) {
  const Ring z = Ring::integers();
  const std::size_t k = g.torus_rank();
  const OrientedEdge fwd = g.forward(e);
  const auto& from = g.star(g.source(fwd));
  if (choice.bijection.size() != from.size() || choice.star_signs.size() != from.size())
    throw std::invalid_argument("sw choice does not match the star of edge " + std::to_string(e));

  PolySeries at_i = PolySeries::one(z, k);
  PolySeries at_t = PolySeries::one(z, k);
  Weight lift_e;
  for (std::size_t pos = 0; pos < from.size(); ++pos) {
    const OrientedEdge l = from[pos];
    const Weight lift = signed_label(g, l, choice.star_signs[pos]);
    at_i = at_i * PolySeries::one_plus_linear(lift, z);
    if (l == fwd) {
      lift_e = lift;
      at_t = at_t * PolySeries::one_plus_linear(signed_label(g, fwd.bar(), choice.bar_sign), z);
      continue;
    }
    const OrientedEdge image = choice.bijection[pos];
    const int eps = transport_sign(g, fwd, l, image);
    at_t = at_t * PolySeries::one_plus_linear(signed_label(g, image, choice.star_signs[pos] * eps), z);
  }

  const PolySeries x = at_i - at_t;
  std::vector<GradedPoly> out;
  for (int d = 0; d <= static_cast<int>(from.size()); ++d) {
    const auto q = divide_by_linear(x.component(d), lift_e);
    if (!q) throw std::logic_error("f_e: difference not divisible along edge " + std::to_string(e));
    out.push_back(reduce_mod_p(*q, 2));
  }
  return out;
}

SwEdgeChoice default_sw_choice(const GkmGraph& g, EdgeId e) {
  SwEdgeChoice choice;
  if (const auto c = find_connection(g)) {
    choice.bijection = c->map(g.forward(e));
  } else {
    auto local = compatible_bijections(g, g.forward(e), 1);
    if (local.empty()) throw NoConnection("no compatible bijection along edge " + std::to_string(e));
    choice.bijection = std::move(local.front());
  }
  choice.star_signs.assign(choice.bijection.size(), 1);
  return choice;
}

TotalSwClass total_sw(const GkmGraph& g) {
  if (!find_connection(g)) throw NoConnection("graph admits no compatible connection");
  const Ring z2 = Ring::mod(2);
  const std::size_t k = g.torus_rank();
  const int n = static_cast<int>(g.valence());

  std::vector<PolySeries> vertex_series;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    PolySeries s = PolySeries::one(z2, k);
    for (const auto& e : g.star(v)) s = s * PolySeries::one_plus_linear(g.label(e), z2);
    vertex_series.push_back(std::move(s));
  }
  const auto b_edges = edges_div_p(g, 2).edges;
  std::vector<std::vector<GradedPoly>> edge_parts;
  for (EdgeId e : b_edges) edge_parts.push_back(sw_edge_part(g, e, default_sw_choice(g, e)));

  TotalSwClass out;
  for (int d = 0; d <= n; ++d) {
    GraphClassModP c;
    c.p = 2;
    c.poly_degree = d;
    for (const auto& s : vertex_series) c.vertex.push_back(s.component(d));
    c.b_edges = b_edges;
    for (const auto& parts : edge_parts) c.b_part.push_back(parts[d]);
    out.components.push_back(std::move(c));
  }
  return out;
}

IndependenceReport sw_choice_independence(const GkmGraph& g, EdgeId e, std::size_t trials, std::uint64_t seed,
                                          std::size_t exhaustive_limit) {
  if (!edges_div_p(g, 2).contains(e))
    throw std::invalid_argument("edge " + std::to_string(e) + " is not in E(G, 2)");
  const auto bijections = compatible_bijections(g, g.forward(e));
  if (bijections.empty()) throw NoConnection("no compatible bijection along edge " + std::to_string(e));
  const std::size_t n = g.valence();
  const std::size_t sign_patterns = std::size_t{1} << (n + 1);
  const std::size_t total = bijections.size() * sign_patterns;

  auto choice_for = [&](std::size_t b, std::size_t mask) {
    SwEdgeChoice c{bijections[b], std::vector<int>(n), (mask >> n) & 1 ? -1 : 1};
    for (std::size_t i = 0; i < n; ++i) c.star_signs[i] = (mask >> i) & 1 ? -1 : 1;
    return c;
  };

  IndependenceReport report;
  const auto reference = sw_edge_part(g, e, choice_for(0, 0));
  auto check = [&](std::size_t b, std::size_t mask) {
    ++report.choices_checked;
    if (sw_edge_part(g, e, choice_for(b, mask)) != reference) report.independent = false;
  };
  if (total <= exhaustive_limit) {
    for (std::size_t b = 0; b < bijections.size(); ++b)
      for (std::size_t mask = 0; mask < sign_patterns; ++mask) check(b, mask);
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_b(0, bijections.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_mask(0, sign_patterns - 1);
    for (std::size_t t = 0; t < trials; ++t) check(pick_b(rng), pick_mask(rng));
  }
  return report;
}

SpinVerdict spin_check(const GkmGraph& g) {
  const Ring z2 = Ring::mod(2);
  SpinVerdict out;
  bool all_zero = true;
  bool all_equal = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    GradedPoly sum(z2, g.torus_rank(), 1);
    for (const auto& e : g.star(v)) sum += linear_from_weight(g.label(e), z2);
    all_zero = all_zero && sum.is_zero();
    if (!out.vertex_sums.empty() && !(sum == out.vertex_sums.front())) all_equal = false;
    out.vertex_sums.push_back(std::move(sum));
  }

  // Condition (b) at the weight level: lifts at t(e) are transported along
  // a compatible bijection, then the difference is an integer multiple of alpha(e).
  bool b_even = true;
  out.b_edges = edges_div_p(g, 2).edges;
  for (EdgeId e : out.b_edges) {
    const auto choice = default_sw_choice(g, e);
    const OrientedEdge fwd = g.forward(e);
    const auto& from = g.star(g.source(fwd));
    Weight diff(std::vector<std::int64_t>(g.torus_rank(), 0));
    for (std::size_t pos = 0; pos < from.size(); ++pos) {
      // alpha(e) and its image at t(e) cancel with matching lifts
      const OrientedEdge l = from[pos];
      if (l == fwd) continue;
      const OrientedEdge image = choice.bijection[pos];
      const Weight lifted = transport_sign(g, fwd, l, image) > 0 ? g.label(image) : -g.label(image);
      diff = diff + g.label(l) - lifted;
    }
    const Weight& a = g.label(fwd);
    std::size_t lead = 0;
    while (a.coords[lead] == 0) ++lead;
    if (diff.coords[lead] % a.coords[lead] != 0) throw std::logic_error("condition (b) quotient is not integral");
    const std::int64_t lambda = diff.coords[lead] / a.coords[lead];
    for (std::size_t i = 0; i < a.rank(); ++i)
      if (diff.coords[i] != lambda * a.coords[i]) throw std::logic_error("condition (b) quotient is not integral");
    out.b_values.emplace_back(static_cast<long>(lambda));
    if (lambda % 2 != 0) b_even = false;
  }
  out.equivariant_spin = all_zero && b_even;
  out.spin = all_equal && b_even;
  return out;
}

ObstructionReport realizability_obstruction(const GkmGraph& g) {
  ObstructionReport out;
  out.sw = total_sw(g);
  for (const auto& c : out.sw.components) {
    auto pre = psi_image_contains(g, c);
    if (!pre && !out.obstructed) {
      out.obstructed = true;
      out.failing_degree = c.degree();
    }
    out.preimages.push_back(std::move(pre));
  }
  return out;
}

}  // namespace gkm
