#include "gkm/cli.hpp"

#include "gkm/charclasses.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/fixtures.hpp"
#include "gkm/polyparse.hpp"
#include "gkm/thom.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace gkm::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string fixture;
  std::string ring = "Z";
  std::uint64_t p = 2;
  std::optional<int> degree;
  int max_degree = 12;
  std::uint64_t seed = 1;
  std::size_t trials = 64;
  bool json = false;
  bool require_spin = false;
  bool check_independence = false;
  std::vector<std::string> orientation_overrides;
  std::vector<std::string> sign_overrides;
  std::string classes_file;
};

Ring parse_ring(const RunConfig& cfg) {
  const std::string& r = cfg.ring;
  if (r == "Z") return Ring::integers();
  std::uint64_t p = cfg.p;
  if (r != "Zp") {
    std::string digits = r.substr(r.rfind('_') == 1 ? 2 : 1);
    if (r.size() < 2 || r[0] != 'Z' || digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw UsageError("--ring: expected Z, Zp or Z<prime>, got '" + r + "'");
    p = std::stoull(digits);
  }
  if (!is_prime(p)) throw UsageError("--ring: " + std::to_string(p) + " is not prime");
  return Ring::mod(p);
}

std::vector<int> degrees(const RunConfig& cfg) {
  auto check = [](int d) {
    if (d < 0 || d % 2 != 0) throw UsageError("degrees must be even and non-negative, got " + std::to_string(d));
  };
  if (cfg.degree) {
    check(*cfg.degree);
    return {*cfg.degree};
  }
  check(cfg.max_degree);
  std::vector<int> out;
  for (int d = 0; d <= cfg.max_degree; d += 2) out.push_back(d);
  return out;
}

GkmGraph load(const RunConfig& cfg) {
  if (!cfg.fixture.empty() && !cfg.input.empty()) throw UsageError("give either an input or --fixture, not both");
  if (!cfg.fixture.empty()) return fixtures::by_name(cfg.fixture);
  if (cfg.input.empty()) throw UsageError("missing input graph (path, fixtures:NAME or --fixture)");
  return load_graph(cfg.input);
}

EdgeId parse_edge(const GkmGraph& g, const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const unsigned long e = std::stoul(text, &used);
    if (used == text.size() && e < g.edge_count()) return e;
  } catch (const std::exception&) {
  }
  throw UsageError(flag + ": no edge '" + text + "'");
}

Conventions conventions(const GkmGraph& g, const RunConfig& cfg) {
  Conventions conv = Conventions::defaults(g);
  auto split = [](const std::string& item, const std::string& flag) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError(flag + ": expected <edge>:<value>, got '" + item + "'");
    return std::pair{item.substr(0, colon), item.substr(colon + 1)};
  };
  for (const auto& item : cfg.orientation_overrides) {
    const auto [edge, dir] = split(item, "--orientation-override");
    const EdgeId e = parse_edge(g, edge, "--orientation-override");
    if (dir == "fwd" || dir == "+") conv.flip_orientation[e] = false;
    else if (dir == "rev" || dir == "-") conv.flip_orientation[e] = true;
    else throw UsageError("--orientation-override: direction must be fwd, rev, + or -");
  }
  for (const auto& item : cfg.sign_overrides) {
    const auto [edge, sign] = split(item, "--sign-override");
    const EdgeId e = parse_edge(g, edge, "--sign-override");
    if (sign == "+") conv.flip_sign[e] = false;
    else if (sign == "-") conv.flip_sign[e] = true;
    else throw UsageError("--sign-override: sign must be + or -");
  }
  return conv;
}

ordered_json conventions_json(const GkmGraph& g, const Conventions& conv) {
  ordered_json out = ordered_json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const OrientedEdge o = conv.oriented(e);
    out.push_back({{"edge", e},
                   {"from", g.vertex_name(g.source(o))},
                   {"to", g.vertex_name(g.target(o))},
                   {"lift", conv.lift(g, e).to_string()}});
  }
  return out;
}

ordered_json polys(const std::vector<GradedPoly>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& f : values) out.push_back(f.to_string());
  return out;
}

ordered_json modp_json(const GraphClassModP& c) {
  return {{"degree", c.degree()}, {"vertex", polys(c.vertex)}, {"b_edges", c.b_edges}, {"b_part", polys(c.b_part)}};
}

std::string join(const ordered_json& arr) {
  std::string s;
  for (const auto& item : arr) {
    if (!s.empty()) s += ", ";
    s += item.is_string() ? item.get<std::string>() : item.dump();
  }
  return "(" + s + ")";
}

void emit(const RunConfig& cfg, std::ostream& out, const ordered_json& report, const std::string& text) {
  if (cfg.json) out << report.dump(2) << "\n";
  else out << text;
}

// ---- validate ------------------------------------------------------------

ordered_json violations_json(const GkmGraph& g, const CheckReport& r) {
  ordered_json out = ordered_json::array();
  for (const auto& v : r.violations)
    out.push_back({{"vertex", g.vertex_name(v.vertex)}, {"edges", {v.first, v.second}}, {"reason", v.reason}});
  return out;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const GkmGraph g = load(cfg);
  ordered_json checks = ordered_json::array();
  std::ostringstream text;
  bool ok = true;
  auto record = [&](const std::string& name, bool passed, ordered_json detail) {
    ok = ok && passed;
    text << (passed ? "PASS " : "FAIL ") << name;
    if (!passed && detail.is_array())
      for (const auto& d : detail)
        text << "\n  at " << d["vertex"].get<std::string>() << ": edges " << d["edges"][0] << ", " << d["edges"][1]
             << " (" << d["reason"].get<std::string>() << ")";
    text << "\n";
    checks.push_back({{"check", name}, {"passed", passed}, {"detail", std::move(detail)}});
  };

  const auto axioms = validate_gkm(g);
  record("gkm_axioms", axioms.passed, violations_json(g, axioms));
  const auto coprime = check_coprimality(g);
  record("coprimality", coprime.passed, violations_json(g, coprime));
  record("effective", is_effective(g), nullptr);
  std::optional<Connection> conn;
  if (axioms.passed) conn = find_connection(g);
  record("connection", conn.has_value(), nullptr);
  bool orientable = false;
  if (conn) orientable = orientable_connection(g).has_value();
  record("orientable", orientable, nullptr);
  if (cfg.require_spin) {
    const auto spin = spin_check(g);
    record("spin", spin.spin, {{"equivariant", spin.equivariant_spin}, {"nonequivariant", spin.spin}});
  }
  emit(cfg, out, {{"command", "validate"}, {"passed", ok}, {"checks", checks}}, text.str());
  return ok ? 0 : 1;
}

// ---- cohomology ----------------------------------------------------------

int cmd_cohomology(const RunConfig& cfg, std::ostream& out) {
  const GkmGraph g = load(cfg);
  const Ring ring = parse_ring(cfg);
  const auto degs = degrees(cfg);
  ordered_json per_degree = ordered_json::array();
  std::ostringstream text;
  std::vector<std::size_t> ranks;
  for (int d : degs) {
    const CohomLattice h = ring.is_integers() ? compute_h_z(g, d) : compute_h_modp(g, d, ring.p);
    ranks.push_back(h.rank());
    ordered_json basis = ordered_json::array();
    for (const auto& values : h.basis_values()) basis.push_back(polys(values));
    ordered_json entry{{"degree", d}, {"ring", ring.name()}, {"rank", h.rank()}, {"basis", basis}};
    entry["b_part_labels"] = ring.is_integers() ? std::vector<EdgeId>{} : edges_div_p(g, ring.p).edges;
    text << "H^" << d << " over " << ring.name() << ": rank " << h.rank() << "\n";
    for (const auto& b : basis) text << "  " << join(b) << "\n";
    if (!ring.is_integers()) {
      const auto r = psi_image_ranks(g, d, ring.p);
      const std::size_t rank_z = compute_h_z(g, d).rank();
      entry["rank_over_Z"] = rank_z;
      entry["psi_image_rank"] = r.image;
      entry["vertex_reduction_rank"] = r.vertex_image;
      entry["xi_kernel_dim"] = r.image - r.vertex_image;
      text << "  rank over Z " << rank_z << ", psi image rank " << r.image << ", vertex reduction rank "
           << r.vertex_image << "\n";
      if (r.image > r.vertex_image)
        text << "  xi-kernel: " << r.image - r.vertex_image
             << " integral class(es) vanish at every vertex mod " << ring.p << " but not in B\n";
    }
    per_degree.push_back(std::move(entry));
  }
  ordered_json report{{"command", "cohomology"}, {"degrees", per_degree}};
  const bool contiguous = !cfg.degree && ring.is_integers();
  if (contiguous) {
    const auto gens = free_generator_counts(ranks, g.torus_rank());
    const bool free = std::all_of(gens.begin(), gens.end(), [](long c) { return c >= 0; });
    ordered_json gen_degrees = ordered_json::array();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (long c = 0; c < gens[i]; ++c) gen_degrees.push_back(2 * i);
    report["consistent_with_free"] = free;
    report["generator_degrees"] = free ? gen_degrees : ordered_json(nullptr);
    text << (free ? "ranks consistent with a free module on generators in degrees " + join(gen_degrees)
                  : std::string("ranks inconsistent with a free module"))
         << " (up to degree " << cfg.max_degree << ")\n";
  }
  emit(cfg, out, report, text.str());
  return 0;
}

// ---- sw / spin / obstruction ---------------------------------------------

int cmd_sw(const RunConfig& cfg, std::ostream& out) {
  const GkmGraph g = load(cfg);
  const auto sw = total_sw(g);
  ordered_json comps = ordered_json::object();
  std::ostringstream text;
  for (const auto& c : sw.components) {
    if (cfg.degree && *cfg.degree != c.degree()) continue;
    comps[std::to_string(c.degree())] = modp_json(c);
    text << "w^" << c.degree() << ": vertex " << join(polys(c.vertex));
    if (!c.b_edges.empty()) {
      text << " b";
      for (std::size_t j = 0; j < c.b_edges.size(); ++j)
        text << " [" << c.b_edges[j] << "]=" << c.b_part[j].to_string();
    }
    text << "\n";
  }
  if (cfg.degree && comps.empty()) throw UsageError("no Stiefel-Whitney component in degree " + std::to_string(*cfg.degree));
  ordered_json report{{"command", "sw"}, {"sw", comps}};
  bool ok = true;
  if (cfg.check_independence) {
    ordered_json checks = ordered_json::array();
    for (EdgeId e : edges_div_p(g, 2).edges) {
      const auto r = sw_choice_independence(g, e, cfg.trials, cfg.seed);
      ok = ok && r.independent;
      checks.push_back({{"edge", e}, {"independent", r.independent}, {"choices", r.choices_checked}, {"exhaustive", r.exhaustive}});
      text << "f_" << e << " over " << r.choices_checked << (r.exhaustive ? " (all)" : " (random)") << " choices: "
           << (r.independent ? "independent" : "DEPENDS ON CHOICES") << "\n";
    }
    report["independence"] = checks;
  }
  emit(cfg, out, report, text.str());
  return ok ? 0 : 1;
}

int cmd_spin(const RunConfig& cfg, std::ostream& out) {
  const GkmGraph g = load(cfg);
  const auto v = spin_check(g);
  ordered_json sums = ordered_json::object();
  std::ostringstream text;
  text << "equivariant spin: " << (v.equivariant_spin ? "yes" : "no") << "\n"
       << "spin: " << (v.spin ? "yes" : "no") << "\n";
  for (VertexId q = 0; q < g.vertex_count(); ++q) {
    sums[g.vertex_name(q)] = v.vertex_sums[q].to_string();
    text << "  sum at " << g.vertex_name(q) << ": " << v.vertex_sums[q].to_string() << "\n";
  }
  ordered_json b = ordered_json::array();
  for (std::size_t j = 0; j < v.b_edges.size(); ++j) {
    b.push_back({{"edge", v.b_edges[j]}, {"value", v.b_values[j].get_str()}});
    text << "  condition (b) at edge " << v.b_edges[j] << ": " << v.b_values[j].get_str() << "\n";
  }
  emit(cfg, out,
       {{"command", "spin"},
        {"spin", {{"equivariant", v.equivariant_spin}, {"nonequivariant", v.spin}}},
        {"vertex_sums_mod2", sums},
        {"condition_b", b}},
       text.str());
  return 0;
}

int cmd_obstruction(const RunConfig& cfg, std::ostream& out) {
  const GkmGraph g = load(cfg);
  const Conventions conv = conventions(g, cfg);
  ObstructionReport r;
  r.sw = total_sw(g);
  for (const auto& c : r.sw.components) {
    auto pre = psi_image_contains(g, c, conv);
    if (!pre && !r.obstructed) {
      r.obstructed = true;
      r.failing_degree = c.degree();
    }
    r.preimages.push_back(std::move(pre));
  }
  ordered_json pre = ordered_json::object();
  ordered_json sw = ordered_json::object();
  std::ostringstream text;
  text << r.verdict();
  if (r.failing_degree) text << " at degree " << *r.failing_degree;
  text << "\n";
  for (std::size_t d = 0; d < r.preimages.size(); ++d) {
    const std::string key = std::to_string(2 * d);
    sw[key] = modp_json(r.sw.components[d]);
    pre[key] = r.preimages[d] ? polys(r.preimages[d]->values) : ordered_json(nullptr);
    text << "  degree " << key << ": " << (r.preimages[d] ? "preimage " + join(pre[key]) : std::string("no preimage"))
         << "\n";
  }
  text << "note: " << ObstructionReport::note << "\n";
  emit(cfg, out,
       {{"command", "obstruction"},
        {"sw", sw},
        {"obstruction",
         {{"verdict", r.verdict()},
          {"failing_degree", r.failing_degree ? ordered_json(*r.failing_degree) : ordered_json(nullptr)},
          {"preimages", pre},
          {"note", ObstructionReport::note}}},
        {"conventions", conventions_json(g, conv)}},
       text.str());
  return r.obstructed ? 1 : 0;
}

// ---- thom ----------------------------------------------------------------

int cmd_thom(const RunConfig& cfg, std::ostream& out) {
  const GkmGraph g = load(cfg);
  const auto r = verify_sw3valent(g);
  std::ostringstream text;
  ordered_json paths = ordered_json::array();
  text << r.paths.size() << " connection paths\n";
  for (std::size_t i = 0; i < r.paths.size(); ++i) {
    ordered_json edges = ordered_json::array();
    for (const auto& e : r.paths[i].edges) edges.push_back(e.to_string());
    paths.push_back({{"edges", edges}, {"thom_class", polys(r.path_classes[i].values)}});
    text << "  " << join(edges) << " -> " << join(polys(r.path_classes[i].values)) << "\n";
  }
  ordered_json edges = ordered_json::array();
  for (EdgeId e = 0; e < r.edge_classes.size(); ++e) edges.push_back(polys(r.edge_classes[e].values));
  ordered_json vertices = ordered_json::array();
  for (const auto& v : r.vertex_classes) vertices.push_back(polys(v.values));
  auto verdict = [](bool b) { return b ? "equal" : "DIFFERENT"; };
  text << "degree 2: " << verdict(r.degree2) << "\ndegree 4: " << verdict(r.degree4) << "\ndegree 6: "
       << verdict(r.degree6) << "\n";
  if (r.connections_checked > 0)
    text << "connection independence over " << r.connections_checked << " orientable connections: "
         << (r.connection_independent ? "yes" : "no") << "\n";
  const bool ok = r.all_equal() && r.connection_independent;
  emit(cfg, out,
       {{"command", "thom"},
        {"paths", paths},
        {"edge_classes", edges},
        {"vertex_classes", vertices},
        {"comparisons", {{"degree2", r.degree2}, {"degree4", r.degree4}, {"degree6", r.degree6}}},
        {"connection_independent", r.connection_independent},
        {"connections_checked", r.connections_checked},
        {"in_psi_image", r.all_equal()}},
       text.str());
  return ok ? 0 : 1;
}

// ---- relations -----------------------------------------------------------

struct Relation {
  std::string expr;
  bool expect_zero = true;
};

int cmd_relations(const RunConfig& cfg, std::ostream& out) {
  const GkmGraph g = load(cfg);
  std::map<std::string, std::vector<std::string>> class_text;
  std::vector<Relation> relations;
  if (cfg.classes_file.empty()) {
    if (!(g == fixtures::paper8())) throw UsageError("relations: --classes is required unless the graph is paper8");
    class_text = {{"a1", {"1", "1", "1", "1"}},
                  {"a2", {"x^2 - 3*x*y + 2*y^2", "x^2 + 3*x*y + 2*y^2", "0", "0"}},
                  {"a3", {"0", "2*x*y", "2*x*y", "0"}},
                  {"a4", {"2*x^3*y - 6*x^2*y^2 + 4*x*y^3", "0", "0", "0"}}};
    relations = {{"a2*a3 + a4 - 2*x*y*a2", true}, {"a1*a1 - a1", true}, {"a2*a2 - a4 - 3*x*y*a3", false}};
  } else {
    std::ifstream in(cfg.classes_file);
    if (!in) throw std::ios_base::failure("cannot open '" + cfg.classes_file + "'");
    const auto doc = nlohmann::json::parse(in, nullptr, true);
    for (const auto& [name, values] : doc.at("classes").items())
      class_text[name] = values.get<std::vector<std::string>>();
    for (const auto& rel : doc.at("relations")) {
      if (rel.is_string()) relations.push_back({rel.get<std::string>(), true});
      else relations.push_back({rel.at("expr").get<std::string>(), rel.value("expect", "zero") == "zero"});
    }
  }

  std::map<std::string, SparseClass> classes;
  ordered_json members = ordered_json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& [name, values] : class_text) {
    if (values.size() != g.vertex_count())
      throw UsageError("class " + name + ": expected " + std::to_string(g.vertex_count()) + " values");
    SparseClass sc;
    for (const auto& v : values) sc.push_back(parse_polynomial(v, g.torus_rank()));
    // membership needs one degree; take it from the first nonzero value
    int deg = 0;
    for (const auto& p : sc)
      if (!p.empty()) {
        deg = 0;
        for (int e : p.begin()->first) deg += e;
        break;
      }
    GraphClassZ cls{deg, {}};
    for (const auto& p : sc) cls.values.push_back(to_graded(p, g.torus_rank(), Ring::integers(), deg));
    const bool member = membership_z(g, cls);
    ok = ok && member;
    members.push_back({{"class", name}, {"degree", cls.degree()}, {"member", member}});
    text << (member ? "PASS " : "FAIL ") << name << " in H^" << cls.degree() << "\n";
    classes[name] = std::move(sc);
  }
  ordered_json results = ordered_json::array();
  for (const auto& rel : relations) {
    const auto value = evaluate_class_expression(rel.expr, g.torus_rank(), g.vertex_count(), classes);
    bool zero = true;
    for (const auto& p : value)
      for (const auto& [e, c] : p)
        if (c != 0) zero = false;
    const bool pass = zero == rel.expect_zero;
    ok = ok && pass;
    results.push_back({{"relation", rel.expr}, {"expect", rel.expect_zero ? "zero" : "nonzero"}, {"zero", zero}, {"passed", pass}});
    text << (pass ? "PASS " : "FAIL ") << rel.expr << (rel.expect_zero ? " == 0" : " != 0") << "\n";
  }
  emit(cfg, out, {{"command", "relations"}, {"passed", ok}, {"classes", members}, {"relations", results}}, text.str());
  return ok ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("input", cfg.input, "graph JSON file or fixtures:NAME");
  sub->add_option("--fixture", cfg.fixture, "built-in graph: paper8, sphere(w), product(w1;w2;...), polygon2n_x_edge(n)");
  sub->add_flag("--json", cfg.json, "machine-readable output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact GKM graph cohomology, Stiefel-Whitney classes and realizability checks", "gkmtool"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "check GKM axioms, coprimality, effectiveness, connection, orientability");
  add_common(validate, cfg);
  validate->add_flag("--require-spin", cfg.require_spin, "also require a (non-equivariant) spin structure");

  auto* cohom = app.add_subcommand("cohomology", "graded equivariant graph cohomology");
  add_common(cohom, cfg);
  cohom->add_option("--ring", cfg.ring, "Z, Zp or Z<prime>");
  cohom->add_option("--p", cfg.p, "prime for --ring Zp");
  cohom->add_option("--degree", cfg.degree, "single cohomological degree");
  cohom->add_option("--max-degree", cfg.max_degree, "degree bound (default 12)");

  auto* sw = app.add_subcommand("sw", "total Stiefel-Whitney class");
  add_common(sw, cfg);
  sw->add_option("--degree", cfg.degree, "single cohomological degree");
  sw->add_flag("--check-independence", cfg.check_independence, "recompute f_e over bijection and sign choices");
  sw->add_option("--trials", cfg.trials, "random choices per edge when the choice space is large");
  sw->add_option("--seed", cfg.seed, "seed for random choices");

  auto* spin = app.add_subcommand("spin", "spin criteria");
  add_common(spin, cfg);

  auto* obstruction = app.add_subcommand("obstruction", "is the Stiefel-Whitney class in the image of Psi");
  add_common(obstruction, cfg);
  obstruction->add_option("--orientation-override", cfg.orientation_overrides, "EDGE:fwd|rev");
  obstruction->add_option("--sign-override", cfg.sign_overrides, "EDGE:+|-");

  auto* thom = app.add_subcommand("thom", "Thom classes of 3-valent orientable T^2 graphs");
  add_common(thom, cfg);

  auto* relations = app.add_subcommand("relations", "check polynomial identities between classes");
  add_common(relations, cfg);
  relations->add_option("--classes", cfg.classes_file, "JSON file with classes and relations");


  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(cfg, out);
    if (*cohom) return cmd_cohomology(cfg, out);
    if (*sw) return cmd_sw(cfg, out);
    if (*spin) return cmd_spin(cfg, out);
    if (*obstruction) return cmd_obstruction(cfg, out);
    if (*thom) return cmd_thom(cfg, out);
    if (*relations) return cmd_relations(cfg, out);
  } catch (const NoConnection& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ThomError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gkm::cli
