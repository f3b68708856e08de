#include "gkm/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace gkm::fixtures {

GkmGraph paper8() {
  // Edge order matches the cokernel presentation: right double edge first,
  // then counterclockwise.
  const std::vector<std::string> names{"LR", "UR", "UL", "LL"};
  std::vector<Edge> edges{
      {0, 1, {1, 0}},  {0, 1, {0, 2}},  {1, 2, {1, 1}},  {1, 2, {1, 2}},
      {2, 3, {1, 0}},  {2, 3, {0, 2}},  {3, 0, {1, -1}}, {3, 0, {1, -2}},
  };
  return GkmGraph(2, names, std::move(edges));
}

GkmGraph sphere(const Weight& w) { return GkmGraph(w.rank(), {"N", "S"}, {{0, 1, w}}); }

GkmGraph product(const std::vector<Weight>& weights) {
  if (weights.empty()) throw GraphError("product of zero factors");
  const std::size_t m = weights.size();
  const std::size_t k = weights.front().rank();
  std::vector<std::string> names;
  for (std::size_t v = 0; v < (std::size_t{1} << m); ++v) {
    std::string bits;
    for (std::size_t j = 0; j < m; ++j) bits += ((v >> j) & 1) ? '1' : '0';
    names.push_back("v" + bits);
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < names.size(); ++v)
    for (std::size_t j = 0; j < m; ++j)
      if (((v >> j) & 1) == 0) {
        if (weights[j].rank() != k) throw GraphError("product: weights of different rank");
        edges.push_back({v, v | (std::size_t{1} << j), weights[j]});
      }
  return GkmGraph(k, std::move(names), std::move(edges));
}

GkmGraph polygon2n_x_edge(std::size_t n) {
  if (n == 0) throw GraphError("polygon2n_x_edge: n must be at least 1");
  const std::size_t sides = 2 * n;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t i = 0; i < sides; ++i) names.push_back((s ? "b" : "a") + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t i = 0; i < sides; ++i)
      edges.push_back({s * sides + i, s * sides + (i + 1) % sides, i % 2 == 0 ? Weight{1, 0} : Weight{0, 1}});
  for (std::size_t i = 0; i < sides; ++i) edges.push_back({i, sides + i, {1, 1}});
  return GkmGraph(2, std::move(names), std::move(edges));
}

namespace {

std::vector<std::int64_t> parse_ints(std::string_view text, char sep) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw GraphError("fixture argument: not an integer '" + item + "'");
    }
  }
  return out;
}

std::vector<Weight> parse_weights(std::string_view text) {
  std::vector<Weight> out;
  std::string part;
  std::istringstream in{std::string(text)};
  while (std::getline(in, part, ';')) out.emplace_back(parse_ints(part, ','));
  return out;
}

}  // namespace

GkmGraph by_name(std::string_view name) {
  const auto open = name.find('(');
  const std::string_view head = name.substr(0, open);
  std::string_view args;
  if (open != std::string_view::npos) {
    if (name.back() != ')') throw GraphError("fixture '" + std::string(name) + "': missing ')'");
    args = name.substr(open + 1, name.size() - open - 2);
  }
  if (head == "paper8" && args.empty()) return paper8();
  if (head == "sphere") return sphere(Weight(parse_ints(args, ',')));
  if (head == "product") return product(parse_weights(args));
  if (head == "polygon2n_x_edge") {
    const auto n = parse_ints(args, ',');
    if (n.size() != 1 || n[0] < 1) throw GraphError("polygon2n_x_edge expects one positive integer");
    return polygon2n_x_edge(static_cast<std::size_t>(n[0]));
  }
  throw GraphError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> names() {
  return {"paper8", "sphere(w)", "product(w1;w2;...)", "polygon2n_x_edge(n)"};
}

}  // namespace gkm::fixtures

namespace gkm {

GkmGraph load_graph(const std::string& source) {
  constexpr std::string_view prefix = "fixtures:";
  if (source.rfind(prefix, 0) == 0) return fixtures::by_name(std::string_view(source).substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw std::ios_base::failure("cannot open '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace gkm
