#include "ncg/ncgraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ncg {

BitMatrix::BitMatrix(long n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n * ((n + 63) / 64)), 0) {}

void BitMatrix::set(long i, long j, bool v) {
  auto& w = bits_[static_cast<std::size_t>(i * words_ + j / 64)];
  std::uint64_t mask = std::uint64_t{1} << (j % 64);
  w = v ? (w | mask) : (w & ~mask);
}

long BitMatrix::row_count(long i) const {
  long c = 0;
  for (long w = 0; w < words_; ++w) c += std::popcount(bits_[static_cast<std::size_t>(i * words_ + w)]);
  return c;
}

long MultipartiteShape::n() const {
  long t = 0;
  for (auto [p, a] : parts) t += p * a;
  return t;
}

long MultipartiteShape::r() const {
  long t = 0;
  for (auto [p, a] : parts) t += a;
  return t;
}

std::string MultipartiteShape::str() const {
  std::string s = "K_{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i].second) + "." + std::to_string(parts[i].first);
  }
  return s + "}";
}

NCGraph noncommuting_graph(const GroupTable& g) {
  NCGraph gr;
  const CenterInfo z = center(g);
  std::vector<char> central(static_cast<std::size_t>(g.order()), 0);
  for (long x : z.elements) central[static_cast<std::size_t>(x)] = 1;
  for (long x = 0; x < g.order(); ++x)
    if (!central[static_cast<std::size_t>(x)]) gr.vertices.push_back(x);
  if (gr.vertices.empty()) throw AbelianGroup("group is abelian; non-commuting graph is empty");
  const long n = gr.n();
  gr.adj = BitMatrix(n);
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      if (!g.commute(gr.vertices[static_cast<std::size_t>(i)], gr.vertices[static_cast<std::size_t>(j)])) {
        gr.adj.set(i, j);
        gr.adj.set(j, i);
        ++gr.edge_count;
      }
  return gr;
}

NCGraph graph_from_edges(long n, const std::vector<std::pair<long, long>>& edges) {
  NCGraph gr;
  gr.vertices.resize(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) gr.vertices[static_cast<std::size_t>(i)] = i;
  gr.adj = BitMatrix(n);
  for (auto [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("bad edge");
    if (gr.adj.get(u, v)) continue;
    gr.adj.set(u, v);
    gr.adj.set(v, u);
    ++gr.edge_count;
  }
  return gr;
}

NCGraph complete_multipartite(const MultipartiteShape& shape) {
  std::vector<long> part_of;
  long part = 0;
  for (auto [p, a] : shape.parts)
    for (long k = 0; k < a; ++k, ++part)
      for (long v = 0; v < p; ++v) part_of.push_back(part);
  const long n = static_cast<long>(part_of.size());
  std::vector<std::pair<long, long>> edges;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) edges.emplace_back(i, j);
  return graph_from_edges(n, edges);
}

std::optional<std::vector<long>> complement_clique_decomposition(const NCGraph& graph) {
  const long n = graph.n();
  std::vector<long> comp(static_cast<std::size_t>(n), -1);
  std::vector<long> sizes;
  for (long s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const long id = static_cast<long>(sizes.size());
    std::vector<long> stack{s}, members;
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      long u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (long v = 0; v < n; ++v)
        if (v != u && !graph.adj.get(u, v) && comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = id;
          stack.push_back(v);
        }
    }
    // A complement component must be a clique of the complement, i.e. an
    // independent set of the graph.
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (graph.adj.get(members[i], members[j])) return std::nullopt;
    sizes.push_back(static_cast<long>(members.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

MultipartiteShape shape_from_cliques(const std::vector<long>& cliques) {
  std::map<long, long> counts;
  for (long c : cliques) ++counts[c];
  MultipartiteShape s;
  for (auto [p, a] : counts) s.parts.emplace_back(p, a);
  return s;
}

std::optional<MultipartiteShape> multipartite_shape(const NCGraph& graph) {
  auto cliques = complement_clique_decomposition(graph);
  if (!cliques) return std::nullopt;
  return shape_from_cliques(*cliques);
}

std::string to_edge_list(const NCGraph& graph) {
  std::ostringstream os;
  for (long i = 0; i < graph.n(); ++i)
    for (long j = i + 1; j < graph.n(); ++j)
      if (graph.adj.get(i, j)) os << i << " " << j << "\n";
  return os.str();
}

std::string to_graph_json(const NCGraph& graph) {
  nlohmann::json j;
  j["n"] = graph.n();
  nlohmann::json edges = nlohmann::json::array();
  for (long i = 0; i < graph.n(); ++i)
    for (long k = i + 1; k < graph.n(); ++k)
      if (graph.adj.get(i, k)) edges.push_back({i, k});
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace ncg
