#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncg/groups.hpp"

namespace ncg {

struct AbelianGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Square bit matrix, row-major, 64 columns per word.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(long n);
  long size() const { return n_; }
  bool get(long i, long j) const {
    return (bits_[static_cast<std::size_t>(i * words_ + j / 64)] >> (j % 64)) & 1U;
  }
  void set(long i, long j, bool v = true);
  long row_count(long i) const;

 private:
  long n_ = 0;
  long words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Graph on vertices 0..n-1; for non-commuting graphs, vertices[k] is the
// group element behind vertex k.
struct NCGraph {
  std::vector<long> vertices;
  BitMatrix adj;
  long edge_count = 0;

  long n() const { return static_cast<long>(vertices.size()); }
  long degree(long v) const { return adj.row_count(v); }
};

// Sorted part sizes with multiplicities: K_{a1.p1, a2.p2, ...}.
struct MultipartiteShape {
  std::vector<std::pair<long, long>> parts;  // (size p_i, count a_i), p_i increasing
  long n() const;
  long r() const;
  std::string str() const;  // e.g. "K_{3.1,1.2}"
  friend bool operator==(const MultipartiteShape& a, const MultipartiteShape& b) { return a.parts == b.parts; }
  friend bool operator!=(const MultipartiteShape& a, const MultipartiteShape& b) { return !(a == b); }
};

NCGraph noncommuting_graph(const GroupTable& g);
NCGraph graph_from_edges(long n, const std::vector<std::pair<long, long>>& edges);
// Complete multipartite graph with the given shape (parts laid out in order).
NCGraph complete_multipartite(const MultipartiteShape& shape);

std::optional<std::vector<long>> complement_clique_decomposition(const NCGraph& graph);
std::optional<MultipartiteShape> multipartite_shape(const NCGraph& graph);
MultipartiteShape shape_from_cliques(const std::vector<long>& cliques);

std::string to_edge_list(const NCGraph& graph);
std::string to_graph_json(const NCGraph& graph);

}  // namespace ncg
