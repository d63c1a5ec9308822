#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace deza {

/// Simple undirected graph on vertices 0..n-1, stored as a packed bit
/// matrix (one row of ceil(n/64) words per vertex).  The matrix is kept
/// symmetric with a zero diagonal by construction; n >= 1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  bool adjacent(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] >>
            (v & 63)) & 1;
  }
  /// Adds or removes the edge {u, v}; u != v.
  void set_edge(int u, int v, bool present = true);
  int degree(int v) const;
  /// |N(u) & N(v)| for u != v (never counts u or v themselves).
  int common_neighbours(int u, int v) const;
  std::vector<int> neighbours(int v) const;
  long long edge_count() const;

  bool operator==(const Graph&) const = default;

  std::span<const uint64_t> row(int v) const {
    return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
  }
  int row_words() const { return words_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

Graph complement(const Graph& g);
bool is_regular(const Graph& g);
/// Largest BFS eccentricity; nullopt when g is disconnected.
std::optional<int> diameter(const Graph& g);

/// Strong product with K2: vertices 2i, 2i+1 form the pair over vertex i,
/// adjacency (B + I) (x) J2 - I_{2n}.  Maps K1 to K2.
Graph strong_product_k2(const Graph& g);

/// Plain-text adjacency list, one "u v" line per edge, 0-indexed, u < v.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace deza
