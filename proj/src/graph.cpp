#include "deza/graph.hpp"

#include <bit>
#include <deque>
#include <stdexcept>

#include "deza/error.hpp"

namespace deza {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.set_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

void Graph::set_edge(int u, int v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("no loops");
  const uint64_t mu = uint64_t{1} << (v & 63), mv = uint64_t{1} << (u & 63);
  uint64_t& wu = bits_[static_cast<size_t>(u) * words_ + (v >> 6)];
  uint64_t& wv = bits_[static_cast<size_t>(v) * words_ + (u >> 6)];
  if (present) {
    wu |= mu;
    wv |= mv;
  } else {
    wu &= ~mu;
    wv &= ~mv;
  }
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::common_neighbours(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const uint64_t* ru = bits_.data() + static_cast<size_t>(u) * words_;
  const uint64_t* rv = bits_.data() + static_cast<size_t>(v) * words_;
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
  return c;
}

std::vector<int> Graph::neighbours(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

Graph complement(const Graph& g) {
  const int n = g.size();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.set_edge(u, v);
  return h;
}

bool is_regular(const Graph& g) {
  const int d = g.degree(0);
  for (int v = 1; v < g.size(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.size();
  int diam = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (g.adjacent(u, v) && dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) return std::nullopt;
      diam = std::max(diam, dist[v]);
    }
  }
  return diam;
}

Graph strong_product_k2(const Graph& g) {
  const int m = g.size();
  Graph h(2 * m);
  for (int i = 0; i < m; ++i) {
    h.set_edge(2 * i, 2 * i + 1);
    for (int j = i + 1; j < m; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) h.set_edge(2 * i + s, 2 * j + t);
    }
  }
  return h;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
}

}  // namespace deza
