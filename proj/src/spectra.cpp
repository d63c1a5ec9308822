#include "deza/spectra.hpp"

#include <utility>
#include <vector>

#include "deza/error.hpp"

namespace deza {

namespace {

constexpr int kMaxVertices = 512;

void check_size(const Graph& g, const char* what) {
  if (g.size() > kMaxVertices)
    throw gate_error(std::string(what) + ": graph exceeds the size bound");
}

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix adjacency_matrix(const Graph& g) {
  const int n = g.size();
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbours(u)) m[u][v] = 1;
  return m;
}

// One extra multiplication by the 0/1 adjacency matrix: additions only.
BigMatrix step(const BigMatrix& m, const std::vector<std::vector<int>>& nbr) {
  const int n = static_cast<int>(m.size());
  BigMatrix next(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BigInt s = 0;
      for (int w : nbr[j]) s += m[i][w];
      next[i][j] = std::move(s);
    }
  }
  return next;
}

std::vector<std::vector<int>> neighbour_lists(const Graph& g) {
  std::vector<std::vector<int>> nbr(g.size());
  for (int v = 0; v < g.size(); ++v) nbr[v] = g.neighbours(v);
  return nbr;
}

}  // namespace

WalkProfile walk_profile(const Graph& g, int max_length) {
  check_size(g, "walk profile");
  if (max_length < 2) throw std::invalid_argument("walk profile: max_length must be >= 2");
  const int n = g.size();
  const auto nbr = neighbour_lists(g);
  BigMatrix m = adjacency_matrix(g);
  WalkProfile profile;
  profile.max_length = max_length;
  for (int len = 2; len <= max_length; ++len) {
    m = step(m, nbr);
    std::vector<BigInt> diag(n);
    for (int v = 0; v < n; ++v) diag[v] = m[v][v];
    profile.counts.push_back(std::move(diag));
  }
  return profile;
}

WalkRegularity is_walk_regular(const Graph& g) {
  check_size(g, "walk regularity");
  const int n = g.size();
  const auto nbr = neighbour_lists(g);
  BigMatrix m = adjacency_matrix(g);
  for (int len = 2; len <= n - 1; ++len) {
    m = step(m, nbr);
    for (int v = 1; v < n; ++v)
      if (m[v][v] != m[0][0]) return {false, len};
  }
  return {true, std::nullopt};
}

int eigenvalue_multiplicity(const Graph& g, long long lambda) {
  check_size(g, "eigenvalue multiplicity");
  const int n = g.size();
  // M = A - lambda I, reduced by fraction-free (Bareiss) elimination; every
  // intermediate entry is a minor of M, so the divisions below are exact.
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbours(u)) m[u][v] = 1;
    m[u][u] -= lambda;
  }
  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int i = rank + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return n - rank;
}

}  // namespace deza
