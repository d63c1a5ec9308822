#include "deza/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "deza/error.hpp"

namespace deza {

namespace {

using Invariant = std::tuple<int, std::vector<int>, std::vector<int>>;

// (degree, sorted common-neighbour counts towards neighbours / non-neighbours).
std::vector<Invariant> vertex_invariants(const Graph& g) {
  const int n = g.size();
  std::vector<Invariant> inv(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> to_nb, to_non;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      (g.adjacent(u, v) ? to_nb : to_non).push_back(g.common_neighbours(u, v));
    }
    std::sort(to_nb.begin(), to_nb.end());
    std::sort(to_non.begin(), to_non.end());
    inv[v] = {g.degree(v), std::move(to_nb), std::move(to_non)};
  }
  return inv;
}

// One-dimensional colour refinement run jointly on both graphs so colour ids
// are comparable; returns {} when the colour histograms ever diverge.
std::optional<std::pair<std::vector<int>, std::vector<int>>> joint_refine(const Graph& g,
                                                                          const Graph& h) {
  const int n = g.size();
  std::vector<int> cg(n), ch(n);
  {
    std::map<Invariant, int> ids;
    auto ig = vertex_invariants(g);
    auto ih = vertex_invariants(h);
    for (int v = 0; v < n; ++v) cg[v] = ids.emplace(ig[v], static_cast<int>(ids.size())).first->second;
    for (int v = 0; v < n; ++v) ch[v] = ids.emplace(ih[v], static_cast<int>(ids.size())).first->second;
  }
  auto histograms_match = [n](const std::vector<int>& a, const std::vector<int>& b) {
    std::map<int, int> ca, cb;
    for (int v = 0; v < n; ++v) {
      ++ca[a[v]];
      ++cb[b[v]];
    }
    return ca == cb;
  };
  if (!histograms_match(cg, ch)) return std::nullopt;

  int colours = 0;
  for (int v = 0; v < n; ++v) colours = std::max(colours, std::max(cg[v], ch[v]) + 1);
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto next = [&](const Graph& x, const std::vector<int>& c) {
      std::vector<int> out(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (int u : x.neighbours(v)) nb.push_back(c[u]);
        std::sort(nb.begin(), nb.end());
        out[v] = -1;
        auto key = std::make_pair(c[v], std::move(nb));
        out[v] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
      }
      return out;
    };
    auto ng = next(g, cg);
    auto nh = next(h, ch);
    if (!histograms_match(ng, nh)) return std::nullopt;
    const int next_colours = static_cast<int>(ids.size());
    cg = std::move(ng);
    ch = std::move(nh);
    if (next_colours == colours) break;  // partition is stable
    colours = next_colours;
  }
  return std::make_pair(std::move(cg), std::move(ch));
}

// Vertex order for the backtracking: repeatedly BFS from the unvisited
// vertex with the rarest colour, so each new vertex is usually adjacent to
// an already-mapped one.
std::vector<int> search_order(const Graph& g, const std::vector<int>& colour) {
  const int n = g.size();
  std::vector<int> class_size(n, 0);
  for (int v = 0; v < n; ++v) ++class_size[colour[v]];
  std::vector<bool> seen(n, false);
  std::vector<int> order;
  order.reserve(n);
  while (static_cast<int>(order.size()) < n) {
    int start = -1;
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      if (start < 0 || class_size[colour[v]] < class_size[colour[start]]) start = v;
    }
    size_t head = order.size();
    order.push_back(start);
    seen[start] = true;
    while (head < order.size()) {
      const int u = order[head++];
      for (int w : g.neighbours(u)) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<int> order;
  std::vector<int> map;      // g vertex -> h vertex or -1
  std::vector<bool> used;    // h vertex taken

  bool run(size_t pos) {
    if (pos == order.size()) return true;
    const int u = order[pos];
    for (int w = 0; w < h.size(); ++w) {
      if (used[w] || ch[w] != cg[u]) continue;
      bool ok = true;
      for (size_t i = 0; i < pos && ok; ++i) {
        const int x = order[i];
        ok = g.adjacent(u, x) == h.adjacent(w, map[x]) &&
             g.common_neighbours(u, x) == h.common_neighbours(w, map[x]);
      }
      if (!ok) continue;
      map[u] = w;
      used[w] = true;
      if (run(pos + 1)) return true;
      map[u] = -1;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h, int max_n) {
  if (g.size() > max_n || h.size() > max_n)
    throw gate_error("isomorphism search: graph exceeds the size bound");
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;

  auto colours = joint_refine(g, h);
  if (!colours) return std::nullopt;
  const auto& [cg, ch] = *colours;

  IsoSearch search{g, h, cg, ch, search_order(g, cg),
                   std::vector<int>(g.size(), -1), std::vector<bool>(g.size(), false)};
  if (!search.run(0)) return std::nullopt;

  Permutation p(search.map);
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v) != h.adjacent(p(u), p(v)))
        throw check_error("isomorphism candidate failed certification");
  return p;
}

bool are_isomorphic(const Graph& g, const Graph& h, int max_n) {
  return find_isomorphism(g, h, max_n).has_value();
}

}  // namespace deza
