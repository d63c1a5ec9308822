#include "deza/involutions.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "deza/error.hpp"

namespace deza {

namespace {

// Automorphism-invariant vertex colouring: start from the degree plus the
// sorted common-neighbour profile, then refine by neighbour colours until
// stable.  Any automorphism must preserve these colours.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.size();
  std::vector<int> colour(n);
  {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> ids;
    for (int v = 0; v < n; ++v) {
      std::vector<int> to_nb, to_non;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        (g.adjacent(u, v) ? to_nb : to_non).push_back(g.common_neighbours(u, v));
      }
      std::sort(to_nb.begin(), to_nb.end());
      std::sort(to_non.begin(), to_non.end());
      auto key = std::make_tuple(g.degree(v), std::move(to_nb), std::move(to_non));
      colour[v] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
  }
  int colours = 0;
  for (int v = 0; v < n; ++v) colours = std::max(colours, colour[v] + 1);
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u : g.neighbours(v)) nb.push_back(colour[u]);
      std::sort(nb.begin(), nb.end());
      next[v] = ids.emplace(std::make_pair(colour[v], std::move(nb)),
                            static_cast<int>(ids.size()))
                    .first->second;
    }
    const int next_colours = static_cast<int>(ids.size());
    colour = std::move(next);
    if (next_colours == colours) break;
    colours = next_colours;
  }
  return colour;
}

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

struct Census {
  const Graph& g;
  SwapMode mode;
  std::optional<int> limit;
  std::vector<int> colour;
  std::vector<int> order;
  std::vector<int> map;       // image, or -1
  std::vector<int> assigned;  // vertices with an image, in assignment order
  std::vector<Permutation> found;

  bool full() const { return limit && static_cast<int>(found.size()) >= *limit; }

  bool fixed_ok(int x) const {
    for (int u : assigned) {
      if (g.adjacent(x, u) != g.adjacent(x, map[u])) return false;
      if (g.common_neighbours(x, u) != g.common_neighbours(x, map[u])) return false;
    }
    return true;
  }

  bool swap_ok(int x, int y) const {
    if (colour[x] != colour[y]) return false;
    if (g.adjacent(x, y) != (mode == SwapMode::adjacent_only)) return false;
    for (int u : assigned) {
      if (g.adjacent(x, u) != g.adjacent(y, map[u])) return false;
      if (g.adjacent(y, u) != g.adjacent(x, map[u])) return false;
      if (g.common_neighbours(x, u) != g.common_neighbours(y, map[u])) return false;
      if (g.common_neighbours(y, u) != g.common_neighbours(x, map[u])) return false;
    }
    return true;
  }

  void record() {
    Permutation p(map);
    if (p.is_identity()) return;
    if (!p.is_involution() || !is_automorphism(g, p))
      throw check_error("involution census produced an uncertified candidate");
    for (const auto& [a, b] : p.transpositions())
      if (g.adjacent(a, b) != (mode == SwapMode::adjacent_only))
        throw check_error("involution census violated the swap mode");
    found.push_back(std::move(p));
  }

  void run(size_t pos) {
    if (full()) return;
    if (pos == order.size()) {
      record();
      return;
    }
    const int x = order[pos];
    if (map[x] >= 0) {
      run(pos + 1);
      return;
    }
    if (fixed_ok(x)) {
      map[x] = x;
      assigned.push_back(x);
      run(pos + 1);
      assigned.pop_back();
      map[x] = -1;
    }
    for (int y = 0; y < g.size() && !full(); ++y) {
      if (y == x || map[y] >= 0 || !swap_ok(x, y)) continue;
      map[x] = y;
      map[y] = x;
      assigned.push_back(x);
      assigned.push_back(y);
      run(pos + 1);
      assigned.pop_back();
      assigned.pop_back();
      map[x] = map[y] = -1;
    }
  }
};

}  // namespace

std::vector<Permutation> find_special_involutions(const Graph& g, SwapMode mode,
                                                  std::optional<int> limit, int max_n) {
  if (g.size() > max_n) throw gate_error("involution census: graph exceeds the size bound");
  if (limit && *limit < 0) throw std::invalid_argument("involution census: negative limit");
  Census census{g, mode, limit, refined_colours(g), {}, std::vector<int>(g.size(), -1), {}, {}};
  census.order = search_order(g, census.colour);
  census.run(0);
  std::sort(census.found.begin(), census.found.end());
  return census.found;
}

}  // namespace deza
