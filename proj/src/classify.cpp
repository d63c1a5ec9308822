#include "deza/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "deza/error.hpp"

namespace deza {

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::not_regular: return "not-regular";
    case GraphClass::regular_other: return "regular-other";
    case GraphClass::strongly_regular: return "srg";
    case GraphClass::deza: return "deza";
    case GraphClass::complete: return "complete";
  }
  return "?";
}

boost::rational<long long> beta_formula(long long n, long long k, long long b, long long a) {
  if (a == b) throw gate_error("beta_formula requires a != b");
  return {k * (k - 1) - a * (n - 1), b - a};
}

ParameterReport classify(const Graph& g) {
  ParameterReport rep;
  const int n = g.size();
  rep.n = n;

  rep.regular = is_regular(g);
  rep.diam = diameter(g);
  if (!rep.regular) {
    rep.classification = GraphClass::not_regular;
    return rep;
  }
  rep.k = g.degree(0);

  std::set<int> values, adj_values, non_values;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int c = g.common_neighbours(u, v);
      values.insert(c);
      (g.adjacent(u, v) ? adj_values : non_values).insert(c);
    }
  }
  rep.common_values.assign(values.begin(), values.end());

  if (non_values.empty()) {
    // All pairs adjacent (vacuously for n = 1).
    rep.classification = GraphClass::complete;
    rep.deza = true;
    if (!values.empty()) rep.a = rep.b = *values.begin();
    rep.beta = n - 1;
    rep.alpha = 0;
    return rep;
  }

  const bool srg = adj_values.size() == 1 && non_values.size() == 1 && !adj_values.empty();
  rep.deza = values.size() <= 2;
  if (srg) {
    rep.classification = GraphClass::strongly_regular;
    rep.srg_lambda = *adj_values.begin();
    rep.srg_mu = *non_values.begin();
  } else if (rep.deza) {
    rep.classification = GraphClass::deza;
  } else {
    rep.classification = GraphClass::regular_other;
  }

  if (rep.deza) {
    const int a = *values.begin(), b = *values.rbegin();
    rep.a = a;
    rep.b = b;
    if (a == b) {
      rep.beta = n - 1;
      rep.alpha = 0;
    } else {
      std::set<long long> beta_counts;
      for (int v = 0; v < n; ++v) {
        long long cnt = 0;
        for (int u = 0; u < n; ++u)
          if (u != v && g.common_neighbours(u, v) == b) ++cnt;
        beta_counts.insert(cnt);
      }
      if (beta_counts.size() != 1) throw check_error("beta count is not constant on a Deza graph");
      rep.beta = *beta_counts.begin();
      rep.alpha = n - 1 - *rep.beta;
      const auto expect = beta_formula(n, *rep.k, b, a);
      if (expect.denominator() != 1 || expect.numerator() != *rep.beta)
        throw check_error("beta count disagrees with the counting identity");
    }
  }
  rep.strictly_deza = rep.classification == GraphClass::deza && rep.diam == 2;
  return rep;
}

Children children(const Graph& g) {
  const auto rep = classify(g);
  if (!rep.deza || !rep.a || !rep.b || *rep.a == *rep.b)
    throw gate_error("children requires a Deza graph with a != b");
  const int n = g.size();
  Children ch{Graph(n), Graph(n)};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int c = g.common_neighbours(u, v);
      (c == *rep.b ? ch.b_child : ch.a_child).set_edge(u, v);
    }
  }
  return ch;
}

namespace {

// Component sizes when every component is a clique; nullopt otherwise.
std::optional<std::vector<int>> clique_partition(const Graph& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<int> sizes;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    std::vector<int> stack{s}, members;
    comp[s] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (g.adjacent(u, v) && comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        if (!g.adjacent(members[i], members[j])) return std::nullopt;
    sizes.push_back(static_cast<int>(members.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

DdgReport is_ddg(const Graph& g) {
  const auto rep = classify(g);
  if (rep.classification != GraphClass::deza || !rep.a || !rep.b || *rep.a == *rep.b)
    throw gate_error("is_ddg requires a properly Deza graph with a != b");
  const auto ch = children(g);
  DdgReport out;
  for (auto [child, tag] : {std::pair<const Graph*, char>{&ch.b_child, 'b'},
                            std::pair<const Graph*, char>{&ch.a_child, 'a'}}) {
    if (auto sizes = clique_partition(*child)) {
      out.is_ddg = true;
      out.child = tag;
      out.class_sizes = *sizes;
      out.thin = std::all_of(sizes->begin(), sizes->end(), [](int s) { return s == 2; });
      return out;
    }
  }
  return out;
}

}  // namespace deza
