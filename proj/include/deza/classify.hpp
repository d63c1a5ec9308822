#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

enum class GraphClass { not_regular, regular_other, strongly_regular, deza, complete };

/// Everything classify() derives from the common-neighbour structure.
///
/// A graph is recorded as Deza when it is regular and the common-neighbour
/// count over distinct vertex pairs takes at most two values a <= b; this
/// includes strongly regular and complete graphs, which get the more specific
/// classification tag.  `strictly_deza` additionally requires diameter 2 and
/// not strongly regular.  For a != b, beta is the (constant) number of
/// vertices sharing b common neighbours with a given vertex and alpha the
/// same for a; for a == b, beta = n - 1 and alpha = 0.
struct ParameterReport {
  int n = 0;
  bool regular = false;
  std::optional<int> k;
  std::vector<int> common_values;  // distinct values, increasing
  GraphClass classification = GraphClass::not_regular;
  bool deza = false;
  std::optional<int> a, b;
  std::optional<int> srg_lambda, srg_mu;
  std::optional<long long> beta, alpha;
  bool strictly_deza = false;
  std::optional<int> diam;  // nullopt: disconnected
};

/// Exhaustive common-neighbour classification.  When the per-vertex beta
/// count is defined it is cross-checked against beta_formula; disagreement
/// throws check_error.
ParameterReport classify(const Graph& g);

const char* to_string(GraphClass c);

/// (k(k-1) - a(n-1)) / (b - a) as an exact rational; requires a != b.
boost::rational<long long> beta_formula(long long n, long long k, long long b, long long a);

/// The b-child joins pairs with b common neighbours, the a-child pairs with
/// a; their edge sets partition all vertex pairs.  Requires Deza with a != b.
struct Children {
  Graph b_child;
  Graph a_child;
};
Children children(const Graph& g);

/// Divisible-design test: does either child split into disjoint cliques?
/// `child` names the witness ('b' or 'a', checked in that order); thin means
/// every class is a single edge.  Requires properly Deza (not strongly
/// regular, not complete) with a != b.
struct DdgReport {
  bool is_ddg = false;
  char child = 0;
  std::vector<int> class_sizes;
  bool thin = false;
};
DdgReport is_ddg(const Graph& g);

}  // namespace deza
