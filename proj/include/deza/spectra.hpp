#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

using BigInt = boost::multiprecision::cpp_int;

/// Closed-walk counts per vertex: counts[l - 2][v] is the number of closed
/// walks of length l at v (the diagonal of A^l), for l = 2..max_length.
/// Exact integers; counts for length 2 equal the degree sequence.
struct WalkProfile {
  int max_length = 0;
  std::vector<std::vector<BigInt>> counts;
};

WalkProfile walk_profile(const Graph& g, int max_length);

/// diag(A^l) constant for every l = 2..n-1?  first_failing_length is the
/// smallest l violating constancy.  Exact big-integer arithmetic throughout.
struct WalkRegularity {
  bool walk_regular = false;
  std::optional<int> first_failing_length;
};

WalkRegularity is_walk_regular(const Graph& g);

/// Multiplicity of the integer lambda as an adjacency eigenvalue:
/// n - rank(A - lambda*I), computed by fraction-free (Bareiss) elimination
/// over the integers with row pivoting.  Returns 0 when lambda is not an
/// eigenvalue.
int eigenvalue_multiplicity(const Graph& g, long long lambda);

}  // namespace deza
