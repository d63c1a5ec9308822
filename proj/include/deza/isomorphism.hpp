#pragma once

#include <optional>

#include "deza/graph.hpp"
#include "deza/permutation.hpp"

namespace deza {

/// Exact isomorphism search: returns a vertex bijection f with
/// g.adjacent(u, v) == h.adjacent(f(u), f(v)), or nullopt when none exists.
/// Colour refinement seeded with degree and common-neighbour profiles prunes
/// the backtracking; any returned mapping is re-verified in full.
/// Graphs larger than max_n are rejected (gate_error).
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h, int max_n = 120);

bool are_isomorphic(const Graph& g, const Graph& h, int max_n = 120);

}  // namespace deza
