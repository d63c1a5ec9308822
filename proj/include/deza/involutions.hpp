#pragma once

#include <optional>
#include <vector>

#include "deza/graph.hpp"
#include "deza/permutation.hpp"

namespace deza {

enum class SwapMode { non_adjacent_only, adjacent_only };

/// Exhaustive search for non-identity involutive automorphisms whose
/// transposed pairs are all non-adjacent (or all adjacent, per mode); fixed
/// points are unconstrained.  Backtracking maps vertices in BFS order from
/// the most constrained vertex, pruning with degree and common-neighbour
/// profiles; every returned permutation is re-certified in full.  The result
/// is sorted by image array, so it is deterministic and conjugation-
/// equivariant under relabeling.  With limit, the search stops after that
/// many involutions (the found prefix, sorted).  Graphs larger than max_n
/// are rejected (gate_error).
std::vector<Permutation> find_special_involutions(const Graph& g, SwapMode mode,
                                                  std::optional<int> limit = std::nullopt,
                                                  int max_n = 128);

}  // namespace deza
