#pragma once

#include <string>
#include <string_view>

#include "deza/graph.hpp"

namespace deza {

/// Canonical graph6 encoding (upper triangle in column order, 6-bit groups,
/// zero padding); supports 1 <= n <= 2^18.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode.  Accepts an optional ">>graph6<<" prefix and
/// trailing whitespace; rejects out-of-range n, bad byte values, wrong
/// length, and nonzero padding bits by throwing std::invalid_argument.
Graph graph6_decode(std::string_view text);

}  // namespace deza
