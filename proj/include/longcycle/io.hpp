#pragma once

#include <string>
#include <string_view>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Standard graph6 layout: N(n) prefix, then the upper triangle packed
/// column by column into 6-bit chunks offset by 63.
std::string graph6_encode(const Graph& g);

/// Accepts an optional ">>graph6<<" header. Malformed bytes and truncated
/// bit streams raise FormatError carrying the byte offset.
Graph graph6_decode(std::string_view text);

}  // namespace longcycle
