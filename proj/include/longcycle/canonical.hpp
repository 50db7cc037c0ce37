#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Exact isomorphism certificate: two graphs are isomorphic iff their
/// certificate bytes are equal. The bytes are the order followed by the
/// row-packed adjacency matrix of the canonically relabelled graph.
struct Certificate {
  std::vector<std::uint8_t> bytes;
  std::vector<int> relabeling;  // relabeling[v] = canonical position of v

  auto operator<=>(const Certificate& other) const {
    return bytes <=> other.bytes;
  }
  bool operator==(const Certificate& other) const {
    return bytes == other.bytes;
  }
};

/// Certificate plus the automorphism data the search discovers along the
/// way: a generating set for Aut(G) and the vertex orbit partition.
struct CanonicalInfo {
  Certificate certificate;
  std::vector<std::vector<int>> generators;  // vertex -> vertex maps
  std::vector<int> orbit;  // orbit[v] = smallest vertex in v's Aut-orbit
};

Certificate canonical(const Graph& g);
CanonicalInfo canonical_info(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// The canonically relabelled copy itself (same certificate as g).
Graph canonical_form(const Graph& g);

/// Compact printable key (graph6 of the canonical form); handy for sets.
std::string canonical_key(const Graph& g);

}  // namespace longcycle
