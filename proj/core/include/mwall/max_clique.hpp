#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mwall {

// Exact maximum clique of a graph on at most 64 vertices; adjacency[i] has
// bit j set when i ~ j. Returns vertex indices in increasing order.
std::vector<std::size_t> max_clique(const std::vector<std::uint64_t>& adjacency);

}  // namespace mwall
