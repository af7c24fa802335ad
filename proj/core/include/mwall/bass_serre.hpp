#pragma once

#include <cstddef>
#include <vector>

#include "mwall/graph_group.hpp"

namespace mwall {

// Vertex g G_v of the Bass-Serre tree: a normalized path from the base
// vertex whose final vertex-group element is the identity. The parent of a
// node drops its last step.
using TreeNode = GogPath;

TreeNode root_node(const GraphOfGroupsGroup& g);
std::size_t node_depth(const TreeNode& n);
int node_vertex(const GraphOfGroupsGroup& g, const TreeNode& n);
TreeNode node_parent(const TreeNode& n);
// Neighbour across d, with transversal t of G_v / <z_source(d)>.
TreeNode node_step(const GraphOfGroupsGroup& g, const TreeNode& n, const GroupElement& t, DirEdge d);
// Shared prefix length of the step sequences.
std::size_t common_steps(const TreeNode& a, const TreeNode& b);
std::size_t tree_distance(const TreeNode& a, const TreeNode& b);
std::string format_node(const GraphOfGroupsGroup& g, const TreeNode& n);

struct BassSerreTruncation {
  int radius = 0;
  int rep_radius = 0;
  std::vector<TreeNode> nodes;  // breadth first from the root
  struct Edge {
    std::size_t parent;
    std::size_t child;
    int orbit;  // edge of the underlying graph
  };
  std::vector<Edge> edges;

  std::size_t index_of(const TreeNode& n) const;  // nodes.size() when absent
};

// Nodes within `radius` tree edges of the root, using coset representatives
// of each edge group meeting ball(rep_radius) of the vertex group.
BassSerreTruncation bass_serre_truncation(const GraphOfGroupsGroup& g, int radius, int rep_radius = 2,
                                          std::size_t cap = 100000);

}  // namespace mwall
