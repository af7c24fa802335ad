#pragma once

#include <string>
#include <vector>

#include "mwall/group_model.hpp"

namespace mwall {

struct GogEdge {
  int u = 0;
  int v = 0;
  GroupElement z_u;  // image of the edge generator in G_u
  GroupElement z_v;  // image in G_v; z_u^k e = e z_v^k
};

struct DirEdge {
  int edge = 0;
  bool forward = true;  // u -> v
  friend bool operator==(const DirEdge&, const DirEdge&) = default;
  friend auto operator<=>(const DirEdge&, const DirEdge&) = default;
  DirEdge reversed() const { return {edge, !forward}; }
};

// Alternating path g0 d1 g1 ... dn gn starting at `start`. elems has one more
// entry than edges.
struct GogPath {
  int start = 0;
  std::vector<GroupElement> elems{GroupElement{}};
  std::vector<DirEdge> edges;
  friend bool operator==(const GogPath&, const GogPath&) = default;
  friend auto operator<=>(const GogPath&, const GogPath&) = default;
};

// Fundamental group of a finite graph of groups with infinite cyclic edge
// groups, based at vertex `base`.
class GraphOfGroupsGroup {
 public:
  GraphOfGroupsGroup(std::vector<GroupModel> vertex_groups, std::vector<std::string> vertex_names,
                     std::vector<GogEdge> edges, std::vector<std::string> edge_names, int base = 0);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int base() const { return base_; }
  const GroupModel& vertex_group(int v) const { return vertices_.at(v); }
  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  const std::string& edge_name(int e) const { return edge_names_.at(e); }
  const GogEdge& edge(int e) const { return edges_.at(e); }

  int source(DirEdge d) const { return d.forward ? edges_[d.edge].u : edges_[d.edge].v; }
  int target(DirEdge d) const { return d.forward ? edges_[d.edge].v : edges_[d.edge].u; }
  const GroupElement& z_source(DirEdge d) const { return d.forward ? edges_[d.edge].z_u : edges_[d.edge].z_v; }
  const GroupElement& z_target(DirEdge d) const { return d.forward ? edges_[d.edge].z_v : edges_[d.edge].z_u; }

  // Spanning tree from the base vertex (BFS in edge order).
  bool is_tree_edge(int e) const { return tree_edge_[e]; }
  const std::vector<DirEdge>& tree_path(int v) const { return tree_path_[v]; }
  int end_vertex(const GogPath& p) const;

  // Reduced form with canonical transversals in every position but the last.
  GogPath normalize(const GogPath& p) const;
  GogPath concat(const GogPath& a, const GogPath& b) const;
  GogPath inverse(const GogPath& p) const;

  GroupElement encode(const GogPath& p) const;
  GogPath decode(const GroupElement& g) const;  // closed path at base

  std::vector<GroupElement> generators() const;
  std::vector<std::string> generator_labels() const;

  std::string format(const GroupElement& g) const;
  bool is_normal(const GroupElement& g) const;

  // Syllable ids: vertex v generator i -> vertex_offset(v)+i; edge e -> edge_offset()+e.
  int vertex_offset(int v) const { return offsets_[v]; }
  int edge_offset() const { return offsets_.back(); }

 private:
  std::vector<GroupModel> vertices_;
  std::vector<std::string> vertex_names_;
  std::vector<GogEdge> edges_;
  std::vector<std::string> edge_names_;
  int base_;
  std::vector<int> offsets_;
  std::vector<bool> tree_edge_;
  std::vector<std::vector<DirEdge>> tree_path_;
};

}  // namespace mwall
