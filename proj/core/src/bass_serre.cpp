#include "mwall/bass_serre.hpp"

#include <algorithm>
#include <map>

#include "mwall/errors.hpp"

namespace mwall {

TreeNode root_node(const GraphOfGroupsGroup& g) {
  TreeNode n;
  n.start = g.base();
  return n;
}

std::size_t node_depth(const TreeNode& n) { return n.edges.size(); }

int node_vertex(const GraphOfGroupsGroup& g, const TreeNode& n) { return g.end_vertex(n); }

TreeNode node_parent(const TreeNode& n) {
  if (n.edges.empty()) fail(ErrorCode::InvalidArgument, "the root has no parent");
  TreeNode p = n;
  p.edges.pop_back();
  p.elems.pop_back();
  p.elems.back() = GroupElement{};
  return p;
}

TreeNode node_step(const GraphOfGroupsGroup& g, const TreeNode& n, const GroupElement& t, DirEdge d) {
  TreeNode p = n;
  p.elems.back() = t;
  p.edges.push_back(d);
  p.elems.push_back(GroupElement{});
  TreeNode out = g.normalize(p);
  out.elems.back() = GroupElement{};
  return out;
}

std::size_t common_steps(const TreeNode& a, const TreeNode& b) {
  if (a.start != b.start) fail(ErrorCode::InvalidArgument, "nodes from different trees");
  std::size_t k = 0;
  while (k < a.edges.size() && k < b.edges.size() && a.edges[k] == b.edges[k] && a.elems[k] == b.elems[k]) ++k;
  return k;
}

std::size_t tree_distance(const TreeNode& a, const TreeNode& b) {
  std::size_t c = common_steps(a, b);
  return a.edges.size() + b.edges.size() - 2 * c;
}

std::string format_node(const GraphOfGroupsGroup& g, const TreeNode& n) {
  std::string out = g.vertex_name(n.start);
  for (std::size_t i = 0; i < n.edges.size(); ++i) {
    int v = i == 0 ? n.start : g.target(n.edges[i - 1]);
    out += " " + g.vertex_group(v).format(n.elems[i]) + " " + g.edge_name(n.edges[i].edge) + (n.edges[i].forward ? "+" : "-");
  }
  return out;
}

std::size_t BassSerreTruncation::index_of(const TreeNode& n) const {
  auto it = std::find(nodes.begin(), nodes.end(), n);
  return static_cast<std::size_t>(it - nodes.begin());
}

BassSerreTruncation bass_serre_truncation(const GraphOfGroupsGroup& g, int radius, int rep_radius, std::size_t cap) {
  if (radius < 0 || rep_radius < 0) fail(ErrorCode::InvalidArgument, "truncation radii must be nonnegative");
  BassSerreTruncation t;
  t.radius = radius;
  t.rep_radius = rep_radius;
  // Transversals per directed edge, computed once.
  std::map<DirEdge, std::vector<GroupElement>> reps;
  for (int e = 0; e < g.edge_count(); ++e) {
    for (bool fwd : {true, false}) {
      DirEdge d{e, fwd};
      const GroupModel& m = g.vertex_group(g.source(d));
      reps[d] = coset_representatives(m, SubgroupSpec({g.z_source(d)}), rep_radius);
    }
  }
  t.nodes.push_back(root_node(g));
  std::size_t frontier_begin = 0;
  for (int depth = 0; depth < radius; ++depth) {
    std::size_t frontier_end = t.nodes.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      const TreeNode n = t.nodes[i];
      int v = node_vertex(g, n);
      for (int e = 0; e < g.edge_count(); ++e) {
        for (bool fwd : {true, false}) {
          DirEdge d{e, fwd};
          if (g.source(d) != v) continue;
          for (const auto& tr : reps[d]) {
            TreeNode c = node_step(g, n, tr, d);
            if (node_depth(c) != node_depth(n) + 1) continue;  // back to the parent
            if (t.nodes.size() >= cap) fail(ErrorCode::TruncationOverflow, "Bass-Serre truncation exceeds the node cap");
            t.edges.push_back({i, t.nodes.size(), e});
            t.nodes.push_back(std::move(c));
          }
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return t;
}

}  // namespace mwall
