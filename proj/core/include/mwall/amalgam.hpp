#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mwall/amalgam_spec.hpp"
#include "mwall/bass_serre.hpp"
#include "mwall/chart.hpp"

namespace mwall {

struct AmalgamPoint {
  TreeNode node;
  Point local;
  friend bool operator==(const AmalgamPoint&, const AmalgamPoint&) = default;
};

// Wall set living at one tree node, one set per family of its vertex wallspace.
struct WallPiece {
  TreeNode node;
  std::vector<MeasurableParamSet> sets;
};

struct SeparationBreakdown {
  Scalar vertical;
  Scalar horizontal;
  Scalar total() const { return vertical + horizontal; }
};

class AmalgamWallspace {
 public:
  // Hosts must lie within `radius` tree edges of the root.
  AmalgamWallspace(const GraphOfGroupsSpec& spec, int radius);

  const GraphOfGroupsSpec& spec() const { return spec_; }
  const GroupModel& group() const { return group_; }
  const GraphOfGroupsGroup& graph() const { return *graph_; }
  int radius() const { return radius_; }
  const MeasuredWallspace& vertex_wallspace(int v) const { return wallspaces_.at(static_cast<std::size_t>(v)); }
  // Vertical wall weight of every tree edge over graph edge e.
  Scalar vertical_weight(int e) const { return Scalar(e + 1); }

  AmalgamPoint point(const TreeNode& node, const Point& local) const;
  AmalgamPoint base_point() const;
  AmalgamPoint act(const GroupElement& g, const AmalgamPoint& p) const;

  // Basepoints of the tree edge from node_parent(child) to child.
  std::pair<AmalgamPoint, AmalgamPoint> edge_basepoints(const TreeNode& child) const;

  SeparationBreakdown separation(const AmalgamPoint& a, const AmalgamPoint& b) const;
  Scalar pseudometric(const AmalgamPoint& a, const AmalgamPoint& b) const { return separation(a, b).total(); }

  // Classes of the piece that are also represented at `to`, in its families.
  std::vector<MeasurableParamSet> transport(const WallPiece& piece, const TreeNode& to) const;
  // mu^h of the union of the pieces, summing over the nodes in the given order.
  Scalar horizontal_measure(const std::vector<WallPiece>& set, const std::vector<TreeNode>& enumeration) const;

  BassSerreTruncation truncation(int rep_radius = 2) const;

 private:
  struct Side {
    int vertex;
    CuttingChart chart;
    Point basepoint;
  };
  // Parent and child ends of the tree edge above `child`.
  std::pair<Side, Side> edge_sides(const TreeNode& child) const;
  Point local_act(int vertex, const GroupElement& g, const Point& p) const;
  void check_host(const TreeNode& n) const;
  Scalar local_measure(int vertex, const std::vector<MeasurableParamSet>& sets) const;

  GraphOfGroupsSpec spec_;
  std::shared_ptr<const GraphOfGroupsGroup> graph_;
  GroupModel group_;
  std::vector<MeasuredWallspace> wallspaces_;
  int radius_;
};

// Tree radius that holds g.x for every |g| <= ball_radius.
int truncation_for_ball(const AmalgamWallspace& aw, int ball_radius);

struct PropernessRow {
  int n = 0;
  Scalar min_value;
  std::string argmin_word;
  std::size_t sphere_size = 0;
  std::size_t max_tree_distance = 0;  // spread of hosts over the sphere
};

std::vector<PropernessRow> properness_profile(const AmalgamWallspace& aw, const AmalgamPoint& x, int radius,
                                              std::size_t cap = 200000);

}  // namespace mwall
