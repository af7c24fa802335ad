#include "mwall/amalgam.hpp"

#include "mwall/errors.hpp"

namespace mwall {

namespace {

using Sets = std::vector<MeasurableParamSet>;

Sets symmetric_difference(const Sets& a, const Sets& b) {
  Sets out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].symmetric_difference(b[i]);
  return out;
}

Sets minus(const Sets& a, const Sets& b) {
  Sets out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].minus(b[i]);
  return out;
}

Sets unite(const Sets& a, const Sets& b) {
  Sets out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].unite(b[i]);
  return out;
}

bool all_empty(const Sets& s) {
  for (const auto& x : s)
    if (!x.empty()) return false;
  return true;
}

TreeNode prefix(const TreeNode& n, std::size_t len) {
  TreeNode p;
  p.start = n.start;
  p.edges.assign(n.edges.begin(), n.edges.begin() + static_cast<long>(len));
  p.elems.assign(n.elems.begin(), n.elems.begin() + static_cast<long>(len + 1));
  p.elems.back() = GroupElement{};
  return p;
}

std::shared_ptr<const GraphOfGroupsGroup> build_group(const GraphOfGroupsSpec& s) {
  std::vector<GroupModel> models;
  std::vector<std::string> names;
  for (const auto& v : s.vertices) {
    models.push_back(vertex_model(v));
    names.push_back(v.id);
  }
  std::vector<GogEdge> edges;
  std::vector<std::string> edge_names;
  for (const auto& e : s.edges) {
    GogEdge g;
    g.u = e.ends[0].vertex;
    g.v = e.ends[1].vertex;
    g.z_u = local_element(models[static_cast<std::size_t>(g.u)], e.ends[0].generator_image);
    g.z_v = local_element(models[static_cast<std::size_t>(g.v)], e.ends[1].generator_image);
    edges.push_back(std::move(g));
    edge_names.push_back(e.id);
  }
  return std::make_shared<GraphOfGroupsGroup>(std::move(models), std::move(names), std::move(edges),
                                              std::move(edge_names), s.base);
}

}  // namespace

AmalgamWallspace::AmalgamWallspace(const GraphOfGroupsSpec& spec, int radius)
    : spec_(spec), graph_(build_group(spec)), group_(GroupModel::amalgam(graph_)), radius_(radius) {
  if (radius < 0) fail(ErrorCode::InvalidArgument, "truncation radius must be nonnegative");
  for (const auto& v : spec_.vertices) wallspaces_.push_back(mwall::vertex_wallspace(v));
  for (std::size_t e = 0; e < spec_.edges.size(); ++e) {
    Scalar period[2];
    for (int k = 0; k < 2; ++k) {
      const auto& end = spec_.edges[e].ends[k];
      const auto& m = graph_->vertex_group(end.vertex);
      CuttingChart c(wallspaces_[static_cast<std::size_t>(end.vertex)], m, local_element(m, end.generator_image),
                     local_point(spec_.vertices[static_cast<std::size_t>(end.vertex)], end.basepoint));
      period[k] = c.period();
    }
    if (period[0] != period[1])
      fail(ErrorCode::GluePeriodMismatch, "edge " + spec_.edges[e].id + " glues fundamental domains of mass " +
                                              period[0].str() + " and " + period[1].str());
  }
}

Point AmalgamWallspace::local_act(int vertex, const GroupElement& g, const Point& p) const {
  const GroupModel& m = graph_->vertex_group(vertex);
  Point out = p;
  if (m.kind() == GroupKind::FreeAbelian) {
    IntVec v = m.to_vector(g);
    Coords& c = std::get<Coords>(out.at(0));
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) c.at(i) += Scalar(v[i]);
  } else {
    out.at(0) = words::concat(m.to_word(g), word_of(p, 0));
  }
  return out;
}

void AmalgamWallspace::check_host(const TreeNode& n) const {
  if (node_depth(n) > static_cast<std::size_t>(radius_))
    fail(ErrorCode::HostOutsideTruncation, "host " + format_node(*graph_, n) + " lies outside the truncation");
}

Scalar AmalgamWallspace::local_measure(int vertex, const Sets& sets) const {
  return wallspaces_.at(static_cast<std::size_t>(vertex)).measure(sets);
}

AmalgamPoint AmalgamWallspace::point(const TreeNode& node, const Point& local) const {
  check_host(node);
  return {node, local};
}

AmalgamPoint AmalgamWallspace::base_point() const {
  int b = spec_.base;
  const auto& vs = spec_.vertices[static_cast<std::size_t>(b)];
  for (const auto& e : spec_.edges)
    for (const auto& end : e.ends)
      if (end.vertex == b) return {root_node(*graph_), local_point(vs, end.basepoint)};
  if (vs.kind == VertexKind::FreeAbelian) return {root_node(*graph_), lattice_point(IntVec(static_cast<std::size_t>(vs.rank), 0))};
  return {root_node(*graph_), tree_point({})};
}

AmalgamPoint AmalgamWallspace::act(const GroupElement& g, const AmalgamPoint& p) const {
  GogPath path = graph_->normalize(graph_->concat(graph_->decode(g), p.node));
  GroupElement h = path.elems.back();
  path.elems.back() = GroupElement{};
  int v = node_vertex(*graph_, path);
  return {path, local_act(v, h, p.local)};
}

std::pair<AmalgamWallspace::Side, AmalgamWallspace::Side> AmalgamWallspace::edge_sides(const TreeNode& child) const {
  if (child.edges.empty()) fail(ErrorCode::InvalidArgument, "the root has no parent edge");
  DirEdge d = child.edges.back();
  const GroupElement& t = child.elems[child.edges.size() - 1];
  const auto& edge = spec_.edges[static_cast<std::size_t>(d.edge)];
  const EdgeEndSpec& src = edge.ends[d.forward ? 0 : 1];
  const EdgeEndSpec& tgt = edge.ends[d.forward ? 1 : 0];
  int sv = graph_->source(d), tv = graph_->target(d);
  const GroupModel& sm = graph_->vertex_group(sv);
  Point sx = local_act(sv, t, local_point(spec_.vertices[static_cast<std::size_t>(sv)], src.basepoint));
  GroupElement sz = sm.multiply(sm.multiply(t, graph_->z_source(d)), sm.invert(t));
  Point tx = local_point(spec_.vertices[static_cast<std::size_t>(tv)], tgt.basepoint);
  Side parent{sv, CuttingChart(wallspaces_[static_cast<std::size_t>(sv)], sm, sz, sx), sx};
  Side kid{tv, CuttingChart(wallspaces_[static_cast<std::size_t>(tv)], graph_->vertex_group(tv), graph_->z_target(d), tx), tx};
  return {std::move(parent), std::move(kid)};
}

std::pair<AmalgamPoint, AmalgamPoint> AmalgamWallspace::edge_basepoints(const TreeNode& child) const {
  auto [p, c] = edge_sides(child);
  return {AmalgamPoint{node_parent(child), p.basepoint}, AmalgamPoint{child, c.basepoint}};
}

SeparationBreakdown AmalgamWallspace::separation(const AmalgamPoint& a, const AmalgamPoint& b) const {
  check_host(a.node);
  check_host(b.node);
  SeparationBreakdown out;
  std::size_t c = common_steps(a.node, b.node);
  int vertex = node_vertex(*graph_, a.node);
  Point cur = a.local;
  Sets odd(wallspaces_[static_cast<std::size_t>(vertex)].family_count());
  auto cross = [&](const Side& from, const Side& to, int orbit) {
    const auto& w = wallspaces_[static_cast<std::size_t>(from.vertex)];
    odd = symmetric_difference(odd, w.separators(cur, from.basepoint));
    Sets glued = from.chart.glued_part(odd);
    out.horizontal += w.measure(minus(odd, glued));
    odd = to.chart.from_chart(from.chart.to_chart(glued));
    cur = to.basepoint;
    out.vertical += vertical_weight(orbit);
  };
  for (std::size_t i = a.node.edges.size(); i > c; --i) {
    TreeNode child = prefix(a.node, i);
    auto [parent, kid] = edge_sides(child);
    cross(kid, parent, child.edges.back().edge);
  }
  for (std::size_t i = c + 1; i <= b.node.edges.size(); ++i) {
    TreeNode child = prefix(b.node, i);
    auto [parent, kid] = edge_sides(child);
    cross(parent, kid, child.edges.back().edge);
  }
  int last = node_vertex(*graph_, b.node);
  const auto& w = wallspaces_[static_cast<std::size_t>(last)];
  odd = symmetric_difference(odd, w.separators(cur, b.local));
  out.horizontal += w.measure(odd);
  return out;
}

Sets AmalgamWallspace::transport(const WallPiece& piece, const TreeNode& to) const {
  Sets sets = piece.sets;
  std::size_t c = common_steps(piece.node, to);
  auto hop = [&](const Side& from, const Side& dest) {
    if (all_empty(sets)) {
      sets = Sets(wallspaces_[static_cast<std::size_t>(dest.vertex)].family_count());
      return;
    }
    sets = dest.chart.from_chart(from.chart.to_chart(from.chart.glued_part(sets)));
  };
  for (std::size_t i = piece.node.edges.size(); i > c; --i) {
    auto [parent, kid] = edge_sides(prefix(piece.node, i));
    hop(kid, parent);
  }
  for (std::size_t i = c + 1; i <= to.edges.size(); ++i) {
    auto [parent, kid] = edge_sides(prefix(to, i));
    hop(parent, kid);
  }
  return sets;
}

Scalar AmalgamWallspace::horizontal_measure(const std::vector<WallPiece>& set,
                                            const std::vector<TreeNode>& enumeration) const {
  std::vector<WallPiece> counted;
  Scalar total = 0;
  for (const auto& node : enumeration) {
    int v = node_vertex(*graph_, node);
    Sets here(wallspaces_[static_cast<std::size_t>(v)].family_count());
    for (const auto& piece : set) here = unite(here, transport(piece, node));
    for (const auto& prev : counted) {
      if (all_empty(here)) break;
      here = minus(here, transport(prev, node));
    }
    total += local_measure(v, here);
    counted.push_back({node, std::move(here)});
  }
  return total;
}

BassSerreTruncation AmalgamWallspace::truncation(int rep_radius) const {
  return bass_serre_truncation(*graph_, radius_, rep_radius);
}

int truncation_for_ball(const AmalgamWallspace& aw, int ball_radius) {
  std::size_t reach = 0;
  for (std::size_t i = 0; i < aw.group().generator_labels().size(); ++i) {
    GogPath p = aw.graph().decode(aw.group().generator(i));
    reach = std::max(reach, p.edges.size());
  }
  return static_cast<int>(reach) * ball_radius;
}

std::vector<PropernessRow> properness_profile(const AmalgamWallspace& aw, const AmalgamPoint& x, int radius,
                                              std::size_t cap) {
  if (radius < 0) fail(ErrorCode::InvalidArgument, "radius must be nonnegative");
  auto ball = enumerate_ball(aw.group(), radius, cap);
  std::vector<PropernessRow> rows(static_cast<std::size_t>(radius) + 1);
  std::vector<bool> seen(rows.size(), false);
  for (std::size_t n = 0; n < rows.size(); ++n) rows[n].n = static_cast<int>(n);
  for (const auto& entry : ball) {
    auto& row = rows[static_cast<std::size_t>(entry.length)];
    AmalgamPoint gx = aw.act(entry.element, x);
    Scalar d = aw.pseudometric(x, gx);
    ++row.sphere_size;
    row.max_tree_distance = std::max(row.max_tree_distance, tree_distance(x.node, gx.node));
    if (!seen[static_cast<std::size_t>(entry.length)] || d < row.min_value) {
      row.min_value = d;
      row.argmin_word = format_generator_word(aw.group(), entry.word);
      seen[static_cast<std::size_t>(entry.length)] = true;
    }
  }
  return rows;
}

}  // namespace mwall
