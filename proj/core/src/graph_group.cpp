#include "mwall/graph_group.hpp"

#include <deque>
#include <sstream>

#include "mwall/errors.hpp"

namespace mwall {

GraphOfGroupsGroup::GraphOfGroupsGroup(std::vector<GroupModel> vertex_groups, std::vector<std::string> vertex_names,
                                       std::vector<GogEdge> edges, std::vector<std::string> edge_names, int base)
    : vertices_(std::move(vertex_groups)),
      vertex_names_(std::move(vertex_names)),
      edges_(std::move(edges)),
      edge_names_(std::move(edge_names)),
      base_(base) {
  const int nv = vertex_count();
  if (nv == 0) fail(ErrorCode::InvalidArgument, "graph of groups has no vertices");
  if (base_ < 0 || base_ >= nv) fail(ErrorCode::InvalidArgument, "base vertex out of range");
  if (vertex_names_.size() != vertices_.size() || edge_names_.size() != edges_.size())
    fail(ErrorCode::InvalidArgument, "name lists do not match graph size");
  for (const auto& v : vertices_)
    if (v.kind() == GroupKind::Amalgam) fail(ErrorCode::InvalidArgument, "vertex groups must be free or free abelian");
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv) fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    vertices_[e.u].check(e.z_u);
    vertices_[e.v].check(e.z_v);
    if (e.z_u.is_identity() || e.z_v.is_identity())
      fail(ErrorCode::InvalidArgument, "edge group image is trivial");
  }
  offsets_.push_back(0);
  for (const auto& v : vertices_) offsets_.push_back(offsets_.back() + static_cast<int>(v.generator_count()));

  tree_edge_.assign(edges_.size(), false);
  tree_path_.assign(vertices_.size(), {});
  std::vector<bool> seen(vertices_.size(), false);
  seen[base_] = true;
  std::deque<int> queue{base_};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int e = 0; e < edge_count(); ++e) {
      const auto& ed = edges_[e];
      if (ed.u == ed.v) continue;
      int other = -1;
      DirEdge d{e, true};
      if (ed.u == x) {
        other = ed.v;
      } else if (ed.v == x) {
        other = ed.u;
        d.forward = false;
      }
      if (other < 0 || seen[other]) continue;
      seen[other] = true;
      tree_edge_[e] = true;
      tree_path_[other] = tree_path_[x];
      tree_path_[other].push_back(d);
      queue.push_back(other);
    }
  }
  for (int v = 0; v < nv; ++v)
    if (!seen[v]) fail(ErrorCode::InvalidArgument, "graph of groups is not connected");
}

int GraphOfGroupsGroup::end_vertex(const GogPath& p) const {
  return p.edges.empty() ? p.start : target(p.edges.back());
}

GogPath GraphOfGroupsGroup::normalize(const GogPath& p) const {
  if (p.elems.size() != p.edges.size() + 1) fail(ErrorCode::MalformedWord, "path has mismatched lengths");
  GogPath out;
  out.start = p.start;
  out.elems.clear();
  int cur_v = p.start;
  GroupElement cur = p.elems[0];
  vertices_[cur_v].check(cur);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    DirEdge d = p.edges[i];
    if (source(d) != cur_v) fail(ErrorCode::MalformedWord, "path edges are not consecutive");
    const GroupModel& here = vertices_[cur_v];
    CyclicSplit sp = split_by_cyclic(here, cur, z_source(d));
    if (!out.edges.empty() && out.edges.back() == d.reversed() && sp.transversal.is_identity()) {
      DirEdge prev = out.edges.back();
      out.edges.pop_back();
      int b = source(prev);
      GroupElement t = out.elems.back();
      out.elems.pop_back();
      const GroupModel& there = vertices_[b];
      cur = there.multiply(there.multiply(t, there.power(z_source(prev), sp.power)), p.elems[i + 1]);
      cur_v = b;
      continue;
    }
    out.elems.push_back(sp.transversal);
    out.edges.push_back(d);
    int b = target(d);
    const GroupModel& there = vertices_[b];
    cur = there.multiply(there.power(z_target(d), sp.power), p.elems[i + 1]);
    cur_v = b;
  }
  out.elems.push_back(cur);
  return out;
}

GogPath GraphOfGroupsGroup::concat(const GogPath& a, const GogPath& b) const {
  int mid = end_vertex(a);
  if (mid != b.start) fail(ErrorCode::MalformedWord, "paths do not compose");
  GogPath out;
  out.start = a.start;
  out.elems.assign(a.elems.begin(), a.elems.end() - 1);
  out.elems.push_back(vertices_[mid].multiply(a.elems.back(), b.elems.front()));
  out.elems.insert(out.elems.end(), b.elems.begin() + 1, b.elems.end());
  out.edges = a.edges;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

GogPath GraphOfGroupsGroup::inverse(const GogPath& p) const {
  GogPath out;
  out.start = end_vertex(p);
  out.elems.clear();
  int v = out.start;
  for (std::size_t i = p.elems.size(); i-- > 0;) {
    out.elems.push_back(vertices_[v].invert(p.elems[i]));
    if (i > 0) {
      DirEdge d = p.edges[i - 1].reversed();
      out.edges.push_back(d);
      v = target(d);
    }
  }
  return out;
}

GroupElement GraphOfGroupsGroup::encode(const GogPath& p) const {
  std::vector<Syllable> w;
  int v = p.start;
  for (std::size_t i = 0; i < p.elems.size(); ++i) {
    for (const auto& s : p.elems[i].word()) w.push_back({s.gen + offsets_[v], s.exp});
    if (i < p.edges.size()) {
      const DirEdge& d = p.edges[i];
      w.push_back({edge_offset() + d.edge, d.forward ? 1 : -1});
      v = target(d);
    }
  }
  return GroupElement(std::move(w));
}

GogPath GraphOfGroupsGroup::decode(const GroupElement& g) const {
  GogPath p;
  p.start = base_;
  p.elems.clear();
  int v = base_;
  std::vector<Syllable> cur;
  for (const auto& s : g.word()) {
    if (s.gen >= edge_offset()) {
      int e = s.gen - edge_offset();
      if (e >= edge_count() || (s.exp != 1 && s.exp != -1)) fail(ErrorCode::MalformedWord, "bad edge syllable");
      DirEdge d{e, s.exp == 1};
      if (source(d) != v) fail(ErrorCode::MalformedWord, "edge syllable does not leave the current vertex");
      p.elems.emplace_back(std::move(cur));
      cur.clear();
      p.edges.push_back(d);
      v = target(d);
    } else {
      if (s.gen < offsets_[v] || s.gen >= offsets_[v + 1])
        fail(ErrorCode::MalformedWord, "vertex syllable belongs to a different vertex");
      cur.push_back({s.gen - offsets_[v], s.exp});
    }
  }
  p.elems.emplace_back(std::move(cur));
  for (std::size_t i = 0; i < p.elems.size(); ++i) {
    int at = i == 0 ? base_ : target(p.edges[i - 1]);
    vertices_[at].check(p.elems[i]);
  }
  if (v != base_) fail(ErrorCode::MalformedWord, "path does not return to the base vertex");
  return p;
}

bool GraphOfGroupsGroup::is_normal(const GroupElement& g) const {
  try {
    GogPath p = decode(g);
    return normalize(p) == p;
  } catch (const Error&) {
    return false;
  }
}

std::vector<GroupElement> GraphOfGroupsGroup::generators() const {
  std::vector<GroupElement> gens;
  auto along = [&](const std::vector<DirEdge>& path) {
    GogPath p;
    p.start = base_;
    p.edges = path;
    p.elems.assign(path.size() + 1, GroupElement{});
    return p;
  };
  for (int v = 0; v < vertex_count(); ++v) {
    for (std::size_t i = 0; i < vertices_[v].generator_count(); ++i) {
      GogPath to = along(tree_path_[v]);
      to.elems.back() = vertices_[v].generator(i);
      GogPath back = inverse(along(tree_path_[v]));
      gens.push_back(encode(normalize(concat(to, back))));
    }
  }
  for (int e = 0; e < edge_count(); ++e) {
    if (tree_edge_[e]) continue;
    GogPath to = along(tree_path_[edges_[e].u]);
    GogPath step;
    step.start = edges_[e].u;
    step.edges = {DirEdge{e, true}};
    step.elems.assign(2, GroupElement{});
    GogPath back = inverse(along(tree_path_[edges_[e].v]));
    gens.push_back(encode(normalize(concat(concat(to, step), back))));
  }
  return gens;
}

std::vector<std::string> GraphOfGroupsGroup::generator_labels() const {
  std::vector<std::string> labels;
  for (int v = 0; v < vertex_count(); ++v)
    for (const auto& l : vertices_[v].generator_labels()) labels.push_back(vertex_names_[v] + "." + l);
  for (int e = 0; e < edge_count(); ++e)
    if (!tree_edge_[e]) labels.push_back("t." + edge_names_[e]);
  return labels;
}

std::string GraphOfGroupsGroup::format(const GroupElement& g) const {
  if (g.is_identity()) return "e";
  GogPath p = decode(g);
  std::ostringstream os;
  int v = p.start;
  for (std::size_t i = 0; i < p.elems.size(); ++i) {
    if (i > 0) os << " ";
    os << vertex_names_[v] << ":" << vertices_[v].format(p.elems[i]);
    if (i < p.edges.size()) {
      const DirEdge& d = p.edges[i];
      os << " " << edge_names_[d.edge] << (d.forward ? "+" : "-");
      v = target(d);
    }
  }
  return os.str();
}

}  // namespace mwall
