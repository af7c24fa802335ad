#include "mwall/modular.hpp"

#include <deque>

#include "mwall/errors.hpp"

namespace mwall {

namespace {

struct SpanningTree {
  std::vector<std::vector<DirEdge>> path;  // from the base
  std::vector<bool> tree_edge;
};

int edge_source(const GraphOfGroupsSpec& s, DirEdge d) {
  const auto& e = s.edges[static_cast<std::size_t>(d.edge)];
  return d.forward ? e.ends[0].vertex : e.ends[1].vertex;
}

int edge_target(const GraphOfGroupsSpec& s, DirEdge d) { return edge_source(s, d.reversed()); }

SpanningTree spanning_tree(const GraphOfGroupsSpec& s, int base) {
  SpanningTree t;
  std::size_t n = s.vertices.size();
  t.path.assign(n, {});
  t.tree_edge.assign(s.edges.size(), false);
  std::vector<bool> seen(n, false);
  seen[static_cast<std::size_t>(base)] = true;
  std::deque<int> queue{base};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
      for (bool fwd : {true, false}) {
        DirEdge d{static_cast<int>(e), fwd};
        if (edge_source(s, d) != v) continue;
        int u = edge_target(s, d);
        if (seen[static_cast<std::size_t>(u)]) continue;
        seen[static_cast<std::size_t>(u)] = true;
        t.tree_edge[e] = true;
        t.path[static_cast<std::size_t>(u)] = t.path[static_cast<std::size_t>(v)];
        t.path[static_cast<std::size_t>(u)].push_back(d);
        queue.push_back(u);
      }
    }
  }
  for (bool b : seen)
    if (!b) fail(ErrorCode::InvalidArgument, "graph must be connected");
  return t;
}

}  // namespace

Scalar directed_weight(const ModularReport& r, DirEdge d) {
  const Scalar& w = r.edge_weights.at(static_cast<std::size_t>(d.edge));
  return d.forward ? w : Scalar(1) / w;
}

ModularReport modular_weights(const GraphOfGroupsSpec& s) {
  ModularReport r;
  for (const auto& e : s.edges) {
    if (e.ends[0].rho.sign() <= 0 || e.ends[1].rho.sign() <= 0) fail(ErrorCode::NonpositiveScale, "rho must be positive");
    r.edge_weights.push_back(e.ends[1].rho / e.ends[0].rho);
  }
  SpanningTree t = spanning_tree(s, s.base);
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    if (t.tree_edge[e]) continue;
    DirEdge d{static_cast<int>(e), true};
    ModularCycle c;
    c.path = t.path[static_cast<std::size_t>(edge_source(s, d))];
    c.path.push_back(d);
    const auto& back = t.path[static_cast<std::size_t>(edge_target(s, d))];
    for (auto it = back.rbegin(); it != back.rend(); ++it) c.path.push_back(it->reversed());
    c.product = cycle_product(s, r, c.path);
    if (c.product != Scalar(1)) r.trivial = false;
    r.cycles.push_back(std::move(c));
  }
  return r;
}

Scalar cycle_product(const GraphOfGroupsSpec& s, const ModularReport& r, const std::vector<DirEdge>& path) {
  Scalar p = 1;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i].edge < 0 || static_cast<std::size_t>(path[i].edge) >= s.edges.size())
      fail(ErrorCode::InvalidArgument, "unknown edge in path");
    if (i + 1 < path.size() && edge_target(s, path[i]) != edge_source(s, path[i + 1]))
      fail(ErrorCode::InvalidArgument, "path is not connected");
    p *= directed_weight(r, path[i]);
  }
  if (!path.empty() && edge_target(s, path.back()) != edge_source(s, path.front()))
    fail(ErrorCode::InvalidArgument, "path is not closed");
  return p;
}

std::vector<Scalar> monic_factors(const GraphOfGroupsSpec& s, int base) {
  if (base < 0 || static_cast<std::size_t>(base) >= s.vertices.size()) fail(ErrorCode::InvalidArgument, "unknown base vertex");
  ModularReport r = modular_weights(s);
  for (const auto& c : r.cycles) {
    if (c.product == Scalar(1)) continue;
    std::string path;
    for (const auto& d : c.path)
      path += (path.empty() ? "" : " ") + s.edges[static_cast<std::size_t>(d.edge)].id + (d.forward ? "+" : "-");
    fail(ErrorCode::NontrivialModular, "cycle " + path + " has product " + c.product.str());
  }
  SpanningTree t = spanning_tree(s, base);
  std::vector<Scalar> lambda(s.vertices.size(), Scalar(1));
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    Scalar l = 1;
    // Crossing u -> w multiplies by rho_u / rho_w so both ends carry equal mass.
    for (const auto& d : t.path[v]) l /= directed_weight(r, d);
    lambda[v] = l;
  }
  return lambda;
}

GraphOfGroupsSpec monic_rescale(const GraphOfGroupsSpec& s, int base) {
  std::vector<Scalar> lambda = monic_factors(s, base);
  GraphOfGroupsSpec out = s;
  for (std::size_t v = 0; v < out.vertices.size(); ++v) out.vertices[v].scale = out.vertices[v].scale * lambda[v];
  for (auto& e : out.edges)
    for (auto& end : e.ends) end.rho = 1;
  return out;
}

}  // namespace mwall
