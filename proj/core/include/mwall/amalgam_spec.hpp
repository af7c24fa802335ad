#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwall/group_model.hpp"
#include "mwall/lattice.hpp"
#include "mwall/rational.hpp"
#include "mwall/wallspace.hpp"

namespace mwall {

enum class VertexKind { FreeAbelian, Free };

struct DualFactor {
  IntMat subgroup;
  IntMat complement;
};

struct VertexSpec {
  std::string id;
  VertexKind kind = VertexKind::FreeAbelian;
  int rank = 1;
  std::vector<DualFactor> extra_factors;
  Scalar scale{1};
};

// Generator images and basepoints are integer vectors on free abelian
// vertices and reduced words on free vertices.
using LocalElement = std::variant<IntVec, Word>;

struct EdgeEndSpec {
  int vertex = 0;
  LocalElement generator_image;
  LocalElement basepoint;
  Scalar rho{1};
};

struct EdgeSpec {
  std::string id;
  EdgeEndSpec ends[2];
};

struct GraphOfGroupsSpec {
  std::string name;
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  int base = 0;

  int vertex_index(const std::string& id) const;
};

GraphOfGroupsSpec parse_spec(const nlohmann::json& doc);
GraphOfGroupsSpec parse_spec_text(const std::string& text);
GraphOfGroupsSpec load_spec(const std::string& path);
nlohmann::json spec_to_json(const GraphOfGroupsSpec& s);

GroupModel vertex_model(const VertexSpec& v);
// Standard cubing plus dual-complex factors, or the Cayley tree; scaled.
MeasuredWallspace vertex_wallspace(const VertexSpec& v);
GroupElement local_element(const GroupModel& m, const LocalElement& e);
Point local_point(const VertexSpec& v, const LocalElement& e);

}  // namespace mwall
