#pragma once

#include <vector>

#include "mwall/amalgam_spec.hpp"
#include "mwall/graph_group.hpp"

namespace mwall {

struct ModularCycle {
  std::vector<DirEdge> path;
  Scalar product;
};

struct ModularReport {
  // w(e) = rho at ends[1] / rho at ends[0], edges oriented ends[0] -> ends[1].
  std::vector<Scalar> edge_weights;
  // Fundamental cycles of the spanning tree from the base vertex.
  std::vector<ModularCycle> cycles;
  bool trivial = true;
};

ModularReport modular_weights(const GraphOfGroupsSpec& s);
Scalar directed_weight(const ModularReport& r, DirEdge d);
// Product of weights along a closed path; InvalidArgument if it is not closed.
Scalar cycle_product(const GraphOfGroupsSpec& s, const ModularReport& r, const std::vector<DirEdge>& path);

// Per-vertex factors lambda_v with lambda_base = 1 making every rho equal.
std::vector<Scalar> monic_factors(const GraphOfGroupsSpec& s, int base);
// Vertices scaled by monic_factors and all rho set to 1.
GraphOfGroupsSpec monic_rescale(const GraphOfGroupsSpec& s, int base);

}  // namespace mwall
