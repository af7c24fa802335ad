#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwall/amalgam_spec.hpp"

namespace mwall {

struct ValidationOptions {
  int inner_radius = 2;   // coset tables for <z> in G_v
  int outer_radius = 3;
  int truncation = 4;     // plus the word length of z
  Scalar probe = 1;       // dispersal is compared at this distance
};

struct Check {
  std::string edge;       // empty for graph-level checks
  int end = -1;
  std::string vertex;
  std::string axiom;
  std::string code;       // set when the check fails
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  std::string name;
  std::vector<Check> checks;

  bool ok() const;
  std::vector<std::string> codes() const;  // failed codes in check order
  nlohmann::json to_json() const;
};

ValidationReport validate(const GraphOfGroupsSpec& s, const ValidationOptions& options = {});

}  // namespace mwall
