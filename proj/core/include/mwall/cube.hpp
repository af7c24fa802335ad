#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "mwall/families.hpp"
#include "mwall/group_model.hpp"
#include "mwall/wallspace.hpp"

namespace mwall {

MeasuredWallspace standard_cubing(int n);
MeasuredWallspace line_wallspace();
MeasuredWallspace tree_wallspace(int rank);

// Product of per-coordinate integer intervals; nullopt bounds are unbounded.
struct BoxHull {
  std::vector<std::optional<std::int64_t>> lo;
  std::vector<std::optional<std::int64_t>> hi;
};

// Geodesic ray base, base*p, base*p*p, ... where base*p^inf is reduced.
struct TreeRay {
  Word base;
  Word period;
};

// Radius-`radius` neighbourhood of a connected finite vertex set plus rays.
struct SubtreeHull {
  int rank = 0;
  std::set<Word> core;
  std::vector<TreeRay> rays;
  std::int64_t radius = 0;
};

class CubeHull {
 public:
  explicit CubeHull(BoxHull b) : data_(std::move(b)) {}
  explicit CubeHull(SubtreeHull s) : data_(std::move(s)) {}

  bool is_box() const { return std::holds_alternative<BoxHull>(data_); }
  const BoxHull& box() const { return std::get<BoxHull>(data_); }
  const SubtreeHull& subtree() const { return std::get<SubtreeHull>(data_); }
  // Dimension of the ambient cube complex.
  std::size_t dimension() const;

  // Combinatorial distance from a vertex to the hull.
  std::int64_t distance_to(const Point& p) const;
  bool contains(const Point& p) const { return distance_to(p) == 0; }

 private:
  std::variant<BoxHull, SubtreeHull> data_;
};

// Points are single-part lattice points or tree vertices.
CubeHull hull(const std::vector<Point>& points, int tree_rank = 0);
// Hull of the orbit <z>.x: a line of boxes or an axis with its bridge to x.
CubeHull orbit_hull(const GroupModel& m, const GroupElement& z, const Point& x);
CubeHull thicken(const CubeHull& y, std::int64_t r);
Scalar hull_separation(const MeasuredWallspace& w, const CubeHull& y1, const CubeHull& y2);

// Nearest point of a (radius-0) subtree hull's core and rays to v.
Word subtree_projection(const SubtreeHull& s, const Word& v);

struct DualComplexDescriptor {
  int n = 0;
  IntMat subgroup_basis;  // k vectors
  IntMat complement;      // n - k vectors
};

struct DualComplex {
  MeasuredWallspace wallspace{1};
  // Rows are primitive integer functionals vanishing on the subgroup.
  IntMat quotient;
  bool single_orbit = false;

  IntVec quotient_of(const IntVec& g) const;
  bool stabilizes_base(const IntVec& g) const;
};

DualComplex dual_cube_complex(const DualComplexDescriptor& d);

}  // namespace mwall
