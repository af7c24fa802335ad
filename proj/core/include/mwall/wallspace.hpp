#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mwall/free_word.hpp"
#include "mwall/lattice.hpp"
#include "mwall/param_set.hpp"

namespace mwall {

using Coords = std::vector<Scalar>;
// A point has one part per factor of a product; a part is either real
// coordinates or a vertex of a free-group Cayley tree.
using PointPart = std::variant<Coords, Word>;
using Point = std::vector<PointPart>;

Point lattice_point(const IntVec& v);
Point real_point(Coords c);
Point tree_point(Word w);
Point join(const Point& a, const Point& b);
std::string format_point(const Point& p);

const Coords& coords_of(const Point& p, std::size_t part);
const Word& word_of(const Point& p, std::size_t part);

enum class Side { Left, Right };

// One wall: a parameter on the family line, or a position inside an atom.
struct WallRef {
  std::optional<AtomKey> atom;
  Scalar t;
};

class WallFamily {
 public:
  explicit WallFamily(std::size_t part) : part_(part) {}
  virtual ~WallFamily() = default;

  std::size_t part() const { return part_; }
  virtual std::shared_ptr<const WallFamily> relocated(std::size_t part) const = 0;
  virtual std::string name() const = 0;

  virtual MeasurableParamSet separator_set(const Point& p, const Point& q) const = 0;
  virtual Scalar separation(const Point& p, const Point& q) const { return separator_set(p, q).measure(); }
  virtual Side side(const WallRef& wall, const Point& p) const = 0;
  // Walls with all of A on one side and all of B on the other.
  virtual MeasurableParamSet set_separator_set(const std::vector<Point>& a, const std::vector<Point>& b) const;

  // Walls come from hyperplanes of a CAT(0) cube complex.
  virtual bool is_cubical() const { return true; }
  virtual std::optional<Scalar> period() const { return std::nullopt; }

 private:
  std::size_t part_;
};

using FamilyPtr = std::shared_ptr<const WallFamily>;

struct WeightedFamily {
  FamilyPtr family;
  Scalar weight{1};
};

class MeasuredWallspace {
 public:
  explicit MeasuredWallspace(std::size_t parts = 1) : parts_(parts) {}

  void add_family(FamilyPtr family, Scalar weight = 1);
  std::size_t part_count() const { return parts_; }
  const std::vector<WeightedFamily>& families() const { return families_; }
  std::size_t family_count() const { return families_.size(); }

  Scalar pseudometric(const Point& x, const Point& y) const;
  std::vector<MeasurableParamSet> separators(const Point& x, const Point& y) const;
  std::vector<MeasurableParamSet> set_separators(const std::vector<Point>& a, const std::vector<Point>& b) const;
  Scalar set_distance(const std::vector<Point>& a, const std::vector<Point>& b) const;
  // Weighted total of per-family sets.
  Scalar measure(const std::vector<MeasurableParamSet>& sets) const;
  bool is_cubical() const;

 private:
  std::size_t parts_;
  std::vector<WeightedFamily> families_;
};

Scalar pseudometric(const MeasuredWallspace& w, const Point& x, const Point& y);
MeasuredWallspace product(const MeasuredWallspace& a, const MeasuredWallspace& b);
MeasuredWallspace scale(const MeasuredWallspace& w, const Scalar& lambda);

enum class WallClass { Cut, Skim, Disjoint, Undetermined };
const char* wall_class_name(WallClass c);

struct OrbitSample {
  std::int64_t k;  // orbit index; the two tails are k -> +inf and k -> -inf
  Point point;
};

WallClass classify_wall(const MeasuredWallspace& w, std::size_t family, const WallRef& wall,
                        const std::vector<OrbitSample>& orbit);

}  // namespace mwall
