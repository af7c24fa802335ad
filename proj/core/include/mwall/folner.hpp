#pragma once

#include <cstdint>
#include <vector>

#include "mwall/wallspace.hpp"

namespace mwall {

// Boxes A_k = [-h_k, h_k]^n with weights w_k, k = 1..N.
struct FolnerSchedule {
  std::vector<std::int64_t> half_widths;
  std::vector<Scalar> weights;
};

// h_k = k * 2^k and w_k = k / |A_k|.
FolnerSchedule default_folner_schedule(int rank, int terms = 20);

// Walls g + A_k versus its complement, one atom per translate g, keyed
// {k, g_1, ..., g_n}. A point inside the translate is Right.
class FolnerFamily : public WallFamily {
 public:
  FolnerFamily(std::size_t part, int rank, FolnerSchedule schedule);

  const FolnerSchedule& schedule() const { return schedule_; }
  // Largest atom count separator_set will materialize.
  static constexpr std::size_t kMaterializeLimit = 200000;

  FamilyPtr relocated(std::size_t part) const override;
  std::string name() const override { return "folner"; }
  MeasurableParamSet separator_set(const Point& p, const Point& q) const override;
  Scalar separation(const Point& p, const Point& q) const override;
  Side side(const WallRef& wall, const Point& p) const override;
  bool is_cubical() const override { return false; }

 private:
  IntVec lattice_coords(const Point& p) const;
  int rank_;
  FolnerSchedule schedule_;
};

MeasuredWallspace folner_wallspace(int rank, const FolnerSchedule& schedule);

}  // namespace mwall
