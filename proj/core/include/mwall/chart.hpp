#pragma once

#include <map>
#include <vector>

#include "mwall/group_model.hpp"
#include "mwall/wallspace.hpp"

namespace mwall {

// Walls of a vertex wallspace that cut the orbit <z>.x, laid out on a line
// with period equal to the mass of the fundamental domain omega(x, z x).
// Chart parameter s in [kM, (k+1)M) lies in z^k omega(x, z x).
class CuttingChart {
 public:
  CuttingChart(const MeasuredWallspace& w, const GroupModel& m, const GroupElement& z, const Point& basepoint);

  const Scalar& period() const { return period_; }
  bool glues(std::size_t family) const;

  std::vector<MeasurableParamSet> glued_part(const std::vector<MeasurableParamSet>& sets) const;
  IntervalSet to_chart(const std::vector<MeasurableParamSet>& sets) const;  // glued part only
  std::vector<MeasurableParamSet> from_chart(const IntervalSet& s) const;

 private:
  struct Linear {
    Scalar base, delta, weight;
  };
  struct Tree {
    Scalar weight;
    Word z;
    std::vector<Word> path;  // x = p_0, ..., p_l = z x
    std::map<Word, std::size_t> index;
  };
  struct Slot {
    std::size_t family;
    Scalar offset, width;
    bool tree = false;
    Linear lin;
    Tree tr;
  };
  struct AxisPos {
    std::int64_t k;
    std::size_t j;
    bool forward;
  };
  std::optional<AxisPos> locate(const Tree& t, const AtomKey& key) const;

  std::size_t family_count_ = 0;
  std::vector<Slot> slots_;
  Scalar period_{0};
};

}  // namespace mwall
