#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mwall/rational.hpp"

namespace mwall {

struct Interval {
  Scalar lo;
  Scalar hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of half-open intervals [lo, hi), sorted, disjoint and with
// touching pieces merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet of(Scalar lo, Scalar hi);
  static IntervalSet from_list(std::vector<Interval> pieces);

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  Scalar measure() const;
  bool contains(const Scalar& t) const;

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet minus(const IntervalSet& o) const;
  IntervalSet symmetric_difference(const IntervalSet& o) const;
  IntervalSet shifted(const Scalar& by) const;
  // Image under t -> a*t + b. Negative a keeps the half-open convention.
  IntervalSet affine_image(const Scalar& a, const Scalar& b) const;

  std::string str() const;
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  template <class Op>
  IntervalSet combine(const IntervalSet& o, Op op) const;
  std::vector<Interval> pieces_;
};

using AtomKey = std::vector<std::int64_t>;

struct AtomPart {
  Scalar weight;
  IntervalSet fraction;  // subset of [0, 1)
  friend bool operator==(const AtomPart&, const AtomPart&) = default;
};

// A set of walls in one family: a Lebesgue part on the parameter line plus
// weighted atoms. An atom may be split; its fraction is a subset of [0, 1)
// carrying the atom's weight uniformly.
class MeasurableParamSet {
 public:
  MeasurableParamSet() = default;
  explicit MeasurableParamSet(IntervalSet line) : line_(std::move(line)) {}

  static IntervalSet unit() { return IntervalSet::of(0, 1); }

  const IntervalSet& line() const { return line_; }
  IntervalSet& line() { return line_; }
  const std::map<AtomKey, AtomPart>& atoms() const { return atoms_; }

  void add_atom(const AtomKey& key, const Scalar& weight, const IntervalSet& fraction = unit());

  bool empty() const { return line_.empty() && atoms_.empty(); }
  Scalar measure() const;
  std::size_t atom_count() const { return atoms_.size(); }

  MeasurableParamSet unite(const MeasurableParamSet& o) const;
  MeasurableParamSet intersect(const MeasurableParamSet& o) const;
  MeasurableParamSet minus(const MeasurableParamSet& o) const;
  MeasurableParamSet symmetric_difference(const MeasurableParamSet& o) const;

  std::string str() const;
  friend bool operator==(const MeasurableParamSet&, const MeasurableParamSet&) = default;

 private:
  template <class Op>
  MeasurableParamSet combine(const MeasurableParamSet& o, Op op) const;
  IntervalSet line_;
  std::map<AtomKey, AtomPart> atoms_;
};

}  // namespace mwall
