#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mwall/wallspace.hpp"

namespace mwall {

// Walls {f <= t} for a linear functional f on a coordinate part, Lebesgue
// density in t. A point is Left of the wall at t iff t >= f(p).
class LinearFamily : public WallFamily {
 public:
  LinearFamily(std::size_t part, std::vector<Scalar> coefficients, std::string name = "linear");
  static std::shared_ptr<LinearFamily> axis(std::size_t part, std::size_t dim, std::size_t index);

  Scalar coordinate(const Point& p) const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  void set_period(Scalar period) { period_ = std::move(period); }

  FamilyPtr relocated(std::size_t part) const override;
  std::string name() const override { return name_; }
  MeasurableParamSet separator_set(const Point& p, const Point& q) const override;
  Scalar separation(const Point& p, const Point& q) const override;
  Side side(const WallRef& wall, const Point& p) const override;
  MeasurableParamSet set_separator_set(const std::vector<Point>& a, const std::vector<Point>& b) const override;
  std::optional<Scalar> period() const override { return period_; }

 private:
  std::vector<Scalar> coeffs_;
  std::optional<std::size_t> axis_;
  std::string name_;
  std::optional<Scalar> period_;
};

// Real-valued chart on a coordinate part given by an arbitrary function;
// used for axis charts where the coordinate is not linear.
class ChartFamily : public WallFamily {
 public:
  using Coordinate = std::function<Scalar(const Coords&)>;
  ChartFamily(std::size_t part, Coordinate coordinate, std::string name, std::optional<Scalar> period = std::nullopt);

  Scalar coordinate(const Point& p) const { return coord_(coords_of(p, part())); }

  FamilyPtr relocated(std::size_t part) const override;
  std::string name() const override { return name_; }
  MeasurableParamSet separator_set(const Point& p, const Point& q) const override;
  Side side(const WallRef& wall, const Point& p) const override;
  bool is_cubical() const override { return false; }
  std::optional<Scalar> period() const override { return period_; }

 private:
  Coordinate coord_;
  std::string name_;
  std::optional<Scalar> period_;
};

// Hyperplanes of the Cayley tree of a free group: one unit atom per edge.
// Atom key {g, letters of w...} stands for the edge from w to w*x_g; the
// side containing w*x_g is Right.
class TreeFamily : public WallFamily {
 public:
  TreeFamily(std::size_t part, int rank) : WallFamily(part), rank_(rank) {}

  int rank() const { return rank_; }
  static AtomKey edge_key(const Word& from, int gen);
  // Edge between adjacent vertices u, v.
  static AtomKey edge_between(const Word& u, const Word& v);
  static std::pair<Word, Word> edge_ends(const AtomKey& key);

  FamilyPtr relocated(std::size_t part) const override;
  std::string name() const override { return "tree"; }
  MeasurableParamSet separator_set(const Point& p, const Point& q) const override;
  Scalar separation(const Point& p, const Point& q) const override;
  Side side(const WallRef& wall, const Point& p) const override;
  // Geodesic edges between two vertices, in order from p to q.
  static std::vector<AtomKey> path_edges(const Word& p, const Word& q);

 private:
  int rank_;
};

}  // namespace mwall
