#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mwall/families.hpp"

namespace mwall::hyp {

using Complex = std::complex<double>;

// Point of the unit disk model.
struct HPoint {
  Complex z;
  static HPoint at(double x, double y);
};

// Geodesic with boundary endpoints e^{i alpha}, e^{i beta}.
struct HGeodesic {
  double alpha = 0;
  double beta = 0;
  static HGeodesic through(double alpha, double beta);
};

// Disk automorphism w -> (a w + b) / (conj(b) w + conj(a)), |a|^2 - |b|^2 = 1.
struct Mobius {
  Complex a{1, 0};
  Complex b{0, 0};

  Complex apply(Complex w) const;
  HPoint apply(const HPoint& p) const { return {apply(p.z)}; }
  HGeodesic apply(const HGeodesic& g) const;
  Mobius inverse() const;
  Mobius then(const Mobius& next) const;  // next after this

  static Mobius rotation(double phi);
  // Sends x to 0.
  static Mobius to_origin(Complex x);
  // Hyperbolic translation of length t along the real diameter, towards +1.
  static Mobius real_translation(double t);
  double translation_length() const;
};

double distance(const HPoint& x, const HPoint& y);
HGeodesic geodesic_through(const HPoint& x, const HPoint& y);
bool crosses(const HGeodesic& a, const HGeodesic& b);
// Distance between disjoint geodesics; 0 when they cross or share an endpoint.
double geodesic_distance(const HGeodesic& a, const HGeodesic& b);

struct QuadratureSettings {
  int panels = 48;
  int order = 8;
  int angle_samples = 64;
  double divergence_tol = 1e-6;
};

struct GeodesicMeasure {
  double c = 1.0;  // density c * da db / (4 sin^2((b - a)/2)) over ordered endpoint pairs
  QuadratureSettings settings;
};

GeodesicMeasure calibrate(const QuadratureSettings& settings = {});

// Measure of geodesics separating x and y.
double crossing_measure(const GeodesicMeasure& m, const HPoint& x, const HPoint& y);
// Same with the density integrated only over crossings at angle >= theta
// with the segment [x, y].
double crossing_measure_at_angle(const GeodesicMeasure& m, const HPoint& x, const HPoint& y, double theta);

struct SeparationResult {
  double value = 0;
  bool crossing = false;
};
SeparationResult separating_measure(const GeodesicMeasure& m, const HGeodesic& a1, const HGeodesic& a2);

double d0_of_theta0(double theta0);
double half_measure_angle(const GeodesicMeasure& m, double tol = 0.03);

struct DistanceBoundReport {
  double distance = 0;
  double lhs = 0;
  double rhs = 0;
  bool pass = false;
};
DistanceBoundReport distance_bound_check(const GeodesicMeasure& m, const HGeodesic& a1, const HGeodesic& a2,
                                         double theta0, double slack_per_unit = 0.01);

// Pair of disjoint geodesics at distance d, moved by a random isometry.
std::pair<HGeodesic, HGeodesic> random_disjoint_pair(std::mt19937_64& rng, double d);
// Random point within hyperbolic radius r of the origin.
HPoint random_point(std::mt19937_64& rng, double r);
// Point at distance d from x in direction phi.
HPoint point_at(const HPoint& x, double d, double phi);
Mobius random_isometry(std::mt19937_64& rng, double r);

// Coordinate of the foot of the perpendicular from p to g; increases towards e^{i beta}.
double foot_coordinate(const HGeodesic& g, const HPoint& p);

// Periodic chart of walls crossing the axis of z, on a two-coordinate point part.
std::shared_ptr<ChartFamily> axis_chart(const GeodesicMeasure& m, const HGeodesic& axis, const Mobius& z,
                                        std::size_t part = 0);
Point to_point(const HPoint& p);
HPoint from_point(const Point& p, std::size_t part = 0);

}  // namespace mwall::hyp
