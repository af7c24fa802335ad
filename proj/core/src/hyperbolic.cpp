#include "mwall/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mwall/errors.hpp"

namespace mwall::hyp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap(double t) {
  double r = std::fmod(t, kTwoPi);
  return r < 0 ? r + kTwoPi : r;
}

Complex boundary(double t) { return std::polar(1.0, t); }

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
const GaussRule& gauss_rule(int n) {
  static thread_local std::vector<std::pair<int, GaussRule>> cache;
  for (const auto& [k, r] : cache)
    if (k == n) return r;
  GaussRule r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    r.nodes[static_cast<std::size_t>(i)] = x;
    r.weights[static_cast<std::size_t>(i)] = 2 / ((1 - x * x) * dp * dp);
  }
  cache.emplace_back(n, r);
  return cache.back().second;
}

template <class F>
double integrate(F&& f, double a, double b, int panels, int order) {
  const auto& rule = gauss_rule(order);
  double h = (b - a) / panels, total = 0;
  for (int p = 0; p < panels; ++p) {
    double mid = a + (p + 0.5) * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) total += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
  }
  return total * 0.5 * h;
}

// Turning angle u in (0, 2 pi) from e^{i alpha} to the far endpoint of the
// geodesic through x.
double turn_through(const Mobius& to_x, const Mobius& from_x, double alpha) {
  Complex p = to_x.apply(boundary(alpha));
  Complex q = from_x.apply(-p);
  return wrap(std::arg(q) - alpha);
}

double cot_half(double u) { return 1.0 / std::tan(0.5 * u); }

bool strictly_inside_arc(double t, double from, double to) {
  double span = wrap(to - from);
  double off = wrap(t - from);
  return off > 1e-12 && off < span - 1e-12;
}

void check_point(const HPoint& p) {
  if (!(std::abs(p.z) < 1 - 1e-12)) fail(ErrorCode::InvalidArgument, "point outside the open unit disk");
}

}  // namespace

HPoint HPoint::at(double x, double y) {
  HPoint p{Complex(x, y)};
  check_point(p);
  return p;
}

HGeodesic HGeodesic::through(double alpha, double beta) {
  double d = wrap(alpha - beta);
  if (d < 1e-10 || kTwoPi - d < 1e-10) fail(ErrorCode::InvalidArgument, "geodesic endpoints coincide");
  return {wrap(alpha), wrap(beta)};
}

Complex Mobius::apply(Complex w) const { return (a * w + b) / (std::conj(b) * w + std::conj(a)); }

HGeodesic Mobius::apply(const HGeodesic& g) const {
  return HGeodesic::through(std::arg(apply(boundary(g.alpha))), std::arg(apply(boundary(g.beta))));
}

Mobius Mobius::inverse() const { return {std::conj(a), -b}; }

Mobius Mobius::then(const Mobius& next) const {
  return {next.a * a + next.b * std::conj(b), next.a * b + next.b * std::conj(a)};
}

Mobius Mobius::rotation(double phi) { return {std::polar(1.0, 0.5 * phi), 0}; }

Mobius Mobius::to_origin(Complex x) {
  double n = std::sqrt(1 - std::norm(x));
  return {Complex(1 / n, 0), -x / n};
}

Mobius Mobius::real_translation(double t) { return to_origin(Complex(-std::tanh(0.5 * t), 0)); }

double Mobius::translation_length() const {
  double tr = std::fabs(a.real());
  return tr > 1 ? 2 * std::acosh(tr) : 0;
}

double distance(const HPoint& x, const HPoint& y) {
  double r = std::abs(x.z - y.z) / std::abs(1.0 - std::conj(x.z) * y.z);
  return 2 * std::atanh(std::min(r, 1 - 1e-16));
}

HGeodesic geodesic_through(const HPoint& x, const HPoint& y) {
  check_point(x);
  check_point(y);
  Mobius t = Mobius::to_origin(x.z);
  Complex w = t.apply(y.z);
  if (std::abs(w) < 1e-15) fail(ErrorCode::InvalidArgument, "geodesic through a single point is not unique");
  Complex dir = w / std::abs(w);
  Mobius back = t.inverse();
  return HGeodesic::through(std::arg(back.apply(-dir)), std::arg(back.apply(dir)));
}

bool crosses(const HGeodesic& g, const HGeodesic& h) {
  bool in1 = strictly_inside_arc(h.alpha, g.alpha, g.beta);
  bool in2 = strictly_inside_arc(h.beta, g.alpha, g.beta);
  return in1 != in2;
}

double geodesic_distance(const HGeodesic& g, const HGeodesic& h) {
  if (crosses(g, h)) return 0;
  Complex a1 = boundary(g.alpha), a2 = boundary(g.beta), b1 = boundary(h.alpha), b2 = boundary(h.beta);
  auto f = [&](Complex w) { return (w - a1) / (w - a2); };
  Complex fb2 = f(b2);
  if (std::abs(fb2) == 0 || std::abs(b1 - a2) < 1e-15) return 0;
  double rho = std::abs(f(b1) / fb2);
  if (rho > 1) rho = 1 / rho;
  if (rho >= 1) return 0;
  return std::acosh((1 + rho) / (1 - rho));
}

namespace {

// The measure is isometry invariant, so the segment is moved to [-r, r] on
// the real diameter, where the integrand only has kinks at 0 and pi.
double raw_crossing(const HPoint& x, const HPoint& y, int panels, int order) {
  double r = std::tanh(0.25 * distance(x, y));
  Mobius tx = Mobius::to_origin(Complex(-r, 0)), ty = Mobius::to_origin(Complex(r, 0));
  Mobius bx = tx.inverse(), by = ty.inverse();
  auto integrand = [&](double alpha) {
    double ux = turn_through(tx, bx, alpha), uy = turn_through(ty, by, alpha);
    return 0.5 * std::fabs(cot_half(ux) - cot_half(uy));
  };
  return integrate(integrand, 0, kPi, panels, order) + integrate(integrand, kPi, kTwoPi, panels, order);
}

}  // namespace

GeodesicMeasure calibrate(const QuadratureSettings& settings) {
  if (settings.panels < 1 || settings.order < 1 || settings.angle_samples < 2)
    fail(ErrorCode::InvalidArgument, "quadrature settings must be positive");
  HPoint x{Complex(0, 0)}, y{Complex(std::tanh(0.5), 0)};
  double coarse = raw_crossing(x, y, settings.panels, settings.order);
  double fine = raw_crossing(x, y, 2 * settings.panels, settings.order);
  if (!(std::fabs(coarse - fine) <= settings.divergence_tol * std::fabs(fine)) || !(fine > 0))
    fail(ErrorCode::QuadratureDivergence, "unit segment quadrature did not stabilise");
  GeodesicMeasure m;
  m.c = 1.0 / fine;
  m.settings = settings;
  return m;
}

double crossing_measure(const GeodesicMeasure& m, const HPoint& x, const HPoint& y) {
  check_point(x);
  check_point(y);
  if (std::abs(x.z - y.z) < 1e-15) return 0;
  double coarse = raw_crossing(x, y, m.settings.panels, m.settings.order);
  double fine = raw_crossing(x, y, 2 * m.settings.panels, m.settings.order);
  if (!(std::fabs(coarse - fine) <= m.settings.divergence_tol * std::max(1.0, std::fabs(fine))))
    fail(ErrorCode::QuadratureDivergence, "crossing quadrature did not stabilise: " + std::to_string(coarse) + " vs " + std::to_string(fine));
  return m.c * fine;
}

double crossing_measure_at_angle(const GeodesicMeasure& m, const HPoint& x, const HPoint& y, double theta) {
  check_point(x);
  check_point(y);
  double d = distance(x, y);
  if (d < 1e-14 || theta >= 0.5 * kPi) return 0;
  theta = std::max(theta, 0.0);
  double r = std::tanh(0.25 * d);
  HPoint lx{Complex(-r, 0)}, ly{Complex(r, 0)};
  Mobius tx = Mobius::to_origin(lx.z), ty = Mobius::to_origin(ly.z);
  Mobius bx = tx.inverse(), by = ty.inverse();
  double cos_t = std::cos(theta);
  const int samples = m.settings.angle_samples;
  auto inner = [&](double alpha) {
    double vx = -0.5 * cot_half(turn_through(tx, bx, alpha));
    double vy = -0.5 * cot_half(turn_through(ty, by, alpha));
    double lo = std::min(vx, vy), hi = std::max(vx, vy);
    if (hi - lo < 1e-300) return 0.0;
    auto g = [&](double v) {
      double u = 2 * std::atan2(1.0, -2 * v);
      return cos_t * std::sin(0.5 * u) - std::fabs(std::sin(alpha + 0.5 * u));
    };
    std::vector<double> cuts{lo};
    double prev_v = lo, prev_g = g(lo);
    for (int i = 1; i <= samples; ++i) {
      double v = lo + (hi - lo) * i / samples;
      double gv = g(v);
      if ((prev_g >= 0) != (gv >= 0)) {
        double a = prev_v, b = v;
        bool a_pos = prev_g >= 0;
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (a + b);
          if ((g(mid) >= 0) == a_pos)
            a = mid;
          else
            b = mid;
        }
        cuts.push_back(0.5 * (a + b));
      }
      prev_v = v;
      prev_g = gv;
    }
    cuts.push_back(hi);
    double total = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      if (g(0.5 * (cuts[i] + cuts[i + 1])) >= 0) total += cuts[i + 1] - cuts[i];
    return total;
  };
  double raw = integrate(inner, 0, kPi, 4 * m.settings.panels, m.settings.order) +
               integrate(inner, kPi, kTwoPi, 4 * m.settings.panels, m.settings.order);
  return m.c * raw;
}

SeparationResult separating_measure(const GeodesicMeasure& m, const HGeodesic& a1, const HGeodesic& a2) {
  if (crosses(a1, a2)) return {0, true};
  // Order the four endpoints p1, p2, q1, q2 counterclockwise.
  double p1 = a1.alpha, p2 = a1.beta;
  if (strictly_inside_arc(a2.alpha, p1, p2) || strictly_inside_arc(a2.beta, p1, p2)) std::swap(p1, p2);
  double q1 = a2.alpha, q2 = a2.beta;
  if (wrap(q2 - p2) < wrap(q1 - p2)) std::swap(q1, q2);
  // Separating walls join the arc (p2, q1) to the arc (q2, p1).
  double s0 = p2, s1 = p2 + wrap(q1 - p2);
  double t0 = s1 + wrap(q2 - q1), t1 = t0 + wrap(p1 - q2);
  auto f = [](double a, double b) { return std::log(std::fabs(std::sin(0.5 * (b - a)))); };
  double one_way = f(s1, t1) - f(s0, t1) - f(s1, t0) + f(s0, t0);
  return {m.c * 2 * one_way, false};
}

double d0_of_theta0(double theta0) {
  if (!(theta0 > 0 && theta0 < 0.5 * kPi)) fail(ErrorCode::InvalidArgument, "theta0 must lie in (0, pi/2)");
  return std::asinh(1.0 / std::tan(theta0));
}

double half_measure_angle(const GeodesicMeasure& m, double tol) {
  HPoint x{Complex(0, 0)}, y{Complex(std::tanh(0.5), 0)};
  auto f = [&](double t) { return crossing_measure_at_angle(m, x, y, t); };
  double lo = 0, hi = 0.5 * kPi;
  double flo = f(lo);
  if (!(flo >= 0.5)) fail(ErrorCode::BisectionFailure, "full crossing measure is below one half");
  for (int it = 0; it < 48; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm >= 0.5) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  if (!(flo >= 0.5 && flo <= 0.5 + tol)) fail(ErrorCode::BisectionFailure, "half-measure angle not bracketed");
  return lo;
}

DistanceBoundReport distance_bound_check(const GeodesicMeasure& m, const HGeodesic& a1, const HGeodesic& a2,
                                         double theta0, double slack_per_unit) {
  DistanceBoundReport r;
  r.distance = geodesic_distance(a1, a2);
  r.lhs = separating_measure(m, a1, a2).value;
  r.rhs = 0.5 * std::floor(r.distance - 2 * d0_of_theta0(theta0));
  r.pass = r.lhs >= r.rhs - slack_per_unit * r.distance;
  return r;
}

Mobius random_isometry(std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> angle(0, kTwoPi);
  HPoint w = random_point(rng, r);
  return Mobius::to_origin(w.z).then(Mobius::rotation(angle(rng)));
}

HPoint random_point(std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> rad(0, r), angle(0, kTwoPi);
  return {std::polar(std::tanh(0.5 * rad(rng)), angle(rng))};
}

HPoint point_at(const HPoint& x, double d, double phi) {
  return {Mobius::to_origin(x.z).inverse().apply(std::polar(std::tanh(0.5 * d), phi))};
}

namespace {

HGeodesic perpendicular_to_real_axis(double x0) {
  if (std::fabs(x0) < 1e-15) return HGeodesic::through(0.5 * kPi, 1.5 * kPi);
  double phi = std::acos(2 * std::fabs(x0) / (1 + x0 * x0));
  if (x0 > 0) return HGeodesic::through(-phi, phi);
  return HGeodesic::through(kPi - phi, kPi + phi);
}

}  // namespace

std::pair<HGeodesic, HGeodesic> random_disjoint_pair(std::mt19937_64& rng, double d) {
  double s = std::tanh(0.25 * d);
  Mobius g = random_isometry(rng, 1.5);
  return {g.apply(perpendicular_to_real_axis(-s)), g.apply(perpendicular_to_real_axis(s))};
}

double foot_coordinate(const HGeodesic& g, const HPoint& p) {
  return std::log(std::abs(p.z - boundary(g.alpha))) - std::log(std::abs(p.z - boundary(g.beta)));
}

Point to_point(const HPoint& p) { return real_point({Scalar::from_double(p.z.real()), Scalar::from_double(p.z.imag())}); }

HPoint from_point(const Point& p, std::size_t part) {
  const Coords& c = coords_of(p, part);
  if (c.size() != 2) fail(ErrorCode::InvalidArgument, "disk points have two coordinates");
  return HPoint::at(c[0].to_double(), c[1].to_double());
}

std::shared_ptr<ChartFamily> axis_chart(const GeodesicMeasure& m, const HGeodesic& axis, const Mobius& z,
                                        std::size_t part) {
  (void)m;
  for (double t : {axis.alpha, axis.beta})
    if (std::abs(z.apply(boundary(t)) - boundary(t)) > 1e-8)
      fail(ErrorCode::NotTranslationAxis, "isometry does not fix the axis endpoints");
  double len = z.translation_length();
  if (!(len > 1e-9)) fail(ErrorCode::NotTranslationAxis, "isometry is not a translation");
  auto coord = [axis](const Coords& c) {
    if (c.size() != 2) fail(ErrorCode::InvalidArgument, "disk points have two coordinates");
    return Scalar::from_double(foot_coordinate(axis, HPoint::at(c[0].to_double(), c[1].to_double())));
  };
  return std::make_shared<ChartFamily>(part, coord, "axis", Scalar::from_double(len));
}

}  // namespace mwall::hyp
