#include "mwall/wallspace.hpp"

#include <cstdlib>
#include <sstream>

#include "mwall/errors.hpp"

namespace mwall {

Point lattice_point(const IntVec& v) {
  Coords c;
  c.reserve(v.size());
  for (auto x : v) c.emplace_back(x);
  return Point{PointPart{std::move(c)}};
}

Point real_point(Coords c) { return Point{PointPart{std::move(c)}}; }
Point tree_point(Word w) { return Point{PointPart{words::reduce(w)}}; }

Point join(const Point& a, const Point& b) {
  Point r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string format_point(const Point& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << " x ";
    if (const auto* c = std::get_if<Coords>(&p[i])) {
      os << "(";
      for (std::size_t j = 0; j < c->size(); ++j) os << (j ? "," : "") << (*c)[j];
      os << ")";
    } else {
      os << words::format(std::get<Word>(p[i]));
    }
  }
  return os.str();
}

const Coords& coords_of(const Point& p, std::size_t part) {
  if (part >= p.size()) fail(ErrorCode::InvalidArgument, "point has no part " + std::to_string(part));
  const auto* c = std::get_if<Coords>(&p[part]);
  if (!c) fail(ErrorCode::InvalidArgument, "point part " + std::to_string(part) + " is not a coordinate vector");
  return *c;
}

const Word& word_of(const Point& p, std::size_t part) {
  if (part >= p.size()) fail(ErrorCode::InvalidArgument, "point has no part " + std::to_string(part));
  const auto* w = std::get_if<Word>(&p[part]);
  if (!w) fail(ErrorCode::InvalidArgument, "point part " + std::to_string(part) + " is not a tree vertex");
  return *w;
}

MeasurableParamSet WallFamily::set_separator_set(const std::vector<Point>& a, const std::vector<Point>& b) const {
  if (a.empty() || b.empty()) fail(ErrorCode::InvalidArgument, "set separators need nonempty sets");
  // omega(A,B) = omega(a0,b0) n omega(a,b0) n omega(a0,b) over all a, b.
  MeasurableParamSet s = separator_set(a.front(), b.front());
  for (std::size_t i = 1; i < a.size() && !s.empty(); ++i) s = s.intersect(separator_set(a[i], b.front()));
  for (std::size_t j = 1; j < b.size() && !s.empty(); ++j) s = s.intersect(separator_set(a.front(), b[j]));
  return s;
}

void MeasuredWallspace::add_family(FamilyPtr family, Scalar weight) {
  if (!family) fail(ErrorCode::InvalidArgument, "null wall family");
  if (weight.sign() <= 0) fail(ErrorCode::NonpositiveScale, "family weight must be positive");
  if (family->part() >= parts_) fail(ErrorCode::InvalidArgument, "family reads a point part outside the wallspace");
  families_.push_back({std::move(family), std::move(weight)});
}

Scalar MeasuredWallspace::pseudometric(const Point& x, const Point& y) const {
  Scalar total = 0;
  for (const auto& f : families_) {
    Scalar s = f.family->separation(x, y);
    if (!s.is_zero()) total += f.weight * s;
  }
  return total;
}

std::vector<MeasurableParamSet> MeasuredWallspace::separators(const Point& x, const Point& y) const {
  std::vector<MeasurableParamSet> out;
  out.reserve(families_.size());
  for (const auto& f : families_) out.push_back(f.family->separator_set(x, y));
  return out;
}

std::vector<MeasurableParamSet> MeasuredWallspace::set_separators(const std::vector<Point>& a,
                                                                  const std::vector<Point>& b) const {
  std::vector<MeasurableParamSet> out;
  out.reserve(families_.size());
  for (const auto& f : families_) out.push_back(f.family->set_separator_set(a, b));
  return out;
}

Scalar MeasuredWallspace::measure(const std::vector<MeasurableParamSet>& sets) const {
  if (sets.size() != families_.size()) fail(ErrorCode::InvalidArgument, "one set per family expected");
  Scalar total = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) total += families_[i].weight * sets[i].measure();
  return total;
}

Scalar MeasuredWallspace::set_distance(const std::vector<Point>& a, const std::vector<Point>& b) const {
  return measure(set_separators(a, b));
}

bool MeasuredWallspace::is_cubical() const {
  for (const auto& f : families_)
    if (!f.family->is_cubical()) return false;
  return true;
}

Scalar pseudometric(const MeasuredWallspace& w, const Point& x, const Point& y) { return w.pseudometric(x, y); }

MeasuredWallspace product(const MeasuredWallspace& a, const MeasuredWallspace& b) {
  MeasuredWallspace r(a.part_count() + b.part_count());
  for (const auto& f : a.families()) r.add_family(f.family, f.weight);
  for (const auto& f : b.families()) r.add_family(f.family->relocated(f.family->part() + a.part_count()), f.weight);
  return r;
}

MeasuredWallspace scale(const MeasuredWallspace& w, const Scalar& lambda) {
  if (lambda.sign() <= 0) fail(ErrorCode::NonpositiveScale, "scale factor must be positive, got " + lambda.str());
  MeasuredWallspace r(w.part_count());
  for (const auto& f : w.families()) r.add_family(f.family, f.weight * lambda);
  return r;
}

const char* wall_class_name(WallClass c) {
  switch (c) {
    case WallClass::Cut: return "cut";
    case WallClass::Skim: return "skim";
    case WallClass::Disjoint: return "disjoint";
    case WallClass::Undetermined: return "undetermined";
  }
  return "?";
}

WallClass classify_wall(const MeasuredWallspace& w, std::size_t family, const WallRef& wall,
                        const std::vector<OrbitSample>& orbit) {
  if (orbit.empty()) fail(ErrorCode::EmptyOrbit, "orbit truncation is empty");
  if (family >= w.family_count()) fail(ErrorCode::InvalidArgument, "family index out of range");
  const auto& fam = *w.families()[family].family;
  std::int64_t reach = 0;
  for (const auto& s : orbit) reach = std::max<std::int64_t>(reach, std::llabs(s.k));
  std::optional<Side> tail[2];
  bool stable[2] = {true, true};
  bool seen[2] = {false, false};
  std::vector<Side> sides;
  sides.reserve(orbit.size());
  for (const auto& s : orbit) {
    Side sd = fam.side(wall, s.point);
    sides.push_back(sd);
    // Tail window: |k| in (reach/2, reach].
    if (2 * std::llabs(s.k) <= reach || s.k == 0) continue;
    int t = s.k > 0 ? 0 : 1;
    seen[t] = true;
    if (!tail[t])
      tail[t] = sd;
    else if (*tail[t] != sd)
      stable[t] = false;
  }
  if (!seen[0] || !seen[1] || !stable[0] || !stable[1]) return WallClass::Undetermined;
  if (*tail[0] != *tail[1]) return WallClass::Cut;
  for (Side sd : sides)
    if (sd != *tail[0]) return WallClass::Skim;
  return WallClass::Disjoint;
}

}  // namespace mwall
