#include "mwall/families.hpp"

#include <algorithm>

#include "mwall/errors.hpp"

namespace mwall {

LinearFamily::LinearFamily(std::size_t part, std::vector<Scalar> coefficients, std::string name)
    : WallFamily(part), coeffs_(std::move(coefficients)), name_(std::move(name)) {
  std::size_t nonzero = 0, last = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) {
      ++nonzero;
      last = i;
    }
  }
  if (nonzero == 0) fail(ErrorCode::InvalidArgument, "linear family needs a nonzero functional");
  if (nonzero == 1 && coeffs_[last] == Scalar(1)) axis_ = last;
}

std::shared_ptr<LinearFamily> LinearFamily::axis(std::size_t part, std::size_t dim, std::size_t index) {
  std::vector<Scalar> c(dim, Scalar(0));
  c.at(index) = 1;
  return std::make_shared<LinearFamily>(part, std::move(c), "axis" + std::to_string(index + 1));
}

Scalar LinearFamily::coordinate(const Point& p) const {
  const Coords& x = coords_of(p, part());
  if (x.size() != coeffs_.size()) fail(ErrorCode::InvalidArgument, "point dimension does not match wall family");
  if (axis_) return x[*axis_];
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!coeffs_[i].is_zero()) s += coeffs_[i] * x[i];
  return s;
}

FamilyPtr LinearFamily::relocated(std::size_t part) const {
  auto f = std::make_shared<LinearFamily>(part, coeffs_, name_);
  f->period_ = period_;
  return f;
}

MeasurableParamSet LinearFamily::separator_set(const Point& p, const Point& q) const {
  Scalar a = coordinate(p), b = coordinate(q);
  return MeasurableParamSet(a < b ? IntervalSet::of(a, b) : IntervalSet::of(b, a));
}

Scalar LinearFamily::separation(const Point& p, const Point& q) const { return abs(coordinate(p) - coordinate(q)); }

Side LinearFamily::side(const WallRef& wall, const Point& p) const {
  return wall.t >= coordinate(p) ? Side::Left : Side::Right;
}

MeasurableParamSet LinearFamily::set_separator_set(const std::vector<Point>& a, const std::vector<Point>& b) const {
  if (a.empty() || b.empty()) fail(ErrorCode::InvalidArgument, "set separators need nonempty sets");
  auto range = [&](const std::vector<Point>& s) {
    Scalar lo = coordinate(s.front()), hi = lo;
    for (std::size_t i = 1; i < s.size(); ++i) {
      Scalar c = coordinate(s[i]);
      if (c < lo) lo = c;
      if (hi < c) hi = c;
    }
    return std::make_pair(lo, hi);
  };
  auto [alo, ahi] = range(a);
  auto [blo, bhi] = range(b);
  if (ahi < blo) return MeasurableParamSet(IntervalSet::of(ahi, blo));
  if (bhi < alo) return MeasurableParamSet(IntervalSet::of(bhi, alo));
  return {};
}

ChartFamily::ChartFamily(std::size_t part, Coordinate coordinate, std::string name, std::optional<Scalar> period)
    : WallFamily(part), coord_(std::move(coordinate)), name_(std::move(name)), period_(std::move(period)) {}

FamilyPtr ChartFamily::relocated(std::size_t part) const {
  return std::make_shared<ChartFamily>(part, coord_, name_, period_);
}

MeasurableParamSet ChartFamily::separator_set(const Point& p, const Point& q) const {
  Scalar a = coordinate(p), b = coordinate(q);
  return MeasurableParamSet(a < b ? IntervalSet::of(a, b) : IntervalSet::of(b, a));
}

Side ChartFamily::side(const WallRef& wall, const Point& p) const {
  return wall.t >= coordinate(p) ? Side::Left : Side::Right;
}

AtomKey TreeFamily::edge_key(const Word& from, int gen) {
  AtomKey k;
  k.reserve(from.size() + 1);
  k.push_back(gen);
  for (Letter l : from) k.push_back(l);
  return k;
}

AtomKey TreeFamily::edge_between(const Word& u, const Word& v) {
  if (v.size() == u.size() + 1 && std::equal(u.begin(), u.end(), v.begin())) {
    Letter l = v.back();
    return l > 0 ? edge_key(u, l - 1) : edge_key(v, -l - 1);
  }
  if (u.size() == v.size() + 1 && std::equal(v.begin(), v.end(), u.begin())) return edge_between(v, u);
  fail(ErrorCode::InvalidArgument, "tree vertices " + words::format(u) + " and " + words::format(v) + " are not adjacent");
}

std::pair<Word, Word> TreeFamily::edge_ends(const AtomKey& key) {
  Word from(key.begin() + 1, key.end());
  Word to = words::concat(from, Word{static_cast<Letter>(key.front() + 1)});
  return {from, to};
}

FamilyPtr TreeFamily::relocated(std::size_t part) const { return std::make_shared<TreeFamily>(part, rank_); }

std::vector<AtomKey> TreeFamily::path_edges(const Word& p, const Word& q) {
  std::vector<AtomKey> out;
  std::size_t k = words::common_prefix(p, q);
  for (std::size_t i = p.size(); i > k; --i) {
    Word hi(p.begin(), p.begin() + static_cast<long>(i));
    Word lo(p.begin(), p.begin() + static_cast<long>(i - 1));
    out.push_back(edge_between(hi, lo));
  }
  for (std::size_t i = k + 1; i <= q.size(); ++i) {
    Word lo(q.begin(), q.begin() + static_cast<long>(i - 1));
    Word hi(q.begin(), q.begin() + static_cast<long>(i));
    out.push_back(edge_between(lo, hi));
  }
  return out;
}

MeasurableParamSet TreeFamily::separator_set(const Point& p, const Point& q) const {
  MeasurableParamSet s;
  for (auto& key : path_edges(word_of(p, part()), word_of(q, part()))) s.add_atom(key, 1);
  return s;
}

Scalar TreeFamily::separation(const Point& p, const Point& q) const {
  return Scalar(words::tree_distance(word_of(p, part()), word_of(q, part())));
}

Side TreeFamily::side(const WallRef& wall, const Point& p) const {
  if (!wall.atom || wall.atom->empty()) fail(ErrorCode::InvalidArgument, "tree walls are atoms");
  Word from(wall.atom->begin() + 1, wall.atom->end());
  Word rel = words::concat(words::inverse(from), word_of(p, part()));
  return (!rel.empty() && rel.front() == wall.atom->front() + 1) ? Side::Right : Side::Left;
}

}  // namespace mwall
