#include "mwall/cube.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "mwall/errors.hpp"

namespace mwall {

MeasuredWallspace standard_cubing(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cubing rank must be positive");
  MeasuredWallspace w(1);
  for (int i = 0; i < n; ++i) w.add_family(LinearFamily::axis(0, static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
  return w;
}

MeasuredWallspace line_wallspace() {
  MeasuredWallspace w(1);
  w.add_family(std::make_shared<LinearFamily>(0, std::vector<Scalar>{Scalar(1)}, "line"));
  return w;
}

MeasuredWallspace tree_wallspace(int rank) {
  if (rank < 1) fail(ErrorCode::InvalidArgument, "tree rank must be positive");
  MeasuredWallspace w(1);
  w.add_family(std::make_shared<TreeFamily>(0, rank));
  return w;
}

namespace {

Word ray_point(const TreeRay& r, std::size_t j) {
  Word w = r.base;
  for (std::size_t i = 0; i < j; ++i) w.push_back(r.period[i % r.period.size()]);
  return w;
}

// Nearest point of the ray to v and its distance.
std::pair<Word, std::int64_t> ray_nearest(const TreeRay& r, const Word& v) {
  Word best = r.base;
  std::int64_t best_d = words::tree_distance(r.base, v);
  if (r.period.empty()) return {best, best_d};
  std::int64_t prev = best_d;
  std::size_t cap = v.size() + r.base.size() + 2 * r.period.size() + 2;
  for (std::size_t j = 1; j <= cap; ++j) {
    Word p = ray_point(r, j);
    std::int64_t d = words::tree_distance(p, v);
    if (d < best_d) {
      best_d = d;
      best = p;
    }
    if (d > prev) break;
    prev = d;
  }
  return {best, best_d};
}

std::pair<Word, std::int64_t> subtree_nearest(const SubtreeHull& s, const Word& v) {
  bool have = false;
  Word best;
  std::int64_t best_d = 0;
  for (const auto& c : s.core) {
    auto d = words::tree_distance(c, v);
    if (!have || d < best_d) {
      best = c;
      best_d = d;
      have = true;
    }
  }
  for (const auto& r : s.rays) {
    auto [p, d] = ray_nearest(r, v);
    if (!have || d < best_d) {
      best = p;
      best_d = d;
      have = true;
    }
  }
  if (!have) fail(ErrorCode::InvalidArgument, "empty subtree hull");
  return {best, best_d};
}

void add_geodesic(std::set<Word>& out, const Word& p, const Word& q) {
  std::size_t k = words::common_prefix(p, q);
  for (std::size_t i = k; i <= p.size(); ++i) out.emplace(p.begin(), p.begin() + static_cast<long>(i));
  for (std::size_t i = k; i <= q.size(); ++i) out.emplace(q.begin(), q.begin() + static_cast<long>(i));
}

std::int64_t as_integer(const Scalar& s) {
  if (!s.is_integer()) fail(ErrorCode::InvalidArgument, "hull points must be lattice points");
  return s.to_int64();
}

}  // namespace

std::size_t CubeHull::dimension() const { return is_box() ? box().lo.size() : 1; }

Word subtree_projection(const SubtreeHull& s, const Word& v) { return subtree_nearest(s, v).first; }

std::int64_t CubeHull::distance_to(const Point& p) const {
  if (is_box()) {
    const auto& b = box();
    const Coords& c = coords_of(p, 0);
    if (c.size() != b.lo.size()) fail(ErrorCode::InvalidArgument, "point dimension does not match hull");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::int64_t x = as_integer(c[i]);
      if (b.lo[i] && x < *b.lo[i]) d += *b.lo[i] - x;
      if (b.hi[i] && x > *b.hi[i]) d += x - *b.hi[i];
    }
    return d;
  }
  const auto& s = subtree();
  auto d = subtree_nearest(s, word_of(p, 0)).second - s.radius;
  return std::max<std::int64_t>(0, d);
}

CubeHull hull(const std::vector<Point>& points, int tree_rank) {
  if (points.empty()) fail(ErrorCode::InvalidArgument, "hull of an empty set");
  if (std::holds_alternative<Coords>(points.front().at(0))) {
    std::size_t n = coords_of(points.front(), 0).size();
    BoxHull b;
    b.lo.assign(n, std::nullopt);
    b.hi.assign(n, std::nullopt);
    for (const auto& p : points) {
      const Coords& c = coords_of(p, 0);
      if (c.size() != n) fail(ErrorCode::InvalidArgument, "hull points have mixed dimensions");
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t x = as_integer(c[i]);
        if (!b.lo[i] || x < *b.lo[i]) b.lo[i] = x;
        if (!b.hi[i] || x > *b.hi[i]) b.hi[i] = x;
      }
    }
    return CubeHull(std::move(b));
  }
  SubtreeHull s;
  s.rank = tree_rank;
  const Word& p0 = word_of(points.front(), 0);
  s.core.insert(p0);
  for (const auto& p : points) add_geodesic(s.core, p0, word_of(p, 0));
  return CubeHull(std::move(s));
}

CubeHull orbit_hull(const GroupModel& m, const GroupElement& z, const Point& x) {
  if (z.is_identity()) fail(ErrorCode::InvalidArgument, "orbit hull of a trivial element");
  if (m.kind() == GroupKind::FreeAbelian) {
    IntVec zv = m.to_vector(z);
    const Coords& c = coords_of(x, 0);
    BoxHull b;
    for (std::size_t i = 0; i < zv.size(); ++i) {
      if (zv[i] != 0) {
        b.lo.push_back(std::nullopt);
        b.hi.push_back(std::nullopt);
      } else {
        b.lo.push_back(as_integer(c[i]));
        b.hi.push_back(as_integer(c[i]));
      }
    }
    return CubeHull(std::move(b));
  }
  if (m.kind() == GroupKind::Free) {
    auto split = words::cyclic_split(m.to_word(z));
    SubtreeHull s;
    s.rank = m.rank();
    s.rays.push_back({split.conjugator, split.core});
    s.rays.push_back({split.conjugator, words::inverse(split.core)});
    add_geodesic(s.core, word_of(x, 0), split.conjugator);
    return CubeHull(std::move(s));
  }
  fail(ErrorCode::NotCubeType, "orbit hulls need a free or free abelian group");
}

CubeHull thicken(const CubeHull& y, std::int64_t r) {
  if (r < 0) fail(ErrorCode::InvalidArgument, "thickening radius must be nonnegative");
  if (y.is_box()) {
    BoxHull b = y.box();
    for (auto& l : b.lo)
      if (l) *l -= r;
    for (auto& h : b.hi)
      if (h) *h += r;
    return CubeHull(std::move(b));
  }
  SubtreeHull s = y.subtree();
  s.radius += r;
  return CubeHull(std::move(s));
}

Scalar hull_separation(const MeasuredWallspace& w, const CubeHull& y1, const CubeHull& y2) {
  if (y1.is_box() != y2.is_box()) fail(ErrorCode::InvalidArgument, "hulls live in different spaces");
  if (y1.is_box()) {
    const auto& a = y1.box();
    const auto& b = y2.box();
    std::size_t n = a.lo.size();
    if (b.lo.size() != n || w.family_count() != n) fail(ErrorCode::NotCubeType, "expected the standard cubing of matching rank");
    Scalar total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto* lin = dynamic_cast<const LinearFamily*>(w.families()[i].family.get());
      if (!lin || lin->coefficients().size() != n || lin->coefficients()[i] != Scalar(1))
        fail(ErrorCode::NotCubeType, "expected coordinate wall families");
      std::int64_t gap = 0;
      if (a.hi[i] && b.lo[i] && *a.hi[i] < *b.lo[i]) gap = *b.lo[i] - *a.hi[i];
      if (b.hi[i] && a.lo[i] && *b.hi[i] < *a.lo[i]) gap = *a.lo[i] - *b.hi[i];
      total += w.families()[i].weight * Scalar(gap);
    }
    return total;
  }
  if (w.family_count() != 1 || !dynamic_cast<const TreeFamily*>(w.families()[0].family.get()))
    fail(ErrorCode::NotCubeType, "expected a tree wallspace");
  const auto& s1 = y1.subtree();
  const auto& s2 = y2.subtree();
  Word b0 = s2.core.empty() ? s2.rays.at(0).base : *s2.core.begin();
  Word p = subtree_nearest(s1, b0).first;
  auto [q, d] = subtree_nearest(s2, p);
  std::int64_t gap = std::max<std::int64_t>(0, d - s1.radius - s2.radius);
  return w.families()[0].weight * Scalar(gap);
}

IntVec DualComplex::quotient_of(const IntVec& g) const {
  IntVec out;
  for (const auto& row : quotient) {
    if (row.size() != g.size()) fail(ErrorCode::InvalidArgument, "vector rank mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += row[i] * g[i];
    out.push_back(s);
  }
  return out;
}

bool DualComplex::stabilizes_base(const IntVec& g) const {
  for (auto x : quotient_of(g))
    if (x != 0) return false;
  return true;
}

DualComplex dual_cube_complex(const DualComplexDescriptor& d) {
  const auto n = static_cast<std::size_t>(d.n);
  if (d.n < 1) fail(ErrorCode::InvalidArgument, "ambient rank must be positive");
  if (d.subgroup_basis.size() + d.complement.size() != n)
    fail(ErrorCode::RankDeficient, "subgroup basis and complement must have n vectors in total");
  IntMat columns;
  for (const auto& v : d.subgroup_basis) columns.push_back(v);
  for (const auto& v : d.complement) columns.push_back(v);
  for (const auto& v : columns)
    if (v.size() != n) fail(ErrorCode::InvalidArgument, "generator has wrong rank");
  // M has the generators as columns; rows of M^-1 give coordinates in that basis.
  IntMat m(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = columns[j][i];
  auto inv = inverse(m);
  if (!inv) fail(ErrorCode::RankDeficient, "complement does not complete the subgroup to finite index");
  DualComplex out;
  std::size_t k = d.subgroup_basis.size();
  for (std::size_t j = k; j < n; ++j) {
    const auto& row = (*inv)[j];
    // Clear denominators, then divide by the content to get a primitive functional.
    boost::multiprecision::cpp_int l = 1;
    for (const auto& x : row) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x.to_big()));
    IntVec ints;
    for (const auto& x : row) ints.push_back((x * Scalar(Scalar::Big(l))).to_int64());
    std::int64_t g = 0;
    for (auto x : ints) g = std::gcd(g, std::llabs(x));
    for (auto& x : ints) x /= g;
    out.quotient.push_back(ints);
    std::vector<Scalar> coeffs(ints.begin(), ints.end());
    out.wallspace.add_family(std::make_shared<LinearFamily>(0, coeffs, "dual" + std::to_string(j - k + 1)));
  }
  if (out.quotient.empty()) {
    out.single_orbit = true;
  } else {
    IntMat images;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      images.push_back(out.quotient_of(e));
    }
    Lattice image(out.quotient.size(), images);
    out.single_orbit = image.index() == std::optional<std::int64_t>(1);
  }
  return out;
}

}  // namespace mwall
