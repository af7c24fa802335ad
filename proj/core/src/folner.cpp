#include "mwall/folner.hpp"

#include <cstdlib>

#include "mwall/errors.hpp"

namespace mwall {

FolnerSchedule default_folner_schedule(int rank, int terms) {
  if (rank < 1 || terms < 0) fail(ErrorCode::InvalidArgument, "bad Folner schedule parameters");
  FolnerSchedule s;
  for (int k = 1; k <= terms; ++k) {
    std::int64_t h = static_cast<std::int64_t>(k) << k;
    Scalar size = 1;
    for (int i = 0; i < rank; ++i) size *= Scalar(2 * h + 1);
    s.half_widths.push_back(h);
    s.weights.push_back(Scalar(k) / size);
  }
  return s;
}

FolnerFamily::FolnerFamily(std::size_t part, int rank, FolnerSchedule schedule)
    : WallFamily(part), rank_(rank), schedule_(std::move(schedule)) {
  if (schedule_.half_widths.size() != schedule_.weights.size())
    fail(ErrorCode::InvalidArgument, "schedule lists differ in length");
  for (std::size_t k = 0; k < schedule_.weights.size(); ++k) {
    if (schedule_.half_widths[k] < 0) fail(ErrorCode::InvalidArgument, "negative box half-width");
    if (schedule_.weights[k].sign() <= 0) fail(ErrorCode::NonpositiveScale, "Folner weights must be positive");
  }
}

IntVec FolnerFamily::lattice_coords(const Point& p) const {
  const Coords& c = coords_of(p, part());
  if (c.size() != static_cast<std::size_t>(rank_)) fail(ErrorCode::InvalidArgument, "point rank mismatch");
  IntVec v;
  for (const auto& x : c) v.push_back(x.to_int64());
  return v;
}

FamilyPtr FolnerFamily::relocated(std::size_t part) const {
  return std::make_shared<FolnerFamily>(part, rank_, schedule_);
}

Scalar FolnerFamily::separation(const Point& p, const Point& q) const {
  IntVec d = sub(lattice_coords(q), lattice_coords(p));
  Scalar total = 0;
  for (std::size_t k = 0; k < schedule_.weights.size(); ++k) {
    std::int64_t side = 2 * schedule_.half_widths[k] + 1;
    Scalar size = 1, overlap = 1;
    for (auto di : d) {
      size *= Scalar(side);
      overlap *= Scalar(std::max<std::int64_t>(0, side - std::llabs(di)));
    }
    Scalar count = Scalar(2) * (size - overlap);
    if (!count.is_zero()) total += schedule_.weights[k] * count;
  }
  return total;
}

MeasurableParamSet FolnerFamily::separator_set(const Point& p, const Point& q) const {
  IntVec x = lattice_coords(p), y = lattice_coords(q);
  MeasurableParamSet s;
  if (x == y) return s;
  std::size_t budget = kMaterializeLimit;
  for (std::size_t k = 0; k < schedule_.weights.size(); ++k) {
    std::int64_t h = schedule_.half_widths[k];
    IntVec lo(x.size()), hi(x.size());
    Scalar cells = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      lo[i] = std::min(x[i], y[i]) - h;
      hi[i] = std::max(x[i], y[i]) + h;
      cells *= Scalar(hi[i] - lo[i] + 1);
    }
    if (cells > Scalar(static_cast<std::int64_t>(budget)))
      fail(ErrorCode::InvalidArgument, "Folner separator set too large to list; use separation()");
    IntVec g = lo;
    while (true) {
      bool in_x = true, in_y = true;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (std::llabs(x[i] - g[i]) > h) in_x = false;
        if (std::llabs(y[i] - g[i]) > h) in_y = false;
      }
      if (in_x != in_y) {
        AtomKey key{static_cast<std::int64_t>(k + 1)};
        key.insert(key.end(), g.begin(), g.end());
        s.add_atom(key, schedule_.weights[k]);
      }
      std::size_t i = 0;
      while (i < g.size() && g[i] == hi[i]) {
        g[i] = lo[i];
        ++i;
      }
      if (i == g.size()) break;
      ++g[i];
    }
    budget -= static_cast<std::size_t>(cells.to_int64());
  }
  return s;
}

Side FolnerFamily::side(const WallRef& wall, const Point& p) const {
  if (!wall.atom || wall.atom->size() != static_cast<std::size_t>(rank_) + 1)
    fail(ErrorCode::InvalidArgument, "Folner walls are atoms {k, g...}");
  auto k = static_cast<std::size_t>(wall.atom->front() - 1);
  if (k >= schedule_.half_widths.size()) fail(ErrorCode::InvalidArgument, "Folner level out of range");
  IntVec x = lattice_coords(p);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::llabs(x[i] - (*wall.atom)[i + 1]) > schedule_.half_widths[k]) return Side::Left;
  return Side::Right;
}

MeasuredWallspace folner_wallspace(int rank, const FolnerSchedule& schedule) {
  MeasuredWallspace w(1);
  w.add_family(std::make_shared<FolnerFamily>(0, rank, schedule));
  return w;
}

}  // namespace mwall
