#include "mwall/param_set.hpp"

#include <algorithm>
#include <sstream>

#include "mwall/errors.hpp"

namespace mwall {

IntervalSet IntervalSet::of(Scalar lo, Scalar hi) {
  IntervalSet s;
  if (lo < hi) s.pieces_.push_back({std::move(lo), std::move(hi)});
  return s;
}

IntervalSet IntervalSet::from_list(std::vector<Interval> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet s;
  for (auto& p : pieces) {
    if (!(p.lo < p.hi)) continue;
    if (!s.pieces_.empty() && p.lo <= s.pieces_.back().hi) {
      if (s.pieces_.back().hi < p.hi) s.pieces_.back().hi = p.hi;
    } else {
      s.pieces_.push_back(std::move(p));
    }
  }
  return s;
}

Scalar IntervalSet::measure() const {
  Scalar m = 0;
  for (const auto& p : pieces_) m += p.hi - p.lo;
  return m;
}

bool IntervalSet::contains(const Scalar& t) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t, [](const Scalar& v, const Interval& p) { return v < p.lo; });
  if (it == pieces_.begin()) return false;
  --it;
  return t < it->hi;
}

template <class Op>
IntervalSet IntervalSet::combine(const IntervalSet& o, Op op) const {
  std::vector<Scalar> cuts;
  cuts.reserve(2 * (pieces_.size() + o.pieces_.size()));
  for (const auto& p : pieces_) {
    cuts.push_back(p.lo);
    cuts.push_back(p.hi);
  }
  for (const auto& p : o.pieces_) {
    cuts.push_back(p.lo);
    cuts.push_back(p.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const Scalar& a = cuts[c];
    while (i < pieces_.size() && pieces_[i].hi <= a) ++i;
    while (j < o.pieces_.size() && o.pieces_[j].hi <= a) ++j;
    bool in_a = i < pieces_.size() && pieces_[i].lo <= a;
    bool in_b = j < o.pieces_.size() && o.pieces_[j].lo <= a;
    if (!op(in_a, in_b)) continue;
    if (!out.empty() && out.back().hi == a)
      out.back().hi = cuts[c + 1];
    else
      out.push_back({a, cuts[c + 1]});
  }
  IntervalSet s;
  s.pieces_ = std::move(out);
  return s;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  return combine(o, [](bool a, bool b) { return a || b; });
}
IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  return combine(o, [](bool a, bool b) { return a && b; });
}
IntervalSet IntervalSet::minus(const IntervalSet& o) const {
  return combine(o, [](bool a, bool b) { return a && !b; });
}
IntervalSet IntervalSet::symmetric_difference(const IntervalSet& o) const {
  return combine(o, [](bool a, bool b) { return a != b; });
}

IntervalSet IntervalSet::shifted(const Scalar& by) const {
  IntervalSet s = *this;
  for (auto& p : s.pieces_) {
    p.lo += by;
    p.hi += by;
  }
  return s;
}

IntervalSet IntervalSet::affine_image(const Scalar& a, const Scalar& b) const {
  if (a.is_zero()) fail(ErrorCode::InvalidArgument, "affine map with zero slope");
  std::vector<Interval> out;
  for (const auto& p : pieces_) {
    Scalar x = a * p.lo + b, y = a * p.hi + b;
    if (a.sign() > 0)
      out.push_back({x, y});
    else
      out.push_back({y, x});
  }
  return from_list(std::move(out));
}

std::string IntervalSet::str() const {
  if (pieces_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    os << (i ? " u " : "") << "[" << pieces_[i].lo << "," << pieces_[i].hi << ")";
  return os.str();
}

void MeasurableParamSet::add_atom(const AtomKey& key, const Scalar& weight, const IntervalSet& fraction) {
  if (fraction.empty()) return;
  auto it = atoms_.find(key);
  if (it == atoms_.end()) {
    atoms_.emplace(key, AtomPart{weight, fraction});
    return;
  }
  if (it->second.weight != weight) fail(ErrorCode::InvalidArgument, "atom weight mismatch");
  it->second.fraction = it->second.fraction.unite(fraction);
}

Scalar MeasurableParamSet::measure() const {
  Scalar m = line_.measure();
  for (const auto& [k, a] : atoms_) m += a.weight * a.fraction.measure();
  return m;
}

template <class Op>
MeasurableParamSet MeasurableParamSet::combine(const MeasurableParamSet& o, Op op) const {
  MeasurableParamSet r;
  r.line_ = op(line_, o.line_);
  auto i = atoms_.begin();
  auto j = o.atoms_.begin();
  const IntervalSet none;
  auto emit = [&](const AtomKey& k, const Scalar& w, const IntervalSet& f) {
    if (!f.empty()) r.atoms_.emplace(k, AtomPart{w, f});
  };
  while (i != atoms_.end() || j != o.atoms_.end()) {
    if (j == o.atoms_.end() || (i != atoms_.end() && i->first < j->first)) {
      emit(i->first, i->second.weight, op(i->second.fraction, none));
      ++i;
    } else if (i == atoms_.end() || j->first < i->first) {
      emit(j->first, j->second.weight, op(none, j->second.fraction));
      ++j;
    } else {
      if (i->second.weight != j->second.weight) fail(ErrorCode::InvalidArgument, "atom weight mismatch");
      emit(i->first, i->second.weight, op(i->second.fraction, j->second.fraction));
      ++i;
      ++j;
    }
  }
  return r;
}

MeasurableParamSet MeasurableParamSet::unite(const MeasurableParamSet& o) const {
  return combine(o, [](const IntervalSet& a, const IntervalSet& b) { return a.unite(b); });
}
MeasurableParamSet MeasurableParamSet::intersect(const MeasurableParamSet& o) const {
  return combine(o, [](const IntervalSet& a, const IntervalSet& b) { return a.intersect(b); });
}
MeasurableParamSet MeasurableParamSet::minus(const MeasurableParamSet& o) const {
  return combine(o, [](const IntervalSet& a, const IntervalSet& b) { return a.minus(b); });
}
MeasurableParamSet MeasurableParamSet::symmetric_difference(const MeasurableParamSet& o) const {
  return combine(o, [](const IntervalSet& a, const IntervalSet& b) { return a.symmetric_difference(b); });
}

std::string MeasurableParamSet::str() const {
  std::ostringstream os;
  os << line_.str();
  for (const auto& [k, a] : atoms_) {
    os << " + atom(";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ")*" << a.weight << " on " << a.fraction.str();
  }
  return os.str();
}

}  // namespace mwall
