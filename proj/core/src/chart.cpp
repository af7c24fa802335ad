#include "mwall/chart.hpp"

#include "mwall/errors.hpp"
#include "mwall/families.hpp"

namespace mwall {

namespace {

std::int64_t floor_int(const Scalar& s) { return floor(s).to_int64(); }

Word tree_geodesic_step(const Word& from, const Word& to) {
  std::size_t k = words::common_prefix(from, to);
  if (from.size() > k) return Word(from.begin(), from.end() - 1);
  return Word(to.begin(), to.begin() + static_cast<long>(from.size() + 1));
}

}  // namespace

CuttingChart::CuttingChart(const MeasuredWallspace& w, const GroupModel& m, const GroupElement& z,
                           const Point& basepoint)
    : family_count_(w.family_count()) {
  if (z.is_identity()) fail(ErrorCode::InvalidArgument, "cutting chart of a trivial element");
  for (std::size_t f = 0; f < w.family_count(); ++f) {
    const auto& wf = w.families()[f];
    Slot slot;
    slot.family = f;
    if (const auto* lin = dynamic_cast<const LinearFamily*>(wf.family.get())) {
      if (m.kind() != GroupKind::FreeAbelian) fail(ErrorCode::NotCubeType, "linear walls need a free abelian vertex");
      IntVec zv = m.to_vector(z);
      const auto& c = lin->coefficients();
      Scalar delta = 0;
      for (std::size_t i = 0; i < c.size(); ++i) delta += c[i] * Scalar(zv.at(i));
      if (delta.is_zero()) continue;
      slot.lin = {lin->coordinate(basepoint), delta, wf.weight};
      slot.width = wf.weight * abs(delta);
    } else if (dynamic_cast<const TreeFamily*>(wf.family.get())) {
      if (m.kind() != GroupKind::Free) fail(ErrorCode::NotCubeType, "tree walls need a free vertex");
      slot.tree = true;
      slot.tr.weight = wf.weight;
      slot.tr.z = m.to_word(z);
      Word x = word_of(basepoint, wf.family->part());
      Word zx = words::concat(slot.tr.z, x);
      slot.tr.path.push_back(x);
      while (slot.tr.path.back() != zx) slot.tr.path.push_back(tree_geodesic_step(slot.tr.path.back(), zx));
      std::size_t len = slot.tr.path.size() - 1;
      if (len != words::cyclic_split(slot.tr.z).core.size())
        fail(ErrorCode::InvalidArgument, "tree basepoint is not on the axis of the edge generator");
      for (std::size_t j = 0; j < slot.tr.path.size(); ++j) slot.tr.index.emplace(slot.tr.path[j], j);
      slot.width = wf.weight * Scalar(static_cast<std::int64_t>(len));
    } else {
      fail(ErrorCode::NotCubeType, "family '" + wf.family->name() + "' cannot be charted");
    }
    slot.offset = period_;
    period_ += slot.width;
    slots_.push_back(std::move(slot));
  }
  if (period_.is_zero()) fail(ErrorCode::InvalidArgument, "no wall family cuts the edge orbit");
}

bool CuttingChart::glues(std::size_t family) const {
  for (const auto& s : slots_)
    if (s.family == family) return true;
  return false;
}

std::optional<CuttingChart::AxisPos> CuttingChart::locate(const Tree& t, const AtomKey& key) const {
  auto [a, b] = TreeFamily::edge_ends(key);
  std::int64_t reach = static_cast<std::int64_t>(b.size() + t.path.front().size() + t.path.size()) + 2;
  Word zi = words::inverse(t.z);
  Word za = a, zb = b;  // z^-k a, z^-k b for k = 0, then walk both ways
  auto probe = [&](const Word& pa, const Word& pb, std::int64_t k) -> std::optional<AxisPos> {
    auto ia = t.index.find(pa), ib = t.index.find(pb);
    if (ia == t.index.end() || ib == t.index.end()) return std::nullopt;
    if (ib->second == ia->second + 1) return AxisPos{k, ia->second, true};
    if (ia->second == ib->second + 1) return AxisPos{k, ib->second, false};
    return std::nullopt;
  };
  if (auto p = probe(za, zb, 0)) return p;
  Word pa = a, pb = b, na = a, nb = b;
  for (std::int64_t k = 1; k <= reach; ++k) {
    pa = words::concat(zi, pa);
    pb = words::concat(zi, pb);
    if (auto p = probe(pa, pb, k)) return p;
    na = words::concat(t.z, na);
    nb = words::concat(t.z, nb);
    if (auto p = probe(na, nb, -k)) return p;
  }
  return std::nullopt;
}

std::vector<MeasurableParamSet> CuttingChart::glued_part(const std::vector<MeasurableParamSet>& sets) const {
  if (sets.size() != family_count_) fail(ErrorCode::InvalidArgument, "one wall set per family expected");
  std::vector<MeasurableParamSet> out(family_count_);
  for (const auto& s : slots_) {
    const auto& in = sets[s.family];
    if (!s.tree) {
      out[s.family] = MeasurableParamSet(in.line());
      continue;
    }
    for (const auto& [key, part] : in.atoms())
      if (locate(s.tr, key)) out[s.family].add_atom(key, part.weight, part.fraction);
  }
  return out;
}

IntervalSet CuttingChart::to_chart(const std::vector<MeasurableParamSet>& sets) const {
  if (sets.size() != family_count_) fail(ErrorCode::InvalidArgument, "one wall set per family expected");
  IntervalSet out;
  for (const auto& s : slots_) {
    const auto& in = sets[s.family];
    if (!s.tree) {
      const auto& l = s.lin;
      Scalar a = l.delta.sign() > 0 ? l.weight : Scalar(0) - l.weight;
      for (const auto& piece : in.line().pieces()) {
        Scalar u0 = (piece.lo - l.base) / l.delta, u1 = (piece.hi - l.base) / l.delta;
        std::int64_t k0 = floor_int(min(u0, u1)), k1 = floor_int(max(u0, u1));
        for (std::int64_t k = k0; k <= k1; ++k) {
          Scalar e0 = l.base + l.delta * Scalar(k), e1 = l.base + l.delta * Scalar(k + 1);
          IntervalSet window = IntervalSet::of(min(e0, e1), max(e0, e1));
          IntervalSet part = IntervalSet::of(piece.lo, piece.hi).intersect(window);
          if (part.empty()) continue;
          Scalar b = Scalar(0) - a * l.base + Scalar(k) * (period_ - s.width) + s.offset;
          out = out.unite(part.affine_image(a, b));
        }
      }
      continue;
    }
    for (const auto& [key, part] : in.atoms()) {
      auto pos = locate(s.tr, key);
      if (!pos) continue;
      Scalar w = s.tr.weight * part.weight;
      Scalar start = Scalar(pos->k) * period_ + s.offset + Scalar(static_cast<std::int64_t>(pos->j)) * s.tr.weight;
      out = out.unite(pos->forward ? part.fraction.affine_image(w, start)
                                   : part.fraction.affine_image(Scalar(0) - w, start + w));
    }
  }
  return out;
}

std::vector<MeasurableParamSet> CuttingChart::from_chart(const IntervalSet& set) const {
  std::vector<MeasurableParamSet> out(family_count_);
  if (set.empty()) return out;
  std::int64_t k0 = floor_int(set.pieces().front().lo / period_);
  std::int64_t k1 = floor_int(set.pieces().back().hi / period_);
  for (const auto& s : slots_) {
    for (std::int64_t k = k0; k <= k1; ++k) {
      Scalar origin = Scalar(k) * period_ + s.offset;
      if (!s.tree) {
        IntervalSet part = set.intersect(IntervalSet::of(origin, origin + s.width));
        if (part.empty()) continue;
        const auto& l = s.lin;
        Scalar a = l.delta.sign() > 0 ? l.weight : Scalar(0) - l.weight;
        Scalar b = Scalar(0) - a * l.base + Scalar(k) * (period_ - s.width) + s.offset;
        out[s.family].line() = out[s.family].line().unite(part.affine_image(Scalar(1) / a, Scalar(0) - b / a));
        continue;
      }
      Word zk = words::power(s.tr.z, static_cast<long>(k));
      const Scalar& w = s.tr.weight;
      for (std::size_t j = 0; j + 1 < s.tr.path.size(); ++j) {
        Scalar start = origin + Scalar(static_cast<std::int64_t>(j)) * w;
        IntervalSet part = set.intersect(IntervalSet::of(start, start + w));
        if (part.empty()) continue;
        Word from = words::concat(zk, s.tr.path[j]);
        Word to = words::concat(zk, s.tr.path[j + 1]);
        AtomKey key = TreeFamily::edge_between(from, to);
        bool forward = TreeFamily::edge_ends(key).first == from;
        IntervalSet frac = forward ? part.affine_image(Scalar(1) / w, Scalar(0) - start / w)
                                   : part.affine_image(Scalar(-1) / w, Scalar(1) + start / w);
        out[s.family].add_atom(key, 1, frac);
      }
    }
  }
  return out;
}

}  // namespace mwall
