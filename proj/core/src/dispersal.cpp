#include "mwall/dispersal.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mwall/errors.hpp"
#include "mwall/max_clique.hpp"

namespace mwall {

Action standard_action(const GroupModel& m) {
  if (m.kind() == GroupKind::FreeAbelian) {
    return [&m](const GroupElement& g, const Point& p) {
      IntVec v = m.to_vector(g);
      Point out = p;
      Coords& c = std::get<Coords>(out.at(0));
      if (c.size() != v.size()) fail(ErrorCode::InvalidArgument, "point rank does not match the group");
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) c[i] += Scalar(v[i]);
      return out;
    };
  }
  if (m.kind() == GroupKind::Free) {
    return [&m](const GroupElement& g, const Point& p) {
      Point out = p;
      out.at(0) = words::concat(m.to_word(g), word_of(p, 0));
      return out;
    };
  }
  fail(ErrorCode::InvalidArgument, "no standard action for this group model");
}

namespace {

Action resolve(const GroupModel& m, const Action& act) { return act ? act : standard_action(m); }

std::vector<Point> translate(const Action& act, const GroupElement& g, const std::vector<Point>& s) {
  std::vector<Point> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(act(g, p));
  return out;
}

std::vector<std::vector<Scalar>> distance_matrix(const MeasuredWallspace& w, const Action& act,
                                                 const std::vector<GroupElement>& reps,
                                                 const std::vector<Point>& orbit) {
  std::vector<std::vector<Point>> sets;
  for (const auto& g : reps) sets.push_back(translate(act, g, orbit));
  std::size_t n = reps.size();
  std::vector<std::vector<Scalar>> v(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v[i][j] = v[j][i] = w.set_distance(sets[i], sets[j]);
  return v;
}

std::vector<std::uint64_t> close_graph(const CosetDistanceTable& t, const std::vector<std::size_t>& subset,
                                       const Scalar& d) {
  std::vector<std::uint64_t> adj(subset.size(), 0);
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = 0; b < subset.size(); ++b)
      if (a != b && t.at(subset[a], subset[b]) <= d) adj[a] |= std::uint64_t{1} << b;
  return adj;
}

std::vector<std::size_t> clique_in(const CosetDistanceTable& t, const std::vector<std::size_t>& subset,
                                   const Scalar& d) {
  if (subset.size() > kMaxCliqueTable) fail(ErrorCode::TableTooLarge, "clique search is limited to 40 cosets");
  auto local = max_clique(close_graph(t, subset, d));
  std::vector<std::size_t> out;
  for (auto i : local) out.push_back(subset[i]);
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::size_t index_of(const std::vector<GroupElement>& reps, const GroupElement& g) {
  auto it = std::find(reps.begin(), reps.end(), g);
  if (it == reps.end()) fail(ErrorCode::UndecidableAtRadius, "coset representative missing from the table");
  return static_cast<std::size_t>(it - reps.begin());
}

// Index of the table row whose coset contains g.
std::size_t coset_row(const GroupModel& m, const Membership& mem, const std::vector<GroupElement>& reps,
                      const GroupElement& g) {
  GroupElement gi = m.invert(g);
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (mem.contains(m.multiply(gi, reps[i]))) return i;
  fail(ErrorCode::UndecidableAtRadius, "coset not present in the truncated table");
}

}  // namespace

std::vector<Point> truncated_orbit(const GroupModel& m, const Action& act, const SubgroupSpec& h, const Point& x,
                                   int k, std::size_t membership_budget) {
  Membership mem(m, h, membership_budget);
  std::vector<Point> out;
  for (const auto& g : ball(m, k))
    if (mem.contains(g)) out.push_back(act(g, x));
  return out;
}

CosetDistanceTable coset_distance_table(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& h,
                                        const Point& x, const TableOptions& options, const Action& act_in) {
  if (options.radius < 0 || options.truncation < 0)
    fail(ErrorCode::InvalidArgument, "radius and truncation must be nonnegative");
  Action act = resolve(m, act_in);
  CosetOptions co;
  co.ambient = options.ambient;
  co.membership_budget = options.membership_budget;
  CosetDistanceTable t;
  t.radius = options.radius;
  t.truncation = options.truncation;
  t.check_truncation = static_cast<int>(std::ceil(1.5 * options.truncation));
  t.representatives = coset_representatives(m, h, options.radius, co);
  t.values = distance_matrix(w, act, t.representatives,
                             truncated_orbit(m, act, h, x, t.truncation, options.membership_budget));
  auto check = distance_matrix(w, act, t.representatives,
                               truncated_orbit(m, act, h, x, t.check_truncation, options.membership_budget));
  t.stable = check == t.values;
  if (!t.stable && options.require_stable)
    fail(ErrorCode::UnstableTruncation, "coset distances changed when the orbit truncation grew");
  return t;
}

std::vector<std::size_t> close_clique(const CosetDistanceTable& t, const Scalar& d) {
  return clique_in(t, all_indices(t.size()), d);
}

DispersalProfile dispersal_profile(const CosetDistanceTable& t, const std::vector<Scalar>& grid) {
  if (t.size() > kMaxCliqueTable) fail(ErrorCode::TableTooLarge, "clique search is limited to 40 cosets");
  DispersalProfile p;
  for (const auto& d : grid) {
    std::size_t c = close_clique(t, d).size();
    p.grid.push_back(d);
    p.clique.push_back(c);
    p.n.push_back(c + 1);
  }
  return p;
}

Scalar finite_index_bound(const Scalar& big_k, std::int64_t r, std::int64_t dim) {
  if (big_k.sign() < 0 || r < 0 || dim < 0) fail(ErrorCode::InvalidArgument, "bound inputs must be nonnegative");
  return big_k + Scalar(2 * r * dim);
}

FiniteIndexReport check_finite_index_bound(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& h,
                                           const SubgroupSpec& finite_index, const Point& x, const Scalar& big_k,
                                           std::int64_t r, std::int64_t dim, const TableOptions& options,
                                           const Action& act_in) {
  Action act = resolve(m, act_in);
  FiniteIndexReport rep;
  rep.k = finite_index_bound(big_k, r, dim);
  SubgroupSpec inner = h.intersect(finite_index);
  TableOptions io = options;
  io.ambient = finite_index;
  auto small = coset_distance_table(w, m, inner, x, io, act);
  auto orbit = truncated_orbit(m, act, h, x, options.truncation, options.membership_budget);
  for (std::size_t a = 0; a < small.size(); ++a) {
    for (std::size_t b = a + 1; b < small.size(); ++b) {
      ++rep.pairs;
      if (!(small.at(a, b) > rep.k)) continue;
      ++rep.premises;
      Scalar big = w.set_distance(translate(act, small.representatives[a], orbit),
                                  translate(act, small.representatives[b], orbit));
      if (!(big > big_k)) ++rep.violations;
    }
  }
  rep.pass = rep.violations == 0;
  return rep;
}

TransitivityReport check_transitivity(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& g2,
                                      const SubgroupSpec& g3, const Point& x, const std::vector<Scalar>& grid,
                                      const TableOptions& options, const Action& act_in) {
  Action act = resolve(m, act_in);
  TransitivityReport rep;
  rep.grid = grid;
  TableOptions o1 = options;
  o1.ambient.reset();
  auto t31 = coset_distance_table(w, m, g3, x, o1, act);
  auto t21 = coset_distance_table(w, m, g2, x, o1, act);
  TableOptions o2 = options;
  o2.ambient = g2;
  auto t32_near = coset_distance_table(w, m, g3, x, o2, act);
  // Translating a G2 coset back into G2 can double word length.
  TableOptions o2wide = o2;
  o2wide.radius = 2 * options.radius;
  auto t32 = coset_distance_table(w, m, g3, x, o2wide, act);
  Membership mem2(m, g2, options.membership_budget);
  std::vector<std::size_t> g2_row;
  for (const auto& g : t31.representatives) g2_row.push_back(coset_row(m, mem2, t21.representatives, g));
  for (const auto& d : grid) {
    auto c31 = close_clique(t31, d);
    auto c21 = close_clique(t21, d).size();
    auto c32 = t32.size() <= kMaxCliqueTable ? close_clique(t32, d).size() : close_clique(t32_near, d).size();
    std::map<std::size_t, std::size_t> by_class;
    for (auto i : c31) ++by_class[g2_row[i]];
    std::size_t most = 0;
    for (const auto& [cls, cnt] : by_class) most = std::max(most, cnt);
    rep.clique31.push_back(c31.size());
    rep.clique21.push_back(c21);
    rep.clique32.push_back(c32);
    rep.classes.push_back(by_class.size());
    rep.per_class.push_back(most);
    if (by_class.size() > c21 || most > c32 || c31.size() > c21 * c32) rep.composition_holds = false;
    // The G2 cosets of G3 are among the G1 cosets of G3.
    std::vector<std::size_t> sub;
    for (const auto& g : t32_near.representatives) sub.push_back(index_of(t31.representatives, g));
    if (clique_in(t31, sub, d).size() != close_clique(t32_near, d).size() ||
        close_clique(t32_near, d).size() > c31.size())
      rep.converse_holds = false;
  }
  return rep;
}

IntersectionReport check_intersection(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& sub,
                                      const SubgroupSpec& h, const Point& x, const std::vector<Scalar>& grid,
                                      const TableOptions& options, const Action& act_in) {
  Action act = resolve(m, act_in);
  IntersectionReport rep;
  rep.grid = grid;
  SubgroupSpec inner = h.intersect(sub);
  TableOptions oi = options;
  oi.ambient = sub;
  auto tin = coset_distance_table(w, m, inner, x, oi, act);
  TableOptions oo = options;
  oo.ambient.reset();
  auto tout = coset_distance_table(w, m, h, x, oo, act);
  Membership memh(m, h, options.membership_budget);
  std::vector<std::size_t> row;
  for (const auto& g : tin.representatives) row.push_back(coset_row(m, memh, tout.representatives, g));
  for (std::size_t i = 0; i < row.size(); ++i)
    for (std::size_t j = i + 1; j < row.size(); ++j)
      if (row[i] == row[j]) rep.injective = false;
  for (const auto& d : grid) {
    std::size_t ci = close_clique(tin, d).size();
    std::size_t co = close_clique(tout, d).size();
    rep.clique_inner.push_back(ci);
    rep.clique_outer.push_back(co);
    if (ci > co) rep.bounded = false;
  }
  return rep;
}

namespace {

// Walls that split s nontrivially.
MeasurableParamSet partitioning(const WallFamily& f, const std::vector<Point>& s) {
  MeasurableParamSet out;
  for (std::size_t i = 1; i < s.size(); ++i) out = out.unite(f.separator_set(s.front(), s[i]));
  return out;
}

}  // namespace

OmegaDecomposition basepoint_decomposition(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& h,
                                           const GroupElement& g, const Point& x, const Point& y, int truncation,
                                           const Action& act_in) {
  if (!w.is_cubical()) fail(ErrorCode::NotCubeType, "basepoint decomposition needs a cubical wallspace");
  Action act = resolve(m, act_in);
  auto hx = truncated_orbit(m, act, h, x, truncation);
  auto hy = truncated_orbit(m, act, h, y, truncation);
  auto ghx = translate(act, g, hx);
  auto ghy = translate(act, g, hy);
  OmegaDecomposition r;
  for (const auto& wf : w.families()) {
    const WallFamily& f = *wf.family;
    MeasurableParamSet s = f.set_separator_set(hx, ghx);
    MeasurableParamSet o1 = s.intersect(f.set_separator_set(hy, ghy));
    MeasurableParamSet o3 = s.intersect(partitioning(f, hy).unite(partitioning(f, ghy)));
    MeasurableParamSet o2 = s.minus(o1).minus(o3);
    r.total += wf.weight * s.measure();
    r.omega1 += wf.weight * o1.measure();
    r.omega2 += wf.weight * o2.measure();
    r.omega3 += wf.weight * o3.measure();
  }
  r.omega2_bound = w.pseudometric(x, y) + w.pseudometric(act(g, x), act(g, y));
  bool first = true;
  for (const auto& p : hy) {
    std::optional<Scalar> best;
    for (const auto& q : hx) {
      Scalar d = w.pseudometric(p, q);
      if (!best || d < *best) best = d;
    }
    if (first || r.m < *best) r.m = *best;
    first = false;
  }
  r.partition_ok = r.omega1 + r.omega2 + r.omega3 == r.total;
  r.omega2_ok = r.omega2 <= r.omega2_bound;
  r.omega3_ok = r.omega3 <= Scalar(2) * r.m;
  return r;
}

}  // namespace mwall
